#include <catch2/catch_amalgamated.hpp>

#include "skewav/rational_fn.hpp"

using namespace skewav;

namespace {

Polynomial poly(std::vector<long long> values) {
    std::vector<Rational> c;
    for (const long long v : values) c.emplace_back(v);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("polynomial division identity") {
    const Polynomial a = poly({3, 0, -2, 5, 1});
    const Polynomial b = poly({1, 2, 1});
    const auto [q, r] = divmod(a, b);
    REQUIRE(q * b + r == a);
    REQUIRE(r.degree() < b.degree());
}

TEST_CASE("monic gcd of polynomials with a shared factor") {
    const Polynomial common = poly({-1, 1});            // z - 1
    const Polynomial a = common * poly({2, 1});         // (z-1)(z+2)
    const Polynomial b = common * poly({5, 0, 1});      // (z-1)(z^2+5)
    REQUIRE(gcd(a, b) == poly({-1, 1}));
}

TEST_CASE("square-free part drops multiplicities") {
    const Polynomial sq = poly({1, -1}) * poly({1, -1}) * poly({1, -2});
    const Polynomial sf = square_free_part(sq);
    REQUIRE(sf.degree() == 2);
    REQUIRE(sf.eval(Rational(1)) == 0);
    REQUIRE(sf.eval(Rational(1, 2)) == 0);
}

TEST_CASE("rational functions reduce to lowest terms and normalize den(0) to 1") {
    // (z - z^3) / (1 - z) = z + z^2 after cancellation
    const RationalFunction g{poly({0, 1, 0, -1}), poly({1, -1})};
    REQUIRE(g.is_polynomial());
    REQUIRE(g.num() == poly({0, 1, 1}));
    REQUIRE(g.den().degree() == 0);
    REQUIRE(g.den().coeff(0) == 1);
}

TEST_CASE("denominator vanishing at 0 is rejected") {
    REQUIRE_THROWS_AS(RationalFunction(poly({1}), poly({0, 1})), std::invalid_argument);
    REQUIRE_THROWS_AS(RationalFunction(poly({1}), poly({})), std::invalid_argument);
}

TEST_CASE("maclaurin expansion of z/(1-z)") {
    const RationalFunction g{poly({0, 1}), poly({1, -1})};
    REQUIRE(g.maclaurin(4) == std::vector<Rational>{0, 1, 1, 1, 1});
}

TEST_CASE("evaluation at a pole is a domain error") {
    const RationalFunction g{poly({0, 1}), poly({1, -1})};
    REQUIRE_THROWS_AS(g.eval(Rational(1)), std::domain_error);
    REQUIRE(g.eval(Rational(1, 2)) == 1);
}

TEST_CASE("z/(1-z) is supercritical with a pole at 1") {
    const SupercriticalVerdict v = rational_supercritical(RationalFunction{poly({0, 1}), poly({1, -1})});
    REQUIRE(v.status == Supercriticality::supercritical);
    REQUIRE(v.pole_interval.has_value());
    const auto [lo, hi] = *v.pole_interval;
    REQUIRE(lo < 1);
    REQUIRE(hi >= 1);
    REQUIRE(hi - lo < Rational(1, 1000000000));
    REQUIRE(v.witness_z0.has_value());
    REQUIRE(*v.witness_z0 < 1);
    REQUIRE(*v.witness_value > 1);
}

TEST_CASE("a nonzero polynomial is supercritical") {
    const SupercriticalVerdict v = rational_supercritical(RationalFunction{poly({0, 2}), poly({1})});
    REQUIRE(v.status == Supercriticality::supercritical);
    REQUIRE(*v.witness_value > 1);
}

TEST_CASE("the zero series is not supercritical") {
    const SupercriticalVerdict v = rational_supercritical(RationalFunction{poly({}), poly({1, -1})});
    REQUIRE(v.status == Supercriticality::not_supercritical);
}

TEST_CASE("G(0) != 0 is rejected") {
    REQUIRE_THROWS_AS(rational_supercritical(RationalFunction{poly({1, 1}), poly({1})}),
                      std::invalid_argument);
}

TEST_CASE("a negative Maclaurin coefficient is rejected as not a counting series") {
    // z/(1+z) = z - z^2 + z^3 - ...
    REQUIRE_THROWS_WITH(rational_supercritical(RationalFunction{poly({0, 1}), poly({1, 1})}),
                        Catch::Matchers::ContainsSubstring("not a counting series"));
}

TEST_CASE("a double pole is still found through the square-free part") {
    // z/(1-z)^2 = sum n z^n
    const SupercriticalVerdict v =
        rational_supercritical(RationalFunction{poly({0, 1}), poly({1, -2, 1})});
    REQUIRE(v.status == Supercriticality::supercritical);
    REQUIRE(v.pole_interval->first < 1);
    REQUIRE(v.pole_interval->second >= 1);
}

TEST_CASE("the smallest positive pole is selected") {
    // denominator (1-z)(1-3z): poles at 1 and 1/3
    const SupercriticalVerdict v =
        rational_supercritical(RationalFunction{poly({0, 1}), poly({1, -4, 3})});
    REQUIRE(v.status == Supercriticality::supercritical);
    REQUIRE(v.pole_interval->first < Rational(1, 3));
    REQUIRE(v.pole_interval->second >= Rational(1, 3));
    REQUIRE(v.pole_interval->second < Rational(1, 2));
    REQUIRE(*v.witness_z0 < Rational(1, 3));
    REQUIRE(*v.witness_value > 1);
}

TEST_CASE("no positive real pole yields an inconclusive verdict") {
    // 1 - 2z + (501/500) z^2 has only complex roots, and the expansion of
    // z / (1 - 2z + (501/500) z^2) stays positive beyond the checked order.
    const Polynomial den{{Rational(1), Rational(-2), Rational(501, 500)}};
    const SupercriticalVerdict v = rational_supercritical(RationalFunction{poly({0, 1}), den});
    REQUIRE(v.status == Supercriticality::inconclusive);
}
