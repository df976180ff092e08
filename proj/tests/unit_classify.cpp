#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "skewav/classify.hpp"

using namespace skewav;

TEST_CASE("3142 is covered by its first entry") {
    const auto r = theorem_applicability(Permutation::parse("3142"), 8);
    REQUIRE(r.condition == CoverageCondition::first_entry_not_1);
    REQUIRE(r.skew_indecomposable_form == Permutation::parse("3142"));
    REQUIRE(r.covered());
}

TEST_CASE("132 is covered by its last entry") {
    const auto r = theorem_applicability(Permutation::parse("132"), 8);
    REQUIRE(r.condition == CoverageCondition::last_entry_not_k);
}

TEST_CASE("1234 is covered through the known equivalence with 1243") {
    const auto r = theorem_applicability(Permutation::parse("1234"), 8);
    REQUIRE(r.condition == CoverageCondition::wilf_equivalent_to_covered);
    REQUIRE(r.witness == Permutation::parse("1243"));
    REQUIRE(r.evidence == "known table");
}

TEST_CASE("a decomposable pattern is judged through its reverse") {
    const auto r = theorem_applicability(Permutation::parse("321"), 8);
    REQUIRE(r.skew_indecomposable_form == Permutation::parse("123"));
    REQUIRE(r.condition == CoverageCondition::wilf_equivalent_to_covered);
    REQUIRE(r.witness == Permutation::parse("132"));
}

TEST_CASE("1324 is not covered") {
    const auto r = theorem_applicability(Permutation::parse("1324"), 8);
    REQUIRE(r.condition == CoverageCondition::not_covered);
    REQUIRE_FALSE(r.covered());
}

TEST_CASE("coverage agrees between a pattern and its reverse") {
    for (int k : {3, 4}) {
        for (const auto& q : test::all_permutations(k)) {
            const auto a = theorem_applicability(q, 8);
            const auto b = theorem_applicability(q.reversed(), 8);
            REQUIRE(a.covered() == b.covered());
        }
    }
}

TEST_CASE("12 is not covered and its stratification is genuinely non-monotone") {
    const auto r = theorem_applicability(Permutation::parse("12"), 4);
    REQUIRE(r.condition == CoverageCondition::not_covered);
    const auto violations = check_monotonicity(PatternSet::parse("12"), 4);
    REQUIRE_FALSE(violations.empty());
}

TEST_CASE("preconditions of theorem_applicability") {
    REQUIRE_THROWS_AS(theorem_applicability(Permutation::parse("1"), 8), std::invalid_argument);
    REQUIRE_THROWS_AS(theorem_applicability(Permutation::parse("1324"), 3), std::invalid_argument);
}

TEST_CASE("all six length-3 patterns form one empirical class") {
    const WilfClassification w = wilf_classes(3, 8);
    REQUIRE(w.classes.size() == 1);
    REQUIRE(w.classes[0].members.size() == 6);
    // Catalan counts, re-derived by enumeration
    const auto catalan = test::catalan_numbers(9);
    for (int n = 1; n <= 8; ++n) {
        REQUIRE(w.classes[0].counts[static_cast<std::size_t>(n - 1)] ==
                catalan[static_cast<std::size_t>(n)]);
    }
    // two symmetry orbits merge here, so symmetry alone does not explain the class
    REQUIRE_FALSE(w.classes[0].symmetry_only);
}

TEST_CASE("length-2 patterns form one class that is a single orbit") {
    const WilfClassification w = wilf_classes(2, 4);
    REQUIRE(w.classes.size() == 1);
    REQUIRE(w.classes[0].members.size() == 2);
    REQUIRE(w.classes[0].symmetry_only);
}

TEST_CASE("length-4 patterns split into three classes at depth 8") {
    const WilfClassification w = wilf_classes(4, 8);
    REQUIRE(w.classes.size() == 3);

    std::set<std::size_t> sizes;
    for (const auto& cls : w.classes) sizes.insert(cls.members.size());
    REQUIRE(sizes == std::set<std::size_t>{2, 10, 12});

    auto class_of = [&](const Permutation& q) {
        for (std::size_t i = 0; i < w.classes.size(); ++i) {
            for (const auto& m : w.classes[i].members) {
                if (m == q) return i;
            }
        }
        throw std::logic_error("pattern not classified");
    };
    REQUIRE(class_of(Permutation::parse("1342")) != class_of(Permutation::parse("1234")));
    REQUIRE(class_of(Permutation::parse("1324")) != class_of(Permutation::parse("1234")));
    REQUIRE(class_of(Permutation::parse("1324")) == class_of(Permutation::parse("4231")));

    // the observed separation: Av_6(1342) = 512 vs Av_6(1234) = 513
    const auto& c1342 = w.classes[class_of(Permutation::parse("1342"))];
    const auto& c1234 = w.classes[class_of(Permutation::parse("1234"))];
    REQUIRE(c1342.counts[5] == 512);
    REQUIRE(c1234.counts[5] == 513);

    // {1324, 4231} is exactly one symmetry orbit
    const auto& small = w.classes[class_of(Permutation::parse("1324"))];
    REQUIRE(small.members.size() == 2);
    REQUIRE(small.symmetry_only);
}

TEST_CASE("every empirical class is closed under reverse and complement") {
    for (int k : {2, 3, 4}) {
        const WilfClassification w = wilf_classes(k, 7);
        for (const auto& cls : w.classes) {
            const std::set<Permutation> members(cls.members.begin(), cls.members.end());
            for (const auto& m : cls.members) {
                REQUIRE(members.count(m.reversed()) == 1);
                REQUIRE(members.count(m.complemented()) == 1);
            }
        }
    }
}

TEST_CASE("wilf_classes respects its ceilings") {
    REQUIRE_THROWS_AS(wilf_classes(5, 8), resource_limit_error);
    EnumerationOptions opts;
    opts.n_ceiling = 6;
    REQUIRE_THROWS_AS(wilf_classes(3, 8, opts), resource_limit_error);
}

TEST_CASE("monotonicity holds for 132 up to n = 9") {
    REQUIRE(check_monotonicity(PatternSet::parse("132"), 9).empty());
}

TEST_CASE("monotonicity fails for the two-pattern class from n = 3 on") {
    const auto violations = check_monotonicity(PatternSet::parse("123,132"), 6);
    REQUIRE_FALSE(violations.empty());
    std::set<std::pair<int, int>> spots;
    for (const auto& v : violations) {
        spots.insert({v.n, v.ell});
        REQUIRE(v.at_ell_plus_1 > v.at_ell);
    }
    REQUIRE(spots.count({3, 1}) == 1);
    REQUIRE(spots.count({4, 1}) == 1);
    REQUIRE(spots.count({5, 1}) == 1);
    REQUIRE(spots.count({6, 1}) == 1);
}

TEST_CASE("monotonicity holds for a sample of covered length-4 patterns") {
    for (const char* text : {"3142", "2143", "2413", "1243"}) {
        const auto r = theorem_applicability(Permutation::parse(text), 8);
        REQUIRE(r.covered());
        REQUIRE(check_monotonicity(PatternSet::parse(text), 8).empty());
    }
}
