#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewav/bignum.hpp"

namespace skewav {

/// Dense univariate polynomial over the exact rationals. coefficients()[i]
/// multiplies z^i; trailing zeros are trimmed; the zero polynomial has
/// degree -1.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(int i) const {
        static const Rational zero{0};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<int>(i));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }

    /// Quotient and remainder of exact polynomial division.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
        std::vector<Rational> rem(a.c_);
        std::vector<Rational> quot;
        const int db = b.degree();
        const Rational& lead = b.c_.back();
        while (static_cast<int>(rem.size()) - 1 >= db) {
            const int dr = static_cast<int>(rem.size()) - 1;
            const Rational factor = rem.back() / lead;
            const int shift = dr - db;
            if (static_cast<int>(quot.size()) < shift + 1) quot.resize(static_cast<std::size_t>(shift) + 1, Rational(0));
            quot[static_cast<std::size_t>(shift)] = factor;
            for (int i = 0; i <= db; ++i) {
                rem[static_cast<std::size_t>(i + shift)] -= factor * b.c_[static_cast<std::size_t>(i)];
            }
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.empty()) break;
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    Polynomial monic() const {
        if (is_zero()) return Polynomial();
        return *this * (Rational(1) / c_.back());
    }

    bool operator==(const Polynomial&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic greatest common divisor by the Euclidean remainder sequence.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// p divided by gcd(p, p'): same roots, all simple.
inline Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    const Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).first;
}

/// num/den in lowest terms with den(0) normalized to 1. Rejects inputs whose
/// reduced denominator vanishes at 0.
class RationalFunction {
public:
    RationalFunction(Polynomial num, Polynomial den) {
        if (den.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
        const Polynomial g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        if (den.coeff(0) == 0) {
            throw std::invalid_argument("RationalFunction: denominator vanishes at 0");
        }
        const Rational scale = Rational(1) / den.coeff(0);
        num_ = num * scale;
        den_ = den * scale;
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    Rational eval(const Rational& x) const {
        const Rational d = den_.eval(x);
        if (d == 0) throw std::domain_error("RationalFunction: evaluation at a pole");
        return num_.eval(x) / d;
    }

    /// Maclaurin coefficients g_0..g_order via g_n = num_n - sum den_j g_{n-j}.
    std::vector<Rational> maclaurin(int order) const {
        std::vector<Rational> g(static_cast<std::size_t>(order) + 1, Rational(0));
        for (int n = 0; n <= order; ++n) {
            Rational acc = num_.coeff(n);
            for (int j = 1; j <= std::min(n, den_.degree()); ++j) {
                acc -= den_.coeff(j) * g[static_cast<std::size_t>(n - j)];
            }
            g[static_cast<std::size_t>(n)] = acc;
        }
        return g;
    }

private:
    Polynomial num_;
    Polynomial den_;
};

enum class Supercriticality { supercritical, not_supercritical, inconclusive };

inline std::string to_string(Supercriticality s) {
    switch (s) {
        case Supercriticality::supercritical: return "supercritical";
        case Supercriticality::not_supercritical: return "not_supercritical";
        case Supercriticality::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Outcome of a supercriticality probe. A supercritical verdict carries
/// either a proven pole of G on the positive real axis (pole_interval) or a
/// witness point 0 < z0 < R_G with exact value G(z0) > 1 — here both, when a
/// pole is found.
struct SupercriticalVerdict {
    Supercriticality status = Supercriticality::inconclusive;
    std::optional<Rational> witness_z0;
    std::optional<Rational> witness_value;
    std::optional<std::pair<Rational, Rational>> pole_interval;  // smallest positive pole in (lo, hi]
    std::string evidence;
};

struct SupercriticalOptions {
    int coefficient_check_order = 64;                       // Maclaurin nonnegativity check depth
    Rational isolation_width = Rational(1, 1000000000);     // pole interval refined below 1e-9
};

namespace detail {

/// Sturm chain of a square-free polynomial.
inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(p);
    Polynomial d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        Polynomial r = divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(r * Rational(-1));
    }
    return chain;
}

inline int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const Rational v = p.eval(x);
        const int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

/// Number of distinct real roots in (a, b); requires p(a) != 0 and p(b) != 0.
inline int roots_between(const std::vector<Polynomial>& chain, const Rational& a,
                         const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace detail

/// Decides the supercriticality of F = 1/(1-G) for a rational G with G(0) = 0
/// and nonnegative Maclaurin coefficients (checked to a configurable order).
/// A polynomial G has infinite radius, hence is supercritical; otherwise the
/// smallest positive real root of the denominator is isolated by exact
/// bisection on Sturm sign-change counts, which is a genuine pole of G since
/// the fraction is stored in lowest terms. No floating point anywhere.
inline SupercriticalVerdict rational_supercritical(const RationalFunction& g,
                                                   const SupercriticalOptions& opts = {}) {
    const auto coeffs = g.maclaurin(opts.coefficient_check_order);
    if (coeffs[0] != 0) {
        throw std::invalid_argument("rational_supercritical: G(0) must be 0");
    }
    for (int n = 1; n <= opts.coefficient_check_order; ++n) {
        if (coeffs[static_cast<std::size_t>(n)] < 0) {
            throw std::invalid_argument(
                "not a counting series: coefficient of z^" + std::to_string(n) + " is negative");
        }
    }

    SupercriticalVerdict verdict;
    if (g.num().is_zero()) {
        verdict.status = Supercriticality::not_supercritical;
        verdict.evidence = "G is identically zero, so G never exceeds 1";
        return verdict;
    }

    if (g.is_polynomial()) {
        // Nonzero polynomial with nonnegative coefficients: grows without bound.
        Rational z0(1);
        while (g.eval(z0) <= 1) z0 *= 2;
        verdict.status = Supercriticality::supercritical;
        verdict.witness_z0 = z0;
        verdict.witness_value = g.eval(z0);
        verdict.evidence = "G is a polynomial, so its radius of convergence is infinite";
        return verdict;
    }

    const Polynomial sf = square_free_part(g.den());
    const auto chain = detail::sturm_chain(sf);

    // Cauchy bound: every root has modulus below 1 + max |c_i| / |c_deg|.
    Rational bound(1);
    const Rational lead = sf.coeff(sf.degree());
    for (int i = 0; i < sf.degree(); ++i) {
        Rational m = sf.coeff(i) / lead;
        if (m < 0) m = -m;
        if (m > bound) bound = m;
    }
    Rational hi = bound + 2;
    while (sf.eval(hi) == 0) hi += 1;

    if (detail::roots_between(chain, Rational(0), hi) == 0) {
        verdict.status = Supercriticality::inconclusive;
        verdict.evidence =
            "denominator has no positive real root; no pole on the positive axis was found";
        return verdict;
    }

    // Keep the smallest positive root inside (lo, hi]; lo is never a root.
    Rational lo(0);
    while (hi - lo >= opts.isolation_width) {
        const Rational mid = (lo + hi) / 2;
        if (sf.eval(mid) == 0) {
            hi = mid;
            if (hi - lo < opts.isolation_width) break;
            // exact root hit: shrink from the left only
            const Rational probe = (lo + mid) / 2;
            if (sf.eval(probe) != 0 && detail::roots_between(chain, Rational(0), probe) == 0) {
                lo = probe;
            }
            continue;
        }
        if (detail::roots_between(chain, Rational(0), mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    // Witness below the pole: G increases toward it, so push lo upward until
    // the exact value clears 1.
    int budget = 512;
    while (budget-- > 0 && g.eval(lo) <= 1) {
        const Rational mid = (lo + hi) / 2;
        if (sf.eval(mid) != 0 && detail::roots_between(chain, Rational(0), mid) == 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (g.eval(lo) <= 1) {
        verdict.status = Supercriticality::inconclusive;
        verdict.evidence = "evaluation below the pole did not exceed 1 within the search budget";
        return verdict;
    }

    verdict.status = Supercriticality::supercritical;
    verdict.witness_z0 = lo;
    verdict.witness_value = g.eval(lo);
    verdict.pole_interval = std::make_pair(lo, hi);
    verdict.evidence = "pole of G at the smallest positive denominator root, inside (" +
                       rational_str(lo) + ", " + rational_str(hi) + "]";
    return verdict;
}

}  // namespace skewav
