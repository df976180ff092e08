#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewav/bignum.hpp"
#include "skewav/enumerate.hpp"

namespace skewav {

/// Exact coefficients c_0..c_N of a formal power series truncated at order N.
/// Every operation is exact rational arithmetic; truncation orders propagate
/// as the minimum of the operands — a padded zero would silently claim an
/// unknown coefficient.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Rational> coefficients)
        : c_(std::move(coefficients)) {
        if (c_.empty()) throw std::invalid_argument("TruncatedSeries: no coefficients");
    }

    static TruncatedSeries zero(int order) {
        return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
    }

    static TruncatedSeries one(int order) {
        std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
        c[0] = 1;
        return TruncatedSeries(std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool operator==(const TruncatedSeries&) const = default;

    /// "1 + z + 2*z^2 + 5/2*z^3"; zero renders as "0".
    std::string str() const {
        std::string out;
        for (std::size_t n = 0; n < c_.size(); ++n) {
            const Rational& coeff = c_[n];
            if (coeff == 0) continue;
            const bool negative = coeff < 0;
            const Rational mag = negative ? Rational(-coeff) : coeff;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            if (n == 0) {
                out += rational_str(mag);
            } else {
                if (mag != 1) out += rational_str(mag) + "*";
                out += n == 1 ? "z" : "z^" + std::to_string(n);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<Rational> c_;
};

/// A_S(z) truncated at the table's n_max: c_0 = 1 and c_n = Av_n(S).
inline TruncatedSeries total_series(const CountTable& table) {
    std::vector<Rational> c;
    c.reserve(table.total.size());
    for (const Int& v : table.total) c.emplace_back(v);
    return TruncatedSeries(std::move(c));
}

/// A_{l,S}(z) truncated at the table's n_max: c_0 = 0 and c_n = Av_{n,l}(S).
inline TruncatedSeries blocks_series(const CountTable& table, int ell) {
    if (ell < 1) throw std::invalid_argument("blocks_series: ell must be positive");
    if (ell > table.n_max) {
        throw std::invalid_argument("blocks_series: ell = " + std::to_string(ell) +
                                    " exceeds the table's n_max = " + std::to_string(table.n_max));
    }
    std::vector<Rational> c(static_cast<std::size_t>(table.n_max) + 1, Rational(0));
    for (int n = 1; n <= table.n_max; ++n) c[static_cast<std::size_t>(n)] = Rational(table.at(n, ell));
    return TruncatedSeries(std::move(c));
}

/// Exact Cauchy product, truncated at the smaller operand order.
inline TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b[j] == 0) continue;
            c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

/// F^ell by binary exponentiation; identical to iterated multiplication since
/// truncated products only ever read coefficients up to the kept order.
inline TruncatedSeries power(const TruncatedSeries& f, int ell) {
    if (ell < 0) throw std::invalid_argument("power: exponent must be nonnegative");
    TruncatedSeries acc = TruncatedSeries::one(f.order());
    TruncatedSeries base = f;
    int e = ell;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return acc;
}

/// F = 1/(1-G) for G with G(0) = 0, i.e. F_n = sum_{k=1..n} G_k F_{n-k} with
/// F_0 = 1. Equals sum_{l>=0} G^l truncated.
inline TruncatedSeries quasi_inverse(const TruncatedSeries& g) {
    if (g[0] != 0) {
        throw std::invalid_argument("quasi_inverse: constant term must be 0");
    }
    const int order = g.order();
    std::vector<Rational> f(static_cast<std::size_t>(order) + 1, Rational(0));
    f[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += g[k] * f[static_cast<std::size_t>(n - k)];
        f[static_cast<std::size_t>(n)] = acc;
    }
    return TruncatedSeries(std::move(f));
}

/// 1 - 1/A for A with A(0) = 1. The reciprocal R of a unit-constant-term
/// series follows R_0 = 1, R_n = -sum_{k=1..n} A_k R_{n-k}; the result has
/// constant term 0. Inverse of quasi_inverse.
inline TruncatedSeries indecomposable_part(const TruncatedSeries& a) {
    if (a[0] != 1) {
        throw std::invalid_argument("indecomposable_part: constant term must be 1");
    }
    const int order = a.order();
    std::vector<Rational> recip(static_cast<std::size_t>(order) + 1, Rational(0));
    recip[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += a[k] * recip[static_cast<std::size_t>(n - k)];
        recip[static_cast<std::size_t>(n)] = -acc;
    }
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int n = 1; n <= order; ++n) out[static_cast<std::size_t>(n)] = -recip[static_cast<std::size_t>(n)];
    return TruncatedSeries(std::move(out));
}

struct Dominance {
    bool holds = true;
    int witness = -1;  // smallest n with c_n(F) < c_n(G) when !holds
};

/// True iff c_n(F) >= c_n(G) for all n up to the (equal) truncation order.
inline Dominance coefficient_dominates(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.order() != g.order()) {
        throw std::invalid_argument("coefficient_dominates: truncation orders differ");
    }
    for (int n = 0; n <= f.order(); ++n) {
        if (f[n] < g[n]) return {false, n};
    }
    return {true, -1};
}

/// Exact value of the truncated polynomial at z0 > 0. For a series with
/// nonnegative coefficients this is a lower bound on the true value, so a
/// result > 1 is evidence of supercriticality at z0.
inline Rational eval_partial(const TruncatedSeries& g, const Rational& z0) {
    if (z0 <= 0) throw std::invalid_argument("eval_partial: z0 must be positive");
    Rational acc(0);
    for (int n = g.order(); n >= 0; --n) acc = acc * z0 + g[n];
    return acc;
}

}  // namespace skewav
