#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skewav/bignum.hpp"
#include "skewav/enumerate.hpp"
#include "skewav/permutation.hpp"
#include "skewav/skew.hpp"

namespace skewav {

enum class CoverageCondition {
    first_entry_not_1,
    last_entry_not_k,
    wilf_equivalent_to_covered,
    not_covered,
};

inline std::string to_string(CoverageCondition c) {
    switch (c) {
        case CoverageCondition::first_entry_not_1: return "first_entry_not_1";
        case CoverageCondition::last_entry_not_k: return "last_entry_not_k";
        case CoverageCondition::wilf_equivalent_to_covered: return "wilf_equivalent_to_covered";
        case CoverageCondition::not_covered: return "not_covered";
    }
    return "?";
}

/// Which monotonicity condition covers a pattern, decided on its
/// skew-indecomposable form (the pattern itself, or its reverse when the
/// pattern splits into skew blocks — exactly one of the two is usable).
struct ApplicabilityReport {
    Permutation pattern;
    Permutation skew_indecomposable_form;
    CoverageCondition condition = CoverageCondition::not_covered;
    std::optional<Permutation> witness;  // always present for wilf_equivalent_to_covered
    std::string evidence;

    bool covered() const { return condition != CoverageCondition::not_covered; }
};

/// Av_1(q)..Av_depth(q).
inline std::vector<Int> avoidance_counts(const Permutation& q, int depth,
                                         const EnumerationOptions& opts = {}) {
    const PatternSet S({q});
    std::vector<Int> counts;
    counts.reserve(static_cast<std::size_t>(depth));
    for (int n = 1; n <= depth; ++n) counts.push_back(count_avoiders(n, S, opts));
    return counts;
}

namespace detail {

inline bool is_monotone_increasing(const Permutation& q) {
    for (int i = 0; i < q.size(); ++i) {
        if (q[i] != i + 1) return false;
    }
    return true;
}

/// 12...(k-2)k(k-1): the shipped Wilf partner of the increasing pattern.
inline Permutation monotone_partner(int k) {
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(k));
    for (int v = 1; v <= k - 2; ++v) vals.push_back(v);
    vals.push_back(k);
    vals.push_back(k - 1);
    return Permutation(std::move(vals));
}

inline bool syntactically_covered(const Permutation& w) {
    return is_skew_indecomposable(w) && (w[0] != 1 || w[w.size() - 1] != w.size());
}

}  // namespace detail

/// A user-extensible table of trusted Wilf equivalences, consulted before the
/// empirical search. Ships with one family only: the increasing pattern
/// 12...k paired with 12...(k-2)k(k-1). Entries whose partner is not itself
/// syntactically covered are ignored.
struct KnownEquivalences {
    std::vector<std::pair<Permutation, Permutation>> entries;

    std::optional<Permutation> lookup(const Permutation& form) const {
        for (const auto& [from, to] : entries) {
            if (from == form && detail::syntactically_covered(to)) return to;
        }
        if (form.size() >= 3 && detail::is_monotone_increasing(form)) {
            const Permutation partner = detail::monotone_partner(form.size());
            if (detail::syntactically_covered(partner)) return partner;
        }
        return std::nullopt;
    }
};

/// Decides which condition covers q: replace q by its reverse when q is skew
/// decomposable, then test the first and last entries, then look for a
/// Wilf-equivalent covered witness — first in the known table, then
/// empirically among skew-indecomposable same-length patterns agreeing on
/// Av_1..Av_N. Empirical agreement is evidence, not proof, and the report
/// says to what depth it was checked.
inline ApplicabilityReport theorem_applicability(const Permutation& q, int N,
                                                 const EnumerationOptions& opts = {},
                                                 const KnownEquivalences& known = {}) {
    if (q.size() < 2) throw std::invalid_argument("theorem_applicability: pattern length must be at least 2");
    if (N < q.size()) throw std::invalid_argument("theorem_applicability: N must be at least the pattern length");

    ApplicabilityReport report;
    report.pattern = q;
    report.skew_indecomposable_form = is_skew_indecomposable(q) ? q : q.reversed();
    const Permutation& form = report.skew_indecomposable_form;
    const int k = form.size();

    if (form[0] != 1) {
        report.condition = CoverageCondition::first_entry_not_1;
        report.evidence = "first entry of " + form.str() + " is " + std::to_string(form[0]);
        return report;
    }
    if (form[k - 1] != k) {
        report.condition = CoverageCondition::last_entry_not_k;
        report.evidence = "last entry of " + form.str() + " is " + std::to_string(form[k - 1]);
        return report;
    }

    if (const auto partner = known.lookup(form)) {
        report.condition = CoverageCondition::wilf_equivalent_to_covered;
        report.witness = *partner;
        report.evidence = "known table";
        return report;
    }

    const std::vector<Int> reference = avoidance_counts(form, N, opts);
    Permutation candidate = Permutation::identity(k);
    std::vector<int> vals = candidate.values();
    do {
        const Permutation w{std::vector<int>(vals)};
        if (w == form || !detail::syntactically_covered(w)) continue;
        bool agrees = true;
        const PatternSet S({w});
        for (int n = 1; n <= N; ++n) {
            if (count_avoiders(n, S, opts) != reference[static_cast<std::size_t>(n - 1)]) {
                agrees = false;
                break;
            }
        }
        if (agrees) {
            report.condition = CoverageCondition::wilf_equivalent_to_covered;
            report.witness = w;
            report.evidence = "empirical to n = " + std::to_string(N);
            return report;
        }
    } while (std::next_permutation(vals.begin(), vals.end()));

    report.condition = CoverageCondition::not_covered;
    report.evidence = "no Wilf-equivalent covered witness found to n = " + std::to_string(N);
    return report;
}

/// Partition of all k! patterns by their count vectors Av_1..Av_N. Agreement
/// to depth N is empirical evidence only; the classification carries the
/// depth so nobody mistakes it for proof.
struct WilfClassification {
    struct WilfClass {
        std::vector<Permutation> members;  // lexicographic
        std::vector<Int> counts;           // Av_1..Av_N
        bool symmetry_only = false;        // class equals one reverse/complement orbit
    };

    int k = 0;
    int depth = 0;
    std::vector<WilfClass> classes;  // ordered by first member
};

inline WilfClassification wilf_classes(int k, int N, const EnumerationOptions& opts = {},
                                       int k_ceiling = 4) {
    if (k < 2 || k > k_ceiling) {
        throw resource_limit_error("wilf_classes: k = " + std::to_string(k) +
                                   " outside [2, " + std::to_string(k_ceiling) + "]");
    }
    detail::check_ceiling(N, opts, "wilf_classes");

    std::map<std::vector<Int>, std::vector<Permutation>> buckets;
    std::vector<int> vals = Permutation::identity(k).values();
    do {
        const Permutation q{std::vector<int>(vals)};
        buckets[avoidance_counts(q, N, opts)].push_back(q);
    } while (std::next_permutation(vals.begin(), vals.end()));

    WilfClassification out;
    out.k = k;
    out.depth = N;
    for (auto& [counts, members] : buckets) {
        WilfClassification::WilfClass cls;
        cls.counts = counts;
        cls.members = std::move(members);
        const Permutation& rep = cls.members.front();
        const std::set<Permutation> orbit{rep, rep.reversed(), rep.complemented(),
                                          rep.reversed().complemented()};
        cls.symmetry_only =
            orbit == std::set<Permutation>(cls.members.begin(), cls.members.end());
        out.classes.push_back(std::move(cls));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& a, const auto& b) { return a.members.front() < b.members.front(); });
    return out;
}

/// A spot where the block-count stratification fails to decrease.
struct MonotonicityViolation {
    int n = 0;
    int ell = 0;   // Av_{n,ell+1} > Av_{n,ell}
    Int at_ell;
    Int at_ell_plus_1;
};

inline std::vector<MonotonicityViolation> check_monotonicity(const CountTable& table) {
    std::vector<MonotonicityViolation> violations;
    for (int n = 1; n <= table.n_max; ++n) {
        for (int ell = 1; ell < n; ++ell) {
            const Int& a = table.at(n, ell);
            const Int& b = table.at(n, ell + 1);
            if (b > a) violations.push_back({n, ell, a, b});
        }
    }
    return violations;
}

inline std::vector<MonotonicityViolation> check_monotonicity(const PatternSet& S, int n_max,
                                                             const EnumerationOptions& opts = {}) {
    return check_monotonicity(count_by_blocks(n_max, S, opts));
}

}  // namespace skewav
