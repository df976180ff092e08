#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skewav/enumerate.hpp"
#include "skewav/permutation.hpp"
#include "skewav/skew.hpp"

namespace skewav {

/// Moves the maximum entry of p into the last position; everything else keeps
/// its relative order. On a two-block 132-avoider this lands in the
/// skew-indecomposable 132-avoiders of the same length, bijectively.
inline Permutation move_max_to_end(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("move_max_to_end: empty permutation");
    std::vector<int> vals = p.values();
    const auto it = std::max_element(vals.begin(), vals.end());
    const int max_value = *it;
    vals.erase(it);
    vals.push_back(max_value);
    return Permutation(std::move(vals));
}

/// Reinserts the last entry of w immediately to the left of the rightmost
/// skew block of w_1..w_{n-1}. Undoes move_max_to_end on its image and
/// move_rightmost_big_to_end on every two-block permutation.
inline Permutation move_last_before_rightmost_block(const Permutation& w) {
    if (w.size() < 2) {
        throw std::invalid_argument("move_last_before_rightmost_block: length must be at least 2");
    }
    std::vector<int> vals = w.values();
    const int last = vals.back();
    vals.pop_back();
    const std::vector<int> cuts = skew_cut_positions(std::span<const int>(vals));
    const int insert_at = cuts.empty() ? 0 : cuts.back() + 1;
    vals.insert(vals.begin() + insert_at, last);
    return Permutation(std::move(vals));
}

/// For p with exactly two skew blocks ("big" entries then "small" entries),
/// moves the rightmost big entry into the last position.
inline Permutation move_rightmost_big_to_end(const Permutation& p) {
    const std::vector<int> cuts = skew_cut_positions(p.span());
    if (p.empty() || cuts.size() != 1) {
        throw std::invalid_argument("move_rightmost_big_to_end: permutation must have exactly two skew blocks");
    }
    std::vector<int> vals = p.values();
    const int big_end = cuts.front();  // index of the last entry of the first block
    const int x = vals[static_cast<std::size_t>(big_end)];
    vals.erase(vals.begin() + big_end);
    vals.push_back(x);
    return Permutation(std::move(vals));
}

/// Evidence gathered by an exhaustive map check over one pattern and length.
struct MapReport {
    struct Counterexample {
        Permutation input;
        std::string diagnosis;
    };

    Permutation pattern;
    int n = 0;
    std::size_t domain_size = 0;
    std::size_t image_size = 0;
    bool well_defined = true;
    bool injective = true;
    bool surjective = true;
    std::vector<Counterexample> counterexamples;

    bool passed() const { return counterexamples.empty(); }
};

/// Exhaustively checks, inside the 132-avoiders of length n, that moving the
/// maximum to the end is a bijection from the two-block avoiders onto the
/// skew-indecomposable ones, that reinsertion inverts it, and that every
/// skew-indecomposable 132-avoider ends in its largest entry.
inline MapReport verify_move_max_bijection(int n, const EnumerationOptions& opts = {}) {
    if (n < 2) throw std::invalid_argument("verify_move_max_bijection: n must be at least 2");
    detail::check_ceiling(n, opts, "verify_move_max_bijection");
    const Permutation q = Permutation::parse("132");
    MapReport report;
    report.pattern = q;
    report.n = n;

    const PatternSet S({q});
    std::vector<Permutation> domain;
    std::set<Permutation> codomain;
    enumerate_avoiders(n, S).for_each([&](const Permutation& p) {
        const int blocks = block_count(p);
        if (blocks == 2) domain.push_back(p);
        if (blocks == 1) codomain.insert(p);
    });
    report.domain_size = domain.size();

    for (const Permutation& w : codomain) {
        if (w[n - 1] != n) {
            report.counterexamples.push_back(
                {w, "skew-indecomposable avoider does not end in its maximum"});
        }
    }

    std::set<Permutation> image;
    for (const Permutation& p : domain) {
        const Permutation w = move_max_to_end(p);
        if (contains(w, q)) {
            report.well_defined = false;
            report.counterexamples.push_back({p, "image contains the pattern"});
            continue;
        }
        if (!is_skew_indecomposable(w)) {
            report.well_defined = false;
            report.counterexamples.push_back({p, "image is not skew indecomposable"});
            continue;
        }
        if (move_last_before_rightmost_block(w) != p) {
            report.counterexamples.push_back({p, "reinsertion does not recover the input"});
        }
        image.insert(w);
    }
    report.image_size = image.size();
    report.injective = report.image_size == report.domain_size;
    report.surjective = image == codomain;
    if (!report.injective) {
        report.counterexamples.push_back({report.pattern, "map is not injective"});
    }
    if (!report.surjective) {
        report.counterexamples.push_back({report.pattern, "map is not surjective"});
    }
    for (const Permutation& w : codomain) {
        const Permutation p = move_last_before_rightmost_block(w);
        if (move_max_to_end(p) != w) {
            report.counterexamples.push_back({w, "round trip from the codomain fails"});
        }
    }
    return report;
}

/// For a good, skew-indecomposable pattern q: enumerates the two-block
/// q-avoiders of length n, applies move_rightmost_big_to_end to each, and
/// checks that the image avoids q, is skew indecomposable, and that
/// reinsertion recovers the input (hence injectivity). Surjectivity is
/// recorded but only expected for special patterns such as 132.
inline MapReport verify_good_pattern_injection(const Permutation& q, int n,
                                               const EnumerationOptions& opts = {}) {
    if (!is_skew_indecomposable(q)) {
        throw std::invalid_argument(q.str() + " is not skew indecomposable");
    }
    if (!is_good(q)) {
        throw std::invalid_argument(q.str() + " is not good");
    }
    detail::check_ceiling(n, opts, "verify_good_pattern_injection");
    MapReport report;
    report.pattern = q;
    report.n = n;

    const PatternSet S({q});
    std::vector<Permutation> domain;
    std::set<Permutation> codomain;
    enumerate_avoiders(n, S).for_each([&](const Permutation& p) {
        const int blocks = block_count(p);
        if (blocks == 2) domain.push_back(p);
        if (blocks == 1) codomain.insert(p);
    });
    report.domain_size = domain.size();

    std::set<Permutation> image;
    for (const Permutation& p : domain) {
        const Permutation w = move_rightmost_big_to_end(p);
        if (contains(w, q)) {
            report.well_defined = false;
            report.counterexamples.push_back({p, "image contains the pattern"});
            continue;
        }
        if (!is_skew_indecomposable(w)) {
            report.well_defined = false;
            report.counterexamples.push_back({p, "image is not skew indecomposable"});
            continue;
        }
        if (move_last_before_rightmost_block(w) != p) {
            report.counterexamples.push_back({p, "reinsertion does not recover the input"});
        }
        image.insert(w);
    }
    report.image_size = image.size();
    report.injective = report.image_size == report.domain_size;
    report.surjective = image == codomain;
    if (!report.injective) {
        report.counterexamples.push_back({report.pattern, "map is not injective"});
    }
    return report;
}

}  // namespace skewav
