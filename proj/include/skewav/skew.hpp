#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "skewav/permutation.hpp"

namespace skewav {

/// The unique maximal cutting of a permutation into skew blocks. Block i sits
/// strictly above block j in value whenever i < j. Each block is renormalized
/// to a permutation of its own length; offsets[i] is the amount added back to
/// recover the original values (block value v came from v + offsets[i]).
struct SkewDecomposition {
    std::vector<Permutation> blocks;
    std::vector<int> offsets;
};

/// Positions i (0-based) such that every value at or before i exceeds every
/// value after i. Works on any sequence of distinct values, prefixes included.
inline std::vector<int> skew_cut_positions(std::span<const int> values) {
    const int n = static_cast<int>(values.size());
    std::vector<int> cuts;
    if (n < 2) return cuts;
    std::vector<int> suffix_max(static_cast<std::size_t>(n));
    suffix_max[static_cast<std::size_t>(n - 1)] = values[static_cast<std::size_t>(n - 1)];
    for (int i = n - 2; i >= 0; --i) {
        suffix_max[static_cast<std::size_t>(i)] =
            std::max(values[static_cast<std::size_t>(i)], suffix_max[static_cast<std::size_t>(i + 1)]);
    }
    int prefix_min = values[0];
    for (int i = 0; i + 1 < n; ++i) {
        prefix_min = std::min(prefix_min, values[static_cast<std::size_t>(i)]);
        if (prefix_min > suffix_max[static_cast<std::size_t>(i + 1)]) cuts.push_back(i);
    }
    return cuts;
}

inline int block_count(std::span<const int> values) {
    if (values.empty()) throw std::invalid_argument("block_count: empty permutation");
    return static_cast<int>(skew_cut_positions(values).size()) + 1;
}

inline int block_count(const Permutation& p) { return block_count(p.span()); }

inline bool is_skew_indecomposable(const Permutation& p) { return block_count(p) == 1; }

inline SkewDecomposition skew_decompose(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("skew_decompose: empty permutation");
    const std::vector<int> cuts = skew_cut_positions(p.span());
    SkewDecomposition dec;
    int start = 0;
    for (std::size_t b = 0; b <= cuts.size(); ++b) {
        const int end = b < cuts.size() ? cuts[b] + 1 : p.size();
        int lo = p[start];
        for (int i = start; i < end; ++i) lo = std::min(lo, p[i]);
        const int offset = lo - 1;
        std::vector<int> vals;
        vals.reserve(static_cast<std::size_t>(end - start));
        for (int i = start; i < end; ++i) vals.push_back(p[i] - offset);
        dec.blocks.emplace_back(std::move(vals));
        dec.offsets.push_back(offset);
        start = end;
    }
    return dec;
}

/// Concatenates blocks with descending value offsets, so every value of block
/// i exceeds every value of block j for i < j. Inverse of skew_decompose when
/// all blocks are skew indecomposable.
inline Permutation skew_sum(const std::vector<Permutation>& blocks) {
    int total = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("skew_sum: empty block");
        total += b.size();
    }
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(total));
    int remaining = total;
    for (const auto& b : blocks) {
        remaining -= b.size();
        for (const int v : b.values()) vals.push_back(v + remaining);
    }
    return Permutation(std::move(vals));
}

}  // namespace skewav
