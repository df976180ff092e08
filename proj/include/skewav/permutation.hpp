#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewav {

/// A permutation of {1, ..., n} in one-line notation. Doubles as a pattern;
/// the library never distinguishes the two. Immutable after construction.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `values` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        validate(values_);
    }

    /// Accepts a compact digit string ("132", usable only when all values
    /// are <= 9) or a comma-separated list ("10,2,3,4,5,6,7,8,9,1").
    /// The empty string denotes the empty permutation.
    static Permutation parse(const std::string& text) {
        std::vector<int> vals;
        if (text.find(',') != std::string::npos) {
            std::size_t start = 0;
            while (start <= text.size()) {
                std::size_t end = text.find(',', start);
                if (end == std::string::npos) end = text.size();
                std::string item = text.substr(start, end - start);
                // tolerate surrounding spaces
                while (!item.empty() && item.front() == ' ') item.erase(item.begin());
                while (!item.empty() && item.back() == ' ') item.pop_back();
                vals.push_back(parse_value(item));
                start = end + 1;
                if (end == text.size()) break;
            }
        } else {
            for (const char ch : text) {
                if (ch < '0' || ch > '9') {
                    throw std::invalid_argument(
                        std::string("cannot parse permutation: unexpected character '") + ch + "'");
                }
                vals.push_back(ch - '0');
            }
        }
        return Permutation(std::move(vals));
    }

    static Permutation identity(int n) {
        std::vector<int> vals(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(vals));
    }

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int operator[](int pos) const { return values_[static_cast<std::size_t>(pos)]; }
    const std::vector<int>& values() const { return values_; }
    std::span<const int> span() const { return values_; }

    /// Compact digits when n <= 9, comma-separated otherwise. parse() inverts it.
    std::string str() const {
        if (values_.empty()) return "";
        std::string out;
        const bool compact = size() <= 9;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i > 0 && !compact) out += ',';
            out += std::to_string(values_[i]);
        }
        return out;
    }

    Permutation reversed() const {
        std::vector<int> vals(values_.rbegin(), values_.rend());
        return Permutation(std::move(vals));
    }

    Permutation complemented() const {
        const int k = size();
        std::vector<int> vals(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = k + 1 - values_[i];
        return Permutation(std::move(vals));
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    static int parse_value(const std::string& item) {
        if (item.empty()) throw std::invalid_argument("cannot parse permutation: empty entry");
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse permutation: bad entry '" + item + "'");
        }
        if (pos != item.size()) {
            throw std::invalid_argument("cannot parse permutation: bad entry '" + item + "'");
        }
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
            throw std::invalid_argument("cannot parse permutation: entry '" + item + "' out of range");
        }
        return static_cast<int>(v);
    }

    static void validate(const std::vector<int>& values) {
        const int n = static_cast<int>(values.size());
        std::vector<bool> seen(values.size() + 1, false);
        for (const int v : values) {
            if (v < 1) {
                throw std::invalid_argument("value " + std::to_string(v) +
                                            " is not a positive integer");
            }
            if (v > n) {
                throw std::invalid_argument("value " + std::to_string(v) +
                                            " out of range for length " + std::to_string(n));
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("value " + std::to_string(v) + " repeated");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    std::vector<int> values_;
};

/// Containment search compiled for one pattern. Matches pattern entries left
/// to right by depth-first search over host positions; a candidate host value
/// only has to respect the nearest already-matched values below and above it,
/// which prunes the search to the order-isomorphism interval.
class PatternMatcher {
public:
    explicit PatternMatcher(Permutation pattern) : q_(std::move(pattern)) {
        const int k = q_.size();
        below_.assign(static_cast<std::size_t>(k), -1);
        above_.assign(static_cast<std::size_t>(k), -1);
        for (int r = 0; r < k; ++r) {
            for (int s = 0; s < r; ++s) {
                if (q_[s] < q_[r]) {
                    if (below_[r] < 0 || q_[s] > q_[below_[r]]) below_[r] = s;
                } else {
                    if (above_[r] < 0 || q_[s] < q_[above_[r]]) above_[r] = s;
                }
            }
        }
        pos_.assign(static_cast<std::size_t>(k), 0);
    }

    const Permutation& pattern() const { return q_; }

    /// True when `seq` (any sequence of distinct values) contains the pattern.
    bool contained_in(std::span<const int> seq) const {
        const int k = q_.size();
        if (k == 0) return true;
        if (k > static_cast<int>(seq.size())) return false;
        return search(seq, 0, 0, false);
    }

    /// Containment where the match is forced to use the last element of `seq`
    /// as the pattern's last entry. This is what incremental prefix pruning
    /// needs: a freshly appended element can only complete a match that ends
    /// on it.
    bool match_ends_at_last(std::span<const int> seq) const {
        const int k = q_.size();
        if (seq.empty()) return false;
        if (k == 0) return true;
        if (k > static_cast<int>(seq.size())) return false;
        return search(seq, 0, 0, true);
    }

private:
    bool search(std::span<const int> seq, int r, int from, bool anchor_last) const {
        const int k = q_.size();
        const int n = static_cast<int>(seq.size());
        const int lo = below_[r] >= 0 ? seq[static_cast<std::size_t>(pos_[below_[r]])]
                                      : 0;
        const int hi = above_[r] >= 0 ? seq[static_cast<std::size_t>(pos_[above_[r]])]
                                      : std::numeric_limits<int>::max();
        if (anchor_last && r == k - 1) {
            const int v = seq[static_cast<std::size_t>(n - 1)];
            return from <= n - 1 && v > lo && v < hi;
        }
        for (int j = from; j <= n - (k - r); ++j) {
            const int v = seq[static_cast<std::size_t>(j)];
            if (v <= lo || v >= hi) continue;
            pos_[static_cast<std::size_t>(r)] = j;
            if (r + 1 == k) return true;
            if (search(seq, r + 1, j + 1, anchor_last)) return true;
        }
        return false;
    }

    Permutation q_;
    std::vector<int> below_;
    std::vector<int> above_;
    mutable std::vector<int> pos_;
};

/// p contains q: some subsequence of p is order-isomorphic to q.
inline bool contains(std::span<const int> seq, const Permutation& pattern) {
    return PatternMatcher(pattern).contained_in(seq);
}

inline bool contains(const Permutation& p, const Permutation& pattern) {
    return contains(p.span(), pattern);
}

inline bool avoids(const Permutation& p, const Permutation& pattern) {
    return !contains(p, pattern);
}

/// A pattern q of length k is good when no block of entries immediately
/// preceding its last entry consists exactly of the values {1, ..., i}.
/// Patterns ending in their largest entry are never good (take i = k-1).
inline bool is_good(const Permutation& q) {
    if (q.empty()) throw std::invalid_argument("is_good: empty permutation");
    const int k = q.size();
    int running_max = 0;
    for (int i = 1; i <= k - 1; ++i) {
        running_max = std::max(running_max, q[k - 1 - i]);
        if (running_max == i) return false;
    }
    return true;
}

}  // namespace skewav
