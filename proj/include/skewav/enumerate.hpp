#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "skewav/bignum.hpp"
#include "skewav/permutation.hpp"
#include "skewav/skew.hpp"

namespace skewav {

/// Thrown when a request exceeds the configured enumeration ceiling instead
/// of letting a run grow without bound.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    int n_ceiling = 14;  // largest permutation length counting operations accept
    int threads = 1;     // <= 1 runs in the calling thread
};

/// A deduplicated, containment-minimal set of nonempty patterns. A pattern
/// that contains another member is dropped at construction: avoiding the
/// contained pattern already rules out every occurrence of the larger one.
class PatternSet {
public:
    explicit PatternSet(std::vector<Permutation> patterns) {
        if (patterns.empty()) throw std::invalid_argument("PatternSet: no patterns given");
        for (const auto& q : patterns) {
            if (q.empty()) {
                throw std::invalid_argument(
                    "PatternSet: the empty pattern is contained in every permutation");
            }
        }
        std::sort(patterns.begin(), patterns.end(), size_then_lex);
        patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
        for (const auto& q : patterns) {
            bool redundant = false;
            for (const auto& kept : patterns_) {
                if (contains(q, kept)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) patterns_.push_back(q);
        }
    }

    /// Parses "132", "123,132" (several compact patterns), "10,2,...,1" (one
    /// long pattern in comma notation) or an unambiguous ';'-separated list.
    static PatternSet parse(const std::string& text) {
        std::vector<Permutation> pats;
        if (text.find(';') != std::string::npos) {
            for (const auto& part : split(text, ';')) pats.push_back(Permutation::parse(part));
            return PatternSet(std::move(pats));
        }
        if (text.find(',') != std::string::npos) {
            // Prefer reading "a,b,c" as a list of compact patterns; fall back
            // to a single comma-notation permutation ("10,2,...").
            try {
                std::vector<Permutation> tokens;
                for (const auto& part : split(text, ',')) tokens.push_back(Permutation::parse(part));
                return PatternSet(std::move(tokens));
            } catch (const std::invalid_argument&) {
                pats.push_back(Permutation::parse(text));
                return PatternSet(std::move(pats));
            }
        }
        pats.push_back(Permutation::parse(text));
        return PatternSet(std::move(pats));
    }

    const std::vector<Permutation>& patterns() const { return patterns_; }

    std::string str() const {
        bool needs_semicolons = false;
        for (const auto& q : patterns_) {
            if (q.size() > 9) needs_semicolons = true;
        }
        std::string out;
        for (std::size_t i = 0; i < patterns_.size(); ++i) {
            if (i > 0) out += needs_semicolons ? ';' : ',';
            out += patterns_[i].str();
        }
        return out;
    }

    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    static bool size_then_lex(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }

    static std::vector<std::string> split(const std::string& text, char sep) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            const std::size_t end = text.find(sep, start);
            parts.push_back(text.substr(start, end == std::string::npos ? end : end - start));
            if (end == std::string::npos) break;
            start = end + 1;
        }
        return parts;
    }

    std::vector<Permutation> patterns_;
};

/// Exact counts of S-avoiding permutations: total[n] = Av_n(S) for n <= n_max
/// and by_blocks[n][l-1] = Av_{n,l}(S), the avoiders of length n with exactly
/// l skew blocks.
struct CountTable {
    PatternSet pattern_set;
    int n_max = 0;
    std::vector<Int> total;                   // index 0..n_max
    std::vector<std::vector<Int>> by_blocks;  // by_blocks[n] has n entries, n = 1..n_max

    const Int& at(int n, int ell) const {
        static const Int zero{0};
        if (n < 1 || n > n_max) throw std::out_of_range("CountTable::at: n out of range");
        if (ell < 1) throw std::out_of_range("CountTable::at: ell must be positive");
        if (ell > n) return zero;
        return by_blocks[static_cast<std::size_t>(n)][static_cast<std::size_t>(ell - 1)];
    }
};

namespace detail {

/// Depth-first walk over prefixes of permutations of {1..n}, pruning a prefix
/// as soon as it completely contains a pattern. Skew cuts of the prefix are
/// maintained incrementally: a cut stays alive exactly while its prefix
/// minimum exceeds every later value, so appending v kills the cuts whose
/// stored minimum is <= v (they sit on top of the stack) and opens a new cut
/// when v drops below the whole running prefix.
class PrefixDfs {
public:
    PrefixDfs(int n, const std::vector<Permutation>& patterns) : n_(n) {
        if (n < 0) throw std::invalid_argument("enumeration length must be nonnegative");
        if (n > 31) throw std::invalid_argument("enumeration length above hard limit 31");
        matchers_.reserve(patterns.size());
        for (const auto& q : patterns) matchers_.emplace_back(q);
        prefix_.reserve(static_cast<std::size_t>(n));
        cut_mins_.reserve(static_cast<std::size_t>(n));
        undo_.resize(static_cast<std::size_t>(n));
    }

    /// Visits every avoider of length n once, in lexicographic one-line order.
    /// leaf(values, skew_block_count) is called per avoider.
    template <class Leaf>
    void run(Leaf&& leaf) {
        if (n_ == 0) {
            leaf(std::span<const int>{}, 1);
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (!try_push(v)) continue;
            descend(leaf);
            pop();
        }
    }

    /// Restricts the walk to permutations starting with `first`.
    template <class Leaf>
    void run_subtree(int first, Leaf&& leaf) {
        if (!try_push(first)) return;
        descend(leaf);
        pop();
    }

private:
    struct Undo {
        std::vector<int> popped_cuts;
        bool pushed_cut = false;
        int prev_min = 0;
    };

    template <class Leaf>
    void descend(Leaf& leaf) {
        if (static_cast<int>(prefix_.size()) == n_) {
            leaf(std::span<const int>(prefix_), static_cast<int>(cut_mins_.size()) + 1);
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_ & (std::uint32_t{1} << v)) continue;
            if (!try_push(v)) continue;
            descend(leaf);
            pop();
        }
    }

    bool try_push(int v) {
        Undo& u = undo_[prefix_.size()];
        u.popped_cuts.clear();
        while (!cut_mins_.empty() && cut_mins_.back() <= v) {
            u.popped_cuts.push_back(cut_mins_.back());
            cut_mins_.pop_back();
        }
        u.pushed_cut = !prefix_.empty() && min_so_far_ > v;
        if (u.pushed_cut) cut_mins_.push_back(min_so_far_);
        u.prev_min = min_so_far_;
        min_so_far_ = prefix_.empty() ? v : std::min(min_so_far_, v);
        prefix_.push_back(v);
        used_ |= std::uint32_t{1} << v;
        for (const auto& m : matchers_) {
            if (m.match_ends_at_last(prefix_)) {
                pop();
                return false;
            }
        }
        return true;
    }

    void pop() {
        const int v = prefix_.back();
        prefix_.pop_back();
        used_ &= ~(std::uint32_t{1} << v);
        Undo& u = undo_[prefix_.size()];
        min_so_far_ = u.prev_min;
        if (u.pushed_cut) cut_mins_.pop_back();
        for (auto it = u.popped_cuts.rbegin(); it != u.popped_cuts.rend(); ++it) {
            cut_mins_.push_back(*it);
        }
    }

    int n_;
    std::vector<PatternMatcher> matchers_;
    std::vector<int> prefix_;
    std::uint32_t used_ = 0;
    int min_so_far_ = 0;
    std::vector<int> cut_mins_;
    std::vector<Undo> undo_;
};

/// Runs one independent subtree per first entry and hands each result slot to
/// `merge` in first-entry order, so the outcome does not depend on scheduling.
template <class Slot, class Work>
std::vector<Slot> run_partitioned(int n, int threads, Work&& work) {
    std::vector<Slot> slots(static_cast<std::size_t>(n));
    if (threads <= 1) {
        for (int first = 1; first <= n; ++first) work(first, slots[static_cast<std::size_t>(first - 1)]);
        return slots;
    }
    std::atomic<int> next{1};
    auto drain = [&] {
        for (;;) {
            const int first = next.fetch_add(1);
            if (first > n) break;
            work(first, slots[static_cast<std::size_t>(first - 1)]);
        }
    };
    const int workers = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int i = 0; i < workers - 1; ++i) pool.emplace_back(drain);
    drain();
    for (auto& t : pool) t.join();
    return slots;
}

}  // namespace detail

/// Restartable stream of the S-avoiding permutations of length n, in
/// lexicographic order of one-line notation. for_each may be called any
/// number of times. No resource guard: callers wanting one go through the
/// counting operations.
class AvoiderEnumerator {
public:
    AvoiderEnumerator(int n, PatternSet patterns) : n_(n), patterns_(std::move(patterns)) {
        if (n < 0) throw std::invalid_argument("enumerate_avoiders: n must be nonnegative");
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        detail::PrefixDfs dfs(n_, patterns_.patterns());
        dfs.run([&](std::span<const int> values, int /*blocks*/) {
            fn(Permutation(std::vector<int>(values.begin(), values.end())));
        });
    }

    std::vector<Permutation> to_vector() const {
        std::vector<Permutation> out;
        for_each([&](Permutation p) { out.push_back(std::move(p)); });
        return out;
    }

    int n() const { return n_; }
    const PatternSet& patterns() const { return patterns_; }

private:
    int n_;
    PatternSet patterns_;
};

inline AvoiderEnumerator enumerate_avoiders(int n, const PatternSet& S) {
    return AvoiderEnumerator(n, S);
}

namespace detail {

inline void check_ceiling(int n, const EnumerationOptions& opts, const char* what) {
    if (n > opts.n_ceiling) {
        throw resource_limit_error(std::string(what) + ": n = " + std::to_string(n) +
                                   " exceeds the ceiling " + std::to_string(opts.n_ceiling) +
                                   " (raise n_ceiling to override)");
    }
}

}  // namespace detail

/// Av_n(S), computed without materializing the avoiders.
inline Int count_avoiders(int n, const PatternSet& S, const EnumerationOptions& opts = {}) {
    if (n < 0) throw std::invalid_argument("count_avoiders: n must be nonnegative");
    detail::check_ceiling(n, opts, "count_avoiders");
    if (n == 0) return Int(1);
    auto slots = detail::run_partitioned<Int>(n, opts.threads, [&](int first, Int& slot) {
        detail::PrefixDfs dfs(n, S.patterns());
        dfs.run_subtree(first, [&](std::span<const int>, int) { ++slot; });
    });
    Int total = 0;
    for (const Int& s : slots) total += s;
    return total;
}

/// Fills the full table Av_{n,l}(S) for n <= n_max by one pruned walk per
/// length, classifying each avoider with the incrementally maintained skew
/// block count.
inline CountTable count_by_blocks(int n_max, const PatternSet& S,
                                  const EnumerationOptions& opts = {}) {
    if (n_max < 1) throw std::invalid_argument("count_by_blocks: n_max must be at least 1");
    detail::check_ceiling(n_max, opts, "count_by_blocks");
    CountTable table{S, n_max, {}, {}};
    table.total.assign(static_cast<std::size_t>(n_max) + 1, Int(0));
    table.total[0] = 1;
    table.by_blocks.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
        auto slots = detail::run_partitioned<std::vector<Int>>(
            n, opts.threads, [&](int first, std::vector<Int>& slot) {
                slot.assign(static_cast<std::size_t>(n), Int(0));
                detail::PrefixDfs dfs(n, S.patterns());
                dfs.run_subtree(first, [&](std::span<const int>, int blocks) {
                    ++slot[static_cast<std::size_t>(blocks - 1)];
                });
            });
        std::vector<Int> row(static_cast<std::size_t>(n), Int(0));
        for (const auto& slot : slots) {
            for (std::size_t ell = 0; ell < row.size(); ++ell) row[ell] += slot[ell];
        }
        for (const Int& c : row) table.total[static_cast<std::size_t>(n)] += c;
        table.by_blocks[static_cast<std::size_t>(n)] = std::move(row);
    }
    return table;
}

}  // namespace skewav
