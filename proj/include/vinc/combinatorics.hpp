#pragma once

// Interval partitions, compositions, permutations and the set operations
// (cliques, restriction, standardization, gluing) everything else builds on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vinc {

/// Sorted, duplicate-free set of positive integers.
using IntSet = std::vector<int>;

/// The integer interval {start, ..., start + len - 1}.
struct Interval {
    int start = 1;
    int len = 1;

    int last() const { return start + len - 1; }
    bool contains(int x) const { return x >= start && x <= last(); }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A finite set of pairwise disjoint intervals, kept sorted by start.
class LabeledIntervalPartition {
public:
    LabeledIntervalPartition() = default;
    /// Throws std::invalid_argument if the blocks overlap or are malformed.
    explicit LabeledIntervalPartition(std::vector<Interval> blocks);

    const std::vector<Interval>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }
    /// Number of elements of the ground set.
    int size() const;
    IntSet ground_set() const;
    /// Index of the block containing x, or -1.
    int block_of(int x) const;

    std::string to_string() const;

    friend bool operator==(const LabeledIntervalPartition&, const LabeledIntervalPartition&) = default;

private:
    std::vector<Interval> blocks_;
};

/// Standardized interval partition of [n], stored as its block sizes.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    std::size_t block_count() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Renders as `[n1,n2,...]`; the empty composition is `[]`.
    std::string to_string() const;

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
    /// Graded by size, then lexicographic on the parts.
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A bijection of [n] in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

    /// Digit string form, e.g. `"2134"`; multi-digit values need the vector constructor.
    static Permutation from_digits(std::string_view digits);
    static Permutation identity(int n);

    const std::vector<int>& one_line() const { return one_line_; }
    int size() const { return static_cast<int>(one_line_.size()); }
    bool empty() const { return one_line_.empty(); }
    int operator[](std::size_t i) const { return one_line_[i]; }

    /// Digits when n <= 9 (`3142`), otherwise `(3 1 4 2 ...)`; empty is `()`.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

private:
    std::vector<int> one_line_;
};

enum class PartialOrderResult { Less, Equal, Greater, Incomparable };

std::string to_string(PartialOrderResult r);

// ---------------------------------------------------------------------------
// Set operations on labeled interval partitions.

/// Maximal runs of consecutive integers in A.
LabeledIntervalPartition cliques(std::span<const int> a);

/// The cliques of A seen through the blocks of I: {I_j ∩ c} minus the empty set.
LabeledIntervalPartition restrict(const LabeledIntervalPartition& i, std::span<const int> a);

Composition standardize_partition(const LabeledIntervalPartition& i);

/// Merges overlap-connected blocks of I and J.
LabeledIntervalPartition glue(const LabeledIntervalPartition& i, const LabeledIntervalPartition& j);

/// Refinement order; different ground sets are Incomparable.
PartialOrderResult compare(const LabeledIntervalPartition& i, const LabeledIntervalPartition& j);

/// True iff every block of `fine` sits inside a block of `coarse` and the ground sets agree.
bool refines(const LabeledIntervalPartition& fine, const LabeledIntervalPartition& coarse);

/// The unique refinement X of I with std(X) = s, if std(I) >= s.
std::optional<LabeledIntervalPartition> refine_to(const LabeledIntervalPartition& i, const Composition& s);

/// The blocks {1..n1}, {n1+1..n1+n2}, ... of s.
LabeledIntervalPartition canonical_partition(const Composition& s);

// ---------------------------------------------------------------------------
// Compositions.

Composition composition_concat(const Composition& s, const Composition& t);

/// s <= t: same size and every part of t is a sum of a consecutive run of parts of s.
bool is_finer_or_equal(const Composition& s, const Composition& t);

PartialOrderResult compare(const Composition& s, const Composition& t);

/// std(canonical(s)(A)) without materializing the labeled partition.
Composition composition_restriction(const Composition& s, std::span<const int> a);

/// All compositions of n in canonical order.
std::vector<Composition> compositions_of(int n);

/// Every s with s <= t, in canonical order.
std::vector<Composition> refinements_of(const Composition& t);

// ---------------------------------------------------------------------------
// Words and permutations.

/// Relative order of w restricted to the 1-based positions in A, ties broken left to right.
/// Throws std::out_of_range on a bad position.
template <class T>
Permutation subword_standardize(std::span<const T> w, std::span<const int> positions) {
    std::vector<std::size_t> order(positions.size());
    for (std::size_t k = 0; k < positions.size(); ++k) {
        int p = positions[k];
        if (p < 1 || static_cast<std::size_t>(p) > w.size())
            throw std::out_of_range("position " + std::to_string(p) + " outside word");
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return w[positions[a] - 1] < w[positions[b] - 1];
    });
    std::vector<int> out(positions.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]] = static_cast<int>(rank) + 1;
    return Permutation(std::move(out));
}

template <class T>
Permutation standardize_word(std::span<const T> w) {
    std::vector<int> all(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) all[i] = static_cast<int>(i) + 1;
    return subword_standardize<T>(w, all);
}

/// st(sigma|_A) for a 1-based position set A.
Permutation restrict_permutation(const Permutation& sigma, std::span<const int> positions);

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> permutations_of(int n);

IntSet range_set(int lo, int hi);

}  // namespace vinc
