#pragma once

// Permutation products and coproducts: superinfiltration, shifted concatenation,
// supershuffle and the three comparison operations on the Malvenuto-Reutenauer side.

#include "vinc/lincomb.hpp"

namespace vinc {

using PermComb = LinComb<Permutation>;
using PermTensor = Tensor2<Permutation, Permutation>;
using PermComb2 = LinComb<PermTensor>;

/// How hosts gamma are produced for a fixed cover.
enum class Enumeration {
    Interleave,  // merge the two value chains; only admissible gamma are visited
    BruteForce,  // scan all of S_n
};

/// Every gamma in S_n with st(gamma|A) = sigma and st(gamma|B) = tau, for the given position sets.
/// A and B are sorted 1-based sets whose union is [n].
std::vector<Permutation> compatible_hosts(const Permutation& sigma, const IntSet& a, const Permutation& tau,
                                          const IntSet& b, int n, Enumeration mode = Enumeration::Interleave);

PermComb superinfiltration(const Permutation& sigma, const Permutation& tau,
                           Enumeration mode = Enumeration::Interleave);
PermComb superinfiltration(const PermComb& x, const PermComb& y);

PermComb2 delta_superinfiltration(const Permutation& sigma);

Permutation perm_concat(const Permutation& alpha, const Permutation& beta);
PermComb perm_concat(const PermComb& x, const PermComb& y);

PermComb2 delta_conc(const Permutation& sigma);

PermComb supershuffle(const Permutation& sigma, const Permutation& tau,
                      Enumeration mode = Enumeration::Interleave);

/// Disjoint-cover version of delta_superinfiltration.
PermComb2 delta_supershuffle(const Permutation& sigma);

PermComb mr_star(const Permutation& sigma, const Permutation& tau);
PermComb mr_star_prime(const Permutation& sigma, const Permutation& tau);
PermComb2 delta_star(const Permutation& sigma);

Integer pc_count(const Permutation& host, const Permutation& sigma);
Rational pc_eval(const Permutation& host, const PermComb& x);

/// Calls f on each k-subset of [n] (sorted, 1-based), in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    IntSet cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        f(static_cast<const IntSet&>(cur));
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) return;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Calls f(A, B) for each cover A u B = [n]; disjoint restricts to A n B = {}.
template <class F>
void for_each_cover(int n, bool disjoint, F&& f) {
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    const int base = disjoint ? 2 : 3;
    while (true) {
        IntSet a, b;
        for (int x = 0; x < n; ++x) {
            // 0: A only, 1: B only, 2: both
            if (label[static_cast<std::size_t>(x)] != 1) a.push_back(x + 1);
            if (label[static_cast<std::size_t>(x)] != 0) b.push_back(x + 1);
        }
        f(static_cast<const IntSet&>(a), static_cast<const IntSet&>(b));
        int x = 0;
        while (x < n && label[static_cast<std::size_t>(x)] == base - 1) label[static_cast<std::size_t>(x++)] = 0;
        if (x == n) return;
        ++label[static_cast<std::size_t>(x)];
    }
}

}  // namespace vinc
