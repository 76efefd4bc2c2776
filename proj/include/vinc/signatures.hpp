#pragma once

// Counting functionals: interval-partition counts (IPC) and vincular pattern counts (GPC).

#include <map>
#include <span>

#include "vinc/vincular_hopf.hpp"

namespace vinc {

/// #{A : |A| = |s|, std(L(A)) >= s}, by subset enumeration.
Integer ipc_count(const Composition& host, const Composition& s);

/// Closed form for a single host block of length n: binom(n - |s| + k, k), k = number of parts.
Integer ipc_single_block(int n, const Composition& s);

/// Same value as ipc_count, splitting s across the host blocks and using ipc_single_block.
Integer ipc_chen_eval(const Composition& host, const Composition& s);

Rational ipc_eval(const Composition& host, const PartComb& x);

/// #{A : std(L(A)) >= s, st(Lambda|A) = sigma}. Throws std::invalid_argument if |L| != |Lambda|.
Integer gpc_count(const Composition& host_blocks, const Permutation& host_perm, const VincularPattern& pat);

Rational gpc_eval(const Composition& host_blocks, const Permutation& host_perm, const VincComb& x);

/// Dense index of a pattern of size k <= 6: Lehmer code of the permutation and the set of joined
/// adjacent positions (bit i set when entries i and i+1 share a block).
struct ShapeCode {
    int k = 0;
    int perm = 0;
    unsigned joins = 0;
};

ShapeCode shape_code(const VincularPattern& pat);
int lehmer_code(std::span<const int> perm);

/// Counts for every pattern of size at most k (k <= 6) from one pass over the subsets of the host.
class GpcTable {
public:
    GpcTable(const Composition& host_blocks, const Permutation& host_perm, int max_pattern_size);

    Integer count(const VincularPattern& pat) const;
    long long count(const ShapeCode& c) const;
    Rational eval(const VincComb& x) const;
    int max_pattern_size() const { return k_; }

private:
    int k_;
    // hist_[k][perm * 2^(k-1) + joins]: subsets of size k with exactly that shape
    std::vector<std::vector<long long>> hist_;
};

/// Same idea for IPC; shapes are join masks only.
class IpcTable {
public:
    IpcTable(const Composition& host, int max_pattern_size);
    Integer count(const Composition& s) const;
    Rational eval(const PartComb& x) const;

private:
    int k_;
    std::vector<std::vector<long long>> hist_;
};

/// Join mask of a composition: bit i set when i+1 and i+2 lie in one part.
unsigned join_mask(const Composition& s);

/// One term of the Chen expansion of a count over a host written as a concatenation of factors.
struct ChenTerm {
    std::vector<VincularPattern> pieces;  // one per factor
    Integer value;                        // product of the per-factor counts
};

/// Expands <GPC(x_1 (.) ... (.) x_r), pat> through the iterated coproduct of pat.
std::vector<ChenTerm> gpc_chen_terms(const std::vector<VincularPattern>& factors, const VincularPattern& pat);

/// The sum of the vincular patterns encoding "sigma with exactly gaps[i] skipped positions between
/// consecutive entries": a single block of size |sigma| + sum(gaps) with every filling of the gap slots.
VincComb delay_expansion(const Permutation& sigma, const std::vector<int>& gaps);

Integer gpc_delay_count(const Composition& host_blocks, const Permutation& host_perm, const Permutation& sigma,
                        const std::vector<int>& gaps);

/// Standardizes the series (ties left to right) and counts pat with the whole series as one block.
Integer pattern_count_in_series(const std::vector<double>& series, const VincularPattern& pat);

}  // namespace vinc
