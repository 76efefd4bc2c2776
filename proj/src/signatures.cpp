#include "vinc/signatures.hpp"

#include <gmp.h>

#include "vinc/guards.hpp"

namespace vinc {

namespace {

void require_host(const Composition& blocks, const Permutation& perm) {
    if (blocks.size() != perm.size())
        throw std::invalid_argument("host blocks sum to " + std::to_string(blocks.size()) + " but permutation has length " +
                                    std::to_string(perm.size()));
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

Integer ipc_count(const Composition& host, const Composition& s) {
    Integer c = 0;
    for_each_subset(host.size(), s.size(), [&](const IntSet& a) {
        if (is_finer_or_equal(s, composition_restriction(host, a))) ++c;
    });
    return c;
}

Integer ipc_single_block(int n, const Composition& s) {
    const long k = static_cast<long>(s.block_count());
    return binomial(n - s.size() + k, k);
}

Integer ipc_chen_eval(const Composition& host, const Composition& s) {
    // f[r]: ways for the host blocks seen so far to hold the first r parts of s
    const std::size_t k = s.block_count();
    std::vector<Integer> f(k + 1, 0);
    f[0] = 1;
    for (int n : host.parts()) {
        std::vector<Integer> g(k + 1, 0);
        for (std::size_t r0 = 0; r0 <= k; ++r0) {
            if (f[r0] == 0) continue;
            std::vector<int> chunk;
            for (std::size_t r = r0; r <= k; ++r) {
                if (r > r0) chunk.push_back(s.parts()[r - 1]);
                Integer w = ipc_single_block(n, Composition(chunk));
                if (w == 0) break;
                g[r] += f[r0] * w;
            }
        }
        f = std::move(g);
    }
    return f[k];
}

Rational ipc_eval(const Composition& host, const PartComb& x) {
    Rational r = 0;
    for (const auto& [s, c] : x) r += c * Rational(ipc_chen_eval(host, s));
    return r;
}

Integer gpc_count(const Composition& host_blocks, const Permutation& host_perm, const VincularPattern& pat) {
    require_host(host_blocks, host_perm);
    Integer c = 0;
    for_each_subset(host_perm.size(), pat.size(), [&](const IntSet& a) {
        if (restrict_permutation(host_perm, a) == pat.perm() &&
            is_finer_or_equal(pat.blocks(), composition_restriction(host_blocks, a)))
            ++c;
    });
    return c;
}

Rational gpc_eval(const Composition& host_blocks, const Permutation& host_perm, const VincComb& x) {
    require_host(host_blocks, host_perm);
    // patterns grouped by size and permutation, so one subset scan per size serves all of them
    std::map<int, std::map<Permutation, std::vector<std::pair<Composition, Rational>>>> by_size;
    for (const auto& [v, c] : x) by_size[v.size()][v.perm()].emplace_back(v.blocks(), c);
    Rational total = 0;
    for (const auto& [k, by_perm] : by_size) {
        for_each_subset(host_perm.size(), k, [&](const IntSet& a) {
            auto it = by_perm.find(restrict_permutation(host_perm, a));
            if (it == by_perm.end()) return;
            Composition shape = composition_restriction(host_blocks, a);
            for (const auto& [blocks, c] : it->second)
                if (is_finer_or_equal(blocks, shape)) total += c;
        });
    }
    return total;
}

unsigned join_mask(const Composition& s) {
    unsigned m = 0;
    int pos = 0;
    for (int p : s.parts()) {
        for (int r = 1; r < p; ++r) m |= 1u << (pos + r - 1);
        pos += p;
    }
    return m;
}

int lehmer_code(std::span<const int> perm) {
    int code = 0;
    const std::size_t k = perm.size();
    for (std::size_t i = 0; i < k; ++i) {
        int smaller = 0;
        for (std::size_t j = i + 1; j < k; ++j) smaller += perm[j] < perm[i];
        code = code * static_cast<int>(k - i) + smaller;
    }
    return code;
}

ShapeCode shape_code(const VincularPattern& pat) {
    return {pat.size(), lehmer_code(pat.perm().one_line()), join_mask(pat.blocks())};
}

namespace {

constexpr int kMaxTable = 6;

int factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

// Sums hist over every mask containing `mask` (the finer pattern counts every coarser shape).
long long superset_sum(const long long* row, int k, unsigned mask) {
    if (k <= 1) return row[0];
    const unsigned full = (1u << (k - 1)) - 1;
    const unsigned free_bits = full & ~mask;
    long long c = 0;
    for (unsigned sub = free_bits;; sub = (sub - 1) & free_bits) {
        c += row[mask | sub];
        if (sub == 0) break;
    }
    return c;
}

template <class F>
void walk_subsets(int n, int kmax, F&& f) {
    for (int k = 0; k <= std::min(kmax, n); ++k) for_each_subset(n, k, [&](const IntSet& a) { f(k, a); });
}

}  // namespace

GpcTable::GpcTable(const Composition& host_blocks, const Permutation& host_perm, int max_pattern_size)
    : k_(max_pattern_size) {
    require_host(host_blocks, host_perm);
    if (k_ > kMaxTable) throw std::invalid_argument("GpcTable supports patterns up to size 6");
    hist_.resize(static_cast<std::size_t>(k_) + 1);
    for (int k = 0; k <= k_; ++k)
        hist_[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(factorial(k)) << (k > 0 ? k - 1 : 0), 0);
    std::vector<int> block_id(static_cast<std::size_t>(host_perm.size()) + 1);
    {
        int x = 1;
        for (std::size_t b = 0; b < host_blocks.parts().size(); ++b)
            for (int r = 0; r < host_blocks.parts()[b]; ++r) block_id[static_cast<std::size_t>(x++)] = static_cast<int>(b);
    }
    const auto& lam = host_perm.one_line();
    int vals[kMaxTable];
    walk_subsets(host_perm.size(), k_, [&](int k, const IntSet& a) {
        unsigned joins = 0;
        for (int i = 0; i < k; ++i) {
            vals[i] = lam[static_cast<std::size_t>(a[static_cast<std::size_t>(i)] - 1)];
            if (i > 0 && a[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(i - 1)] + 1 &&
                block_id[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] ==
                    block_id[static_cast<std::size_t>(a[static_cast<std::size_t>(i - 1)])])
                joins |= 1u << (i - 1);
        }
        int code = lehmer_code(std::span<const int>(vals, static_cast<std::size_t>(k)));
        ++hist_[static_cast<std::size_t>(k)][(static_cast<std::size_t>(code) << (k > 0 ? k - 1 : 0)) | joins];
    });
}

long long GpcTable::count(const ShapeCode& c) const {
    if (c.k > k_) throw std::invalid_argument("pattern larger than the table was built for");
    const auto& row = hist_[static_cast<std::size_t>(c.k)];
    return superset_sum(row.data() + (static_cast<std::size_t>(c.perm) << (c.k > 0 ? c.k - 1 : 0)), c.k, c.joins);
}

Integer GpcTable::count(const VincularPattern& pat) const {
    return Integer(static_cast<long>(count(shape_code(pat))));
}

Rational GpcTable::eval(const VincComb& x) const {
    Rational r = 0;
    for (const auto& [v, c] : x) r += c * Rational(static_cast<long>(count(shape_code(v))));
    return r;
}

IpcTable::IpcTable(const Composition& host, int max_pattern_size) : k_(max_pattern_size) {
    if (k_ > 20) throw std::invalid_argument("IpcTable supports patterns up to size 20");
    hist_.resize(static_cast<std::size_t>(k_) + 1);
    for (int k = 0; k <= k_; ++k) hist_[static_cast<std::size_t>(k)].assign(std::size_t{1} << (k > 0 ? k - 1 : 0), 0);
    walk_subsets(host.size(), k_, [&](int k, const IntSet& a) {
        ++hist_[static_cast<std::size_t>(k)][join_mask(composition_restriction(host, a))];
    });
}

Integer IpcTable::count(const Composition& s) const {
    if (s.size() > k_) throw std::invalid_argument("pattern larger than the table was built for");
    return Integer(static_cast<long>(superset_sum(hist_[static_cast<std::size_t>(s.size())].data(), s.size(), join_mask(s))));
}

Rational IpcTable::eval(const PartComb& x) const {
    Rational r = 0;
    for (const auto& [s, c] : x) r += c * Rational(count(s));
    return r;
}

namespace {
void chen_rec(const std::vector<VincularPattern>& factors, std::size_t f, const VincularPattern& rest,
              std::vector<VincularPattern>& pieces, Integer value, std::vector<ChenTerm>& out) {
    if (f + 1 == factors.size()) {
        pieces.push_back(rest);
        out.push_back({pieces, value * gpc_count(factors[f].blocks(), factors[f].perm(), rest)});
        pieces.pop_back();
        return;
    }
    for (int cut : vincular_split_points(rest)) {
        auto [head, tail] = split_at(rest, cut);
        pieces.push_back(head);
        chen_rec(factors, f + 1, tail, pieces, value * gpc_count(factors[f].blocks(), factors[f].perm(), head), out);
        pieces.pop_back();
    }
}
}  // namespace

std::vector<ChenTerm> gpc_chen_terms(const std::vector<VincularPattern>& factors, const VincularPattern& pat) {
    std::vector<ChenTerm> out;
    if (factors.empty()) {
        if (pat.empty()) out.push_back({{}, 1});
        return out;
    }
    std::vector<VincularPattern> pieces;
    chen_rec(factors, 0, pat, pieces, 1, out);
    return out;
}

VincComb delay_expansion(const Permutation& sigma, const std::vector<int>& gaps) {
    const int m = sigma.size();
    if (m == 0) {
        if (!gaps.empty()) throw std::invalid_argument("gaps given for the empty permutation");
        return vinc_unit(1);
    }
    if (static_cast<int>(gaps.size()) != m - 1)
        throw std::invalid_argument("need " + std::to_string(m - 1) + " gaps, got " + std::to_string(gaps.size()));
    IntSet slots{1};
    for (int g : gaps) {
        if (g < 0) throw std::invalid_argument("gaps must be >= 0");
        slots.push_back(slots.back() + g + 1);
    }
    const int big = slots.back();
    check_guard("delay expansion", big, guard_permutations());
    IntSet free_pos;
    for (int x = 1, j = 0; x <= big; ++x) {
        if (slots[static_cast<std::size_t>(j)] == x) ++j;
        else free_pos.push_back(x);
    }
    VincComb out;
    const Composition one_block({big});
    // values for the slots, then every arrangement of the remaining values
    for_each_subset(big, m, [&](const IntSet& vals) {
        std::vector<int> rest;
        for (int x = 1, j = 0; x <= big; ++x) {
            if (j < m && vals[static_cast<std::size_t>(j)] == x) ++j;
            else rest.push_back(x);
        }
        std::vector<int> gamma(static_cast<std::size_t>(big));
        for (int i = 0; i < m; ++i)
            gamma[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)] - 1)] =
                vals[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)] - 1)];
        do {
            for (std::size_t i = 0; i < rest.size(); ++i) gamma[static_cast<std::size_t>(free_pos[i] - 1)] = rest[i];
            out.add(VincularPattern(one_block, Permutation(gamma)), 1);
        } while (std::next_permutation(rest.begin(), rest.end()));
    });
    return out;
}

Integer gpc_delay_count(const Composition& host_blocks, const Permutation& host_perm, const Permutation& sigma,
                        const std::vector<int>& gaps) {
    Rational r = gpc_eval(host_blocks, host_perm, delay_expansion(sigma, gaps));
    return r.get_num();
}

Integer pattern_count_in_series(const std::vector<double>& series, const VincularPattern& pat) {
    Permutation lambda = standardize_word<double>(series);
    Composition host = series.empty() ? Composition{} : Composition({static_cast<int>(series.size())});
    return gpc_count(host, lambda, pat);
}

}  // namespace vinc
