#pragma once

// Brute-force reference implementations written straight from the definitions.
// They share only the value types with the library, never its algorithms.

#include <algorithm>
#include <numeric>
#include <vector>

#include "vinc/guards.hpp"
#include "vinc/hopf_tools.hpp"

namespace oracle {

using namespace vinc;

inline std::vector<int> st(const std::vector<int>& w) {
    std::vector<int> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
    std::vector<int> out(w.size());
    for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
    return out;
}

inline std::vector<int> pick(const std::vector<int>& w, const std::vector<int>& pos) {
    std::vector<int> out;
    for (int p : pos) out.push_back(w[p - 1]);
    return out;
}

// block id per element 1..n of canonical(s)
inline std::vector<int> block_ids(const Composition& s) {
    std::vector<int> id(static_cast<std::size_t>(s.size()) + 1, -1);
    int x = 1, b = 0;
    for (int p : s.parts()) {
        for (int r = 0; r < p; ++r) id[x++] = b;
        ++b;
    }
    return id;
}

// std(L(A)) through the block structure of L
inline std::vector<int> restricted_shape(const Composition& host, const std::vector<int>& a) {
    auto id = block_ids(host);
    std::vector<int> parts;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k > 0 && a[k] == a[k - 1] + 1 && id[a[k]] == id[a[k - 1]])
            ++parts.back();
        else
            parts.push_back(1);
    }
    return parts;
}

// s <= t via cut sets
inline bool finer(const std::vector<int>& s, const std::vector<int>& t) {
    auto cuts = [](const std::vector<int>& c) {
        std::vector<int> out;
        int acc = 0;
        for (int p : c) out.push_back(acc += p);
        return out;
    };
    auto cs = cuts(s), ct = cuts(t);
    if (cs.empty() || ct.empty()) return cs.empty() && ct.empty();
    if (cs.back() != ct.back()) return false;
    return std::includes(cs.begin(), cs.end(), ct.begin(), ct.end());
}

// All subsets of [n] as sorted vectors.
inline std::vector<std::vector<int>> subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned m = 0; m < (1u << n); ++m) {
        std::vector<int> a;
        for (int x = 0; x < n; ++x)
            if (m >> x & 1) a.push_back(x + 1);
        out.push_back(a);
    }
    return out;
}

// Labels 0 = A only, 1 = B only, 2 = both.
template <class F>
void covers(int n, bool disjoint, F&& f) {
    const int base = disjoint ? 2 : 3;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= base;
    for (int code = 0; code < total; ++code) {
        std::vector<int> a, b;
        int c = code;
        for (int x = 1; x <= n; ++x) {
            int l = c % base;
            c /= base;
            if (l != 1) a.push_back(x);
            if (l != 0) b.push_back(x);
        }
        f(a, b);
    }
}

// Every interval partition of the set a, as a block list.
inline std::vector<std::vector<std::vector<int>>> interval_partitions(const std::vector<int>& a) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::size_t> joinable;
    for (std::size_t k = 1; k < a.size(); ++k)
        if (a[k] == a[k - 1] + 1) joinable.push_back(k);
    for (unsigned m = 0; m < (1u << joinable.size()); ++m) {
        std::vector<std::vector<int>> blocks;
        std::size_t j = 0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            bool join = false;
            if (j < joinable.size() && joinable[j] == k) {
                join = m >> j & 1;
                ++j;
            }
            if (join)
                blocks.back().push_back(a[k]);
            else
                blocks.push_back({a[k]});
        }
        out.push_back(blocks);
    }
    return out;
}

inline std::vector<int> shape(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> out;
    for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
    return out;
}

// Union-find gluing: elements sharing a block of either side are connected.
inline std::vector<std::vector<int>> glue_blocks(const std::vector<std::vector<int>>& i, const std::vector<std::vector<int>>& j) {
    int n = 0;
    for (const auto* side : {&i, &j})
        for (const auto& b : *side)
            for (int x : b) n = std::max(n, x);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1), present(static_cast<std::size_t>(n) + 1, 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto* side : {&i, &j})
        for (const auto& b : *side)
            for (int x : b) {
                present[x] = 1;
                parent[find(x)] = find(b.front());
            }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(static_cast<std::size_t>(n) + 1, -1);
    for (int x = 1; x <= n; ++x) {
        if (!present[x]) continue;
        int r = find(x);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.push_back({});
        }
        out[slot[r]].push_back(x);
    }
    return out;
}

inline bool is_canonical(const std::vector<std::vector<int>>& blocks, const Composition& s) {
    int start = 1;
    if (blocks.size() != s.block_count()) return false;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (static_cast<int>(blocks[k].size()) != s.parts()[k]) return false;
        for (int r = 0; r < s.parts()[k]; ++r)
            if (blocks[k][r] != start + r) return false;
        start += s.parts()[k];
    }
    return true;
}

inline PartComb2 coqspart(const Composition& s) {
    PartComb2 out;
    covers(s.size(), false, [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (const auto& i : interval_partitions(a))
            for (const auto& j : interval_partitions(b))
                if (is_canonical(glue_blocks(i, j), s)) out.add(PartTensor(Composition(shape(i)), Composition(shape(j))), 1);
    });
    return out;
}

// The unique interval partition of a with shape s, if any.
inline std::optional<std::vector<std::vector<int>>> admit(const std::vector<int>& a, const Composition& s) {
    for (const auto& p : interval_partitions(a))
        if (shape(p) == s.parts()) return p;
    return std::nullopt;
}

inline PartComb qspart(const Composition& s, const Composition& t) {
    PartComb out;
    for (int n = std::max(s.size(), t.size()); n <= s.size() + t.size(); ++n)
        covers(n, false, [&](const std::vector<int>& a, const std::vector<int>& b) {
            auto i = admit(a, s);
            auto j = admit(b, t);
            if (i && j) out.add(Composition(shape(glue_blocks(*i, *j))), 1);
        });
    return out;
}

inline PartComb2 shuffle_coproduct(const Composition& s) {
    PartComb2 out;
    covers(s.size(), true, [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (const auto& i : interval_partitions(a))
            for (const auto& j : interval_partitions(b))
                if (is_canonical(glue_blocks(i, j), s)) out.add(PartTensor(Composition(shape(i)), Composition(shape(j))), 1);
    });
    return out;
}

inline std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline PermComb superinfiltration(const Permutation& s, const Permutation& t, bool disjoint = false) {
    PermComb out;
    int lo = disjoint ? s.size() + t.size() : std::max(s.size(), t.size());
    for (int n = lo; n <= s.size() + t.size(); ++n)
        for (const auto& g : all_perms(n))
            covers(n, disjoint, [&](const std::vector<int>& a, const std::vector<int>& b) {
                if (st(pick(g, a)) == s.one_line() && st(pick(g, b)) == t.one_line()) out.add(Permutation(g), 1);
            });
    return out;
}

inline VincComb qsgen(const VincularPattern& x, const VincularPattern& y) {
    VincComb out;
    for (int n = std::max(x.size(), y.size()); n <= x.size() + y.size(); ++n)
        covers(n, false, [&](const std::vector<int>& a, const std::vector<int>& b) {
            auto i = admit(a, x.blocks());
            auto j = admit(b, y.blocks());
            if (!i || !j) return;
            Composition g(shape(glue_blocks(*i, *j)));
            for (const auto& gam : all_perms(n))
                if (st(pick(gam, a)) == x.perm().one_line() && st(pick(gam, b)) == y.perm().one_line())
                    out.add(VincularPattern(g, Permutation(gam)), 1);
        });
    return out;
}

inline long ipc(const Composition& host, const Composition& s) {
    long c = 0;
    for (const auto& a : subsets(host.size()))
        if (static_cast<int>(a.size()) == s.size() && finer(s.parts(), restricted_shape(host, a))) ++c;
    return c;
}

inline long gpc(const Composition& host, const Permutation& lam, const VincularPattern& pat) {
    long c = 0;
    for (const auto& a : subsets(host.size()))
        if (static_cast<int>(a.size()) == pat.size() && finer(pat.blocks().parts(), restricted_shape(host, a)) &&
            st(pick(lam.one_line(), a)) == pat.perm().one_line())
            ++c;
    return c;
}

inline long pc(const Permutation& lam, const Permutation& s) {
    long c = 0;
    for (const auto& a : subsets(lam.size()))
        if (static_cast<int>(a.size()) == s.size() && st(pick(lam.one_line(), a)) == s.one_line()) ++c;
    return c;
}

// Occurrences of sigma at positions p, p+g1+1, ... inside a single-block host.
inline long delay_window(const Permutation& lam, const Permutation& sigma, const std::vector<int>& gaps) {
    long c = 0;
    for (int start = 1; start <= lam.size(); ++start) {
        std::vector<int> pos{start};
        for (int g : gaps) pos.push_back(pos.back() + g + 1);
        if (pos.back() > lam.size()) continue;
        if (st(pick(lam.one_line(), pos)) == sigma.one_line()) ++c;
    }
    return c;
}

// Antipode from the recursion S(s) = -sum S(a) * b over splits s = a.b with b nonempty.
inline PartComb antipode(const Composition& s) {
    if (s.empty()) return single(Composition{});
    PartComb out;
    const auto& p = s.parts();
    for (std::size_t k = 0; k < p.size(); ++k) {
        Composition a(std::vector<int>(p.begin(), p.begin() + static_cast<long>(k)));
        Composition b(std::vector<int>(p.begin() + static_cast<long>(k), p.end()));
        out -= vinc::qspart(antipode(a), single(b));
    }
    return out;
}

}  // namespace oracle
