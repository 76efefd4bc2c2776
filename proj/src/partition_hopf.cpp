#include "vinc/partition_hopf.hpp"

#include "vinc/guards.hpp"

namespace vinc {

PartComb conc_product(const PartComb& x, const PartComb& y) {
    return bilinear_extend<Composition>(x, y, [](const Composition& a, const Composition& b) {
        return single(composition_concat(a, b));
    });
}

namespace {

constexpr int kInA = 1, kInB = 2;

// Sweeps [n] left to right. Each position gets a label (A, A', or both) and each
// adjacent pair inside one block of s must be joined by a block of I or of I'.
// A joined pair is exactly what keeps the glued blocks overlap-connected.
PartComb2 gluing_sweep(const Composition& s, bool disjoint) {
    using State = std::tuple<std::vector<int>, std::vector<int>, int>;
    const int n = s.size();
    PartComb2 out;
    if (n == 0) {
        out.add(PartTensor(Composition{}, Composition{}), 1);
        return out;
    }
    std::vector<int> block_id(static_cast<std::size_t>(n) + 1);
    {
        int x = 1;
        for (std::size_t k = 0; k < s.parts().size(); ++k)
            for (int r = 0; r < s.parts()[k]; ++r) block_id[static_cast<std::size_t>(x++)] = static_cast<int>(k);
    }
    std::vector<int> labels = disjoint ? std::vector<int>{kInA, kInB} : std::vector<int>{kInA, kInB, kInA | kInB};

    std::map<State, Integer> cur;
    for (int l : labels) {
        std::vector<int> i, j;
        if (l & kInA) i.push_back(1);
        if (l & kInB) j.push_back(1);
        cur[State{i, j, l}] += 1;
    }
    for (int x = 2; x <= n; ++x) {
        const bool same = block_id[static_cast<std::size_t>(x)] == block_id[static_cast<std::size_t>(x - 1)];
        std::map<State, Integer> next;
        for (const auto& [st, cnt] : cur) {
            const auto& [i, j, last] = st;
            for (int l : labels) {
                const bool can_i = same && (last & kInA) && (l & kInA);
                const bool can_j = same && (last & kInB) && (l & kInB);
                for (int ji = 0; ji <= (can_i ? 1 : 0); ++ji)
                    for (int jj = 0; jj <= (can_j ? 1 : 0); ++jj) {
                        if (same && !ji && !jj) continue;
                        std::vector<int> ni = i, nj = j;
                        if (l & kInA) {
                            if (ji) ++ni.back(); else ni.push_back(1);
                        }
                        if (l & kInB) {
                            if (jj) ++nj.back(); else nj.push_back(1);
                        }
                        next[State{std::move(ni), std::move(nj), l}] += cnt;
                    }
            }
        }
        cur = std::move(next);
    }
    for (const auto& [st, cnt] : cur)
        out.add(PartTensor(Composition(std::get<0>(st)), Composition(std::get<1>(st))), Rational(cnt));
    return out;
}

// Every placement of the blocks of s, in order, as disjoint intervals inside [n].
void placements(const Composition& s, int n, std::size_t k, int from, std::vector<Interval>& cur,
                std::vector<std::vector<Interval>>& out) {
    if (k == s.parts().size()) {
        out.push_back(cur);
        return;
    }
    int rest = 0;
    for (std::size_t r = k; r < s.parts().size(); ++r) rest += s.parts()[r];
    for (int start = from; start + rest - 1 <= n; ++start) {
        cur.push_back({start, s.parts()[k]});
        placements(s, n, k + 1, start + s.parts()[k], cur, out);
        cur.pop_back();
    }
}

}  // namespace

PartComb2 coqspart(const Composition& s) {
    check_guard("coqspart", s.size(), guard_partition());
    return gluing_sweep(s, false);
}

PartComb2 coqspart(const PartComb& x) {
    return linear_extend<PartTensor>(x, [](const Composition& s) { return coqspart(s); });
}

PartComb2 shuffle_coproduct(const Composition& s) {
    check_guard("shuffle_coproduct", s.size(), guard_partition());
    return gluing_sweep(s, true);
}

PartComb qspart(const Composition& s, const Composition& t) {
    check_guard("qspart", s.size() + t.size(), guard_partition());
    PartComb out;
    const int p = s.size(), q = t.size();
    for (int n = std::max(p, q); n <= p + q; ++n) {
        auto ps = block_placements(s, n);
        auto qs = block_placements(t, n);
        std::vector<char> covered(static_cast<std::size_t>(n) + 1);
        for (const auto& a : ps) {
            for (const auto& b : qs) {
                std::fill(covered.begin(), covered.end(), 0);
                for (const auto* side : {&a, &b})
                    for (const auto& iv : side->blocks())
                        for (int x = iv.start; x <= iv.last(); ++x) covered[static_cast<std::size_t>(x)] = 1;
                bool full = true;
                for (int x = 1; x <= n && full; ++x) full = covered[static_cast<std::size_t>(x)];
                if (!full) continue;
                out.add(standardize_partition(glue(a, b)), 1);
            }
        }
    }
    return out;
}

PartComb qspart(const PartComb& x, const PartComb& y) {
    return bilinear_extend<Composition>(x, y, [](const Composition& a, const Composition& b) { return qspart(a, b); });
}

std::vector<LabeledIntervalPartition> block_placements(const Composition& s, int n) {
    std::vector<std::vector<Interval>> raw;
    std::vector<Interval> cur;
    placements(s, n, 0, 1, cur, raw);
    std::vector<LabeledIntervalPartition> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

PartComb2 deconc(const Composition& s) {
    PartComb2 out;
    const auto& parts = s.parts();
    for (std::size_t k = 0; k <= parts.size(); ++k)
        out.add(PartTensor(Composition(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(k))),
                           Composition(std::vector<int>(parts.begin() + static_cast<long>(k), parts.end()))),
                1);
    return out;
}

PartComb2 deconc(const PartComb& x) {
    return linear_extend<PartTensor>(x, [](const Composition& s) { return deconc(s); });
}

Integer section_coefficient(const Composition& s, const Composition& t, const Composition& g) {
    Rational c = coqspart(g).coeff(PartTensor(s, t));
    return c.get_num();
}

Rational counit(const PartComb& x) { return x.coeff(Composition{}); }

PartComb unit(const Rational& c) { return PartComb(Composition{}, c); }

}  // namespace vinc
