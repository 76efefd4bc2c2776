#include "vinc/vincular_hopf.hpp"

#include <charconv>

#include "vinc/guards.hpp"

namespace vinc {

VincularPattern::VincularPattern(Composition blocks, Permutation perm) : blocks_(std::move(blocks)), perm_(std::move(perm)) {
    if (blocks_.size() != perm_.size())
        throw std::invalid_argument("vincular pattern: block sizes sum to " + std::to_string(blocks_.size()) +
                                    " but permutation has length " + std::to_string(perm_.size()));
}

namespace {

std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t from = 0;
    while (true) {
        auto at = s.find(sep, from);
        if (at == std::string_view::npos) {
            out.push_back(s.substr(from));
            return out;
        }
        out.push_back(s.substr(from, at - from));
        from = at + 1;
    }
}

int parse_entry(std::string_view tok, std::string_view whole) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || v < 1)
        throw ParseError("bad entry '" + std::string(tok) + "' in pattern '" + std::string(whole) + "'");
    return v;
}

}  // namespace

VincularPattern VincularPattern::parse(std::string_view text) {
    std::string_view t = text;
    if (t.empty() || t == "|") return {};
    auto segs = split_on(t, '|');
    if (segs.size() > 1 && segs.back().empty()) segs.pop_back();
    const bool wide = t.find(',') != std::string_view::npos;

    auto build = [&](bool digits) -> std::optional<VincularPattern> {
        std::vector<int> parts, values;
        for (auto seg : segs) {
            if (seg.empty()) throw ParseError("empty block in pattern '" + std::string(text) + "'");
            if (wide) {
                auto items = split_on(seg, ',');
                for (auto it : items) values.push_back(parse_entry(it, text));
                parts.push_back(static_cast<int>(items.size()));
            } else if (digits) {
                for (char c : seg) {
                    if (c < '1' || c > '9') return std::nullopt;
                    values.push_back(c - '0');
                }
                parts.push_back(static_cast<int>(seg.size()));
            } else {
                values.push_back(parse_entry(seg, text));
                parts.push_back(1);
            }
        }
        try {
            return VincularPattern(Composition(parts), Permutation(values));
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    };
    if (!wide)
        if (auto v = build(true)) return *v;
    if (auto v = build(false)) return *v;
    throw ParseError("pattern '" + std::string(text) + "' is not a permutation split into blocks");
}

std::string VincularPattern::to_string() const {
    if (perm_.empty()) return "|";
    const bool wide = perm_.size() > 9;
    std::string out;
    std::size_t i = 0;
    for (std::size_t k = 0; k < blocks_.parts().size(); ++k) {
        if (k) out += '|';
        for (int r = 0; r < blocks_.parts()[k]; ++r, ++i) {
            if (wide) {
                if (r) out += ',';
                out += std::to_string(perm_[i]);
            } else {
                out += static_cast<char>('0' + perm_[i]);
            }
        }
    }
    if (blocks_.block_count() == 1) out += '|';
    return out;
}

std::strong_ordering operator<=>(const VincularPattern& a, const VincularPattern& b) {
    if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
}

VincularPattern genconc(const VincularPattern& x, const VincularPattern& y) {
    return VincularPattern(composition_concat(x.blocks(), y.blocks()), perm_concat(x.perm(), y.perm()));
}

VincComb genconc(const VincComb& x, const VincComb& y) {
    return bilinear_extend<VincularPattern>(x, y, [](const VincularPattern& a, const VincularPattern& b) {
        return single(genconc(a, b));
    });
}

std::vector<int> vincular_split_points(const VincularPattern& x) {
    std::vector<int> out{0};
    int cut = 0, mx = 0;
    std::size_t i = 0;
    for (int p : x.blocks().parts()) {
        for (int r = 0; r < p; ++r) mx = std::max(mx, x.perm()[i++]);
        cut += p;
        if (mx == cut) out.push_back(cut);
    }
    return out;
}

std::pair<VincularPattern, VincularPattern> split_at(const VincularPattern& x, int cut) {
    std::vector<int> left_parts, right_parts;
    int acc = 0;
    for (int p : x.blocks().parts()) {
        (acc < cut ? left_parts : right_parts).push_back(p);
        acc += p;
    }
    const auto& v = x.perm().one_line();
    std::vector<int> left(v.begin(), v.begin() + cut), right;
    for (std::size_t j = static_cast<std::size_t>(cut); j < v.size(); ++j) right.push_back(v[j] - cut);
    return {VincularPattern(Composition(left_parts), Permutation(left)),
            VincularPattern(Composition(right_parts), Permutation(right))};
}

VincComb2 deconcgen(const VincularPattern& x) {
    VincComb2 out;
    for (int cut : vincular_split_points(x)) {
        auto [l, r] = split_at(x, cut);
        out.add(VincTensor(l, r), 1);
    }
    return out;
}

VincComb2 deconcgen(const VincComb& x) {
    return linear_extend<VincTensor>(x, [](const VincularPattern& v) { return deconcgen(v); });
}

namespace {

struct CoverWalk {
    const VincularPattern& x;
    std::vector<int> block_id;
    IntSet a, b;
    std::vector<int> i_parts, j_parts;
    VincComb2 out;

    explicit CoverWalk(const VincularPattern& v) : x(v), block_id(static_cast<std::size_t>(v.size()) + 1) {
        int pos = 1;
        for (std::size_t k = 0; k < v.blocks().parts().size(); ++k)
            for (int r = 0; r < v.blocks().parts()[k]; ++r) block_id[static_cast<std::size_t>(pos++)] = static_cast<int>(k);
    }

    void leaf() {
        out.add(VincTensor(VincularPattern(Composition(i_parts), restrict_permutation(x.perm(), a)),
                           VincularPattern(Composition(j_parts), restrict_permutation(x.perm(), b))),
                1);
    }

    // pos: next position to label; last: label of pos-1 (bit 1 = in A, bit 2 = in A')
    void walk(int pos, int last) {
        if (pos > x.size()) {
            leaf();
            return;
        }
        const bool same = pos > 1 && block_id[static_cast<std::size_t>(pos)] == block_id[static_cast<std::size_t>(pos - 1)];
        for (int l : {1, 2, 3}) {
            const bool can_i = same && (last & 1) && (l & 1);
            const bool can_j = same && (last & 2) && (l & 2);
            for (int ji = 0; ji <= (can_i ? 1 : 0); ++ji)
                for (int jj = 0; jj <= (can_j ? 1 : 0); ++jj) {
                    if (same && !ji && !jj) continue;
                    if (l & 1) {
                        a.push_back(pos);
                        if (ji) ++i_parts.back(); else i_parts.push_back(1);
                    }
                    if (l & 2) {
                        b.push_back(pos);
                        if (jj) ++j_parts.back(); else j_parts.push_back(1);
                    }
                    walk(pos + 1, l);
                    if (l & 1) {
                        a.pop_back();
                        if (ji) --i_parts.back(); else i_parts.pop_back();
                    }
                    if (l & 2) {
                        b.pop_back();
                        if (jj) --j_parts.back(); else j_parts.pop_back();
                    }
                }
        }
    }
};

}  // namespace

VincComb2 coqsgen(const VincularPattern& x) {
    check_guard("coqsgen", x.size(), guard_vincular());
    CoverWalk w(x);
    w.walk(1, 0);
    return std::move(w.out);
}

VincComb2 coqsgen(const VincComb& x) {
    return linear_extend<VincTensor>(x, [](const VincularPattern& v) { return coqsgen(v); });
}

VincComb qsgen(const VincularPattern& x, const VincularPattern& y, Enumeration mode) {
    const int p = x.size(), q = y.size();
    check_guard("qsgen", p + q, guard_vincular());
    VincComb out;
    for (int n = std::max(p, q); n <= p + q; ++n) {
        auto ps = block_placements(x.blocks(), n);
        auto qs = block_placements(y.blocks(), n);
        for (const auto& a : ps) {
            IntSet aset = a.ground_set();
            for (const auto& b : qs) {
                IntSet bset = b.ground_set();
                IntSet uni;
                std::set_union(aset.begin(), aset.end(), bset.begin(), bset.end(), std::back_inserter(uni));
                if (static_cast<int>(uni.size()) != n) continue;
                Composition g = standardize_partition(glue(a, b));
                for (auto& gamma : compatible_hosts(x.perm(), aset, y.perm(), bset, n, mode))
                    out.add(VincularPattern(g, std::move(gamma)), 1);
            }
        }
    }
    return out;
}

VincComb qsgen(const VincComb& x, const VincComb& y) {
    return bilinear_extend<VincularPattern>(x, y, [](const VincularPattern& a, const VincularPattern& b) {
        return qsgen(a, b);
    });
}

VincComb embed_psi(const Composition& s) {
    check_guard("psi", s.size(), guard_permutations());
    VincComb out;
    for (auto& p : permutations_of(s.size())) out.add(VincularPattern(s, std::move(p)), 1);
    return out;
}

VincComb embed_psi(const PartComb& x) {
    return linear_extend<VincularPattern>(x, [](const Composition& s) { return embed_psi(s); });
}

VincularPattern embed_phi(const Permutation& sigma) {
    return VincularPattern(Composition(std::vector<int>(static_cast<std::size_t>(sigma.size()), 1)), sigma);
}

VincComb embed_phi(const PermComb& x) {
    return linear_extend<VincularPattern>(x, [](const Permutation& p) { return single(embed_phi(p)); });
}

Rational counit(const VincComb& x) { return x.coeff(VincularPattern{}); }

VincComb vinc_unit(const Rational& c) { return VincComb(VincularPattern{}, c); }

}  // namespace vinc
