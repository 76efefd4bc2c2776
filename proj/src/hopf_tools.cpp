#include "vinc/hopf_tools.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"

#include "vinc/guards.hpp"

namespace vinc {

// ---------------------------------------------------------------------------
// Takeuchi antipode

namespace {

// Sum over k of (-1)^k m^(k-1) o (id - u eps)^(x)k o Delta^(k-1); `splits(x, k)` lists the ways
// to cut x into k nonempty pieces. One extra k is evaluated and must vanish.
template <class B, class Splits, class Mul>
LinComb<B> takeuchi(const B& x, Splits&& splits, Mul&& mul) {
    LinComb<B> out;
    if (basis_size(x) == 0) {
        out.add(x, 1);
        return out;
    }
    const int deg = basis_size(x);
    for (int k = 1; k <= deg + 1; ++k) {
        LinComb<B> term;
        for (const auto& pieces : splits(x, k)) {
            LinComb<B> acc = single(pieces[0]);
            for (std::size_t i = 1; i < pieces.size(); ++i) acc = mul(acc, single(pieces[i]));
            term += acc;
        }
        if (k == deg + 1) {
            if (!term.empty()) throw std::logic_error("Takeuchi series did not truncate at the filtration degree");
            break;
        }
        out += (k % 2 ? Rational(-1) : Rational(1)) * term;
    }
    return out;
}

// All increasing choices of k-1 interior cut points from `cuts`.
void choose_cuts(const std::vector<int>& cuts, std::size_t from, int need, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (need == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= cuts.size(); ++i) {
        cur.push_back(cuts[i]);
        choose_cuts(cuts, i + 1, need - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Composition>> composition_splits(const Composition& s, int k) {
    std::vector<std::vector<Composition>> out;
    const int b = static_cast<int>(s.block_count());
    if (k > b) return out;
    std::vector<int> inner;
    for (int i = 1; i < b; ++i) inner.push_back(i);
    std::vector<std::vector<int>> choices;
    std::vector<int> cur;
    choose_cuts(inner, 0, k - 1, cur, choices);
    for (auto& c : choices) {
        c.insert(c.begin(), 0);
        c.push_back(b);
        std::vector<Composition> pieces;
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            pieces.emplace_back(std::vector<int>(s.parts().begin() + c[i], s.parts().begin() + c[i + 1]));
        out.push_back(std::move(pieces));
    }
    return out;
}

std::vector<std::vector<VincularPattern>> vincular_splits(const VincularPattern& v, int k) {
    std::vector<std::vector<VincularPattern>> out;
    std::vector<int> points = vincular_split_points(v);
    std::vector<int> inner(points.begin() + 1, points.end() - 1);
    std::vector<std::vector<int>> choices;
    std::vector<int> cur;
    if (k - 1 > static_cast<int>(inner.size())) return out;
    choose_cuts(inner, 0, k - 1, cur, choices);
    for (const auto& c : choices) {
        std::vector<VincularPattern> pieces;
        VincularPattern rest = v;
        int done = 0;
        for (int cut : c) {
            auto [head, tail] = split_at(rest, cut - done);
            pieces.push_back(head);
            rest = tail;
            done = cut;
        }
        pieces.push_back(rest);
        out.push_back(std::move(pieces));
    }
    return out;
}

}  // namespace

PartComb takeuchi_antipode(const Composition& s) {
    check_guard("antipode", s.size(), guard_partition());
    return takeuchi(s, composition_splits, [](const PartComb& a, const PartComb& b) { return qspart(a, b); });
}

PartComb takeuchi_antipode(const PartComb& x) {
    return linear_extend<Composition>(x, [](const Composition& s) { return takeuchi_antipode(s); });
}

VincComb takeuchi_antipode(const VincularPattern& v) {
    check_guard("antipode", v.size(), guard_vincular());
    return takeuchi(v, vincular_splits, [](const VincComb& a, const VincComb& b) { return qsgen(a, b); });
}

VincComb takeuchi_antipode(const VincComb& x) {
    return linear_extend<VincularPattern>(x, [](const VincularPattern& v) { return takeuchi_antipode(v); });
}

std::pair<PartComb, PartComb> antipode_convolutions(const Composition& s) {
    PartComb left, right;
    for (const auto& [t, c] : deconc(s)) {
        left += c * qspart(takeuchi_antipode(t.get<0>()), single(t.get<1>()));
        right += c * qspart(single(t.get<0>()), takeuchi_antipode(t.get<1>()));
    }
    return {left, right};
}

std::pair<VincComb, VincComb> antipode_convolutions(const VincularPattern& v) {
    VincComb left, right;
    for (const auto& [t, c] : deconcgen(v)) {
        left += c * qsgen(takeuchi_antipode(t.get<0>()), single(t.get<1>()));
        right += c * qsgen(single(t.get<0>()), takeuchi_antipode(t.get<1>()));
    }
    return {left, right};
}

int block_degree(const PartComb& x) {
    int d = -1;
    for (const auto& [s, c] : x) d = std::max(d, static_cast<int>(s.block_count()));
    return d;
}

// ---------------------------------------------------------------------------
// Reports

std::string LawReport::to_json() const {
    nlohmann::ordered_json j;
    j["law"] = law;
    j["bound"] = bound;
    j["exhaustive_bound"] = exhaustive_bound;
    j["seed"] = seed;
    j["checked"] = checked;
    j["passed"] = passed();
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json e;
        e["inputs"] = f.inputs;
        e["lhs"] = f.lhs;
        e["rhs"] = f.rhs;
        j["failures"].push_back(e);
    }
    return j.dump(2);
}

std::string LawReport::to_text() const {
    std::ostringstream os;
    os << law << ": " << (passed() ? "PASS" : "FAIL") << " (bound " << bound << ", exhaustive to " << exhaustive_bound
       << ", seed " << seed << ", " << checked << " checks, " << failures.size() << " failures)";
    for (const auto& f : failures) os << "\n  " << f.inputs << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs;
    return os.str();
}

// ---------------------------------------------------------------------------
// Law harness

namespace {

using Rng = std::mt19937_64;

std::string str(const Rational& q) { return rational_string(q); }
std::string str(const Integer& z) { return z.get_str(); }
std::string str(long long v) { return std::to_string(v); }
template <class B>
std::string str(const LinComb<B>& x) { return x.to_string(); }

struct Ctx {
    LawReport& rep;

    template <class L>
    void expect_eq(const std::function<std::string()>& inputs, const L& lhs, const L& rhs) {
        ++rep.checked;
        if (!(lhs == rhs)) rep.failures.push_back({inputs(), str(lhs), str(rhs)});
    }
    void expect_true(const std::function<std::string()>& inputs, bool ok, const std::string& lhs,
                     const std::string& rhs) {
        ++rep.checked;
        if (!ok) rep.failures.push_back({inputs(), lhs, rhs});
    }
};

Composition random_composition(int n, Rng& rng) {
    std::vector<int> parts;
    if (n == 0) return {};
    int cur = 1;
    for (int i = 1; i < n; ++i) {
        if (rng() & 1) {
            parts.push_back(cur);
            cur = 1;
        } else {
            ++cur;
        }
    }
    parts.push_back(cur);
    return Composition(parts);
}

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

VincularPattern random_pattern(int n, Rng& rng) { return {random_composition(n, rng), random_permutation(n, rng)}; }

std::vector<VincularPattern> patterns_of(int n) {
    std::vector<VincularPattern> out;
    auto perms = permutations_of(n);
    for (const auto& p : perms)
        for (const auto& c : compositions_of(n)) out.emplace_back(c, p);
    std::sort(out.begin(), out.end());
    return out;
}

template <class T>
std::vector<T> upto(int k, const std::function<std::vector<T>(int)>& of) {
    std::vector<T> out;
    for (int n = 0; n <= k; ++n)
        for (auto& x : of(n)) out.push_back(std::move(x));
    return out;
}

// Instances of size n: everything when exhaustive, otherwise `spots` random draws.
struct Source {
    bool exhaustive;
    int spots;
    Rng& rng;

    template <class T>
    std::vector<T> items(int n, const std::function<std::vector<T>(int)>& all,
                         const std::function<T(int, Rng&)>& rnd) {
        if (exhaustive) return all(n);
        std::vector<T> out;
        for (int i = 0; i < spots; ++i) out.push_back(rnd(n, rng));
        return out;
    }
    std::vector<Composition> comps(int n) {
        return items<Composition>(n, compositions_of, random_composition);
    }
    std::vector<Permutation> perms(int n) {
        return items<Permutation>(n, permutations_of, random_permutation);
    }
    std::vector<VincularPattern> pats(int n) {
        return items<VincularPattern>(n, patterns_of, random_pattern);
    }

    // pairs (x, y) with |x| + |y| = n
    template <class T>
    std::vector<std::pair<T, T>> pairs(int n, const std::function<std::vector<T>(int)>& all,
                                       const std::function<T(int, Rng&)>& rnd) {
        std::vector<std::pair<T, T>> out;
        if (exhaustive) {
            for (int a = 0; a <= n; ++a) {
                auto xs = all(a), ys = all(n - a);
                for (const auto& x : xs)
                    for (const auto& y : ys) out.emplace_back(x, y);
            }
        } else {
            for (int i = 0; i < spots; ++i) {
                int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
                out.emplace_back(rnd(a, rng), rnd(n - a, rng));
            }
        }
        return out;
    }
    auto comp_pairs(int n) { return pairs<Composition>(n, compositions_of, random_composition); }
    auto perm_pairs(int n) { return pairs<Permutation>(n, permutations_of, random_permutation); }
    auto pat_pairs(int n) { return pairs<VincularPattern>(n, patterns_of, random_pattern); }

    template <class T>
    std::vector<std::tuple<T, T, T>> triples(int n, const std::function<std::vector<T>(int)>& all,
                                             const std::function<T(int, Rng&)>& rnd) {
        std::vector<std::tuple<T, T, T>> out;
        if (exhaustive) {
            for (int a = 0; a <= n; ++a)
                for (int b = 0; a + b <= n; ++b) {
                    auto xs = all(a), ys = all(b), zs = all(n - a - b);
                    for (const auto& x : xs)
                        for (const auto& y : ys)
                            for (const auto& z : zs) out.emplace_back(x, y, z);
                }
        } else {
            for (int i = 0; i < spots; ++i) {
                int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
                int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n - a + 1));
                out.emplace_back(rnd(a, rng), rnd(b, rng), rnd(n - a - b, rng));
            }
        }
        return out;
    }
};

using Body = std::function<void(Ctx&, int, Source&, int)>;  // ctx, size, source, pattern size

struct LawDef {
    LawInfo info;
    int default_pattern_size;
    Body body;
};

template <class A, class B>
std::string show(const A& a, const B& b) {
    return "x=" + basis_string(a) + " y=" + basis_string(b);
}

// Random interval partition with ground set inside [m].
LabeledIntervalPartition random_lip(int m, Rng& rng) {
    std::vector<Interval> blocks;
    int prev = -1;
    for (int x = 1; x <= m; ++x) {
        if (rng() % 2) continue;
        if (prev == x - 1 && (rng() % 2) && !blocks.empty())
            ++blocks.back().len;
        else
            blocks.push_back({x, 1});
        prev = x;
    }
    return LabeledIntervalPartition(blocks);
}

std::vector<LabeledIntervalPartition> all_lips(int m) {
    std::vector<LabeledIntervalPartition> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        IntSet a;
        for (int x = 1; x <= m; ++x)
            if (mask & (1u << (x - 1))) a.push_back(x);
        auto base = standardize_partition(cliques(a));
        for (const auto& r : refinements_of(base)) out.push_back(*refine_to(cliques(a), r));
    }
    return out;
}

// ---- partition side

void law_glue_assoc(Ctx& c, int n, Source& src, int) {
    auto check = [&](const LabeledIntervalPartition& i, const LabeledIntervalPartition& j,
                     const LabeledIntervalPartition& k) {
        auto l = glue(glue(i, j), k), r = glue(i, glue(j, k));
        c.expect_true([&] { return "I=" + i.to_string() + " J=" + j.to_string() + " K=" + k.to_string(); }, l == r,
                      l.to_string(), r.to_string());
    };
    if (src.exhaustive) {
        if (n > 3) return;
        auto all = all_lips(n);
        for (const auto& i : all)
            for (const auto& j : all)
                for (const auto& k : all) {
                    if (i.ground_set().empty() && j.ground_set().empty() && k.ground_set().empty() && n > 0) continue;
                    check(i, j, k);
                }
        for (const auto& i : all) {
            LabeledIntervalPartition e;
            c.expect_true([&] { return "unit I=" + i.to_string(); }, glue(i, e) == i && glue(e, i) == i,
                          glue(i, e).to_string(), i.to_string());
        }
    }
}

void law_coassoc_coqspart(Ctx& c, int n, Source& src, int) {
    for (const auto& s : src.comps(n)) {
        auto [l, r] = coassociativity_sides(s, [](const Composition& x) { return coqspart(x); });
        c.expect_eq([&] { return "s=" + s.to_string(); }, l, r);
    }
}

void law_cocomm_coqspart(Ctx& c, int n, Source& src, int) {
    for (const auto& s : src.comps(n)) {
        auto d = coqspart(s);
        c.expect_eq([&] { return "s=" + s.to_string(); }, d, swap_legs(d));
    }
}

void law_coassoc_deconc(Ctx& c, int n, Source& src, int) {
    for (const auto& s : src.comps(n)) {
        auto [l, r] = coassociativity_sides(s, [](const Composition& x) { return deconc(x); });
        c.expect_eq([&] { return "s=" + s.to_string(); }, l, r);
    }
}

void law_bialgebra_conc_coqspart(Ctx& c, int n, Source& src, int) {
    auto conc = [](const Composition& a, const Composition& b) { return single(composition_concat(a, b)); };
    for (const auto& [s, t] : src.comp_pairs(n)) {
        auto lhs = coqspart(composition_concat(s, t));
        auto rhs = tensor_product(coqspart(s), coqspart(t), conc, conc);
        c.expect_eq([&] { return show(s, t); }, lhs, rhs);
    }
}

void law_bialgebra_qspart_deconc(Ctx& c, int n, Source& src, int) {
    auto qs = [](const Composition& a, const Composition& b) { return qspart(a, b); };
    for (const auto& [s, t] : src.comp_pairs(n)) {
        auto lhs = deconc(qspart(s, t));
        auto rhs = tensor_product(deconc(s), deconc(t), qs, qs);
        c.expect_eq([&] { return show(s, t); }, lhs, rhs);
    }
}

void law_assoc_qspart(Ctx& c, int n, Source& src, int) {
    for (const auto& [s, t, u] : src.triples<Composition>(n, compositions_of, random_composition)) {
        auto lhs = qspart(qspart(single(s), single(t)), single(u));
        auto rhs = qspart(single(s), qspart(single(t), single(u)));
        c.expect_eq([&] { return show(s, t) + " z=" + u.to_string(); }, lhs, rhs);
    }
}

void law_comm_qspart(Ctx& c, int n, Source& src, int) {
    for (const auto& [s, t] : src.comp_pairs(n)) {
        c.expect_eq([&] { return show(s, t); }, qspart(s, t), qspart(t, s));
        if (s.empty()) c.expect_eq([&] { return "unit " + t.to_string(); }, qspart(s, t), single(t));
    }
}

// n is the larger factor size here.
void law_oracle_qspart_section(Ctx& c, int n, Source& src, int) {
    std::vector<std::pair<Composition, Composition>> todo;
    if (src.exhaustive) {
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) {
                if (std::max(a, b) != n) continue;
                for (const auto& s : compositions_of(a))
                    for (const auto& t : compositions_of(b)) todo.emplace_back(s, t);
            }
    } else {
        for (int i = 0; i < src.spots; ++i)
            todo.emplace_back(random_composition(n, src.rng),
                              random_composition(static_cast<int>(src.rng() % static_cast<std::uint64_t>(n + 1)), src.rng));
    }
    for (const auto& [s, t] : todo) {
        PartComb via;
        for (int g = std::max(s.size(), t.size()); g <= s.size() + t.size(); ++g)
            for (const auto& h : compositions_of(g)) via.add(h, Rational(section_coefficient(s, t, h)));
        c.expect_eq([&] { return show(s, t); }, qspart(s, t), via);
    }
}

void law_grading_qspart(Ctx& c, int n, Source& src, int) {
    for (const auto& [s, t] : src.comp_pairs(n)) {
        bool ok = true;
        for (const auto& [g, k] : qspart(s, t)) {
            ok = ok && g.block_count() <= s.block_count() + t.block_count() && g.size() <= s.size() + t.size() &&
                 g.size() >= std::max(s.size(), t.size()) && k > 0;
        }
        c.expect_true([&] { return show(s, t); }, ok, "graded", "graded");
    }
}

void law_character_ipc(Ctx& c, int n, Source& src, int k) {
    auto pats = upto<Composition>(k, compositions_of);
    std::vector<std::tuple<Composition, Composition, PartComb>> prods;
    for (const auto& s : pats)
        for (const auto& t : pats) prods.emplace_back(s, t, qspart(s, t));
    for (const auto& host : src.comps(n)) {
        IpcTable tab(host, 2 * k);
        for (const auto& [s, t, st] : prods) {
            Rational lhs = Rational(tab.count(s) * tab.count(t));
            c.expect_eq([&] { return "L=" + host.to_string() + " " + show(s, t); }, lhs, tab.eval(st));
        }
    }
}

void law_chen_ipc(Ctx& c, int n, Source& src, int k) {
    const int kk = std::min(k, n);
    auto pats = upto<Composition>(kk, compositions_of);
    std::vector<PartComb2> splits;
    for (const auto& s : pats) splits.push_back(deconc(s));
    for (const auto& [l, m] : src.comp_pairs(n)) {
        IpcTable whole(composition_concat(l, m), kk), tl(l, kk), tm(m, kk);
        for (std::size_t i = 0; i < pats.size(); ++i) {
            Integer rhs = 0;
            for (const auto& [t, co] : splits[i]) rhs += tl.count(t.get<0>()) * tm.count(t.get<1>());
            c.expect_eq([&] { return "L=" + l.to_string() + " M=" + m.to_string() + " s=" + pats[i].to_string(); },
                        whole.count(pats[i]), rhs);
        }
    }
}

void law_oracle_ipc_chen(Ctx& c, int n, Source& src, int k) {
    auto pats = upto<Composition>(k, compositions_of);
    for (const auto& host : src.comps(n))
        for (const auto& s : pats)
            c.expect_eq([&] { return "L=" + host.to_string() + " s=" + s.to_string(); }, ipc_count(host, s),
                        ipc_chen_eval(host, s));
}

void law_single_block_ipc(Ctx& c, int n, Source&, int k) {
    if (n == 0) return;
    Composition host({n});
    for (int a = 1; a <= std::min(k, n); ++a)
        for (int b = 1; b <= std::min(k, n); ++b) {
            Composition sa({a}), sb({b});
            Integer prod = ipc_count(host, sa) * ipc_count(host, sb);
            Integer closed = Integer(n - a + 1) * Integer(n - b + 1);
            Rational via = ipc_eval(host, qspart(sa, sb));
            c.expect_true([&] { return "N=" + std::to_string(n) + " m=" + std::to_string(a) + " n=" + std::to_string(b); },
                          prod == closed && Rational(prod) == via, str(prod), str(closed) + " / " + str(via));
        }
}

void law_monotone_ipc(Ctx& c, int n, Source& src, int k) {
    for (const auto& host : src.comps(n))
        for (int sz = 0; sz <= k; ++sz) {
            auto all = compositions_of(sz);
            for (const auto& fine : all)
                for (const auto& coarse : all) {
                    if (!is_finer_or_equal(fine, coarse)) continue;
                    Integer a = ipc_count(host, fine), b = ipc_count(host, coarse);
                    c.expect_true([&] { return "L=" + host.to_string() + " s=" + fine.to_string() + " s'=" + coarse.to_string(); },
                                  a >= b, str(a), str(b));
                }
        }
}

void law_antipode_axiom(Ctx& c, int n, Source& src, int) {
    for (const auto& s : src.comps(n)) {
        auto [l, r] = antipode_convolutions(s);
        PartComb expect = unit(s.empty() ? 1 : 0);
        c.expect_eq([&] { return "s=" + s.to_string() + " (S (x) id)"; }, l, expect);
        c.expect_eq([&] { return "s=" + s.to_string() + " (id (x) S)"; }, r, expect);
    }
}

void law_phi_word_hom(Ctx& c, int n, Source& src, int) {
    for (const auto& [s, t] : src.comp_pairs(n)) {
        IntWord u = phi_inverse(s), v = phi_inverse(t);
        c.expect_true([&] { return "u=" + u.to_string() + " v=" + v.to_string(); },
                      phi(word_concat(u, v)) == composition_concat(phi(u), phi(v)),
                      phi(word_concat(u, v)).to_string(), composition_concat(phi(u), phi(v)).to_string());
        c.expect_eq([&] { return "qswrd u=" + u.to_string() + " v=" + v.to_string(); }, qswrd(u, v), qswrd(v, u));
    }
}

// ---- permutation side

void law_comm_superinf(Ctx& c, int n, Source& src, int) {
    for (const auto& [s, t] : src.perm_pairs(n)) {
        c.expect_eq([&] { return show(s, t); }, superinfiltration(s, t), superinfiltration(t, s));
        c.expect_eq([&] { return "supershuffle " + show(s, t); }, supershuffle(s, t), supershuffle(t, s));
    }
}

void law_oracle_superinf_interleave(Ctx& c, int n, Source& src, int) {
    for (const auto& [s, t] : src.perm_pairs(n)) {
        c.expect_eq([&] { return show(s, t); }, superinfiltration(s, t),
                    superinfiltration(s, t, Enumeration::BruteForce));
        c.expect_eq([&] { return "supershuffle " + show(s, t); }, supershuffle(s, t),
                    supershuffle(s, t, Enumeration::BruteForce));
    }
}

void law_duality_superinf(Ctx& c, int n, Source& src, int) {
    std::map<Permutation, PermComb2> dsi, dss;
    for (int g = 0; g <= n; ++g)
        for (const auto& p : permutations_of(g)) {
            dsi[p] = delta_superinfiltration(p);
            dss[p] = delta_supershuffle(p);
        }
    for (const auto& [s, t] : src.perm_pairs(n)) {
        PermComb via_i, via_s;
        for (const auto& [g, d] : dsi) via_i.add(g, d.coeff(PermTensor(s, t)));
        for (const auto& [g, d] : dss) via_s.add(g, d.coeff(PermTensor(s, t)));
        c.expect_eq([&] { return show(s, t); }, superinfiltration(s, t), via_i);
        c.expect_eq([&] { return "supershuffle " + show(s, t); }, supershuffle(s, t), via_s);
    }
}

void law_bialgebra_superinf(Ctx& c, int n, Source& src, int) {
    auto conc = [](const Permutation& a, const Permutation& b) { return single(perm_concat(a, b)); };
    for (const auto& [s, t] : src.perm_pairs(n)) {
        auto lhs = delta_superinfiltration(perm_concat(s, t));
        auto rhs = tensor_product(delta_superinfiltration(s), delta_superinfiltration(t), conc, conc);
        c.expect_eq([&] { return show(s, t); }, lhs, rhs);
    }
}

void law_character_pc(Ctx& c, int n, Source& src, int k) {
    auto pats = upto<Permutation>(k, permutations_of);
    std::vector<std::tuple<Permutation, Permutation, VincComb>> prods;
    for (const auto& s : pats)
        for (const auto& t : pats) prods.emplace_back(s, t, embed_phi(superinfiltration(s, t)));
    for (const auto& host : src.perms(n)) {
        GpcTable tab(embed_phi(host).blocks(), host, 2 * k);
        for (const auto& [s, t, st] : prods) {
            Rational lhs = Rational(tab.count(embed_phi(s)) * tab.count(embed_phi(t)));
            c.expect_eq([&] { return "host=" + host.to_string() + " " + show(s, t); }, lhs, tab.eval(st));
        }
    }
}

void law_chen_pc(Ctx& c, int n, Source& src, int k) {
    const int kk = std::min(k, n);
    auto pats = upto<Permutation>(kk, permutations_of);
    std::vector<PermComb2> splits;
    for (const auto& s : pats) splits.push_back(delta_conc(s));
    for (const auto& [l, m] : src.perm_pairs(n)) {
        Permutation whole = perm_concat(l, m);
        GpcTable tw(embed_phi(whole).blocks(), whole, kk), tl(embed_phi(l).blocks(), l, kk),
            tm(embed_phi(m).blocks(), m, kk);
        for (std::size_t i = 0; i < pats.size(); ++i) {
            long long rhs = 0;
            for (const auto& [t, co] : splits[i])
                rhs += tl.count(shape_code(embed_phi(t.get<0>()))) * tm.count(shape_code(embed_phi(t.get<1>())));
            c.expect_eq([&] { return "host=" + l.to_string() + "(.)" + m.to_string() + " sigma=" + pats[i].to_string(); },
                        tw.count(shape_code(embed_phi(pats[i]))), rhs);
        }
    }
}

void law_coassoc_deltaconc(Ctx& c, int n, Source& src, int) {
    for (const auto& s : src.perms(n)) {
        auto [l, r] = coassociativity_sides(s, [](const Permutation& x) { return delta_conc(x); });
        c.expect_eq([&] { return "sigma=" + s.to_string(); }, l, r);
    }
    for (const auto& [a, b, d] : src.triples<Permutation>(n, permutations_of, random_permutation)) {
        c.expect_true([&] { return "assoc " + show(a, b) + " z=" + d.to_string(); },
                      perm_concat(perm_concat(a, b), d) == perm_concat(a, perm_concat(b, d)),
                      perm_concat(perm_concat(a, b), d).to_string(), perm_concat(a, perm_concat(b, d)).to_string());
    }
}

// ---- vincular side

void law_coassoc_coqsgen(Ctx& c, int n, Source& src, int) {
    for (const auto& v : src.pats(n)) {
        auto [l, r] = coassociativity_sides(v, [](const VincularPattern& x) { return coqsgen(x); });
        c.expect_eq([&] { return "x=" + v.to_string(); }, l, r);
    }
}

void law_coassoc_deconcgen(Ctx& c, int n, Source& src, int) {
    for (const auto& v : src.pats(n)) {
        auto [l, r] = coassociativity_sides(v, [](const VincularPattern& x) { return deconcgen(x); });
        c.expect_eq([&] { return "x=" + v.to_string(); }, l, r);
    }
}

void law_bialgebra_genconc_coqsgen(Ctx& c, int n, Source& src, int) {
    auto conc = [](const VincularPattern& a, const VincularPattern& b) { return single(genconc(a, b)); };
    for (const auto& [x, y] : src.pat_pairs(n)) {
        auto lhs = coqsgen(genconc(x, y));
        auto rhs = tensor_product(coqsgen(x), coqsgen(y), conc, conc);
        c.expect_eq([&] { return show(x, y); }, lhs, rhs);
    }
}

void law_bialgebra_qsgen_deconcgen(Ctx& c, int n, Source& src, int) {
    auto qs = [](const VincularPattern& a, const VincularPattern& b) { return qsgen(a, b); };
    for (const auto& [x, y] : src.pat_pairs(n)) {
        auto lhs = deconcgen(qsgen(x, y));
        auto rhs = tensor_product(deconcgen(x), deconcgen(y), qs, qs);
        c.expect_eq([&] { return show(x, y); }, lhs, rhs);
    }
}

void law_assoc_qsgen(Ctx& c, int n, Source& src, int) {
    for (const auto& [x, y, z] : src.triples<VincularPattern>(n, patterns_of, random_pattern)) {
        auto lhs = qsgen(qsgen(single(x), single(y)), single(z));
        auto rhs = qsgen(single(x), qsgen(single(y), single(z)));
        c.expect_eq([&] { return show(x, y) + " z=" + z.to_string(); }, lhs, rhs);
    }
}

void law_comm_qsgen(Ctx& c, int n, Source& src, int) {
    for (const auto& [x, y] : src.pat_pairs(n)) {
        c.expect_eq([&] { return show(x, y); }, qsgen(x, y), qsgen(y, x));
        if (x.empty()) c.expect_eq([&] { return "unit " + y.to_string(); }, qsgen(x, y), single(y));
    }
}

void law_oracle_qsgen_interleave(Ctx& c, int n, Source& src, int) {
    for (const auto& [x, y] : src.pat_pairs(n))
        c.expect_eq([&] { return show(x, y); }, qsgen(x, y), qsgen(x, y, Enumeration::BruteForce));
}

void law_marginal_coqsgen(Ctx& c, int n, Source& src, int) {
    for (const auto& v : src.pats(n)) {
        PartComb2 forgot;
        for (const auto& [t, co] : coqsgen(v)) forgot.add(PartTensor(t.get<0>().blocks(), t.get<1>().blocks()), co);
        c.expect_eq([&] { return "x=" + v.to_string(); }, forgot, coqspart(v.blocks()));
    }
}

void law_character_gpc(Ctx& c, int n, Source& src, int k) {
    auto pats = upto<VincularPattern>(k, patterns_of);
    struct Prod {
        ShapeCode x, y;
        std::vector<std::pair<ShapeCode, long long>> terms;
        std::string label;
    };
    std::vector<Prod> prods;
    for (const auto& x : pats)
        for (const auto& y : pats) {
            Prod p{shape_code(x), shape_code(y), {}, show(x, y)};
            for (const auto& [v, co] : qsgen(x, y)) p.terms.emplace_back(shape_code(v), co.get_num().get_si());
            prods.push_back(std::move(p));
        }
    for (const auto& host : src.pats(n)) {
        GpcTable tab(host.blocks(), host.perm(), 2 * k);
        for (const auto& p : prods) {
            long long rhs = 0;
            for (const auto& [code, co] : p.terms) rhs += co * tab.count(code);
            c.expect_eq([&] { return "host=" + host.to_string() + " " + p.label; }, tab.count(p.x) * tab.count(p.y), rhs);
        }
    }
}

void law_chen_gpc(Ctx& c, int n, Source& src, int k) {
    const int kk = std::min(k, n);
    auto pats = upto<VincularPattern>(kk, patterns_of);
    struct Split {
        ShapeCode whole;
        std::vector<std::pair<ShapeCode, ShapeCode>> legs;
    };
    std::vector<Split> splits;
    for (const auto& x : pats) {
        Split s{shape_code(x), {}};
        for (const auto& [t, co] : deconcgen(x)) s.legs.emplace_back(shape_code(t.get<0>()), shape_code(t.get<1>()));
        splits.push_back(std::move(s));
    }
    // factor tables are shared by many pairs
    std::map<VincularPattern, GpcTable> cache;
    auto table = [&](const VincularPattern& h) -> const GpcTable& {
        auto it = cache.find(h);
        if (it == cache.end()) it = cache.emplace(h, GpcTable(h.blocks(), h.perm(), kk)).first;
        return it->second;
    };
    for (const auto& [l, m] : src.pat_pairs(n)) {
        VincularPattern whole = genconc(l, m);
        GpcTable tw(whole.blocks(), whole.perm(), kk);
        const GpcTable& tl = table(l);
        const GpcTable& tm = table(m);
        for (std::size_t i = 0; i < pats.size(); ++i) {
            long long rhs = 0;
            for (const auto& [a, b] : splits[i].legs) rhs += tl.count(a) * tm.count(b);
            c.expect_eq([&] { return "host=(" + l.to_string() + ")(.)(" + m.to_string() + ") x=" + pats[i].to_string(); },
                        tw.count(splits[i].whole), rhs);
        }
    }
}

void law_psi_hom(Ctx& c, int n, Source& src, int) {
    for (const auto& [s, t] : src.comp_pairs(n))
        c.expect_eq([&] { return show(s, t); }, embed_psi(qspart(s, t)), qsgen(embed_psi(s), embed_psi(t)));
    auto psi = [](const Composition& s) { return embed_psi(s); };
    for (const auto& s : src.comps(n))
        c.expect_eq([&] { return "coproduct s=" + s.to_string(); }, deconcgen(embed_psi(s)),
                    tensor_map<VincularPattern, VincularPattern>(deconc(s), psi, psi));
}

void law_phi_hom(Ctx& c, int n, Source& src, int) {
    for (const auto& [s, t] : src.perm_pairs(n))
        c.expect_eq([&] { return show(s, t); }, embed_phi(superinfiltration(s, t)),
                    qsgen(single(embed_phi(s)), single(embed_phi(t))));
    auto ph = [](const Permutation& p) { return single(embed_phi(p)); };
    for (const auto& s : src.perms(n))
        c.expect_eq([&] { return "coproduct sigma=" + s.to_string(); }, deconcgen(embed_phi(s)),
                    tensor_map<VincularPattern, VincularPattern>(delta_conc(s), ph, ph));
}

void law_antipode_axiom_vincular(Ctx& c, int n, Source& src, int) {
    for (const auto& v : src.pats(n)) {
        auto [l, r] = antipode_convolutions(v);
        VincComb expect = vinc_unit(v.empty() ? 1 : 0);
        c.expect_eq([&] { return "x=" + v.to_string() + " (S (x) id)"; }, l, expect);
        c.expect_eq([&] { return "x=" + v.to_string() + " (id (x) S)"; }, r, expect);
    }
}

// occurrences of sigma at positions p, p+g1+1, ... with the whole window inside one host block
Integer window_scan(const VincularPattern& host, const Permutation& sigma, const std::vector<int>& gaps) {
    int span = sigma.size();
    for (int g : gaps) span += g;
    Integer cnt = 0;
    std::vector<int> block(static_cast<std::size_t>(host.size()) + 1);
    int x = 1;
    for (std::size_t b = 0; b < host.blocks().parts().size(); ++b)
        for (int r = 0; r < host.blocks().parts()[b]; ++r) block[static_cast<std::size_t>(x++)] = static_cast<int>(b);
    for (int start = 1; start + span - 1 <= host.size(); ++start) {
        if (block[static_cast<std::size_t>(start)] != block[static_cast<std::size_t>(start + span - 1)]) continue;
        IntSet pos{start};
        for (int g : gaps) pos.push_back(pos.back() + g + 1);
        if (restrict_permutation(host.perm(), pos) == sigma) ++cnt;
    }
    return cnt;
}

void law_delay_window(Ctx& c, int n, Source& src, int) {
    std::vector<std::pair<Permutation, std::vector<int>>> cases;
    for (int m = 1; m <= 3; ++m)
        for (const auto& s : permutations_of(m)) {
            std::vector<int> gaps(static_cast<std::size_t>(m - 1), 0);
            while (true) {
                cases.emplace_back(s, gaps);
                std::size_t i = 0;
                while (i < gaps.size() && gaps[i] == 2) gaps[i++] = 0;
                if (i == gaps.size()) break;
                ++gaps[i];
            }
        }
    std::vector<VincComb> expansions;
    for (const auto& [s, g] : cases) expansions.push_back(delay_expansion(s, g));
    for (const auto& host : src.pats(n))
        for (std::size_t i = 0; i < cases.size(); ++i) {
            Integer a = gpc_eval(host.blocks(), host.perm(), expansions[i]).get_num();
            Integer b = window_scan(host, cases[i].first, cases[i].second);
            c.expect_eq([&] {
                std::string g;
                for (int x : cases[i].second) g += std::to_string(x) + ",";
                return "host=" + host.to_string() + " sigma=" + cases[i].first.to_string() + " gaps=" + g;
            }, a, b);
        }
}

const std::vector<LawDef>& registry() {
    static const std::vector<LawDef> defs = {
        {{"glue_assoc", "gluing is associative with unit {} (exhaustive on [3], then 500 random triples)", 10, 3}, 0, law_glue_assoc},
        {{"coassoc_coqspart", "gluing coproduct is coassociative", 5, 6}, 0, law_coassoc_coqspart},
        {{"cocomm_coqspart", "gluing coproduct is cocommutative", 5, 7}, 0, law_cocomm_coqspart},
        {{"coassoc_deconc", "deconcatenation is coassociative", 6, 10}, 0, law_coassoc_deconc},
        {{"bialgebra_conc_coqspart", "coqspart(s.t) = coqspart(s).coqspart(t)", 5, 5}, 0, law_bialgebra_conc_coqspart},
        {{"bialgebra_qspart_deconc", "deconc(s*t) = deconc(s)*deconc(t)", 4, 5}, 0, law_bialgebra_qspart_deconc},
        {{"assoc_qspart", "quasi-shuffle on compositions is associative", 4, 5}, 0, law_assoc_qspart},
        {{"comm_qspart", "quasi-shuffle on compositions is commutative with unit []", 6, 7}, 0, law_comm_qspart},
        {{"oracle_qspart_section", "qspart equals the section-coefficient expansion (bound = larger factor)", 3, 4}, 0, law_oracle_qspart_section},
        {{"grading_qspart", "terms of s*t respect the size and block filtrations", 5, 6}, 0, law_grading_qspart},
        {{"character_ipc", "IPC(L)(s) IPC(L)(t) = IPC(L)(s*t)", 8, 8}, 3, law_character_ipc},
        {{"chen_ipc", "IPC(L.M)(s) = sum over deconc(s) (bound = |L|+|M|)", 8, 8}, 8, law_chen_ipc},
        {{"oracle_ipc_chen", "block-splitting evaluator equals subset enumeration", 7, 8}, 4, law_oracle_ipc_chen},
        {{"single_block_ipc", "(N-m+1)(N-n+1) = IPC((N))((m)*(n))", 10, 12}, 4, law_single_block_ipc},
        {{"monotone_ipc", "finer patterns never count less", 7, 8}, 4, law_monotone_ipc},
        {{"antipode_axiom", "Takeuchi antipode satisfies m(S x id)D = m(id x S)D = u eps on compositions", 4, 6}, 0, law_antipode_axiom},
        {{"phi_word_hom", "Phi turns word concatenation into composition concatenation; qswrd commutes", 8, 8}, 0, law_phi_word_hom},
        {{"comm_superinf", "superinfiltration and supershuffle are commutative", 6, 6}, 0, law_comm_superinf},
        {{"oracle_superinf_interleave", "interleaving enumeration equals the scan over S_n", 5, 6}, 0, law_oracle_superinf_interleave},
        {{"duality_superinf", "products are dual to the cover coproducts", 4, 5}, 0, law_duality_superinf},
        {{"bialgebra_superinf", "Dsuperinf(s.t) = Dsuperinf(s).Dsuperinf(t)", 6, 6}, 0, law_bialgebra_superinf},
        {{"character_pc", "PC(L)(s) PC(L)(t) = PC(L)(s superinf t)", 6, 6}, 2, law_character_pc},
        {{"chen_pc", "PC(L.M)(s) = sum over Dconc(s)", 7, 7}, 3, law_chen_pc},
        {{"coassoc_deltaconc", "Dconc is coassociative and shifted concatenation associative", 6, 7}, 0, law_coassoc_deltaconc},
        {{"coassoc_coqsgen", "vincular gluing coproduct is coassociative", 4, 5}, 0, law_coassoc_coqsgen},
        {{"coassoc_deconcgen", "vincular deconcatenation is coassociative", 5, 6}, 0, law_coassoc_deconcgen},
        {{"bialgebra_genconc_coqsgen", "coqsgen(x.y) = coqsgen(x).coqsgen(y)", 4, 4}, 0, law_bialgebra_genconc_coqsgen},
        {{"bialgebra_qsgen_deconcgen", "deconcgen(x*y) = deconcgen(x)*deconcgen(y)", 4, 4}, 0, law_bialgebra_qsgen_deconcgen},
        {{"assoc_qsgen", "vincular quasi-shuffle is associative", 4, 4}, 0, law_assoc_qsgen},
        {{"comm_qsgen", "vincular quasi-shuffle is commutative with unit", 4, 5}, 0, law_comm_qsgen},
        {{"oracle_qsgen_interleave", "interleaving enumeration equals the scan over S_n", 4, 5}, 0, law_oracle_qsgen_interleave},
        {{"marginal_coqsgen", "dropping permutation legs of coqsgen gives coqspart", 4, 5}, 0, law_marginal_coqsgen},
        {{"character_gpc", "GPC(h)(x) GPC(h)(y) = GPC(h)(x*y)", 6, 6}, 2, law_character_gpc},
        {{"chen_gpc", "GPC(h.h')(x) = sum over deconcgen(x) (bound = |h|+|h'|)", 7, 7}, 2, law_chen_gpc},
        {{"psi_hom", "psi is an algebra map and respects the coproducts", 4, 4}, 0, law_psi_hom},
        {{"phi_hom", "phi(s superinf t) = phi(s)*phi(t) and phi respects the coproducts", 4, 4}, 0, law_phi_hom},
        {{"antipode_axiom_vincular", "Takeuchi antipode axiom on vincular patterns", 3, 4}, 0, law_antipode_axiom_vincular},
        {{"delay_window", "delay expansion counts equal a direct window scan", 5, 5}, 0, law_delay_window},
    };
    return defs;
}

}  // namespace

const std::vector<LawInfo>& law_catalog() {
    static const std::vector<LawInfo> infos = [] {
        std::vector<LawInfo> v;
        for (const auto& d : registry()) v.push_back(d.info);
        return v;
    }();
    return infos;
}

bool is_known_law(const std::string& name) {
    for (const auto& d : registry())
        if (d.info.name == name) return true;
    return false;
}

LawReport verify_law(const std::string& law, int bound, const VerifyOptions& opts) {
    const LawDef* def = nullptr;
    for (const auto& d : registry())
        if (d.info.name == law) def = &d;
    if (!def) throw std::invalid_argument("unknown law '" + law + "'");
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    LawReport rep;
    rep.law = law;
    rep.bound = bound;
    rep.seed = opts.seed;
    rep.exhaustive_bound = std::min(bound, def->info.exhaustive_cap);
    const int k = opts.pattern_size >= 0 ? opts.pattern_size : def->default_pattern_size;
    Rng rng(opts.seed);
    Ctx ctx{rep};
    for (int n = 0; n <= bound; ++n) {
        Source src{n <= def->info.exhaustive_cap, opts.spot_checks, rng};
        def->body(ctx, n, src, k);
    }
    if (law == "glue_assoc") {
        // fixed-size random batch over [bound]
        for (int i = 0; i < 500; ++i) {
            auto a = random_lip(bound, rng), b = random_lip(bound, rng), d = random_lip(bound, rng);
            auto l = glue(glue(a, b), d), r = glue(a, glue(b, d));
            ctx.expect_true([&] { return "I=" + a.to_string() + " J=" + b.to_string() + " K=" + d.to_string(); },
                            l == r, l.to_string(), r.to_string());
        }
    }
    return rep;
}

}  // namespace vinc
