#include "vinc/perm_hopf.hpp"

#include "vinc/guards.hpp"

namespace vinc {

namespace {

// Positions of a sorted by the value sigma assigns them: chain[v-1] is the position of value v.
std::vector<int> value_chain(const Permutation& sigma, const IntSet& a) {
    std::vector<int> chain(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) chain[static_cast<std::size_t>(sigma[i] - 1)] = a[i];
    return chain;
}

void interleave(const std::vector<int>& ca, const std::vector<int>& cb, const std::vector<char>& in_a,
                const std::vector<char>& in_b, std::size_t ia, std::size_t ib, int value, std::vector<int>& gamma,
                std::vector<Permutation>& out) {
    if (ia == ca.size() && ib == cb.size()) {
        out.emplace_back(gamma);
        return;
    }
    // Next value goes to the head of chain A or of chain B. A shared position must head both.
    if (ia < ca.size()) {
        int p = ca[ia];
        bool shared = in_b[static_cast<std::size_t>(p)];
        if (!shared || (ib < cb.size() && cb[ib] == p)) {
            gamma[static_cast<std::size_t>(p - 1)] = value;
            interleave(ca, cb, in_a, in_b, ia + 1, shared ? ib + 1 : ib, value + 1, gamma, out);
        }
    }
    if (ib < cb.size()) {
        int p = cb[ib];
        if (!in_a[static_cast<std::size_t>(p)]) {
            gamma[static_cast<std::size_t>(p - 1)] = value;
            interleave(ca, cb, in_a, in_b, ia, ib + 1, value + 1, gamma, out);
        }
    }
}

// Calls f(A, B) on every cover A u B = [n] with |A| = m, |B| = k.
template <class F>
void for_each_sized_cover(int n, int m, int k, F&& f) {
    const int overlap = m + k - n;
    if (overlap < 0 || overlap > std::min(m, k)) return;
    for_each_subset(n, m, [&](const IntSet& a) {
        IntSet rest;
        for (int x = 1, j = 0; x <= n; ++x) {
            if (j < static_cast<int>(a.size()) && a[static_cast<std::size_t>(j)] == x) ++j;
            else rest.push_back(x);
        }
        for_each_subset(m, overlap, [&](const IntSet& pick) {
            IntSet b = rest;
            for (int i : pick) b.push_back(a[static_cast<std::size_t>(i - 1)]);
            std::sort(b.begin(), b.end());
            f(a, b);
        });
    });
}

}  // namespace

std::vector<Permutation> compatible_hosts(const Permutation& sigma, const IntSet& a, const Permutation& tau,
                                          const IntSet& b, int n, Enumeration mode) {
    std::vector<Permutation> out;
    if (mode == Enumeration::BruteForce) {
        check_guard("permutation scan", n, guard_permutations());
        for (auto& g : permutations_of(n))
            if (restrict_permutation(g, a) == sigma && restrict_permutation(g, b) == tau) out.push_back(std::move(g));
        return out;
    }
    std::vector<char> in_a(static_cast<std::size_t>(n) + 1), in_b(static_cast<std::size_t>(n) + 1);
    for (int x : a) in_a[static_cast<std::size_t>(x)] = 1;
    for (int x : b) in_b[static_cast<std::size_t>(x)] = 1;
    std::vector<int> gamma(static_cast<std::size_t>(n));
    interleave(value_chain(sigma, a), value_chain(tau, b), in_a, in_b, 0, 0, 1, gamma, out);
    std::sort(out.begin(), out.end());
    return out;
}

PermComb superinfiltration(const Permutation& sigma, const Permutation& tau, Enumeration mode) {
    const int m = sigma.size(), k = tau.size();
    check_guard("superinfiltration", m + k, guard_superinf());
    PermComb out;
    for (int n = std::max(m, k); n <= m + k; ++n)
        for_each_sized_cover(n, m, k, [&](const IntSet& a, const IntSet& b) {
            for (const auto& g : compatible_hosts(sigma, a, tau, b, n, mode)) out.add(g, 1);
        });
    return out;
}

PermComb superinfiltration(const PermComb& x, const PermComb& y) {
    return bilinear_extend<Permutation>(x, y, [](const Permutation& a, const Permutation& b) {
        return superinfiltration(a, b);
    });
}

PermComb2 delta_superinfiltration(const Permutation& sigma) {
    check_guard("delta_superinfiltration", sigma.size(), guard_superinf());
    PermComb2 out;
    for_each_cover(sigma.size(), false, [&](const IntSet& a, const IntSet& b) {
        out.add(PermTensor(restrict_permutation(sigma, a), restrict_permutation(sigma, b)), 1);
    });
    return out;
}

Permutation perm_concat(const Permutation& alpha, const Permutation& beta) {
    std::vector<int> v(alpha.one_line());
    for (int x : beta.one_line()) v.push_back(x + alpha.size());
    return Permutation(std::move(v));
}

PermComb perm_concat(const PermComb& x, const PermComb& y) {
    return bilinear_extend<Permutation>(x, y, [](const Permutation& a, const Permutation& b) {
        return single(perm_concat(a, b));
    });
}

PermComb2 delta_conc(const Permutation& sigma) {
    PermComb2 out;
    const auto& v = sigma.one_line();
    int mx = 0;
    for (int i = 0; i <= sigma.size(); ++i) {
        if (i > 0) mx = std::max(mx, v[static_cast<std::size_t>(i - 1)]);
        if (mx != i) continue;
        std::vector<int> tail;
        for (std::size_t j = static_cast<std::size_t>(i); j < v.size(); ++j) tail.push_back(v[j] - i);
        out.add(PermTensor(Permutation(std::vector<int>(v.begin(), v.begin() + i)), Permutation(std::move(tail))), 1);
    }
    return out;
}

PermComb supershuffle(const Permutation& sigma, const Permutation& tau, Enumeration mode) {
    const int m = sigma.size(), k = tau.size();
    check_guard("supershuffle", m + k, guard_superinf());
    PermComb out;
    for_each_sized_cover(m + k, m, k, [&](const IntSet& a, const IntSet& b) {
        for (const auto& g : compatible_hosts(sigma, a, tau, b, m + k, mode)) out.add(g, 1);
    });
    return out;
}

PermComb2 delta_supershuffle(const Permutation& sigma) {
    check_guard("delta_supershuffle", sigma.size(), guard_superinf());
    PermComb2 out;
    for_each_cover(sigma.size(), true, [&](const IntSet& a, const IntSet& b) {
        out.add(PermTensor(restrict_permutation(sigma, a), restrict_permutation(sigma, b)), 1);
    });
    return out;
}

PermComb mr_star(const Permutation& sigma, const Permutation& tau) {
    const int m = sigma.size(), k = tau.size();
    check_guard("mr_star", m + k, guard_superinf());
    PermComb out;
    // choose which values land in the first m positions
    for_each_subset(m + k, m, [&](const IntSet& vals) {
        IntSet others;
        for (int x = 1, j = 0; x <= m + k; ++x) {
            if (j < m && vals[static_cast<std::size_t>(j)] == x) ++j;
            else others.push_back(x);
        }
        std::vector<int> g;
        for (int x : sigma.one_line()) g.push_back(vals[static_cast<std::size_t>(x - 1)]);
        for (int x : tau.one_line()) g.push_back(others[static_cast<std::size_t>(x - 1)]);
        out.add(Permutation(std::move(g)), 1);
    });
    return out;
}

PermComb mr_star_prime(const Permutation& sigma, const Permutation& tau) {
    const int m = sigma.size(), k = tau.size();
    check_guard("mr_star_prime", m + k, guard_superinf());
    PermComb out;
    for_each_subset(m + k, m, [&](const IntSet& pos) {
        std::vector<int> g(static_cast<std::size_t>(m + k));
        std::size_t i = 0, j = 0;
        for (int x = 1; x <= m + k; ++x) {
            if (i < pos.size() && pos[i] == x) g[static_cast<std::size_t>(x - 1)] = sigma[i++];
            else g[static_cast<std::size_t>(x - 1)] = tau[j++] + m;
        }
        out.add(Permutation(std::move(g)), 1);
    });
    return out;
}

PermComb2 delta_star(const Permutation& sigma) {
    PermComb2 out;
    const int n = sigma.size();
    for (int i = 0; i <= n; ++i)
        out.add(PermTensor(restrict_permutation(sigma, range_set(1, i)), restrict_permutation(sigma, range_set(i + 1, n))),
                1);
    return out;
}

Integer pc_count(const Permutation& host, const Permutation& sigma) {
    Integer c = 0;
    for_each_subset(host.size(), sigma.size(), [&](const IntSet& a) {
        if (restrict_permutation(host, a) == sigma) ++c;
    });
    return c;
}

Rational pc_eval(const Permutation& host, const PermComb& x) {
    Rational r = 0;
    for (const auto& [p, c] : x) r += c * Rational(pc_count(host, p));
    return r;
}

}  // namespace vinc
