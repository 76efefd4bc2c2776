#pragma once

// Free Q-module over an ordered basis, plus tensor basis elements.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "vinc/combinatorics.hpp"

namespace vinc {

using Rational = mpq_class;
using Integer = mpz_class;

std::string rational_string(const Rational& q);

inline std::string basis_string(const Composition& c) { return c.to_string(); }
inline std::string basis_string(const Permutation& p) { return p.to_string(); }
inline int basis_size(const Composition& c) { return c.size(); }
inline int basis_size(const Permutation& p) { return p.size(); }

/// Form used when the element appears as a term of a linear combination.
template <class B>
std::string term_string(const B& b) {
    return basis_string(b);
}

/// a (x) b (x) ...; ordered componentwise.
template <class... Bs>
struct Tensor {
    std::tuple<Bs...> legs;

    Tensor() = default;
    explicit Tensor(Bs... bs) : legs(std::move(bs)...) {}

    template <std::size_t I>
    const auto& get() const { return std::get<I>(legs); }

    friend bool operator==(const Tensor&, const Tensor&) = default;
    friend auto operator<=>(const Tensor& a, const Tensor& b) { return a.legs <=> b.legs; }
};

template <class A, class B>
using Tensor2 = Tensor<A, B>;
template <class A, class B, class C>
using Tensor3 = Tensor<A, B, C>;

template <class... Bs>
std::string basis_string(const Tensor<Bs...>& t) {
    std::string out = "(";
    bool first = true;
    std::apply([&](const auto&... leg) { ((out += (first ? "" : " (x) ") + basis_string(leg), first = false), ...); },
               t.legs);
    return out + ")";
}

template <class... Bs>
int basis_size(const Tensor<Bs...>& t) {
    return std::apply([](const auto&... leg) { return (0 + ... + basis_size(leg)); }, t.legs);
}

/// Finite Q-linear combination; zero coefficients are never stored.
template <class B>
class LinComb {
public:
    using basis_type = B;
    using map_type = std::map<B, Rational>;

    LinComb() = default;
    explicit LinComb(const B& b, const Rational& c = 1) { add(b, c); }

    void add(const B& b, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const map_type& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    /// Largest basis_size among the terms; -1 for zero.
    int degree() const {
        int d = -1;
        for (const auto& [b, c] : terms_) d = std::max(d, basis_size(b));
        return d;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend bool operator==(const LinComb&, const LinComb&) = default;

    /// `c*b` joined by ` + `, negatives as ` - c*b`, zero as `0`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            Rational a = c;
            if (a < 0) {
                out += first ? "-" : " - ";
                a = -a;
            } else if (!first) {
                out += " + ";
            }
            out += rational_string(a) + "*" + term_string(b);
            first = false;
        }
        return out;
    }

private:
    map_type terms_;
};

template <class B>
Rational pairing(const LinComb<B>& f, const LinComb<B>& x) {
    Rational r = 0;
    const auto& small = f.size() <= x.size() ? f : x;
    const auto& big = f.size() <= x.size() ? x : f;
    for (const auto& [b, c] : small) {
        auto it = big.terms().find(b);
        if (it != big.terms().end()) r += c * it->second;
    }
    return r;
}

/// op: basis -> LinComb<C>, extended linearly.
template <class C, class B, class Op>
LinComb<C> linear_extend(const LinComb<B>& x, Op&& op) {
    LinComb<C> out;
    for (const auto& [b, c] : x) {
        LinComb<C> img = op(b);
        for (const auto& [d, e] : img) out.add(d, c * e);
    }
    return out;
}

/// op: basis pair -> LinComb<C>, extended bilinearly.
template <class C, class A, class B, class Op>
LinComb<C> bilinear_extend(const LinComb<A>& x, const LinComb<B>& y, Op&& op) {
    LinComb<C> out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            LinComb<C> img = op(a, b);
            Rational k = ca * cb;
            for (const auto& [d, e] : img) out.add(d, k * e);
        }
    return out;
}

template <class B>
LinComb<B> single(const B& b, const Rational& c = 1) {
    return LinComb<B>(b, c);
}

/// Swaps the legs of a 2-tensor combination.
template <class A, class B>
LinComb<Tensor2<B, A>> swap_legs(const LinComb<Tensor2<A, B>>& x) {
    LinComb<Tensor2<B, A>> out;
    for (const auto& [t, c] : x) out.add(Tensor2<B, A>(t.template get<1>(), t.template get<0>()), c);
    return out;
}

/// (f (x) g) applied to a 2-tensor combination, f and g basis -> LinComb.
template <class C, class D, class A, class B, class F, class G>
LinComb<Tensor2<C, D>> tensor_map(const LinComb<Tensor2<A, B>>& x, F&& f, G&& g) {
    LinComb<Tensor2<C, D>> out;
    for (const auto& [t, c] : x) {
        LinComb<C> l = f(t.template get<0>());
        if (l.empty()) continue;
        LinComb<D> r = g(t.template get<1>());
        for (const auto& [a, ca] : l)
            for (const auto& [b, cb] : r) out.add(Tensor2<C, D>(a, b), c * ca * cb);
    }
    return out;
}

/// Componentwise product of two 2-tensor combinations: (a (x) b)(c (x) d) = ac (x) bd.
template <class A, class B, class MA, class MB>
LinComb<Tensor2<A, B>> tensor_product(const LinComb<Tensor2<A, B>>& x, const LinComb<Tensor2<A, B>>& y, MA&& ma,
                                      MB&& mb) {
    LinComb<Tensor2<A, B>> out;
    for (const auto& [s, cs] : x)
        for (const auto& [t, ct] : y) {
            LinComb<A> l = ma(s.template get<0>(), t.template get<0>());
            if (l.empty()) continue;
            LinComb<B> r = mb(s.template get<1>(), t.template get<1>());
            Rational k = cs * ct;
            for (const auto& [a, ca] : l)
                for (const auto& [b, cb] : r) out.add(Tensor2<A, B>(a, b), k * ca * cb);
        }
    return out;
}

/// (Delta (x) id) o Delta and (id (x) Delta) o Delta at a basis element, as 3-tensors.
template <class B, class Delta>
std::pair<LinComb<Tensor3<B, B, B>>, LinComb<Tensor3<B, B, B>>> coassociativity_sides(const B& x, Delta&& delta) {
    std::map<B, LinComb<Tensor2<B, B>>> memo;
    auto d_of = [&](const B& b) -> const LinComb<Tensor2<B, B>>& {
        auto it = memo.find(b);
        if (it == memo.end()) it = memo.emplace(b, delta(b)).first;
        return it->second;
    };
    LinComb<Tensor2<B, B>> d = delta(x);
    LinComb<Tensor3<B, B, B>> left, right;
    for (const auto& [t, c] : d) {
        for (const auto& [u, cu] : d_of(t.template get<0>()))
            left.add(Tensor3<B, B, B>(u.template get<0>(), u.template get<1>(), t.template get<1>()), c * cu);
        for (const auto& [u, cu] : d_of(t.template get<1>()))
            right.add(Tensor3<B, B, B>(t.template get<0>(), u.template get<0>(), u.template get<1>()), c * cu);
    }
    return {left, right};
}

}  // namespace vinc
