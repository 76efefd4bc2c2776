#include "vinc/expression.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <memory>

#include "vinc/guards.hpp"

namespace vinc {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

template <class B>
std::string kind_of_basis();
template <>
std::string kind_of_basis<Composition>() { return "composition"; }
template <>
std::string kind_of_basis<IntWord>() { return "word"; }
template <>
std::string kind_of_basis<Permutation>() { return "permutation"; }
template <>
std::string kind_of_basis<VincularPattern>() { return "vincular"; }

template <class T>
struct KindName {
    static std::string get() { return kind_of_basis<typename T::basis_type>(); }
};
template <class A, class B>
struct KindName<LinComb<Tensor2<A, B>>> {
    static std::string get() { return kind_of_basis<A>() + " (x) " + kind_of_basis<B>(); }
};

}  // namespace

std::string value_kind(const Value& v) {
    return std::visit(overloaded{[](const Rational&) { return std::string("scalar"); },
                                 [](const auto& x) { return KindName<std::decay_t<decltype(x)>>::get(); }},
                      v);
}

std::string value_string(const Value& v) {
    return std::visit(overloaded{[](const Rational& q) { return rational_string(q); },
                                 [](const auto& x) { return x.to_string(); }},
                      v);
}

namespace {
template <class B>
std::vector<std::string> legs_of(const B&) {
    return {};
}
template <class A, class B>
std::vector<std::string> legs_of(const Tensor2<A, B>& t) {
    return {basis_string(t.template get<0>()), basis_string(t.template get<1>())};
}
}  // namespace

std::vector<RenderedTerm> value_terms(const Value& v) {
    return std::visit(overloaded{[](const Rational& q) {
                                     return std::vector<RenderedTerm>{{rational_string(q), "", {}}};
                                 },
                                 [](const auto& x) {
                                     std::vector<RenderedTerm> out;
                                     for (const auto& [b, c] : x) out.push_back({rational_string(c), basis_string(b), legs_of(b)});
                                     return out;
                                 }},
                      v);
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Bare, Name, Bracket, Brace, LParen, RParen, Comma, Plus, Minus, Star, Slash, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool bare_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '|'; }

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (bare_char(c)) {
            while (i < s.size() && bare_char(s[i])) ++i;
            out.push_back({Tok::Bare, s.substr(start, i - start), start});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Name, s.substr(start, i - start), start});
        } else if (c == '[' || c == '{') {
            const char close = c == '[' ? ']' : '}';
            auto end = s.find(close, i);
            if (end == std::string::npos)
                throw ParseError(std::string("unclosed '") + c + "' at offset " + std::to_string(i));
            std::string inner;
            for (std::size_t j = i + 1; j < end; ++j)
                if (!std::isspace(static_cast<unsigned char>(s[j]))) inner += s[j];
            out.push_back({c == '[' ? Tok::Bracket : Tok::Brace, inner, start});
            i = end + 1;
        } else {
            Tok k;
            switch (c) {
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case ',': k = Tok::Comma; break;
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '/': k = Tok::Slash; break;
                default: throw ParseError(std::string("unexpected character '") + c + "' at offset " + std::to_string(i));
            }
            out.push_back({k, std::string(1, c), start});
            ++i;
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

// ---------------------------------------------------------------------------
// AST

struct Node;
using NodePtr = std::unique_ptr<Node>;

enum class AtomKind { Bare, Bracket, Brace, EmptyParens };

struct Node {
    enum class Kind { Sum, Call, Atom } kind;
    std::vector<std::pair<Rational, NodePtr>> terms;  // Sum
    std::string name;                                 // Call name or atom text
    std::vector<NodePtr> args;                        // Call
    AtomKind atom = AtomKind::Bare;
    std::size_t pos = 0;
};

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(lex(s)) {}

    NodePtr parse() {
        auto e = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
    Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(peek().pos));
    }
    void expect(Tok k, const char* what) {
        if (peek().kind != k)
            fail(std::string("expected ") + what + ", found " + (peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'"));
        ++i_;
    }

    NodePtr expr() {
        auto sum = std::make_unique<Node>();
        sum->kind = Node::Kind::Sum;
        sum->pos = peek().pos;
        Rational sign = 1;
        if (peek().kind == Tok::Minus) {
            next();
            sign = -1;
        } else if (peek().kind == Tok::Plus) {
            next();
        }
        while (true) {
            auto [c, f] = term();
            sum->terms.emplace_back(sign * c, std::move(f));
            if (peek().kind == Tok::Plus) sign = 1;
            else if (peek().kind == Tok::Minus) sign = -1;
            else break;
            next();
        }
        return sum;
    }

    std::pair<Rational, NodePtr> term() {
        Rational c = 1;
        // rational coefficient: digits ['/' digits] '*'
        if (peek().kind == Tok::Bare && all_digits(peek().text)) {
            if (peek(1).kind == Tok::Star) {
                c = Rational(peek().text);
                i_ += 2;
            } else if (peek(1).kind == Tok::Slash && peek(2).kind == Tok::Bare && all_digits(peek(2).text) &&
                       peek(3).kind == Tok::Star) {
                Integer den(peek(2).text);
                if (den == 0) fail("zero denominator");
                c = Rational(Integer(peek().text), den);
                c.canonicalize();
                i_ += 4;
            }
        }
        return {c, factor()};
    }

    NodePtr factor() {
        const Token& t = peek();
        auto n = std::make_unique<Node>();
        n->pos = t.pos;
        switch (t.kind) {
            case Tok::Name: {
                n->kind = Node::Kind::Call;
                n->name = next().text;
                expect(Tok::LParen, "'(' after function name");
                if (peek().kind != Tok::RParen) {
                    n->args.push_back(expr());
                    while (peek().kind == Tok::Comma) {
                        next();
                        n->args.push_back(expr());
                    }
                }
                expect(Tok::RParen, "')'");
                return n;
            }
            case Tok::LParen: {
                next();
                if (peek().kind == Tok::RParen) {
                    next();
                    n->kind = Node::Kind::Atom;
                    n->atom = AtomKind::EmptyParens;
                    n->name = "()";
                    return n;
                }
                auto inner = expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Bare:
            case Tok::Bracket:
            case Tok::Brace:
                n->kind = Node::Kind::Atom;
                n->atom = t.kind == Tok::Bare ? AtomKind::Bare : t.kind == Tok::Bracket ? AtomKind::Bracket : AtomKind::Brace;
                n->name = next().text;
                return n;
            default:
                fail(t.kind == Tok::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
        }
    }
};

// ---------------------------------------------------------------------------
// Evaluation

enum class Hint { Any, Comp, Word, Perm, Vinc };

// Raised when a subexpression has the wrong kind; lets overload resolution try the next signature.
struct TypeMismatch : ParseError {
    using ParseError::ParseError;
};

std::string hint_name(Hint h) {
    switch (h) {
        case Hint::Comp: return "composition";
        case Hint::Word: return "word";
        case Hint::Perm: return "permutation";
        case Hint::Vinc: return "vincular";
        default: return "any";
    }
}

Composition parse_composition(const std::string& inner, std::size_t pos) {
    std::vector<int> parts;
    if (inner.empty()) return {};
    std::size_t from = 0;
    while (from <= inner.size()) {
        auto at = inner.find(',', from);
        std::string tok = inner.substr(from, at == std::string::npos ? std::string::npos : at - from);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || v < 1)
            throw ParseError("bad composition part '" + tok + "' at offset " + std::to_string(pos));
        parts.push_back(v);
        if (at == std::string::npos) break;
        from = at + 1;
    }
    return Composition(parts);
}

IntWord parse_word(const std::string& text, std::size_t pos) {
    std::vector<int> letters;
    std::size_t from = 0;
    while (true) {
        auto at = text.find('.', from);
        std::string tok = text.substr(from, at == std::string::npos ? std::string::npos : at - from);
        if (!all_digits(tok) || tok.size() > 9 || std::stoi(tok) < 1)
            throw ParseError("bad word letter '" + tok + "' at offset " + std::to_string(pos));
        letters.push_back(std::stoi(tok));
        if (at == std::string::npos) break;
        from = at + 1;
    }
    return IntWord(letters);
}

Value eval(const Node& n, Hint h);

Value eval_atom(const Node& n, Hint h) {
    auto mismatch = [&](const std::string& what) -> TypeMismatch {
        return TypeMismatch("'" + n.name + "' is a " + what + " but a " + hint_name(h) + " is expected at offset " +
                            std::to_string(n.pos));
    };
    try {
        switch (n.atom) {
            case AtomKind::Bracket:
                if (h != Hint::Any && h != Hint::Comp) throw mismatch("composition");
                return PartComb(parse_composition(n.name, n.pos));
            case AtomKind::Brace:
                if (h != Hint::Any && h != Hint::Vinc) throw mismatch("vincular pattern");
                return VincComb(VincularPattern::parse(n.name));
            case AtomKind::EmptyParens:
                if (h == Hint::Word) return WordComb(IntWord{});
                if (h == Hint::Vinc) return VincComb(VincularPattern{});
                if (h == Hint::Comp) throw mismatch("permutation");
                return PermComb(Permutation{});
            case AtomKind::Bare: break;
        }
        const std::string& t = n.name;
        if (t.find('|') != std::string::npos) {
            if (h != Hint::Any && h != Hint::Vinc) throw mismatch("vincular pattern");
            return VincComb(VincularPattern::parse(t));
        }
        if (t.find('.') != std::string::npos) {
            if (h != Hint::Any && h != Hint::Word) throw mismatch("word");
            return WordComb(parse_word(t, n.pos));
        }
        switch (h) {
            case Hint::Word: return WordComb(parse_word(t, n.pos));
            case Hint::Vinc: return VincComb(VincularPattern::parse(t));
            case Hint::Comp: throw mismatch("permutation");
            default: return PermComb(Permutation::from_digits(t));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError("bad atom '" + n.name + "' at offset " + std::to_string(n.pos) + ": " + e.what());
    }
}

template <class T>
const T& as(const Value& v, const std::string& fn, std::size_t pos) {
    if (auto p = std::get_if<T>(&v)) return *p;
    throw TypeMismatch(fn + ": argument at offset " + std::to_string(pos) + " has kind " + value_kind(v));
}

template <class B>
B as_basis(const LinComb<B>& x, const std::string& fn) {
    if (x.size() != 1 || x.begin()->second != 1)
        throw ParseError(fn + ": host must be a single basis element, got " + x.to_string());
    return x.begin()->first;
}

using Args = std::vector<Value>;
using Impl = std::function<Value(const Args&)>;

struct Signature {
    std::vector<Hint> args;
    Impl impl;
};

Value check_kind(Value v, Hint h, const std::string& fn, std::size_t pos) {
    auto ok = [&] {
        switch (h) {
            case Hint::Comp: return std::holds_alternative<PartComb>(v);
            case Hint::Word: return std::holds_alternative<WordComb>(v);
            case Hint::Perm: return std::holds_alternative<PermComb>(v);
            case Hint::Vinc: return std::holds_alternative<VincComb>(v);
            default: return true;
        }
    }();
    if (!ok)
        throw TypeMismatch(fn + ": argument at offset " + std::to_string(pos) + " is a " + value_kind(v) + ", expected " +
                           hint_name(h));
    return v;
}

#define ARG(T, i) as<T>(a[i], "", 0)

const std::map<std::string, std::vector<Signature>>& functions() {
    using H = Hint;
    static const std::map<std::string, std::vector<Signature>> table = {
        {"conc",
         {{{H::Comp, H::Comp}, [](const Args& a) -> Value { return conc_product(ARG(PartComb, 0), ARG(PartComb, 1)); }},
          {{H::Perm, H::Perm}, [](const Args& a) -> Value { return perm_concat(ARG(PermComb, 0), ARG(PermComb, 1)); }},
          {{H::Word, H::Word},
           [](const Args& a) -> Value {
               return bilinear_extend<IntWord>(ARG(WordComb, 0), ARG(WordComb, 1),
                                               [](const IntWord& u, const IntWord& v) { return single(word_concat(u, v)); });
           }},
          {{H::Vinc, H::Vinc}, [](const Args& a) -> Value { return genconc(ARG(VincComb, 0), ARG(VincComb, 1)); }}}},
        {"qspart", {{{H::Comp, H::Comp}, [](const Args& a) -> Value { return qspart(ARG(PartComb, 0), ARG(PartComb, 1)); }}}},
        {"coqspart", {{{H::Comp}, [](const Args& a) -> Value { return coqspart(ARG(PartComb, 0)); }}}},
        {"deconc", {{{H::Comp}, [](const Args& a) -> Value { return deconc(ARG(PartComb, 0)); }}}},
        {"coshuffle",
         {{{H::Comp},
           [](const Args& a) -> Value {
               return linear_extend<PartTensor>(ARG(PartComb, 0), [](const Composition& s) { return shuffle_coproduct(s); });
           }}}},
        {"qswrd", {{{H::Word, H::Word}, [](const Args& a) -> Value { return qswrd(ARG(WordComb, 0), ARG(WordComb, 1)); }}}},
        {"superinf",
         {{{H::Perm, H::Perm}, [](const Args& a) -> Value { return superinfiltration(ARG(PermComb, 0), ARG(PermComb, 1)); }}}},
        {"deltasuperinf",
         {{{H::Perm},
           [](const Args& a) -> Value {
               return linear_extend<PermTensor>(ARG(PermComb, 0), [](const Permutation& p) { return delta_superinfiltration(p); });
           }}}},
        {"supershuffle",
         {{{H::Perm, H::Perm},
           [](const Args& a) -> Value {
               return bilinear_extend<Permutation>(ARG(PermComb, 0), ARG(PermComb, 1), [](const Permutation& x, const Permutation& y) {
                   return supershuffle(x, y);
               });
           }}}},
        {"deltasupershuffle",
         {{{H::Perm},
           [](const Args& a) -> Value {
               return linear_extend<PermTensor>(ARG(PermComb, 0), [](const Permutation& p) { return delta_supershuffle(p); });
           }}}},
        {"deltaconc",
         {{{H::Perm},
           [](const Args& a) -> Value {
               return linear_extend<PermTensor>(ARG(PermComb, 0), [](const Permutation& p) { return delta_conc(p); });
           }}}},
        {"pconc", {{{H::Perm, H::Perm}, [](const Args& a) -> Value { return perm_concat(ARG(PermComb, 0), ARG(PermComb, 1)); }}}},
        {"mrstar",
         {{{H::Perm, H::Perm},
           [](const Args& a) -> Value {
               return bilinear_extend<Permutation>(ARG(PermComb, 0), ARG(PermComb, 1),
                                                   [](const Permutation& x, const Permutation& y) { return mr_star(x, y); });
           }}}},
        {"mrstar2",
         {{{H::Perm, H::Perm},
           [](const Args& a) -> Value {
               return bilinear_extend<Permutation>(ARG(PermComb, 0), ARG(PermComb, 1), [](const Permutation& x, const Permutation& y) {
                   return mr_star_prime(x, y);
               });
           }}}},
        {"deltastar",
         {{{H::Perm},
           [](const Args& a) -> Value {
               return linear_extend<PermTensor>(ARG(PermComb, 0), [](const Permutation& p) { return delta_star(p); });
           }}}},
        {"genconc", {{{H::Vinc, H::Vinc}, [](const Args& a) -> Value { return genconc(ARG(VincComb, 0), ARG(VincComb, 1)); }}}},
        {"qsgen", {{{H::Vinc, H::Vinc}, [](const Args& a) -> Value { return qsgen(ARG(VincComb, 0), ARG(VincComb, 1)); }}}},
        {"deconcgen", {{{H::Vinc}, [](const Args& a) -> Value { return deconcgen(ARG(VincComb, 0)); }}}},
        {"coqsgen", {{{H::Vinc}, [](const Args& a) -> Value { return coqsgen(ARG(VincComb, 0)); }}}},
        {"antipode",
         {{{H::Comp}, [](const Args& a) -> Value { return takeuchi_antipode(ARG(PartComb, 0)); }},
          {{H::Vinc}, [](const Args& a) -> Value { return takeuchi_antipode(ARG(VincComb, 0)); }}}},
        {"psi", {{{H::Comp}, [](const Args& a) -> Value { return embed_psi(ARG(PartComb, 0)); }}}},
        {"phi", {{{H::Perm}, [](const Args& a) -> Value { return embed_phi(ARG(PermComb, 0)); }}}},
        {"ipc",
         {{{H::Comp, H::Comp},
           [](const Args& a) -> Value { return ipc_eval(as_basis(ARG(PartComb, 0), "ipc"), ARG(PartComb, 1)); }}}},
        {"gpc",
         {{{H::Vinc, H::Vinc},
           [](const Args& a) -> Value {
               VincularPattern host = as_basis(ARG(VincComb, 0), "gpc");
               return gpc_eval(host.blocks(), host.perm(), ARG(VincComb, 1));
           }}}},
        {"pc",
         {{{H::Perm, H::Perm},
           [](const Args& a) -> Value { return pc_eval(as_basis(ARG(PermComb, 0), "pc"), ARG(PermComb, 1)); }}}},
        {"counit",
         {{{H::Comp}, [](const Args& a) -> Value { return counit(ARG(PartComb, 0)); }},
          {{H::Vinc}, [](const Args& a) -> Value { return counit(ARG(VincComb, 0)); }}}},
    };
    return table;
}

#undef ARG

Value eval_call(const Node& n) {
    const auto& table = functions();
    auto it = table.find(n.name);
    if (it == table.end()) throw ParseError("unknown function '" + n.name + "' at offset " + std::to_string(n.pos));
    std::string first_error;
    bool arity_ok = false;
    for (const auto& sig : it->second) {
        if (sig.args.size() != n.args.size()) continue;
        arity_ok = true;
        try {
            Args vals;
            for (std::size_t i = 0; i < n.args.size(); ++i)
                vals.push_back(check_kind(eval(*n.args[i], sig.args[i]), sig.args[i], n.name, n.args[i]->pos));
            return sig.impl(vals);
        } catch (const TypeMismatch& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (!arity_ok)
        throw ParseError(n.name + ": wrong number of arguments (" + std::to_string(n.args.size()) + ") at offset " +
                         std::to_string(n.pos));
    if (it->second.size() == 1) throw TypeMismatch(first_error);
    throw TypeMismatch(n.name + ": no overload matches the arguments at offset " + std::to_string(n.pos) + " (" +
                       first_error + ")");
}

Value scale(const Rational& c, Value v) {
    return std::visit(overloaded{[&](Rational q) -> Value { return c * q; },
                                 [&](auto x) -> Value { return c * std::move(x); }},
                      std::move(v));
}

Value add(Value a, const Value& b, std::size_t pos) {
    if (a.index() != b.index())
        throw TypeMismatch("cannot add a " + value_kind(b) + " to a " + value_kind(a) + " at offset " + std::to_string(pos));
    return std::visit(
        [&](auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return x + std::get<Rational>(b);
            } else {
                x += std::get<T>(b);
                return x;
            }
        },
        a);
}

Value eval(const Node& n, Hint h) {
    switch (n.kind) {
        case Node::Kind::Atom: return eval_atom(n, h);
        case Node::Kind::Call: return eval_call(n);
        case Node::Kind::Sum: {
            std::optional<Value> acc;
            for (const auto& [c, term] : n.terms) {
                Value v = scale(c, eval(*term, h));
                acc = acc ? add(std::move(*acc), v, term->pos) : std::move(v);
            }
            return *acc;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Value evaluate_expression(const std::string& text) {
    Parser p(text);
    auto ast = p.parse();
    return eval(*ast, Hint::Any);
}

std::vector<std::string> expression_functions() {
    std::vector<std::string> out;
    for (const auto& [name, sigs] : functions()) out.push_back(name);
    return out;
}

}  // namespace vinc
