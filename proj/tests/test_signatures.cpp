#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace vinc;
using th::perm;

namespace {
using C = Composition;
VincularPattern V(const char* s) { return VincularPattern::parse(s); }
std::vector<VincularPattern> patterns_of(int n) {
    std::vector<VincularPattern> out;
    for (const auto& s : compositions_of(n))
        for (const auto& p : permutations_of(n)) out.emplace_back(s, p);
    return out;
}
}  // namespace

TEST_SUITE("signatures") {

TEST_CASE("ipc on a single block of four") {
    const C l{4};
    CHECK(ipc_count(l, C{1, 1}) == 6);
    CHECK(ipc_count(l, C{2}) == 3);
    CHECK(ipc_count(l, C{1, 2}) == 3);
    CHECK(ipc_count(l, C{2, 1}) == 3);
    CHECK(ipc_count(l, C{1, 1, 2}) == 1);
    CHECK(ipc_count(l, C{1, 2, 1}) == 1);
    CHECK(ipc_count(l, C{2, 1, 1}) == 1);
    // 3 * 6 = 3 + 2*3 + 2*3 + 1 + 1 + 1
    CHECK(ipc_count(l, C{2}) * ipc_count(l, C{1, 1}) == 18);
    CHECK(ipc_eval(l, qspart(C{2}, C{1, 1})) == 18);
}

TEST_CASE("ipc closed forms") {
    CHECK(ipc_single_block(9, C{3, 5}) == 3);
    CHECK(ipc_single_block(4, C{1, 1}) == 6);
    for (int n = 1; n <= 6; ++n) CHECK(ipc_single_block(n, C{n}) == 1);
    CHECK(ipc_single_block(3, C{2, 2}) == 0);
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= 4; ++k)
            for (const auto& s : compositions_of(k)) REQUIRE(ipc_single_block(n, s) == ipc_count(C{n}, s));
}

TEST_CASE("ipc counts agree with the subset oracle and the Chen evaluator") {
    CHECK(ipc_chen_eval(C{4}, C{2}) == 3);
    CHECK(ipc_chen_eval(C{2, 2}, C{2}) == 2);
    CHECK(ipc_chen_eval(C{3, 1, 2}, C{}) == 1);
    for (int n = 0; n <= 7; ++n)
        for (const auto& l : compositions_of(n))
            for (int k = 0; k <= 4; ++k)
                for (const auto& s : compositions_of(k)) {
                    auto c = ipc_count(l, s);
                    REQUIRE(c == oracle::ipc(l, s));
                    REQUIRE(ipc_chen_eval(l, s) == c);
                }
}

TEST_CASE("ipc character property, Chen identity and monotonicity") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& l : compositions_of(n)) {
            IpcTable table(l, 4);
            for (int a = 0; a <= 2; ++a)
                for (int b = 0; b <= 2; ++b)
                    for (const auto& s : compositions_of(a))
                        for (const auto& t : compositions_of(b))
                            REQUIRE(Rational(ipc_count(l, s) * ipc_count(l, t)) == ipc_eval(l, qspart(s, t)));
            for (int k = 0; k <= 4; ++k)
                for (const auto& s : compositions_of(k)) {
                    REQUIRE(table.count(s) == ipc_count(l, s));
                    for (const auto& t : compositions_of(k))
                        if (is_finer_or_equal(s, t)) REQUIRE(ipc_count(l, s) >= ipc_count(l, t));
                }
        }
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (const auto& l : compositions_of(a))
                for (const auto& m : compositions_of(b))
                    for (int k = 0; k <= 3; ++k)
                        for (const auto& s : compositions_of(k)) {
                            Rational rhs = 0;
                            for (const auto& [t, c] : deconc(s))
                                rhs += c * Rational(ipc_count(l, t.get<0>()) * ipc_count(m, t.get<1>()));
                            REQUIRE(Rational(ipc_count(composition_concat(l, m), s)) == rhs);
                        }
}

TEST_CASE("gpc golden values") {
    CHECK(gpc_count(C{1, 2, 2}, perm("13254"), V("2|1")) == 2);
    CHECK(gpc_count(C{1, 2, 2}, perm("45321"), V("2|1")) == 9);
    CHECK(gpc_count(C{1, 2, 2}, perm("45321"), VincularPattern{}) == 1);
    CHECK_THROWS_AS(gpc_count(C{2}, perm("123"), V("1|")), std::invalid_argument);
}

TEST_CASE("Chen decomposition of the first gpc example") {
    std::vector<VincularPattern> factors{V("1|"), V("21|"), V("21|")};
    auto terms = gpc_chen_terms(factors, V("2|1"));
    Integer total = 0;
    std::vector<std::string> seen;
    for (const auto& t : terms) {
        total += t.value;
        std::string key;
        for (std::size_t i = 0; i < t.pieces.size(); ++i) key += (i ? " " : "") + t.pieces[i].to_string();
        seen.push_back(key + " = " + t.value.get_str());
    }
    CHECK(total == 2);
    CHECK(std::find(seen.begin(), seen.end(), "| | 2|1 = 1") != seen.end());
    CHECK(std::find(seen.begin(), seen.end(), "| 2|1 | = 1") != seen.end());
    CHECK(std::find(seen.begin(), seen.end(), "2|1 | | = 0") != seen.end());
}

TEST_CASE("gpc agrees with the subset oracle and the shape tables") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& l : compositions_of(n))
            for (const auto& lam : permutations_of(n)) {
                GpcTable table(l, lam, 3);
                for (int k = 0; k <= 3; ++k)
                    for (const auto& pat : patterns_of(k)) {
                        auto c = gpc_count(l, lam, pat);
                        REQUIRE(c == oracle::gpc(l, lam, pat));
                        REQUIRE(table.count(pat) == c);
                    }
            }
    CHECK_THROWS_AS(GpcTable(C{2}, perm("12"), 7), std::invalid_argument);
}

TEST_CASE("gpc character property and Chen identity") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& l : compositions_of(n))
            for (const auto& lam : permutations_of(n)) {
                GpcTable table(l, lam, 4);
                for (int a = 0; a <= 2; ++a)
                    for (int b = 0; b <= 2; ++b)
                        for (const auto& x : patterns_of(a))
                            for (const auto& y : patterns_of(b))
                                REQUIRE(Rational(table.count(x) * table.count(y)) == table.eval(qsgen(x, y)));
            }
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (const auto& l : compositions_of(a))
                for (const auto& la : permutations_of(a))
                    for (const auto& m : compositions_of(b))
                        for (const auto& mu : permutations_of(b))
                            for (int k = 0; k <= 2; ++k)
                                for (const auto& x : patterns_of(k)) {
                                    Rational rhs = 0;
                                    for (const auto& [t, c] : deconcgen(x))
                                        rhs += c * Rational(gpc_count(l, la, t.get<0>()) * gpc_count(m, mu, t.get<1>()));
                                    REQUIRE(Rational(gpc_count(composition_concat(l, m), perm_concat(la, mu), x)) == rhs);
                                }
}

TEST_CASE("shape codes") {
    CHECK(lehmer_code(std::vector<int>{1, 2, 3}) == 0);
    CHECK(lehmer_code(std::vector<int>{3, 2, 1}) == 5);
    CHECK(join_mask(C{2, 1}) == 1u);
    CHECK(join_mask(C{1, 2}) == 2u);
    auto sc = shape_code(V("21|3"));
    CHECK(sc.k == 3);
    CHECK(sc.joins == 1u);
}

TEST_CASE("delays") {
    VincComb want;
    for (const char* s : {"231|", "312|", "321|"}) want.add(V(s), 1);
    CHECK(delay_expansion(perm("21"), {1}) == want);
    CHECK(gpc_delay_count(C{6}, perm("134265"), perm("21"), {0}) == 2);
    CHECK_THROWS_AS(gpc_delay_count(C{6}, perm("134265"), perm("21"), {0, 1}), std::invalid_argument);
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : permutations_of(n))
            for (int k = 1; k <= 3; ++k)
                for (const auto& sigma : permutations_of(k)) {
                    std::vector<int> zeros(static_cast<std::size_t>(k - 1), 0);
                    Composition host = n ? C{n} : C{};
                    REQUIRE(gpc_delay_count(host, lam, sigma, zeros) ==
                            gpc_count(host, lam, VincularPattern(C{k}, sigma)));
                    for (int g = 0; g <= 2 && k > 1; ++g) {
                        std::vector<int> gaps(static_cast<std::size_t>(k - 1), g);
                        REQUIRE(gpc_delay_count(host, lam, sigma, gaps) == oracle::delay_window(lam, sigma, gaps));
                    }
                }
}

TEST_CASE("pattern counting in numeric series") {
    std::vector<double> intro{1, 3, 4, 2, 6, 5};
    CHECK(pattern_count_in_series(intro, V("21|3")) == 2);
    CHECK(pattern_count_in_series(intro, V("1|2")) == 12);
    CHECK(pattern_count_in_series(intro, VincularPattern{}) == 1);
    CHECK(pattern_count_in_series({}, V("1|")) == 0);
    CHECK(pattern_count_in_series({}, VincularPattern{}) == 1);
    std::vector<double> flat(5, 2.5);
    CHECK(pattern_count_in_series(flat, V("21|")) == 0);
    CHECK(pattern_count_in_series(flat, V("12|")) == 4);
}

}
