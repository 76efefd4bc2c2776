#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace vinc;
using th::perm;

namespace {
PermComb pc_of(std::initializer_list<std::pair<int, const char*>> terms) {
    PermComb out;
    for (const auto& [c, s] : terms) out.add(perm(s), c);
    return out;
}
PermComb2 t2(std::initializer_list<std::tuple<int, const char*, const char*>> terms) {
    PermComb2 out;
    for (const auto& [c, a, b] : terms) out.add(PermTensor(perm(a), perm(b)), c);
    return out;
}
}  // namespace

TEST_SUITE("perm_hopf") {

TEST_CASE("superinfiltration golden values") {
    CHECK(superinfiltration(perm("1"), perm("1")) == pc_of({{1, "1"}, {2, "12"}, {2, "21"}}));
    CHECK(superinfiltration(perm(""), perm("312")) == single(perm("312")));
    // frozen from the Sigma_n scan
    CHECK(superinfiltration(perm("12"), perm("1")) ==
          pc_of({{2, "12"}, {3, "123"}, {2, "132"}, {2, "213"}, {1, "231"}, {1, "312"}}));
}

TEST_CASE("superinfiltration matches the Sigma_n oracle and the BruteForce mode") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3 && a + b <= 5; ++b)
            for (const auto& s : permutations_of(a))
                for (const auto& t : permutations_of(b)) {
                    auto got = superinfiltration(s, t);
                    REQUIRE(got == oracle::superinfiltration(s, t));
                    REQUIRE(got == superinfiltration(s, t, Enumeration::BruteForce));
                    REQUIRE(got == superinfiltration(t, s));
                }
}

TEST_CASE("delta_superinfiltration and duality") {
    CHECK(delta_superinfiltration(perm("21")) ==
          t2({{1, "", "21"}, {2, "1", "1"}, {2, "1", "21"}, {1, "21", ""}, {2, "21", "1"}, {1, "21", "21"}}));
    CHECK(delta_superinfiltration(perm("")) == t2({{1, "", ""}}));
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (const auto& s : permutations_of(a))
                for (const auto& t : permutations_of(b)) {
                    PermComb via;
                    for (int n = 0; n <= a + b; ++n)
                        for (const auto& g : permutations_of(n))
                            via.add(g, delta_superinfiltration(g).coeff(PermTensor(s, t)));
                    REQUIRE(via == superinfiltration(s, t));
                }
}

TEST_CASE("perm_concat and delta_conc") {
    CHECK(perm_concat(perm("21"), perm("12")) == perm("2134"));
    CHECK(perm_concat(perm(""), perm("231")) == perm("231"));
    CHECK(perm_concat(perm("1"), perm("1")) == perm("12"));
    CHECK(delta_conc(perm("12")) == t2({{1, "", "12"}, {1, "1", "1"}, {1, "12", ""}}));
    CHECK(delta_conc(perm("21")) == t2({{1, "", "21"}, {1, "21", ""}}));
    CHECK(delta_conc(perm("2134")).coeff(PermTensor(perm("21"), perm("12"))) == 1);
    for (int n = 0; n <= 5; ++n)
        for (const auto& s : permutations_of(n)) {
            auto [l, r] = coassociativity_sides(s, [](const Permutation& p) { return delta_conc(p); });
            REQUIRE(l == r);
        }
}

TEST_CASE("bialgebra law for superinfiltration and concatenation") {
    auto conc = [](const Permutation& a, const Permutation& b) { return single(perm_concat(a, b)); };
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3 && a + b <= 5; ++b)
            for (const auto& s : permutations_of(a))
                for (const auto& t : permutations_of(b))
                    REQUIRE(delta_superinfiltration(perm_concat(s, t)) ==
                            tensor_product(delta_superinfiltration(s), delta_superinfiltration(t), conc, conc));
}

TEST_CASE("supershuffle golden values") {
    CHECK(supershuffle(perm("12"), perm("21")) ==
          pc_of({{1, "1243"}, {1, "1324"}, {2, "1342"}, {2, "1423"}, {3, "1432"}, {1, "2134"}, {2, "2314"},
                 {3, "2341"}, {1, "2413"}, {2, "2431"}, {2, "3124"}, {1, "3142"}, {3, "3214"}, {2, "3241"},
                 {1, "3421"}, {3, "4123"}, {2, "4132"}, {2, "4213"}, {1, "4231"}, {1, "4312"}}));
    CHECK(supershuffle(perm("12"), perm("21")).size() == 20);
    CHECK(supershuffle(perm(""), perm("21")) == single(perm("21")));
    CHECK(supershuffle(perm("1"), perm("1")) == pc_of({{2, "12"}, {2, "21"}}));
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& s : permutations_of(a))
                for (const auto& t : permutations_of(b)) {
                    REQUIRE(supershuffle(s, t) == oracle::superinfiltration(s, t, true));
                    REQUIRE(supershuffle(s, t) == supershuffle(s, t, Enumeration::BruteForce));
                }
}

TEST_CASE("delta_supershuffle uses disjoint covers") {
    CHECK(delta_supershuffle(perm("21")) == t2({{1, "", "21"}, {2, "1", "1"}, {1, "21", ""}}));
}

TEST_CASE("Malvenuto-Reutenauer operations") {
    CHECK(mr_star(perm("12"), perm("21")) ==
          pc_of({{1, "1243"}, {1, "1342"}, {1, "1432"}, {1, "2341"}, {1, "2431"}, {1, "3421"}}));
    CHECK(mr_star_prime(perm("12"), perm("21")) ==
          pc_of({{1, "1243"}, {1, "1423"}, {1, "4123"}, {1, "1432"}, {1, "4312"}, {1, "4132"}}));
    CHECK(delta_star(perm("1243")) ==
          t2({{1, "", "1243"}, {1, "1", "132"}, {1, "12", "21"}, {1, "123", "1"}, {1, "1243", ""}}));
}

TEST_CASE("pc_count") {
    CHECK(pc_count(perm("132"), perm("1")) == 3);
    CHECK(pc_count(perm("132"), perm("12")) == 2);
    CHECK(pc_count(perm("132"), perm("21")) == 1);
    // 3 * 3 = 3 + 2*2 + 2*1
    CHECK(pc_eval(perm("132"), superinfiltration(perm("1"), perm("1"))) == 9);
    CHECK(pc_count(perm("2413"), perm("2413")) == 1);
    CHECK(pc_count(perm("2413"), perm("")) == 1);
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : permutations_of(n))
            for (int k = 0; k <= 3; ++k)
                for (const auto& s : permutations_of(k)) REQUIRE(pc_count(lam, s) == oracle::pc(lam, s));
}

TEST_CASE("PC character property and Chen identity") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : permutations_of(n))
            for (int a = 0; a <= 2; ++a)
                for (int b = 0; b <= 2; ++b)
                    for (const auto& s : permutations_of(a))
                        for (const auto& t : permutations_of(b))
                            REQUIRE(Rational(pc_count(lam, s) * pc_count(lam, t)) == pc_eval(lam, superinfiltration(s, t)));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (const auto& l : permutations_of(a))
                for (const auto& u : permutations_of(b))
                    for (int k = 0; k <= 3; ++k)
                        for (const auto& s : permutations_of(k)) {
                            Rational rhs = 0;
                            for (const auto& [tt, c] : delta_conc(s))
                                rhs += c * Rational(pc_count(l, tt.get<0>()) * pc_count(u, tt.get<1>()));
                            REQUIRE(Rational(pc_count(perm_concat(l, u), s)) == rhs);
                        }
}

TEST_CASE("enumeration helpers") {
    int subsets = 0;
    for_each_subset(5, 2, [&](const IntSet&) { ++subsets; });
    CHECK(subsets == 10);
    int covers = 0, disjoint = 0;
    for_each_cover(3, false, [&](const IntSet&, const IntSet&) { ++covers; });
    for_each_cover(3, true, [&](const IntSet&, const IntSet&) { ++disjoint; });
    CHECK(covers == 27);
    CHECK(disjoint == 8);
    // chains A and B sharing position 2
    auto hosts = compatible_hosts(perm("12"), IntSet{1, 2}, perm("21"), IntSet{2, 3}, 3);
    auto brute = compatible_hosts(perm("12"), IntSet{1, 2}, perm("21"), IntSet{2, 3}, 3, Enumeration::BruteForce);
    std::sort(hosts.begin(), hosts.end());
    std::sort(brute.begin(), brute.end());
    CHECK(hosts == brute);
    CHECK(hosts == std::vector<Permutation>{perm("132"), perm("231")});
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(superinfiltration(perm("12345"), perm("1234")), ResourceError);
}

}
