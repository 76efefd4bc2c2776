#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace vinc;
using th::lip;
using th::perm;

TEST_SUITE("combinatorics") {

TEST_CASE("cliques") {
    IntSet a{2, 4, 5, 6};
    CHECK(cliques(a).to_string() == "{{2},{4,5,6}}");
    CHECK(cliques(IntSet{}).empty());
    CHECK(cliques(IntSet{1, 2, 3}) == lip({{1, 2, 3}}));
}

TEST_CASE("restrict") {
    auto i = lip({{2, 3}, {4, 5}, {6, 7}, {8}});
    CHECK(restrict(i, IntSet{2, 4, 5, 6}) == lip({{2}, {4, 5}, {6}}));
    CHECK(restrict(lip({{2, 3, 4}}), IntSet{2, 4, 5}) == lip({{2}, {4}}));
    CHECK(restrict(i, IntSet{}).empty());
    // elements outside the ground set are dropped
    CHECK(restrict(lip({{1, 2}}), IntSet{2, 3}) == lip({{2}}));
}

TEST_CASE("standardize_partition") {
    CHECK(standardize_partition(lip({{2}, {4, 5}, {6}})) == Composition{1, 2, 1});
    CHECK(standardize_partition(LabeledIntervalPartition{}) == Composition{});
    CHECK(standardize_partition(lip({{5}, {6}, {10, 11, 12}})) == Composition{1, 1, 3});
}

TEST_CASE("glue") {
    auto i = lip({{1}, {2}, {3, 4}, {5, 6, 7}});
    auto j = lip({{2, 3}, {4, 5}});
    CHECK(glue(i, j) == lip({{1}, {2, 3, 4, 5, 6, 7}}));
    CHECK(glue(i, i) == i);
    CHECK(glue(lip({{1, 2}}), lip({{3, 4}})) == lip({{1, 2}, {3, 4}}));
    CHECK(glue(i, LabeledIntervalPartition{}) == i);
    CHECK(glue(LabeledIntervalPartition{}, i) == i);
}

TEST_CASE("glue agrees with union-find oracle on all pairs over [5]") {
    auto all = th::all_lips(5);
    auto blocks = [](const LabeledIntervalPartition& p) {
        std::vector<std::vector<int>> out;
        for (const auto& b : p.blocks()) out.push_back(range_set(b.start, b.last()));
        return out;
    };
    int checked = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            auto want = oracle::glue_blocks(blocks(a), blocks(b));
            REQUIRE(blocks(glue(a, b)) == want);
            ++checked;
        }
    CHECK(checked == static_cast<int>(all.size() * all.size()));
}

TEST_CASE("glue is associative on 500 seeded triples over [10]") {
    std::mt19937_64 rng(20240611);
    for (int k = 0; k < 500; ++k) {
        auto a = th::random_lip(rng, 10), b = th::random_lip(rng, 10), c = th::random_lip(rng, 10);
        REQUIRE(glue(glue(a, b), c) == glue(a, glue(b, c)));
    }
}

TEST_CASE("gluing fineness properties") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        auto i = th::random_lip(rng, 8);
        auto g = i.ground_set();
        // random subsets A, A' of the ground set
        IntSet a, b;
        for (int x : g) {
            if (rng() % 2) a.push_back(x);
            if (rng() % 2) b.push_back(x);
        }
        IntSet ab;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
        auto lhs = glue(restrict(i, a), restrict(i, b));
        auto rhs = restrict(i, ab);
        auto r = compare(lhs, rhs);
        CHECK((r == PartialOrderResult::Less || r == PartialOrderResult::Equal));

        auto j = glue(restrict(i, a), restrict(i, b));
        for (const auto* side : {&a, &b}) {
            auto part = restrict(i, *side);
            auto c = compare(part, restrict(j, part.ground_set()));
            CHECK((c == PartialOrderResult::Less || c == PartialOrderResult::Equal));
        }
    }
}

TEST_CASE("gluing is monotone") {
    auto all = th::all_lips(4);
    for (const auto& i : all)
        for (const auto& j : all) {
            if (compare(i, j) != PartialOrderResult::Less) continue;
            for (const auto& k : all) {
                auto c = compare(glue(i, k), glue(j, k));
                REQUIRE((c == PartialOrderResult::Less || c == PartialOrderResult::Equal));
            }
        }
}

TEST_CASE("compare on labeled partitions") {
    CHECK(compare(lip({{2}, {3}, {1}}), lip({{2, 3}, {1}})) == PartialOrderResult::Less);
    CHECK(compare(lip({{2, 3}, {1}}), lip({{2}, {3}, {1}})) == PartialOrderResult::Greater);
    CHECK(compare(lip({{1, 2}, {3}}), lip({{1}, {2, 3}})) == PartialOrderResult::Incomparable);
    CHECK(compare(lip({{1, 2}}), lip({{1, 2}})) == PartialOrderResult::Equal);
    CHECK(compare(lip({{1, 2}}), lip({{1, 2, 3}})) == PartialOrderResult::Incomparable);
    CHECK(to_string(PartialOrderResult::Incomparable) == "Incomparable");
}

TEST_CASE("compare is a partial order") {
    auto all = th::all_lips(4);
    for (const auto& a : all) {
        CHECK(compare(a, a) == PartialOrderResult::Equal);
        for (const auto& b : all) {
            auto ab = compare(a, b), ba = compare(b, a);
            if (ab == PartialOrderResult::Less) REQUIRE(ba == PartialOrderResult::Greater);
            if (ab == PartialOrderResult::Incomparable) REQUIRE(ba == PartialOrderResult::Incomparable);
            if (ab != PartialOrderResult::Less) continue;
            for (const auto& c : all)
                if (compare(b, c) == PartialOrderResult::Less) REQUIRE(compare(a, c) == PartialOrderResult::Less);
        }
    }
}

TEST_CASE("composition order") {
    CHECK(is_finer_or_equal(Composition{1, 1, 2}, Composition{2, 2}));
    CHECK_FALSE(is_finer_or_equal(Composition{1, 2, 1}, Composition{2, 2}));
    CHECK(is_finer_or_equal(Composition{}, Composition{}));
    CHECK(compare(Composition{1, 2}, Composition{2, 1}) == PartialOrderResult::Incomparable);
    CHECK(compare(Composition{1, 2}, Composition{3}) == PartialOrderResult::Less);
    CHECK(compare(Composition{3}, Composition{1, 2}) == PartialOrderResult::Greater);
    for (int n = 0; n <= 6; ++n)
        for (const auto& s : compositions_of(n))
            for (const auto& t : compositions_of(n))
                REQUIRE(is_finer_or_equal(s, t) == oracle::finer(s.parts(), t.parts()));
}

TEST_CASE("refine_to") {
    auto i = lip({{5}, {6}, {10, 11, 12}});
    CHECK(refine_to(i, Composition{1, 1, 2, 1}) == lip({{5}, {6}, {10, 11}, {12}}));
    CHECK(refine_to(i, Composition{1, 1, 3}) == i);
    CHECK_FALSE(refine_to(lip({{1, 2}}), Composition{1, 2}).has_value());
    CHECK_FALSE(refine_to(i, Composition{2, 3}).has_value());
}

TEST_CASE("refine_to is the unique refinement, over every partition of subsets of [8]") {
    auto all = th::all_lips(8);
    long long checked = 0;
    for (const auto& i : all) {
        auto runs = oracle::interval_partitions(i.ground_set());
        for (const auto& s : compositions_of(i.size())) {
            int hits = 0;
            std::optional<LabeledIntervalPartition> found;
            for (const auto& blocks : runs) {
                auto x = lip(blocks);
                if (standardize_partition(x) == s && refines(x, i)) {
                    ++hits;
                    found = x;
                }
            }
            auto got = refine_to(i, s);
            REQUIRE(hits <= 1);
            REQUIRE(got.has_value() == (hits == 1));
            REQUIRE(got.has_value() == is_finer_or_equal(s, standardize_partition(i)));
            if (got) REQUIRE(*got == *found);
            ++checked;
        }
    }
    CHECK(checked > 10000);
}

TEST_CASE("restrict of cliques") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        IntSet a;
        for (int x = 1; x <= 12; ++x)
            if (rng() % 2) a.push_back(x);
        CHECK(restrict(cliques(a), a) == cliques(a));
    }
}

TEST_CASE("subword_standardize") {
    std::vector<int> w{6, 4, 5, 1, 2, 3};
    CHECK(subword_standardize<int>(w, std::vector<int>{2, 4, 5}) == perm("312"));
    std::vector<int> v{2, 3, 4, 1, 2, 1};
    CHECK(standardize_word<int>(v) == perm("356142"));
    CHECK(subword_standardize<int>(w, std::vector<int>{}) == Permutation{});
    CHECK_THROWS_AS(subword_standardize<int>(w, std::vector<int>{7}), std::out_of_range);
    CHECK_THROWS_AS(subword_standardize<int>(w, std::vector<int>{0}), std::out_of_range);
}

TEST_CASE("composition_concat") {
    CHECK(composition_concat(Composition{2}, Composition{1, 1}) == Composition{2, 1, 1});
    CHECK(composition_concat(Composition{}, Composition{3, 1}) == Composition{3, 1});
    CHECK(composition_concat(Composition{1, 2}, Composition{3}) == Composition{1, 2, 3});
}

TEST_CASE("composition_restriction matches restrict + standardize") {
    CHECK(composition_restriction(Composition{1, 1, 2}, IntSet{3, 4}) == Composition{2});
    CHECK(composition_restriction(Composition{1, 1, 2}, IntSet{2, 3, 4}) == Composition{1, 2});
    CHECK(composition_restriction(Composition{1, 1, 2}, IntSet{}) == Composition{});
    for (int n = 0; n <= 6; ++n)
        for (const auto& s : compositions_of(n))
            for (const auto& a : oracle::subsets(n)) {
                REQUIRE(composition_restriction(s, a) == standardize_partition(restrict(canonical_partition(s), a)));
                REQUIRE(composition_restriction(s, a).parts() == oracle::restricted_shape(s, a));
            }
}

TEST_CASE("value types and rendering") {
    CHECK_THROWS_AS(LabeledIntervalPartition({{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledIntervalPartition({{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_digits("0"), std::invalid_argument);
    CHECK(Composition{}.to_string() == "[]");
    CHECK(Composition{2, 1}.to_string() == "[2,1]");
    CHECK(Permutation{}.to_string() == "()");
    CHECK(perm("3142").to_string() == "3142");
    std::vector<int> big{10, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(Permutation(big).to_string() == "(10 1 2 3 4 5 6 7 8 9)");
    // graded, then lexicographic
    CHECK(Composition{3} < Composition{1, 1, 1, 1});
    CHECK(Composition{1, 2} < Composition{2, 1});
    CHECK(perm("21") < perm("123"));
    CHECK(compositions_of(4).size() == 8);
    CHECK(refinements_of(Composition{2, 1}).size() == 2);
    CHECK(permutations_of(4).size() == 24);
    CHECK(permutations_of(0).size() == 1);
}

}

#include <cstdlib>

TEST_SUITE("combinatorics") {

TEST_CASE("size guards and their override") {
    ::unsetenv("VINC_SIZE_GUARD");
    CHECK(guard_partition() == 12);
    CHECK(guard_superinf() == 8);
    CHECK(guard_vincular() == 7);
    CHECK_THROWS_AS(check_guard("op", 5, 4), ResourceError);
    CHECK_NOTHROW(check_guard("op", 4, 4));
    ::setenv("VINC_SIZE_GUARD", "3", 1);
    CHECK(guard_partition() == 3);
    CHECK_THROWS_AS(vinc::coqspart(Composition{4}), ResourceError);
    ::setenv("VINC_SIZE_GUARD", "junk", 1);
    CHECK(guard_partition() == 12);
    ::unsetenv("VINC_SIZE_GUARD");
}

}
