#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "treecycle/json_io.hpp"
#include "treecycle/poset.hpp"

using namespace treecycle;

TEST_CASE("poset construction and closure") {
    Poset p({1, 2, 3}, {{1, 2}, {2, 3}});
    CHECK(p.less(1, 3));  // transitivity
    CHECK(!p.less(3, 1));
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(p.relations().size() == 3);
    CHECK_THROWS_AS(Poset({1, 2}, {{1, 2}, {2, 1}}), CycleCreated);
}

TEST_CASE("linear extension extremes") {
    Poset chain({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(chain.linear_extensions_count() == 1);
    Poset antichain({1, 2, 3, 4}, {});
    CHECK(antichain.linear_extensions_count() == 24);
    CHECK(antichain.linear_extensions_list().size() == 24);
}

TEST_CASE("DP count equals explicit enumeration on random posets up to 8 points") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> rel;
        // Random relations oriented low -> high keep the order acyclic.
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y)
                if (rng() % 3 == 0) rel.emplace_back(x, y);
        std::vector<int> ground(n);
        std::iota(ground.begin(), ground.end(), 1);
        Poset p(ground, rel);
        CHECK(p.linear_extensions_count() == BigInt(p.linear_extensions_list().size()));
    }
}

TEST_CASE("sign vectors and zig-zags") {
    CHECK(zig_zag(5).signs == std::vector<int>{1, -1, 1, -1});
    CHECK(zig_zag(5).negated().signs == std::vector<int>{-1, 1, -1, 1});
    auto tables = number_tables(10);
    // |L(Z_n)| counts alternating permutations.
    for (int n = 2; n <= 10; ++n) {
        CHECK(sign_vector_linext(zig_zag(n)) == tables.euler[n]);
        CHECK(sign_vector_linext(zig_zag(n).negated()) == tables.euler[n]);
    }
}

TEST_CASE("DP equals enumeration on all sign vectors of length <= 7") {
    for (int len = 1; len <= 7; ++len)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            SignVector v;
            for (int j = 0; j < len; ++j) v.signs.push_back(bits >> j & 1 ? 1 : -1);
            Poset p = sign_vector_to_poset(v);
            CHECK(p.linear_extensions_count() == BigInt(p.linear_extensions_list().size()));
            auto back = path_poset_classify(p);
            REQUIRE(back.has_value());
            CHECK(*back == v);
        }
}

TEST_CASE("hill counts match the binomial formula, n <= 12") {
    for (int n = 3; n <= 12; ++n)
        for (int k = 2; k <= n - 1; ++k)
            CHECK(sign_vector_linext(hill(n, k)) == hill_count(n, k));
    CHECK_THROWS_AS(hill(5, 1), IndexOutOfRange);
}

TEST_CASE("right-side inversion") {
    SignVector v{{1, 1, -1, 1}};
    CHECK(right_side_inversion(v, 2).signs == std::vector<int>{1, -1, 1, -1});
    CHECK(right_side_inversion(v, 1) == v.negated());
    CHECK_THROWS_AS(right_side_inversion(v, 5), IndexOutOfRange);
}

TEST_CASE("strict increase at the maximal repeated-sign position, length <= 11") {
    for (int len = 2; len <= 11; ++len)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            SignVector v;
            for (int j = 0; j < len; ++j) v.signs.push_back(bits >> j & 1 ? 1 : -1);
            auto rep = prop_3_10_check(v);
            if (!rep.vacuous) CHECK(rep.ok);
        }
}

TEST_CASE("constant-suffix inversions all increase the count") {
    SignVector v{{1, -1, 1, 1, 1, 1}};  // constant from position 3
    auto rep = lemma_3_14_check(v, 3);
    CHECK(rep.ok);
    CHECK(rep.inverted_counts.size() == 3);
    CHECK_THROWS_AS(lemma_3_14_check(v, 2), HypothesisViolated);
}

TEST_CASE("Entringer slices of inverse zig-zag extensions, n <= 9") {
    for (int n = 2; n <= 9; ++n) CHECK(entringer_slice_check(n).ok);
}

TEST_CASE("conjecture scan reports no counterexamples at small lengths") {
    auto rep = conjecture_scan(8);
    CHECK(rep.cases > 0);
    CHECK(rep.counterexamples.empty());
}

TEST_CASE("poset of an edge ordering") {
    auto t = make_path(4);  // edges e1={1,2}, e2={2,3}, e3={3,4}
    // Ordering e2, e1, e3: vertex 2 sees e2 before e1; vertex 3 sees e2
    // before e3.
    Poset p = poset_from_ordering(t, {{2, 3}, {1, 2}, {3, 4}});
    CHECK(p.less(2, 1));
    CHECK(p.less(2, 3));
    CHECK(!p.less(1, 3));
    auto v = path_poset_classify(p);
    REQUIRE(v.has_value());
    CHECK(v->signs == std::vector<int>{-1, 1});
    CHECK_THROWS_AS(poset_from_ordering(t, {{2, 3}, {1, 2}}), NotAnOrdering);
    CHECK_THROWS_AS(poset_from_ordering(t, {{2, 3}, {1, 2}, {1, 2}}), NotAnOrdering);
}

namespace {

template <typename F>
void for_all_orderings(const LabelledTree& t, F f) {
    std::vector<int> idx(t.n() - 1);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::vector<Edge> s;
        for (int i : idx) s.push_back(t.edges()[i]);
        f(s);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

}  // namespace

TEST_CASE("cycles correspond to posets with multiplicity |L|, all trees n <= 5") {
    for (int n = 2; n <= 5; ++n)
        enumerate_trees(n, [&](const LabelledTree& t) {
            auto rep = theorem_3_1_check(t);
            CHECK(rep.ok);
            CHECK(rep.num_cycles == rep.num_posets);
        });
}

TEST_CASE("path and fork trees give exactly the path- and fork-type orders") {
    // Path with n edges: 2^(n-1) path-type posets.
    for (int n = 2; n <= 5; ++n) {
        auto t = make_path(n + 1);
        std::set<SignVector> seen;
        for_all_orderings(t, [&](const std::vector<Edge>& s) {
            auto v = path_poset_classify(poset_from_ordering(t, s));
            REQUIRE(v.has_value());
            seen.insert(*v);
        });
        CHECK(seen.size() == (1u << (n - 1)));
    }
    // Forked path with n edges: 6 * 2^(n-3) fork-type posets.
    for (int m = 5; m <= 7; ++m) {
        auto t = make_fork(m);
        int n = m - 1;
        std::set<ForkPoset> seen;
        for_all_orderings(t, [&](const std::vector<Edge>& s) {
            ForkPoset f = fork_poset_from_ordering(t, s);
            CHECK(fork_poset_to_poset(f) == poset_from_ordering(t, s));
            seen.insert(f);
        });
        CHECK(seen.size() == 6u * (1u << (n - 3)));
    }
}

TEST_CASE("fork-type closed form matches the DP, n = 2..7") {
    for (int n = 2; n <= 7; ++n)
        for (bool one_first : {true, false})
            for (int zsign : {1, -1})
                CHECK(fork_linext(lemma_3_18_poset(n, one_first, zsign)) ==
                      lemma_3_18_value(n));
}

TEST_CASE("poset json round trip") {
    Poset p({1, 2, 3, 4}, {{1, 3}, {2, 3}, {3, 4}});
    CHECK(poset_from_json(poset_to_json(p)) == p);
    SignVector v{{1, -1, 1}};
    CHECK(sign_vector_from_json(sign_vector_to_json(v)) == v);
}
