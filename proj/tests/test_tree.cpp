#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "treecycle/tree.hpp"

using namespace treecycle;

TEST_CASE("edge normalisation") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK_THROWS_AS(make_edge(2, 2), CycleDetected);
}

TEST_CASE("tree validation") {
    CHECK_NOTHROW(LabelledTree(2, {{1, 2}}));
    CHECK_NOTHROW(LabelledTree(1, {}));
    CHECK_THROWS_AS(LabelledTree(3, {{1, 2}}), WrongEdgeCount);
    CHECK_THROWS_AS(LabelledTree(3, {{1, 2}, {2, 4}}), BadVertexLabel);
    CHECK_THROWS_AS(LabelledTree(3, {{1, 2}, {2, 1}}), CycleDetected);
    CHECK_THROWS_AS(LabelledTree(5, {{1, 2}, {2, 3}, {1, 3}, {4, 5}}), Disconnected);
}

TEST_CASE("degrees and adjacency") {
    auto t = make_star(6);
    CHECK(t.degree(1) == 5);
    CHECK(t.degree(4) == 1);
    CHECK(t.has_edge(1, 4));
    CHECK(!t.has_edge(2, 4));
    auto p = make_path(4);
    CHECK(p.degree(1) == 1);
    CHECK(p.degree(2) == 2);
}

TEST_CASE("tree path endpoints") {
    auto t = make_fork(6);  // leaves 1,2 on 3, path 3-4-5-6
    CHECK(t.path(1, 2) == std::vector<Edge>{{1, 3}, {2, 3}});
    CHECK(t.path(1, 6) == std::vector<Edge>{{1, 3}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(t.path(4, 4).empty());
}

TEST_CASE("prufer round trip, all trees up to 7 vertices") {
    for (int n = 2; n <= 7; ++n) {
        long long count = 0;
        std::set<std::vector<Edge>> seen;
        enumerate_trees(n, [&](const LabelledTree& t) {
            ++count;
            CHECK(prufer_decode(prufer_encode(t)) == t);
            seen.insert(t.edges());
        });
        long long cayley = 1;  // n^(n-2)
        for (int i = 0; i < n - 2; ++i) cayley *= n;
        CHECK(count == cayley);
        CHECK(static_cast<long long>(seen.size()) == cayley);
    }
    CHECK_THROWS_AS(enumerate_trees(10, [](const LabelledTree&) {}), CapExceeded);
}

TEST_CASE("caterpillar shapes") {
    auto path6 = caterpillar_shape(make_path(6));
    REQUIRE(path6.has_value());
    CHECK(path6->body == std::vector<int>{2, 3, 4, 5});
    CHECK(path6->leaf_counts == std::vector<int>{1, 0, 0, 1});

    auto star6 = caterpillar_shape(make_star(6));
    REQUIRE(star6.has_value());
    CHECK(star6->body == std::vector<int>{1});
    CHECK(star6->leaf_counts == std::vector<int>{5});

    auto fork6 = caterpillar_shape(make_fork(6));
    REQUIRE(fork6.has_value());
    CHECK(fork6->leaf_counts == std::vector<int>{1, 0, 2});

    // Spider: centre 1, three legs of length two. Stripping leaves keeps a
    // degree-3 vertex, so it is not a caterpillar.
    LabelledTree spider(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}});
    CHECK(!caterpillar_shape(spider).has_value());

    CHECK(caterpillar_shape(make_path(2)) == CaterpillarShape{{1}, {1}});
}

namespace {

long long brute_automorphisms(const LabelledTree& t) {
    const int n = t.n();
    std::set<Edge> edge_set(t.edges().begin(), t.edges().end());
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 1);
    long long count = 0;
    do {
        bool auto_ok = true;
        for (const auto& [a, b] : t.edges())
            if (!edge_set.count(make_edge(g[a - 1], g[b - 1]))) {
                auto_ok = false;
                break;
            }
        if (auto_ok) ++count;
    } while (std::next_permutation(g.begin(), g.end()));
    return count;
}

}  // namespace

TEST_CASE("automorphism order vs brute force, all trees up to 6 vertices") {
    for (int n = 2; n <= 6; ++n)
        enumerate_trees(n, [&](const LabelledTree& t) {
            CHECK(static_cast<long long>(automorphism_order(t)) == brute_automorphisms(t));
        });
    CHECK(automorphism_order(make_star(6)) == 120);
    CHECK(automorphism_order(make_path(6)) == 2);
}
