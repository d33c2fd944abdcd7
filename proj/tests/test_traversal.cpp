#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "treecycle/traversal.hpp"

using namespace treecycle;

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

TEST_CASE("traversal basics") {
    auto t = make_path(3);
    auto tr = traverse(t, {{1, 2}, {2, 3}});  // product (1 3 2)
    CHECK(tr.hits == std::vector<int>{1, 3, 2});
    CHECK(tr.steps[0] == std::vector<Edge>{{1, 2}, {2, 3}});
    auto usage = edge_usage_count(tr);
    CHECK(usage[{1, 2}] == 2);
    CHECK(usage[{2, 3}] == 2);
    CHECK_THROWS_AS(traverse(t, {{1, 3}, {2, 3}}), EdgeNotInTree);
}

TEST_CASE("every ordering multiplies to an n-cycle, n <= 5") {
    for (int n = 2; n <= 5; ++n)
        enumerate_trees(n, [&](const LabelledTree& t) {
            for_all_orderings(t, [&](const std::vector<Edge>& s) {
                CHECK(cycle_form(product_of_transpositions(s, n)).is_n_cycle());
            });
        });
}

TEST_CASE("each edge is used exactly twice in any traversal, n <= 5") {
    for (int n = 2; n <= 5; ++n)
        enumerate_trees(n, [&](const LabelledTree& t) {
            for_all_orderings(t, [&](const std::vector<Edge>& s) {
                for (int start = 1; start <= n; ++start) {
                    auto usage = edge_usage_count(traverse(t, s, start));
                    REQUIRE(usage.size() == t.edges().size());
                    for (const auto& [e, c] : usage) CHECK(c == 2);
                }
            });
        });
}

TEST_CASE("traversal visits every vertex once") {
    auto t = make_fork(6);
    for_all_orderings(t, [&](const std::vector<Edge>& s) {
        auto tr = traverse(t, s, 2);
        std::vector<int> sorted = tr.hits;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6});
    });
}
