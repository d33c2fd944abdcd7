#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "treecycle/census.hpp"
#include "treecycle/json_io.hpp"

using namespace treecycle;

TEST_CASE("path and star censuses match the 6-vertex table rows") {
    auto path = cycle_census(make_path(6));
    CHECK(path.total_orderings == 120);
    CHECK(path.counts.size() == 16);
    CHECK(path.profile() ==
          FrequencyProfile{{1, 2}, {4, 4}, {6, 2}, {9, 4}, {11, 2}, {16, 2}});

    auto star = cycle_census(make_star(6));
    CHECK(star.counts.size() == 120);
    CHECK(star.profile() == FrequencyProfile{{1, 120}});

    auto fork = cycle_census(make_fork(6));
    CHECK(fork.counts.size() == 24);
    CHECK(fork.profile() ==
          FrequencyProfile{{1, 4}, {3, 4}, {4, 4}, {6, 4}, {7, 4}, {9, 4}});
}

TEST_CASE("census respects the cap and the thread count") {
    CHECK_THROWS_AS(cycle_census(make_path(10)), CapExceeded);
    auto serial = cycle_census(make_fork(7), 9, 1);
    auto parallel = cycle_census(make_fork(7), 9, 4);
    CHECK(serial.counts == parallel.counts);
    CHECK(serial.total_orderings == parallel.total_orderings);
}

TEST_CASE("cycle count formula against exhaustive census, all trees n <= 5") {
    for (int n = 2; n <= 5; ++n)
        enumerate_trees(n, [&](const LabelledTree& t) {
            auto census = cycle_census(t);
            CHECK(BigInt(census.counts.size()) == count_cycles_formula(t));
            for (const auto& [cycle, mult] : census.counts) CHECK(cycle.is_n_cycle());
        });
}

TEST_CASE("multiplicity-1 count matches the caterpillar formula, all trees n <= 6") {
    for (int n = 2; n <= 6; ++n)
        enumerate_trees(n, [&](const LabelledTree& t) {
            auto census = cycle_census(t);
            long long ones = 0;
            for (const auto& [cycle, mult] : census.counts)
                if (mult == 1) ++ones;
            CHECK(BigInt(ones) == multiplicity_one_count(t));
        });
}

TEST_CASE("canonical cycle of a path attains the Euler-number maximum") {
    CHECK(canonical_cycle(6).cycles[0] == std::vector<int>{1, 3, 5, 6, 4, 2});
    CHECK(canonical_cycle(5).cycles[0] == std::vector<int>{1, 3, 5, 4, 2});
    auto tables = number_tables(7);
    for (int n = 2; n <= 7; ++n) {
        auto rep = canonical_multiplicity_check(make_path(n + 1));
        CHECK(rep.ok);
        CHECK(BigInt(rep.multiplicity) == tables.euler[n]);
    }
    CHECK_THROWS_AS(canonical_multiplicity_check(make_star(5)), NotAConsecutivePath);
}

TEST_CASE("least and second-least frequent cycles on paths") {
    for (int n = 2; n <= 7; ++n) CHECK(least_frequent_check(make_path(n + 1)).ok);
    for (int n = 4; n <= 7; ++n) {
        auto rep = second_least_check(make_path(n + 1));
        CHECK(rep.ok);
        CHECK(rep.value == n - 1);
        CHECK(rep.attained_by.size() == 4);
    }
    CHECK_THROWS_AS(second_least_check(make_path(4)), NotAConsecutivePath);
}

TEST_CASE("second most frequent multiplicity sequence") {
    CHECK(second_most_frequent_sequence(7) ==
          std::vector<long long>{0, 0, 0, 1, 3, 11, 40});
}

TEST_CASE("fork maximisers") {
    CHECK(fork_top_cycle_even_ascent(6).cycles[0] == std::vector<int>{1, 2, 4, 6, 5, 3});
    CHECK(fork_top_cycle_odd_ascent(6).cycles[0] == std::vector<int>{1, 2, 3, 5, 6, 4});
    CHECK(fork_top_cycle_even_ascent(7).cycles[0] == std::vector<int>{1, 2, 4, 6, 7, 5, 3});
    CHECK(fork_top_cycle_odd_ascent(7).cycles[0] == std::vector<int>{1, 2, 3, 5, 7, 6, 4});
    auto rep = fork_max_check(make_fork(6));
    CHECK(rep.ok);
    CHECK(rep.max_multiplicity == 9);
    CHECK(rep.attained_by.size() == 4);
    CHECK_THROWS_AS(fork_max_check(make_path(6)), NotAForkedPath);
}

TEST_CASE("Cayley graph diameters of 6-vertex trees") {
    CHECK(cayley_diameter(make_path(6)) == 15);
    CHECK(cayley_diameter(make_star(6)) == 7);
    CHECK(cayley_diameter(make_fork(6)) == 11);
    CHECK_THROWS_AS(cayley_diameter(make_path(8)), CapExceeded);
}

TEST_CASE("census json and csv output") {
    auto census = cycle_census(make_path(4));
    Json j = census_to_json(census, 5);
    CHECK(j["num_cycles"] == 4);
    CHECK(j["diameter"] == 5);
    CHECK(j["tree"]["n"] == 4);
    CHECK(profile_to_csv(census.profile()) ==
          "multiplicity,num_cycles\n1,2\n2,2\n");
}
