#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include "treecycle/numbers.hpp"
#include "treecycle/perm.hpp"
#include "treecycle/tree.hpp"

namespace treecycle {

/// Sequence listing every edge of a tree exactly once.
using EdgeOrdering = std::vector<Edge>;

/// Pairs (multiplicity, number of cycles attaining it), sorted by
/// multiplicity.
using FrequencyProfile = std::vector<std::pair<long long, long long>>;

/// Exact multiplicity map over all (n-1)! edge orderings of a tree.
struct CycleCensus {
    LabelledTree tree;
    std::map<CycleForm, long long> counts;
    long long total_orderings = 0;

    FrequencyProfile profile() const {
        std::map<long long, long long> by_mult;
        for (const auto& [cycle, mult] : counts) ++by_mult[mult];
        return {by_mult.begin(), by_mult.end()};
    }

    long long multiplicity(const CycleForm& c) const {
        auto it = counts.find(c);
        return it == counts.end() ? 0 : it->second;
    }

    long long max_multiplicity() const {
        long long mx = 0;
        for (const auto& [cycle, mult] : counts) mx = std::max(mx, mult);
        return mx;
    }

    std::vector<CycleForm> cycles_with_multiplicity(long long m) const {
        std::vector<CycleForm> out;
        for (const auto& [cycle, mult] : counts)
            if (mult == m) out.push_back(cycle);
        return out;
    }
};

namespace detail {

// Census over the orderings whose first edge is edges[first]; the remaining
// edges run through all permutations in lexicographic index order.
inline void census_block(const LabelledTree& t, int first,
                         std::map<CycleForm, long long>& counts) {
    const int m = t.n() - 1;
    std::vector<int> rest;
    for (int i = 0; i < m; ++i)
        if (i != first) rest.push_back(i);
    do {
        EdgeOrdering s{t.edges()[first]};
        for (int i : rest) s.push_back(t.edges()[i]);
        counts[cycle_form(product_of_transpositions(s, t.n()))] += 1;
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace detail

inline CycleCensus cycle_census(const LabelledTree& t, int cap = 9, int threads = 1) {
    if (t.n() > cap) throw CapExceeded("cycle_census: n=" + std::to_string(t.n()));
    CycleCensus census{t, {}, 0};
    const int m = t.n() - 1;
    if (m == 0) {
        census.total_orderings = 1;
        return census;
    }
    std::vector<std::map<CycleForm, long long>> blocks(m);
    if (threads <= 1) {
        for (int first = 0; first < m; ++first) detail::census_block(t, first, blocks[first]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (int first = w; first < m; first += threads)
                    detail::census_block(t, first, blocks[first]);
            });
        for (auto& th : pool) th.join();
    }
    // Merge is a commutative multiset union; block order fixes the result.
    for (const auto& block : blocks)
        for (const auto& [cycle, mult] : block) census.counts[cycle] += mult;
    census.total_orderings = 1;
    for (int i = 2; i <= m; ++i) census.total_orderings *= i;
    return census;
}

inline BigInt count_cycles_formula(const LabelledTree& t) {
    BigInt total = 1;
    for (int v = 1; v <= t.n(); ++v) total *= factorial(t.degree(v));
    return total;
}

/// Number of multiplicity-1 cycles: 0 unless the tree is a caterpillar, else
/// 2 prod l_i! (or l_1! when the body is a single vertex).
inline BigInt multiplicity_one_count(const LabelledTree& t) {
    auto shape = caterpillar_shape(t);
    if (!shape) return 0;
    BigInt total = 1;
    for (int l : shape->leaf_counts) total *= factorial(l);
    if (shape->body_len() > 1) total *= 2;
    return total;
}

// ---------------------------------------------------------------------------
// Extremal cycles on consecutively labelled paths

inline void require_consecutive_path(const LabelledTree& t) {
    if (!(t == make_path(t.n()))) throw NotAConsecutivePath();
}

/// The cycle (1,3,5,...,6,4,2) on n points.
inline CycleForm canonical_cycle(int n) {
    std::vector<int> orbit;
    for (int v = 1; v <= n; v += 2) orbit.push_back(v);
    for (int v = n - (n % 2); v >= 2; v -= 2) orbit.push_back(v);
    return make_n_cycle(std::move(orbit));
}

struct CanonicalMultiplicityReport {
    long long multiplicity = 0;
    bool ok = false;  // multiplicity = E_n, maximum shared only with the inverse
};

inline CanonicalMultiplicityReport canonical_multiplicity_check(const LabelledTree& path) {
    require_consecutive_path(path);
    const int n = path.n() - 1;  // edges
    auto census = cycle_census(path);
    CycleForm canon = canonical_cycle(path.n());
    CanonicalMultiplicityReport rep;
    rep.multiplicity = census.multiplicity(canon);
    auto top = census.cycles_with_multiplicity(census.max_multiplicity());
    CycleForm canon_inv = inverse_cycle(canon);
    bool top_ok = rep.multiplicity == census.max_multiplicity() &&
                  ((canon == canon_inv && top.size() == 1) ||
                   (top.size() == 2 && std::count(top.begin(), top.end(), canon) &&
                    std::count(top.begin(), top.end(), canon_inv)));
    rep.ok = top_ok && BigInt(rep.multiplicity) == number_tables(n).euler[n];
    return rep;
}

struct ExtremeCyclesReport {
    bool ok = false;
    long long value = 0;                 // the checked multiplicity
    std::vector<CycleForm> attained_by;  // cycles at that multiplicity
};

/// (1,2,...,m) and its inverse are realised exactly once, and nothing else is.
inline ExtremeCyclesReport least_frequent_check(const LabelledTree& path) {
    require_consecutive_path(path);
    auto census = cycle_census(path);
    ExtremeCyclesReport rep;
    rep.value = 1;
    rep.attained_by = census.cycles_with_multiplicity(1);
    std::vector<int> fwd(path.n());
    std::iota(fwd.begin(), fwd.end(), 1);
    CycleForm plus = make_n_cycle(fwd);
    CycleForm minus = inverse_cycle(plus);
    std::set<CycleForm> expected{plus, minus};
    rep.ok = std::set<CycleForm>(rep.attained_by.begin(), rep.attained_by.end()) == expected;
    return rep;
}

/// The four cycles (1,2,...,n-1,n+1,n)^{+-1} and (1,3,4,...,n,n+1,2)^{+-1}
/// attain multiplicity n-1, nothing lies strictly between 1 and n-1, and no
/// other cycle attains n-1.
inline ExtremeCyclesReport second_least_check(const LabelledTree& path) {
    require_consecutive_path(path);
    const int n = path.n() - 1;
    if (n < 4) throw NotAConsecutivePath("second_least_check needs >= 4 edges");
    auto census = cycle_census(path);
    ExtremeCyclesReport rep;
    rep.value = n - 1;
    rep.attained_by = census.cycles_with_multiplicity(n - 1);
    std::vector<int> a, b;
    for (int v = 1; v <= n - 1; ++v) a.push_back(v);
    a.push_back(n + 1);
    a.push_back(n);
    b.push_back(1);
    for (int v = 3; v <= n + 1; ++v) b.push_back(v);
    b.push_back(2);
    CycleForm ca = make_n_cycle(a), cb = make_n_cycle(b);
    std::set<CycleForm> expected{ca, inverse_cycle(ca), cb, inverse_cycle(cb)};
    bool gap = true;
    for (const auto& [cycle, mult] : census.counts) gap = gap && (mult == 1 || mult >= n - 1);
    rep.ok = gap &&
             std::set<CycleForm>(rep.attained_by.begin(), rep.attained_by.end()) == expected;
    return rep;
}

/// For each vertex count n, the second-largest multiplicity in the census of
/// the consecutively labelled path on n vertices (0 if only the maximum
/// occurs).
inline std::vector<long long> second_most_frequent_sequence(int max_n, int cap = 9) {
    if (max_n > cap) throw CapExceeded("second_most_frequent_sequence");
    std::vector<long long> seq;
    for (int n = 1; n <= max_n; ++n) {
        if (n == 1) {
            seq.push_back(0);
            continue;
        }
        auto census = cycle_census(make_path(n), cap);
        std::set<long long> values;
        for (const auto& [cycle, mult] : census.counts) values.insert(mult);
        seq.push_back(values.size() < 2 ? 0 : *std::next(values.rbegin()));
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Forked paths

/// Most frequent cycle of the forked path on m vertices:
/// (1,2,4,6,...,7,5,3) — and (1,2,3,5,7,...,6,4) with the inverses.
inline CycleForm fork_top_cycle_even_ascent(int m) {
    std::vector<int> orbit{1, 2};
    for (int v = 4; v <= m; v += 2) orbit.push_back(v);
    for (int v = m - (m % 2 == 0 ? 1 : 0); v >= 3; v -= 2) orbit.push_back(v);
    return make_n_cycle(std::move(orbit));
}

inline CycleForm fork_top_cycle_odd_ascent(int m) {
    std::vector<int> orbit{1, 2, 3};
    for (int v = 5; v <= m; v += 2) orbit.push_back(v);
    for (int v = m - (m % 2 == 0 ? 0 : 1); v >= 4; v -= 2) orbit.push_back(v);
    return make_n_cycle(std::move(orbit));
}

struct ForkMaxReport {
    bool ok = false;
    long long max_multiplicity = 0;
    BigInt predicted;                    // A_n for the fork on n+1 vertices
    std::vector<CycleForm> attained_by;  // expect exactly the four stated cycles
};

inline ForkMaxReport fork_max_check(const LabelledTree& fork, int cap = 9) {
    const int m = fork.n();
    if (m < 5 || !(fork == make_fork(m))) throw NotAForkedPath();
    auto census = cycle_census(fork, cap);
    ForkMaxReport rep;
    rep.max_multiplicity = census.max_multiplicity();
    rep.predicted = number_tables(m - 1).almost_updown[m - 1];
    rep.attained_by = census.cycles_with_multiplicity(rep.max_multiplicity);
    CycleForm c1 = fork_top_cycle_even_ascent(m), c2 = fork_top_cycle_odd_ascent(m);
    std::set<CycleForm> expected{c1, inverse_cycle(c1), c2, inverse_cycle(c2)};
    rep.ok = BigInt(rep.max_multiplicity) == rep.predicted &&
             std::set<CycleForm>(rep.attained_by.begin(), rep.attained_by.end()) == expected;
    return rep;
}

// ---------------------------------------------------------------------------
// Cayley graph diameter

namespace detail {

inline int perm_rank(const std::vector<int>& images) {
    // Lehmer code, mixed radix.
    const int n = static_cast<int>(images.size());
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (images[j] < images[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

}  // namespace detail

/// Eccentricity of the identity in the Cayley graph of S_n with connection
/// set E(T); the graph is vertex-transitive, so this is its diameter.
inline int cayley_diameter(const LabelledTree& t, int cap = 7) {
    const int n = t.n();
    if (n > cap) throw CapExceeded("cayley_diameter: n=" + std::to_string(n));
    long long size = 1;
    for (int i = 2; i <= n; ++i) size *= i;
    std::vector<int> dist(size, -1);
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    std::vector<std::vector<int>> queue{id};
    dist[detail::perm_rank(id)] = 0;
    int diameter = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto cur = queue[q];
        int d = dist[detail::perm_rank(cur)];
        diameter = std::max(diameter, d);
        for (const auto& [a, b] : t.edges()) {
            auto next = cur;
            // Right-multiplying by (a,b) swaps the values a and b.
            for (int& x : next)
                if (x == a)
                    x = b;
                else if (x == b)
                    x = a;
            int r = detail::perm_rank(next);
            if (dist[r] < 0) {
                dist[r] = d + 1;
                queue.push_back(std::move(next));
            }
        }
    }
    return diameter;
}

}  // namespace treecycle
