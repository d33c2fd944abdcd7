#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "treecycle/census.hpp"
#include "treecycle/numbers.hpp"
#include "treecycle/perm.hpp"
#include "treecycle/tree.hpp"

namespace treecycle {

/// Tree edges drawn as chords of a circle whose boundary carries the cycle's
/// orbit, starting at the minimum element.
struct ChordDiagram {
    int n = 0;
    std::vector<int> boundary;               // boundary[p] = vertex at position p
    std::vector<std::pair<int, int>> chords; // position pairs, p < q, edge order
};

inline ChordDiagram build_diagram(const LabelledTree& t, const CycleForm& c) {
    if (c.n != t.n() || !c.is_n_cycle()) throw NotAnNCycle();
    ChordDiagram d;
    d.n = t.n();
    d.boundary = c.cycles[0];
    std::vector<int> pos(d.n + 1);
    for (int p = 0; p < d.n; ++p) pos[d.boundary[p]] = p;
    for (const auto& [a, b] : t.edges()) {
        int p = pos[a], q = pos[b];
        d.chords.emplace_back(std::min(p, q), std::max(p, q));
    }
    return d;
}

inline bool is_crossing_free(const ChordDiagram& d) {
    for (std::size_t i = 0; i < d.chords.size(); ++i)
        for (std::size_t j = i + 1; j < d.chords.size(); ++j) {
            auto [a, b] = d.chords[i];
            auto [c, e] = d.chords[j];
            // Strict interleaving; shared endpoints never cross.
            if ((a < c && c < b && b < e) || (c < a && a < e && e < b)) return false;
        }
    return true;
}

/// Whether some ordering of E(T) multiplies to c.
inline bool is_realisable(const LabelledTree& t, const CycleForm& c) {
    return is_crossing_free(build_diagram(t, c));
}

/// An explicit ordering of E(T) whose left-to-right product is c, or nullopt
/// when none exists. Peels leaves: a leaf u with tree neighbour v is split
/// off last when c(u) = v and first when c(v) = u.
inline std::optional<EdgeOrdering> realising_ordering(const LabelledTree& t,
                                                      const CycleForm& c) {
    if (!is_realisable(t, c)) return std::nullopt;
    const int n = t.n();
    std::vector<std::set<int>> adj(n + 1);
    for (const auto& [a, b] : t.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<int> next(n + 1), prev(n + 1);
    {
        const auto& orbit = c.cycles[0];
        for (int i = 0; i < n; ++i) {
            next[orbit[i]] = orbit[(i + 1) % n];
            prev[orbit[i]] = orbit[(i - 1 + n) % n];
        }
    }
    std::vector<char> alive(n + 1, 1);
    EdgeOrdering front, back;  // final ordering = front ++ reverse(back)
    for (int remaining = n; remaining > 1; --remaining) {
        int leaf = 0;
        bool last = false;
        for (int u = 1; u <= n && !leaf; ++u) {
            if (!alive[u] || adj[u].size() != 1) continue;
            int v = *adj[u].begin();
            if (next[u] == v) {
                leaf = u;
                last = true;  // c = c' * (u,v): edge goes at the end
            } else if (prev[u] == v) {
                leaf = u;     // c = (u,v) * c': edge goes at the front
            }
        }
        if (!leaf) return std::nullopt;  // not reachable for realisable pairs
        int v = *adj[leaf].begin();
        (last ? back : front).push_back(make_edge(leaf, v));
        // Splice the leaf out of the cycle.
        next[prev[leaf]] = next[leaf];
        prev[next[leaf]] = prev[leaf];
        alive[leaf] = 0;
        adj[v].erase(leaf);
        adj[leaf].clear();
    }
    front.insert(front.end(), back.rbegin(), back.rend());
    return front;
}

/// Number of labelled trees on n vertices realising the cycle (1,2,...,n);
/// by symmetry the count is the same for every n-cycle.
inline BigInt count_realising_trees(int n, int cap = 8) {
    if (n > cap) throw CapExceeded("count_realising_trees: n=" + std::to_string(n));
    std::vector<int> orbit(n);
    std::iota(orbit.begin(), orbit.end(), 1);
    CycleForm c = make_n_cycle(std::move(orbit));
    BigInt count = 0;
    enumerate_trees(n, [&](const LabelledTree& t) {
        if (is_realisable(t, c)) ++count;
    }, cap);
    return count;
}

struct OrbitIdentityReport {
    bool ok = false;
    BigInt realising;  // isomorphic copies of t realising a fixed n-cycle
    BigInt predicted;  // n * C(T) / |Aut(T)|
    BigInt orbit_size; // n! / |Aut(T)|, checked against the relabelling orbit
};

/// Checks n * C(T) = |Aut(T)| * D(T), where D(T) counts the trees isomorphic
/// to T realising a fixed n-cycle. The orbit is generated by brute-force
/// relabelling.
inline OrbitIdentityReport orbit_identity_check(const LabelledTree& t, int cap = 7) {
    const int n = t.n();
    if (n > cap) throw CapExceeded("orbit_identity_check: n=" + std::to_string(n));
    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 1);
    std::set<LabelledTree> orbit;
    do {
        std::vector<Edge> edges;
        for (const auto& [a, b] : t.edges())
            edges.push_back(make_edge(relabel[a - 1], relabel[b - 1]));
        orbit.insert(LabelledTree(n, std::move(edges)));
    } while (std::next_permutation(relabel.begin(), relabel.end()));

    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 1);
    CycleForm c = make_n_cycle(std::move(seq));
    OrbitIdentityReport rep;
    for (const auto& member : orbit)
        if (is_realisable(member, c)) ++rep.realising;
    rep.orbit_size = orbit.size();
    BigInt aut = automorphism_order(t);
    rep.predicted = n * count_cycles_formula(t) / aut;
    rep.ok = rep.predicted == rep.realising && rep.orbit_size * aut == factorial(n);
    return rep;
}

}  // namespace treecycle
