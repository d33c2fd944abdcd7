#pragma once

#include <map>
#include <vector>

#include "treecycle/perm.hpp"
#include "treecycle/tree.hpp"

namespace treecycle {

/// The circuit obtained by repeatedly applying the product of an edge
/// sequence from a start vertex, decomposed into tree-path steps. The k-th
/// step is the unique tree path from start*g^(k-1) to start*g^k where g is
/// the left-to-right product of the sequence.
struct Traversal {
    int start = 1;
    std::vector<int> hits;                 // vertices landed on, start first
    std::vector<std::vector<Edge>> steps;  // one tree path per hit
    std::vector<Edge> flat;                // concatenation of the steps
};

inline Traversal traverse(const LabelledTree& t, const std::vector<Edge>& seq, int start = 1) {
    for (const auto& [a, b] : seq)
        if (!t.has_edge(a, b)) throw EdgeNotInTree();
    Perm g = product_of_transpositions(seq, t.n());
    Traversal tr;
    tr.start = start;
    int cur = start;
    do {
        tr.hits.push_back(cur);
        int next = g.apply(cur);
        tr.steps.push_back(t.path(cur, next));
        for (const auto& e : tr.steps.back()) tr.flat.push_back(e);
        cur = next;
    } while (cur != start);
    return tr;
}

inline std::map<Edge, int> edge_usage_count(const Traversal& tr) {
    std::map<Edge, int> counts;
    for (const auto& e : tr.flat) ++counts[e];
    return counts;
}

}  // namespace treecycle
