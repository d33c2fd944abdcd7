#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "treecycle/errors.hpp"

namespace treecycle {

// Unordered vertex pair {i,j}, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) {
    if (a == b) throw CycleDetected("self-loop " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Labelled tree on vertices 1..n. Immutable after construction; edges are
/// kept sorted so trees compare by value.
class LabelledTree {
  public:
    LabelledTree(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 1) throw BadVertexLabel("vertex count must be >= 1");
        if (static_cast<int>(edges.size()) != n - 1)
            throw WrongEdgeCount("tree on " + std::to_string(n) + " vertices needs " +
                                 std::to_string(n - 1) + " edges, got " +
                                 std::to_string(edges.size()));
        for (auto& e : edges) {
            e = make_edge(e.first, e.second);
            if (e.first < 1 || e.second > n)
                throw BadVertexLabel("edge endpoint out of 1.." + std::to_string(n));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw CycleDetected("duplicate edge");
        edges_ = std::move(edges);
        adj_.assign(n + 1, {});
        for (const auto& [a, b] : edges_) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        // n-1 edges + connected implies acyclic.
        std::vector<char> seen(n + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n) throw Disconnected();
    }

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    bool has_edge(int a, int b) const {
        Edge e = make_edge(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    bool operator==(const LabelledTree& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator<(const LabelledTree& o) const {
        return std::tie(n_, edges_) < std::tie(o.n_, o.edges_);
    }

    /// Unique path between two vertices, as the list of intermediate edges.
    std::vector<Edge> path(int from, int to) const {
        check_vertex(from);
        check_vertex(to);
        std::vector<int> parent(n_ + 1, 0);
        std::vector<int> queue{from};
        parent[from] = from;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int v = queue[q];
            if (v == to) break;
            for (int w : adj_[v])
                if (!parent[w]) {
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
        std::vector<Edge> result;
        for (int v = to; v != from; v = parent[v]) result.push_back(make_edge(v, parent[v]));
        std::reverse(result.begin(), result.end());
        return result;
    }

  private:
    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw BadVertexLabel("vertex " + std::to_string(v));
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

inline LabelledTree make_tree(int n, std::vector<Edge> edges) {
    return LabelledTree(n, std::move(edges));
}

inline LabelledTree make_path(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return LabelledTree(n, std::move(edges));
}

inline LabelledTree make_star(int n, int centre = 1) {
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v)
        if (v != centre) edges.push_back(make_edge(centre, v));
    return LabelledTree(n, std::move(edges));
}

/// Forked path on n vertices: leaves 1 and 2 attached to 3, then the path
/// 3,4,...,n.
inline LabelledTree make_fork(int n) {
    if (n < 4) throw BadVertexLabel("fork needs at least 4 vertices");
    std::vector<Edge> edges{{1, 3}, {2, 3}};
    for (int i = 3; i < n; ++i) edges.push_back({i, i + 1});
    return LabelledTree(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Prufer codec

struct PruferCode {
    int n = 0;                 // vertex count of the encoded tree
    std::vector<int> seq;      // n-2 entries in 1..n

    bool operator==(const PruferCode&) const = default;
};

inline PruferCode prufer_encode(const LabelledTree& t) {
    const int n = t.n();
    if (n < 2) throw BadVertexLabel("prufer_encode needs n >= 2");
    std::vector<int> deg(n + 1, 0);
    std::vector<std::set<int>> adj(n + 1);
    for (const auto& [a, b] : t.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
        ++deg[a];
        ++deg[b];
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    PruferCode code;
    code.n = n;
    for (int step = 0; step < n - 2; ++step) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        int parent = *adj[leaf].begin();
        code.seq.push_back(parent);
        adj[parent].erase(leaf);
        if (--deg[parent] == 1) leaves.insert(parent);
    }
    return code;
}

inline LabelledTree prufer_decode(const PruferCode& code) {
    const int n = code.n;
    if (n < 2) throw BadVertexLabel("prufer_decode needs n >= 2");
    if (static_cast<int>(code.seq.size()) != n - 2) throw WrongEdgeCount("prufer length");
    std::vector<int> deg(n + 1, 1);
    for (int v : code.seq) {
        if (v < 1 || v > n) throw BadVertexLabel("prufer entry " + std::to_string(v));
        ++deg[v];
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int v : code.seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(make_edge(leaf, v));
        if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back(make_edge(a, b));
    return LabelledTree(n, std::move(edges));
}

/// Visits every labelled tree on n vertices exactly once, via Prufer codes in
/// lexicographic order.
inline void enumerate_trees(int n, const std::function<void(const LabelledTree&)>& visit,
                            int cap = 9) {
    if (n < 2 || n > cap) throw CapExceeded("enumerate_trees: n=" + std::to_string(n));
    PruferCode code;
    code.n = n;
    code.seq.assign(std::max(0, n - 2), 1);
    while (true) {
        visit(prufer_decode(code));
        int i = static_cast<int>(code.seq.size()) - 1;
        while (i >= 0 && code.seq[i] == n) code.seq[i--] = 1;
        if (i < 0) break;
        ++code.seq[i];
    }
}

// ---------------------------------------------------------------------------
// Caterpillars

struct CaterpillarShape {
    std::vector<int> body;         // body vertices v_1..v_r in path order
    std::vector<int> leaf_counts;  // l_1..l_r

    int body_len() const { return static_cast<int>(body.size()); }
    bool operator==(const CaterpillarShape&) const = default;
};

/// Body/leaf-count profile of a caterpillar, or nullopt when removing all
/// leaves does not leave a path. The body is oriented so that the leaf-count
/// sequence is lexicographically <= its reverse.
inline std::optional<CaterpillarShape> caterpillar_shape(const LabelledTree& t) {
    const int n = t.n();
    if (n < 2) throw BadVertexLabel("caterpillar_shape needs n >= 2");
    if (n == 2) return CaterpillarShape{{1}, {1}};
    std::vector<char> is_leaf(n + 1, 0);
    for (int v = 1; v <= n; ++v) is_leaf[v] = t.degree(v) == 1;
    std::vector<int> body;
    for (int v = 1; v <= n; ++v)
        if (!is_leaf[v]) body.push_back(v);
    // Body degrees within the leaf-stripped subgraph.
    std::vector<int> inner_deg(n + 1, 0);
    for (int v : body)
        for (int w : t.neighbours(v))
            if (!is_leaf[w]) ++inner_deg[v];
    int ends = 0;
    for (int v : body) {
        if (inner_deg[v] > 2) return std::nullopt;
        if (inner_deg[v] <= 1) ++ends;
    }
    // Connected subgraph with max degree 2 and at most two endpoints is a path.
    if (body.size() > 1 && ends != 2) return std::nullopt;

    // Walk the body from one endpoint.
    std::vector<int> ordered;
    int start = body.front();
    for (int v : body)
        if (inner_deg[v] <= 1) {
            start = v;
            break;
        }
    int prev = 0, cur = start;
    while (true) {
        ordered.push_back(cur);
        int next = 0;
        for (int w : t.neighbours(cur))
            if (!is_leaf[w] && w != prev) next = w;
        if (!next) break;
        prev = cur;
        cur = next;
    }
    std::vector<int> counts;
    for (int v : ordered) {
        int c = 0;
        for (int w : t.neighbours(v))
            if (is_leaf[w]) ++c;
        counts.push_back(c);
    }
    std::vector<int> rev_counts(counts.rbegin(), counts.rend());
    if (rev_counts < counts) {
        counts = rev_counts;
        std::reverse(ordered.begin(), ordered.end());
    }
    return CaterpillarShape{std::move(ordered), std::move(counts)};
}

// ---------------------------------------------------------------------------
// Automorphism order (AHU canonical forms, rooted at the centre)

namespace detail {

inline std::vector<int> tree_centre(const LabelledTree& t) {
    const int n = t.n();
    if (n == 1) return {1};
    std::vector<int> deg(n + 1);
    std::vector<int> queue;
    for (int v = 1; v <= n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) queue.push_back(v);
    }
    int remaining = n;
    std::vector<char> removed(n + 1, 0);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : queue) {
            removed[v] = 1;
            --remaining;
            for (int w : t.neighbours(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        queue = std::move(next);
    }
    std::vector<int> centre;
    for (int v = 1; v <= n; ++v)
        if (!removed[v]) centre.push_back(v);
    return centre;
}

// Returns (canonical id of subtree rooted at v, |Aut| of that rooted subtree).
inline std::pair<int, std::uint64_t> ahu(const LabelledTree& t, int v, int parent,
                                         std::map<std::vector<int>, int>& ids) {
    std::vector<int> child_ids;
    std::uint64_t aut = 1;
    for (int w : t.neighbours(v))
        if (w != parent) {
            auto [id, a] = ahu(t, w, v, ids);
            child_ids.push_back(id);
            aut *= a;
        }
    std::sort(child_ids.begin(), child_ids.end());
    for (std::size_t i = 0, j = 0; i < child_ids.size(); i = j) {
        std::uint64_t run = 1;
        for (j = i; j < child_ids.size() && child_ids[j] == child_ids[i]; ++j) {}
        for (std::uint64_t k = 2; k <= j - i; ++k) run *= k;
        aut *= run;
    }
    auto [it, inserted] = ids.emplace(child_ids, static_cast<int>(ids.size()));
    return {it->second, aut};
}

}  // namespace detail

inline std::uint64_t automorphism_order(const LabelledTree& t) {
    auto centre = detail::tree_centre(t);
    std::map<std::vector<int>, int> ids;
    if (centre.size() == 1) return detail::ahu(t, centre[0], 0, ids).second;
    auto [id1, a1] = detail::ahu(t, centre[0], centre[1], ids);
    auto [id2, a2] = detail::ahu(t, centre[1], centre[0], ids);
    return a1 * a2 * (id1 == id2 ? 2 : 1);
}

}  // namespace treecycle
