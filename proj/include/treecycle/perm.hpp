#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

#include "treecycle/errors.hpp"
#include "treecycle/tree.hpp"

namespace treecycle {

class Perm;
inline Perm compose(const Perm& p, const Perm& q);

/// Permutation of {1..n}. The stored sequence is the passive form
/// [a_1,...,a_n]; the active map sends i to a_i. Composition is left to
/// right everywhere: (p*q)(x) = q(p(x)).
class Perm {
  public:
    explicit Perm(std::vector<int> images) : images_(std::move(images)) {
        std::vector<char> seen(images_.size() + 1, 0);
        for (int a : images_) {
            if (a < 1 || a > n() || seen[a]) throw BadVertexLabel("not a permutation");
            seen[a] = 1;
        }
    }

    static Perm identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        return Perm(std::move(im));
    }

    static Perm transposition(int n, int i, int j) {
        if (i < 1 || i > n || j < 1 || j > n || i == j)
            throw BadVertexLabel("transposition out of range");
        Perm p = identity(n);
        std::swap(p.images_[i - 1], p.images_[j - 1]);
        return p;
    }

    int n() const { return static_cast<int>(images_.size()); }
    int apply(int x) const {
        if (x < 1 || x > n()) throw BadVertexLabel("apply out of range");
        return images_[x - 1];
    }
    const std::vector<int>& passive() const { return images_; }

    Perm operator*(const Perm& q) const { return compose(*this, q); }
    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return images_ < o.images_; }

  private:
    std::vector<int> images_;
};

inline Perm compose(const Perm& p, const Perm& q) {
    if (p.n() != q.n()) throw SizeMismatch();
    std::vector<int> im(p.n());
    for (int x = 1; x <= p.n(); ++x) im[x - 1] = q.apply(p.apply(x));
    return Perm(std::move(im));
}

inline Perm invert(const Perm& p) {
    std::vector<int> im(p.n());
    for (int x = 1; x <= p.n(); ++x) im[p.apply(x) - 1] = x;
    return Perm(std::move(im));
}

/// Left-to-right product of the transpositions given by a sequence of vertex
/// pairs. The empty sequence is the identity.
inline Perm product_of_transpositions(const std::vector<Edge>& edges, int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    // Track the image of each point through the whole sequence at once.
    for (int x = 1; x <= n; ++x) {
        int cur = x;
        for (const auto& [a, b] : edges) {
            if (a < 1 || b > n) throw BadVertexLabel("edge endpoint out of range");
            if (cur == a)
                cur = b;
            else if (cur == b)
                cur = a;
        }
        im[x - 1] = cur;
    }
    return Perm(std::move(im));
}

// ---------------------------------------------------------------------------
// Cycle form

/// Disjoint cycle decomposition, fixed points omitted. Canonical: each cycle
/// starts at its minimum element, cycles sorted by that minimum.
struct CycleForm {
    int n = 0;
    std::vector<std::vector<int>> cycles;

    bool operator==(const CycleForm&) const = default;
    bool operator<(const CycleForm& o) const { return cycles < o.cycles; }

    bool is_n_cycle() const {
        return cycles.size() == 1 && static_cast<int>(cycles[0].size()) == n && n >= 2;
    }
};

inline CycleForm cycle_form(const Perm& p) {
    CycleForm cf;
    cf.n = p.n();
    std::vector<char> seen(p.n() + 1, 0);
    for (int x = 1; x <= p.n(); ++x) {
        if (seen[x] || p.apply(x) == x) continue;
        std::vector<int> cyc;
        for (int y = x; !seen[y]; y = p.apply(y)) {
            seen[y] = 1;
            cyc.push_back(y);
        }
        cf.cycles.push_back(std::move(cyc));
    }
    return cf;
}

inline Perm from_cycle(const CycleForm& cf) {
    std::vector<int> im(cf.n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<char> seen(cf.n + 1, 0);
    for (const auto& cyc : cf.cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a < 1 || a > cf.n) throw BadVertexLabel("cycle entry out of range");
            if (seen[a]) throw OverlappingCycles();
            seen[a] = 1;
            im[a - 1] = b;
        }
    }
    return Perm(std::move(im));
}

inline CycleForm make_n_cycle(std::vector<int> orbit) {
    CycleForm cf;
    cf.n = static_cast<int>(orbit.size());
    auto mn = std::min_element(orbit.begin(), orbit.end());
    std::rotate(orbit.begin(), mn, orbit.end());
    cf.cycles.push_back(std::move(orbit));
    return cf;
}

inline CycleForm inverse_cycle(const CycleForm& cf) { return cycle_form(invert(from_cycle(cf))); }

// ---------------------------------------------------------------------------
// Alternating permutations

inline bool is_up_down(const Perm& p) {
    const auto& a = p.passive();
    for (int i = 0; i + 1 < p.n(); ++i) {
        bool want_up = i % 2 == 0;
        if (want_up ? a[i] >= a[i + 1] : a[i] <= a[i + 1]) return false;
    }
    return true;
}

inline bool is_down_up(const Perm& p) {
    const auto& a = p.passive();
    for (int i = 0; i + 1 < p.n(); ++i) {
        bool want_down = i % 2 == 0;
        if (want_down ? a[i] <= a[i + 1] : a[i] >= a[i + 1]) return false;
    }
    return true;
}

/// Begins with two increases, then alternates: a1<a2<a3>a4<a5>...
/// For n <= 2 a single increase (or nothing) is required.
inline bool is_almost_up_down(const Perm& p) {
    const auto& a = p.passive();
    if (p.n() <= 1) return true;
    if (a[0] >= a[1]) return false;
    if (p.n() == 2) return true;
    if (a[1] >= a[2]) return false;
    for (int i = 2; i + 1 < p.n(); ++i) {
        bool want_down = i % 2 == 0;
        if (want_down ? a[i] <= a[i + 1] : a[i] >= a[i + 1]) return false;
    }
    return true;
}

/// Passive form [1,n,2,n-1,3,...].
inline Perm canonical_up_down(int n) {
    std::vector<int> im(n);
    int lo = 1, hi = n;
    for (int i = 0; i < n; ++i) im[i] = (i % 2 == 0) ? lo++ : hi--;
    return Perm(std::move(im));
}

/// Acceptable transposition for a passive form: swaps far-apart positions
/// holding consecutive values.
inline bool is_acceptable(const Perm& p, int i, int j) {
    return std::abs(i - j) > 1 && std::abs(p.apply(i) - p.apply(j)) == 1;
}

/// Sequence of transpositions t_1..t_m, each acceptable for the intermediate
/// permutation (which stays up-down), whose successive left-multiplication
/// takes p to the canonical up-down permutation.
inline std::vector<Edge> canonicalize_up_down(const Perm& p) {
    if (!is_up_down(p)) throw NotUpDown();
    const int n = p.n();
    std::vector<int> a = p.passive();          // a[pos-1] = value
    std::vector<int> pos(n + 1);               // pos[value] = position
    for (int i = 1; i <= n; ++i) pos[a[i - 1]] = i;
    const int mid = (n + 1) / 2;               // troughs end up holding 1..mid
    auto is_peak = [](int position) { return position % 2 == 0; };
    auto low_peak = [&](int position) { return is_peak(position) && a[position - 1] <= mid; };
    auto high_trough = [&](int position) { return !is_peak(position) && a[position - 1] > mid; };
    std::vector<Edge> steps;
    auto swap_positions = [&](int i, int j) {
        assert(std::abs(i - j) > 1 && std::abs(a[i - 1] - a[j - 1]) == 1);
        std::swap(a[i - 1], a[j - 1]);
        pos[a[i - 1]] = i;
        pos[a[j - 1]] = j;
        steps.push_back(make_edge(i, j));
    };

    // Phase 1: clear low peaks and high troughs.
    while (true) {
        int peak = 0, trough = 0;
        for (int i = 2; i <= n; i += 2)
            if (low_peak(i) && (!peak || a[i - 1] > a[peak - 1])) peak = i;
        for (int i = 1; i <= n; i += 2)
            if (high_trough(i) && (!trough || a[i - 1] < a[trough - 1])) trough = i;
        if (!peak && !trough) break;
        if (peak && !is_peak(pos[a[peak - 1] + 1])) {
            swap_positions(peak, pos[a[peak - 1] + 1]);
        } else {
            // Lower the lowest high trough; its value minus one sits at a peak.
            int below = pos[a[trough - 1] - 1];
            assert(is_peak(below));
            swap_positions(trough, below);
        }
    }

    // Phase 2: sort peaks into descending and troughs into ascending position
    // order by swapping value-adjacent entries (always acceptable here).
    for (bool moved = true; moved;) {
        moved = false;
        for (int v = mid + 1; v < n; ++v)       // peak values mid+1..n
            if (pos[v] < pos[v + 1]) {
                swap_positions(pos[v], pos[v + 1]);
                moved = true;
            }
        for (int v = 1; v < mid; ++v)           // trough values 1..mid
            if (pos[v] > pos[v + 1]) {
                swap_positions(pos[v], pos[v + 1]);
                moved = true;
            }
    }
    assert(Perm(a) == canonical_up_down(n));
    return steps;
}

}  // namespace treecycle
