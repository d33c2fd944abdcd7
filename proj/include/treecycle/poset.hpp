#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "treecycle/numbers.hpp"
#include "treecycle/perm.hpp"
#include "treecycle/tree.hpp"

namespace treecycle {

/// Finite strict partial order, stored transitively closed over an integer
/// ground set. Covers are recomputed on demand.
class Poset {
  public:
    static constexpr int kDpCap = 22;

    Poset(std::vector<int> ground, const std::vector<std::pair<int, int>>& relations)
        : ground_(std::move(ground)) {
        std::sort(ground_.begin(), ground_.end());
        ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
        if (ground_.size() > 31) throw CapExceeded("poset ground too large");
        below_.assign(ground_.size(), 0);
        for (const auto& [x, y] : relations) below_[index(y)] |= 1u << index(x);
        close();
    }

    int size() const { return static_cast<int>(ground_.size()); }
    const std::vector<int>& ground() const { return ground_; }
    int label(int i) const { return ground_[i]; }
    int index(int lbl) const {
        auto it = std::lower_bound(ground_.begin(), ground_.end(), lbl);
        if (it == ground_.end() || *it != lbl) throw IndexOutOfRange("label not in ground");
        return static_cast<int>(it - ground_.begin());
    }

    bool less(int x, int y) const { return below_[index(y)] >> index(x) & 1; }

    /// All pairs (x, y) with x < y, by label.
    std::vector<std::pair<int, int>> relations() const {
        std::vector<std::pair<int, int>> r;
        for (int j = 0; j < size(); ++j)
            for (int i = 0; i < size(); ++i)
                if (below_[j] >> i & 1) r.emplace_back(ground_[i], ground_[j]);
        std::sort(r.begin(), r.end());
        return r;
    }

    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> r;
        for (int j = 0; j < size(); ++j)
            for (int i = 0; i < size(); ++i)
                if (below_[j] >> i & 1) {
                    // (i,j) is a cover when no x satisfies i < x < j.
                    bool cover = true;
                    for (int x = 0; x < size(); ++x)
                        if (x != i && (below_[j] >> x & 1) && (below_[x] >> i & 1))
                            cover = false;
                    if (cover) r.emplace_back(ground_[i], ground_[j]);
                }
        std::sort(r.begin(), r.end());
        return r;
    }

    bool operator==(const Poset& o) const { return ground_ == o.ground_ && below_ == o.below_; }
    bool operator<(const Poset& o) const {
        return std::tie(ground_, below_) < std::tie(o.ground_, o.below_);
    }

    BigInt linear_extensions_count() const {
        if (size() > kDpCap) throw CapExceeded("linear extension DP cap");
        std::unordered_map<std::uint32_t, unsigned __int128> memo;
        return BigInt(count_from(0, memo));
    }

    /// Every linear extension, each as the ground labels listed bottom-up.
    std::vector<std::vector<int>> linear_extensions_list() const {
        if (size() > 9) throw CapExceeded("linear extension listing cap");
        std::vector<std::vector<int>> out;
        std::vector<int> prefix;
        list_from(0, prefix, out);
        return out;
    }

    Poset inverted() const {
        std::vector<std::pair<int, int>> rel;
        for (const auto& [x, y] : relations()) rel.emplace_back(y, x);
        return Poset(ground_, rel);
    }

    Poset induced(const std::vector<int>& sub_ground) const {
        std::vector<std::pair<int, int>> rel;
        for (const auto& [x, y] : relations())
            if (std::count(sub_ground.begin(), sub_ground.end(), x) &&
                std::count(sub_ground.begin(), sub_ground.end(), y))
                rel.emplace_back(x, y);
        return Poset(sub_ground, rel);
    }

    /// Smallest partial order on this ground containing both p and q
    /// (transitive closure of the union). q's ground must be a subset.
    friend Poset union_closure(const Poset& p, const Poset& q) {
        auto rel = p.relations();
        for (const auto& [x, y] : q.relations()) {
            p.index(x);
            p.index(y);
            rel.emplace_back(x, y);
        }
        return Poset(p.ground_, rel);
    }

  private:
    void close() {
        for (int k = 0; k < size(); ++k)
            for (int j = 0; j < size(); ++j)
                if (below_[j] >> k & 1) below_[j] |= below_[k];
        for (int j = 0; j < size(); ++j)
            if (below_[j] >> j & 1) throw CycleCreated();
    }

    unsigned __int128 count_from(std::uint32_t placed,
                                 std::unordered_map<std::uint32_t, unsigned __int128>& memo) const {
        const std::uint32_t full = (1u << size()) - 1;
        if (placed == full) return 1;
        auto it = memo.find(placed);
        if (it != memo.end()) return it->second;
        unsigned __int128 total = 0;
        for (int x = 0; x < size(); ++x)
            if (!(placed >> x & 1) && (below_[x] & ~placed) == 0)
                total += count_from(placed | (1u << x), memo);
        memo.emplace(placed, total);
        return total;
    }

    void list_from(std::uint32_t placed, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) const {
        if (static_cast<int>(prefix.size()) == size()) {
            out.push_back(prefix);
            return;
        }
        for (int x = 0; x < size(); ++x)
            if (!(placed >> x & 1) && (below_[x] & ~placed) == 0) {
                prefix.push_back(ground_[x]);
                list_from(placed | (1u << x), prefix, out);
                prefix.pop_back();
            }
    }

    std::vector<int> ground_;
    std::vector<std::uint32_t> below_;  // below_[j] = elements strictly below j
};

inline Poset invert_poset(const Poset& p) { return p.inverted(); }
inline Poset induced_suborder(const Poset& p, const std::vector<int>& q) { return p.induced(q); }
inline BigInt linear_extensions_count(const Poset& p) { return p.linear_extensions_count(); }
inline std::vector<std::vector<int>> linear_extensions_list(const Poset& p) {
    return p.linear_extensions_list();
}

// ---------------------------------------------------------------------------
// The partial order of an edge ordering

/// Edge labels for the poset of an ordering: the position (1-based) of the
/// edge in the tree's sorted edge list.
inline std::vector<int> ordering_as_edge_labels(const LabelledTree& t,
                                                const std::vector<Edge>& s) {
    const auto& edges = t.edges();
    if (s.size() != edges.size()) throw NotAnOrdering("ordering length");
    std::vector<int> labels;
    std::vector<char> used(edges.size(), 0);
    for (const auto& e : s) {
        auto it = std::lower_bound(edges.begin(), edges.end(), make_edge(e.first, e.second));
        if (it == edges.end() || *it != make_edge(e.first, e.second))
            throw NotAnOrdering("edge not in tree");
        int idx = static_cast<int>(it - edges.begin());
        if (used[idx]) throw NotAnOrdering("repeated edge");
        used[idx] = 1;
        labels.push_back(idx + 1);
    }
    return labels;
}

/// Transitive closure of the per-vertex local suborders: for every vertex,
/// the incident edges keep the relative order they have in s. Ground is
/// 1..n-1, labelling the sorted edge list of t.
inline Poset poset_from_ordering(const LabelledTree& t, const std::vector<Edge>& s) {
    auto labels = ordering_as_edge_labels(t, s);
    std::vector<int> ground(t.n() - 1);
    std::iota(ground.begin(), ground.end(), 1);
    std::vector<std::pair<int, int>> rel;
    for (int v = 1; v <= t.n(); ++v) {
        int prev = 0;
        for (int lbl : labels) {
            const Edge& e = t.edges()[lbl - 1];
            if (e.first != v && e.second != v) continue;
            if (prev) rel.emplace_back(prev, lbl);
            prev = lbl;
        }
    }
    return Poset(std::move(ground), rel);
}

// ---------------------------------------------------------------------------
// Path-type partial orders as sign vectors

/// +-1 vector encoding a Hasse path on m points: entry i is +1 for the cover
/// (i, i+1) and -1 for (i+1, i).
struct SignVector {
    std::vector<int> signs;

    int points() const { return static_cast<int>(signs.size()) + 1; }
    bool operator==(const SignVector&) const = default;
    bool operator<(const SignVector& o) const { return signs < o.signs; }

    SignVector negated() const {
        SignVector v = *this;
        for (int& s : v.signs) s = -s;
        return v;
    }
};

inline SignVector zig_zag(int n) {
    SignVector v;
    for (int i = 1; i < n; ++i) v.signs.push_back(i % 2 == 1 ? 1 : -1);
    return v;
}

/// The hill h_k in H_n: rises to a peak at k, then falls.
inline SignVector hill(int n, int k) {
    if (k < 2 || k > n - 1) throw IndexOutOfRange("hill peak");
    SignVector v;
    for (int i = 1; i < n; ++i) v.signs.push_back(i < k ? 1 : -1);
    return v;
}

inline Poset sign_vector_to_poset(const SignVector& v, int first_label = 1) {
    std::vector<int> ground(v.points());
    std::iota(ground.begin(), ground.end(), first_label);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < static_cast<int>(v.signs.size()); ++i) {
        int a = first_label + i, b = a + 1;
        if (v.signs[i] > 0)
            rel.emplace_back(a, b);
        else
            rel.emplace_back(b, a);
    }
    return Poset(std::move(ground), rel);
}

/// Recovers the sign vector of a path-type poset with consecutive labels, or
/// nullopt when the Hasse diagram is not the natural path.
inline std::optional<SignVector> path_poset_classify(const Poset& p) {
    const int m = p.size();
    for (int i = 0; i < m; ++i)
        if (p.label(i) != p.label(0) + i) throw NotPathType("labels not consecutive");
    auto covers = p.covers();
    if (static_cast<int>(covers.size()) != m - 1) return std::nullopt;
    SignVector v;
    v.signs.assign(m - 1, 0);
    for (const auto& [x, y] : covers) {
        int lo = std::min(x, y), hi = std::max(x, y);
        if (hi != lo + 1) return std::nullopt;
        int i = lo - p.label(0);
        if (v.signs[i]) return std::nullopt;
        v.signs[i] = x < y ? 1 : -1;
    }
    return v;
}

inline SignVector right_side_inversion(const SignVector& v, int i) {
    if (i < 1 || i > static_cast<int>(v.signs.size())) throw IndexOutOfRange("Phi index");
    SignVector w = v;
    for (int j = i - 1; j < static_cast<int>(w.signs.size()); ++j) w.signs[j] = -w.signs[j];
    return w;
}

inline BigInt sign_vector_linext(const SignVector& v) {
    return sign_vector_to_poset(v).linear_extensions_count();
}

inline BigInt hill_count(int n, int k) { return binomial(n - 1, n - k); }

// ---------------------------------------------------------------------------
// Checks on path-type partial orders

struct PropCheckReport {
    bool vacuous = false;
    bool ok = true;
    int index = 0;     // the i the operation was applied at (0 when vacuous)
    BigInt before, after;
};

/// Strict increase of |L| under right-side inversion at the maximal i with
/// a_i = a_{i-1}.
inline PropCheckReport prop_3_10_check(const SignVector& v) {
    PropCheckReport rep;
    int i = 0;
    for (int j = 2; j <= static_cast<int>(v.signs.size()); ++j)
        if (v.signs[j - 1] == v.signs[j - 2]) i = j;
    if (!i) {
        rep.vacuous = true;
        return rep;
    }
    rep.index = i;
    rep.before = sign_vector_linext(v);
    rep.after = sign_vector_linext(right_side_inversion(v, i));
    rep.ok = rep.before < rep.after;
    return rep;
}

struct ConjectureScanReport {
    int length = 0;
    long long cases = 0;
    std::vector<std::pair<SignVector, int>> counterexamples;
};

/// Tests |L(p)| < |L(p Phi_i)| at every repeated-sign position, not just the
/// maximal one. Reported, never asserted.
inline ConjectureScanReport conjecture_scan(int length) {
    if (length > Poset::kDpCap - 1) throw CapExceeded("conjecture_scan length");
    ConjectureScanReport rep;
    rep.length = length;
    for (std::uint32_t bits = 0; bits < (1u << length); ++bits) {
        SignVector v;
        for (int j = 0; j < length; ++j) v.signs.push_back(bits >> j & 1 ? 1 : -1);
        BigInt base = sign_vector_linext(v);
        for (int i = 2; i <= length; ++i) {
            if (v.signs[i - 1] != v.signs[i - 2]) continue;
            ++rep.cases;
            if (base >= sign_vector_linext(right_side_inversion(v, i)))
                rep.counterexamples.emplace_back(v, i);
        }
    }
    return rep;
}

struct LemmaSuffixReport {
    bool ok = true;
    BigInt base;
    std::vector<std::pair<int, BigInt>> inverted_counts;  // (i+j, |L(p Phi_{i+j})|)
};

/// Under a constant suffix from position i, every later right-side inversion
/// strictly increases |L|.
inline LemmaSuffixReport lemma_3_14_check(const SignVector& v, int i) {
    const int len = static_cast<int>(v.signs.size());
    if (i < 1 || i > len - 1) throw IndexOutOfRange("lemma_3_14 index");
    for (int j = i; j <= len; ++j)
        if (v.signs[j - 1] != v.signs[i - 1]) throw HypothesisViolated("suffix not constant");
    LemmaSuffixReport rep;
    rep.base = sign_vector_linext(v);
    for (int j = 1; i + j <= len; ++j) {
        BigInt c = sign_vector_linext(right_side_inversion(v, i + j));
        rep.ok = rep.ok && rep.base < c;
        rep.inverted_counts.emplace_back(i + j, c);
    }
    return rep;
}

struct EntringerSliceReport {
    bool ok = true;
    std::vector<BigInt> buckets;  // bucket i-1 = #{z in L(Z_n^-1) : z(1) = i+1}
};

/// Buckets L(Z_n^-1) by the rank of point 1 and compares with the Entringer
/// row E(n-1, .).
inline EntringerSliceReport entringer_slice_check(int n) {
    if (n > 10) throw CapExceeded("entringer_slice_check");
    EntringerSliceReport rep;
    Poset p = sign_vector_to_poset(zig_zag(n).negated());
    std::vector<BigInt> buckets(n, 0);  // index i: z(1) = i+1, i = 0..n-1
    for (const auto& ext : p.linear_extensions_list()) {
        auto it = std::find(ext.begin(), ext.end(), 1);
        int rank = static_cast<int>(it - ext.begin()) + 1;  // z(1)
        ++buckets[rank - 1];
    }
    auto tables = number_tables(n);
    for (int i = 0; i <= n - 1; ++i)
        rep.ok = rep.ok && buckets[i] == tables.entringer[n - 1][i];
    rep.buckets = std::move(buckets);
    return rep;
}

// ---------------------------------------------------------------------------
// Fork-type partial orders

/// Path-type order with a three-element linear fork attached: the fork part
/// is a linear order on {1,2,3} with 3 shared with the path part on 3..n.
struct ForkPoset {
    std::array<int, 3> fork{};  // bottom, middle, top of the {1,2,3} chain
    SignVector path;            // on labels 3..n; point j is label j+2

    int points() const { return path.points() + 2; }
    bool operator==(const ForkPoset&) const = default;
    bool operator<(const ForkPoset& o) const {
        return std::tie(fork, path) < std::tie(o.fork, o.path);
    }
};

inline Poset fork_poset_to_poset(const ForkPoset& f) {
    const int n = f.points();
    std::vector<int> ground(n);
    std::iota(ground.begin(), ground.end(), 1);
    std::vector<std::pair<int, int>> rel{{f.fork[0], f.fork[1]}, {f.fork[1], f.fork[2]}};
    for (int i = 0; i < static_cast<int>(f.path.signs.size()); ++i) {
        int a = 3 + i, b = a + 1;
        if (f.path.signs[i] > 0)
            rel.emplace_back(a, b);
        else
            rel.emplace_back(b, a);
    }
    return Poset(std::move(ground), rel);
}

inline BigInt fork_linext(const ForkPoset& f) {
    return fork_poset_to_poset(f).linear_extensions_count();
}

/// Requires t to be the standard forked path (leaves 1,2 on vertex 3, then
/// the path 3..n+1); classifies p_sigma as fork part + path part.
inline ForkPoset fork_poset_from_ordering(const LabelledTree& t, const std::vector<Edge>& s) {
    const int m = t.n();
    if (m < 4 || !(t == make_fork(m))) throw NotAForkedPath();
    // Edge labels per the fork convention: e_1 = {1,3}, e_i = {i,i+1} for
    // i >= 2. These coincide with the sorted-edge positions of make_fork.
    Poset p = poset_from_ordering(t, s);
    ForkPoset f;
    // Fork part: the induced order on {e1,e2,e3} must be linear.
    Poset fp = p.induced({1, 2, 3});
    if (fp.relations().size() != 3) throw NotAForkedPath("fork part not linear");
    for (int x : {1, 2, 3}) {
        int above = 0;
        for (int y : {1, 2, 3})
            if (x != y && fp.less(x, y)) ++above;
        f.fork[2 - above] = x;
    }
    f.path.signs.assign(std::max(0, m - 4), 0);
    for (int i = 3; i + 1 <= m - 1; ++i) f.path.signs[i - 3] = p.less(i, i + 1) ? 1 : -1;
    return f;
}

/// Closed form for |L((a1,3,a2) Z_n^{+-1})| in D_{n+2}:
/// sum over i of (n-i)(i+1) E(n-1,i).
inline BigInt lemma_3_18_value(int n) {
    if (n < 2) throw NotLemmaShape("need n >= 2");
    auto tables = number_tables(n);
    BigInt total = 0;
    for (int i = 1; i <= n - 1; ++i) total += BigInt(n - i) * (i + 1) * tables.entringer[n - 1][i];
    return total;
}

/// The fork poset (a1,3,a2) Z_n^{zsign} in D_{n+2}, for cross-checking the
/// closed form against the DP.
inline ForkPoset lemma_3_18_poset(int n, bool one_first, int zsign) {
    ForkPoset f;
    f.fork = one_first ? std::array<int, 3>{1, 3, 2} : std::array<int, 3>{2, 3, 1};
    f.path = zsign > 0 ? zig_zag(n) : zig_zag(n).negated();
    return f;
}

// ---------------------------------------------------------------------------
// Theorem 3.1: cycles <-> posets

struct PosetCorrespondenceReport {
    bool ok = true;
    int num_cycles = 0;
    int num_posets = 0;
};

/// Exhaustively verifies over O(T) that two orderings give the same cycle
/// iff they give the same partial order, and that each cycle's multiplicity
/// equals the linear-extension count of its poset.
inline PosetCorrespondenceReport theorem_3_1_check(const LabelledTree& t) {
    if (t.n() > 7) throw CapExceeded("theorem_3_1_check");
    PosetCorrespondenceReport rep;
    std::vector<int> idx(t.n() - 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::map<CycleForm, std::map<Poset, BigInt>> by_cycle;
    do {
        std::vector<Edge> s;
        for (int i : idx) s.push_back(t.edges()[i]);
        Perm prod = product_of_transpositions(s, t.n());
        CycleForm c = cycle_form(prod);
        ++by_cycle[c][poset_from_ordering(t, s)];
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::set<Poset> all_posets;
    for (const auto& [cycle, posets] : by_cycle) {
        // One poset per cycle, never shared between cycles.
        rep.ok = rep.ok && posets.size() == 1;
        const auto& [p, mult] = *posets.begin();
        rep.ok = rep.ok && !all_posets.count(p);
        all_posets.insert(p);
        rep.ok = rep.ok && mult == p.linear_extensions_count();
    }
    rep.num_cycles = static_cast<int>(by_cycle.size());
    rep.num_posets = static_cast<int>(all_posets.size());
    return rep;
}

}  // namespace treecycle
