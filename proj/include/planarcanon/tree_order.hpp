#ifndef PLANARCANON_TREE_ORDER_HPP
#define PLANARCANON_TREE_ORDER_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planarcanon/component_code.hpp"
#include "planarcanon/decompose.hpp"

namespace planarcanon {

/// Serialized total-order key. Trees compare equal in the isomorphism order
/// exactly when their signatures are identical, which makes totality and
/// transitivity structural.
struct Sig {
    std::vector<int64_t> t;

    bool operator==(const Sig& o) const { return t == o.t; }
    bool operator<(const Sig& o) const {
        return std::lexicographical_compare(t.begin(), t.end(), o.t.begin(), o.t.end());
    }
    void push(int64_t x) { t.push_back(x); }
    void append(const Sig& o) { t.insert(t.end(), o.t.begin(), o.t.end()); }
};

enum class Ordering { Less, Equal, Greater };

inline Ordering order_of(const Sig& a, const Sig& b) {
    if (a == b) return Ordering::Equal;
    return a < b ? Ordering::Less : Ordering::Greater;
}

struct OrientationCounter {
    int64_t fwd = 0; // children giving the reference orientation
    int64_t bwd = 0;
    bool operator==(const OrientationCounter&) const = default;
};

/// Direction a component subtree gives to its parent separating pair, plus
/// the per-class counters when produced by a pair-level comparison.
struct OrientationOutcome {
    bool symmetric = true;
    Dart direction{-1, -1}; // valid when !symmetric
    std::vector<OrientationCounter> counters;
};

struct OrderResult {
    Ordering ordering = Ordering::Equal;
    OrientationOutcome left, right;
};

/// Token stream of a canonical list; edge tokens carry original labels until
/// relabeling.
struct ListToken {
    enum Kind { Open, Close, EdgeTok, ArtTok } kind;
    Vertex u = -1, v = -1;
    bool virtual_edge = false;
};
using CanonicalList = std::vector<ListToken>;

/// A biconnected-component-tree subtree hanging below an articulation point,
/// already rendered by the level above.
struct HungSubtree {
    Sig sig;
    int64_t size = 0; // size of the subtree rooted at the articulation node
    CanonicalList list;
};

using TraceSink = std::function<void(const std::string&)>;

struct RenderContext {
    const Graph* base = nullptr; // user colors, original labels
    Vertex parent_vertex = -1;   // distinctly colored copy of the parent articulation point
    const std::map<Vertex, HungSubtree>* hung = nullptr; // non-parent articulation points
    TraceSink* trace = nullptr;
};

/// Root of a triconnected component tree: a separating pair, or a directed
/// start edge when the tree is a single component node.
struct RootCandidate {
    bool is_pair = true;
    int pair_id = -1;
    Dart edge{-1, -1};
};

/// Renders a rooted triconnected component tree: the label-invariant order
/// signature and the name-bearing canonical list, built in lockstep so equal
/// signatures yield identical relabeled lists.
class TriconRenderer {
public:
    TriconRenderer(const TriconTree& t, const RenderContext& ctx, const RootCandidate& root);

    const Sig& sig() const { return root_sig_; }
    const CanonicalList& list() const { return list_; }
    int64_t tree_size() const { return total_size_; }

    /// Orientation counters and reference orientation recorded at a pair node.
    const std::vector<OrientationCounter>& counters_at(int pair_id) const;
    std::optional<Dart> reference_orientation_at(int pair_id) const;
    OrientationOutcome component_outcome(int comp_node) const;
    const Sig& pair_sig(int pair_id) const;
    const Sig& comp_sig(int comp_node) const;

    /// First occurrence of an articulation vertex in the emitted list:
    /// (node id, entry index within that node's code; -1 for a pair token).
    std::optional<std::pair<int, int>> first_occurrence(Vertex a) const;

private:
    struct CompData;
    struct PairData;
    const TriconTree& t_;
    RenderContext ctx_;
    RootCandidate root_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int64_t> def2_size_, hung_size_;
    std::map<Vertex, int> refcopy_node_; // articulation vertex -> node id
    std::map<int, CompData> comp_;
    std::map<int, PairData> pair_;
    Sig root_sig_;
    CanonicalList list_;
    int64_t total_size_ = 0;
    std::map<Vertex, std::pair<int, int>> first_occ_;

    void build_rooted();
    void assign_reference_copies();
    void process_pair(int pair_node);
    void process_comp(int comp_node);
    void emit_pair(int pair_node, Dart dir);
    void emit_comp(int comp_node, Dart start);
};

/// Lemma-style reference copy of articulation point `a` for a rooted tree:
/// root pair itself, or the component closest to the root that contains `a`.
std::pair<int, int> reference_copy(const TriconTree& t, const RenderContext& ctx,
                                   const RootCandidate& root, Vertex a);

/// Normalized counters for ordered isomorphism classes of pair children.
/// `children` carries (signature, orientation relative to d0: 0 forward,
/// 1 backward, 2 symmetric) and must be sorted by signature.
std::pair<std::vector<OrientationCounter>, std::optional<Dart>>
orientation_counters(const std::vector<std::pair<Sig, int>>& children, Dart d0);

/// Root-candidate analysis: center/association anchors and the case-derived
/// candidate set whose rank-minimum coincides with the minimum over all
/// roots (the root-limiting contract).
struct RootRank {
    int64_t d_center = 0;
    int64_t d_assoc = 0;
    Sig case_key; // empty = not applicable; INT64_MAX sentinel = worse than any key
    bool operator<(const RootRank& o) const {
        if (d_center != o.d_center) return d_center < o.d_center;
        if (d_assoc != o.d_assoc) return d_assoc < o.d_assoc;
        return case_key < o.case_key;
    }
    bool operator==(const RootRank& o) const = default;
};

struct RootAnalysis {
    int center_node = -1;
    int assoc_parent_node = -1; // component associated with the parent articulation point
    int active_case = 0;        // 1 pair-center, 2 assoc!=C, 3 cycle-center, 4 E1-not-assoc, 5 colored-recipe, 6 trivial
    std::vector<RootCandidate> candidates;
    std::map<int, RootRank> pair_rank;
    std::map<Dart, RootRank> dart_rank;
};

RootAnalysis analyze_roots(const TriconTree& t, const RenderContext& ctx);

/// Case-derived root candidates (the rank-minimal set).
std::vector<RootCandidate> limit_roots(const TriconTree& t, const RenderContext& ctx);

/// All roots: every pair node, or every directed edge for a single-component
/// tree.
std::vector<RootCandidate> all_roots(const TriconTree& t);

/// Isomorphism order of two triconnected component trees rooted at
/// separating pairs; Equal iff the underlying graphs are isomorphic by a map
/// taking one pair onto the other as a set.
OrderResult compare_at_pair(const TriconTree& S, int s_pair, const RenderContext& sctx,
                            const TriconTree& T, int t_pair, const RenderContext& tctx);

/// Isomorphism order of two subtrees rooted at component nodes of rooted
/// trees, with the orientation each gives its parent pair.
OrderResult compare_at_component(const TriconTree& S, const RootCandidate& s_root, int s_comp_node,
                                 const RenderContext& sctx, const TriconTree& T,
                                 const RootCandidate& t_root, int t_comp_node,
                                 const RenderContext& tctx);

/// Lindell order profiles (c_<, c_=, c_>) of sibling signatures within one
/// size class.
struct OrderProfile {
    int64_t less = 0, equal = 0, greater = 0;
    bool operator==(const OrderProfile&) const = default;
};
std::vector<OrderProfile> order_profiles(const std::vector<Sig>& siblings);

// Signature layout sentinels.
namespace sigtok {
constexpr int64_t PAIR_OPEN = -1, PAIR_CLOSE = -2, COMP_OPEN = -3, COMP_CLOSE = -4;
constexpr int64_t ART_OPEN = -5, ART_CLOSE = -6, BCOMP_OPEN = -7, BCOMP_CLOSE = -8;
constexpr int64_t ENTRY = -9, COUNTERS = -10, PHUNG = -11, HUNG_NONE = -12, HUNG_SOME = -13;
constexpr int64_t TYPE_BOND = 0, TYPE_CYCLE = 1, TYPE_THREECONN = 2, TYPE_EDGE = 3;
constexpr int64_t AGREE = 0, DISAGREE = 1, SYMMETRIC = 2, AGREE_NA = 3;
} // namespace sigtok

} // namespace planarcanon

#endif
