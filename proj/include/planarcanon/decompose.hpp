#ifndef PLANARCANON_DECOMPOSE_HPP
#define PLANARCANON_DECOMPOSE_HPP

#include <array>
#include <optional>
#include <vector>

#include "planarcanon/graph.hpp"

namespace planarcanon {

/// A separating pair {a,b} with at least three vertex-disjoint a-b paths,
/// tagged with the faces both endpoints lie on.
struct SeparatingPair {
    Vertex a, b; // a < b
    std::vector<int> spanned_faces;
};

enum class CompKind { ThreeBond, Cycle, ThreeConnected, Edge };

struct CompEdge {
    Vertex u, v;      // original labels, u < v
    bool virtual_edge = false;
    int pair_id = -1; // index into TriconTree::pairs when virtual or bond
};

/// One triconnected component: a 3-bond, a cycle, or a 3-connected graph
/// (kind Edge is the degenerate bridge component used at the biconnected
/// layer only).
struct TriconComponent {
    CompKind kind;
    std::vector<Vertex> vertices;       // sorted original labels
    std::vector<CompEdge> edges;        // bond: one real + two virtual copies
    std::array<Vertex, 3> key{-1, -1, -1}; // lexicographically smallest triple (node id)
    // Embedding of the component graph itself (3-connected components only);
    // this and its inverse are the component's two planar embeddings.
    std::vector<std::vector<Vertex>> rotation_order;

    int size() const { return static_cast<int>(vertices.size()); } // n_C
};

/// Alternating tree of separating-pair nodes and component nodes.
/// Node ids: pairs are 0..P-1, components P..P+C-1 in the shared adjacency.
struct TriconTree {
    std::vector<SeparatingPair> pairs;
    std::vector<TriconComponent> comps;
    std::vector<std::vector<int>> adj; // over pair ids then comp ids (offset by pairs.size())

    int pair_count() const { return static_cast<int>(pairs.size()); }
    int comp_count() const { return static_cast<int>(comps.size()); }
    int node_count() const { return pair_count() + comp_count(); }
    bool is_pair_node(int id) const { return id < pair_count(); }
    int comp_node_id(int ci) const { return pair_count() + ci; }
    const TriconComponent& comp_of_node(int id) const { return comps[id - pair_count()]; }
};

/// Biconnected component node; carries the component's subgraph and its
/// triconnected component tree (over original labels).
struct BiconComponent {
    std::vector<Vertex> vertices; // sorted original labels
    std::vector<Edge> edges;      // original labels
    TriconTree ttree;
};

/// Alternating tree of articulation points and biconnected components.
/// Node ids: articulation points 0..A-1, components A..A+B-1.
struct BiconTree {
    std::vector<Vertex> articulation; // sorted original labels
    std::vector<BiconComponent> comps;
    std::vector<std::vector<int>> adj;

    int art_count() const { return static_cast<int>(articulation.size()); }
    int comp_count() const { return static_cast<int>(comps.size()); }
    int comp_node_id(int ci) const { return art_count() + ci; }
    bool is_art_node(int id) const { return id < art_count(); }
};

/// Articulation points and biconnected components; throws Disconnected.
/// Triconnected trees of the components are built eagerly.
BiconTree biconnected_decompose(const Graph& g);

/// All 3-connected separating pairs of a biconnected plane graph
/// (candidates enumerated from face boundaries; every separating pair spans
/// a face). Throws NotBiconnected.
std::vector<SeparatingPair> three_connected_separating_pairs(const PlaneGraph& pg);

/// True iff no pair in `pairs` splits the triple across components of
/// pg minus that pair.
bool inseparable_triple(const PlaneGraph& pg, const std::vector<SeparatingPair>& pairs,
                        const std::array<Vertex, 3>& triple);

/// Splits a biconnected plane graph (n >= 3) into its triconnected
/// components and builds the component tree. Throws NotBiconnected, TooSmall.
TriconTree triconnected_decompose(const PlaneGraph& pg);

/// Structural checks from the component-tree lemma: tree-ness, alternation,
/// leaves are components, odd depth from any pair root. Throws on violation.
void validate_tricon_tree(const TriconTree& t);
void validate_bicon_tree(const BiconTree& t, const Graph& g);

/// Re-glues the components along shared virtual edges and drops them;
/// used to assert reconstruction of the decomposed graph.
std::vector<Edge> real_edges_of(const TriconTree& t);

/// Articulation points of a connected graph (brute-force friendly helper,
/// implemented with the lowpoint DFS).
std::vector<Vertex> articulation_points(const Graph& g);

bool is_biconnected(const Graph& g);

/// True iff g (biconnected, n>=3) has no separating pair at all.
bool is_three_connected(const Graph& g);

/// Number of internally vertex-disjoint u-v paths, capped at `cap`.
int disjoint_paths(const Graph& g, Vertex u, Vertex v, int cap);

} // namespace planarcanon

#endif
