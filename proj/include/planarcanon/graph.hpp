#ifndef PLANARCANON_GRAPH_HPP
#define PLANARCANON_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "planarcanon/errors.hpp"

namespace planarcanon {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>; // normalized u < v
using Dart = std::pair<Vertex, Vertex>; // directed occurrence of an edge

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }
inline Dart reversed(Dart d) { return {d.second, d.first}; }

/// Simple undirected graph on dense vertex ids 0..n-1 with optional vertex
/// colors. Edges are kept normalized (u < v), sorted and unique.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> colors; // empty means all vertices have color 0

    Graph() = default;
    Graph(int n_, std::vector<Edge> edges_);

    int m() const { return static_cast<int>(edges.size()); }
    int color(Vertex v) const { return colors.empty() ? 0 : colors[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    /// Sorted adjacency lists.
    std::vector<std::vector<Vertex>> adjacency() const;
};

/// Applies a relabeling perm (old id -> new id) to vertices and colors.
Graph permuted(const Graph& g, const std::vector<int>& perm);

/// Induced subgraph on `verts`; returns the subgraph over dense local ids and
/// the local->original vertex map.
std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const std::vector<Vertex>& verts);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Per-vertex cyclic order of neighbors describing a combinatorial embedding.
struct RotationScheme {
    std::vector<std::vector<Vertex>> order; // order[v] = neighbors of v in cyclic order

    /// Neighbor following u in the rotation at v.
    Vertex next_after(Vertex v, Vertex u) const;
    /// Neighbor preceding u in the rotation at v.
    Vertex prev_before(Vertex v, Vertex u) const;
    RotationScheme inverse() const;
};

struct Face {
    std::vector<Dart> boundary;
};

struct PlaneGraph {
    Graph graph;
    RotationScheme rotation;
};

/// Computes a planar embedding; throws NonPlanar when none exists.
/// Deterministic for a fixed input encoding.
PlaneGraph planar_embed(const Graph& g);

/// Face cycles of the embedding: orbits of dart -> (v, prev_before(v, u)).
std::vector<Face> faces(const PlaneGraph& pg);

/// Checks that the rotation covers exactly the adjacency of the graph and
/// that face tracing satisfies Euler's formula per connected component.
void validate_plane_graph(const PlaneGraph& pg);

/// Generic tree utilities used for component trees. Nodes are 0..k-1.
struct TreeAdjacency {
    std::vector<std::vector<int>> adj;
};

/// Unique eccentricity-minimizing node; throws MultipleCenter on a tie
/// (component trees are guaranteed a unique center).
int tree_center(const TreeAdjacency& t);

} // namespace planarcanon

#endif
