#include "planarcanon/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>
#include <boost/property_map/property_map.hpp>

namespace planarcanon {

Graph::Graph(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    for (auto& e : edges) {
        if (e.first == e.second) throw ParseError("self-loop rejected");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n) throw ParseError("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj; // edges sorted, so lists come out sorted
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> es;
    es.reserve(g.edges.size());
    for (auto [u, v] : g.edges) es.push_back(make_edge(perm[u], perm[v]));
    Graph out(g.n, std::move(es));
    if (!g.colors.empty()) {
        out.colors.assign(g.n, 0);
        for (Vertex v = 0; v < g.n; ++v) out.colors[perm[v]] = g.colors[v];
    }
    return out;
}

std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const std::vector<Vertex>& verts) {
    std::vector<Vertex> map_back = verts;
    std::sort(map_back.begin(), map_back.end());
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < static_cast<int>(map_back.size()); ++i) local[map_back[i]] = i;
    std::vector<Edge> es;
    for (auto [u, v] : g.edges)
        if (local[u] >= 0 && local[v] >= 0) es.push_back(make_edge(local[u], local[v]));
    Graph sub(static_cast<int>(map_back.size()), std::move(es));
    if (!g.colors.empty()) {
        sub.colors.resize(sub.n);
        for (int i = 0; i < sub.n; ++i) sub.colors[i] = g.colors[map_back[i]];
    }
    return {std::move(sub), std::move(map_back)};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (Vertex w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return connected_components(g).size() == 1;
}

Vertex RotationScheme::next_after(Vertex v, Vertex u) const {
    const auto& ord = order[v];
    for (size_t i = 0; i < ord.size(); ++i)
        if (ord[i] == u) return ord[(i + 1) % ord.size()];
    throw Error("rotation: dart not found");
}

Vertex RotationScheme::prev_before(Vertex v, Vertex u) const {
    const auto& ord = order[v];
    for (size_t i = 0; i < ord.size(); ++i)
        if (ord[i] == u) return ord[(i + ord.size() - 1) % ord.size()];
    throw Error("rotation: dart not found");
}

RotationScheme RotationScheme::inverse() const {
    RotationScheme inv;
    inv.order.reserve(order.size());
    for (const auto& ord : order) inv.order.emplace_back(ord.rbegin(), ord.rend());
    return inv;
}

PlaneGraph planar_embed(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>>;
    BoostGraph bg(g.n);
    for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding_storage(g.n);
    auto embedding = boost::make_iterator_property_map(embedding_storage.begin(),
                                                       boost::get(boost::vertex_index, bg));

    // Edge index map is required by the Boyer-Myrvold implementation.
    std::map<EdgeDesc, int> edge_index;
    int idx = 0;
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) edge_index[*ei] = idx++;
    auto eidx = boost::make_assoc_property_map(edge_index);

    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding,
        boost::boyer_myrvold_params::edge_index_map = eidx);
    if (!planar) throw NonPlanar();

    PlaneGraph pg;
    pg.graph = g;
    pg.rotation.order.resize(g.n);
    for (Vertex v = 0; v < g.n; ++v) {
        for (const EdgeDesc& e : embedding_storage[v]) {
            Vertex s = static_cast<Vertex>(boost::source(e, bg));
            Vertex t = static_cast<Vertex>(boost::target(e, bg));
            pg.rotation.order[v].push_back(s == v ? t : s);
        }
    }
    validate_plane_graph(pg);
    return pg;
}

std::vector<Face> faces(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    std::map<Dart, bool> used;
    for (auto [u, v] : g.edges) {
        used[{u, v}] = false;
        used[{v, u}] = false;
    }
    std::vector<Face> out;
    for (auto& [start, flag] : used) {
        if (flag) continue;
        Face f;
        Dart d = start;
        do {
            used[d] = true;
            f.boundary.push_back(d);
            d = Dart{d.second, pg.rotation.prev_before(d.second, d.first)};
        } while (d != start);
        out.push_back(std::move(f));
    }
    return out;
}

void validate_plane_graph(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    if (static_cast<int>(pg.rotation.order.size()) != g.n) throw Error("rotation size mismatch");
    auto adj = g.adjacency();
    for (Vertex v = 0; v < g.n; ++v) {
        auto ord = pg.rotation.order[v];
        std::sort(ord.begin(), ord.end());
        if (ord != adj[v]) throw Error("rotation does not match adjacency");
    }
    // Euler per connected component: n - m + f == 2.
    auto comps = connected_components(g);
    std::vector<int> comp_of(g.n, -1);
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
        for (Vertex v : comps[i]) comp_of[v] = i;
    std::vector<int> fcount(comps.size(), 0), mcount(comps.size(), 0);
    for (const Face& f : faces(pg)) fcount[comp_of[f.boundary.front().first]]++;
    for (auto [u, v] : g.edges) mcount[comp_of[u]]++;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        int ni = static_cast<int>(comps[i].size());
        if (ni >= 2 && ni - mcount[i] + fcount[i] != 2) throw Error("embedding fails Euler check");
    }
}

int tree_center(const TreeAdjacency& t) {
    int k = static_cast<int>(t.adj.size());
    if (k == 0) throw Error("empty tree");
    if (k == 1) return 0;
    // Double sweep: farthest node from 0, then farthest from that; the center
    // is the midpoint of the resulting longest path.
    auto bfs = [&](int s) {
        std::vector<int> dist(k, -1), par(k, -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            for (int w : t.adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push_back(w);
                }
        }
        return std::pair{dist, par};
    };
    auto [d0, p0] = bfs(0);
    int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto [d1, p1] = bfs(a);
    int b = static_cast<int>(std::max_element(d1.begin(), d1.end()) - d1.begin());
    int len = d1[b];
    if (len % 2 != 0) throw MultipleCenter();
    int c = b;
    for (int i = 0; i < len / 2; ++i) c = p1[c];
    return c;
}

} // namespace planarcanon
