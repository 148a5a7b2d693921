#include "planarcanon/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "planarcanon/component_code.hpp"

namespace planarcanon {

namespace {

// Component ids of g minus {a,b}; removed vertices get -1.
std::vector<int> components_without_pair(const std::vector<std::vector<Vertex>>& adj, int n,
                                         Vertex a, Vertex b) {
    std::vector<int> comp(n, -1);
    int id = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (s == a || s == b || comp[s] >= 0) continue;
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[v]) {
                if (w == a || w == b || comp[w] >= 0) continue;
                comp[w] = id;
                stack.push_back(w);
            }
        }
        ++id;
    }
    return comp;
}

} // namespace

std::vector<Vertex> articulation_points(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<Vertex> out;
    int timer = 0;
    // Iterative lowpoint DFS.
    struct Frame {
        Vertex v;
        int parent;
        size_t next_child = 0;
        int child_count = 0;
    };
    std::vector<char> is_art(g.n, 0);
    for (Vertex root = 0; root < g.n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_child < adj[f.v].size()) {
                Vertex w = adj[f.v][f.next_child++];
                if (w == f.parent) continue;
                if (disc[w] >= 0) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                } else {
                    disc[w] = low[w] = timer++;
                    f.child_count++;
                    stack.push_back({w, f.v});
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.v] = std::min(low[p.v], low[done.v]);
                    if (p.parent != -1 && low[done.v] >= disc[p.v]) is_art[p.v] = 1;
                }
                if (done.parent == -1 && done.child_count >= 2) is_art[done.v] = 1;
            }
        }
    }
    for (Vertex v = 0; v < g.n; ++v)
        if (is_art[v]) out.push_back(v);
    return out;
}

bool is_biconnected(const Graph& g) {
    if (g.n <= 2) return is_connected(g);
    return is_connected(g) && articulation_points(g).empty();
}

int disjoint_paths(const Graph& g, Vertex u, Vertex v, int cap) {
    // Unit-capacity flow with split vertices; u, v are uncapacitated.
    // Node 2x = in(x), 2x+1 = out(x).
    int N = 2 * g.n;
    std::map<std::pair<int, int>, int> capmap;
    std::set<std::pair<int, int>> arcs;
    auto add = [&](int s, int t, int c) {
        capmap[{s, t}] += c;
        arcs.insert({s, t});
        arcs.insert({t, s});
    };
    for (Vertex x = 0; x < g.n; ++x) add(2 * x, 2 * x + 1, (x == u || x == v) ? cap : 1);
    for (auto [a, b] : g.edges) {
        add(2 * a + 1, 2 * b, 1);
        add(2 * b + 1, 2 * a, 1);
    }
    std::vector<std::vector<int>> nbr(N);
    for (auto [s, t] : arcs) {
        capmap[{s, t}] += 0;
        nbr[s].push_back(t);
    }
    int source = 2 * u + 1, sink = 2 * v;
    int flow = 0;
    while (flow < cap) {
        std::vector<int> prev(N, -2);
        std::vector<int> q{source};
        prev[source] = -1;
        for (size_t qi = 0; qi < q.size() && prev[sink] == -2; ++qi) {
            int x = q[qi];
            for (int y : nbr[x]) {
                if (prev[y] != -2 || capmap[{x, y}] <= 0) continue;
                prev[y] = x;
                q.push_back(y);
            }
        }
        if (prev[sink] == -2) break;
        for (int y = sink; y != source; y = prev[y]) {
            capmap[{prev[y], y}] -= 1;
            capmap[{y, prev[y]}] += 1;
        }
        ++flow;
    }
    return flow;
}

std::vector<SeparatingPair> three_connected_separating_pairs(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    if (!is_biconnected(g)) throw NotBiconnected();
    auto adj = g.adjacency();
    auto fs = faces(pg);

    // Candidate pairs come from face boundaries: every separating pair spans
    // some face.
    std::map<Edge, std::vector<int>> spanned; // pair -> faces containing both endpoints
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
        std::vector<Vertex> verts;
        for (auto d : fs[fi].boundary) verts.push_back(d.first);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) spanned[{verts[i], verts[j]}].push_back(fi);
    }

    std::vector<SeparatingPair> out;
    for (auto& [e, face_ids] : spanned) {
        auto comp = components_without_pair(adj, g.n, e.first, e.second);
        int ncomp = 0;
        for (int c : comp) ncomp = std::max(ncomp, c + 1);
        if (ncomp < 2) continue; // not separating
        if (disjoint_paths(g, e.first, e.second, 3) < 3) continue;
        out.push_back({e.first, e.second, face_ids});
    }
    return out;
}

bool inseparable_triple(const PlaneGraph& pg, const std::vector<SeparatingPair>& pairs,
                        const std::array<Vertex, 3>& triple) {
    const Graph& g = pg.graph;
    auto adj = g.adjacency();
    for (const auto& p : pairs) {
        auto comp = components_without_pair(adj, g.n, p.a, p.b);
        int seen = -2;
        bool split = false;
        for (Vertex t : triple) {
            if (t == p.a || t == p.b) continue;
            if (seen == -2) seen = comp[t];
            else if (comp[t] != seen) split = true;
        }
        if (split) return false;
    }
    return true;
}

TriconTree triconnected_decompose(const PlaneGraph& pg) {
    const Graph& g = pg.graph;
    if (g.n < 3) throw TooSmall();
    if (!is_biconnected(g)) throw NotBiconnected();

    TriconTree tree;
    tree.pairs = three_connected_separating_pairs(pg);
    std::sort(tree.pairs.begin(), tree.pairs.end(),
              [](const SeparatingPair& x, const SeparatingPair& y) {
                  return std::pair{x.a, x.b} < std::pair{y.a, y.b};
              });

    auto adj = g.adjacency();
    // Precompute the component split for every pair once.
    std::vector<std::vector<int>> split(tree.pairs.size());
    for (size_t i = 0; i < tree.pairs.size(); ++i)
        split[i] = components_without_pair(adj, g.n, tree.pairs[i].a, tree.pairs[i].b);

    auto set_inseparable = [&](const std::vector<Vertex>& vs) {
        for (size_t i = 0; i < tree.pairs.size(); ++i) {
            int seen = -2;
            for (Vertex t : vs) {
                if (t == tree.pairs[i].a || t == tree.pairs[i].b) continue;
                if (seen == -2) seen = split[i][t];
                else if (split[i][t] != seen) return false;
            }
        }
        return true;
    };

    // 3-bonds for pairs joined by a real edge.
    std::vector<int> pair_id_of_bond;
    for (size_t i = 0; i < tree.pairs.size(); ++i) {
        if (!g.has_edge(tree.pairs[i].a, tree.pairs[i].b)) continue;
        TriconComponent bond;
        bond.kind = CompKind::ThreeBond;
        bond.vertices = {tree.pairs[i].a, tree.pairs[i].b};
        bond.key = {tree.pairs[i].a, tree.pairs[i].b, -1};
        bond.edges.push_back({tree.pairs[i].a, tree.pairs[i].b, false, static_cast<int>(i)});
        bond.edges.push_back({tree.pairs[i].a, tree.pairs[i].b, true, static_cast<int>(i)});
        bond.edges.push_back({tree.pairs[i].a, tree.pairs[i].b, true, static_cast<int>(i)});
        tree.comps.push_back(std::move(bond));
    }

    // Components C_tau over inseparable triples, keyed by the lexicographically
    // smallest member triple.
    std::set<Edge> pair_edges; // real edges living in 3-bonds
    for (const auto& p : tree.pairs)
        if (g.has_edge(p.a, p.b)) pair_edges.insert({p.a, p.b});
    std::set<std::array<Vertex, 3>> covered;
    for (Vertex x = 0; x < g.n; ++x)
        for (Vertex y = x + 1; y < g.n; ++y)
            for (Vertex z = y + 1; z < g.n; ++z) {
                std::array<Vertex, 3> tau{x, y, z};
                if (covered.count(tau)) continue;
                if (!set_inseparable({x, y, z})) continue;
                // C_tau = tau plus every vertex that stays inseparable with it.
                std::vector<Vertex> cls{x, y, z};
                for (Vertex w = 0; w < g.n; ++w) {
                    if (w == x || w == y || w == z) continue;
                    if (set_inseparable({x, y, z, w})) cls.push_back(w);
                }
                std::sort(cls.begin(), cls.end());
                for (size_t i = 0; i < cls.size(); ++i)
                    for (size_t j = i + 1; j < cls.size(); ++j)
                        for (size_t k = j + 1; k < cls.size(); ++k)
                            covered.insert({cls[i], cls[j], cls[k]});

                TriconComponent comp;
                comp.vertices = cls;
                comp.key = tau;
                std::vector<char> in_cls(g.n, 0);
                for (Vertex v : cls) in_cls[v] = 1;
                for (auto [u, v] : g.edges) {
                    if (!in_cls[u] || !in_cls[v]) continue;
                    if (pair_edges.count({u, v})) continue;
                    comp.edges.push_back({u, v, false, -1});
                }
                for (size_t i = 0; i < tree.pairs.size(); ++i)
                    if (in_cls[tree.pairs[i].a] && in_cls[tree.pairs[i].b])
                        comp.edges.push_back({tree.pairs[i].a, tree.pairs[i].b, true,
                                              static_cast<int>(i)});

                // Classify: a cycle has every vertex of degree exactly 2.
                std::vector<int> deg(g.n, 0);
                for (const auto& e : comp.edges) {
                    deg[e.u]++;
                    deg[e.v]++;
                }
                bool cycle = true;
                for (Vertex v : cls)
                    if (deg[v] != 2) cycle = false;
                comp.kind = cycle ? CompKind::Cycle : CompKind::ThreeConnected;
                tree.comps.push_back(std::move(comp));
            }

    // Deterministic component order: bonds first by pair, then classes by key.
    std::sort(tree.comps.begin(), tree.comps.end(),
              [](const TriconComponent& a, const TriconComponent& b) {
                  bool ba = a.kind == CompKind::ThreeBond, bb = b.kind == CompKind::ThreeBond;
                  if (ba != bb) return ba > bb;
                  return a.key < b.key;
              });

    for (auto& comp : tree.comps)
        if (comp.kind == CompKind::ThreeConnected)
            comp.rotation_order = component_rotation(comp).order;

    // Tree edges: pair <-> component containing both endpoints.
    tree.adj.assign(tree.node_count(), {});
    for (int ci = 0; ci < tree.comp_count(); ++ci) {
        const auto& comp = tree.comps[ci];
        std::vector<char> in_cls(g.n, 0);
        for (Vertex v : comp.vertices) in_cls[v] = 1;
        for (int pi = 0; pi < tree.pair_count(); ++pi) {
            if (in_cls[tree.pairs[pi].a] && in_cls[tree.pairs[pi].b]) {
                tree.adj[pi].push_back(tree.comp_node_id(ci));
                tree.adj[tree.comp_node_id(ci)].push_back(pi);
            }
        }
    }

    validate_tricon_tree(tree);

    // Reconstruction: merging the components and dropping virtual edges must
    // reproduce the input edge set exactly, each real edge appearing once.
    auto reals = real_edges_of(tree);
    if (reals != g.edges) throw Error("decomposition does not reconstruct the graph");
    return tree;
}

std::vector<Edge> real_edges_of(const TriconTree& t) {
    std::vector<Edge> out;
    for (const auto& c : t.comps)
        for (const auto& e : c.edges)
            if (!e.virtual_edge) out.push_back({e.u, e.v});
    std::sort(out.begin(), out.end());
    return out;
}

void validate_tricon_tree(const TriconTree& t) {
    int nodes = t.node_count();
    if (nodes == 0) throw Error("empty component tree");
    // Connected and acyclic.
    int edge_cnt = 0;
    for (const auto& a : t.adj) edge_cnt += static_cast<int>(a.size());
    edge_cnt /= 2;
    std::vector<int> seen(nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reach = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reach;
        for (int w : t.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (reach != nodes || edge_cnt != nodes - 1) throw Error("component tree is not a tree");
    // Alternation and leaves.
    for (int v = 0; v < nodes; ++v) {
        for (int w : t.adj[v])
            if (t.is_pair_node(v) == t.is_pair_node(w)) throw Error("tree does not alternate");
        if (t.adj[v].empty() && t.is_pair_node(v) && nodes > 1)
            throw Error("isolated pair node");
        if (t.adj[v].size() == 1 && t.is_pair_node(v)) throw Error("leaf is a pair node");
        if (t.is_pair_node(v) && nodes > 1 && t.adj[v].size() < 2)
            throw Error("pair node with fewer than two components");
    }
    // Odd depth from every pair root.
    for (int r = 0; r < t.pair_count(); ++r) {
        std::vector<int> dist(nodes, -1);
        std::vector<int> q{r};
        dist[r] = 0;
        int deepest = 0;
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            deepest = std::max(deepest, dist[v]);
            for (int w : t.adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
        }
        if (deepest % 2 == 0) throw Error("pair-rooted depth is even");
    }
    // Bonds are leaves.
    for (int ci = 0; ci < t.comp_count(); ++ci)
        if (t.comps[ci].kind == CompKind::ThreeBond && t.adj[t.comp_node_id(ci)].size() != 1)
            throw Error("3-bond is not a leaf");
}

BiconTree biconnected_decompose(const Graph& g) {
    if (!is_connected(g)) throw Disconnected();
    BiconTree bt;
    if (g.n == 0) return bt;

    bt.articulation = articulation_points(g);
    std::vector<int> art_id(g.n, -1);
    for (int i = 0; i < bt.art_count(); ++i) art_id[bt.articulation[i]] = i;

    // Edge partition into biconnected components via lowpoint DFS with an
    // explicit edge stack.
    auto adj = g.adjacency();
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<Edge> estack;
    std::vector<std::vector<Edge>> comp_edges;
    int timer = 0;
    struct Frame {
        Vertex v;
        int parent;
        size_t next = 0;
    };
    for (Vertex root = 0; root < g.n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                Vertex w = adj[f.v][f.next++];
                if (w == f.parent) continue;
                if (disc[w] >= 0) {
                    if (disc[w] < disc[f.v]) {
                        estack.push_back({f.v, w});
                        low[f.v] = std::min(low[f.v], disc[w]);
                    }
                } else {
                    estack.push_back({f.v, w});
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v});
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (stack.empty()) break;
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (low[done.v] >= disc[p.v]) {
                    // Pop the component hanging below the edge (p.v, done.v).
                    std::vector<Edge> ce;
                    while (!estack.empty()) {
                        Edge e = estack.back();
                        estack.pop_back();
                        ce.push_back(e);
                        if ((e.first == p.v && e.second == done.v)) break;
                    }
                    comp_edges.push_back(std::move(ce));
                }
            }
        }
    }

    for (auto& ce : comp_edges) {
        BiconComponent bc;
        std::set<Vertex> vs;
        for (auto& e : ce) {
            vs.insert(e.first);
            vs.insert(e.second);
            if (e.first > e.second) std::swap(e.first, e.second);
        }
        bc.vertices.assign(vs.begin(), vs.end());
        std::sort(ce.begin(), ce.end());
        ce.erase(std::unique(ce.begin(), ce.end()), ce.end());
        bc.edges = ce;
        bt.comps.push_back(std::move(bc));
    }
    std::sort(bt.comps.begin(), bt.comps.end(), [](const BiconComponent& a, const BiconComponent& b) {
        return a.vertices < b.vertices;
    });

    bt.adj.assign(bt.art_count() + bt.comp_count(), {});
    for (int ci = 0; ci < bt.comp_count(); ++ci)
        for (Vertex v : bt.comps[ci].vertices)
            if (art_id[v] >= 0) {
                bt.adj[art_id[v]].push_back(bt.comp_node_id(ci));
                bt.adj[bt.comp_node_id(ci)].push_back(art_id[v]);
            }

    // Triconnected trees per component.
    for (auto& bc : bt.comps) {
        auto [sub, map_back] = induced_subgraph(g, bc.vertices);
        // Restrict to the component's own edges (shared articulation vertices
        // never contribute foreign edges, but keep this exact).
        std::vector<Edge> es;
        for (auto [u, v] : bc.edges) {
            int lu = static_cast<int>(std::lower_bound(map_back.begin(), map_back.end(), u) - map_back.begin());
            int lv = static_cast<int>(std::lower_bound(map_back.begin(), map_back.end(), v) - map_back.begin());
            es.push_back(make_edge(lu, lv));
        }
        Graph comp_graph(sub.n, std::move(es));
        if (comp_graph.n == 2) {
            TriconComponent edge_comp;
            edge_comp.kind = CompKind::Edge;
            edge_comp.vertices = bc.vertices;
            edge_comp.key = {bc.vertices[0], bc.vertices[1], -1};
            edge_comp.edges.push_back({bc.vertices[0], bc.vertices[1], false, -1});
            bc.ttree.comps.push_back(std::move(edge_comp));
            bc.ttree.adj.assign(1, {});
        } else {
            TriconTree local = triconnected_decompose(planar_embed(comp_graph));
            // Lift local labels back to original ones.
            bc.ttree = local;
            for (auto& p : bc.ttree.pairs) {
                p.a = map_back[p.a];
                p.b = map_back[p.b];
                if (p.a > p.b) std::swap(p.a, p.b);
            }
            for (auto& c : bc.ttree.comps) {
                for (auto& v : c.vertices) v = map_back[v];
                std::sort(c.vertices.begin(), c.vertices.end());
                for (auto& e : c.edges) {
                    e.u = map_back[e.u];
                    e.v = map_back[e.v];
                    if (e.u > e.v) std::swap(e.u, e.v);
                }
                for (auto& k : c.key)
                    if (k >= 0) k = map_back[k];
                std::sort(c.key.begin(), c.key.end());
                if (c.kind == CompKind::ThreeConnected)
                    c.rotation_order = component_rotation(c).order;
            }
        }
    }

    validate_bicon_tree(bt, g);
    return bt;
}

void validate_bicon_tree(const BiconTree& t, const Graph& g) {
    int nodes = t.art_count() + t.comp_count();
    if (g.n > 0 && nodes == 0) throw Error("empty biconnected component tree");
    int edge_cnt = 0;
    for (const auto& a : t.adj) edge_cnt += static_cast<int>(a.size());
    edge_cnt /= 2;
    if (nodes > 0) {
        std::vector<int> seen(nodes, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reach = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++reach;
            for (int w : t.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (reach != nodes || edge_cnt != nodes - 1)
            throw Error("biconnected component tree is not a tree");
    }
    for (int v = 0; v < nodes; ++v)
        for (int w : t.adj[v])
            if (t.is_art_node(v) == t.is_art_node(w))
                throw Error("biconnected tree does not alternate");
    // Components re-glued at articulation points reproduce g.
    std::vector<Edge> es;
    for (const auto& c : t.comps) es.insert(es.end(), c.edges.begin(), c.edges.end());
    std::sort(es.begin(), es.end());
    if (es != g.edges) throw Error("biconnected components do not reconstruct the graph");
}

bool is_three_connected(const Graph& g) {
    if (g.n < 4 || !is_connected(g)) return false;
    auto adj = g.adjacency();
    for (Vertex a = 0; a < g.n; ++a)
        for (Vertex b = a + 1; b < g.n; ++b) {
            auto comp = components_without_pair(adj, g.n, a, b);
            int ncomp = 0;
            for (int c : comp) ncomp = std::max(ncomp, c + 1);
            if (ncomp >= 2) return false;
        }
    return true;
}

} // namespace planarcanon
