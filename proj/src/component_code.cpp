#include "planarcanon/component_code.hpp"

#include <algorithm>
#include <map>

namespace planarcanon {

namespace {

struct EdgeAttr {
    bool virtual_edge;
    int pair_id;
};

std::map<Edge, EdgeAttr> edge_attrs(const TriconComponent& c) {
    std::map<Edge, EdgeAttr> out;
    for (const auto& e : c.edges) out[{e.u, e.v}] = {e.virtual_edge, e.pair_id};
    return out;
}

bool comp_has_edge(const TriconComponent& c, Dart d) {
    Edge e = make_edge(d.first, d.second);
    for (const auto& ce : c.edges)
        if (Edge{ce.u, ce.v} == e) return true;
    return false;
}

} // namespace

RotationScheme component_rotation(const TriconComponent& c) {
    std::vector<Edge> es;
    es.reserve(c.edges.size());
    std::vector<int> local(c.vertices.back() + 1, -1);
    for (int i = 0; i < c.size(); ++i) local[c.vertices[i]] = i;
    for (const auto& e : c.edges) es.push_back(make_edge(local[e.u], local[e.v]));
    PlaneGraph pg = planar_embed(Graph(c.size(), std::move(es)));
    RotationScheme rot;
    rot.order.resize(c.vertices.back() + 1);
    for (int i = 0; i < c.size(); ++i)
        for (Vertex w : pg.rotation.order[i]) rot.order[c.vertices[i]].push_back(c.vertices[w]);
    return rot;
}

Code cycle_code(const TriconComponent& c, Dart start) {
    if (!comp_has_edge(c, start)) throw EdgeNotInComponent();
    auto attrs = edge_attrs(c);
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& e : c.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    Code code;
    code.start = start;
    std::map<Vertex, int> num;
    num[start.first] = 0;
    auto number_of = [&](Vertex v) {
        auto it = num.find(v);
        if (it == num.end()) it = num.emplace(v, static_cast<int>(num.size())).first;
        return it->second;
    };
    Dart d = start;
    do {
        EdgeAttr a = attrs[make_edge(d.first, d.second)];
        int tn = number_of(d.first);
        int hn = number_of(d.second);
        code.entries.push_back({d.first, d.second, tn, hn, a.virtual_edge, a.pair_id});
        const auto& nb = adj[d.second];
        Vertex next = nb[0] == d.first ? nb[1] : nb[0];
        d = {d.second, next};
    } while (d != start);
    return code;
}

Code threeconn_code(const TriconComponent& c, const RotationScheme& rotation, Dart start, bool flip) {
    if (c.kind != CompKind::ThreeConnected) throw Not3Connected();
    if (!comp_has_edge(c, start)) throw EdgeNotInComponent();
    auto attrs = edge_attrs(c);

    Code code;
    code.start = start;
    code.flip = flip;
    std::map<Vertex, int> num;
    std::map<Vertex, Dart> entry_dart;
    std::vector<Vertex> queue;
    num[start.first] = 0;
    num[start.second] = 1;
    entry_dart[start.first] = reversed(start);
    entry_dart[start.second] = start;
    queue.push_back(start.first);
    queue.push_back(start.second);

    auto emit = [&](Dart d) {
        EdgeAttr a = attrs[make_edge(d.first, d.second)];
        code.entries.push_back({d.first, d.second, num[d.first], -1, a.virtual_edge, a.pair_id});
        auto it = num.find(d.second);
        if (it == num.end()) {
            it = num.emplace(d.second, static_cast<int>(num.size())).first;
            entry_dart[d.second] = d;
            queue.push_back(d.second);
        }
        code.entries.back().head_num = it->second;
    };
    emit(start);

    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex v = queue[qi];
        Dart in = entry_dart[v];
        size_t deg = rotation.order[v].size();
        Vertex w = in.first;
        for (size_t i = 0; i < deg; ++i) {
            w = flip ? rotation.prev_before(v, w) : rotation.next_after(v, w);
            emit({v, w});
        }
    }
    return code;
}

std::vector<Code> candidate_codes(const TriconComponent& c, Dart parent,
                                  const RotationScheme* rotation) {
    std::vector<Code> out;
    switch (c.kind) {
    case CompKind::ThreeBond:
    case CompKind::Edge: {
        if (!comp_has_edge(c, parent)) throw EdgeNotInComponent();
        Code code;
        code.start = parent;
        int pid = c.edges.front().pair_id;
        code.entries.push_back({parent.first, parent.second, 0, 1, false, pid});
        out.push_back(std::move(code));
        break;
    }
    case CompKind::Cycle:
        out.push_back(cycle_code(c, parent));
        out.push_back(cycle_code(c, reversed(parent)));
        break;
    case CompKind::ThreeConnected: {
        RotationScheme local;
        if (!rotation) {
            if (!c.rotation_order.empty()) local.order = c.rotation_order;
            else local = component_rotation(c);
            rotation = &local;
        }
        for (Dart d : {parent, reversed(parent)})
            for (bool flip : {false, true}) out.push_back(threeconn_code(c, *rotation, d, flip));
        break;
    }
    }
    return out;
}

} // namespace planarcanon
