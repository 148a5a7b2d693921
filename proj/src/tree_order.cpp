#include "planarcanon/tree_order.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

namespace planarcanon {

namespace {

int64_t reserved_flag(const RenderContext& ctx, Vertex v) { return v == ctx.parent_vertex ? 1 : 0; }
int64_t user_color(const RenderContext& ctx, Vertex v) { return ctx.base ? ctx.base->color(v) : 0; }
int64_t art_flag(const RenderContext& ctx, Vertex v) {
    return ctx.hung && ctx.hung->count(v) ? 1 : 0;
}

void push_vertex_attrs(Sig& s, const RenderContext& ctx, Vertex v,
                       const std::map<Vertex, int>* class_colors) {
    s.push(reserved_flag(ctx, v));
    int64_t cc = 0;
    if (class_colors) {
        auto it = class_colors->find(v);
        if (it != class_colors->end()) cc = it->second;
    }
    s.push(cc);
    s.push(user_color(ctx, v));
    s.push(art_flag(ctx, v));
}

std::string dart_str(Dart d) {
    std::ostringstream os;
    os << "(" << d.first << "," << d.second << ")";
    return os.str();
}

} // namespace

struct TriconRenderer::CompData {
    struct Candidate {
        Code code;
        Sig sig;
        std::vector<int> child_pairs; // first-encounter order
        std::vector<Vertex> hung_here; // first-occurrence order
    };
    std::vector<Candidate> cands;
    Sig sig;        // min over all candidates
    int orient = 2; // 0 gives stored (a,b), 1 gives (b,a), 2 symmetric (rel. parent pair)
    Dart d0{-1, -1};
};

struct TriconRenderer::PairData {
    Sig sig;
    int64_t size = 0;
    std::vector<int> sorted_children; // comp node ids by ascending sig
    std::vector<OrientationCounter> counters;
    std::optional<Dart> refdir;
    Dart emit_dir{-1, -1};
};

TriconRenderer::TriconRenderer(const TriconTree& t, const RenderContext& ctx,
                               const RootCandidate& root)
    : t_(t), ctx_(ctx), root_(root) {
    build_rooted();
    assign_reference_copies();

    def2_size_.assign(t_.node_count(), 0);
    hung_size_.assign(t_.node_count(), 0);

    int root_node = root_.is_pair ? root_.pair_id : t_.comp_node_id(0);
    // Post-order accumulation of sizes.
    std::vector<int> order;
    std::vector<int> stack{root_node};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : children_[v]) stack.push_back(w);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (!t_.is_pair_node(v)) def2_size_[v] += t_.comp_of_node(v).size();
        for (auto& [av, node] : refcopy_node_)
            if (node == v) hung_size_[v] += ctx_.hung->at(av).size;
        if (parent_[v] >= 0) {
            def2_size_[parent_[v]] += def2_size_[v];
            hung_size_[parent_[v]] += hung_size_[v];
        }
    }
    total_size_ = def2_size_[root_node] + hung_size_[root_node];

    if (root_.is_pair) {
        process_pair(root_.pair_id);
        PairData& pd = pair_.at(root_.pair_id);
        root_sig_ = pd.sig;
        emit_pair(root_.pair_id, pd.emit_dir);
    } else {
        if (t_.pair_count() != 0 || t_.comp_count() != 1)
            throw Error("edge root requires a single-component tree");
        process_comp(root_node);
        root_sig_ = comp_.at(root_node).sig;
        emit_comp(root_node, root_.edge);
    }
}

void TriconRenderer::build_rooted() {
    int n = t_.node_count();
    parent_.assign(n, -1);
    children_.assign(n, {});
    int root_node = root_.is_pair ? root_.pair_id : t_.comp_node_id(0);
    if (root_.is_pair && (root_.pair_id < 0 || root_.pair_id >= t_.pair_count()))
        throw Error("invalid pair root");
    std::vector<int> q{root_node};
    std::vector<char> seen(n, 0);
    seen[root_node] = 1;
    for (size_t qi = 0; qi < q.size(); ++qi) {
        int v = q[qi];
        for (int w : t_.adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            parent_[w] = v;
            children_[v].push_back(w);
            q.push_back(w);
        }
    }
}

void TriconRenderer::assign_reference_copies() {
    refcopy_node_.clear();
    if (!ctx_.hung || ctx_.hung->empty()) {
        static const std::map<Vertex, HungSubtree> empty;
        if (!ctx_.hung) ctx_.hung = &empty;
        return;
    }
    int root_node = root_.is_pair ? root_.pair_id : t_.comp_node_id(0);
    // BFS depth from the root.
    std::vector<int> depth(t_.node_count(), -1);
    std::vector<int> q{root_node};
    depth[root_node] = 0;
    for (size_t qi = 0; qi < q.size(); ++qi)
        for (int w : children_[q[qi]]) {
            depth[w] = depth[q[qi]] + 1;
            q.push_back(w);
        }
    for (const auto& [a, sub] : *ctx_.hung) {
        (void)sub;
        int best = -1;
        if (root_.is_pair && (t_.pairs[root_.pair_id].a == a || t_.pairs[root_.pair_id].b == a)) {
            best = root_.pair_id;
        } else {
            for (int ci = 0; ci < t_.comp_count(); ++ci) {
                const auto& vs = t_.comps[ci].vertices;
                if (!std::binary_search(vs.begin(), vs.end(), a)) continue;
                int node = t_.comp_node_id(ci);
                if (best < 0 || depth[node] < depth[best]) best = node;
            }
        }
        if (best < 0) throw Error("articulation point not found in component tree");
        refcopy_node_[a] = best;
    }
}

void TriconRenderer::process_comp(int comp_node) {
    const TriconComponent& c = t_.comp_of_node(comp_node);
    CompData data;

    // Process child pairs first (their signatures feed the candidate sigs).
    for (int q : children_[comp_node]) process_pair(q);

    Dart d0;
    if (parent_[comp_node] >= 0) {
        const SeparatingPair& p = t_.pairs[parent_[comp_node]];
        d0 = {p.a, p.b};
    } else {
        d0 = root_.edge;
    }
    data.d0 = d0;

    std::vector<Dart> starts =
        parent_[comp_node] >= 0 ? std::vector<Dart>{d0, reversed(d0)} : std::vector<Dart>{d0};

    RotationScheme rot;
    if (c.kind == CompKind::ThreeConnected) rot.order = c.rotation_order;

    std::vector<char> child_of(t_.pair_count(), 0);
    for (int q : children_[comp_node]) child_of[q] = 1;

    for (Dart s : starts) {
        std::vector<Code> codes;
        switch (c.kind) {
        case CompKind::ThreeBond:
        case CompKind::Edge: {
            codes = candidate_codes(c, s);
            break;
        }
        case CompKind::Cycle:
            codes.push_back(cycle_code(c, s));
            break;
        case CompKind::ThreeConnected:
            codes.push_back(threeconn_code(c, rot, s, false));
            codes.push_back(threeconn_code(c, rot, s, true));
            break;
        }
        for (Code& code : codes) {
            CompData::Candidate cand;
            cand.code = std::move(code);
            Sig& sig = cand.sig;
            sig.push(sigtok::COMP_OPEN);
            switch (c.kind) {
            case CompKind::ThreeBond: sig.push(sigtok::TYPE_BOND); break;
            case CompKind::Cycle: sig.push(sigtok::TYPE_CYCLE); break;
            case CompKind::ThreeConnected: sig.push(sigtok::TYPE_THREECONN); break;
            case CompKind::Edge: sig.push(sigtok::TYPE_EDGE); break;
            }
            std::vector<char> pair_seen(t_.pair_count(), 0);
            std::map<Vertex, char> hung_seen;
            for (const CodeEntry& e : cand.code.entries) {
                int64_t agree = sigtok::AGREE_NA;
                if (e.virtual_edge && e.pair_id >= 0 && child_of[e.pair_id] && !pair_seen[e.pair_id]) {
                    pair_seen[e.pair_id] = 1;
                    cand.child_pairs.push_back(e.pair_id);
                    const auto& refdir = pair_.at(e.pair_id).refdir;
                    if (!refdir) agree = sigtok::SYMMETRIC;
                    else agree = (Dart{e.tail, e.head} == *refdir) ? sigtok::AGREE : sigtok::DISAGREE;
                }
                sig.push(sigtok::ENTRY);
                sig.push(e.tail_num);
                sig.push(e.head_num);
                sig.push(e.virtual_edge ? 1 : 0);
                push_vertex_attrs(sig, ctx_, e.tail, nullptr);
                push_vertex_attrs(sig, ctx_, e.head, nullptr);
                sig.push(agree);
                for (Vertex endpoint : {e.tail, e.head}) {
                    auto rc = refcopy_node_.find(endpoint);
                    if (rc != refcopy_node_.end() && rc->second == comp_node &&
                        !hung_seen.count(endpoint)) {
                        hung_seen[endpoint] = 1;
                        cand.hung_here.push_back(endpoint);
                    }
                }
            }
            for (int q : cand.child_pairs) sig.append(pair_.at(q).sig);
            for (Vertex a : cand.hung_here) {
                sig.push(sigtok::HUNG_SOME);
                sig.append(ctx_.hung->at(a).sig);
            }
            sig.push(sigtok::COMP_CLOSE);
            data.cands.push_back(std::move(cand));
        }
    }

    // Minimum over candidates; the start directions achieving it define the
    // orientation given to the parent pair.
    data.sig = data.cands.front().sig;
    for (const auto& cand : data.cands)
        if (cand.sig < data.sig) data.sig = cand.sig;
    if (parent_[comp_node] >= 0) {
        bool fwd = false, bwd = false;
        for (const auto& cand : data.cands)
            if (cand.sig == data.sig) (cand.code.start == d0 ? fwd : bwd) = true;
        if (c.kind == CompKind::ThreeBond) fwd = bwd = true; // bonds are symmetric
        data.orient = (fwd && bwd) ? 2 : (fwd ? 0 : 1);
    }
    comp_.emplace(comp_node, std::move(data));
}

void TriconRenderer::process_pair(int pair_node) {
    for (int c : children_[pair_node]) process_comp(c);
    const SeparatingPair& p = t_.pairs[pair_node];
    Dart d0{p.a, p.b};

    PairData pd;
    pd.size = def2_size_[pair_node] + hung_size_[pair_node];

    pd.sorted_children = children_[pair_node];
    std::sort(pd.sorted_children.begin(), pd.sorted_children.end(), [&](int x, int y) {
        const Sig& sx = comp_.at(x).sig;
        const Sig& sy = comp_.at(y).sig;
        if (sx == sy) return x < y;
        return sx < sy;
    });

    std::vector<std::pair<Sig, int>> kids;
    for (int c : pd.sorted_children) kids.push_back({comp_.at(c).sig, comp_.at(c).orient});
    auto [counters, refdir] = orientation_counters(kids, d0);
    pd.counters = std::move(counters);
    pd.refdir = refdir;

    // Emission direction: reference orientation; otherwise unequal hung
    // subtrees at the pair's own endpoints decide; otherwise as stored.
    Dart dir = d0;
    if (pd.refdir) {
        dir = *pd.refdir;
    } else {
        auto rc_a = refcopy_node_.find(p.a);
        auto rc_b = refcopy_node_.find(p.b);
        bool ha = rc_a != refcopy_node_.end() && rc_a->second == pair_node;
        bool hb = rc_b != refcopy_node_.end() && rc_b->second == pair_node;
        if (ha || hb) {
            static const Sig none;
            const Sig& sa = ha ? ctx_.hung->at(p.a).sig : none;
            const Sig& sb = hb ? ctx_.hung->at(p.b).sig : none;
            if (sb < sa) dir = reversed(d0);
        }
    }
    pd.emit_dir = dir;

    Sig& sig = pd.sig;
    sig.push(sigtok::PAIR_OPEN);
    sig.push(pd.size);
    sig.push(static_cast<int64_t>(children_[pair_node].size()));
    for (int c : pd.sorted_children) sig.append(comp_.at(c).sig);
    sig.push(sigtok::COUNTERS);
    sig.push(static_cast<int64_t>(pd.counters.size()));
    for (const auto& oc : pd.counters) {
        sig.push(oc.fwd);
        sig.push(oc.bwd);
    }
    sig.push(sigtok::PHUNG);
    for (Vertex endpoint : {dir.first, dir.second}) {
        auto rc = refcopy_node_.find(endpoint);
        if (rc != refcopy_node_.end() && rc->second == pair_node) {
            sig.push(sigtok::HUNG_SOME);
            sig.append(ctx_.hung->at(endpoint).sig);
        } else {
            sig.push(sigtok::HUNG_NONE);
        }
    }
    sig.push(sigtok::PAIR_CLOSE);

    if (ctx_.trace) {
        std::ostringstream os;
        os << "pair=" << dart_str(d0) << " classes=" << pd.counters.size();
        (*ctx_.trace)(os.str());
        for (size_t j = 0; j < pd.counters.size(); ++j) {
            std::ostringstream cs;
            cs << "pair=" << dart_str(d0) << " class=" << (j + 1) << " counter=("
               << pd.counters[j].fwd << "," << pd.counters[j].bwd << ")";
            (*ctx_.trace)(cs.str());
        }
    }
    pair_.emplace(pair_node, std::move(pd));
}

void TriconRenderer::emit_pair(int pair_node, Dart dir) {
    const PairData& pd = pair_.at(pair_node);
    list_.push_back({ListToken::Open});
    list_.push_back({ListToken::EdgeTok, dir.first, dir.second, true});
    for (Vertex endpoint : {dir.first, dir.second})
        if (!first_occ_.count(endpoint)) first_occ_[endpoint] = {pair_node, -1};

    // Reference-orientation-agreeing siblings come before reverse ones among
    // equal subtrees.
    std::vector<int> order = pd.sorted_children;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const CompData& cx = comp_.at(x);
        const CompData& cy = comp_.at(y);
        if (cx.sig == cy.sig) {
            auto key = [&](const CompData& cd) {
                if (cd.orient == 2) return 0;
                Dart gives = cd.orient == 0 ? cd.d0 : reversed(cd.d0);
                return gives == dir ? 0 : 1;
            };
            return key(cx) < key(cy);
        }
        return false; // keep sig order from sorted_children
    });
    for (int c : order) emit_comp(c, dir);
    for (Vertex endpoint : {dir.first, dir.second}) {
        auto rc = refcopy_node_.find(endpoint);
        if (rc != refcopy_node_.end() && rc->second == pair_node) {
            const auto& sub = ctx_.hung->at(endpoint);
            list_.insert(list_.end(), sub.list.begin(), sub.list.end());
        }
    }
    list_.push_back({ListToken::Close});
}

void TriconRenderer::emit_comp(int comp_node, Dart start) {
    const CompData& cd = comp_.at(comp_node);
    const CompData::Candidate* best = nullptr;
    for (const auto& cand : cd.cands) {
        if (cand.code.start != start) continue;
        if (!best || cand.sig < best->sig) best = &cand;
    }
    if (!best) throw Error("no candidate for requested start dart");

    list_.push_back({ListToken::Open});
    int entry_idx = 0;
    std::map<int, Dart> encounter_dir;
    for (const CodeEntry& e : best->code.entries) {
        Dart out{e.tail, e.head};
        bool child_pair = e.virtual_edge && e.pair_id >= 0 && pair_.count(e.pair_id) &&
                          parent_[e.pair_id] == comp_node;
        if (child_pair) {
            if (!encounter_dir.count(e.pair_id)) encounter_dir[e.pair_id] = out;
            const auto& refdir = pair_.at(e.pair_id).refdir;
            if (refdir) out = *refdir;
        }
        list_.push_back({ListToken::EdgeTok, out.first, out.second, e.virtual_edge});
        for (Vertex endpoint : {out.first, out.second})
            if (!first_occ_.count(endpoint)) first_occ_[endpoint] = {comp_node, entry_idx};
        ++entry_idx;
    }
    for (int q : best->child_pairs) {
        const PairData& qd = pair_.at(q);
        Dart dir = qd.refdir ? *qd.refdir : encounter_dir.at(q);
        // A pair with no reference orientation is emitted in the direction in
        // which its parent's canon encounters it, unless its own hung
        // endpoints already fixed a direction.
        if (!qd.refdir && qd.emit_dir != Dart{t_.pairs[q].a, t_.pairs[q].b}) dir = qd.emit_dir;
        emit_pair(q, dir);
    }
    for (Vertex a : best->hung_here) {
        const auto& sub = ctx_.hung->at(a);
        list_.insert(list_.end(), sub.list.begin(), sub.list.end());
    }
    list_.push_back({ListToken::Close});
}

const std::vector<OrientationCounter>& TriconRenderer::counters_at(int pair_id) const {
    return pair_.at(pair_id).counters;
}
std::optional<Dart> TriconRenderer::reference_orientation_at(int pair_id) const {
    return pair_.at(pair_id).refdir;
}
const Sig& TriconRenderer::pair_sig(int pair_id) const { return pair_.at(pair_id).sig; }
const Sig& TriconRenderer::comp_sig(int comp_node) const { return comp_.at(comp_node).sig; }

OrientationOutcome TriconRenderer::component_outcome(int comp_node) const {
    const CompData& cd = comp_.at(comp_node);
    OrientationOutcome out;
    out.symmetric = cd.orient == 2;
    if (!out.symmetric) out.direction = cd.orient == 0 ? cd.d0 : reversed(cd.d0);
    return out;
}

std::optional<std::pair<int, int>> TriconRenderer::first_occurrence(Vertex a) const {
    auto it = first_occ_.find(a);
    if (it == first_occ_.end()) return std::nullopt;
    return it->second;
}

std::pair<int, int> reference_copy(const TriconTree& t, const RenderContext& ctx,
                                   const RootCandidate& root, Vertex a) {
    TriconRenderer r(t, ctx, root);
    auto occ = r.first_occurrence(a);
    if (!occ) throw Error("vertex does not occur in the tree");
    return *occ;
}

std::pair<std::vector<OrientationCounter>, std::optional<Dart>>
orientation_counters(const std::vector<std::pair<Sig, int>>& children, Dart d0) {
    std::vector<std::array<int64_t, 3>> raw; // fwd, bwd, sym per class
    for (size_t i = 0; i < children.size(); ++i) {
        if (i == 0 || !(children[i].first == children[i - 1].first)) raw.push_back({0, 0, 0});
        raw.back()[children[i].second]++;
    }
    // A class is symmetric when its counts tie (all-symmetric classes tie at
    // zero); the smallest non-symmetric class orients the pair.
    std::optional<Dart> refdir;
    bool ref_forward = true;
    for (const auto& cls : raw) {
        if (cls[0] != cls[1]) {
            ref_forward = cls[0] > cls[1];
            refdir = ref_forward ? d0 : reversed(d0);
            break;
        }
    }
    std::vector<OrientationCounter> counters;
    for (const auto& cls : raw) {
        OrientationCounter oc;
        oc.fwd = ref_forward ? cls[0] : cls[1];
        oc.bwd = ref_forward ? cls[1] : cls[0];
        counters.push_back(oc);
    }
    return {counters, refdir};
}

std::vector<OrderProfile> order_profiles(const std::vector<Sig>& siblings) {
    std::vector<OrderProfile> out(siblings.size());
    for (size_t i = 0; i < siblings.size(); ++i)
        for (size_t j = 0; j < siblings.size(); ++j) {
            if (i == j) continue;
            if (siblings[j] < siblings[i]) out[i].less++;
            else if (siblings[i] < siblings[j]) out[i].greater++;
            else out[i].equal++;
        }
    return out;
}

std::vector<RootCandidate> all_roots(const TriconTree& t) {
    std::vector<RootCandidate> out;
    if (t.pair_count() > 0) {
        for (int pi = 0; pi < t.pair_count(); ++pi) out.push_back({true, pi, {-1, -1}});
    } else {
        for (const auto& e : t.comps.front().edges)
            for (Dart d : {Dart{e.u, e.v}, Dart{e.v, e.u}}) out.push_back({false, -1, d});
    }
    return out;
}

namespace {

// Signature of one component code with the root-limiting coloring: parent
// copy reserved, articulation points colored by size class, user colors.
Sig colored_code_key(const TriconComponent& c, const Code& code, const RenderContext& ctx,
                     const std::map<Vertex, int>& class_colors) {
    Sig sig;
    for (const CodeEntry& e : code.entries) {
        sig.push(sigtok::ENTRY);
        sig.push(e.tail_num);
        sig.push(e.head_num);
        sig.push(e.virtual_edge ? 1 : 0);
        push_vertex_attrs(sig, ctx, e.tail, &class_colors);
        push_vertex_attrs(sig, ctx, e.head, &class_colors);
    }
    (void)c;
    return sig;
}

int first_virtual_pair(const Code& code) {
    for (const CodeEntry& e : code.entries)
        if (e.virtual_edge && e.pair_id >= 0) return e.pair_id;
    return -1;
}

} // namespace

RootAnalysis analyze_roots(const TriconTree& t, const RenderContext& ctx) {
    RootAnalysis an;
    static const Sig kWorst{{std::numeric_limits<int64_t>::max()}};

    TreeAdjacency ta;
    ta.adj = t.adj;
    an.center_node = tree_center(ta);

    auto distances_from = [&](int src) {
        std::vector<int> dist(t.node_count(), -1);
        std::vector<int> q{src};
        dist[src] = 0;
        for (size_t qi = 0; qi < q.size(); ++qi)
            for (int w : t.adj[q[qi]])
                if (dist[w] < 0) {
                    dist[w] = dist[q[qi]] + 1;
                    q.push_back(w);
                }
        return dist;
    };
    auto dist_center = distances_from(an.center_node);

    // Component associated with a vertex: the containing node nearest to the
    // center (always a component node).
    auto assoc = [&](Vertex a) {
        int best = -1;
        for (int ci = 0; ci < t.comp_count(); ++ci) {
            const auto& vs = t.comps[ci].vertices;
            if (!std::binary_search(vs.begin(), vs.end(), a)) continue;
            int node = t.comp_node_id(ci);
            if (best < 0 || dist_center[node] < dist_center[best]) best = node;
        }
        if (best < 0) throw Error("vertex not contained in any component");
        return best;
    };

    bool has_parent = ctx.parent_vertex >= 0;
    std::vector<int> dist_assoc;
    if (has_parent) {
        an.assoc_parent_node = assoc(ctx.parent_vertex);
        dist_assoc = distances_from(an.assoc_parent_node);
    }

    auto rank_for_pair = [&](int pi) {
        RootRank r;
        r.d_center = dist_center[pi];
        r.d_assoc = has_parent ? dist_assoc[pi] : 0;
        return r;
    };

    // Trivial tree: directed edges of the single component are the roots.
    if (t.pair_count() == 0) {
        an.active_case = 6;
        const TriconComponent& c = t.comps.front();
        // Size classes by hung subtree size, ordered by class cardinality.
        std::map<Vertex, int> class_colors;
        if (ctx.hung && !ctx.hung->empty()) {
            std::map<int64_t, std::vector<Vertex>> by_size;
            for (auto& [a, h] : *ctx.hung) by_size[h.size].push_back(a);
            std::vector<std::pair<int64_t, int64_t>> keys; // (cardinality, size)
            for (auto& [sz, vs] : by_size) keys.push_back({static_cast<int64_t>(vs.size()), sz});
            std::sort(keys.begin(), keys.end());
            int color = 1;
            for (auto [k, sz] : keys) {
                (void)k;
                for (Vertex a : by_size[sz]) class_colors[a] = color;
                ++color;
            }
        }
        Sig best = kWorst;
        for (const auto& re : c.edges)
            for (Dart d : {Dart{re.u, re.v}, Dart{re.v, re.u}}) {
                Sig key = kWorst;
                for (const Code& code : candidate_codes(c, d)) {
                    Sig s = colored_code_key(c, code, ctx, class_colors);
                    if (s < key) key = s;
                }
                an.dart_rank[d] = {0, 0, key};
                if (key < best) best = key;
            }
        for (auto& [d, r] : an.dart_rank)
            if (r.case_key == best) an.candidates.push_back({false, -1, d});
        return an;
    }

    for (int pi = 0; pi < t.pair_count(); ++pi) an.pair_rank[pi] = rank_for_pair(pi);
    auto push_min_rank_candidates = [&]() {
        RootRank best = an.pair_rank.begin()->second;
        for (auto& [pi, r] : an.pair_rank)
            if (r < best) best = r;
        for (auto& [pi, r] : an.pair_rank)
            if (r == best) an.candidates.push_back({true, pi, {-1, -1}});
    };

    // Without a parent articulation point there is no limiting case analysis:
    // roots are ranked by center distance only.
    if (!has_parent) {
        an.active_case = 0;
        for (auto& [pi, r] : an.pair_rank) r.case_key = Sig{};
        push_min_rank_candidates();
        return an;
    }

    if (t.is_pair_node(an.center_node)) {
        an.active_case = 1;
        for (auto& [pi, r] : an.pair_rank) r.case_key = Sig{};
        an.candidates.push_back({true, an.center_node, {-1, -1}});
        return an;
    }

    const TriconComponent& center_comp = t.comp_of_node(an.center_node);
    if (center_comp.kind == CompKind::ThreeBond) throw Error("3-bond cannot be a tree center");

    if (an.assoc_parent_node != an.center_node) {
        an.active_case = 2;
        for (auto& [pi, r] : an.pair_rank) r.case_key = Sig{};
        // The separating pair closest to the center on the assoc->center path
        // is the unique (d_center, d_assoc)-minimal pair.
        push_min_rank_candidates();
        return an;
    }

    // Size classes E_1..E_p of the other articulation subtrees, ordered by
    // cardinality k_1 <= ... <= k_p; members colored by class.
    std::map<Vertex, int> class_colors;
    std::vector<std::vector<Vertex>> classes;
    if (ctx.hung && !ctx.hung->empty()) {
        std::map<int64_t, std::vector<Vertex>> by_size;
        for (auto& [a, h] : *ctx.hung) by_size[h.size].push_back(a);
        std::vector<std::pair<std::pair<int64_t, int64_t>, std::vector<Vertex>>> keyed;
        for (auto& [sz, vs] : by_size)
            keyed.push_back({{static_cast<int64_t>(vs.size()), sz}, vs});
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        int color = 1;
        for (auto& [key, vs] : keyed) {
            (void)key;
            classes.push_back(vs);
            for (Vertex a : vs) class_colors[a] = color;
            ++color;
        }
    }

    if (center_comp.kind == CompKind::Cycle) {
        an.active_case = 3;
        // Walk the cycle from the two darts at the parent copy; the pair of
        // the first virtual edge reached is a candidate.
        Vertex a = ctx.parent_vertex;
        std::vector<Vertex> nbrs;
        for (const auto& e : center_comp.edges) {
            if (e.u == a) nbrs.push_back(e.v);
            if (e.v == a) nbrs.push_back(e.u);
        }
        std::sort(nbrs.begin(), nbrs.end());
        for (auto& [pi, r] : an.pair_rank) r.case_key = kWorst;
        for (Vertex w : nbrs) {
            Code code = cycle_code(center_comp, {a, w});
            int pid = first_virtual_pair(code);
            if (pid < 0) throw Error("cycle center without virtual edges in a nontrivial tree");
            Sig key = colored_code_key(center_comp, code, ctx, class_colors);
            if (key < an.pair_rank[pid].case_key) an.pair_rank[pid].case_key = key;
        }
        push_min_rank_candidates();
        return an;
    }

    // Center is a 3-connected component associated with the parent copy.
    // Case III.1 applies when l >= 2 and some E_1 subtree hangs off a
    // component other than the center.
    bool e1_outside = false;
    if (!classes.empty() && ctx.hung && ctx.hung->size() >= 2) {
        for (Vertex aj : classes.front())
            if (assoc(aj) != an.center_node) e1_outside = true;
    }
    if (e1_outside) {
        an.active_case = 4;
        for (auto& [pi, r] : an.pair_rank) r.case_key = kWorst;
        static const Sig kZero{{0}};
        for (Vertex aj : classes.front()) {
            int d = assoc(aj);
            if (d == an.center_node) continue;
            // Pair adjacent to the center on the path from assoc(aj).
            std::vector<int> par(t.node_count(), -2);
            std::vector<int> q{an.center_node};
            par[an.center_node] = -1;
            for (size_t qi = 0; qi < q.size(); ++qi)
                for (int w : t.adj[q[qi]])
                    if (par[w] == -2) {
                        par[w] = q[qi];
                        q.push_back(w);
                    }
            int node = d;
            while (par[node] != an.center_node) node = par[node];
            if (!t.is_pair_node(node)) throw Error("expected a pair adjacent to the center");
            an.pair_rank[node].case_key = kZero;
        }
        push_min_rank_candidates();
        return an;
    }

    an.active_case = 5;
    // Colored-canon recipe: canonize the center component over all directed
    // edges (and flips); pairs reached first by the minimal codes become the
    // candidates.
    for (auto& [pi, r] : an.pair_rank) r.case_key = kWorst;
    for (const auto& re : center_comp.edges)
        for (Dart d : {Dart{re.u, re.v}, Dart{re.v, re.u}}) {
            for (const Code& code : candidate_codes(center_comp, d)) {
                int pid = first_virtual_pair(code);
                if (pid < 0) throw Error("center component without virtual edges");
                Sig key = colored_code_key(center_comp, code, ctx, class_colors);
                if (key < an.pair_rank[pid].case_key) an.pair_rank[pid].case_key = key;
            }
        }
    push_min_rank_candidates();
    return an;
}

std::vector<RootCandidate> limit_roots(const TriconTree& t, const RenderContext& ctx) {
    return analyze_roots(t, ctx).candidates;
}

OrderResult compare_at_pair(const TriconTree& S, int s_pair, const RenderContext& sctx,
                            const TriconTree& T, int t_pair, const RenderContext& tctx) {
    TriconRenderer rs(S, sctx, {true, s_pair, {-1, -1}});
    TriconRenderer rt(T, tctx, {true, t_pair, {-1, -1}});
    OrderResult res;
    res.ordering = order_of(rs.sig(), rt.sig());
    res.left.symmetric = !rs.reference_orientation_at(s_pair).has_value();
    if (!res.left.symmetric) res.left.direction = *rs.reference_orientation_at(s_pair);
    res.left.counters = rs.counters_at(s_pair);
    res.right.symmetric = !rt.reference_orientation_at(t_pair).has_value();
    if (!res.right.symmetric) res.right.direction = *rt.reference_orientation_at(t_pair);
    res.right.counters = rt.counters_at(t_pair);
    return res;
}

OrderResult compare_at_component(const TriconTree& S, const RootCandidate& s_root, int s_comp_node,
                                 const RenderContext& sctx, const TriconTree& T,
                                 const RootCandidate& t_root, int t_comp_node,
                                 const RenderContext& tctx) {
    TriconRenderer rs(S, sctx, s_root);
    TriconRenderer rt(T, tctx, t_root);
    OrderResult res;
    res.ordering = order_of(rs.comp_sig(s_comp_node), rt.comp_sig(t_comp_node));
    res.left = rs.component_outcome(s_comp_node);
    res.right = rt.component_outcome(t_comp_node);
    return res;
}

} // namespace planarcanon
