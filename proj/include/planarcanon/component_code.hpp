#ifndef PLANARCANON_COMPONENT_CODE_HPP
#define PLANARCANON_COMPONENT_CODE_HPP

#include <vector>

#include "planarcanon/decompose.hpp"
#include "planarcanon/graph.hpp"

namespace planarcanon {

struct CodeEntry {
    Vertex tail, head;   // original labels, in traversal direction
    int tail_num, head_num; // first-visit numbers (label independent)
    bool virtual_edge = false;
    int pair_id = -1;
};

/// Canonical edge list of one component relative to a directed start edge
/// and an embedding choice. Two codes of the same component with identical
/// (start, flip) are identical.
struct Code {
    std::vector<CodeEntry> entries;
    Dart start;
    bool flip = false;
};

/// Rotation scheme of the component graph itself (real plus virtual edges),
/// over original labels. A 3-connected planar component has exactly two
/// embeddings: this one and its inverse.
RotationScheme component_rotation(const TriconComponent& c);

/// Walks the cycle from `start`; one entry per edge, exactly two distinct
/// codes per parent edge (one per direction). Throws EdgeNotInComponent.
Code cycle_code(const TriconComponent& c, Dart start);

/// Breadth-first traversal seeded with `start`: at each visited vertex the
/// incident darts are emitted and enqueued in rotation order (rotation if
/// flip is false, its inverse otherwise) beginning at the successor of the
/// entry dart; vertices are numbered by first visit.
Code threeconn_code(const TriconComponent& c, const RotationScheme& rotation, Dart start, bool flip);

/// All candidate codes relative to the directed parent edge: one for
/// 3-bonds (and bridge components), two for cycles, four for 3-connected
/// components.
std::vector<Code> candidate_codes(const TriconComponent& c, Dart parent,
                                  const RotationScheme* rotation = nullptr);

} // namespace planarcanon

#endif
