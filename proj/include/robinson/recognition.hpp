#pragma once

// Two-way-Robinson recognition: a space is two-way-Robinson iff some order
// makes every segment S(x, y) an interval, which is a consecutive-ones test
// on the vertex x segment membership matrix.

#include <optional>
#include <vector>

#include "robinson/c1p.hpp"
#include "robinson/core.hpp"

namespace robinson {

struct Segment {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> members;  // increasing
};

/// S(x,y) = { t : d(x,y) >= max(d(x,t), d(t,y)) and d(y,x) >= max(d(y,t), d(t,x)) }.
Segment segment(const DissimilaritySpace& space, Vertex x, Vertex y);

/// n x (n^2 - n) membership matrix; rows are vertices, columns are ordered
/// pairs (x, y), x != y, enumerated with x major.
struct SegmentMatrix {
  BinaryMatrix matrix;
  std::vector<std::pair<Vertex, Vertex>> columns;
};

SegmentMatrix build_segment_matrix(const DissimilaritySpace& space);

struct Recognition {
  VertexOrder order;  // passes is_two_way_order
  PQTree tree;        // every row order keeping all segments consecutive
};

std::optional<Recognition> recognize_two_way(const DissimilaritySpace& space);

}  // namespace robinson
