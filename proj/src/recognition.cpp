#include "robinson/recognition.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace robinson {

namespace {

bool in_segment(const DissimilaritySpace& d, Vertex x, Vertex y, Vertex t) {
  return d(x, y) >= std::max(d(x, t), d(t, y)) && d(y, x) >= std::max(d(y, t), d(t, x));
}

}  // namespace

Segment segment(const DissimilaritySpace& space, Vertex x, Vertex y) {
  const int n = space.size();
  if (x < 0 || x >= n || y < 0 || y >= n) throw InputError("segment: vertex out of range");
  if (x == y) throw InputError("segment: anchors must differ");
  Segment s{x, y, {}};
  for (Vertex t = 0; t < n; ++t)
    if (in_segment(space, x, y, t)) s.members.push_back(t);
  return s;
}

SegmentMatrix build_segment_matrix(const DissimilaritySpace& space) {
  const int n = space.size();
  if (n < 2) throw InputError("segment matrix: needs at least two points");
  SegmentMatrix out{BinaryMatrix(n, n * n - n), {}};
  out.columns.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
  int col = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      for (Vertex t = 0; t < n; ++t)
        if (in_segment(space, x, y, t)) out.matrix.set(t, col, true);
      out.columns.emplace_back(x, y);
      ++col;
    }
  }
  return out;
}

std::optional<Recognition> recognize_two_way(const DissimilaritySpace& space) {
  const int n = space.size();
  if (n < 1) throw InputError("recognize_two_way: empty space");
  if (n <= 2) return Recognition{VertexOrder::identity(n), PQTree(n)};

  // S(x,y) = S(y,x), so only x < y is reduced; trivial columns are skipped.
  PQTree tree(n);
  std::set<std::vector<Vertex>> seen;
  std::vector<Vertex> members;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      members.clear();
      for (Vertex t = 0; t < n; ++t)
        if (in_segment(space, x, y, t)) members.push_back(t);
      if (static_cast<int>(members.size()) == n) continue;
      if (!seen.insert(members).second) continue;
      if (!tree.reduce(members)) return std::nullopt;
    }
  }
  VertexOrder order = frontier(tree);
  if (!is_two_way_order(space, order)) {
    throw InternalError("recognize_two_way: frontier order " + tree.to_string() +
                        " is not compatible");
  }
  return Recognition{std::move(order), std::move(tree)};
}

}  // namespace robinson
