#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fgkit/word.hpp"

namespace fgkit {

/// Whitehead graph on the 2r letters. Every adjacency x*y of the word
/// contributes the edge {x, y^-1}; the external edge is the same rule applied
/// to the wrap-around pair last*first.
class WhiteheadGraph {
 public:
  using Edge = std::pair<int, int>;  // vertex indices, see Letter::index()

  WhiteheadGraph(int rank, const Word& w, bool include_external);

  int rank() const { return rank_; }
  int vertex_count() const { return 2 * rank_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_external_edge() const { return external_; }

  /// Number of edges between the two vertices (order-insensitive).
  std::size_t multiplicity(Letter x, Letter y) const;

  /// Connected components over all 2r vertices, optionally ignoring one vertex.
  int component_count(int removed_vertex = -1) const;
  bool is_connected() const { return component_count() == 1; }
  bool has_cut_vertex() const;

  /// DOT rendering; the external edge (last in edges()) is dashed.
  void write_dot(std::ostream& os) const;

 private:
  int rank_;
  bool external_;
  std::vector<Edge> edges_;
};

WhiteheadGraph build_graph(const Word& w, int rank, bool include_external);
bool is_connected(const WhiteheadGraph& g);
bool has_cut_vertex(const WhiteheadGraph& g);

/// Necessary condition for primitivity of a cyclically reduced word: its
/// cyclic Whitehead graph is disconnected or has a cut vertex. A false result
/// certifies that `w` is not primitive.
bool passes_cut_vertex_test(const Word& w, int rank);

/// DOT vertex label: "x1" for x_1, "X1" for its inverse.
std::string vertex_name(int vertex);

}  // namespace fgkit
