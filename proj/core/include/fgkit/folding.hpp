#pragma once

#include <set>
#include <vector>

#include "fgkit/word.hpp"

namespace fgkit {

/// Folded (Stallings) graph of a finitely generated subgroup of F_r, built by
/// folding a wedge of loops labelled by the generators.
class StallingsGraph {
 public:
  StallingsGraph(const std::vector<Word>& generators, int rank);

  int rank() const { return rank_; }
  /// Vertices of the folded graph (the basepoint is among them).
  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  /// Letters labelling edges leaving the basepoint.
  std::set<Letter> basepoint_letters() const;
  /// True iff the reduced word labels a closed path at the basepoint.
  bool accepts(const Word& w) const;

 private:
  int find(int v) const;
  void merge(int a, int b);
  int add_vertex();
  void add_edge(int from, Letter label, int to);

  int rank_;
  int base_ = 0;
  mutable std::vector<int> parent_;
  std::vector<std::vector<int>> out_;  // out_[v][letter index] = target or -1
};

}  // namespace fgkit
