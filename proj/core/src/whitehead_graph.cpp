#include "fgkit/whitehead_graph.hpp"

#include <numeric>
#include <ostream>

namespace fgkit {

WhiteheadGraph::WhiteheadGraph(int rank, const Word& w, bool include_external)
    : rank_(rank), external_(include_external) {
  check_rank(rank);
  if (w.empty()) throw std::invalid_argument("Whitehead graph of the empty word");
  check_word_rank(w, rank);
  edges_.reserve(w.size());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    edges_.emplace_back(w[i].index(), w[i + 1].inverse().index());
  }
  if (include_external) edges_.emplace_back(w.back().index(), w.front().inverse().index());
}

std::size_t WhiteheadGraph::multiplicity(Letter x, Letter y) const {
  const int a = x.index();
  const int b = y.index();
  std::size_t n = 0;
  for (const auto& [u, v] : edges_) {
    if ((u == a && v == b) || (u == b && v == a)) ++n;
  }
  return n;
}

int WhiteheadGraph::component_count(int removed_vertex) const {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges_) {
    if (u == removed_vertex || v == removed_vertex) continue;
    parent[find(u)] = find(v);
  }
  int count = 0;
  for (int x = 0; x < vertex_count(); ++x) {
    if (x != removed_vertex && find(x) == x) ++count;
  }
  return count;
}

bool WhiteheadGraph::has_cut_vertex() const {
  const int base = component_count();
  for (int x = 0; x < vertex_count(); ++x) {
    if (component_count(x) > base) return true;
  }
  return false;
}

std::string vertex_name(int vertex) {
  return std::string(vertex % 2 == 0 ? "x" : "X") + std::to_string(vertex / 2 + 1);
}

void WhiteheadGraph::write_dot(std::ostream& os) const {
  os << "graph whitehead {\n";
  for (int x = 0; x < vertex_count(); ++x) os << "  \"" << vertex_name(x) << "\";\n";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    os << "  \"" << vertex_name(edges_[i].first) << "\" -- \"" << vertex_name(edges_[i].second)
       << '"';
    if (external_ && i + 1 == edges_.size()) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
}

WhiteheadGraph build_graph(const Word& w, int rank, bool include_external) {
  return WhiteheadGraph(rank, w, include_external);
}

bool is_connected(const WhiteheadGraph& g) { return g.is_connected(); }
bool has_cut_vertex(const WhiteheadGraph& g) { return g.has_cut_vertex(); }

bool passes_cut_vertex_test(const Word& w, int rank) {
  const WhiteheadGraph g(rank, w, true);
  return !g.is_connected() || g.has_cut_vertex();
}

}  // namespace fgkit
