#include "fgkit/folding.hpp"

#include <utility>

namespace fgkit {

StallingsGraph::StallingsGraph(const std::vector<Word>& generators, int rank) : rank_(rank) {
  check_rank(rank);
  base_ = add_vertex();
  for (const Word& g : generators) {
    check_word_rank(g, rank);
    if (g.empty()) continue;
    int at = base_;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const int next = (i + 1 == g.size()) ? base_ : add_vertex();
      add_edge(at, g[i], next);
      at = next;
    }
  }
}

int StallingsGraph::add_vertex() {
  parent_.push_back(static_cast<int>(parent_.size()));
  out_.emplace_back(static_cast<std::size_t>(2 * rank_), -1);
  return static_cast<int>(parent_.size()) - 1;
}

int StallingsGraph::find(int v) const {
  while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
  return v;
}

void StallingsGraph::add_edge(int from, Letter label, int to) {
  std::vector<std::pair<int, int>> pending;
  auto attach = [&](int u, int dir, int v) {
    int& slot = out_[u][dir];
    if (slot < 0) {
      slot = v;
    } else if (find(slot) != find(v)) {
      pending.emplace_back(slot, v);
    }
  };
  attach(find(from), label.index(), find(to));
  attach(find(to), label.inverse().index(), find(from));

  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    a = find(a);
    b = find(b);
    if (a == b) continue;
    parent_[b] = a;
    if (base_ == b) base_ = a;
    for (int dir = 0; dir < 2 * rank_; ++dir) {
      const int t = out_[b][dir];
      if (t < 0) continue;
      attach(a, dir, t);
    }
  }
}

std::size_t StallingsGraph::vertex_count() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (find(static_cast<int>(v)) == static_cast<int>(v)) ++n;
  }
  return n;
}

std::size_t StallingsGraph::edge_count() const {
  std::size_t slots = 0;
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (find(static_cast<int>(v)) != static_cast<int>(v)) continue;
    for (int t : out_[v]) slots += t >= 0 ? 1 : 0;
  }
  return slots / 2;
}

std::set<Letter> StallingsGraph::basepoint_letters() const {
  std::set<Letter> out;
  const int b = find(base_);
  for (int dir = 0; dir < 2 * rank_; ++dir) {
    if (out_[b][dir] >= 0) out.insert(Letter::from_index(dir));
  }
  return out;
}

bool StallingsGraph::accepts(const Word& w) const {
  int at = find(base_);
  for (Letter l : w) {
    if (l.generator() > rank_) return false;
    const int t = out_[at][l.index()];
    if (t < 0) return false;
    at = find(t);
  }
  return at == find(base_);
}

}  // namespace fgkit
