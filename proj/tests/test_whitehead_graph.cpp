#include <doctest.h>

#include <sstream>

#include "fgkit/whitehead_algorithm.hpp"
#include "fgkit/whitehead_graph.hpp"
#include "test_support.hpp"

using namespace fgkit;
using fgkit::testing::W;

namespace {

Letter L(char c) { return W(std::string(1, c).c_str()).front(); }

}  // namespace

TEST_CASE("edges of a linear word") {
  const WhiteheadGraph g(2, W("ab"), false);
  REQUIRE(g.edges().size() == 1);
  CHECK(g.multiplicity(L('a'), L('B')) == 1);
}

TEST_CASE("commutator graph is a 4-cycle without cut vertex") {
  const WhiteheadGraph g(2, W("ABab"), true);
  REQUIRE(g.edges().size() == 4);
  CHECK(g.multiplicity(L('A'), L('b')) == 1);
  CHECK(g.multiplicity(L('B'), L('A')) == 1);
  CHECK(g.multiplicity(L('a'), L('B')) == 1);
  CHECK(g.multiplicity(L('b'), L('a')) == 1);
  CHECK(g.is_connected());
  CHECK_FALSE(g.has_cut_vertex());
  CHECK_FALSE(passes_cut_vertex_test(W("ABab"), 2));
  CHECK_FALSE(is_primitive(W("ABab"), 2));
}

TEST_CASE("the shortest rank-3 blocking word gives a cycle missing one vertex") {
  const WhiteheadGraph g(3, W("abccbA"), true);
  CHECK(g.edges().size() == 6);
  CHECK_FALSE(g.is_connected());
  // x1^-1 carries only the wrap-around loop; the other five lie on one cycle.
  CHECK(g.component_count() == 2);
  CHECK(g.multiplicity(L('A'), L('A')) == 1);
  for (const auto& [x, y] : g.edges()) {
    if (x == y) continue;
    CHECK(x != L('A').index());
    CHECK(y != L('A').index());
  }
  CHECK(g.component_count(L('A').index()) == 1);
}

TEST_CASE("connectivity and cut vertices") {
  CHECK_FALSE(WhiteheadGraph(2, W("a"), true).is_connected());
  CHECK(passes_cut_vertex_test(W("a"), 2));
  CHECK(WhiteheadGraph(2, W("Aba"), true).has_cut_vertex());
  CHECK_FALSE(WhiteheadGraph(2, W("ab"), false).has_cut_vertex());
  CHECK_THROWS_AS(WhiteheadGraph(2, W(""), true), std::invalid_argument);
}

TEST_CASE("edge counts") {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_cyclically_reduced(1 + trial % 15, 3, rng);
    CHECK(WhiteheadGraph(3, w, true).edges().size() == w.size());
    CHECK(WhiteheadGraph(3, w, false).edges().size() == w.size() - 1);
  }
}

TEST_CASE("subword edges embed with multiplicity") {
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_reduced(2 + trial % 12, 2, rng);
    const std::size_t len = 2 + trial % (w.size() - 1);
    const Word p = w.subword(trial % (w.size() - len + 1), len);
    const WhiteheadGraph gw(2, w, false), gp(2, p, false);
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) {
        CHECK(gp.multiplicity(Letter::from_index(x), Letter::from_index(y)) <=
              gw.multiplicity(Letter::from_index(x), Letter::from_index(y)));
      }
    }
  }
}

TEST_CASE("DOT output") {
  std::ostringstream os;
  WhiteheadGraph(2, W("ab"), true).write_dot(os);
  const std::string dot = os.str();
  CHECK(dot.find("\"x1\" -- \"X2\"") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(vertex_name(L('B').index()) == "X2");
}
