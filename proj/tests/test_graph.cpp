#include "doctest.h"

#include "cssemi/catalog.hpp"
#include "cssemi/graph.hpp"
#include "cssemi/rees.hpp"
#include "oracles.hpp"

#include <set>

using namespace cssemi;

namespace {
  std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) {
      out.push_back(std::to_string(k));
    }
    return out;
  }

  ColouredGraph make(std::vector<std::vector<Index>> c,
                     std::vector<std::string> colours = {"x", "y"}) {
    std::size_t const l = c.size(), r = c.empty() ? 0 : c[0].size();
    return ColouredGraph(numbered(l), numbered(r), colours, std::move(c));
  }
}  // namespace

TEST_CASE("graphs from sandwich matrices") {
  auto g2 = from_matrix(catalog::s2(), Cell{0, 0});
  CHECK(g2.left_size() == 1);
  CHECK(g2.colour_label(0, 0) == "a");
  auto g4 = from_matrix(catalog::s4(), Cell{0, 0});
  CHECK(g4.left_size() == 3);
  for (Index l = 0; l < 3; ++l) {
    for (Index r = 0; r < 3; ++r) {
      CHECK(g4.colour_label(l, r) == (l == r ? "e" : "a"));
    }
  }
  auto m = from_matrix(catalog::trivial_rms(catalog::cyclic_group(2), 2, 2),
                       std::nullopt);
  CHECK(classify_pattern(m) == GraphPattern::Monochromatic);
}

TEST_CASE("graph isomorphisms match brute force") {
  CHECK(enumerate_graph_isomorphisms(make({{0}}), make({{0}})).size() == 1);
  auto mpc = make({{0, 1}, {1, 0}});
  CHECK(oracle::count_graph_automorphisms(mpc) == 2);
  CHECK(enumerate_graph_isomorphisms(mpc, mpc).size() == 2);
  auto mono = make({{0, 0, 0}, {0, 0, 0}});
  CHECK(enumerate_graph_isomorphisms(mono, mono).size() == 2 * 6);
  // colours are matched by label, not by index
  auto relabelled = ColouredGraph(numbered(2), numbered(2), {"y", "x"},
                                  {{1, 0}, {0, 1}});
  CHECK(enumerate_graph_isomorphisms(mpc, relabelled).size() == 2);
}

TEST_CASE("colour patterns") {
  CHECK(classify_pattern(make({{1}})) == GraphPattern::Monochromatic);
  CHECK(classify_pattern(make({{0, 1}, {1, 0}}))
        == GraphPattern::MatchingPlusComplement);
  CHECK(classify_pattern(make({{0, 1}, {0, 1}})) == GraphPattern::Other);
  CHECK(classify_pattern(make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))
        == GraphPattern::MatchingPlusComplement);
}

TEST_CASE("graph homogeneity matches brute force") {
  auto mono = make({{0, 0, 0}, {0, 0, 0}});
  CHECK(oracle::graph_homogeneous(mono));
  CHECK(is_homogeneous_graph(mono).homogeneous);
  auto mpc = make({{0, 1}, {1, 0}});
  CHECK(oracle::graph_homogeneous(mpc));
  CHECK(is_homogeneous_graph(mpc).homogeneous);
  auto other = make({{0, 1}, {0, 1}});
  CHECK_FALSE(oracle::graph_homogeneous(other));
  auto h = is_homogeneous_graph(other);
  CHECK_FALSE(h.homogeneous);
  CHECK(h.counterexample);
  std::vector<std::vector<Index>> samples[] = {
      {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
      {{0, 0, 1}, {0, 1, 0}},
      {{1, 0}, {0, 1}, {0, 0}},
  };
  for (auto const& c : samples) {
    auto g = make(c, {"x", "y", "z"});
    CHECK(is_homogeneous_graph(g).homogeneous == oracle::graph_homogeneous(g));
  }
}

TEST_CASE("k-generic defects") {
  auto eps = ColouredGraph(numbered(2), numbered(2), {"e"}, {{0, 0}, {0, 0}});
  auto d   = k_generic_defects(eps, {"e", "a"}, 1);
  bool found = false;
  for (auto const& x : d.defects) {
    found = found
            || (x.left_side && x.vertices == ElementSet{0}
                && x.colours == std::vector<std::string>{"a"});
  }
  CHECK(found);
  CHECK(k_generic_defects(eps, {"e"}, 2).empty());

  auto one = ColouredGraph(numbered(1), numbered(1), {"e"}, {{0}});
  auto g1  = extend_to_k_generic(one, {"e", "a"}, 1);
  CHECK(k_generic_defects(g1, {"e", "a"}, 1, std::make_pair(1, 1)).empty());
  std::set<std::string> seen_left, seen_right;
  for (Index r = 0; r < g1.right_size(); ++r) {
    seen_left.insert(g1.colour_label(0, r));
  }
  for (Index l = 0; l < g1.left_size(); ++l) {
    seen_right.insert(g1.colour_label(l, 0));
  }
  CHECK(seen_left.size() == 2);
  CHECK(seen_right.size() == 2);

  auto mpc = ColouredGraph(numbered(2), numbered(2), {"e", "a"},
                           {{0, 1}, {1, 0}});
  CHECK(extend_to_k_generic(mpc, {"e", "a"}, 1) == mpc);

  auto g2 = extend_to_k_generic(mpc, {"e", "a"}, 2);
  CHECK(k_generic_defects(g2, {"e", "a"}, 2, std::make_pair(2, 2)).empty());
}
