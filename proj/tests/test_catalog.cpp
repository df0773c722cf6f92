#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "recon/catalog.hpp"
#include "recon/error.hpp"

using namespace recon;

namespace {

// Isomorphism via brute-force permutation search over edge sets.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> p(static_cast<std::size_t>(a.order()));
  std::iota(p.begin(), p.end(), 0);
  std::set<Edge> target(b.edges().begin(), b.edges().end());
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      int x = p[static_cast<std::size_t>(u)], y = p[static_cast<std::size_t>(v)];
      if (!target.count({std::min(x, y), std::max(x, y)})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("family generators") {
  CHECK(generate(FamilySpec::path(4)).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  Graph s114 = generate(FamilySpec::subdivided_star({1, 1, 4}));
  CHECK(s114.order() == 7);
  CHECK(identify(s114) == "S_{1,1,4}");
  Graph t2 = generate(FamilySpec::triangle_tail(2));
  CHECK(t2.order() == 5);
  CHECK(t2.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(identify(t2) == "T_2");
  CHECK(generate(FamilySpec::star(3)).order() == 4);
  CHECK(identify(generate(FamilySpec::star(3))) == "S_3");
  CHECK(identify(generate(FamilySpec::bistar(3, 2))) == "B_{2,3}");
  CHECK(identify(generate(FamilySpec::complete(4))) == "K_4");
  CHECK(identify(cycle(4)) == "C_4");
  CHECK(identify(gem()) == "gem");
  CHECK(identify(generate(FamilySpec::path(1))) == "P_1");
  CHECK_THROWS_AS(generate(FamilySpec::subdivided_star({1, 0})), Error);
  CHECK_THROWS_AS(generate(FamilySpec::triangle_tail(0)), Error);
  CHECK_THROWS_AS(generate(FamilySpec::bistar(0, 2)), Error);
  CHECK(parse_family("s11m:3") == FamilySpec::subdivided_star({1, 1, 3}));
  CHECK(parse_family("bistar:2,3") == FamilySpec::bistar(2, 3));
  CHECK(parse_family("substar:1,2,3").to_string() == "substar:1,2,3");
  CHECK_THROWS_AS(parse_family("wheel:5"), Error);
  CHECK_THROWS_AS(parse_family("path:x"), Error);
}

TEST_CASE("tree atlas sizes") {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) {
    auto trees = enumerate_trees(n);
    CHECK(trees.size() == expected[static_cast<std::size_t>(n - 1)]);
    for (const auto& t : trees) CHECK(t.is_tree());
  }
  CHECK_THROWS_AS(enumerate_trees(9), Error);

  std::set<std::string> six;
  for (const auto& t : enumerate_trees(6)) six.insert(identify(t));
  CHECK(six == std::set<std::string>{"P_6", "S_5", "S_{1,1,3}", "B_{2,2}", "S_{1,2,2}", "S_{1,1,1,2}"});
}

TEST_CASE("connected graph atlas sizes") {
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_connected_graphs(n).size() == expected[static_cast<std::size_t>(n - 1)]);
  CHECK_THROWS_AS(enumerate_connected_graphs(7), Error);

  // Pairwise non-isomorphic by brute force, and trees embed in graphs.
  for (int n = 1; n <= 5; ++n) {
    auto graphs = enumerate_connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j) CHECK_FALSE(brute_isomorphic(graphs[i], graphs[j]));
    for (const auto& t : enumerate_trees(n)) {
      int hits = 0;
      for (const auto& g : graphs) hits += brute_isomorphic(t, g) ? 1 : 0;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("canonical key agrees with brute-force isomorphism") {
  auto graphs = enumerate_connected_graphs(5);
  for (const auto& g : graphs) {
    // Relabel by a fixed shuffle and confirm the key is unchanged.
    std::vector<int> p = {3, 0, 4, 1, 2};
    std::vector<Edge> moved;
    for (auto [a, b] : g.edges()) moved.emplace_back(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    Graph h = build_graph(5, moved);
    CHECK(canonical_key(g) == canonical_key(h));
    CHECK(canonical_form(h) == g);
  }
}

TEST_CASE("shapes") {
  auto shape = subdivided_star_shape(generate(FamilySpec::subdivided_star({1, 2, 3})));
  REQUIRE(shape);
  CHECK(shape->center == 0);
  CHECK(shape->branches == std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5, 6}});
  CHECK_FALSE(subdivided_star_shape(generate(FamilySpec::path(5))));
  auto bi = bistar_shape(generate(FamilySpec::bistar(2, 3)));
  REQUIRE(bi);
  CHECK(bi->leaves_u.size() == 2);
  CHECK(bi->leaves_v.size() == 3);
  auto tail = triangle_tail_shape(generate(FamilySpec::triangle_tail(3)));
  REQUIRE(tail);
  CHECK(tail->path == std::vector<int>{2, 3, 4, 5});
  CHECK_FALSE(triangle_tail_shape(cycle(4)));
}
