#include <catch2/catch_amalgamated.hpp>

#include "floparr/dynkin.hpp"

using namespace floparr;

TEST_CASE("diagram construction and validation") {
  DynkinDiagram a3 = build_diagram(Family::A, 3);
  REQUIRE(a3.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  DynkinDiagram d5 = build_diagram(Family::D, 5);
  REQUIRE(d5.edges ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {3, 5}});
  DynkinDiagram e6 = build_diagram(Family::E, 6);
  REQUIRE(e6.edges ==
          std::vector<std::pair<int, int>>{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}});
  REQUIRE_THROWS_AS(build_diagram(Family::D, 3), Error);
  REQUIRE_THROWS_AS(build_diagram(Family::E, 9), Error);
  REQUIRE_THROWS_AS(family_from_char('X'), Error);
}

TEST_CASE("cartan matrices") {
  Mat c = cartan_matrix(build_diagram(Family::A, 2));
  REQUIRE(c.at(0, 0) == 2);
  REQUIRE(c.at(0, 1) == -1);
  REQUIRE(c.at(1, 0) == -1);
  REQUIRE(det(cartan_matrix(build_diagram(Family::A, 3))) == 4);
  REQUIRE(det(cartan_matrix(build_diagram(Family::D, 4))) == 4);
  REQUIRE(det(cartan_matrix(build_diagram(Family::E, 6))) == 3);
  REQUIRE(det(cartan_matrix(build_diagram(Family::E, 7))) == 2);
  REQUIRE(det(cartan_matrix(build_diagram(Family::E, 8))) == 1);
}

TEST_CASE("affine marks against the classical tables") {
  auto marks_of = [](Family f, int rank) {
    return affine_extension(build_diagram(f, rank)).marks;
  };
  REQUIRE(marks_of(Family::A, 1) == std::vector<Int>{1, 1});
  REQUIRE(marks_of(Family::A, 4) == std::vector<Int>{1, 1, 1, 1, 1});
  REQUIRE(marks_of(Family::D, 4) == std::vector<Int>{1, 1, 2, 1, 1});
  REQUIRE(marks_of(Family::D, 6) == std::vector<Int>{1, 1, 2, 2, 2, 1, 1});
  REQUIRE(marks_of(Family::E, 6) == std::vector<Int>{1, 1, 2, 2, 3, 2, 1});
  REQUIRE(marks_of(Family::E, 7) == std::vector<Int>{1, 2, 2, 3, 4, 3, 2, 1});
  REQUIRE(marks_of(Family::E, 8) == std::vector<Int>{1, 2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("star attachment of the extended diagram") {
  // the extending vertex attaches to the ends: A_n both ends, D/E one leaf
  AffineDiagram a2 = affine_extension(build_diagram(Family::A, 2));
  std::vector<std::pair<int, int>> star_edges;
  for (auto [u, v] : a2.edges)
    if (u == 0 || v == 0) star_edges.push_back({u, v});
  REQUIRE(star_edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  AffineDiagram e8 = affine_extension(build_diagram(Family::E, 8));
  star_edges.clear();
  for (auto [u, v] : e8.edges)
    if (u == 0 || v == 0) star_edges.push_back({u, v});
  REQUIRE(star_edges == std::vector<std::pair<int, int>>{{0, 8}});
}

TEST_CASE("Dynkin involution matches the classical -w0 table") {
  for (int n = 1; n <= 8; ++n) {
    Involution iv = dynkin_involution(build_diagram(Family::A, n));
    for (int v = 1; v <= n; ++v) REQUIRE(iv(v) == n + 1 - v);
  }
  for (int n = 4; n <= 8; ++n) {
    Involution iv = dynkin_involution(build_diagram(Family::D, n));
    for (int v = 1; v <= n - 2; ++v) REQUIRE(iv(v) == v);
    if (n % 2 == 0) {
      REQUIRE(iv.is_identity());
    } else {
      REQUIRE(iv(n - 1) == n);
      REQUIRE(iv(n) == n - 1);
    }
  }
  Involution e6 = dynkin_involution(build_diagram(Family::E, 6));
  REQUIRE(e6(1) == 6);
  REQUIRE(e6(3) == 5);
  REQUIRE(e6(2) == 2);
  REQUIRE(e6(4) == 4);
  REQUIRE(dynkin_involution(build_diagram(Family::E, 7)).is_identity());
  REQUIRE(dynkin_involution(build_diagram(Family::E, 8)).is_identity());
}

TEST_CASE("involution on disjoint unions with arbitrary labels") {
  // two A2 components labelled {10,11} and {20,21,22} (an A3)
  std::vector<int> verts{10, 11, 20, 21, 22};
  std::vector<std::pair<int, int>> edges{{10, 11}, {20, 21}, {21, 22}};
  Involution iv = dynkin_involution(verts, edges);
  REQUIRE(iv(10) == 11);
  REQUIRE(iv(11) == 10);
  REQUIRE(iv(20) == 22);
  REQUIRE(iv(21) == 21);
}

TEST_CASE("flop datum splits white and contracted vertices") {
  FlopDatum fd = make_flop_datum(build_diagram(Family::E, 6), {4});
  REQUIRE(fd.n == 1);
  REQUIRE(fd.J == std::vector<int>{1, 2, 3, 5, 6});
  REQUIRE(fd.length_vector == std::vector<Int>{3});
  FlopDatum a2 = make_flop_datum(build_diagram(Family::A, 2), {2, 1});
  REQUIRE(a2.white == std::vector<int>{1, 2});
  REQUIRE(a2.J.empty());
  REQUIRE_THROWS_AS(make_flop_datum(build_diagram(Family::A, 2), {3}), Error);
  REQUIRE_THROWS_AS(make_flop_datum(build_diagram(Family::A, 2), {1, 1}), Error);
}

TEST_CASE("Katz-Morrison catalog") {
  auto cat = katz_morrison_catalog();
  REQUIRE(cat.size() == 6);
  for (int len = 1; len <= 6; ++len) {
    const auto& [fd, l] = cat[len - 1];
    REQUIRE(l == len);
    REQUIRE(fd.n == 1);
    REQUIRE(fd.length_vector[0] == len);
  }
  REQUIRE(cat[0].first.diagram == build_diagram(Family::A, 1));
  REQUIRE(cat[1].first.diagram == build_diagram(Family::D, 4));
  REQUIRE(cat[1].first.white == std::vector<int>{2});
  REQUIRE(cat[5].first.diagram == build_diagram(Family::E, 8));
  REQUIRE(cat[5].first.white == std::vector<int>{4});
  REQUIRE_THROWS_AS(catalog_datum(0), Error);
  REQUIRE_THROWS_AS(catalog_datum(7), Error);
}

TEST_CASE("labelled wall crossing: E6 base state") {
  FlopDatum fd = catalog_datum(3);
  LabeledState base = affine_state(fd);
  REQUIRE(base.white == std::vector<int>{0, 4});
  REQUIRE(base.mark_of(0) == 1);
  REQUIRE(base.mark_of(4) == 3);
  // crossing the wall labelled by the trivalent vertex: the remainder is the
  // affine E6 diagram minus vertex 4, three A2 arms; the star arm reverses
  LabeledState crossed = wall_cross_label(base, 4);
  REQUIRE(crossed.white == std::vector<int>{2, 4});
  REQUIRE(crossed.mark_of(2) == 2);
  // crossing the star wall instead: the remainder is finite E6, arm swap
  LabeledState other = wall_cross_label(base, 0);
  REQUIRE(other.white == std::vector<int>{0, 4});
  REQUIRE_THROWS_AS(wall_cross_label(base, 3), Error);
}

TEST_CASE("labelled wall crossing: D4 and A1") {
  LabeledState d4 = affine_state(catalog_datum(2));
  REQUIRE(d4.white == std::vector<int>{0, 2});
  // deleting the centre isolates the four leaves; nothing moves
  LabeledState c = wall_cross_label(d4, 2);
  REQUIRE(c.white == std::vector<int>{0, 2});
  // deleting the star leaves finite D4 whose involution is trivial
  LabeledState c2 = wall_cross_label(d4, 0);
  REQUIRE(c2.white == std::vector<int>{0, 2});

  LabeledState a1 = affine_state(catalog_datum(1));
  REQUIRE(a1.white == std::vector<int>{0, 1});
  REQUIRE(wall_cross_label(a1, 0).white == a1.white);
  REQUIRE(wall_cross_label(a1, 1).white == a1.white);
}
