#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "floparr/arrangement.hpp"

using namespace floparr;

namespace {

ExchangeGraph a2() {
  return enumerate_chambers(
      make_finite_arrangement(make_flop_datum(build_diagram(Family::A, 2), {1, 2})));
}

ExchangeGraph alcoves(int length, const Rat& lo, const Rat& hi, int K = 0) {
  FlopDatum fd = catalog_datum(length);
  if (K == 0) K = 4 * length;
  return enumerate_alcoves(make_level_arrangement(fd, K, lo, hi));
}

std::vector<Rat> wall_positions(const ExchangeGraph& g, const Rat& lo, const Rat& hi) {
  std::vector<Rat> out;
  for (const auto& w : g.walls)
    if (*w.pos >= lo && *w.pos <= hi) out.push_back(*w.pos);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("one wall, two chambers") {
  ExchangeGraph g = enumerate_chambers(
      make_finite_arrangement(make_flop_datum(build_diagram(Family::A, 1), {1})));
  REQUIRE(g.walls.size() == 1);
  REQUIRE(g.verts.size() == 2);
  REQUIRE(g.verts[0].rays.at(0, 0) == 1);
  REQUIRE(g.verts[1].rays.at(0, 0) == -1);
  REQUIRE(g.dist(0, 1) == 1);
}

TEST_CASE("A2 exchange graph is the hexagon") {
  ExchangeGraph g = a2();
  REQUIRE(g.walls.size() == 3);
  REQUIRE(g.verts.size() == 6);  // rank-2 oracle: 2 * number of lines
  for (const auto& v : g.verts) REQUIRE(v.edges.size() == 2);
  // hexagon distances from the base: 1,1,2,2,3
  std::map<int, int> by_dist;
  auto d = g.distances(0);
  for (size_t v = 1; v < g.verts.size(); ++v) ++by_dist[d[v]];
  REQUIRE(by_dist == std::map<int, int>{{1, 2}, {2, 2}, {3, 1}});
  // base chamber is the positive orthant with identity rays
  REQUIRE(g.verts[0].rays == Mat::identity(2));
  for (int8_t s : g.verts[0].sign) REQUIRE(s == 1);
  // sign vectors are distinct and each chamber's rays satisfy its signs
  std::set<std::vector<int8_t>> signs;
  for (const auto& v : g.verts) {
    REQUIRE(signs.insert(v.sign).second);
    for (int j = 0; j < 2; ++j)
      for (size_t w = 0; w < g.walls.size(); ++w)
        REQUIRE(v.sign[w] * doti(g.walls[w].cov.c, v.rays.col(j)) >= 0);
  }
}

TEST_CASE("rank-2 chamber count equals twice the wall count") {
  // angular oracle for essential rank-2 arrangements
  for (auto white : {std::vector<int>{1, 2}, std::vector<int>{1, 3}}) {
    FlopDatum fd = make_flop_datum(build_diagram(Family::A, 3), white);
    ExchangeGraph g = enumerate_chambers(make_finite_arrangement(fd));
    REQUIRE(g.verts.size() == 2 * g.walls.size());
  }
}

TEST_CASE("base alcove and window handling") {
  ExchangeGraph g = alcoves(3, Rat(-1), Rat(2));
  REQUIRE(g.affine);
  REQUIRE(g.verts[0].lo == Rat(0));
  REQUIRE(g.verts[0].hi == Rat(1, 3));
  REQUIRE(g.verts[0].rays == Mat::identity(2));
  REQUIRE(g.verts[0].rank_vec == std::vector<Int>{1, 3});
  REQUIRE(g.normalization == std::vector<Int>{1, 3});
  // window must contain the base alcove
  REQUIRE_THROWS_AS(alcoves(3, Rat(1), Rat(2)), Error);
}

TEST_CASE("alcoves tile the window without overlap") {
  for (int len : {1, 2, 3, 4}) {
    ExchangeGraph g = alcoves(len, Rat(-1), Rat(2));
    std::vector<std::pair<Rat, Rat>> iv;
    for (const auto& v : g.verts) {
      REQUIRE(v.lo < v.hi);
      iv.push_back({v.lo, v.hi});
    }
    std::sort(iv.begin(), iv.end());
    for (size_t i = 1; i < iv.size(); ++i) REQUIRE(iv[i - 1].second == iv[i].first);
    REQUIRE(iv.front().first <= Rat(-1));
    REQUIRE(iv.back().second >= Rat(2));
  }
}

TEST_CASE("wall positions are the Farey points of the length") {
  ExchangeGraph g = alcoves(3, Rat(-1), Rat(2));
  REQUIRE(wall_positions(g, Rat(0), Rat(1)) ==
          std::vector<Rat>{Rat(0), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)});
  ExchangeGraph g1 = alcoves(1, Rat(-1), Rat(2));
  REQUIRE(wall_positions(g1, Rat(0), Rat(1)) == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("rank labels match the period rows") {
  const std::vector<std::vector<Int>> rows{
      {1, 1},
      {1, 2, 1},
      {1, 3, 2, 3, 1},
      {1, 4, 3, 2, 3, 4, 1},
      {1, 5, 4, 3, 5, 2, 5, 3, 4, 5, 1},
      {1, 6, 5, 4, 3, 5, 2, 5, 3, 4, 5, 6, 1},
  };
  for (int len = 1; len <= 6; ++len) {
    ExchangeGraph g = alcoves(len, Rat(-1), Rat(2));
    auto labels = wall_rank_labels(g);
    std::vector<Int> row;
    for (const auto& [pos, rank] : labels)
      if (pos >= Rat(0) && pos <= Rat(1)) row.push_back(rank);
    REQUIRE(row == rows[len - 1]);
    // the label is the denominator of the position
    for (const auto& [pos, rank] : labels) REQUIRE(rank == pos.denominator());
  }
}

TEST_CASE("ray positions and covectors") {
  REQUIRE(ray_level_position({1, 0}, 3) == Rat(0));
  REQUIRE(ray_level_position({0, 1}, 3) == Rat(1, 3));
  REQUIRE(ray_level_position({-1, 1}, 3) == Rat(1, 2));
  REQUIRE(level_wall_covector(Rat(0), 3).c == std::vector<Int>{0, 1});
  // the covector through p/q evaluates to zero on a ray at that position
  for (Rat p : {Rat(1, 2), Rat(2, 3), Rat(-1, 3), Rat(1)}) {
    Covector c = level_wall_covector(p, 3);
    // (q - l p, p) sits at position p
    std::vector<Int> ray{p.denominator() - 3 * p.numerator(), p.numerator()};
    REQUIRE(ray_level_position(ray, 3) == p);
    REQUIRE(doti(c.c, ray) == 0);
  }
}

TEST_CASE("alcove states carry consistent ranks") {
  for (int len : {2, 3, 6}) {
    ExchangeGraph g = alcoves(len, Rat(-1), Rat(2));
    for (const auto& v : g.verts) {
      for (int j = 0; j < 2; ++j) {
        REQUIRE(v.rank_vec[j] == v.state.mark_of(v.state.white[j]));
        REQUIRE(v.rank_vec[j] == doti(g.normalization, v.rays.col(j)));
        REQUIRE(ray_level_position(v.rays.col(j), len).denominator() == v.rank_vec[j]);
      }
    }
  }
}

TEST_CASE("translation pairs alcoves with their unit shifts") {
  ExchangeGraph g = alcoves(3, Rat(-1), Rat(2));
  TranslationAction t = translation_action(g);
  REQUIRE(t.shift == Rat(1));
  REQUIRE(!t.alcove_map.empty());
  auto it = t.alcove_map.find(0);
  REQUIRE(it != t.alcove_map.end());
  REQUIRE(g.verts[it->second].lo == Rat(1));
  REQUIRE(g.verts[it->second].hi == Rat(4, 3));
  for (auto [a, b] : t.alcove_map) {
    REQUIRE(g.verts[b].lo == g.verts[a].lo + Rat(1));
    REQUIRE(g.verts[b].hi == g.verts[a].hi + Rat(1));
    REQUIRE(g.verts[b].rank_vec == g.verts[a].rank_vec);
  }
}
