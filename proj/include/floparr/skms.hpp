#ifndef FLOPARR_SKMS_HPP
#define FLOPARR_SKMS_HPP

#include <vector>

#include "floparr/arrangement.hpp"

namespace floparr {

struct SKMSDescription {
  int length = 0;
  std::vector<Rat> equator_holes;  // wall positions in [0,1)
  std::vector<Int> hole_labels;    // rank per hole
  int equator_hole_count = 0;
  int total_punctures = 0;  // equator holes plus the two poles
};

struct FundamentalDomain {
  Rat lo{0}, hi{1};             // half-open unit interval, ends glued
  std::vector<int> alcoves;     // ids in the exchange graph
  std::vector<Rat> walls;       // positions in [0,1)
};

inline ExchangeGraph skms_alcove_graph(int length) {
  if (length < 1 || length > 6)
    fail(ErrorCode::UnsupportedLength, "lengths 1..6 only");
  FlopDatum fd = catalog_datum(length);
  LevelArrangement la =
      make_level_arrangement(fd, length + 1, Rat(-1), Rat(2));
  return enumerate_alcoves(la);
}

inline FundamentalDomain fundamental_domain(const ExchangeGraph& g) {
  if (!g.affine || g.fd.n != 1)
    fail(ErrorCode::Unsupported, "fundamental domain defined for n = 1 only");
  if (g.window_lo > Rat(0) || g.window_hi < Rat(1))
    fail(ErrorCode::WindowTooSmall, "window does not cover the unit interval");
  FundamentalDomain dom;
  for (size_t v = 0; v < g.verts.size(); ++v)
    if (g.verts[v].lo >= Rat(0) && g.verts[v].lo < Rat(1))
      dom.alcoves.push_back(static_cast<int>(v));
  for (const auto& w : g.walls)
    if (*w.pos >= Rat(0) && *w.pos < Rat(1)) dom.walls.push_back(*w.pos);
  std::sort(dom.walls.begin(), dom.walls.end());
  std::sort(dom.alcoves.begin(), dom.alcoves.end(), [&](int a, int b) {
    return g.verts[a].lo < g.verts[b].lo;
  });
  return dom;
}

// Quotient of the level arrangement by the Picard translation: the walls in
// one fundamental domain become the labelled equator holes; the two poles
// are appended by rule.
inline SKMSDescription skms_for_length(int length) {
  ExchangeGraph g = skms_alcove_graph(length);
  FundamentalDomain dom = fundamental_domain(g);
  auto labels = wall_rank_labels(g);
  SKMSDescription d;
  d.length = length;
  for (const Rat& p : dom.walls) {
    d.equator_holes.push_back(p);
    d.hole_labels.push_back(labels.at(p));
  }
  d.equator_hole_count = static_cast<int>(d.equator_holes.size());
  d.total_punctures = d.equator_hole_count + 2;
  // label symmetry under p -> 1 - p away from the hole at 0
  for (int a = 1; a < d.equator_hole_count; ++a) {
    Rat mirror = Rat(1) - d.equator_holes[a];
    for (int b = 1; b < d.equator_hole_count; ++b)
      if (d.equator_holes[b] == mirror && d.hole_labels[a] != d.hole_labels[b])
        fail(ErrorCode::Internal, "hole labels not symmetric");
  }
  return d;
}

}  // namespace floparr

#endif
