#ifndef FLOPARR_GROUPOID_HPP
#define FLOPARR_GROUPOID_HPP

#include <algorithm>
#include <vector>

#include "floparr/tracking.hpp"

namespace floparr {

struct PositivePath {
  int source = 0;
  std::vector<int> word;  // labels, no formal inverses
};

// Vertex sequence visited by a path; length = word length + 1.
inline std::vector<int> walk_vertices(const ExchangeGraph& g, const PositivePath& p) {
  std::vector<int> seq{p.source};
  for (int label : p.word) {
    const GraphEdge* e = g.verts[seq.back()].edge_with_label(label);
    if (!e) fail(ErrorCode::UnwalkablePath, "path leaves the graph");
    seq.push_back(e->to);
  }
  return seq;
}

// Multiset of crossed wall ids, sorted.
inline std::vector<int> crossing_set(const ExchangeGraph& g, const PositivePath& p) {
  std::vector<int> walls;
  int cur = p.source;
  for (int label : p.word) {
    const GraphEdge* e = g.verts[cur].edge_with_label(label);
    if (!e) fail(ErrorCode::UnwalkablePath, "path leaves the graph");
    walls.push_back(e->wall);
    cur = e->to;
  }
  std::sort(walls.begin(), walls.end());
  return walls;
}

// Reduced = crosses no wall twice; equivalently a shortest path.  Both
// characterizations are computed and must agree.
inline bool is_reduced(const ExchangeGraph& g, const PositivePath& p) {
  auto walls = crossing_set(g, p);
  bool no_repeat = std::adjacent_find(walls.begin(), walls.end()) == walls.end();
  int end = walk_end(g, p.source, p.word);
  bool shortest = static_cast<int>(p.word.size()) == g.dist(p.source, end);
  if (no_repeat != shortest)
    fail(ErrorCode::Internal, "reduced/shortest characterizations disagree");
  return no_repeat;
}

// Given reduced alpha: A -> B with s_i . alpha not reduced, produces a
// reduced gamma: A -> C (C the s_i-neighbour of B) such that s_i . gamma is
// a reduced path A -> B.
inline PositivePath lemma1_completion(const ExchangeGraph& g, const PositivePath& alpha,
                                      int i) {
  if (!is_reduced(g, alpha))
    fail(ErrorCode::PreconditionUnmet, "alpha is not reduced");
  int b = walk_end(g, alpha.source, alpha.word);
  const GraphEdge* e = g.verts[b].edge_with_label(i);
  if (!e) fail(ErrorCode::UnwalkablePath, "no s_i wall at the endpoint");
  int c = e->to;
  PositivePath extended{alpha.source, alpha.word};
  extended.word.push_back(i);
  if (is_reduced(g, extended))
    fail(ErrorCode::PreconditionUnmet, "s_i . alpha is already reduced");
  PositivePath gamma{alpha.source, shortest_word(g, alpha.source, c)};
  PositivePath closed{gamma.source, gamma.word};
  closed.word.push_back(i);
  if (!is_reduced(g, gamma) || !is_reduced(g, closed) ||
      walk_end(g, closed.source, closed.word) != b)
    fail(ErrorCode::SearchFailed, "no completion found (would falsify the lemma)");
  return gamma;
}

// Side of a chamber with respect to a wall.
inline int side_of(const ExchangeGraph& g, int chamber, int wall) {
  if (g.affine) {
    const Rat& p = *g.walls[wall].pos;
    if (g.verts[chamber].lo >= p) return 1;
    if (g.verts[chamber].hi <= p) return -1;
    fail(ErrorCode::Internal, "alcove straddles a wall");
  }
  return g.verts[chamber].sign[wall];
}

// For each step of a reduced path, the source chamber and the chamber just
// before the crossing are on the same side of the crossed wall.
inline bool verify_same_side(const ExchangeGraph& g, const PositivePath& p) {
  if (!is_reduced(g, p)) fail(ErrorCode::PreconditionUnmet, "path is not reduced");
  int cur = p.source;
  for (size_t step = 0; step < p.word.size(); ++step) {
    const GraphEdge* e = g.verts[cur].edge_with_label(p.word[step]);
    if (side_of(g, p.source, e->wall) != side_of(g, cur, e->wall)) return false;
    cur = e->to;
  }
  return true;
}

// True iff both paths are reduced (they then represent the same groupoid
// morphism); equal crossing multisets and equal path matrices are necessary
// and are verified, not assumed.
inline bool equivalent_reduced(const ExchangeGraph& g, const PositivePath& p,
                               const PositivePath& q) {
  if (p.source != q.source ||
      walk_end(g, p.source, p.word) != walk_end(g, q.source, q.word))
    fail(ErrorCode::PreconditionUnmet, "paths do not share endpoints");
  bool both = is_reduced(g, p) && is_reduced(g, q);
  if (both) {
    if (crossing_set(g, p) != crossing_set(g, q))
      fail(ErrorCode::VerificationFailed, "reduced paths with different crossing sets");
    if (!(path_matrix(g, p.source, p.word).m == path_matrix(g, q.source, q.word).m))
      fail(ErrorCode::VerificationFailed, "reduced paths with different matrices");
  }
  return both;
}

}  // namespace floparr

#endif
