#ifndef FLOPARR_ARRANGEMENT_HPP
#define FLOPARR_ARRANGEMENT_HPP

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "floparr/roots.hpp"

namespace floparr {

struct Wall {
  Covector cov;
  std::optional<Rat> pos;  // level position (affine n = 1)
  Int rank_label = 0;      // rank of the labelling module (affine n = 1)
};

struct GraphEdge {
  int label = -1;  // s_i
  int to = -1;
  int wall = -1;  // index into ExchangeGraph::walls
};

struct GraphVertex {
  std::vector<int8_t> sign;  // finite: per-wall sign (+1/-1)
  Rat lo, hi;                // affine n = 1: alcove interval on the level
  Mat rays;                  // columns = primitive rays; equals phi_L
  std::vector<int> word;     // a shortest word of labels from the base
  std::vector<Int> rank_vec;  // affine: pullback of the normalization
  LabeledState state;         // affine: labelled diagram of the alcove
  std::vector<GraphEdge> edges;

  const GraphEdge* edge_with_label(int label) const {
    for (const auto& e : edges)
      if (e.label == label) return &e;
    return nullptr;
  }
};

struct ExchangeGraph {
  bool affine = false;
  int dim = 0;  // n (finite) or n+1 (affine)
  FlopDatum fd;
  Int length = 0;                   // affine n = 1
  std::vector<Int> normalization;   // affine: r = (1, l_1, ..., l_n)
  Rat window_lo, window_hi;         // affine: level window
  int window_k = 0;                 // affine: |k| bound used for the wall set
  std::vector<Wall> walls;
  std::vector<GraphVertex> verts;  // verts[0] = base chamber C+

  // BFS distances from a vertex.
  std::vector<int> distances(int from) const {
    std::vector<int> d(verts.size(), -1);
    std::deque<int> q{from};
    d[from] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& e : verts[v].edges)
        if (d[e.to] < 0) {
          d[e.to] = d[v] + 1;
          q.push_back(e.to);
        }
    }
    return d;
  }
  int dist(int a, int b) const { return distances(a)[b]; }
};

struct FiniteArrangement {
  FlopDatum fd;
  std::vector<Covector> walls;
  int n = 0;
};

inline FiniteArrangement make_finite_arrangement(const FlopDatum& fd) {
  FiniteArrangement fa;
  fa.fd = fd;
  fa.walls = finite_wall_set(fd);
  fa.n = fd.n;
  return fa;
}

namespace detail {

// Extreme rays of the closed cone with the given wall signs, assuming the
// arrangement is essential: candidates are primitive kernel vectors of
// (n-1)-subsets of walls, kept when they satisfy every halfspace.
inline std::vector<std::vector<Int>> rays_for_sign(
    const std::vector<Covector>& walls, const std::vector<int8_t>& sign, int n) {
  int m = static_cast<int>(walls.size());
  std::set<std::vector<Int>> found;
  std::vector<int> subset(std::max(n - 1, 0));
  auto check = [&](const std::vector<Int>& v) {
    for (int w = 0; w < m; ++w)
      if (sign[w] * doti(walls[w].c, v) < 0) return;
    found.insert(v);
  };
  // iterate over subsets of size n-1
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(idx.size()) == n - 1) {
      std::vector<std::vector<Int>> rows;
      for (int i : idx) rows.push_back(walls[i].c);
      if (auto v = kernel_line(rows, n)) {
        check(*v);
        std::vector<Int> neg(*v);
        for (Int& x : neg) x = -x;
        check(neg);
      }
      return;
    }
    for (int i = start; i < m; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return {found.begin(), found.end()};
}

}  // namespace detail

inline ExchangeGraph enumerate_chambers(const FiniteArrangement& fa) {
  int n = fa.n;
  int m = static_cast<int>(fa.walls.size());
  {
    std::vector<std::vector<Int>> rows;
    for (const auto& w : fa.walls) rows.push_back(w.c);
    Mat g(n);  // Gram-style rank check via row reduction on covectors
    std::vector<std::vector<Rat>> b;
    for (const auto& r : rows) {
      std::vector<Rat> row(n);
      for (int j = 0; j < n; ++j) row[j] = Rat(r[j]);
      b.push_back(row);
    }
    int rank = 0;
    for (int col = 0; col < n; ++col) {
      int p = -1;
      for (int i = rank; i < static_cast<int>(b.size()); ++i)
        if (b[i][col] != Rat(0)) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(b[rank], b[p]);
      for (int i = 0; i < static_cast<int>(b.size()); ++i) {
        if (i == rank) continue;
        if (b[i][col] == Rat(0)) continue;
        Rat f = b[i][col] / b[rank][col];
        for (int j = 0; j < n; ++j) b[i][j] -= f * b[rank][j];
      }
      ++rank;
    }
    if (rank != n) fail(ErrorCode::Internal, "arrangement not essential");
  }

  ExchangeGraph g;
  g.affine = false;
  g.dim = n;
  g.fd = fa.fd;
  for (const auto& c : fa.walls) g.walls.push_back({c, std::nullopt, 0});

  GraphVertex base;
  base.rays = Mat::identity(n);
  base.sign.assign(m, 0);
  auto sign_of = [&](const Mat& rays) {
    // interior sample: sum of rays
    std::vector<Int> p(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) p[i] += rays.at(i, j);
    std::vector<int8_t> s(m);
    for (int w = 0; w < m; ++w) {
      Int v = doti(fa.walls[w].c, p);
      if (v == 0) fail(ErrorCode::Internal, "chamber sample on a wall");
      s[w] = v > 0 ? 1 : -1;
    }
    return s;
  };
  base.sign = sign_of(base.rays);
  g.verts.push_back(base);
  std::map<std::vector<int8_t>, int> index{{base.sign, 0}};

  for (size_t head = 0; head < g.verts.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      if (g.verts[head].edge_with_label(i)) continue;
      Mat rays = g.verts[head].rays;
      // the facet crossed by s_i is spanned by the rays other than i; find
      // the unique wall containing it
      int wall_id = -1;
      for (int w = 0; w < m; ++w) {
        bool contains = true;
        for (int j = 0; j < n && contains; ++j)
          if (j != i && doti(fa.walls[w].c, rays.col(j)) != 0) contains = false;
        if (contains) {
          if (wall_id >= 0)
            fail(ErrorCode::Internal, "facet lies on two distinct walls");
          wall_id = w;
        }
      }
      if (wall_id < 0) fail(ErrorCode::Internal, "facet lies on no wall");
      std::vector<int8_t> nsign = g.verts[head].sign;
      nsign[wall_id] = -nsign[wall_id];
      int to;
      auto it = index.find(nsign);
      if (it != index.end()) {
        to = it->second;
      } else {
        auto cand = detail::rays_for_sign(fa.walls, nsign, n);
        if (static_cast<int>(cand.size()) != n)
          fail(ErrorCode::NotSimplicial,
               "chamber has " + std::to_string(cand.size()) + " rays");
        GraphVertex nb;
        nb.rays = Mat(n);
        std::set<std::vector<Int>> kept;
        for (int j = 0; j < n; ++j)
          if (j != i) kept.insert(rays.col(j));
        std::vector<Int> fresh;
        for (auto& v : cand) {
          if (kept.count(v)) continue;
          if (!fresh.empty())
            fail(ErrorCode::Internal, "neighbour does not share the facet rays");
          fresh = v;
        }
        if (fresh.empty()) fail(ErrorCode::Internal, "no new ray after crossing");
        for (int j = 0; j < n; ++j)
          nb.rays.set_col(j, j == i ? fresh : rays.col(j));
        nb.sign = nsign;
        nb.word = g.verts[head].word;
        nb.word.push_back(i);
        to = static_cast<int>(g.verts.size());
        g.verts.push_back(nb);
        index[nsign] = to;
      }
      g.verts[head].edges.push_back({i, to, wall_id});
      g.verts[to].edges.push_back({i, static_cast<int>(head), wall_id});
    }
  }
  for (auto& v : g.verts)
    std::sort(v.edges.begin(), v.edges.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return a.label < b.label; });
  return g;
}

struct LevelArrangement {
  FlopDatum fd;
  AffineDiagram aff;
  std::vector<Int> normalization;  // (1, l_1, ..., l_n)
  int K = 0;                       // |k| bound for the root-restriction walls
  Rat lo, hi;                      // level window box
  std::vector<SourcedWall> walls;  // root-restriction side of the cross-oracle
};

inline LevelArrangement make_level_arrangement(const FlopDatum& fd, int K,
                                               const Rat& lo, const Rat& hi) {
  LevelArrangement la;
  la.fd = fd;
  la.aff = affine_extension(fd.diagram);
  la.normalization.push_back(1);
  for (Int l : fd.length_vector) la.normalization.push_back(l);
  la.K = K;
  la.lo = lo;
  la.hi = hi;
  la.walls = affine_wall_set_sourced(fd, K);
  return la;
}

// Level position of a ray of the cone over an alcove (n = 1).
inline Rat ray_level_position(const std::vector<Int>& ray, Int length) {
  Int denom = ray[0] + length * ray[1];
  if (denom <= 0) fail(ErrorCode::Internal, "ray does not meet the level");
  return Rat(ray[1], denom);
}

// Covector of the level wall through position p/q (n = 1).
inline Covector level_wall_covector(const Rat& pos, Int length) {
  std::vector<Int> c{pos.numerator(), length * pos.numerator() - pos.denominator()};
  canonicalize(c);
  return Covector{c};
}

// Alcoves of the one-curve affine arrangement, generated from the base
// alcove by the labelled-diagram wall-crossing rule: the new rank is the
// affine mark at the moved white vertex, and the new ray follows from the
// exchange relation.  Root restrictions are not consulted; agreement with
// affine_wall_set is a separate cross-check.
inline ExchangeGraph enumerate_alcoves(const LevelArrangement& la) {
  if (la.fd.n != 1)
    fail(ErrorCode::Unsupported, "alcove enumeration implemented for n = 1 only");
  Int ell = la.fd.length_vector[0];
  Rat base_lo(0), base_hi(1, ell);
  if (la.lo > base_lo || la.hi < base_hi)
    fail(ErrorCode::WindowTooSmall, "window does not contain the base alcove");

  ExchangeGraph g;
  g.affine = true;
  g.dim = 2;
  g.fd = la.fd;
  g.length = ell;
  g.normalization = la.normalization;
  g.window_lo = la.lo;
  g.window_hi = la.hi;
  g.window_k = la.K;

  GraphVertex base;
  base.lo = base_lo;
  base.hi = base_hi;
  base.rays = Mat::identity(2);
  base.rank_vec = {1, ell};
  base.state = affine_state(la.fd);
  g.verts.push_back(base);

  std::map<Rat, int> by_lo{{base.lo, 0}};
  std::map<Rat, int> wall_ids;
  auto wall_id_at = [&](const Rat& pos, Int rank) {
    auto it = wall_ids.find(pos);
    if (it != wall_ids.end()) {
      if (g.walls[it->second].rank_label != rank)
        fail(ErrorCode::Internal, "inconsistent wall rank");
      return it->second;
    }
    int id = static_cast<int>(g.walls.size());
    g.walls.push_back({level_wall_covector(pos, ell), pos, rank});
    wall_ids[pos] = id;
    return id;
  };

  for (size_t head = 0; head < g.verts.size(); ++head) {
    for (int i = 0; i < 2; ++i) {
      if (g.verts[head].edge_with_label(i)) continue;
      GraphVertex cur = g.verts[head];  // copy: verts may reallocate
      int j = 1 - i;
      Rat shared_pos = ray_level_position(cur.rays.col(j), ell);
      // labelled-diagram step: delete the white vertex of the wall module,
      // the involution of the remainder moves the other white marker
      LabeledState nstate = wall_cross_label(cur.state, cur.state.white[j]);
      Int new_rank = nstate.mark_of(nstate.white[i]);
      Int num = cur.rank_vec[i] + new_rank;
      if (num % cur.rank_vec[j] != 0)
        fail(ErrorCode::NonIntegralRay, "exchange coefficient not integral");
      Int b = num / cur.rank_vec[j];
      if (b < 0) fail(ErrorCode::Internal, "negative exchange coefficient");
      std::vector<Int> nray(2);
      for (int t = 0; t < 2; ++t)
        nray[t] = -cur.rays.at(t, i) + b * cur.rays.at(t, j);
      if (vec_gcd(nray) != 1) fail(ErrorCode::NonIntegralRay, "new ray not primitive");
      Rat npos = ray_level_position(nray, ell);
      Rat nlo = std::min(shared_pos, npos), nhi = std::max(shared_pos, npos);
      if (!(nlo < la.hi && nhi > la.lo)) continue;  // outside the window

      int wall = wall_id_at(shared_pos, cur.rank_vec[j]);
      int to;
      auto it = by_lo.find(nlo);
      if (it != by_lo.end()) {
        to = it->second;
      } else {
        GraphVertex nb;
        nb.lo = nlo;
        nb.hi = nhi;
        nb.rays = Mat(2);
        for (int t = 0; t < 2; ++t) {
          nb.rays.at(t, i) = nray[t];
          nb.rays.at(t, j) = cur.rays.at(t, j);
        }
        nb.rank_vec = cur.rank_vec;
        nb.rank_vec[i] = new_rank;
        nb.state = nstate;
        nb.word = cur.word;
        nb.word.push_back(i);
        to = static_cast<int>(g.verts.size());
        g.verts.push_back(nb);
        by_lo[nlo] = to;
      }
      g.verts[head].edges.push_back({i, to, wall});
      g.verts[to].edges.push_back({i, static_cast<int>(head), wall});
    }
  }
  // boundary walls of window-edge alcoves that were never crossed
  for (auto& v : g.verts) {
    for (int j = 0; j < 2; ++j) {
      Rat p = ray_level_position(v.rays.col(j), ell);
      wall_id_at(p, v.rank_vec[j]);
    }
    std::sort(v.edges.begin(), v.edges.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return a.label < b.label; });
  }
  return g;
}

// Wall rank labels for one-curve data: position p/q in lowest terms gets q.
// Checked against the rank vectors carried by the adjacent alcoves.
inline std::map<Rat, Int> wall_rank_labels(const ExchangeGraph& g) {
  if (!g.affine || g.fd.n != 1)
    fail(ErrorCode::Unsupported, "wall rank labels defined for n = 1 only");
  std::map<Rat, Int> out;
  for (const auto& w : g.walls) {
    if (w.rank_label != w.pos->denominator())
      fail(ErrorCode::Internal, "rank label disagrees with position denominator");
    out[*w.pos] = w.rank_label;
  }
  return out;
}

// The lattice translation pairing alcoves with their y -> y + 1 shifts.
struct TranslationAction {
  Rat shift{1};
  std::map<int, int> alcove_map;  // alcove id -> shifted alcove id (in window)
};

inline TranslationAction translation_action(const ExchangeGraph& g, int i = 1) {
  if (!g.affine || g.fd.n != 1 || i != 1)
    fail(ErrorCode::Unsupported, "translation implemented for n = 1 only");
  TranslationAction t;
  std::map<Rat, int> by_lo;
  for (size_t v = 0; v < g.verts.size(); ++v) by_lo[g.verts[v].lo] = static_cast<int>(v);
  for (size_t v = 0; v < g.verts.size(); ++v) {
    auto it = by_lo.find(g.verts[v].lo + t.shift);
    if (it == by_lo.end()) continue;
    if (g.verts[it->second].hi != g.verts[v].hi + t.shift)
      fail(ErrorCode::Internal, "translation does not map alcoves to alcoves");
    t.alcove_map[static_cast<int>(v)] = it->second;
  }
  return t;
}

}  // namespace floparr

#endif
