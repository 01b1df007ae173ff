#ifndef FLOPARR_TRACKING_HPP
#define FLOPARR_TRACKING_HPP

#include <deque>
#include <vector>

#include "floparr/arrangement.hpp"

namespace floparr {

struct TrackingMatrix {
  Mat m;
  int source = -1;  // chamber ids in the exchange graph
  int target = -1;
};

// Crossing matrix at chamber C over its s_i wall: fixes e_j (j != i) and
// sends e_i to -e_i + sum b_ij e_j, with the b_ij solved from the neighbour's
// new primitive ray in C's ray basis.
inline TrackingMatrix crossing_matrix(const ExchangeGraph& g, int chamber, int i) {
  const GraphVertex& c = g.verts[chamber];
  const GraphEdge* e = c.edge_with_label(i);
  if (!e) fail(ErrorCode::NoSuchWall, "no s_" + std::to_string(i) + " wall here");
  std::vector<Int> fresh = g.verts[e->to].rays.col(i);
  auto sol = solve(c.rays, fresh);
  if (!sol) fail(ErrorCode::Internal, "degenerate ray matrix");
  std::vector<Int> coef(g.dim);
  for (int j = 0; j < g.dim; ++j) {
    if ((*sol)[j].denominator() != 1)
      fail(ErrorCode::NonIntegralRay, "new ray is not an integer combination");
    coef[j] = (*sol)[j].numerator();
  }
  if (coef[i] != -1)
    fail(ErrorCode::NonIntegralRay, "exchange relation violated at e_i");
  for (int j = 0; j < g.dim; ++j)
    if (j != i && coef[j] < 0)
      fail(ErrorCode::NonIntegralRay, "negative exchange coefficient b_ij");
  Mat m = Mat::identity(g.dim);
  m.set_col(i, coef);
  return {m, chamber, e->to};
}

// Walks a word of labels from `start`, multiplying crossing matrices in
// order.  Formal inverse crossings use the same matrix, so a word here is
// just a walk in the graph.
inline TrackingMatrix path_matrix(const ExchangeGraph& g, int start,
                                  const std::vector<int>& word) {
  Mat m = Mat::identity(g.dim);
  int cur = start;
  for (int label : word) {
    const GraphEdge* e = g.verts[cur].edge_with_label(label);
    if (!e)
      fail(ErrorCode::UnwalkablePath,
           "no s_" + std::to_string(label) + " edge at chamber " + std::to_string(cur));
    m = m * crossing_matrix(g, cur, label).m;
    cur = e->to;
  }
  return {m, start, cur};
}

inline int walk_end(const ExchangeGraph& g, int start, const std::vector<int>& word) {
  int cur = start;
  for (int label : word) {
    const GraphEdge* e = g.verts[cur].edge_with_label(label);
    if (!e) fail(ErrorCode::UnwalkablePath, "word leaves the graph");
    cur = e->to;
  }
  return cur;
}

// Shortest word from a to b by BFS (parents recorded over sorted edges, so
// deterministic).
inline std::vector<int> shortest_word(const ExchangeGraph& g, int a, int b) {
  std::vector<int> par(g.verts.size(), -1), lab(g.verts.size(), -1);
  std::deque<int> q{a};
  par[a] = a;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == b) break;
    for (const auto& e : g.verts[v].edges)
      if (par[e.to] < 0) {
        par[e.to] = v;
        lab[e.to] = e.label;
        q.push_back(e.to);
      }
  }
  if (par[b] < 0) fail(ErrorCode::UnwalkablePath, "chambers not connected");
  std::vector<int> w;
  for (int v = b; v != a; v = par[v]) w.push_back(lab[v]);
  std::reverse(w.begin(), w.end());
  return w;
}

// Pullback of the level normalization r = (1, l_1, ..., l_n) to a chamber:
// transpose action of the tracking matrix, i.e. r paired with each ray.
inline std::vector<Int> rank_vector(const ExchangeGraph& g, int chamber) {
  if (!g.affine) fail(ErrorCode::Unsupported, "rank vectors live on the affine level");
  std::vector<Int> r(g.dim);
  for (int j = 0; j < g.dim; ++j)
    r[j] = doti(g.normalization, g.verts[chamber].rays.col(j));
  for (Int v : r)
    if (v <= 0) fail(ErrorCode::Internal, "nonpositive rank");
  return r;
}

// Matrix of -(x)L_i on the affine K-theory lattice: the dual-basis matrix
// has rows (1 - l_i ... 1 at i ...), (-l_i^2 ... l_i + 1 ...) and
// (-l_i l_j ... l_j ... 1 ...); its transpose acts on the lattice, giving
// y_i -> y_i + 1 on level coordinates with x unchanged.
inline Mat pic_action_matrix(const FlopDatum& fd, int i) {
  if (i < 1 || i > fd.n) fail(ErrorCode::PreconditionUnmet, "white index out of range");
  int d = fd.n + 1;
  Int li = fd.length_vector[i - 1];
  Mat dual(d);
  dual.at(0, 0) = 1 - li;
  dual.at(0, i) = 1;
  dual.at(i, 0) = -li * li;
  dual.at(i, i) = li + 1;
  for (int j = 1; j < d; ++j) {
    if (j == i) continue;
    Int lj = fd.length_vector[j - 1];
    dual.at(j, 0) = -li * lj;
    dual.at(j, i) = lj;
    dual.at(j, j) = 1;
  }
  return dual.transpose();
}

struct PicDecomposition {
  std::vector<int> word;      // shortest positive path, base -> translate
  std::vector<int> perm;      // coordinate identification epsilon
  Mat path;                   // its tracking matrix
};

// Shortest mutation path realizing the L_i translation, with the coordinate
// identification solved by matching against pic_action_matrix.
inline PicDecomposition decompose_pic_as_mutations(const ExchangeGraph& g, int i = 1) {
  if (!g.affine || g.fd.n != 1 || i != 1)
    fail(ErrorCode::Unsupported, "Pic decomposition implemented for n = 1 only");
  int target = -1;
  for (size_t v = 0; v < g.verts.size(); ++v)
    if (g.verts[v].lo == g.verts[0].lo + 1) target = static_cast<int>(v);
  if (target < 0) fail(ErrorCode::WindowTooSmall, "translated base alcove not in window");
  PicDecomposition out;
  out.word = shortest_word(g, 0, target);
  out.path = path_matrix(g, 0, out.word).m;
  Mat pic = pic_action_matrix(g.fd, i);
  // try the coordinate identifications (permutations of the summands)
  std::vector<int> perm(g.dim);
  for (int j = 0; j < g.dim; ++j) perm[j] = j;
  do {
    Mat p(g.dim);
    for (int j = 0; j < g.dim; ++j) p.at(perm[j], j) = 1;
    if (out.path * p == pic) {
      out.perm = perm;
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  fail(ErrorCode::VerificationFailed, "path matrix does not realize the Pic matrix");
}

struct ComplexPoint {
  std::vector<Rat> x, y;
};

// Semi-closed upper half plane membership per coordinate.
inline bool in_H(const Rat& x, const Rat& y) {
  return y > Rat(0) || (y == Rat(0) && x < Rat(0));
}

struct MembershipCertificate {
  int chamber = -1;
  std::vector<Rat> x, y;  // coordinates of phi_L^{-1}(z)
  bool ok = false;
};

inline ComplexPoint chamber_coordinates(const ExchangeGraph& g, int chamber,
                                        const ComplexPoint& z) {
  Mat inv = inverse_unimodular(g.verts[chamber].rays);
  return {mat_apply<Rat>(inv, z.x), mat_apply<Rat>(inv, z.y)};
}

// Direct membership test: z in phi_L(H_+) iff every coordinate of
// phi_L^{-1}(z) lies in the semi-closed upper half plane.
inline MembershipCertificate membership(const ExchangeGraph& g, int chamber,
                                        const ComplexPoint& z) {
  ComplexPoint w = chamber_coordinates(g, chamber, z);
  MembershipCertificate cert{chamber, w.x, w.y, true};
  for (int j = 0; j < g.dim; ++j)
    if (!in_H(w.x[j], w.y[j])) cert.ok = false;
  return cert;
}

// Constructive classification: track y into the closure of C+, then track x
// across the walls of the zero set only, until those coordinates go strictly
// negative.
inline MembershipCertificate classify_complex_point(const ExchangeGraph& g,
                                                    const ComplexPoint& z) {
  for (const auto& w : g.walls)
    if (dot<Rat>(z.x, w.cov.c) == Rat(0) && dot<Rat>(z.y, w.cov.c) == Rat(0))
      fail(ErrorCode::OnComplexifiedWall, "z lies on a complexified wall");
  if (g.affine) {
    Rat ry(0), rx(0);
    for (int j = 0; j < g.dim; ++j) {
      ry += z.y[j] * Rat(g.normalization[j]);
      rx += z.x[j] * Rat(g.normalization[j]);
    }
    if (ry != Rat(1) || rx != Rat(0))
      fail(ErrorCode::PreconditionUnmet, "z is not on the complexified level");
  }
  int cur = 0;
  size_t cap = 4 * g.verts.size() + 16;
  auto step = [&](int label) {
    const GraphEdge* e = g.verts[cur].edge_with_label(label);
    if (!e) {
      if (g.affine) fail(ErrorCode::StepLimitExceeded, "tracking left the window");
      fail(ErrorCode::Internal, "missing edge in finite exchange graph");
    }
    cur = e->to;
    if (cap-- == 0) fail(ErrorCode::StepLimitExceeded, "tracking step limit hit");
  };
  // phase 1: y into the closure of the base cone
  while (true) {
    ComplexPoint w = chamber_coordinates(g, cur, z);
    int neg = -1;
    for (int j = 0; j < g.dim && neg < 0; ++j)
      if (w.y[j] < Rat(0)) neg = j;
    if (neg < 0) break;
    step(neg);
  }
  // phase 2: x across the zero-set walls only
  while (true) {
    ComplexPoint w = chamber_coordinates(g, cur, z);
    int pos = -1;
    for (int j = 0; j < g.dim && pos < 0; ++j)
      if (w.y[j] == Rat(0) && w.x[j] >= Rat(0)) {
        if (w.x[j] == Rat(0))
          fail(ErrorCode::OnComplexifiedWall, "z lies on a complexified wall");
        pos = j;
      }
    if (pos < 0) {
      MembershipCertificate cert{cur, w.x, w.y, true};
      for (int j = 0; j < g.dim; ++j)
        if (!in_H(w.x[j], w.y[j])) cert.ok = false;
      if (!cert.ok) fail(ErrorCode::Internal, "classification certificate failed");
      return cert;
    }
    step(pos);
  }
}

struct InteriorPath {
  Rat s;                    // parameter length; 0 when already interior
  ComplexPoint start, end;  // single linear segment
};

// The explicit segment of the appendix: raise the vanishing y-coordinates at
// unit speed and compensate on the last positive one so the normalization
// r . y = 1 is preserved.
inline InteriorPath path_into_interior(const ExchangeGraph& g, const ComplexPoint& z) {
  if (!g.affine) fail(ErrorCode::Unsupported, "interior paths live on the affine level");
  const std::vector<Int>& lam = g.normalization;
  std::vector<int> zeros;
  int pivot = -1;
  for (int j = 0; j < g.dim; ++j) {
    if (z.y[j] < Rat(0)) fail(ErrorCode::NotOnBoundary, "y has a negative coordinate");
    if (z.y[j] == Rat(0)) {
      if (z.x[j] >= Rat(0))
        fail(ErrorCode::NotOnBoundary, "z is not in the closed base region");
      zeros.push_back(j);
    } else {
      pivot = j;  // last strictly positive coordinate
    }
  }
  if (zeros.empty()) return {Rat(0), z, z};
  if (pivot < 0) fail(ErrorCode::NotOnBoundary, "y vanishes entirely");
  Rat gamma(0);
  for (int j : zeros) gamma += Rat(lam[j]);
  Rat bound = Rat(lam[pivot]) * z.y[pivot] / gamma;
  Rat s = bound / Rat(2);
  ComplexPoint end = z;
  for (int j : zeros) end.y[j] = s;
  end.y[pivot] -= gamma * s / Rat(lam[pivot]);
  for (int j = 0; j < g.dim; ++j)
    if (end.y[j] <= Rat(0)) fail(ErrorCode::Internal, "endpoint not interior");
  return {s, z, end};
}

}  // namespace floparr

#endif
