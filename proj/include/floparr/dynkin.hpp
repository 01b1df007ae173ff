#ifndef FLOPARR_DYNKIN_HPP
#define FLOPARR_DYNKIN_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "floparr/errors.hpp"
#include "floparr/matrix.hpp"
#include "floparr/rational.hpp"

namespace floparr {

enum class Family { A, D, E };

inline char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

inline Family family_from_char(char c) {
  if (c == 'A' || c == 'a') return Family::A;
  if (c == 'D' || c == 'd') return Family::D;
  if (c == 'E' || c == 'e') return Family::E;
  fail(ErrorCode::IllegalDiagram, std::string("unknown family '") + c + "'");
}

// Vertex numbering convention (see DIAGRAMS.md):
//   A_n : chain 1 - 2 - ... - n
//   D_n : chain 1 - 2 - ... - (n-2), leaves n-1 and n attached to n-2
//   E_n : chain 1 - 3 - 4 - ... - n, branch vertex 2 attached to 4 (Bourbaki)
struct DynkinDiagram {
  Family family;
  int rank = 0;
  std::vector<std::pair<int, int>> edges;  // vertices 1..rank

  bool operator==(const DynkinDiagram& o) const {
    return family == o.family && rank == o.rank && edges == o.edges;
  }
};

inline DynkinDiagram build_diagram(Family family, int rank) {
  bool ok = (family == Family::A && rank >= 1) ||
            (family == Family::D && rank >= 4) ||
            (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok)
    fail(ErrorCode::IllegalDiagram,
         std::string(1, family_char(family)) + std::to_string(rank));
  DynkinDiagram d{family, rank, {}};
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) d.edges.push_back({i, i + 1});
      break;
    case Family::D:
      for (int i = 1; i < rank - 2; ++i) d.edges.push_back({i, i + 1});
      d.edges.push_back({rank - 2, rank - 1});
      d.edges.push_back({rank - 2, rank});
      break;
    case Family::E:
      d.edges.push_back({1, 3});
      for (int i = 3; i < rank; ++i) d.edges.push_back({i, i + 1});
      d.edges.push_back({2, 4});
      break;
  }
  return d;
}

// Cartan matrix over an arbitrary labelled simply-laced graph.
inline Mat cartan_matrix(const std::vector<int>& vertices,
                         const std::vector<std::pair<int, int>>& edges) {
  int k = static_cast<int>(vertices.size());
  std::map<int, int> idx;
  for (int i = 0; i < k; ++i) idx[vertices[i]] = i;
  Mat c(k);
  for (int i = 0; i < k; ++i) c.at(i, i) = 2;
  for (auto [u, v] : edges) {
    auto iu = idx.find(u), iv = idx.find(v);
    if (iu == idx.end() || iv == idx.end()) continue;
    c.at(iu->second, iv->second) = -1;
    c.at(iv->second, iu->second) = -1;
  }
  return c;
}

inline Mat cartan_matrix(const DynkinDiagram& d) {
  std::vector<int> verts(d.rank);
  for (int i = 0; i < d.rank; ++i) verts[i] = i + 1;
  return cartan_matrix(verts, d.edges);
}

namespace detail {

// Positive roots of a finite-type simply-laced Cartan matrix, as coefficient
// vectors over the simple roots, by closure under simple-root addition.
inline std::vector<std::vector<Int>> positive_roots_closure(const Mat& c) {
  int k = c.n;
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> roots;
  for (int i = 0; i < k; ++i) {
    std::vector<Int> e(k, 0);
    e[i] = 1;
    seen.insert(e);
    roots.push_back(e);
  }
  const size_t kCap = 512;  // finite type tops out at 120
  for (size_t head = 0; head < roots.size(); ++head) {
    std::vector<Int> beta = roots[head];
    for (int i = 0; i < k; ++i) {
      Int pairing = 0;
      for (int j = 0; j < k; ++j) pairing += c.at(i, j) * beta[j];
      // q = length of the downward alpha_i string through beta
      Int q = 0;
      std::vector<Int> down = beta;
      while (true) {
        down[i] -= 1;
        if (down[i] < 0 || !seen.count(down)) break;
        ++q;
      }
      if (q - pairing > 0) {
        std::vector<Int> up = beta;
        up[i] += 1;
        if (seen.insert(up).second) roots.push_back(up);
      }
    }
    if (roots.size() > kCap)
      fail(ErrorCode::Internal, "root closure did not terminate (not finite type?)");
  }
  return roots;
}

inline std::vector<Int> highest_root(const Mat& c) {
  auto roots = positive_roots_closure(c);
  std::vector<Int> best;
  Int best_h = -1;
  for (const auto& r : roots) {
    Int h = 0;
    for (Int x : r) h += x;
    if (h > best_h) {
      best_h = h;
      best = r;
    }
  }
  return best;
}

}  // namespace detail

// Extended diagram.  Vertex 0 is the extending vertex; marks are indexed
// 0..rank with marks[0] = 1.
struct AffineDiagram {
  DynkinDiagram base;
  int star_vertex = 0;
  std::vector<std::pair<int, int>> edges;  // over {0, 1..rank}
  std::vector<Int> marks;                  // delta coefficients
};

inline AffineDiagram affine_extension(const DynkinDiagram& d) {
  Mat c = cartan_matrix(d);
  std::vector<Int> theta = detail::highest_root(c);
  AffineDiagram a;
  a.base = d;
  a.edges = d.edges;
  // star attaches where the highest root pairs nonzero with a simple root
  std::vector<Int> pair = mat_apply(c, theta);
  for (int i = 0; i < d.rank; ++i)
    if (pair[i] != 0) a.edges.push_back({0, i + 1});
  a.marks.assign(d.rank + 1, 0);
  a.marks[0] = 1;
  for (int i = 0; i < d.rank; ++i) a.marks[i + 1] = theta[i];
  // sanity: marks span the kernel of the affine Cartan matrix, whose star row
  // pairs as -<theta, alpha_i> (this covers the doubled bond of affine A1)
  for (int i = 0; i <= d.rank; ++i) {
    Int row = 0;
    if (i == 0) {
      row = 2 * a.marks[0];
      for (int j = 0; j < d.rank; ++j) row -= pair[j] * a.marks[j + 1];
    } else {
      row = -pair[i - 1] * a.marks[0];
      for (int j = 0; j < d.rank; ++j) row += c.at(i - 1, j) * a.marks[j + 1];
    }
    if (row != 0)
      fail(ErrorCode::Internal, "affine marks not in the Cartan kernel");
  }
  return a;
}

struct Involution {
  std::map<int, int> perm;

  int operator()(int v) const {
    auto it = perm.find(v);
    if (it == perm.end()) fail(ErrorCode::Internal, "involution: vertex not in domain");
    return it->second;
  }
  bool is_identity() const {
    for (auto [k, v] : perm)
      if (k != v) return false;
    return true;
  }
};

// The diagram automorphism induced by -w0, computed per connected component
// by walking rho to -rho with simple reflections.  Works on any disjoint
// union of finite-type simply-laced diagrams with arbitrary vertex labels.
inline Involution dynkin_involution(const std::vector<int>& vertices,
                                    const std::vector<std::pair<int, int>>& edges) {
  Involution inv;
  std::map<int, std::vector<int>> adj;
  for (int v : vertices) adj[v] = {};
  for (auto [u, v] : edges) {
    if (!adj.count(u) || !adj.count(v)) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> todo(vertices.begin(), vertices.end());
  while (!todo.empty()) {
    // collect one component
    std::vector<int> comp{*todo.begin()};
    todo.erase(todo.begin());
    for (size_t h = 0; h < comp.size(); ++h)
      for (int w : adj[comp[h]])
        if (todo.erase(w)) comp.push_back(w);
    std::sort(comp.begin(), comp.end());
    int k = static_cast<int>(comp.size());
    Mat c = cartan_matrix(comp, edges);
    // u holds a regular dominant vector in weight coordinates; drive it to
    // the antidominant chamber, accumulating w0 in simple-root coordinates.
    std::vector<Int> u(k, 1);
    Mat w = Mat::identity(k);
    int guard = 0;
    while (true) {
      int i = -1;
      for (int j = 0; j < k; ++j)
        if (u[j] > 0) {
          i = j;
          break;
        }
      if (i < 0) break;
      Int ui = u[i];
      for (int j = 0; j < k; ++j) u[j] -= ui * c.at(j, i);
      // s_i in root coordinates: row i of w gets replaced by -(C w)_i + row
      for (int j = 0; j < k; ++j) {
        Int acc = 0;
        for (int m = 0; m < k; ++m) acc += c.at(i, m) * w.at(m, j);
        w.at(i, j) -= acc;
      }
      if (++guard > 256)
        fail(ErrorCode::Internal, "longest element walk did not terminate");
    }
    // -w0 must permute the simple roots
    for (int j = 0; j < k; ++j) {
      int image = -1;
      for (int i = 0; i < k; ++i) {
        Int v = -w.at(i, j);
        if (v == 1) {
          if (image >= 0) fail(ErrorCode::Internal, "-w0 not a permutation");
          image = i;
        } else if (v != 0) {
          fail(ErrorCode::Internal, "-w0 not a permutation");
        }
      }
      inv.perm[comp[j]] = comp[image];
    }
  }
  // involutive and edge preserving, by construction; check anyway
  std::set<std::pair<int, int>> eset;
  for (auto [u, v] : edges)
    if (adj.count(u) && adj.count(v)) eset.insert({std::min(u, v), std::max(u, v)});
  for (auto [k2, v2] : inv.perm)
    if (inv.perm.at(v2) != k2) fail(ErrorCode::Internal, "not an involution");
  for (auto [u, v] : eset) {
    int iu = inv.perm.at(u), iv = inv.perm.at(v);
    if (!eset.count({std::min(iu, iv), std::max(iu, iv)}))
      fail(ErrorCode::Internal, "involution does not preserve edges");
  }
  return inv;
}

inline Involution dynkin_involution(const DynkinDiagram& d) {
  std::vector<int> verts(d.rank);
  for (int i = 0; i < d.rank; ++i) verts[i] = i + 1;
  return dynkin_involution(verts, d.edges);
}

// A Dynkin diagram with a choice of white (curve) vertices; J is the rest.
struct FlopDatum {
  DynkinDiagram diagram;
  std::vector<int> J;
  std::vector<int> white;          // sorted; coordinate order of D_J
  int n = 0;                       // number of curves
  std::vector<Int> length_vector;  // affine marks at the white vertices
};

inline FlopDatum make_flop_datum(const DynkinDiagram& d, std::vector<int> white) {
  std::sort(white.begin(), white.end());
  if (white.empty() || white.front() < 1 || white.back() > d.rank)
    fail(ErrorCode::IllegalDiagram, "white vertices out of range or empty");
  FlopDatum fd;
  fd.diagram = d;
  fd.white = white;
  fd.n = static_cast<int>(white.size());
  std::set<int> ws(white.begin(), white.end());
  if (static_cast<int>(ws.size()) != fd.n)
    fail(ErrorCode::IllegalDiagram, "repeated white vertex");
  for (int v = 1; v <= d.rank; ++v)
    if (!ws.count(v)) fd.J.push_back(v);
  AffineDiagram a = affine_extension(d);
  for (int w : fd.white) fd.length_vector.push_back(a.marks[w]);
  return fd;
}

// The six flop data of the Katz–Morrison classification, paired with length.
inline std::vector<std::pair<FlopDatum, int>> katz_morrison_catalog() {
  std::vector<std::pair<FlopDatum, int>> out;
  auto add = [&](Family f, int rank, int white, int len) {
    FlopDatum fd = make_flop_datum(build_diagram(f, rank), {white});
    if (fd.length_vector[0] != len)
      fail(ErrorCode::Internal, "catalog length mismatch");
    out.push_back({fd, len});
  };
  add(Family::A, 1, 1, 1);
  add(Family::D, 4, 2, 2);  // central vertex
  add(Family::E, 6, 4, 3);  // trivalent vertex
  add(Family::E, 7, 4, 4);  // trivalent vertex
  add(Family::E, 8, 5, 5);  // neighbour of the trivalent vertex, long arm
  add(Family::E, 8, 4, 6);  // trivalent vertex
  return out;
}

inline FlopDatum catalog_datum(int length) {
  if (length < 1 || length > 6)
    fail(ErrorCode::UnsupportedLength, "length must be 1..6, got " + std::to_string(length));
  return katz_morrison_catalog()[length - 1].first;
}

// A diagram (usually the affine extension) with an ordered tuple of white
// vertices; position in `white` is the summand index it marks.
struct LabeledState {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<Int> marks;  // aligned with `vertices`
  std::vector<int> white;

  Int mark_of(int v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return marks[i];
    fail(ErrorCode::Internal, "mark_of: no such vertex");
  }
  bool operator==(const LabeledState& o) const {
    return vertices == o.vertices && edges == o.edges && white == o.white;
  }
};

inline LabeledState affine_state(const FlopDatum& fd) {
  AffineDiagram a = affine_extension(fd.diagram);
  LabeledState st;
  st.vertices.push_back(0);
  for (int v = 1; v <= fd.diagram.rank; ++v) st.vertices.push_back(v);
  st.edges = a.edges;
  for (int v : st.vertices) st.marks.push_back(a.marks[v]);
  st.white.push_back(0);  // summand 0 marks the extending vertex
  for (int w : fd.white) st.white.push_back(w);
  return st;
}

// Wall crossing on labelled diagrams: delete vertex i, apply the Dynkin
// involution of what remains to the other white markers, reinsert i.
inline LabeledState wall_cross_label(const LabeledState& state, int i) {
  if (std::find(state.white.begin(), state.white.end(), i) == state.white.end())
    fail(ErrorCode::NotWhite, "vertex " + std::to_string(i) + " is not white");
  std::vector<int> rest;
  for (int v : state.vertices)
    if (v != i) rest.push_back(v);
  std::vector<std::pair<int, int>> rest_edges;
  for (auto [u, v] : state.edges)
    if (u != i && v != i) rest_edges.push_back({u, v});
  Involution iota = dynkin_involution(rest, rest_edges);
  LabeledState out = state;
  for (int& w : out.white)
    if (w != i) w = iota(w);
  return out;
}

}  // namespace floparr

#endif
