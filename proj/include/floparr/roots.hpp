#ifndef FLOPARR_ROOTS_HPP
#define FLOPARR_ROOTS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "floparr/dynkin.hpp"

namespace floparr {

using RootVector = std::vector<Int>;  // coefficients over the simple roots

struct AffineRoot {
  RootVector finite_part;  // nonzero; a positive root or its negative
  Int level = 0;           // coefficient of delta
};

struct Covector {
  std::vector<Int> c;  // canonical: primitive, first nonzero entry positive

  bool operator==(const Covector& o) const { return c == o.c; }
  bool operator<(const Covector& o) const { return c < o.c; }
};

inline std::vector<RootVector> positive_roots(const DynkinDiagram& d) {
  auto roots = detail::positive_roots_closure(cartan_matrix(d));
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Restriction to the white coordinates of D_J.  Returns nullopt (Zero) when
// the root is supported on J.
inline std::optional<Covector> restrict_to_white(const RootVector& r,
                                                 const FlopDatum& fd) {
  std::vector<Int> c;
  for (int w : fd.white) c.push_back(r[w - 1]);
  if (is_zero(c)) return std::nullopt;
  canonicalize(c);
  return Covector{c};
}

// Affine restriction: coordinate 0 is the extending vertex, then the white
// vertices.  The covector of alpha + k*delta has star entry k and white
// entries alpha_w + k*mark_w.  Restrictions proportional to the level
// normal (alpha supported on J) are not walls: the arrangement accumulates
// on that line but never contains it.
inline std::optional<Covector> restrict_to_white_affine(const AffineRoot& r,
                                                        const FlopDatum& fd,
                                                        const AffineDiagram& aff) {
  bool finite_vanishes = true;
  for (int w : fd.white)
    if (r.finite_part[w - 1] != 0) finite_vanishes = false;
  if (finite_vanishes) return std::nullopt;
  std::vector<Int> c;
  c.push_back(r.level);
  for (int w : fd.white) c.push_back(r.finite_part[w - 1] + r.level * aff.marks[w]);
  canonicalize(c);
  return Covector{c};
}

// Wall with provenance, for serialization and cross-checks.
struct SourcedWall {
  Covector cov;
  RootVector source_root;
  Int level = 0;
};

inline std::vector<Covector> finite_wall_set(const FlopDatum& fd) {
  std::set<Covector> walls;
  for (const auto& r : positive_roots(fd.diagram))
    if (auto c = restrict_to_white(r, fd)) walls.insert(*c);
  return {walls.begin(), walls.end()};
}

inline std::vector<SourcedWall> finite_wall_set_sourced(const FlopDatum& fd) {
  std::set<Covector> seen;
  std::vector<SourcedWall> out;
  for (const auto& r : positive_roots(fd.diagram))
    if (auto c = restrict_to_white(r, fd))
      if (seen.insert(*c).second) out.push_back({*c, r, 0});
  std::sort(out.begin(), out.end(),
            [](const SourcedWall& a, const SourcedWall& b) { return a.cov < b.cov; });
  return out;
}

// Restrictions of the real affine roots alpha + k*delta with |k| <= K.
inline std::vector<SourcedWall> affine_wall_set_sourced(const FlopDatum& fd, int K) {
  if (K < 1) fail(ErrorCode::Internal, "affine window K must be >= 1");
  AffineDiagram aff = affine_extension(fd.diagram);
  std::set<Covector> seen;
  std::vector<SourcedWall> out;
  for (const auto& pos : positive_roots(fd.diagram)) {
    RootVector neg(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) neg[i] = -pos[i];
    for (Int k = -K; k <= K; ++k) {
      for (const RootVector* r : std::initializer_list<const RootVector*>{&pos, &neg}) {
        if (auto c = restrict_to_white_affine({*r, k}, fd, aff))
          if (seen.insert(*c).second) out.push_back({*c, *r, k});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SourcedWall& a, const SourcedWall& b) { return a.cov < b.cov; });
  return out;
}

inline std::vector<Covector> affine_wall_set(const FlopDatum& fd, int K) {
  std::vector<Covector> out;
  for (const auto& w : affine_wall_set_sourced(fd, K)) out.push_back(w.cov);
  return out;
}

// Level slice position of an affine wall for one-curve data: the wall meets
// {theta_0 + l*theta_1 = 1} at theta_1 = -c_0 / (c_1 - l*c_0), provided the
// denominator (the finite part at the white vertex) is nonzero.
inline std::optional<Rat> level_position(const Covector& cov, Int length) {
  if (cov.c.size() != 2) fail(ErrorCode::Unsupported, "level_position needs n = 1");
  Int denom = cov.c[1] - length * cov.c[0];
  if (denom == 0) return std::nullopt;
  return Rat(-cov.c[0], denom);
}

}  // namespace floparr

#endif
