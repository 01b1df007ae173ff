#ifndef FLOPARR_VERIFY_HPP
#define FLOPARR_VERIFY_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "floparr/groupoid.hpp"
#include "floparr/skms.hpp"

namespace floparr {
namespace verify {

struct Report {
  std::string suite;
  bool pass = true;
  long checks = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      counterexamples.push_back(what);
    }
  }
};

// Every walk of length <= maxlen from `start`; fn(word, end).
inline void for_all_walks(const ExchangeGraph& g, int start, int maxlen,
                          const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> word;
  auto rec = [&](auto&& self, int cur) -> void {
    fn(word, cur);
    if (static_cast<int>(word.size()) == maxlen) return;
    for (const auto& e : g.verts[cur].edges) {
      word.push_back(e.label);
      self(self, e.to);
      word.pop_back();
    }
  };
  rec(rec, start);
}

inline ExchangeGraph a2_graph() {
  return enumerate_chambers(
      make_finite_arrangement(make_flop_datum(build_diagram(Family::A, 2), {1, 2})));
}

inline ExchangeGraph windowed_graph(int length, int units = 3) {
  FlopDatum fd = catalog_datum(length);
  LevelArrangement la = make_level_arrangement(fd, 2 * length * units, Rat(-units),
                                               Rat(units + 1));
  return enumerate_alcoves(la);
}

// Lemma "invol" at matrix level: every crossing matrix squares to the
// identity and both sides of a wall produce the same matrix.  Also checks
// the computed Dynkin involutions against the classical table.
inline Report suite_involution() {
  Report r{"involution"};
  std::vector<ExchangeGraph> graphs;
  for (auto& [fd, len] : katz_morrison_catalog())
    graphs.push_back(enumerate_chambers(make_finite_arrangement(fd)));
  graphs.push_back(a2_graph());
  for (int len = 1; len <= 6; ++len) graphs.push_back(windowed_graph(len, 1));
  for (const auto& g : graphs) {
    for (size_t v = 0; v < g.verts.size(); ++v)
      for (const auto& e : g.verts[v].edges) {
        Mat m = crossing_matrix(g, static_cast<int>(v), e.label).m;
        r.expect(m * m == Mat::identity(g.dim), "crossing matrix not an involution");
        Mat back = crossing_matrix(g, e.to, e.label).m;
        r.expect(m == back, "crossing matrices differ across the wall");
      }
  }
  // -w0 table: A_n reversal, D_odd leaf swap, E6 arm swap, identity otherwise
  for (int n = 1; n <= 8; ++n) {
    Involution iv = dynkin_involution(build_diagram(Family::A, n));
    for (int v = 1; v <= n; ++v)
      r.expect(iv(v) == n + 1 - v, "A_n involution is not the reversal");
  }
  for (int n = 4; n <= 8; ++n) {
    Involution iv = dynkin_involution(build_diagram(Family::D, n));
    for (int v = 1; v <= n - 2; ++v) r.expect(iv(v) == v, "D_n involution moves the chain");
    if (n % 2 == 0)
      r.expect(iv(n - 1) == n - 1 && iv(n) == n, "D_even involution not trivial");
    else
      r.expect(iv(n - 1) == n && iv(n) == n - 1, "D_odd involution not the leaf swap");
  }
  {
    Involution e6 = dynkin_involution(build_diagram(Family::E, 6));
    r.expect(e6(1) == 6 && e6(3) == 5 && e6(4) == 4 && e6(2) == 2,
             "E6 involution is not the arm swap");
    r.expect(dynkin_involution(build_diagram(Family::E, 7)).is_identity(),
             "E7 involution not trivial");
    r.expect(dynkin_involution(build_diagram(Family::E, 8)).is_identity(),
             "E8 involution not trivial");
  }
  return r;
}

// Prop. "theta trivial" at matrix level: positive loops act trivially.
inline Report suite_loops(int maxlen = 8) {
  Report r{"loops"};
  std::vector<ExchangeGraph> graphs{a2_graph()};
  for (int len = 1; len <= 3; ++len) graphs.push_back(windowed_graph(len));
  for (const auto& g : graphs) {
    for_all_walks(g, 0, maxlen, [&](const std::vector<int>& word, int end) {
      if (end != 0 || word.empty()) return;
      r.expect(path_matrix(g, 0, word).m == Mat::identity(g.dim),
               "loop with nontrivial matrix");
    });
  }
  return r;
}

inline Rat rand_rat(std::mt19937_64& rng, Int lo, Int hi, Int max_den) {
  std::uniform_int_distribution<Int> den(1, max_den);
  Int d = den(rng);
  std::uniform_int_distribution<Int> num(lo * d, hi * d);
  return Rat(num(rng), d);
}

// Disjoint cover of the complexified complement: classification certificates
// hold and no other chamber claims the point.
inline Report suite_coverage(unsigned long long seed, int points_per_graph = 200) {
  Report r{"coverage"};
  std::mt19937_64 rng(seed);
  std::vector<ExchangeGraph> graphs{a2_graph()};
  for (auto& [fd, len] : katz_morrison_catalog())
    graphs.push_back(enumerate_chambers(make_finite_arrangement(fd)));
  for (int len = 1; len <= 6; ++len) graphs.push_back(windowed_graph(len, 2));
  for (const auto& g : graphs) {
    int produced = 0;
    while (produced < points_per_graph) {
      ComplexPoint z;
      if (!g.affine) {
        z.x.resize(g.dim);
        z.y.resize(g.dim);
        for (int j = 0; j < g.dim; ++j) {
          z.x[j] = rand_rat(rng, -6, 6, 5);
          z.y[j] = rand_rat(rng, -6, 6, 5);
        }
      } else {
        Int ell = g.length;
        Rat y1 = rand_rat(rng, -1, 2, 7);
        Rat x1 = rand_rat(rng, -4, 4, 5);
        z.y = {Rat(1) - Rat(ell) * y1, y1};
        z.x = {-Rat(ell) * x1, x1};
      }
      bool on_wall = false;
      for (const auto& w : g.walls)
        if (dot<Rat>(z.x, w.cov.c) == Rat(0) && dot<Rat>(z.y, w.cov.c) == Rat(0))
          on_wall = true;
      if (on_wall) continue;
      ++produced;
      MembershipCertificate cert;
      try {
        cert = classify_complex_point(g, z);
      } catch (const Error& err) {
        r.expect(false, std::string("classification error: ") + err.what());
        continue;
      }
      r.expect(cert.ok, "classification certificate failed");
      r.expect(membership(g, cert.chamber, z).ok, "direct membership disagrees");
      for (size_t v = 0; v < g.verts.size(); ++v)
        if (static_cast<int>(v) != cert.chamber && membership(g, static_cast<int>(v), z).ok)
          r.expect(false, "point claimed by two chambers");
    }
  }
  return r;
}

// The two wall descriptions agree: root restrictions vs walls discovered by
// chamber/alcove generation (which never consults the roots).
inline Report suite_cross_oracle() {
  Report r{"cross-oracle"};
  for (auto& [fd, len] : katz_morrison_catalog()) {
    // finite side
    FiniteArrangement fa = make_finite_arrangement(fd);
    ExchangeGraph g = enumerate_chambers(fa);
    std::set<Covector> crossed;
    for (const auto& v : g.verts)
      for (const auto& e : v.edges) crossed.insert(g.walls[e.wall].cov);
    std::set<Covector> restricted(fa.walls.begin(), fa.walls.end());
    r.expect(crossed == restricted, "finite wall sets differ (l=" + std::to_string(len) + ")");

    // affine side, window (-units, units+1) open
    int units = 2;
    ExchangeGraph ga = windowed_graph(len, units);
    std::map<Rat, Covector> tracked;
    for (const auto& w : ga.walls)
      if (*w.pos > Rat(-units) && *w.pos < Rat(units + 1)) tracked[*w.pos] = w.cov;
    std::map<Rat, Covector> roots;
    for (const auto& w : affine_wall_set_sourced(fd, 2 * len * units)) {
      auto pos = level_position(w.cov, len);
      if (pos && *pos > Rat(-units) && *pos < Rat(units + 1)) {
        auto it = roots.find(*pos);
        if (it != roots.end())
          r.expect(it->second == w.cov, "two covectors at one level point");
        roots[*pos] = w.cov;
      }
    }
    r.expect(tracked == roots, "affine wall sets differ (l=" + std::to_string(len) + ")");
  }
  return r;
}

// Thm "class action main" at matrix level, for each catalog length.
inline Report suite_pic_decompose() {
  Report r{"pic-decompose"};
  const int expected_len[7] = {0, 1, 2, 4, 6, 10, 12};
  for (int len = 1; len <= 6; ++len) {
    ExchangeGraph g = windowed_graph(len, 2);
    PicDecomposition d = decompose_pic_as_mutations(g, 1);
    r.expect(static_cast<int>(d.word.size()) == expected_len[len],
             "l=" + std::to_string(len) + ": path length " +
                 std::to_string(d.word.size()));
    std::vector<int> id_perm{0, 1};
    if (len == 1)
      r.expect(d.perm == std::vector<int>({1, 0}),
               "l=1 identification should swap the two rank-one summands");
    else
      r.expect(d.perm == id_perm, "identification not the identity");
    r.notes.push_back("l=" + std::to_string(len) + " path length " +
                      std::to_string(d.word.size()));
  }
  return r;
}

// Appendix A constructions: classification certificates on random points
// plus the explicit path into the interior of the base region.
inline Report suite_appendix(unsigned long long seed, int points = 400) {
  Report r{"appendix"};
  std::mt19937_64 rng(seed);
  ExchangeGraph g = windowed_graph(3, 2);
  int produced = 0;
  while (produced < points) {
    Rat y1 = rand_rat(rng, -1, 2, 9);
    Rat x1 = rand_rat(rng, -5, 5, 4);
    ComplexPoint z{{-Rat(3) * x1, x1}, {Rat(1) - Rat(3) * y1, y1}};
    bool on_wall = false;
    for (const auto& w : g.walls)
      if (dot<Rat>(z.x, w.cov.c) == Rat(0) && dot<Rat>(z.y, w.cov.c) == Rat(0))
        on_wall = true;
    if (on_wall) continue;
    ++produced;
    try {
      MembershipCertificate cert = classify_complex_point(g, z);
      r.expect(cert.ok, "certificate failed");
    } catch (const Error& err) {
      r.expect(false, std::string("classification error: ") + err.what());
    }
  }
  // boundary points of E_+: y = (0, 1/l) with x on the level and x_0 < 0
  for (int len = 1; len <= 6; ++len) {
    ExchangeGraph ga = windowed_graph(len, 1);
    ComplexPoint z{{Rat(-len), Rat(1)}, {Rat(0), Rat(1, len)}};
    InteriorPath p = path_into_interior(ga, z);
    r.expect(p.s > Rat(0), "no progress off the boundary");
    Rat level(0);
    for (int j = 0; j < 2; ++j) level += p.end.y[j] * Rat(ga.normalization[j]);
    r.expect(level == Rat(1), "normalization not preserved");
    for (int j = 0; j < 2; ++j) r.expect(p.end.y[j] > Rat(0), "endpoint not interior");
    ComplexPoint interior{{Rat(-len), Rat(1)}, {Rat(1, 2), Rat(1, 2 * len)}};
    r.expect(path_into_interior(ga, interior).s == Rat(0), "interior point not fixed");
  }
  return r;
}

inline Report run_suite(const std::string& name, unsigned long long seed) {
  if (name == "involution") return suite_involution();
  if (name == "loops") return suite_loops();
  if (name == "coverage") return suite_coverage(seed);
  if (name == "cross-oracle") return suite_cross_oracle();
  if (name == "pic-decompose") return suite_pic_decompose();
  if (name == "appendix") return suite_appendix(seed);
  fail(ErrorCode::PreconditionUnmet, "unknown suite '" + name + "'");
}

}  // namespace verify
}  // namespace floparr

#endif
