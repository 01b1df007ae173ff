#ifndef FLOPARR_IO_HPP
#define FLOPARR_IO_HPP

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "floparr/groupoid.hpp"
#include "floparr/skms.hpp"
#include "floparr/tracking.hpp"

namespace floparr {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

inline Json diagram_json(const FlopDatum& fd) {
  Json j;
  j["family"] = std::string(1, family_char(fd.diagram.family));
  j["rank"] = fd.diagram.rank;
  j["white"] = fd.white;
  Json edges = Json::array();
  for (auto [u, v] : fd.diagram.edges) edges.push_back({u, v});
  j["edges"] = edges;
  return j;
}

inline Json wall_set_json(const std::vector<SourcedWall>& walls) {
  Json arr = Json::array();
  for (const auto& w : walls) {
    Json e;
    e["covector"] = w.cov.c;
    e["source_root"] = w.source_root;
    e["level"] = w.level;
    arr.push_back(e);
  }
  Json j;
  j["walls"] = arr;
  return j;
}

inline Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline Json word_json(const std::vector<int>& word) {
  Json w = Json::array();
  for (int l : word) w.push_back("s" + std::to_string(l));
  return w;
}

inline Json path_json(const PositivePath& p) {
  Json j;
  j["source"] = p.source;
  j["word"] = word_json(p.word);
  return j;
}

inline std::string sign_string(const std::vector<int8_t>& sign) {
  std::string s;
  for (int8_t v : sign) s += v > 0 ? '+' : '-';
  return s;
}

inline Json arrangement_json(const ExchangeGraph& g) {
  Json j;
  j["type"] = g.affine ? "affine" : "finite";
  j["diagram"] = diagram_json(g.fd);
  if (g.affine) {
    j["normalization"] = g.normalization;
    j["window"] = {{"k", g.window_k},
                   {"level_box", {to_fraction_string(g.window_lo),
                                  to_fraction_string(g.window_hi)}}};
  }
  Json walls = Json::array();
  for (const auto& w : g.walls) {
    Json e;
    e["covector"] = w.cov.c;
    if (w.pos) {
      e["position"] = to_fraction_string(*w.pos);
      e["rank_label"] = w.rank_label;
    }
    walls.push_back(e);
  }
  j["walls"] = walls;
  Json cells = Json::array();
  for (size_t v = 0; v < g.verts.size(); ++v) {
    const auto& vert = g.verts[v];
    Json c;
    c["id"] = v;
    if (g.affine) {
      c["interval"] = {to_fraction_string(vert.lo), to_fraction_string(vert.hi)};
      c["rank_vector"] = vert.rank_vec;
    } else {
      c["sign_vector"] = sign_string(vert.sign);
    }
    c["rays"] = matrix_json(vert.rays);
    c["shortest_word"] = word_json(vert.word);
    Json edges = Json::array();
    for (const auto& e : vert.edges)
      edges.push_back({{"label", "s" + std::to_string(e.label)},
                       {"to", e.to},
                       {"wall", e.wall}});
    c["edges"] = edges;
    cells.push_back(c);
  }
  j[g.affine ? "alcoves" : "chambers"] = cells;
  return j;
}

inline Json skms_json(const SKMSDescription& d) {
  Json j;
  j["length"] = d.length;
  Json holes = Json::array();
  for (const Rat& p : d.equator_holes) holes.push_back(to_fraction_string(p));
  j["equator_holes"] = holes;
  j["labels"] = d.hole_labels;
  j["total_punctures"] = d.total_punctures;
  return j;
}

// Common output envelope: schema version, config echo, seed.
inline Json envelope(const Json& config, unsigned long long seed, Json body) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = config;
  j["seed"] = seed;
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

inline std::string dot_export(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph exchange {\n  node [shape=box];\n";
  for (size_t v = 0; v < g.verts.size(); ++v) {
    std::string label;
    if (g.affine)
      label = "(" + to_string(g.verts[v].lo) + ", " + to_string(g.verts[v].hi) + ")";
    else
      label = sign_string(g.verts[v].sign);
    os << "  c" << v << " [label=\"" << label << "\"];\n";
  }
  for (size_t v = 0; v < g.verts.size(); ++v)
    for (const auto& e : g.verts[v].edges)
      if (static_cast<int>(v) < e.to)
        os << "  c" << v << " -- c" << e.to << " [label=\"s" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace detail {
inline double rat_d(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}
}  // namespace detail

// One-curve level arrangement as a dotted line with labelled circles.  The
// level coordinate increases to the left, matching the paper's drawings.
inline std::string svg_level(const ExchangeGraph& g) {
  if (!g.affine || g.fd.n != 1)
    fail(ErrorCode::Unsupported, "level drawing defined for n = 1 only");
  double lo = detail::rat_d(g.window_lo), hi = detail::rat_d(g.window_hi);
  double scale = 600.0 / (hi - lo);
  auto X = [&](double y) { return 40.0 + scale * (hi - y); };  // leftward axis
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"680\" height=\"120\">\n";
  os << "  <line x1=\"" << X(hi) << "\" y1=\"60\" x2=\"" << X(lo)
     << "\" y2=\"60\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  std::vector<const Wall*> walls;
  for (const auto& w : g.walls) walls.push_back(&w);
  std::sort(walls.begin(), walls.end(),
            [](const Wall* a, const Wall* b) { return *a->pos < *b->pos; });
  for (const Wall* w : walls) {
    double x = X(detail::rat_d(*w->pos));
    os << "  <circle cx=\"" << x
       << "\" cy=\"60\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << x << "\" y=\"80\" font-size=\"11\" text-anchor=\"middle\">"
       << w->rank_label << "</text>\n";
    os << "  <text x=\"" << x << "\" y=\"45\" font-size=\"9\" text-anchor=\"middle\">"
       << to_string(*w->pos) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// Finite arrangements in dimension <= 2 as line bundles through the origin.
inline std::string svg_finite(const ExchangeGraph& g) {
  if (g.affine || g.dim > 2)
    fail(ErrorCode::Unsupported, "finite drawing defined for n <= 2 only");
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\">\n";
  double cx = 200, cy = 200, R = 170;
  for (const auto& w : g.walls) {
    double a = static_cast<double>(w.cov.c[0]);
    double b = g.dim == 2 ? static_cast<double>(w.cov.c[1]) : 0.0;
    // direction of the line a*x + b*y = 0 (vertical axis flipped for svg)
    double dx = -b, dy = -a;
    double norm = std::max(std::sqrt(dx * dx + dy * dy), 1e-9);
    dx /= norm;
    dy /= norm;
    os << "  <line x1=\"" << cx - R * dx << "\" y1=\"" << cy - R * dy << "\" x2=\""
       << cx + R * dx << "\" y2=\"" << cy + R * dy << "\" stroke=\"black\"/>\n";
  }
  os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

// Sphere-with-holes schematic: two poles plus labelled equator holes.
inline std::string svg_skms(const SKMSDescription& d) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"300\">\n";
  os << "  <ellipse cx=\"210\" cy=\"150\" rx=\"170\" ry=\"110\" fill=\"none\" "
        "stroke=\"black\"/>\n";
  os << "  <path d=\"M 40 150 A 170 40 0 0 0 380 150\" fill=\"none\" stroke=\"black\" "
        "stroke-dasharray=\"4 3\"/>\n";
  os << "  <circle cx=\"210\" cy=\"40\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
  os << "  <circle cx=\"210\" cy=\"260\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
  for (int i = 0; i < d.equator_hole_count; ++i) {
    double t = detail::rat_d(d.equator_holes[i]);
    double x = 380.0 - 340.0 * t;  // leftward, one fundamental domain
    double y = 150.0 + 38.0 * std::sin(3.14159265 * (x - 40.0) / 340.0);
    os << "  <circle cx=\"" << x << "\" cy=\"" << y
       << "\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << x << "\" y=\"" << y + 20
       << "\" font-size=\"11\" text-anchor=\"middle\">" << d.hole_labels[i]
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace floparr

#endif
