// Command line front end: arrangements, SKMS descriptions, verification.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "floparr/io.hpp"
#include "floparr/verify.hpp"

using namespace floparr;

namespace {

struct RunConfig {
  std::string family;
  int rank = 0;
  std::vector<int> white;
  int catalog_length = 0;
  bool finite = false;
  bool affine = false;
  int window = 2;
  std::string box_lo = "-1", box_hi = "2";
  std::string format = "json";
  std::string output;
  std::string suite;
  int length = 0;
  unsigned long long seed = 0;
  int threads = 1;

  Json echo(const std::string& subcommand) const {
    Json j;
    j["subcommand"] = subcommand;
    if (catalog_length > 0) {
      j["catalog_length"] = catalog_length;
    } else if (!family.empty()) {
      j["family"] = family;
      j["rank"] = rank;
      j["white"] = white;
    }
    if (subcommand == "arrangement") {
      j["mode"] = affine ? "affine" : "finite";
      if (affine) j["window"] = {{"k", window}, {"level_box", {box_lo, box_hi}}};
    }
    if (subcommand == "skms") j["length"] = length;
    if (subcommand == "verify") j["suite"] = suite;
    j["format"] = format;
    j["threads"] = threads;
    return j;
  }
};

void emit(const RunConfig& cfg, const std::string& text) {
  std::string path = cfg.output;
  if (!path.empty() && path[0] != '/') {
    if (const char* dir = std::getenv("FLOPARR_OUT_DIR"))
      path = std::string(dir) + "/" + path;
  }
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Internal, "cannot open output file " + path);
  out << text;
}

FlopDatum datum_from(const RunConfig& cfg) {
  bool has_explicit = !cfg.family.empty();
  bool has_catalog = cfg.catalog_length > 0;
  if (has_explicit == has_catalog)
    fail(ErrorCode::PreconditionUnmet,
         "give exactly one of --catalog-length or --family/--rank/--white");
  if (has_catalog) return catalog_datum(cfg.catalog_length);
  if (cfg.white.empty())
    fail(ErrorCode::PreconditionUnmet, "--white is required with --family");
  return make_flop_datum(build_diagram(family_from_char(cfg.family[0]), cfg.rank),
                         cfg.white);
}

std::string table_of(const ExchangeGraph& g) {
  std::ostringstream os;
  if (g.affine) {
    os << "alcoves (level window " << to_string(g.window_lo) << " .. "
       << to_string(g.window_hi) << "):\n";
    std::vector<const GraphVertex*> vs;
    for (const auto& v : g.verts) vs.push_back(&v);
    std::sort(vs.begin(), vs.end(),
              [](const GraphVertex* a, const GraphVertex* b) { return a->lo < b->lo; });
    for (const auto* v : vs)
      os << "  (" << to_string(v->lo) << ", " << to_string(v->hi) << ")  ranks ("
         << v->rank_vec[0] << ", " << v->rank_vec[1] << ")\n";
    std::vector<const Wall*> ws;
    for (const auto& w : g.walls) ws.push_back(&w);
    std::sort(ws.begin(), ws.end(),
              [](const Wall* a, const Wall* b) { return *a->pos < *b->pos; });
    os << "walls:\n";
    for (const Wall* w : ws)
      os << "  " << to_string(*w->pos) << "  label " << w->rank_label << "\n";
  } else {
    os << "chambers:\n";
    for (size_t v = 0; v < g.verts.size(); ++v)
      os << "  " << v << "  " << sign_string(g.verts[v].sign) << "\n";
    os << g.walls.size() << " walls\n";
  }
  return os.str();
}

int cmd_arrangement(const RunConfig& cfg) {
  FlopDatum fd = datum_from(cfg);
  if (cfg.finite == cfg.affine)
    fail(ErrorCode::PreconditionUnmet, "give exactly one of --finite or --affine");
  ExchangeGraph g;
  if (cfg.finite) {
    g = enumerate_chambers(make_finite_arrangement(fd));
  } else {
    if (cfg.window < 1) fail(ErrorCode::PreconditionUnmet, "--window must be >= 1");
    LevelArrangement la = make_level_arrangement(
        fd, cfg.window * std::max<Int>(fd.length_vector[0], 1) * 2,
        parse_rational(cfg.box_lo), parse_rational(cfg.box_hi));
    g = enumerate_alcoves(la);
  }
  if (cfg.format == "json")
    emit(cfg, envelope(cfg.echo("arrangement"), cfg.seed, arrangement_json(g)).dump(2) + "\n");
  else if (cfg.format == "dot")
    emit(cfg, dot_export(g));
  else if (cfg.format == "svg")
    emit(cfg, g.affine ? svg_level(g) : svg_finite(g));
  else if (cfg.format == "table")
    emit(cfg, table_of(g));
  else
    fail(ErrorCode::PreconditionUnmet, "unknown format " + cfg.format);
  return 0;
}

int cmd_skms(const RunConfig& cfg) {
  SKMSDescription d = skms_for_length(cfg.length);
  if (cfg.format == "json")
    emit(cfg, envelope(cfg.echo("skms"), cfg.seed, skms_json(d)).dump(2) + "\n");
  else if (cfg.format == "svg")
    emit(cfg, svg_skms(d));
  else
    fail(ErrorCode::PreconditionUnmet, "unknown format " + cfg.format);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  verify::Report rep = verify::run_suite(cfg.suite, cfg.seed);
  Json body;
  body["suite"] = rep.suite;
  body["pass"] = rep.pass;
  body["checks"] = rep.checks;
  body["counterexamples"] = rep.counterexamples;
  body["notes"] = rep.notes;
  emit(cfg, envelope(cfg.echo("verify"), cfg.seed, body).dump(2) + "\n");
  return rep.pass ? 0 : 1;
}

int usage_exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::IllegalDiagram:
    case ErrorCode::UnsupportedLength:
    case ErrorCode::Unsupported:
    case ErrorCode::WindowTooSmall:
    case ErrorCode::PreconditionUnmet:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hyperplane arrangements, K-theory tracking and SKMS data "
               "for length 1..6 flops"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "seed for randomized suites (echoed in output)");
    sub->add_option("--format", cfg.format, "json|dot|svg|table");
    sub->add_option("--output,-o", cfg.output, "output file (default stdout)");
    sub->add_option("--threads", cfg.threads, "worker threads (results identical)");
  };

  CLI::App* arr = app.add_subcommand("arrangement", "chamber/alcove data");
  arr->add_option("--family", cfg.family, "A, D or E");
  arr->add_option("--rank", cfg.rank, "diagram rank");
  arr->add_option("--white", cfg.white, "white vertices")->delimiter(',');
  arr->add_option("--catalog-length", cfg.catalog_length, "Katz-Morrison length 1..6");
  arr->add_flag("--finite", cfg.finite, "finite arrangement");
  arr->add_flag("--affine", cfg.affine, "affine level arrangement");
  arr->add_option("--window", cfg.window, "affine window: |k| bound scale");
  arr->add_option("--box-lo", cfg.box_lo, "level box lower end (rational)");
  arr->add_option("--box-hi", cfg.box_hi, "level box upper end (rational)");
  add_common(arr);

  CLI::App* skms = app.add_subcommand("skms", "SKMS description");
  skms->add_option("--length", cfg.length, "flop length 1..6")->required();
  add_common(skms);

  CLI::App* ver = app.add_subcommand("verify", "verification suites");
  ver->add_option("--suite", cfg.suite,
                  "involution|loops|coverage|cross-oracle|pic-decompose|appendix")
      ->required();
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("arrangement")) return cmd_arrangement(cfg);
    if (app.got_subcommand("skms")) return cmd_skms(cfg);
    if (app.got_subcommand("verify")) return cmd_verify(cfg);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
