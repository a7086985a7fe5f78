// strongedge command line: analyze, solve, colour, discharge, verify, gen, bench.
// JSON goes to stdout, the human log to stderr.
// Exit codes: 0 ok, 1 bad input / precondition, 2 internal inconsistency.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "strongedge/discharging.hpp"
#include "strongedge/embedding.hpp"
#include "strongedge/errors.hpp"
#include "strongedge/exact.hpp"
#include "strongedge/generators.hpp"
#include "strongedge/girth6.hpp"
#include "strongedge/io.hpp"
#include "strongedge/kernels.hpp"
#include "strongedge/matching.hpp"

using namespace strongedge;
using nlohmann::json;

namespace {

bool quiet = false;

template <typename... Args>
void log(const Args&... args) {
  if (quiet) return;
  std::cerr << "[strongedge] ";
  (std::cerr << ... << args);
  std::cerr << '\n';
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Input {
  std::string path;
  std::string hash;
  Graph graph;
};

Input load(const std::string& path) {
  auto text = slurp(path);
  std::ostringstream h;
  h << std::hex << std::setw(16) << std::setfill('0') << fnv1a(text);
  return {path, h.str(), parse_graph(text)};
}

json girth_json(Girth g) { return g ? json(*g) : json("acyclic"); }

json maybe_known_bound(const Graph& g, bool planar) {
  if (!planar || g.max_degree() < 3) return nullptr;
  return known_bound(g.max_degree(), girth(g));
}

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

json run_report(const std::string& command, const Input& in, const std::string& algorithm,
                const PartialColouring& c, bool verified, double seconds) {
  const Graph& g = in.graph;
  const bool planar = is_planar(g);
  return {{"command", command},
          {"input", in.path},
          {"input_hash", in.hash},
          {"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"delta", g.max_degree()},
          {"girth", girth_json(girth(g))},
          {"planar", planar},
          {"algorithm", algorithm},
          {"colours_used", c.colours_used()},
          {"known_bound", maybe_known_bound(g, planar)},
          {"verify", verified ? "valid" : "invalid"},
          {"seconds", seconds}};
}

json violations_json(const Graph& g, const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json item{{"kind", to_string(v.kind)}, {"edge", edge_key(g, v.first)}};
    if (v.second) item["other"] = edge_key(g, *v.second);
    out.push_back(item);
  }
  return out;
}

// Every colouring leaves through here: verify, then print.
int emit_colouring(const std::string& command, const Input& in, const std::string& algorithm,
                   const PartialColouring& c, double seconds, json extra, const std::string& format) {
  const auto violations = verify_strong(in.graph, c, true);
  const bool ok = violations.empty();
  if (format == "dot") {
    std::cout << to_dot(in.graph, &c);
  } else {
    json doc = colouring_to_json(in.graph, c);
    doc["report"] = run_report(command, in, algorithm, c, ok, seconds);
    for (auto& [k, v] : extra.items()) doc["report"][k] = v;
    if (!ok) doc["report"]["violations"] = violations_json(in.graph, violations);
    std::cout << doc.dump(2) << '\n';
  }
  log(algorithm, ": ", c.colours_used(), " colours, verify ", ok ? "valid" : "INVALID", ", ",
      std::fixed, std::setprecision(3), seconds, " s");
  if (!ok) {
    std::cerr << "internal verify failed: " << violations.size() << " violation(s)\n";
    return 2;
  }
  return 0;
}

json config_json(const Graph& g, const Configuration& cfg) {
  json anchors = json::object();
  for (const auto& [name, v] : cfg.anchors()) anchors[name] = g.label(v);
  json out{{"kind", to_string(cfg.kind)}, {"anchors", anchors}};
  if (cfg.k) out["k"] = cfg.k;
  if (cfg.kind == ConfigKind::c9) out["alpha"] = cfg.alpha;
  return out;
}

// Trace records carry vertex indices of the input graph (all intermediate
// graphs share its vertex set).
json trace_json(const Graph& g, const Girth6Result& r) {
  json records = json::array();
  for (const auto& rec : r.trace) {
    json steps = json::array();
    for (const auto& s : rec.steps)
      steps.push_back({{"edge", edge_key(g, s.edge)},
                       {"guaranteed", s.guarantee},
                       {"actual", s.actual},
                       {"bound", s.bound},
                       {"colour", s.chosen},
                       {"ok", s.ok()}});
    records.push_back({{"depth", rec.depth},
                       {"component", rec.component},
                       {"configuration", rec.config ? config_json(g, *rec.config) : json(nullptr)},
                       {"current_delta", rec.current_delta},
                       {"steps", steps}});
  }
  return {{"delta", r.delta}, {"palette", r.palette}, {"method", r.method},
          {"audit_failures", r.audit_failures()}, {"records", records}};
}

std::string charge_str(const Charge& c) {
  std::ostringstream s;
  s << c.numerator();
  if (c.denominator() != 1) s << '/' << c.denominator();
  return s.str();
}

json discharge_json(const Embedding& e, const DischargeReport& r) {
  const Graph& g = e.graph();
  json negatives = json::array();
  for (const auto& n : r.negatives) {
    json item{{"element", n.element.kind == Element::Kind::vertex ? "vertex" : "face"},
              {"charge", charge_str(n.charge)}};
    if (n.element.kind == Element::Kind::vertex) item["vertex"] = g.label(n.element.id);
    else item["face"] = n.element.id;
    item["configuration"] = n.nearby ? config_json(g, *n.nearby) : json(nullptr);
    negatives.push_back(item);
  }
  json faces = json::array();
  for (const auto& f : r.face_bound_violations)
    faces.push_back({{"face", f.face}, {"length", f.length}, {"alpha", f.alpha}});
  json pendant = json::array();
  for (Vertex v : r.pendant_rule_hits) pendant.push_back(g.label(v));
  return {{"initial_total", charge_str(r.initial_total)},
          {"final_total", charge_str(r.final_total)},
          {"negatives", negatives},
          {"ledger_size", r.ledger_size},
          {"face_bound_violations", faces},
          {"pendant_rule_hits", pendant},
          {"verdict", to_string(r.verdict)},
          {"reason", r.reason}};
}

// ---- subcommands ----

int cmd_analyze(const std::string& file) {
  auto in = load(file);
  const Graph& g = in.graph;
  const bool planar = is_planar(g);
  json out{{"command", "analyze"},
           {"input", in.path},
           {"input_hash", in.hash},
           {"vertices", g.vertex_count()},
           {"edges", g.edge_count()},
           {"delta", g.max_degree()},
           {"girth", girth_json(girth(g))},
           {"planar", planar},
           {"connected", is_connected(g)},
           {"trivial_lower_bound", trivial_lower_bound(g)},
           {"known_bound", maybe_known_bound(g, planar)}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_solve(const std::string& file, std::optional<Colour> k, double timeout, const std::string& format) {
  auto in = load(file);
  const Budget budget = timeout > 0 ? Budget::seconds(timeout) : Budget{};
  const auto t0 = Clock::now();
  if (k) {
    auto d = is_strong_k_colourable(in.graph, *k, budget);
    json stats{{"nodes", d.stats.nodes}, {"seconds", d.stats.seconds}, {"k", *k}};
    if (d.outcome == SolveOutcome::budget_exhausted)
      throw BudgetExhausted("budget exhausted before deciding k = " + std::to_string(*k));
    if (d.outcome == SolveOutcome::unsat) {
      log("no strong ", *k, "-edge-colouring exists");
      std::cout << json{{"outcome", "unsat"}, {"stats", stats}}.dump(2) << '\n';
      return 0;
    }
    return emit_colouring("solve --exact --k", in, "exact", *d.witness, since(t0),
                          {{"outcome", "found"}, {"stats", stats}}, format);
  }
  auto r = strong_chromatic_index(in.graph, budget);
  return emit_colouring("solve --exact", in, "exact", r.witness, since(t0),
                        {{"chi_s", r.chi_s}, {"stats", {{"nodes", r.stats.nodes}, {"seconds", r.stats.seconds}}}},
                        format);
}

int cmd_colour_girth6(const std::string& file, double budget, const std::string& trace_path,
                      const std::string& format) {
  auto in = load(file);
  const auto t0 = Clock::now();
  auto r = colour_girth6(in.graph, Budget::seconds(budget));
  const double seconds = since(t0);
  if (!trace_path.empty()) {
    std::ofstream t(trace_path);
    if (!t) throw PreconditionError("cannot write trace file '" + trace_path + "'");
    t << trace_json(in.graph, r).dump(2) << '\n';
  }
  json extra{{"palette_bound", r.palette}, {"method", r.method}, {"reductions", r.trace.size()},
             {"extension_steps", r.steps()}, {"audit_failures", r.audit_failures()}};
  int rc = emit_colouring("colour --girth6", in, "girth6/" + r.method, r.colouring, seconds, extra, format);
  if (r.audit_failures()) {
    std::cerr << "counting-bound audit failed on " << r.audit_failures() << " step(s)\n";
    rc = 2;
  }
  if (r.colouring.colours_used() > r.palette) {
    std::cerr << "colouring exceeds the palette\n";
    rc = 2;
  }
  return rc;
}

int cmd_colour_pipeline(const std::string& file, double budget, const std::string& format) {
  auto in = load(file);
  const auto t0 = Clock::now();
  auto r = colour_pipeline(in.graph, Budget::seconds(budget));
  json methods = json::array();
  for (const auto& nc : r.per_class) methods.push_back({{"colours", nc.count}, {"method", nc.method}});
  json extra{{"regime", r.regime},
             {"corollary1_applies", r.corollary_applies},
             {"classCount", r.class_count},
             {"maxC", r.max_c},
             {"bound_claimed", r.bound_claimed},
             {"bound_name", r.bound_name},
             {"per_class", methods}};
  int rc = emit_colouring("colour --pipeline", in, "pipeline/" + r.regime, r.colouring, since(t0), extra, format);
  if (r.colours_used > r.class_count * r.max_c || (r.class_count && r.colours_used > r.bound_claimed)) {
    std::cerr << "pipeline exceeded its own bound\n";
    rc = 2;
  }
  return rc;
}

int cmd_discharge(const std::string& file) {
  auto in = load(file);
  auto embedded = planar_embed(in.graph);
  if (std::holds_alternative<NonPlanar>(embedded)) throw PreconditionError("not planar");
  const auto& e = std::get<Embedding>(embedded);
  auto report = discharge(e);
  json out = discharge_json(e, report);
  out["input_hash"] = in.hash;
  std::cout << out.dump(2) << '\n';
  log("discharge: final total ", charge_str(report.final_total), ", verdict ", to_string(report.verdict));
  if (report.verdict == Verdict::theorem_violation) {
    std::cerr << "theorem violation: " << report.reason << '\n';
    return 2;
  }
  if (report.initial_total != Charge(-12) || report.final_total != Charge(-12)) {
    std::cerr << "charge total is not -12\n";
    return 2;
  }
  return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& colouring_file) {
  auto in = load(graph_file);
  json doc;
  try {
    doc = json::parse(slurp(colouring_file));
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("colouring file is not JSON: ") + e.what());
  }
  auto c = colouring_from_json(in.graph, doc);
  auto violations = verify_strong(in.graph, c, true);
  json out{{"valid", violations.empty()},
           {"colours_used", c.colours_used()},
           {"palette", c.palette().size},
           {"violations", violations_json(in.graph, violations)}};
  std::cout << out.dump(2) << '\n';
  log("verify: ", violations.empty() ? "valid" : "invalid", " (", violations.size(), " violation(s))");
  return violations.empty() ? 0 : 1;
}

int cmd_gen(const std::string& family, const std::vector<std::size_t>& params, std::size_t t,
            std::uint64_t seed, const std::string& output) {
  auto g = generate({family, params, seed, t});
  auto text = "# " + family + " seed " + std::to_string(seed) + " subdivide " + std::to_string(t) + "\n" +
              format_edge_list(g);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw PreconditionError("cannot write '" + output + "'");
    out << text;
  }
  log("gen ", family, ": ", g.vertex_count(), " vertices, ", g.edge_count(), " edges, delta ", g.max_degree(),
      ", girth ", to_string(girth(g)));
  return 0;
}

struct BenchRow {
  std::string name;
  std::size_t n = 0, m = 0, delta = 0;
  std::size_t girth6 = 0, pipeline = 0, bound = 0, audit_failures = 0;
  bool ok = true;
  double seconds = 0;
  std::string error;
};

int cmd_bench(std::uint64_t seeds, const std::string& format) {
  auto corpus = girth6_corpus(1, seeds);
  std::vector<BenchRow> rows(corpus.size());
  const auto t0 = Clock::now();
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& entry = corpus[i];
    auto& row = rows[i];
    const Graph& g = entry.graph;
    row.name = entry.name;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.delta = g.max_degree();
    row.bound = 3 * row.delta + 1;
    const auto s0 = Clock::now();
    try {
      auto a = colour_girth6(g);
      auto b = colour_pipeline(g);
      row.girth6 = a.colouring.colours_used();
      row.pipeline = b.colours_used;
      row.audit_failures = a.audit_failures();
      row.ok = verify_strong(g, a.colouring, true).empty() && verify_strong(g, b.colouring, true).empty() &&
               row.girth6 <= row.bound && row.audit_failures == 0;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    row.seconds = since(s0);
  }
  const double total = since(t0);
  std::size_t failures = 0;
  for (const auto& r : rows) failures += !r.ok;

  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"name", r.name}, {"vertices", r.n}, {"edges", r.m}, {"delta", r.delta},
                     {"girth6_colours", r.girth6}, {"pipeline_colours", r.pipeline}, {"bound_3d_plus_1", r.bound},
                     {"audit_failures", r.audit_failures}, {"ok", r.ok}, {"seconds", r.seconds}, {"error", r.error}});
    std::cout << json{{"rows", out}, {"failures", failures}, {"seconds", total}, {"threads", max_threads()}}.dump(2)
              << '\n';
  } else {
    std::cout << "| instance | n | m | delta | girth6 | pipeline | 3delta+1 | audit | ok | s |\n"
              << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
      std::cout << "| " << r.name << " | " << r.n << " | " << r.m << " | " << r.delta << " | " << r.girth6 << " | "
                << r.pipeline << " | " << r.bound << " | " << r.audit_failures << " | " << (r.ok ? "yes" : "NO")
                << " | " << std::fixed << std::setprecision(3) << r.seconds << " |\n";
  }
  log("bench: ", rows.size(), " instances, ", failures, " failure(s), ", std::fixed, std::setprecision(2), total,
      " s on ", max_threads(), " thread(s)");
  return failures ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();

  CLI::App app{"Strong edge-colouring toolkit for planar graphs"};
  app.require_subcommand(1);
  app.add_flag("-q,--quiet", quiet, "Suppress the stderr log");
  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  };

  std::string file, file2, trace, output, family;
  double timeout = 0, budget = 2;
  std::optional<Colour> k;
  bool exact = false, use_girth6 = false, use_pipeline = false;
  std::vector<std::size_t> params;
  std::size_t subdivide_t = 0;
  std::uint64_t seed = 1, seeds = 100;

  auto* analyze = app.add_subcommand("analyze", "Δ, girth, planarity, trivial lower bound, known bound");
  analyze->add_option("graph", file)->required();

  auto* solve = app.add_subcommand("solve", "Exact strong chromatic index or k-colourability");
  solve->add_flag("--exact", exact, "Exact branch and bound (the only solver)")->required();
  solve->add_option("graph", file)->required();
  solve->add_option("--k", k, "Decide colourability with k colours");
  solve->add_option("--timeout", timeout, "Seconds; 0 means no limit");
  add_format(solve);

  auto* colour = app.add_subcommand("colour", "Constructive strong edge-colouring");
  auto* g6 = colour->add_flag("--girth6", use_girth6, "Reducible-configuration algorithm (3Δ+1)");
  auto* pl = colour->add_flag("--pipeline", use_pipeline, "Matching decomposition pipeline");
  g6->excludes(pl);
  colour->add_option("graph", file)->required();
  colour->add_option("--budget", budget, "Seconds per exact sub-search");
  colour->add_option("--trace", trace, "Write the girth6 step audit to this file");
  add_format(colour);

  auto* dis = app.add_subcommand("discharge", "Run the discharging rules and audit the result");
  dis->add_option("graph", file)->required();

  auto* verify = app.add_subcommand("verify", "Check a colouring document against a graph");
  verify->add_option("graph", file)->required();
  verify->add_option("colouring", file2)->required();

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("family", family)->required()->check(CLI::IsMember(generator_families()));
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--subdivide", subdivide_t, "Interior vertices per edge");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", output);

  auto* bench = app.add_subcommand("bench", "Corpus sweep with girth6 and pipeline");
  bench->add_option("--seeds", seeds, "Triangulation seeds 1..N");
  std::string bench_format = "table";
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return cmd_analyze(file);
    if (*solve) return cmd_solve(file, k, timeout, format);
    if (*colour) {
      if (use_girth6) return cmd_colour_girth6(file, budget, trace, format);
      if (use_pipeline) return cmd_colour_pipeline(file, budget, format);
      std::cerr << "colour needs --girth6 or --pipeline\n";
      return 1;
    }
    if (*dis) return cmd_discharge(file);
    if (*verify) return cmd_verify(file, file2);
    if (*gen) return cmd_gen(family, params, subdivide_t, seed, output);
    if (*bench) return cmd_bench(seeds, bench_format);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return 1;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected failure: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
