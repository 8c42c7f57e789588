// raagrep: command-line front end.
//
// Exit codes: 0 success, 1 mathematical negative (empty fiber, mismatch,
// failed check), 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "raagrep/cocycle.hpp"
#include "raagrep/fiber.hpp"
#include "raagrep/io.hpp"
#include "raagrep/path.hpp"
#include "raagrep/sweep.hpp"
#include "raagrep/words.hpp"

using namespace raagrep;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "json";
  double tol_decide = kDecideTol;
  int jobs = 0;
  bool allow_large = false;
  std::size_t samples = 256;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + " byte " + std::to_string(e.byte), "invalid JSON");
  }
}

GraphDocument read_graph(const std::string& path) {
  try {
    return parse_graph_document(read_json(path));
  } catch (const ParseError& e) {
    throw ParseError(path + (e.where().empty() ? "" : ":" + e.where()), e.message());
  }
}

std::string signs(const EdgeMarking& m) {
  std::string s;
  for (Sign x : m) s += x == Sign::plus ? '+' : '-';
  return s;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

EdgeMarking pick_marking(const GraphDocument& doc, const std::string& marking_arg) {
  if (!marking_arg.empty()) return parse_marking_argument(doc.graph, marking_arg);
  if (doc.marking) return *doc.marking;
  throw InputError("a marking is required (--marking or a \"marking\" key in the graph file)");
}

int cmd_analyze(const RunConfig& cfg, const std::string& graph_path, const std::string& marking_arg, bool all) {
  const GraphDocument doc = read_graph(graph_path);
  const Graph& k = doc.graph;
  std::vector<std::pair<EdgeMarking, Classification>> rows;
  if (!all && (!marking_arg.empty() || doc.marking)) {
    const EdgeMarking m = pick_marking(doc, marking_arg);
    rows.emplace_back(m, classify_fiber(MarkedGraph(k, m)));
  } else {
    SweepOptions opts{cfg.jobs, cfg.allow_large, true};
    auto sweep = cfg.jobs > 0 ? sweep_markings_parallel(k, opts) : sweep_markings_serial(k, opts);
    for (auto& row : sweep) rows.emplace_back(std::move(row.marking), Classification{row.fiber, std::move(row.trace)});
  }

  bool any_empty = false;
  for (const auto& [m, c] : rows) any_empty |= c.fiber.verdict == FiberVerdict::Empty;

  if (cfg.format == "dot") {
    if (rows.size() != 1) throw InputError("--format dot needs a single marking");
    std::cout << to_dot(k, rows[0].first);
  } else if (cfg.format == "text") {
    for (const auto& [m, c] : rows) {
      std::cout << signs(m) << ' ' << to_string(c.fiber) << '\n';
      for (const auto& e : c.trace) std::cout << "  " << step_to_json(e.step).dump() << '\n';
    }
  } else {
    json out = json::array();
    for (const auto& [m, c] : rows) out.push_back(fiber_report(k, m, c));
    print_json(rows.size() == 1 ? out[0] : out);
  }
  return any_empty ? kNegative : kOk;
}

int cmd_bundles(const RunConfig& cfg, const std::string& graph_path, bool three_manifold) {
  const GraphDocument doc = read_graph(graph_path);
  const BundleReport r = bundle_report(doc.graph, three_manifold, {cfg.jobs, cfg.allow_large, false});
  if (cfg.format == "text") {
    for (const auto& rec : r.records) {
      const char* flat = rec.flat_exists ? (*rec.flat_exists ? "flat" : "not-flat") : "unknown";
      std::cout << signs(rec.marking) << ' ' << flat << ' ' << to_string(rec.fiber) << '\n';
    }
    std::cout << "all_bundles_flat " << (r.all_bundles_flat ? "true" : "false") << '\n'
              << "droms_3manifold_shape " << (r.droms_3manifold_shape ? "true" : "false") << '\n';
  } else {
    print_json(bundle_report_to_json(doc.graph, r));
  }
  const bool any_empty = std::any_of(r.records.begin(), r.records.end(),
                                     [](const BundleRecord& rec) { return rec.flat_exists == false; });
  return any_empty ? kNegative : kOk;
}

int cmd_construct(const RunConfig& cfg, const std::string& graph_path, const std::string& marking_arg) {
  const GraphDocument doc = read_graph(graph_path);
  const MarkedGraph m(doc.graph, pick_marking(doc, marking_arg));
  const Classification c = classify_fiber(m);
  if (c.fiber.verdict == FiberVerdict::Empty || c.fiber.verdict == FiberVerdict::Unknown) {
    std::cerr << "no construction: fiber verdict " << to_string(c.fiber) << '\n';
    if (cfg.format == "json") print_json(fiber_report(m.graph, m.marking, c));
    return kNegative;
  }
  const Representation x = construct_in_fiber(m, c);
  if (obstruction_map(m.graph, x, cfg.tol_decide) != m.marking) {
    std::cerr << "constructed representation does not realize the marking\n";
    return kNegative;
  }
  if (cfg.format == "text") {
    for (std::size_t v = 0; v < m.graph.vertex_count(); ++v) {
      const Quaternion& q = x[v].rep().value();
      std::printf("%s %.17g %.17g %.17g %.17g\n", m.graph.name(v).c_str(), q.x0, q.x1, q.x2, q.x3);
    }
  } else {
    print_json(representation_to_json(m.graph, x));
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& graph_path, const std::string& rep_path,
               const std::string& marking_arg) {
  const GraphDocument doc = read_graph(graph_path);
  const Representation x = parse_representation(doc.graph, read_json(rep_path));
  const RepresentationCheck check = is_representation(doc.graph, x, cfg.tol_decide);
  json out;
  out["is_representation"] = check.ok;
  out["max_residual"] = check.max_residual;
  int code = kOk;
  if (!check.ok) {
    out["obstruction"] = nullptr;
    code = kNegative;
  } else {
    const EdgeMarking o = obstruction_map(doc.graph, x, cfg.tol_decide);
    out["obstruction"] = marking_to_json(doc.graph, o);
    if (!marking_arg.empty() || doc.marking) {
      const bool match = o == pick_marking(doc, marking_arg);
      out["matches_marking"] = match;
      if (!match) code = kNegative;
    }
  }
  if (cfg.format == "text") {
    std::cout << "is_representation " << (check.ok ? "true" : "false") << '\n';
    if (check.ok) std::cout << "obstruction " << signs(obstruction_map(doc.graph, x, cfg.tol_decide)) << '\n';
  } else {
    print_json(out);
  }
  return code;
}

int cmd_path(const RunConfig& cfg, const std::string& graph_path, const std::string& rep_path,
             const std::string& group) {
  const GraphDocument doc = read_graph(graph_path);
  GroupTag tag;
  try {
    tag = group_tag_from_string(group);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const MatrixRepresentation x = parse_matrix_representation(doc.graph, read_json(rep_path), tag);
  if (!is_representation(doc.graph, x, cfg.tol_decide).ok) throw InputError("matrices do not commute along every edge");
  const GroupPath p = path_to_trivial(doc.graph, x);
  const PathCheck check = check_path_parallel(doc.graph, p, x, cfg.samples, cfg.jobs);
  const bool ok = check.ok(kConstructTol, cfg.tol_decide);
  if (cfg.format == "text") {
    std::printf("segments %zu\nstart_error %.3g\nend_error %.3g\nmax_commutator %.3g\nmax_membership %.3g\nvalid %s\n",
                p.segment_count(), check.start_error, check.end_error, check.max_commutator, check.max_membership,
                ok ? "true" : "false");
  } else {
    json out;
    out["group"] = to_string(tag);
    out["segments"] = p.segment_count();
    out["check"] = {{"start_error", check.start_error},
                    {"end_error", check.end_error},
                    {"max_commutator", check.max_commutator},
                    {"max_membership", check.max_membership},
                    {"valid", ok}};
    out["samples"] = path_samples_to_json(doc.graph, p, cfg.samples);
    print_json(out);
  }
  return ok ? kOk : kNegative;
}

Word random_word(const Graph& k, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), vertex(0, k.vertex_count() - 1);
  std::bernoulli_distribution inv(0.5);
  Word w(len(rng));
  for (auto& l : w) l = {vertex(rng), inv(rng) ? -1 : 1};
  return w;
}

int cmd_swcheck(const RunConfig& cfg, const std::string& graph_path, const std::string& rep_path,
                const std::vector<std::string>& words, std::size_t trials, std::uint64_t seed) {
  const GraphDocument doc = read_graph(graph_path);
  const Graph& k = doc.graph;
  if (words.size() % 2 != 0) throw InputError("--words takes pairs of words");
  const Representation x = parse_representation(k, read_json(rep_path));
  if (!is_representation(k, x, cfg.tol_decide).ok) throw InputError("not a representation within tolerance");
  const LiftFunction l = LiftFunction::canonical(k, x);

  bool ok = true;
  json osw = json::array();
  for (const OswRow& r : osw_rows(l, cfg.tol_decide)) {
    ok &= r.holds();
    osw.push_back({{"edge", k.edge_label(r.edge)},
                   {"obstruction", to_int(r.obstruction)},
                   {"w_vw", to_int(r.w_vw)},
                   {"w_wv", to_int(r.w_wv)},
                   {"holds", r.holds()}});
  }
  json pairs = json::array();
  for (std::size_t i = 0; i < words.size(); i += 2) {
    Word g1, g2;
    try {
      g1 = parse_word(k, words[i]);
      g2 = parse_word(k, words[i + 1]);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    pairs.push_back({{"g1", format_word(k, g1)}, {"g2", format_word(k, g2)}, {"w", to_int(cocycle_eval(l, g1, g2, cfg.tol_decide))}});
  }
  std::size_t failures = 0;
  if (k.vertex_count() > 0) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      const Word a = random_word(k, rng, 6), b = random_word(k, rng, 6), c = random_word(k, rng, 6);
      if (!cocycle_closed_check(l, a, b, c, cfg.tol_decide)) ++failures;
    }
  }
  ok &= failures == 0;
  const bool lifts = coboundary_trivialize(l, cfg.tol_decide).has_value();

  if (cfg.format == "text") {
    for (const auto& r : osw) std::cout << r["edge"].get<std::string>() << ' ' << (r["holds"].get<bool>() ? "holds" : "FAILS") << '\n';
    for (const auto& p : pairs)
      std::cout << "w(" << p["g1"].get<std::string>() << ", " << p["g2"].get<std::string>() << ") = " << p["w"].get<int>() << '\n';
    std::cout << "closedness failures " << failures << " of " << trials << '\n'
              << "homomorphic_lift " << (lifts ? "true" : "false") << '\n';
  } else {
    json out;
    out["osw"] = std::move(osw);
    out["pairs"] = std::move(pairs);
    out["closedness"] = {{"trials", trials}, {"failures", failures}};
    out["homomorphic_lift"] = lifts;
    print_json(out);
  }
  return ok ? kOk : kNegative;
}

int cmd_oracle(const RunConfig& cfg, const std::string& graph_path, const std::string& marking_arg,
               const std::string& frame_arg) {
  const GraphDocument doc = read_graph(graph_path);
  const MarkedGraph m(doc.graph, pick_marking(doc, marking_arg));
  json out;
  int code = kOk;
  if (!frame_arg.empty()) {
    std::vector<std::size_t> frame;
    std::stringstream ss(frame_arg);
    for (std::string name; std::getline(ss, name, ',');) {
      const auto v = m.graph.find_vertex(name);
      if (!v) throw InputError("unknown frame vertex " + name);
      frame.push_back(*v);
    }
    try {
      out["components"] = gauge_fixed_component_count(m, frame);
    } catch (const NotRigidError& e) {
      out["components"] = nullptr;
      out["not_rigid"] = e.what();
      code = kNegative;
    }
  } else {
    const Q8Result r = q8_oracle(m);
    out["realizable"] = r.realizable;
    out["witness"] = r.witness ? representation_to_json(m.graph, *r.witness) : json(nullptr);
    if (!r.realizable) code = kNegative;
  }
  if (cfg.format == "text") {
    for (const auto& [key, value] : out.items()) std::cout << key << ' ' << value.dump() << '\n';
  } else {
    print_json(out);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation varieties of right-angled Artin groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string graph_path, rep_path, marking, group = "SU", frame;
  bool all_markings = false, three_manifold = false;
  std::vector<std::string> words;
  std::size_t trials = 100;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--tol-decide", cfg.tol_decide, "Threshold for rounding commutators to +1/-1")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "OpenMP threads (0: serial where applicable)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--allow-large", cfg.allow_large, "Allow marking sweeps over more than 20 edges");
  };
  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "Graph JSON file")->required(); };
  auto add_rep = [&](CLI::App* sub) { sub->add_option("representation", rep_path, "Representation JSON ('-' for stdin)")->required(); };
  auto add_marking = [&](CLI::App* sub) {
    return sub->add_option("--marking", marking, "Marking: '+-+' in edge order or {\"v-w\": -1, ...}");
  };

  auto* analyze = app.add_subcommand("analyze", "Classify fibers of the obstruction map");
  add_graph(analyze);
  auto* analyze_marking = add_marking(analyze);
  analyze->add_flag("--all-markings", all_markings, "Sweep all 2^|E| markings")->excludes(analyze_marking);
  add_common(analyze);

  auto* bundles = app.add_subcommand("bundles", "Flat-bundle ledger over all markings");
  add_graph(bundles);
  bundles->add_flag("--3manifold", three_manifold, "Require every component to be a tree or a triangle");
  add_common(bundles);

  auto* construct = app.add_subcommand("construct", "Build a representation with a given obstruction");
  add_graph(construct);
  add_marking(construct);
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "Check a representation and compute its obstruction");
  add_graph(verify);
  add_rep(verify);
  add_marking(verify);
  add_common(verify);

  auto* path = app.add_subcommand("path", "Path from a matrix-group representation to the trivial one");
  add_graph(path);
  add_rep(path);
  path->add_option("--group", group, "SU, U or Sp")->check(CLI::IsMember({"SU", "U", "Sp"}));
  path->add_option("--samples", cfg.samples, "Samples along the path (>= 2)")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  add_common(path);

  auto* swcheck = app.add_subcommand("swcheck", "Stiefel-Whitney cocycle checks");
  add_graph(swcheck);
  add_rep(swcheck);
  swcheck->add_option("--words", words, "Pairs of words g1 g2, e.g. --words \"a b^-1\" \"c\"");
  swcheck->add_option("--trials", trials, "Random triples for the closedness check");
  swcheck->add_option("--seed", seed, "Seed for the random triples");
  add_common(swcheck);

  auto* oracle = app.add_subcommand("oracle", "Discrete fiber oracles");
  add_graph(oracle);
  add_marking(oracle);
  oracle->add_option("--frame", frame, "Comma-separated frame vertices for the gauge-fixed component count");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, graph_path, marking, all_markings);
    if (*bundles) return cmd_bundles(cfg, graph_path, three_manifold);
    if (*construct) return cmd_construct(cfg, graph_path, marking);
    if (*verify) return cmd_verify(cfg, graph_path, rep_path, marking);
    if (*path) return cmd_path(cfg, graph_path, rep_path, group);
    if (*swcheck) return cmd_swcheck(cfg, graph_path, rep_path, words, trials, seed);
    if (*oracle) return cmd_oracle(cfg, graph_path, marking, frame);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const ShapeViolation& e) {
    std::cerr << "shape violation: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::length_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "negative: " << e.what() << '\n';
    return kNegative;
  }
  return kInputError;
}
