#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hyperramsey/arrows.hpp"
#include "hyperramsey/construct.hpp"
#include "hyperramsey/covers.hpp"
#include "hyperramsey/density.hpp"
#include "hyperramsey/errors.hpp"
#include "hyperramsey/io.hpp"
#include "hyperramsey/report.hpp"
#include "hyperramsey/sample.hpp"

namespace fs = std::filesystem;
using namespace hyperramsey;
using nlohmann::json;

namespace {

enum Exit : int {
  kSuccess = 0,
  kNotArrows = 1,
  kInconclusive = 2,
  kContradiction = 3,
  kUsage = 64,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

std::string with_suffix(const std::string& prefix, const std::string& suffix) {
  return prefix + suffix;
}

json witness_json(const EdgeColoring& c) {
  json edges = json::array();
  for (std::size_t i = 0; i < c.host().num_edges(); ++i)
    edges.push_back({{"edge", to_json(c.host().edge(i))}, {"color", c.color_of_index(i)}});
  return edges;
}

SearchBudget make_budget(std::uint64_t nodes, double seconds) {
  return {.max_nodes = nodes, .max_seconds = seconds};
}

// density ------------------------------------------------------------------

struct DensityArgs {
  std::string file;
  std::string clique;
  std::uint32_t cap = kDefaultDensityVertexCap;
  bool json = false;
};

int run_density(const DensityArgs& args) {
  if (args.file.empty() == args.clique.empty())
    throw UsageError("density needs exactly one of <file> or --clique t,r");
  DensityResult result;
  if (!args.clique.empty()) {
    const auto comma = args.clique.find(',');
    if (comma == std::string::npos) throw UsageError("--clique expects t,r");
    std::uint32_t t = 0, r = 0;
    try {
      t = static_cast<std::uint32_t>(std::stoul(args.clique.substr(0, comma)));
      r = static_cast<std::uint32_t>(std::stoul(args.clique.substr(comma + 1)));
    } catch (const std::exception&) {
      throw UsageError("--clique expects t,r");
    }
    result.value = clique_density(t, r);
    result.witness = iota_set(t);
  } else {
    result = max_r_density(read_hypergraph(args.file), args.cap);
  }
  if (args.json) {
    std::cout << to_json(result).dump(2) << '\n';
  } else {
    std::cout << result.value.to_string() << '\n';
    std::cout << "witness:";
    for (Vertex v : result.witness) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kSuccess;
}

// construct ----------------------------------------------------------------

struct ConstructArgs {
  std::uint32_t n = 0, s = 0, r = 0, t = 0;
  std::string p;
  std::optional<std::uint64_t> seed;
  std::string out = "h0";
};

void check_construct_shape(std::uint32_t n, std::uint32_t s, std::uint32_t r, std::uint32_t t) {
  if (r < 2) throw UsageError("--r must be at least 2");
  if (t <= r) throw UsageError("--t must exceed --r");
  if (s < t) throw UsageError("--s must be at least --t");
  if (n < s) throw UsageError("--n must be at least --s");
}

int run_construct(const ConstructArgs& args) {
  check_construct_shape(args.n, args.s, args.r, args.t);
  const auto p = Probability::parse(args.p);
  const auto h = sample_hypergraph(args.n, args.s, p, *args.seed);
  const auto report = clean(h, args.r, args.t);
  const std::string uhg = with_suffix(args.out, ".uhg");
  write_text(uhg, to_uhg_string(report.result));
  json out = to_json(report, uhg);
  out["n"] = args.n;
  out["s"] = args.s;
  out["p"] = p.to_string();
  out["seed"] = *args.seed;
  write_text(with_suffix(args.out, ".json"), out.dump(2) + "\n");
  std::cout << "e(H)=" << report.input_edges << " X=" << report.cover_violations.size()
            << " Y=" << report.linearity_violations.size() << " deleted=" << report.deleted.size()
            << " deleted_fraction=" << out["deleted_fraction"].get<double>()
            << " e(H0)=" << report.result.num_edges() << '\n';
  return kSuccess;
}

// witness ------------------------------------------------------------------

struct WitnessArgs {
  std::uint32_t n = 0, r = 2;
  std::optional<std::uint32_t> s;
  bool s_auto = false;
  std::string targets;
  std::string p;
  std::optional<std::uint64_t> seed;
  std::uint32_t nmax = 10;
  std::uint64_t budget = 5'000'000;
  std::string out = "witness";
};

int run_witness(const WitnessArgs& args) {
  const auto targets = TargetList::parse(args.r, args.targets);
  if (args.s && args.s_auto) throw UsageError("--s and --s-auto are exclusive");
  std::uint32_t s = 0;
  if (args.s) {
    s = *args.s;
  } else {
    try {
      s = ramsey_number(targets, args.nmax, make_budget(args.budget, 0)) - 1;
    } catch (const BudgetExceeded& e) {
      std::cerr << "s-auto: " << e.what() << "; pass --s explicitly\n";
      return kInconclusive;
    } catch (const NotFound& e) {
      std::cerr << "s-auto: " << e.what() << "; pass --s explicitly\n";
      return kInconclusive;
    }
  }
  const std::uint32_t t = *std::min_element(targets.sizes().begin(), targets.sizes().end());
  if (s < t) throw UsageError("s = " + std::to_string(s) + " is below the smallest target");
  if (args.n < s) throw UsageError("--n must be at least s = " + std::to_string(s));
  EdgeColoring base = [&] {
    try {
      return base_coloring_search(s, targets, make_budget(args.budget, 0));
    } catch (const NoneExists& e) {
      throw UsageError(e.what());
    }
  }();
  const auto p = Probability::parse(args.p);
  const auto h = sample_hypergraph(args.n, s, p, *args.seed);
  const auto report = clean(h, args.r, t);
  const auto lifted = lift_coloring(report.result, args.r, base);
  const auto check = verify_good_coloring(lifted.host(), lifted, targets);
  if (!check.good) throw InternalContradiction("lifted coloring has a monochromatic target clique");

  const std::string g_file = with_suffix(args.out, ".uhg");
  const std::string col_file = with_suffix(args.out, ".col");
  write_text(g_file, to_uhg_string(lifted.host()));
  write_text(col_file, to_col_string(lifted));
  json cert = {
      {"n", args.n},
      {"s", s},
      {"s_auto", !args.s.has_value()},
      {"r", args.r},
      {"t", t},
      {"targets", targets.to_string()},
      {"p", p.to_string()},
      {"seed", *args.seed},
      {"h_edges", report.input_edges},
      {"h0_edges", report.result.num_edges()},
      {"deleted_count", report.deleted.size()},
      {"g_edges", lifted.host().num_edges()},
      {"base_coloring", witness_json(base)},
      {"good", true},
      {"graph_file", g_file},
      {"coloring_file", col_file},
  };
  write_text(with_suffix(args.out, ".json"), cert.dump(2) + "\n");
  std::cout << "s=" << s << " e(H0)=" << report.result.num_edges()
            << " e(G)=" << lifted.host().num_edges() << " certificate=verified\n";
  return kSuccess;
}

// arrow --------------------------------------------------------------------

struct ArrowArgs {
  std::string file;
  std::string targets;
  std::optional<std::uint32_t> r;
  std::string cnf;
  std::string witness;
  std::uint64_t budget = 0;
  double seconds = 0;
  std::string order = "lex";
};

int run_arrow(const ArrowArgs& args) {
  const auto g = read_hypergraph(args.file);
  const std::uint32_t r = args.r.value_or(g.k());
  if (r != g.k()) throw UsageError("--r does not match the file's uniformity");
  const auto targets = TargetList::parse(r, args.targets);
  if (!args.cnf.empty()) write_text(args.cnf, export_cnf(g, targets));
  const EdgeOrder order = args.order == "colex" ? EdgeOrder::colex : EdgeOrder::lexicographic;
  ArrowResult result;
  try {
    result = arrows_decision(g, targets, make_budget(args.budget, args.seconds), order);
  } catch (const BudgetExceeded& e) {
    std::cout << json{{"verdict", "inconclusive"}, {"nodes_explored", e.nodes()},
                      {"reason", e.what()}}.dump(2)
              << '\n';
    return kInconclusive;
  }
  json out = to_json(result);
  if (result.witness) {
    const std::string path = args.witness.empty()
                                 ? fs::path(args.file).replace_extension(".witness.col").string()
                                 : args.witness;
    write_text(path, to_col_string(*result.witness));
    out["witness_file"] = path;
  }
  if (!args.cnf.empty()) out["cnf_file"] = args.cnf;
  std::cout << out.dump(2) << '\n';
  return result.verdict == Verdict::arrows ? kSuccess : kNotArrows;
}

// ramsey -------------------------------------------------------------------

struct RamseyArgs {
  std::string targets;
  std::uint32_t r = 2;
  std::uint32_t nmax = 10;
  std::uint64_t budget = 0;
  double seconds = 0;
};

int run_ramsey(const RamseyArgs& args) {
  const auto targets = TargetList::parse(args.r, args.targets);
  try {
    std::cout << ramsey_number(targets, args.nmax, make_budget(args.budget, args.seconds)) << '\n';
  } catch (const NotFound& e) {
    std::cerr << e.what() << '\n';
    return kInconclusive;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << " after " << e.nodes() << " nodes\n";
    return kInconclusive;
  }
  return kSuccess;
}

// experiment ---------------------------------------------------------------

struct ExperimentArgs {
  std::uint32_t n = 0, s = 0, r = 0, t = 0;
  std::string p;
  std::uint32_t trials = 1;
  std::optional<std::uint64_t> seed;
  bool cover_bound = false;
  unsigned threads = 1;
  std::string csv;
  std::string json_path;
};

int run_experiment(const ExperimentArgs& args) {
  check_construct_shape(args.n, args.s, args.r, args.t);
  if (args.trials == 0) throw UsageError("--trials must be positive");
  if (args.threads == 0) throw UsageError("--threads must be positive");
  const TrialParameters params{.n = args.n, .s = args.s, .r = args.r, .t = args.t,
                               .p = Probability::parse(args.p), .trials = args.trials,
                               .master_seed = *args.seed};
  const auto stats = run_trials(params, args.threads);
  json out = to_json(stats);
  if (args.cover_bound) {
    const auto bound = expected_cover_bound(args.n, args.s, args.r, args.t, params.p);
    out["cover_bound"] = to_json(bound);
    std::cerr << "bound/reference ratio <= " << bound.ratio.upper.to_double() << '\n';
  }
  if (!args.csv.empty()) write_text(args.csv, to_csv(stats));
  if (!args.json_path.empty()) write_text(args.json_path, out.dump(2) + "\n");
  std::cout << out.dump(2) << '\n';
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymmetric hypergraph Ramsey toolkit"};
  app.require_subcommand(1);

  DensityArgs density;
  auto* density_cmd = app.add_subcommand("density", "maximum r-density with a witness subset");
  density_cmd->add_option("file", density.file, ".uhg input");
  density_cmd->add_option("--clique", density.clique, "closed form for K_t^(r), given as t,r");
  density_cmd->add_option("--cap", density.cap, "largest vertex count scanned");
  density_cmd->add_flag("--json", density.json);

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "sample H and clean it");
  construct_cmd->add_option("--n", construct.n)->required();
  construct_cmd->add_option("--s", construct.s)->required();
  construct_cmd->add_option("--r", construct.r)->required();
  construct_cmd->add_option("--t", construct.t)->required();
  construct_cmd->add_option("--p", construct.p, "0.25, 3/7 or n^-2.75")->required();
  construct_cmd->add_option("--seed", construct.seed)->required();
  construct_cmd->add_option("--out", construct.out, "output prefix for .uhg and .json");

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "non-arrowing host with a verified coloring");
  witness_cmd->add_option("--n", witness.n)->required();
  witness_cmd->add_option("--r", witness.r);
  witness_cmd->add_option("--s", witness.s);
  witness_cmd->add_flag("--s-auto", witness.s_auto, "s = R(targets) - 1 (default)");
  witness_cmd->add_option("--targets", witness.targets, "clique sizes, e.g. 3,3")->required();
  witness_cmd->add_option("--p", witness.p)->required();
  witness_cmd->add_option("--seed", witness.seed)->required();
  witness_cmd->add_option("--nmax", witness.nmax, "search bound for --s-auto");
  witness_cmd->add_option("--budget", witness.budget, "search node budget");
  witness_cmd->add_option("--out", witness.out, "output prefix for .uhg, .col and .json");

  ArrowArgs arrow;
  auto* arrow_cmd = app.add_subcommand("arrow", "decide G -> (K_t1, ..., K_tl)");
  arrow_cmd->add_option("file", arrow.file, ".uhg input")->required();
  arrow_cmd->add_option("--targets", arrow.targets)->required();
  arrow_cmd->add_option("--r", arrow.r);
  arrow_cmd->add_option("--cnf", arrow.cnf, "write DIMACS CNF here");
  arrow_cmd->add_option("--witness", arrow.witness, "where to write a good coloring");
  arrow_cmd->add_option("--budget", arrow.budget, "node budget, 0 for none");
  arrow_cmd->add_option("--seconds", arrow.seconds, "time budget, 0 for none");
  arrow_cmd->add_option("--order", arrow.order)->check(CLI::IsMember({"lex", "colex"}));

  RamseyArgs ramsey;
  auto* ramsey_cmd = app.add_subcommand("ramsey", "least n with K_n^(r) -> targets");
  ramsey_cmd->add_option("--targets", ramsey.targets)->required();
  ramsey_cmd->add_option("--r", ramsey.r);
  ramsey_cmd->add_option("--nmax", ramsey.nmax);
  ramsey_cmd->add_option("--budget", ramsey.budget, "node budget per host, 0 for none");
  ramsey_cmd->add_option("--seconds", ramsey.seconds, "time budget per host, 0 for none");

  ExperimentArgs experiment;
  auto* experiment_cmd = app.add_subcommand("experiment", "repeated sample and clean trials");
  experiment_cmd->add_option("--n", experiment.n)->required();
  experiment_cmd->add_option("--s", experiment.s)->required();
  experiment_cmd->add_option("--r", experiment.r)->required();
  experiment_cmd->add_option("--t", experiment.t)->required();
  experiment_cmd->add_option("--p", experiment.p)->required();
  experiment_cmd->add_option("--trials", experiment.trials);
  experiment_cmd->add_option("--seed", experiment.seed)->required();
  experiment_cmd->add_flag("--lemma42", experiment.cover_bound, "also evaluate the expected cover bound");
  experiment_cmd->add_option("--threads", experiment.threads);
  experiment_cmd->add_option("--csv", experiment.csv, "per-trial CSV output");
  experiment_cmd->add_option("--json", experiment.json_path, "summary JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*density_cmd) return run_density(density);
    if (*construct_cmd) return run_construct(construct);
    if (*witness_cmd) return run_witness(witness);
    if (*arrow_cmd) return run_arrow(arrow);
    if (*ramsey_cmd) return run_ramsey(ramsey);
    if (*experiment_cmd) return run_experiment(experiment);
  } catch (const InternalContradiction& e) {
    std::cerr << "internal contradiction: " << e.what() << '\n';
    return kContradiction;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
