#include "cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "hcg/analysis.hpp"
#include "hcg/dynamics.hpp"
#include "hcg/error.hpp"
#include "hcg/game.hpp"
#include "hcg/hypergraph.hpp"
#include "hcg/io.hpp"
#include "sweep.hpp"

namespace hcg::cli {

namespace fs = std::filesystem;

namespace {

std::string join(std::span<const Color> xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct GenArgs {
  std::string family;
  std::size_t r = 0;
  std::uint32_t k = 2;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string witnesses;
};

int do_gen(const GenArgs& a, std::ostream& out) {
  std::optional<ConstructionBundle> bundle;
  Hypergraph h;
  if (a.family == "nm-lb") {
    bundle = gen_nm_construction(a.r, a.k);
  } else if (a.family == "cf-partite") {
    bundle = gen_cf_partite(a.r, a.k);
  } else if (a.family == "single-edge") {
    bundle = gen_single_edge(a.r, a.k);
  } else {
    h = gen_random_uniform(a.n, a.m, a.r, a.seed);
  }
  if (bundle) h = bundle->hypergraph;
  io::write_text(a.out, io::to_json(h));
  out << "wrote " << a.out << ": " << h.num_vertices() << " vertices, " << h.num_edges()
      << " edges\n";

  if (!a.witnesses.empty()) {
    if (!bundle) {
      throw Error(ErrorCode::InvalidParams, "--witnesses needs a construction family");
    }
    fs::create_directories(a.witnesses);
    const fs::path dir(a.witnesses);
    io::write_text(dir / "nash.json", io::to_json(bundle->nash_witness));
    io::write_text(dir / "optimum.json", io::to_json(bundle->optimum_witness));
    if (bundle->alt_witness) io::write_text(dir / "alt.json", io::to_json(*bundle->alt_witness));
    out << "wrote witnesses to " << a.witnesses << "\n";
    if (!bundle->nash_guaranteed) {
      out << "note: k > r/2, the nash witness is not guaranteed to be an equilibrium\n";
    }
  }
  return kExitOk;
}

struct EvalArgs {
  std::string game;
  std::string hypergraph;
  std::string coloring;
  bool json = false;
};

int do_eval(const EvalArgs& a, std::ostream& out) {
  const GameKind kind = parse_game_kind(a.game);
  const Hypergraph h = io::read_hypergraph(a.hypergraph);
  const Coloring c = io::read_coloring(a.coloring);
  check_matches(h, c);
  const auto u = utilities(h, c, kind);
  const std::int64_t sw = social_welfare(h, c, kind);
  const std::int64_t phi = potential(h, c, kind);
  const bool nash = is_nash(h, c, kind);
  if (a.json) {
    out << "{\n  \"kind\": \"" << to_string(kind) << "\",\n  \"utilities\": " << join(u)
        << ",\n  \"social_welfare\": " << sw << ",\n  \"potential\": " << phi
        << ",\n  \"is_nash\": " << yes_no(nash) << "\n}\n";
  } else {
    out << "game: " << to_string(kind) << "\n";
    out << "utilities: " << join(u) << "\n";
    out << "social welfare: " << sw << "\n";
    out << "potential: " << phi << "\n";
    out << "is_nash: " << yes_no(nash) << "\n";
  }
  return kExitOk;
}

struct DynamicsArgs {
  std::string game;
  std::string hypergraph;
  std::uint32_t k = 2;
  std::string init = "zero";
  std::string schedule = "round-robin";
  std::uint64_t seed = 0;
  std::size_t max_sweeps = 0;  // 0 = default
  std::string trace;
  bool json = false;
};

int do_dynamics(const DynamicsArgs& a, std::ostream& out) {
  const GameKind kind = parse_game_kind(a.game);
  const Hypergraph h = io::read_hypergraph(a.hypergraph);
  BrOptions opts;
  if (a.init == "zero") {
    opts.init = ZeroInit{};
  } else if (a.init == "random") {
    opts.init = RandomInit{a.seed};
  } else {
    opts.init = io::read_coloring(a.init);
  }
  if (a.schedule == "random") {
    // Offset so a random init and a random order never share a stream.
    opts.schedule = RandomOrder{a.seed ^ 0x5DEECE66DULL};
  } else if (a.schedule == "round-robin") {
    opts.schedule = RoundRobin{};
  } else {
    throw Error(ErrorCode::InvalidParams, "unknown schedule '" + a.schedule + "'");
  }
  if (a.max_sweeps > 0) opts.max_sweeps = a.max_sweeps;

  const BrTrace trace = br_dynamics(h, a.k, kind, opts);
  if (!a.trace.empty()) io::write_text(a.trace, io::to_json(trace));
  const std::int64_t sw = social_welfare(h, trace.final, kind);
  if (a.json) {
    out << "{\n  \"final\": " << join(trace.final.colors()) << ",\n  \"social_welfare\": " << sw
        << ",\n  \"converged\": " << yes_no(trace.converged)
        << ",\n  \"improving_steps\": " << trace.improving_steps
        << ",\n  \"sweeps\": " << trace.sweeps << "\n}\n";
  } else {
    out << "final: " << join(trace.final.colors()) << "\n";
    out << "social welfare: " << sw << "\n";
    out << "converged: " << yes_no(trace.converged) << "\n";
    out << "improving steps: " << trace.improving_steps << " in " << trace.sweeps << " sweeps\n";
  }
  return kExitOk;
}

struct ExactArgs {
  std::string game;
  std::string hypergraph;
  std::uint32_t k = 2;
  bool canonical = false;
  std::uint64_t limit = kDefaultSearchLimit;
  std::string csv;
  bool json = false;
};

int do_exact(const ExactArgs& a, std::ostream& out) {
  const GameKind kind = parse_game_kind(a.game);
  const Hypergraph h = io::read_hypergraph(a.hypergraph);
  const AnalysisReport rep = exact_analysis(h, a.k, kind, a.canonical, a.limit);
  std::optional<BoundCheck> bound;
  try {
    bound = check_theorem_bounds(h, rep);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
  }
  if (!a.csv.empty()) {
    io::write_text(a.csv, io::csv_header() + io::csv_row(h, rep, bound ? &*bound : nullptr));
  }
  if (a.json) {
    nlohmann::ordered_json j{{"analysis", nlohmann::ordered_json::parse(io::to_json(rep))}};
    j["bound"] = bound ? nlohmann::ordered_json::parse(io::to_json(*bound)) : nullptr;
    out << j.dump(2) << "\n";
  } else {
    out << "game: " << to_string(kind) << ", k = " << rep.k
        << (rep.canonical ? ", canonical scan" : ", full scan") << "\n";
    out << "colorings scanned: " << rep.colorings_scanned << "\n";
    out << "optimum SW: " << rep.optimum_sw << " at " << join(rep.optimum_witness.colors()) << "\n";
    out << "worst NE SW: " << rep.worst_ne_sw << " at " << join(rep.worst_ne_witness.colors())
        << "\n";
    out << "best NE SW: " << rep.best_ne_sw << " at " << join(rep.best_ne_witness.colors()) << "\n";
    out << "equilibria: " << rep.num_nash << "\n";
    out << "poa: " << rep.poa.str() << "\n";
    if (bound) {
      out << "bound (" << to_string(bound->regime) << "): " << bound->bound.str()
          << (bound->holds ? " holds" : " VIOLATED") << "\n";
    }
  }
  return bound && !bound->holds ? kExitViolation : kExitOk;
}

struct CheckArgs {
  std::string hypergraph;
  std::string coloring;
  bool json = false;
};

int do_check(const CheckArgs& a, std::ostream& out) {
  const Hypergraph h = io::read_hypergraph(a.hypergraph);
  const Coloring c = io::read_coloring(a.coloring);
  check_matches(h, c);
  bool ok = true;
  nlohmann::ordered_json j{{"lemma3", nullptr}, {"lemma5", nullptr}};
  try {
    const Lemma3Report rep = check_lemma3(h, c);
    ok = ok && rep.holds();
    j["lemma3"] = nlohmann::ordered_json::parse(io::to_json(rep));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
  }
  try {
    const Lemma5Report rep = check_lemma5(h, c);
    ok = ok && rep.holds();
    j["lemma5"] = nlohmann::ordered_json::parse(io::to_json(rep));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
  }
  if (a.json) {
    out << j.dump(2) << "\n";
  } else if (j["lemma3"].is_null() && j["lemma5"].is_null()) {
    out << "no checker applies: need an r-minimal (r >= 3) or uniform hypergraph\n";
  } else {
    for (const char* name : {"lemma3", "lemma5"}) {
      if (!j[name].is_null()) out << name << ":\n" << j[name].dump(2) << "\n";
    }
  }
  return ok ? kExitOk : kExitViolation;
}

struct VerifyArgs {
  std::string suite;
  SweepConfig config;
  std::string game = "both";
  std::vector<std::size_t> n{3, 8}, m{1, 12}, r{2, 4}, k{2, 3};
  std::string counterexample;
  bool json = false;
};

Range to_range(const std::vector<std::size_t>& v, const char* name) {
  if (v.size() != 2) {
    throw Error(ErrorCode::InvalidParams, std::string("--") + name + " takes MIN MAX");
  }
  return {v[0], v[1]};
}

int do_verify(VerifyArgs& a, std::ostream& out) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw Error(ErrorCode::InvalidParams, "unknown suite '" + a.suite + "'");
  SweepConfig& cfg = a.config;
  cfg.n_range = to_range(a.n, "n");
  cfg.m_range = to_range(a.m, "m");
  cfg.r_range = to_range(a.r, "r");
  cfg.k_range = to_range(a.k, "k");
  if (a.game != "both") cfg.kind = parse_game_kind(a.game);

  const SweepResult result = run_sweep(*suite, cfg);
  out << (a.json ? result.to_json() : result.to_text());
  if (result.counterexample && !a.counterexample.empty()) {
    io::write_text(a.counterexample, *result.counterexample + "\n");
  }
  return result.ok() ? kExitOk : kExitViolation;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchSpaceExceeded: return kExitSearchSpace;
    case ErrorCode::InvalidParams:
    case ErrorCode::NotApplicable: return kExitUsage;
    default: return kExitIo;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph clustering games of mis-coordination", "hcg"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a hypergraph (and witness colorings)");
  gen_cmd->add_option("--family", gen.family, "nm-lb | cf-partite | single-edge | random")
      ->required()
      ->check(CLI::IsMember({"nm-lb", "cf-partite", "single-edge", "random"}));
  gen_cmd->add_option("--r", gen.r, "Edge size")->required();
  gen_cmd->add_option("--k", gen.k, "Number of colors");
  gen_cmd->add_option("--n", gen.n, "Vertices (random family)");
  gen_cmd->add_option("--m", gen.m, "Edges (random family)");
  gen_cmd->add_option("--seed", gen.seed, "Seed (random family)");
  gen_cmd->add_option("--out", gen.out, "Hypergraph output file")->required();
  gen_cmd->add_option("--witnesses", gen.witnesses, "Directory for nash/optimum/alt colorings");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Utilities, welfare, potential and stability of a coloring");
  eval_cmd->add_option("--game", eval.game, "nm | cf")->required()->check(CLI::IsMember({"nm", "cf"}));
  eval_cmd->add_option("--hypergraph", eval.hypergraph)->required();
  eval_cmd->add_option("--coloring", eval.coloring)->required();
  eval_cmd->add_flag("--json", eval.json);

  DynamicsArgs dyn;
  auto* dyn_cmd = app.add_subcommand("dynamics", "Run best-response dynamics");
  dyn_cmd->add_option("--game", dyn.game, "nm | cf")->required()->check(CLI::IsMember({"nm", "cf"}));
  dyn_cmd->add_option("--hypergraph", dyn.hypergraph)->required();
  dyn_cmd->add_option("--k", dyn.k)->required();
  dyn_cmd->add_option("--init", dyn.init, "Coloring file, zero or random");
  dyn_cmd->add_option("--schedule", dyn.schedule, "round-robin | random");
  dyn_cmd->add_option("--seed", dyn.seed);
  dyn_cmd->add_option("--max-sweeps", dyn.max_sweeps);
  dyn_cmd->add_option("--trace", dyn.trace, "Write the step trace as JSON");
  dyn_cmd->add_flag("--json", dyn.json);

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exhaustive optimum, equilibria and price of anarchy");
  exact_cmd->add_option("--game", exact.game, "nm | cf")->required()->check(CLI::IsMember({"nm", "cf"}));
  exact_cmd->add_option("--hypergraph", exact.hypergraph)->required();
  exact_cmd->add_option("--k", exact.k)->required();
  exact_cmd->add_flag("--canonical", exact.canonical, "Scan one coloring per color permutation");
  exact_cmd->add_option("--limit", exact.limit, "Maximum colorings to scan");
  exact_cmd->add_option("--csv", exact.csv, "Write a one-row CSV summary");
  exact_cmd->add_flag("--json", exact.json);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate the lemma inequalities on one coloring");
  check_cmd->add_option("--hypergraph", check.hypergraph)->required();
  check_cmd->add_option("--coloring", check.coloring)->required();
  check_cmd->add_flag("--json", check.json);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite over random instances");
  const auto names = suite_names();
  verify_cmd->add_option("--suite", verify.suite)
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(names.begin(), names.end())));
  verify_cmd->add_option("--trials", verify.config.trials)->required();
  verify_cmd->add_option("--seed", verify.config.seed)->required();
  verify_cmd->add_option("--game", verify.game, "nm | cf | both");
  verify_cmd->add_option("--n", verify.n, "Vertex range MIN MAX")->expected(2);
  verify_cmd->add_option("--m", verify.m, "Edge count range MIN MAX")->expected(2);
  verify_cmd->add_option("--r", verify.r, "Edge size range MIN MAX")->expected(2);
  verify_cmd->add_option("--k", verify.k, "Color count range MIN MAX")->expected(2);
  verify_cmd->add_option("--max-space", verify.config.max_space, "Cap on k^n for exhaustive suites");
  verify_cmd->add_option("--colorings", verify.config.colorings_per_instance,
                         "Random colorings per instance (lemma suites)");
  verify_cmd->add_option("--counterexample", verify.counterexample, "Write the first violation here");
  verify_cmd->add_flag("--json", verify.json);

  std::vector<const char*> argv{"hcg"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return do_gen(gen, out);
    if (*eval_cmd) return do_eval(eval, out);
    if (*dyn_cmd) return do_dynamics(dyn, out);
    if (*exact_cmd) return do_exact(exact, out);
    if (*check_cmd) return do_check(check, out);
    if (*verify_cmd) return do_verify(verify, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace hcg::cli
