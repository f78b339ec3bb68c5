#include "sweep.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hcg/analysis.hpp"
#include "hcg/dynamics.hpp"
#include "hcg/error.hpp"
#include "hcg/hypergraph.hpp"
#include "hcg/random.hpp"
#include "json.hpp"

namespace hcg::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 7> kSuites{{
    {Suite::Potential, "potential"},
    {Suite::Coincidence, "coincidence"},
    {Suite::Oracle, "oracle"},
    {Suite::Lemma3, "lemma3"},
    {Suite::Lemma5, "lemma5"},
    {Suite::Thm1, "thm1"},
    {Suite::Thm2, "thm2"},
}};

json hypergraph_json(const Hypergraph& h) {
  return json{{"num_vertices", h.num_vertices()}, {"edges", h.edges()}};
}

json coloring_json(const Coloring& c) {
  return json{{"num_colors", c.num_colors()},
              {"colors", std::vector<Color>(c.colors().begin(), c.colors().end())}};
}

class Recorder {
 public:
  explicit Recorder(SweepResult& result) : result_(result) {}

  // make_detail is only invoked for the first failure of the whole sweep.
  void record(const std::string& check, bool ok, const std::function<json()>& make_detail) {
    CheckTally& t = tally(check);
    if (ok) {
      ++t.passed;
      return;
    }
    ++t.failed;
    if (!result_.counterexample) {
      json bundle = make_detail();
      bundle["suite"] = to_string(result_.suite);
      bundle["check"] = check;
      result_.counterexample = bundle.dump(2);
    }
  }

 private:
  CheckTally& tally(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, result_.checks.size()).first;
      result_.checks.push_back({name, 0, 0});
    }
    return result_.checks[it->second];
  }

  SweepResult& result_;
  std::map<std::string, std::size_t> index_;
};

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t x = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (x > UINT64_MAX / base) return UINT64_MAX;
    x *= base;
  }
  return x;
}

struct Instance {
  Hypergraph h;
  std::uint32_t k;
};

struct InstanceShape {
  Range r;           // edge sizes are drawn from this range
  Range k;
  bool cap_space;    // keep k^n <= max_space
  bool force_uniform;
};

// Draws r, then k, then n within the configured ranges.
Instance sample_instance(SplitMix64& rng, const SweepConfig& cfg, const InstanceShape& shape) {
  std::size_t r_lo = shape.r.lo, r_hi = shape.r.hi;
  if (shape.force_uniform) r_lo = r_hi = rng.in_range(shape.r.lo, shape.r.hi);
  auto k = static_cast<std::uint32_t>(rng.in_range(shape.k.lo, shape.k.hi));

  const std::size_t n_lo = std::max(cfg.n_range.lo, r_hi);
  std::size_t n_hi = std::max(cfg.n_range.hi, n_lo);
  if (shape.cap_space) {
    while (n_hi > n_lo && power(k, n_hi) > cfg.max_space) --n_hi;
  }
  const std::size_t n = rng.in_range(n_lo, n_hi);
  if (shape.cap_space) {
    while (k > 2 && power(k, n) > cfg.max_space) --k;
  }
  const std::size_t m = rng.in_range(cfg.m_range.lo, cfg.m_range.hi);
  return {gen_random_mixed(n, m, r_lo, r_hi, rng.next()), k};
}

Coloring random_coloring(SplitMix64& rng, std::size_t n, std::uint32_t k) {
  std::vector<Color> colors(n);
  for (Color& x : colors) x = static_cast<Color>(rng.below(k));
  return Coloring(k, std::move(colors));
}

std::vector<GameKind> kinds_of(const SweepConfig& cfg) {
  if (cfg.kind) return {*cfg.kind};
  return {GameKind::NonMonochromatic, GameKind::ConflictFree};
}

json instance_json(const Instance& inst, std::optional<GameKind> kind) {
  json j{{"k", inst.k}, {"hypergraph", hypergraph_json(inst.h)}};
  if (kind) j["kind"] = to_string(*kind);
  return j;
}

json with_coloring(const Instance& inst, std::optional<GameKind> kind, const Coloring& c) {
  json j = instance_json(inst, kind);
  j["coloring"] = coloring_json(c);
  return j;
}

// Exhaustive report plus the family bound, when the instance belongs to one.
void check_bound(Recorder& rec, const Instance& inst, GameKind kind, const SweepConfig& cfg) {
  const AnalysisReport rep = exact_analysis(inst.h, inst.k, kind, true, cfg.max_space);
  std::optional<BoundCheck> bound;
  try {
    bound = check_theorem_bounds(inst.h, rep);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
    return;
  }
  const BoundCheck& check = *bound;
  rec.record("theorem-bound", check.holds, [&] {
    json j = instance_json(inst, kind);
    j["poa"] = rep.poa.str();
    j["bound"] = check.bound.str();
    j["regime"] = to_string(check.regime);
    j["worst_ne_witness"] = coloring_json(rep.worst_ne_witness);
    return j;
  });
}

void potential_trial(Recorder& rec, SplitMix64& rng, const SweepConfig& cfg) {
  const Instance inst = sample_instance(rng, cfg, {cfg.r_range, cfg.k_range, false, true});
  const Coloring c = random_coloring(rng, inst.h.num_vertices(), inst.k);
  const auto v = static_cast<Vertex>(rng.below(inst.h.num_vertices()));
  const auto i = static_cast<Color>(rng.below(inst.k));
  const Coloring moved = c.with(v, i);

  std::vector<Color> perm(inst.k);
  std::iota(perm.begin(), perm.end(), Color{0});
  for (std::size_t a = perm.size(); a > 1; --a) std::swap(perm[a - 1], perm[rng.below(a)]);
  std::vector<Color> permuted(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) permuted[x] = perm[c[static_cast<Vertex>(x)]];
  const Coloring pc(inst.k, std::move(permuted));

  for (GameKind kind : kinds_of(cfg)) {
    const std::int64_t dphi = potential(inst.h, moved, kind) - potential(inst.h, c, kind);
    const std::int64_t du = utility(inst.h, moved, v, kind) - utility(inst.h, c, v, kind);
    rec.record("potential-identity", dphi == du, [&] {
      json j = with_coloring(inst, kind, c);
      j["vertex"] = v;
      j["new_color"] = i;
      return j;
    });
    rec.record("permutation-invariance",
               utilities(inst.h, c, kind) == utilities(inst.h, pc, kind),
               [&] { return with_coloring(inst, kind, c); });
  }
}

// Simple graph: repeated edges from the sampler are dropped.
void coincidence_trial(Recorder& rec, SplitMix64& rng, const SweepConfig& cfg) {
  const Instance drawn = sample_instance(rng, cfg, {{2, 2}, cfg.k_range, false, true});
  std::vector<Edge> edges = drawn.h.edges();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const Instance inst{Hypergraph::build(drawn.h.num_vertices(), std::move(edges)), drawn.k};
  const Coloring c = random_coloring(rng, inst.h.num_vertices(), inst.k);
  rec.record("nm-equals-cf-on-graphs",
             utilities(inst.h, c, GameKind::NonMonochromatic) ==
                 utilities(inst.h, c, GameKind::ConflictFree),
             [&] { return with_coloring(inst, std::nullopt, c); });
}

bool replay_matches(const Hypergraph& h, GameKind kind, Coloring c, const BrTrace& trace) {
  std::int64_t last = potential(h, c, kind);
  for (const BrStep& s : trace.steps) {
    if (s.gain <= 0 || c[s.vertex] != s.old_color) return false;
    c.set(s.vertex, s.new_color);
    const std::int64_t phi = potential(h, c, kind);
    if (phi != s.potential_after || phi <= last) return false;
    last = phi;
  }
  return c == trace.final;
}

void oracle_trial(Recorder& rec, SplitMix64& rng, const SweepConfig& cfg, std::size_t trial) {
  const Instance inst = sample_instance(rng, cfg, {cfg.r_range, cfg.k_range, true, true});
  const GameKind kind = cfg.kind.value_or(trial % 2 == 0 ? GameKind::NonMonochromatic
                                                          : GameKind::ConflictFree);
  const std::vector<Coloring> equilibria = nash_equilibria(inst.h, inst.k, kind, true, cfg.max_space);
  rec.record("equilibrium-exists", !equilibria.empty(), [&] { return instance_json(inst, kind); });

  const Coloring random_init = random_coloring(rng, inst.h.num_vertices(), inst.k);
  const std::uint64_t order_seed = rng.next();
  const std::array<std::pair<Coloring, Schedule>, 2> runs{{
      {Coloring::uniform(inst.k, inst.h.num_vertices()), RoundRobin{}},
      {random_init, RandomOrder{order_seed}},
  }};
  const std::int64_t range = potential_range(inst.h, inst.k, kind);
  for (const auto& [init, schedule] : runs) {
    const BrTrace trace = br_dynamics(inst.h, inst.k, kind, {init, schedule, std::nullopt});
    const auto detail = [&] { return with_coloring(inst, kind, init); };
    rec.record("br-converged", trace.converged && is_nash(inst.h, trace.final, kind), detail);
    rec.record("br-step-bound", static_cast<std::int64_t>(trace.improving_steps) <= range, detail);
    rec.record("br-potential-increasing", replay_matches(inst.h, kind, init, trace), detail);
    rec.record("fixed-point-in-equilibrium-set",
               std::binary_search(equilibria.begin(), equilibria.end(), canonicalize(trace.final)),
               detail);
  }

  const AnalysisReport canon = exact_analysis(inst.h, inst.k, kind, true, cfg.max_space);
  const AnalysisReport full = exact_analysis(inst.h, inst.k, kind, false, cfg.max_space);
  rec.record("canonical-matches-full",
             canon.optimum_sw == full.optimum_sw && canon.worst_ne_sw == full.worst_ne_sw &&
                 canon.best_ne_sw == full.best_ne_sw && canon.poa == full.poa &&
                 canon.worst_ne_witness == full.worst_ne_witness,
             [&] { return instance_json(inst, kind); });
  check_bound(rec, inst, kind, cfg);
}

Range at_least(Range r, std::size_t lo) { return {std::max(r.lo, lo), std::max(r.hi, lo)}; }

void lemma3_trial(Recorder& rec, SplitMix64& rng, const SweepConfig& cfg) {
  const Instance inst = sample_instance(rng, cfg, {at_least(cfg.r_range, 3), cfg.k_range, true, false});
  const GameKind kind = GameKind::NonMonochromatic;
  const auto record_report = [&](const Lemma3Report& rep, const Coloring& c, bool all_parts) {
    const auto detail = [&] { return with_coloring(inst, kind, c); };
    rec.record("lemma3-part1", rep.part1, detail);
    rec.record("lemma3-part2", rep.part2, detail);
    if (all_parts && rep.part3) {
      rec.record("lemma3-part3", *rep.part3, detail);
      rec.record("lemma3-per-vertex", rep.per_vertex.value_or(false), detail);
    }
  };
  for (const Coloring& c : nash_equilibria(inst.h, inst.k, kind, false, cfg.max_space)) {
    const Lemma3Report rep = check_lemma3(inst.h, c);
    rec.record("lemma3-equilibrium-detected", rep.part3.has_value(),
               [&] { return with_coloring(inst, kind, c); });
    record_report(rep, c, true);
  }
  for (std::size_t t = 0; t < cfg.colorings_per_instance; ++t) {
    const Coloring c = random_coloring(rng, inst.h.num_vertices(), inst.k);
    record_report(check_lemma3(inst.h, c), c, false);
  }
  check_bound(rec, inst, kind, cfg);
}

void lemma5_trial(Recorder& rec, SplitMix64& rng, const SweepConfig& cfg) {
  const std::size_t r = rng.in_range(cfg.r_range.lo, cfg.r_range.hi);
  const Range k_range = at_least(cfg.k_range, r / 2 + 1);  // 2k > r
  const Instance inst = sample_instance(rng, cfg, {{r, r}, k_range, true, true});
  const GameKind kind = GameKind::ConflictFree;
  for (std::size_t t = 0; t < cfg.colorings_per_instance; ++t) {
    const Coloring c = random_coloring(rng, inst.h.num_vertices(), inst.k);
    const Lemma5Report rep = check_lemma5(inst.h, c);
    const auto detail = [&] { return with_coloring(inst, kind, c); };
    rec.record("lemma5-identity-a", rep.identity_a, detail);
    rec.record("lemma5-identity-b", rep.identity_b, detail);
    rec.record("lemma5-identity-c", rep.identity_c, detail);
    rec.record("lemma5-identity-per-vertex", rep.identity_per_vertex, detail);
  }
  for (const Coloring& c : nash_equilibria(inst.h, inst.k, kind, false, cfg.max_space)) {
    const Lemma5Report rep = check_lemma5(inst.h, c);
    const auto detail = [&] { return with_coloring(inst, kind, c); };
    rec.record("lemma5-no-profit", rep.no_profit.value_or(false), detail);
    rec.record("lemma5-jhat-bound", rep.jhat_bound.value_or(false), detail);
    rec.record("lemma5-sw-bound", rep.sw_bound.value_or(false), detail);
  }
  check_bound(rec, inst, kind, cfg);
}

void theorem_trial(Recorder& rec, SplitMix64& rng, const SweepConfig& cfg, GameKind kind) {
  const bool nm = kind == GameKind::NonMonochromatic;
  const InstanceShape shape = nm ? InstanceShape{at_least(cfg.r_range, 3), cfg.k_range, true, false}
                                 : InstanceShape{cfg.r_range, cfg.k_range, true, true};
  check_bound(rec, sample_instance(rng, cfg, shape), kind, cfg);
}

}  // namespace

std::string_view to_string(Suite suite) {
  for (const auto& [s, name] : kSuites) {
    if (s == suite) return name;
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [s, n] : kSuites) {
    if (n == name) return s;
  }
  return std::nullopt;
}

std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> out;
  for (const auto& [s, n] : kSuites) out.push_back(n);
  return out;
}

void validate(const SweepConfig& cfg) {
  const auto check = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidParams, what);
  };
  check(cfg.trials >= 1, "trials must be >= 1");
  check(cfg.n_range.lo <= cfg.n_range.hi, "empty n range");
  check(cfg.m_range.lo <= cfg.m_range.hi, "empty m range");
  check(cfg.r_range.lo <= cfg.r_range.hi, "empty r range");
  check(cfg.k_range.lo <= cfg.k_range.hi, "empty k range");
  check(cfg.r_range.lo >= 1, "edge size must be >= 1");
  check(cfg.k_range.lo >= 2, "k must be >= 2");
  check(cfg.r_range.hi <= cfg.n_range.hi, "max edge size exceeds the largest vertex count");
}

bool SweepResult::ok() const { return total_failed() == 0; }

std::uint64_t SweepResult::total_failed() const {
  std::uint64_t n = 0;
  for (const CheckTally& t : checks) n += t.failed;
  return n;
}

std::string SweepResult::to_text() const {
  std::ostringstream os;
  os << "suite: " << cli::to_string(suite) << "\n";
  os << "instances: " << instances << "\n";
  for (const CheckTally& t : checks) {
    os << "  " << t.name << ": " << t.passed << " passed, " << t.failed << " failed\n";
  }
  os << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
  if (counterexample) os << "counterexample:\n" << *counterexample << "\n";
  return os.str();
}

std::string SweepResult::to_json() const {
  json checks_json = json::array();
  for (const CheckTally& t : checks) {
    checks_json.push_back(json{{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}});
  }
  json j{{"suite", cli::to_string(suite)},
         {"instances", instances},
         {"ok", ok()},
         {"checks", std::move(checks_json)}};
  j["counterexample"] = counterexample ? json::parse(*counterexample) : json(nullptr);
  return j.dump(2) + "\n";
}

SweepResult run_sweep(Suite suite, const SweepConfig& cfg) {
  validate(cfg);
  SweepResult result{suite, 0, {}, std::nullopt};
  Recorder rec(result);
  SplitMix64 master(cfg.seed);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng(master.next());
    switch (suite) {
      case Suite::Potential: potential_trial(rec, rng, cfg); break;
      case Suite::Coincidence: coincidence_trial(rec, rng, cfg); break;
      case Suite::Oracle: oracle_trial(rec, rng, cfg, trial); break;
      case Suite::Lemma3: lemma3_trial(rec, rng, cfg); break;
      case Suite::Lemma5: lemma5_trial(rec, rng, cfg); break;
      case Suite::Thm1: theorem_trial(rec, rng, cfg, GameKind::NonMonochromatic); break;
      case Suite::Thm2: theorem_trial(rec, rng, cfg, GameKind::ConflictFree); break;
    }
    ++result.instances;
  }
  return result;
}

}  // namespace hcg::cli
