#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcg/game.hpp"

namespace hcg::cli {

struct Range {
  std::size_t lo;
  std::size_t hi;
};

enum class Suite { Potential, Coincidence, Oracle, Lemma3, Lemma5, Thm1, Thm2 };

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);
std::vector<std::string_view> suite_names();

struct SweepConfig {
  std::size_t trials = 100;
  Range n_range{3, 8};
  Range m_range{1, 12};
  Range r_range{2, 4};
  Range k_range{2, 3};
  std::optional<GameKind> kind;  // both kinds when unset
  std::uint64_t seed = 0;
  // Cap on k^n for suites that enumerate colorings.
  std::uint64_t max_space = 20'000;
  // Random colorings checked per instance by the lemma suites.
  std::size_t colorings_per_instance = 1000;
};

// Throws InvalidParams when a range is empty, trials == 0, k < 2 or the edge
// sizes can exceed every vertex count. Sampled n is raised to the edge size.
void validate(const SweepConfig& config);

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct SweepResult {
  Suite suite;
  std::uint64_t instances = 0;
  std::vector<CheckTally> checks;
  // JSON bundle for the first violation: enough to replay with eval/exact.
  std::optional<std::string> counterexample;

  bool ok() const;
  std::uint64_t total_failed() const;
  std::string to_text() const;
  std::string to_json() const;
};

SweepResult run_sweep(Suite suite, const SweepConfig& config);

}  // namespace hcg::cli
