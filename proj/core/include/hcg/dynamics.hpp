#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hcg/coloring.hpp"
#include "hcg/game.hpp"
#include "hcg/hypergraph.hpp"

namespace hcg {

std::int64_t deviation_gain(const Hypergraph& h, const Coloring& c, Vertex v, Color i,
                            GameKind kind);

struct BestResponse {
  Color color;
  std::int64_t gain;
  friend bool operator==(const BestResponse&, const BestResponse&) = default;
};

// Keeps c[v] when no color strictly improves, else the smallest color with
// the largest gain.
BestResponse best_response(const Hypergraph& h, const Coloring& c, Vertex v,
                           GameKind kind);

bool is_nash(const Hypergraph& h, const Coloring& c, GameKind kind);

struct ZeroInit {};
struct RandomInit {
  std::uint64_t seed;
};
using InitialColoring = std::variant<Coloring, ZeroInit, RandomInit>;

struct RoundRobin {};
struct RandomOrder {
  std::uint64_t seed;  // vertex order is reshuffled every sweep
};
using Schedule = std::variant<RoundRobin, RandomOrder>;

struct BrStep {
  Vertex vertex;
  Color old_color;
  Color new_color;
  std::int64_t gain;
  std::int64_t potential_after;
  friend bool operator==(const BrStep&, const BrStep&) = default;
};

struct BrTrace {
  std::vector<BrStep> steps;
  Coloring final;
  bool converged = false;
  std::size_t improving_steps = 0;
  std::size_t sweeps = 0;
};

struct BrOptions {
  InitialColoring init = ZeroInit{};
  Schedule schedule = RoundRobin{};
  // Defaults to potential_range + 1, which always suffices with round-robin.
  std::optional<std::size_t> max_sweeps;
};

// Best-response dynamics executing only strictly improving moves. Stops after
// a full sweep without an improving move or after max_sweeps sweeps;
// converged is true exactly when the final coloring is an equilibrium.
// Throws InvalidParams for k == 0, max_sweeps == 0 or an init coloring
// with a different palette size.
BrTrace br_dynamics(const Hypergraph& h, std::uint32_t k, GameKind kind,
                    const BrOptions& options = {});

}  // namespace hcg
