#include "hcg/dynamics.hpp"

#include <numeric>
#include <string>

#include "hcg/error.hpp"
#include "hcg/random.hpp"

namespace hcg {

namespace {

void check_color(const Coloring& c, Color i) {
  if (i >= c.num_colors()) {
    throw Error(ErrorCode::ColorOutOfRange,
                "color " + std::to_string(i) + " with k = " + std::to_string(c.num_colors()));
  }
}

BestResponse pick(const std::vector<std::int64_t>& u, Color current) {
  BestResponse best{current, 0};
  for (Color i = 0; i < u.size(); ++i) {
    const std::int64_t gain = u[i] - u[current];
    if (gain > best.gain) best = {i, gain};
  }
  return best;
}

}  // namespace

std::int64_t deviation_gain(const Hypergraph& h, const Coloring& c, Vertex v, Color i,
                            GameKind kind) {
  check_color(c, i);
  if (v >= h.num_vertices()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  if (i == c[v]) return 0;
  return utility(h, c.with(v, i), v, kind) - utility(h, c, v, kind);
}

BestResponse best_response(const Hypergraph& h, const Coloring& c, Vertex v, GameKind kind) {
  const auto u = deviation_utilities(h, c, v, kind);
  return pick(u, c[v]);
}

bool is_nash(const Hypergraph& h, const Coloring& c, GameKind kind) {
  check_matches(h, c);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (best_response(h, c, v, kind).gain > 0) return false;
  }
  return true;
}

BrTrace br_dynamics(const Hypergraph& h, std::uint32_t k, GameKind kind, const BrOptions& options) {
  if (k == 0) throw Error(ErrorCode::InvalidParams, "k must be >= 1");
  const std::size_t max_sweeps =
      options.max_sweeps.value_or(static_cast<std::size_t>(potential_range(h, k, kind)) + 1);
  if (max_sweeps == 0) throw Error(ErrorCode::InvalidParams, "max_sweeps must be >= 1");

  const std::size_t n = h.num_vertices();
  Coloring c = std::visit(
      [&](const auto& init) -> Coloring {
        using T = std::decay_t<decltype(init)>;
        if constexpr (std::is_same_v<T, Coloring>) {
          if (init.num_colors() != k) {
            throw Error(ErrorCode::InvalidParams, "initial coloring uses k = " +
                                                      std::to_string(init.num_colors()) +
                                                      ", expected " + std::to_string(k));
          }
          check_matches(h, init);
          return init;
        } else if constexpr (std::is_same_v<T, ZeroInit>) {
          return Coloring::uniform(k, n);
        } else {
          SplitMix64 rng(init.seed);
          std::vector<Color> colors(n);
          for (Color& x : colors) x = static_cast<Color>(rng.below(k));
          return Coloring(k, std::move(colors));
        }
      },
      options.init);

  std::optional<SplitMix64> order_rng;
  if (const auto* random = std::get_if<RandomOrder>(&options.schedule)) order_rng.emplace(random->seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});

  BrTrace trace{{}, c, false, 0, 0};
  std::int64_t phi = potential(h, c, kind);
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    if (order_rng) {
      for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[order_rng->below(i)]);
    }
    ++trace.sweeps;
    bool moved = false;
    for (Vertex v : order) {
      const BestResponse br = best_response(h, c, v, kind);
      if (br.gain <= 0) continue;
      const Color old = c[v];
      c.set(v, br.color);
      phi += br.gain;
      trace.steps.push_back({v, old, br.color, br.gain, phi});
      moved = true;
    }
    if (!moved) {
      trace.converged = true;
      break;
    }
  }
  // A budget that ran out on a sweep which happened to finish at a fixed point
  // still counts as converged.
  if (!trace.converged) trace.converged = is_nash(h, c, kind);
  trace.improving_steps = trace.steps.size();
  trace.final = std::move(c);
  return trace;
}

}  // namespace hcg
