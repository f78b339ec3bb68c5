#include <algorithm>
#include <numeric>
#include <string>

#include "hcg/error.hpp"
#include "hcg/hypergraph.hpp"
#include "hcg/random.hpp"

namespace hcg {

ConstructionBundle gen_nm_construction(std::size_t r, std::uint32_t k) {
  if (r < 3 || k < 2) {
    throw Error(ErrorCode::InvalidParams, "nm construction needs r >= 3 and k >= 2");
  }
  const std::size_t group = r - 1;
  const std::size_t base = k * group;
  const auto group_of = [&](std::size_t s) { return static_cast<Color>(s / group); };

  // One copy of the base hypergraph: each group together with one outsider.
  std::vector<Edge> base_edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t x = 0; x < base; ++x) {
      if (group_of(x) == i) continue;
      Edge e;
      for (std::size_t s = i * group; s < (i + 1) * group; ++s) e.push_back(static_cast<Vertex>(s));
      e.push_back(static_cast<Vertex>(x));
      base_edges.push_back(std::move(e));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t copy = 0; copy < r; ++copy) {
    const auto offset = static_cast<Vertex>(copy * base);
    for (const Edge& be : base_edges) {
      Edge e = be;
      for (Vertex& v : e) v += offset;
      edges.push_back(std::move(e));
    }
  }
  for (std::size_t s = 0; s < base; ++s) {
    Edge e;
    for (std::size_t copy = 0; copy < r; ++copy) e.push_back(static_cast<Vertex>(copy * base + s));
    edges.push_back(std::move(e));
  }

  const std::size_t n = r * base;
  std::vector<Color> nash(n), optimum(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Color g = group_of(v % base);
    nash[v] = g;
    optimum[v] = v < base ? (g + 1) % k : g;
  }
  return {Hypergraph::build(n, std::move(edges)), Coloring(k, std::move(nash)),
          Coloring(k, std::move(optimum)), std::nullopt, Family::NmLowerBound, true};
}

ConstructionBundle gen_cf_partite(std::size_t r, std::uint32_t k) {
  if (r < 2 || k < 2) {
    throw Error(ErrorCode::InvalidParams, "cf partite construction needs r >= 2 and k >= 2");
  }
  std::vector<Edge> edges;
  std::vector<std::size_t> pick(r, 0);  // odometer over transversals
  while (true) {
    Edge e(r);
    for (std::size_t i = 0; i < r; ++i) e[i] = static_cast<Vertex>(i * k + pick[i]);
    edges.push_back(std::move(e));
    std::size_t pos = r;
    while (pos > 0 && ++pick[pos - 1] == k) pick[--pos] = 0;
    if (pos == 0) break;
  }

  const std::size_t n = r * k;
  std::vector<Color> nash(n), partite(n);
  for (std::size_t v = 0; v < n; ++v) {
    nash[v] = static_cast<Color>(v % k);
    partite[v] = static_cast<Color>(std::min<std::size_t>(v / k, k - 1));
  }
  Coloring by_part(k, std::move(partite));
  std::optional<Coloring> alt;
  if (k < r) alt = by_part;
  return {Hypergraph::build(n, std::move(edges)), Coloring(k, std::move(nash)), by_part,
          std::move(alt), Family::CfPartite, true};
}

ConstructionBundle gen_single_edge(std::size_t r, std::uint32_t k) {
  if (r < 1 || k < 2) {
    throw Error(ErrorCode::InvalidParams, "single edge construction needs r >= 1 and k >= 2");
  }
  Edge e(r);
  std::iota(e.begin(), e.end(), Vertex{0});
  std::vector<Color> nash(r), optimum(r);
  for (std::size_t t = 0; t < r; ++t) {
    nash[t] = t < 2 * static_cast<std::size_t>(k) ? static_cast<Color>(t / 2) : 0;
    optimum[t] = t + 1 < k ? static_cast<Color>(t) : k - 1;
  }
  return {Hypergraph::build(r, {std::move(e)}), Coloring(k, std::move(nash)),
          Coloring(k, std::move(optimum)), std::nullopt, Family::SingleEdge,
          k <= r / 2};
}

namespace {

Edge random_subset(SplitMix64& rng, std::vector<Vertex>& pool, std::size_t r) {
  // pool is reused across calls; any permutation of [0, n) is a valid start.
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(r));
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

Hypergraph gen_random_uniform(std::size_t n, std::size_t m, std::size_t r, std::uint64_t seed) {
  return gen_random_mixed(n, m, r, r, seed);
}

Hypergraph gen_random_mixed(std::size_t n, std::size_t m, std::size_t r_min, std::size_t r_max,
                            std::uint64_t seed) {
  if (r_min == 0 || r_min > r_max || r_max > n) {
    throw Error(ErrorCode::InvalidParams, "edge size must satisfy 1 <= r <= n (n = " +
                                              std::to_string(n) + ")");
  }
  SplitMix64 rng(seed);
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = r_min == r_max ? r_min : rng.in_range(r_min, r_max);
    edges.push_back(random_subset(rng, pool, r));
  }
  return Hypergraph::build(n, std::move(edges));
}

}  // namespace hcg
