#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hcg/coloring.hpp"

namespace hcg {

using Edge = std::vector<Vertex>;
using EdgeIndex = std::size_t;

// Vertex count plus an ordered multiset of hyperedges. Each edge is non-empty,
// strictly increasing, and within [0, num_vertices). Repeated edges are legal
// and weight the utilities accordingly. Immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Sorts each edge, keeps edge order. Throws EmptyEdge, VertexOutOfRange or
  // DuplicateVertexInEdge.
  static Hypergraph build(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  // Edges containing v in edge-list order. Throws VertexOutOfRange.
  std::span<const EdgeIndex> incident_edges(Vertex v) const;
  std::size_t degree(Vertex v) const { return incident_edges(v).size(); }
  std::size_t total_degree() const noexcept;

  std::size_t min_edge_size() const noexcept;
  std::size_t max_edge_size() const noexcept;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

struct UniformityClass {
  enum class Kind { Uniform, Minimal, General };
  Kind kind = Kind::General;
  std::size_t r = 0;  // 0 for General

  // True for Uniform(r') or Minimal(r') with r' >= r.
  bool is_at_least(std::size_t min_r) const noexcept {
    return kind != Kind::General && r >= min_r;
  }
  friend bool operator==(const UniformityClass&, const UniformityClass&) = default;
};

// Uniform(r) when every edge has size r, Minimal(min size) otherwise, General
// only for an edgeless hypergraph.
UniformityClass classify(const Hypergraph& h);

enum class Family { NmLowerBound, CfPartite, SingleEdge };
std::string_view to_string(Family family);

struct ConstructionBundle {
  Hypergraph hypergraph;
  Coloring nash_witness;
  Coloring optimum_witness;
  std::optional<Coloring> alt_witness;
  Family family;
  // False only for gen_single_edge with k > floor(r/2).
  bool nash_guaranteed = true;
};

// r disjoint copies of the complete "group plus one outsider" hypergraph on k
// groups of r-1 vertices, glued by one edge through the r copies of each base
// vertex. Copy j of base vertex s is vertex j*k*(r-1) + s and s belongs to
// group s / (r-1). The Nash witness colors every vertex by its group; the
// optimum witness cyclically shifts the colors of copy 0.
// Requires r >= 3, k >= 2.
ConstructionBundle gen_nm_construction(std::size_t r, std::uint32_t k);

// Complete r-partite r-uniform hypergraph with parts of size k. Vertex j of
// part i is i*k + j; edges are all k^r transversals in lexicographic order.
// Nash witness colors v(i,j) with j. Optimum witness colors part i with i when
// k >= r; when k < r it equals the alt witness, which colors part i with
// min(i, k-1). Requires r >= 2, k >= 2.
ConstructionBundle gen_cf_partite(std::size_t r, std::uint32_t k);

// One edge on r vertices. Nash witness: vertices 2i and 2i+1 get color i for
// i < k, the rest color 0, so every color class has size >= 2 when
// k <= r/2. Optimum witness: vertices 0..k-2 get distinct colors, the rest
// k-1. Requires r >= 1, k >= 2.
ConstructionBundle gen_single_edge(std::size_t r, std::uint32_t k);

// m edges, each a uniform r-subset of [0, n) drawn by a partial Fisher-Yates
// shuffle driven by SplitMix64(seed). Edges are drawn with replacement.
// Throws InvalidParams if r == 0 or r > n.
Hypergraph gen_random_uniform(std::size_t n, std::size_t m, std::size_t r,
                              std::uint64_t seed);

// Like gen_random_uniform, but each edge size is drawn uniformly from
// [r_min, r_max] first.
Hypergraph gen_random_mixed(std::size_t n, std::size_t m, std::size_t r_min,
                            std::size_t r_max, std::uint64_t seed);

}  // namespace hcg
