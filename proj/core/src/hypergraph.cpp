#include "hcg/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hcg/error.hpp"

namespace hcg {

Coloring::Coloring(std::uint32_t num_colors, std::vector<Color> colors)
    : num_colors_(num_colors), colors_(std::move(colors)) {
  if (num_colors_ == 0) throw Error(ErrorCode::InvalidParams, "coloring needs k >= 1");
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] >= num_colors_) {
      throw Error(ErrorCode::ColorOutOfRange,
                  "vertex " + std::to_string(v) + " has color " + std::to_string(colors_[v]) +
                      " but k = " + std::to_string(num_colors_));
    }
  }
}

Coloring Coloring::uniform(std::uint32_t num_colors, std::size_t num_vertices, Color color) {
  return Coloring(num_colors, std::vector<Color>(num_vertices, color));
}

Coloring Coloring::with(Vertex v, Color color) const {
  Coloring out = *this;
  out.set(v, color);
  return out;
}

void Coloring::set(Vertex v, Color color) {
  if (v >= colors_.size()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  if (color >= num_colors_) {
    throw Error(ErrorCode::ColorOutOfRange, "color " + std::to_string(color));
  }
  colors_[v] = color;
}

Hypergraph Hypergraph::build(std::size_t num_vertices, std::vector<Edge> edges) {
  Hypergraph h;
  h.num_vertices_ = num_vertices;
  h.incidence_.resize(num_vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Edge& edge = edges[e];
    if (edge.empty()) throw Error(ErrorCode::EmptyEdge, "edge " + std::to_string(e));
    std::sort(edge.begin(), edge.end());
    if (edge.back() >= num_vertices) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(e) + " contains vertex " +
                      std::to_string(edge.back()) + " >= " + std::to_string(num_vertices));
    }
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw Error(ErrorCode::DuplicateVertexInEdge, "edge " + std::to_string(e));
    }
    for (Vertex v : edge) h.incidence_[v].push_back(e);
  }
  h.edges_ = std::move(edges);
  return h;
}

std::span<const EdgeIndex> Hypergraph::incident_edges(Vertex v) const {
  if (v >= num_vertices_) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  return incidence_[v];
}

std::size_t Hypergraph::total_degree() const noexcept {
  return std::accumulate(edges_.begin(), edges_.end(), std::size_t{0},
                         [](std::size_t acc, const Edge& e) { return acc + e.size(); });
}

std::size_t Hypergraph::min_edge_size() const noexcept {
  std::size_t best = 0;
  for (const Edge& e : edges_) {
    if (best == 0 || e.size() < best) best = e.size();
  }
  return best;
}

std::size_t Hypergraph::max_edge_size() const noexcept {
  std::size_t best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.size());
  return best;
}

UniformityClass classify(const Hypergraph& h) {
  if (h.num_edges() == 0) return {};
  const std::size_t lo = h.min_edge_size();
  const std::size_t hi = h.max_edge_size();
  return {lo == hi ? UniformityClass::Kind::Uniform : UniformityClass::Kind::Minimal, lo};
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::NmLowerBound: return "nm-lb";
    case Family::CfPartite: return "cf-partite";
    case Family::SingleEdge: return "single-edge";
  }
  return "unknown";
}

}  // namespace hcg
