#include "hcg/game.hpp"

#include <algorithm>
#include <string>

#include "hcg/error.hpp"

namespace hcg {

std::string_view to_string(GameKind kind) {
  return kind == GameKind::NonMonochromatic ? "nm" : "cf";
}

GameKind parse_game_kind(std::string_view text) {
  if (text == "nm") return GameKind::NonMonochromatic;
  if (text == "cf") return GameKind::ConflictFree;
  throw Error(ErrorCode::InvalidParams, "unknown game kind '" + std::string(text) + "'");
}

void check_matches(const Hypergraph& h, const Coloring& c) {
  if (c.size() != h.num_vertices()) {
    throw Error(ErrorCode::LengthMismatch, "coloring has " + std::to_string(c.size()) +
                                               " entries, hypergraph has " +
                                               std::to_string(h.num_vertices()) + " vertices");
  }
}

std::vector<Color> edge_colors(const Coloring& c, const Edge& e) {
  std::vector<Color> out;
  out.reserve(e.size());
  for (Vertex v : e) {
    if (v >= c.size()) throw Error(ErrorCode::LengthMismatch, "edge vertex outside coloring");
    out.push_back(c[v]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool non_monochromatic(const Coloring& c, const Edge& e) {
  const Color first = c[e.front()];
  return std::any_of(e.begin() + 1, e.end(), [&](Vertex u) { return c[u] != first; });
}

bool alone_in_edge(const Coloring& c, const Edge& e, Vertex v) {
  return std::none_of(e.begin(), e.end(), [&](Vertex u) { return u != v && c[u] == c[v]; });
}

void check_vertex(const Hypergraph& h, Vertex v) {
  if (v >= h.num_vertices()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
}

}  // namespace

std::int64_t utility(const Hypergraph& h, const Coloring& c, Vertex v, GameKind kind) {
  check_matches(h, c);
  check_vertex(h, v);
  std::int64_t u = 0;
  for (EdgeIndex ei : h.incident_edges(v)) {
    const Edge& e = h.edge(ei);
    u += kind == GameKind::NonMonochromatic ? non_monochromatic(c, e) : alone_in_edge(c, e, v);
  }
  return u;
}

std::vector<std::int64_t> deviation_utilities(const Hypergraph& h, const Coloring& c, Vertex v,
                                              GameKind kind) {
  check_matches(h, c);
  check_vertex(h, v);
  const std::uint32_t k = c.num_colors();
  // utility(i) = base - penalty[i]
  std::int64_t base = 0;
  std::vector<std::int64_t> penalty(k, 0);
  std::vector<std::size_t> stamp(k, SIZE_MAX);
  for (EdgeIndex ei : h.incident_edges(v)) {
    const Edge& e = h.edge(ei);
    if (e.size() == 1) {
      base += kind == GameKind::ConflictFree;
      continue;
    }
    if (kind == GameKind::NonMonochromatic) {
      // Switching to i leaves e monochromatic only if every other vertex has i.
      Color other = 0;
      bool seen = false, mixed = false;
      for (Vertex u : e) {
        if (u == v) continue;
        if (!seen) {
          other = c[u];
          seen = true;
        } else if (c[u] != other) {
          mixed = true;
          break;
        }
      }
      ++base;
      if (!mixed) ++penalty[other];
    } else {
      ++base;
      for (Vertex u : e) {
        if (u == v || stamp[c[u]] == ei) continue;
        stamp[c[u]] = ei;
        ++penalty[c[u]];
      }
    }
  }
  std::vector<std::int64_t> out(k);
  for (std::uint32_t i = 0; i < k; ++i) out[i] = base - penalty[i];
  return out;
}

std::vector<std::int64_t> utilities(const Hypergraph& h, const Coloring& c, GameKind kind) {
  check_matches(h, c);
  std::vector<std::int64_t> out(h.num_vertices(), 0);
  for (const Edge& e : h.edges()) {
    if (kind == GameKind::NonMonochromatic) {
      if (!non_monochromatic(c, e)) continue;
      for (Vertex v : e) ++out[v];
    } else {
      for (Vertex v : e) out[v] += alone_in_edge(c, e, v);
    }
  }
  return out;
}

std::int64_t social_welfare(const Hypergraph& h, const Coloring& c, GameKind kind) {
  const auto u = utilities(h, c, kind);
  std::int64_t sw = 0;
  for (std::int64_t x : u) sw += x;
  return sw;
}

std::int64_t potential(const Hypergraph& h, const Coloring& c, GameKind kind) {
  check_matches(h, c);
  std::int64_t total = 0;
  if (kind == GameKind::NonMonochromatic) {
    for (const Edge& e : h.edges()) total += non_monochromatic(c, e);
    return total;
  }
  std::vector<std::size_t> stamp(c.num_colors(), SIZE_MAX);
  for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
    for (Vertex v : h.edge(ei)) {
      if (stamp[c[v]] != ei) {
        stamp[c[v]] = ei;
        ++total;
      }
    }
  }
  return total;
}

std::int64_t potential_range(const Hypergraph& h, std::uint32_t k, GameKind kind) {
  if (kind == GameKind::NonMonochromatic) return static_cast<std::int64_t>(h.num_edges());
  std::int64_t range = 0;
  for (const Edge& e : h.edges()) {
    range += static_cast<std::int64_t>(std::min<std::size_t>(e.size(), k)) - 1;
  }
  return range;
}

}  // namespace hcg
