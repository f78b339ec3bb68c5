#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hcg/coloring.hpp"
#include "hcg/hypergraph.hpp"

namespace hcg {

enum class GameKind {
  NonMonochromatic,  // u_v = incident edges carrying at least two colors
  ConflictFree,      // u_v = incident edges where v's color appears once
};

std::string_view to_string(GameKind kind);
GameKind parse_game_kind(std::string_view text);  // "nm" / "cf"

// Throws LengthMismatch unless c colors exactly the vertices of h.
void check_matches(const Hypergraph& h, const Coloring& c);

// Sorted distinct colors appearing on e.
std::vector<Color> edge_colors(const Coloring& c, const Edge& e);

std::int64_t utility(const Hypergraph& h, const Coloring& c, Vertex v, GameKind kind);

// Utility v would get for each of the k colors, everyone else fixed. Entry
// c[v] equals utility(h, c, v, kind).
std::vector<std::int64_t> deviation_utilities(const Hypergraph& h, const Coloring& c,
                                              Vertex v, GameKind kind);

std::vector<std::int64_t> utilities(const Hypergraph& h, const Coloring& c, GameKind kind);

std::int64_t social_welfare(const Hypergraph& h, const Coloring& c, GameKind kind);

// NM: number of non-monochromatic edges. CF: sum over edges of |c(e)|.
std::int64_t potential(const Hypergraph& h, const Coloring& c, GameKind kind);

// Largest possible potential increase: |E| for NM, sum_e (min(|e|, k) - 1)
// for CF. Bounds the length of every improvement path.
std::int64_t potential_range(const Hypergraph& h, std::uint32_t k, GameKind kind);

}  // namespace hcg
