#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "hcg/coloring.hpp"
#include "hcg/game.hpp"
#include "hcg/hypergraph.hpp"
#include "hcg/rational.hpp"

namespace hcg {

inline constexpr std::uint64_t kDefaultSearchLimit = 20'000'000;

// ---------------------------------------------------------------------------
// Exhaustive search

// Number of colorings enumerate_colorings would visit, saturating at
// UINT64_MAX. Canonical count is sum_{j<=k} S(n, j).
std::uint64_t search_space_size(std::size_t n, std::uint32_t k, bool canonical);

// Calls visit for every coloring in lexicographic order (vertex 0 most
// significant). With canonical=true only colorings whose first occurrences of
// colors run 0, 1, 2, ... are visited: one per color-permutation orbit, and
// always the lexicographically smallest member of it. Returning false from
// visit stops the scan. Throws SearchSpaceExceeded above limit.
void enumerate_colorings(std::size_t n, std::uint32_t k, bool canonical,
                         const std::function<bool(const Coloring&)>& visit,
                         std::uint64_t limit = kDefaultSearchLimit);

std::vector<Coloring> all_colorings(std::size_t n, std::uint32_t k, bool canonical,
                                    std::uint64_t limit = kDefaultSearchLimit);

// Relabels colors by order of first appearance.
Coloring canonicalize(const Coloring& c);

std::vector<Coloring> nash_equilibria(const Hypergraph& h, std::uint32_t k,
                                      GameKind kind, bool canonical,
                                      std::uint64_t limit = kDefaultSearchLimit);

struct AnalysisReport {
  GameKind kind;
  std::uint32_t k;
  bool canonical;
  std::uint64_t colorings_scanned;
  std::int64_t optimum_sw;
  Coloring optimum_witness;
  std::int64_t worst_ne_sw;
  Coloring worst_ne_witness;
  std::int64_t best_ne_sw;
  Coloring best_ne_witness;
  std::uint64_t num_nash;  // within the scanned space
  ExtendedRational poa = Rational(1);
};

// Scans every (canonical) coloring. Witnesses are the lexicographically
// smallest colorings attaining each extremum, so both modes agree on them.
// Throws SearchSpaceExceeded, InvalidParams (no vertices, k == 0) and
// Internal if no equilibrium turns up.
AnalysisReport exact_analysis(const Hypergraph& h, std::uint32_t k, GameKind kind,
                              bool canonical,
                              std::uint64_t limit = kDefaultSearchLimit);

// ---------------------------------------------------------------------------
// Diagnostics used in the bound proofs

struct VertexDCounts {
  std::map<Color, std::int64_t> d1_by_color;
  std::int64_t d1 = 0;  // two-colored edges where v alone has its color
  std::int64_t d2 = 0;  // monochromatic edges
  std::int64_t d3 = 0;  // two-colored edges where another vertex alone has its color
  std::int64_t d4 = 0;  // incident edges in none of the above
};

struct DDecomposition {
  std::vector<VertexDCounts> per_vertex;
  std::int64_t D1 = 0, D2 = 0, D3 = 0, D4 = 0;
};

// On an edge of size 2 with two colors both endpoints are lone, so such an
// edge counts in d1 and d3 alike; on larger edges the two sets are disjoint.
// d4 is the number of incident edges in none of d1/d2/d3.
DDecomposition d_decomposition(const Hypergraph& h, const Coloring& c);

struct JStats {
  std::vector<std::int64_t> j_per_edge;  // vertices whose color repeats in e
  std::int64_t j_hat = 0;
};

JStats j_stats(const Hypergraph& h, const Coloring& c);

// Sums of the lose / gain / maintain indicators over (e, v, i) with v in e:
//   L: v is alone with its color on e and i is used by another vertex of e
//   G: v shares its color on e and i is not used by another vertex of e
//   M: v is alone with its color on e and i is not on e at all
struct LgmTotals {
  std::int64_t L = 0;
  std::int64_t G = 0;
  std::int64_t M = 0;
  friend bool operator==(const LgmTotals&, const LgmTotals&) = default;
};

LgmTotals lgm_totals(const Hypergraph& h, const Coloring& c);
// Restricted to one vertex and one deviation color, summed over E(v).
LgmTotals lgm_at(const Hypergraph& h, const Coloring& c, Vertex v, Color i);

// ---------------------------------------------------------------------------
// Checkers

struct Lemma3Report {
  std::size_t r;
  std::int64_t D1, D2, D3, D4;
  bool part1;  // D1 + D2 + D3 + D4 == sum of degrees
  bool part2;  // D3 >= (r - 1) D1
  std::optional<bool> part3;        // D1 >= (k - 1) D2, only at NM equilibria
  std::optional<bool> per_vertex;   // d1^i(v) >= d2(v) for i != c(v), same scope
  bool holds() const { return part1 && part2 && part3.value_or(true) && per_vertex.value_or(true); }
};

// k is the coloring's palette size. Throws NotApplicable unless h is
// r-minimal with r >= 3.
Lemma3Report check_lemma3(const Hypergraph& h, const Coloring& c);

struct Lemma5Report {
  std::size_t r;
  std::int64_t j_hat;
  std::int64_t sw;
  std::int64_t phi;
  LgmTotals lgm;
  bool identity_a;  // L + M == |E| r (k-1) - j_hat (k-1)
  bool identity_b;  // G + M == r k |E| - r phi
  bool identity_c;  // (k-1) SW == L + M
  bool identity_per_vertex;  // sum_e (L+M)(e,v,i) == u_v for all v, i != c(v)
  std::optional<bool> no_profit;   // sum_e L(e,v,i) >= sum_e G(e,v,i), at CF equilibria
  std::optional<bool> jhat_bound;  // j_hat <= |E| r (r-1) / (r/2 + k - 1)
  std::optional<bool> sw_bound;    // SW >= |E| r (2k - r) / (2k + r - 2)
  bool identities() const { return identity_a && identity_b && identity_c && identity_per_vertex; }
  bool holds() const {
    return identities() && no_profit.value_or(true) && jhat_bound.value_or(true) &&
           sw_bound.value_or(true);
  }
};

// Throws NotApplicable unless h is r-uniform.
Lemma5Report check_lemma5(const Hypergraph& h, const Coloring& c);

enum class BoundRegime {
  NmMinimal,        // 1 + 1/((k-1) r)
  CfManyColors,     // k >= r: (2k+r-2)/(2k-r)
  CfMidColors,      // r/2 < k < r: ((k-1)/r) (2k+r-2)/(2k-r)
  CfFewColors,      // k <= r/2: unbounded
};
std::string_view to_string(BoundRegime regime);

struct BoundCheck {
  bool holds;
  ExtendedRational bound;
  BoundRegime regime;
};

// Upper bound for the family h belongs to. Throws NotApplicable when k < 2,
// or for NM unless h is r-minimal with r >= 3, or for CF unless h is uniform.
BoundCheck theorem_bound(const Hypergraph& h, std::uint32_t k, GameKind kind);

// Compares report.poa against theorem_bound(h, report.k, report.kind).
BoundCheck check_theorem_bounds(const Hypergraph& h, const AnalysisReport& report);

}  // namespace hcg
