#include <algorithm>
#include <string>
#include <utility>

#include "hcg/analysis.hpp"
#include "hcg/dynamics.hpp"
#include "hcg/error.hpp"

namespace hcg {

namespace {

// (color, multiplicity) pairs for the vertices of e, in no particular order.
using ColorCounts = std::vector<std::pair<Color, std::int64_t>>;

ColorCounts count_colors(const Coloring& c, const Edge& e) {
  ColorCounts counts;
  for (Vertex v : e) {
    auto it = std::find_if(counts.begin(), counts.end(),
                           [&](const auto& p) { return p.first == c[v]; });
    if (it == counts.end()) {
      counts.emplace_back(c[v], 1);
    } else {
      ++it->second;
    }
  }
  return counts;
}

std::int64_t multiplicity(const ColorCounts& counts, Color color) {
  for (const auto& [col, n] : counts) {
    if (col == color) return n;
  }
  return 0;
}

}  // namespace

DDecomposition d_decomposition(const Hypergraph& h, const Coloring& c) {
  check_matches(h, c);
  DDecomposition out;
  out.per_vertex.resize(h.num_vertices());
  for (const Edge& e : h.edges()) {
    const ColorCounts counts = count_colors(c, e);
    for (Vertex v : e) {
      VertexDCounts& d = out.per_vertex[v];
      if (counts.size() == 1) {
        ++d.d2;
        continue;
      }
      bool counted = false;
      if (counts.size() == 2) {
        const auto& other = counts[0].first == c[v] ? counts[1] : counts[0];
        if (multiplicity(counts, c[v]) == 1) {
          ++d.d1;
          ++d.d1_by_color[other.first];
          counted = true;
        }
        if (other.second == 1) {
          ++d.d3;
          counted = true;
        }
      }
      if (!counted) ++d.d4;
    }
  }
  for (const VertexDCounts& d : out.per_vertex) {
    out.D1 += d.d1;
    out.D2 += d.d2;
    out.D3 += d.d3;
    out.D4 += d.d4;
  }
  return out;
}

JStats j_stats(const Hypergraph& h, const Coloring& c) {
  check_matches(h, c);
  JStats out;
  out.j_per_edge.reserve(h.num_edges());
  for (const Edge& e : h.edges()) {
    std::int64_t j = 0;
    for (const auto& [color, n] : count_colors(c, e)) {
      if (n >= 2) j += n;
    }
    out.j_per_edge.push_back(j);
    out.j_hat += j;
  }
  return out;
}

LgmTotals lgm_totals(const Hypergraph& h, const Coloring& c) {
  check_matches(h, c);
  const std::int64_t k = c.num_colors();
  LgmTotals out;
  for (const Edge& e : h.edges()) {
    const ColorCounts counts = count_colors(c, e);
    const auto distinct = static_cast<std::int64_t>(counts.size());
    for (Vertex v : e) {
      if (multiplicity(counts, c[v]) == 1) {
        // others use distinct - 1 colors, none of them c(v)
        out.L += distinct - 1;
        out.M += k - distinct;
      } else {
        out.G += k - distinct;
      }
    }
  }
  return out;
}

LgmTotals lgm_at(const Hypergraph& h, const Coloring& c, Vertex v, Color i) {
  check_matches(h, c);
  LgmTotals out;
  for (EdgeIndex ei : h.incident_edges(v)) {
    const ColorCounts counts = count_colors(c, h.edge(ei));
    const bool alone = multiplicity(counts, c[v]) == 1;
    const std::int64_t others_with_i = multiplicity(counts, i) - (i == c[v] ? 1 : 0);
    if (alone) {
      if (others_with_i > 0) ++out.L;
      if (others_with_i == 0 && i != c[v]) ++out.M;
    } else if (others_with_i == 0) {
      ++out.G;
    }
  }
  return out;
}

Lemma3Report check_lemma3(const Hypergraph& h, const Coloring& c) {
  check_matches(h, c);
  const UniformityClass cls = classify(h);
  if (!cls.is_at_least(3)) {
    throw Error(ErrorCode::NotApplicable, "needs an r-minimal hypergraph with r >= 3");
  }
  const auto r = static_cast<std::int64_t>(cls.r);
  const std::int64_t k = c.num_colors();
  const DDecomposition d = d_decomposition(h, c);

  Lemma3Report rep{cls.r, d.D1, d.D2, d.D3, d.D4, false, false, std::nullopt, std::nullopt};
  rep.part1 = d.D1 + d.D2 + d.D3 + d.D4 == static_cast<std::int64_t>(h.total_degree());
  rep.part2 = d.D3 >= (r - 1) * d.D1;
  if (is_nash(h, c, GameKind::NonMonochromatic)) {
    rep.part3 = d.D1 >= (k - 1) * d.D2;
    bool ok = true;
    for (Vertex v = 0; v < h.num_vertices() && ok; ++v) {
      const VertexDCounts& dv = d.per_vertex[v];
      for (Color i = 0; i < c.num_colors(); ++i) {
        if (i == c[v]) continue;
        const auto it = dv.d1_by_color.find(i);
        const std::int64_t d1i = it == dv.d1_by_color.end() ? 0 : it->second;
        if (d1i < dv.d2) {
          ok = false;
          break;
        }
      }
    }
    rep.per_vertex = ok;
  }
  return rep;
}

Lemma5Report check_lemma5(const Hypergraph& h, const Coloring& c) {
  check_matches(h, c);
  const UniformityClass cls = classify(h);
  if (cls.kind != UniformityClass::Kind::Uniform) {
    throw Error(ErrorCode::NotApplicable, "needs an r-uniform hypergraph");
  }
  const auto r = static_cast<std::int64_t>(cls.r);
  const std::int64_t k = c.num_colors();
  const auto m = static_cast<std::int64_t>(h.num_edges());

  Lemma5Report rep{};
  rep.r = cls.r;
  rep.j_hat = j_stats(h, c).j_hat;
  rep.sw = social_welfare(h, c, GameKind::ConflictFree);
  rep.phi = potential(h, c, GameKind::ConflictFree);
  rep.lgm = lgm_totals(h, c);
  const LgmTotals& t = rep.lgm;
  rep.identity_a = t.L + t.M == m * r * (k - 1) - rep.j_hat * (k - 1);
  rep.identity_b = t.G + t.M == r * k * m - r * rep.phi;
  rep.identity_c = (k - 1) * rep.sw == t.L + t.M;

  const auto u = utilities(h, c, GameKind::ConflictFree);
  const bool nash = is_nash(h, c, GameKind::ConflictFree);
  rep.identity_per_vertex = true;
  bool no_profit = true;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    for (Color i = 0; i < c.num_colors(); ++i) {
      if (i == c[v]) continue;
      const LgmTotals at = lgm_at(h, c, v, i);
      if (at.L + at.M != u[v]) rep.identity_per_vertex = false;
      if (at.L < at.G) no_profit = false;
    }
  }
  if (nash) {
    rep.no_profit = no_profit;
    // j_hat <= m r (r-1) / (r/2 + k - 1), cleared of fractions
    rep.jhat_bound = rep.j_hat * (r + 2 * k - 2) <= 2 * m * r * (r - 1);
    rep.sw_bound = rep.sw * (2 * k + r - 2) >= m * r * (2 * k - r);
  }
  return rep;
}

std::string_view to_string(BoundRegime regime) {
  switch (regime) {
    case BoundRegime::NmMinimal: return "nm-minimal";
    case BoundRegime::CfManyColors: return "cf-k>=r";
    case BoundRegime::CfMidColors: return "cf-r/2<k<r";
    case BoundRegime::CfFewColors: return "cf-k<=r/2";
  }
  return "unknown";
}

BoundCheck theorem_bound(const Hypergraph& h, std::uint32_t k_colors, GameKind kind) {
  if (k_colors < 2) throw Error(ErrorCode::NotApplicable, "bounds need k >= 2");
  const UniformityClass cls = classify(h);
  const auto k = static_cast<std::int64_t>(k_colors);
  const auto r = static_cast<std::int64_t>(cls.r);
  if (kind == GameKind::NonMonochromatic) {
    if (!cls.is_at_least(3)) {
      throw Error(ErrorCode::NotApplicable, "NM bound needs an r-minimal hypergraph with r >= 3");
    }
    return {false, Rational(1) + Rational(1, (k - 1) * r), BoundRegime::NmMinimal};
  }
  if (cls.kind != UniformityClass::Kind::Uniform) {
    throw Error(ErrorCode::NotApplicable, "CF bound needs an r-uniform hypergraph");
  }
  if (2 * k <= r) return {false, ExtendedRational::infinity(), BoundRegime::CfFewColors};
  const Rational many(2 * k + r - 2, 2 * k - r);
  if (k >= r) return {false, many, BoundRegime::CfManyColors};
  return {false, Rational(k - 1, r) * many, BoundRegime::CfMidColors};
}

BoundCheck check_theorem_bounds(const Hypergraph& h, const AnalysisReport& report) {
  BoundCheck check = theorem_bound(h, report.k, report.kind);
  check.holds = report.poa <= check.bound && report.poa >= ExtendedRational(Rational(1));
  return check;
}

}  // namespace hcg
