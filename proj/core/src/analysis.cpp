#include "hcg/analysis.hpp"

#include <algorithm>
#include <string>

#include "hcg/dynamics.hpp"
#include "hcg/error.hpp"

namespace hcg {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

std::uint64_t search_space_size(std::size_t n, std::uint32_t k, bool canonical) {
  if (!canonical) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total = sat_mul(total, k);
    return total;
  }
  // Stirling numbers of the second kind, row by row: S(i, j) for j <= k.
  const std::size_t cols = std::min<std::size_t>(n, k);
  std::vector<std::uint64_t> row(cols + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, cols); j >= 1; --j) {
      row[j] = sat_add(sat_mul(j, row[j]), row[j - 1]);
    }
    row[0] = 0;
  }
  std::uint64_t total = 0;
  for (std::uint64_t s : row) total = sat_add(total, s);
  return total;
}

void enumerate_colorings(std::size_t n, std::uint32_t k, bool canonical,
                         const std::function<bool(const Coloring&)>& visit,
                         std::uint64_t limit) {
  if (k == 0) throw Error(ErrorCode::InvalidParams, "k must be >= 1");
  const std::uint64_t size = search_space_size(n, k, canonical);
  if (size > limit) {
    throw Error(ErrorCode::SearchSpaceExceeded,
                (size == UINT64_MAX ? std::string("more than 2^64") : std::to_string(size)) +
                    " colorings exceed the limit of " + std::to_string(limit));
  }
  Coloring c = Coloring::uniform(k, n);
  // prefix_max[i] = max(c[0..i]); only maintained in canonical mode.
  std::vector<Color> prefix_max(n, 0);
  while (true) {
    if (!visit(c)) return;
    std::size_t pos = n;
    while (pos > 0) {
      const std::size_t i = pos - 1;
      const Color cap = canonical ? (i == 0 ? 0 : std::min<Color>(prefix_max[i - 1] + 1, k - 1))
                                  : k - 1;
      if (c[static_cast<Vertex>(i)] < cap) break;
      --pos;
    }
    if (pos == 0) return;
    const std::size_t i = pos - 1;
    c.set(static_cast<Vertex>(i), c[static_cast<Vertex>(i)] + 1);
    for (std::size_t j = i + 1; j < n; ++j) c.set(static_cast<Vertex>(j), 0);
    if (canonical) {
      prefix_max[i] = std::max(i == 0 ? Color{0} : prefix_max[i - 1], c[static_cast<Vertex>(i)]);
      for (std::size_t j = i + 1; j < n; ++j) prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<Coloring> all_colorings(std::size_t n, std::uint32_t k, bool canonical,
                                    std::uint64_t limit) {
  std::vector<Coloring> out;
  enumerate_colorings(n, k, canonical, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  }, limit);
  return out;
}

Coloring canonicalize(const Coloring& c) {
  std::vector<Color> relabel(c.num_colors(), UINT32_MAX);
  std::vector<Color> out(c.size());
  Color next = 0;
  for (std::size_t v = 0; v < c.size(); ++v) {
    Color& target = relabel[c[static_cast<Vertex>(v)]];
    if (target == UINT32_MAX) target = next++;
    out[v] = target;
  }
  return Coloring(c.num_colors(), std::move(out));
}

std::vector<Coloring> nash_equilibria(const Hypergraph& h, std::uint32_t k, GameKind kind,
                                      bool canonical, std::uint64_t limit) {
  std::vector<Coloring> out;
  enumerate_colorings(h.num_vertices(), k, canonical, [&](const Coloring& c) {
    if (is_nash(h, c, kind)) out.push_back(c);
    return true;
  }, limit);
  return out;
}

AnalysisReport exact_analysis(const Hypergraph& h, std::uint32_t k, GameKind kind,
                              bool canonical, std::uint64_t limit) {
  if (h.num_vertices() == 0) throw Error(ErrorCode::InvalidParams, "hypergraph has no vertices");
  if (k == 0) throw Error(ErrorCode::InvalidParams, "k must be >= 1");

  std::optional<Coloring> opt, worst, best;
  std::int64_t opt_sw = 0, worst_sw = 0, best_sw = 0;
  std::uint64_t scanned = 0, num_nash = 0;
  enumerate_colorings(h.num_vertices(), k, canonical, [&](const Coloring& c) {
    ++scanned;
    const std::int64_t sw = social_welfare(h, c, kind);
    if (!opt || sw > opt_sw) {
      opt = c;
      opt_sw = sw;
    }
    if (is_nash(h, c, kind)) {
      ++num_nash;
      if (!worst || sw < worst_sw) {
        worst = c;
        worst_sw = sw;
      }
      if (!best || sw > best_sw) {
        best = c;
        best_sw = sw;
      }
    }
    return true;
  }, limit);

  if (!worst) throw Error(ErrorCode::Internal, "exhaustive scan found no Nash equilibrium");
  return AnalysisReport{kind,     k,         canonical,       scanned,  opt_sw, *opt,
                        worst_sw, *worst,    best_sw,         *best,    num_nash,
                        welfare_ratio(opt_sw, worst_sw)};
}

}  // namespace hcg
