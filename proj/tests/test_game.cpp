#include <gtest/gtest.h>

#include <numeric>

#include "hcg/analysis.hpp"
#include "hcg/error.hpp"
#include "hcg/game.hpp"
#include "hcg/hypergraph.hpp"
#include "hcg/random.hpp"
#include "oracle.hpp"

using namespace hcg;

namespace {

const Hypergraph kSingle = Hypergraph::build(3, {{0, 1, 2}});

// Random instance with edge sizes in [1, 4] and a random coloring.
struct Sample {
  Hypergraph h;
  Coloring c;
};

Sample sample(SplitMix64& rng) {
  const std::size_t n = rng.in_range(1, 8);
  const std::size_t r_hi = std::min<std::size_t>(n, 4);
  const std::size_t r_lo = rng.in_range(1, r_hi);
  const auto k = static_cast<std::uint32_t>(rng.in_range(1, 4));
  Hypergraph h = gen_random_mixed(n, rng.in_range(0, 10), r_lo, r_hi, rng.next());
  Coloring c = oracle::random_coloring(rng, n, k);
  return {std::move(h), std::move(c)};
}

}  // namespace

TEST(Game, EdgeColors) {
  EXPECT_EQ(edge_colors(Coloring(2, {0, 1, 1}), {0, 1, 2}), (std::vector<Color>{0, 1}));
  EXPECT_EQ(edge_colors(Coloring(3, {2, 2, 2}), {0, 1, 2}).size(), 1u);
  EXPECT_EQ(edge_colors(Coloring(4, {3, 0, 2}), {0, 1, 2}).size(), 3u);
  EXPECT_THROW(edge_colors(Coloring(2, {0, 1}), {0, 1, 2}), Error);
}

TEST(Game, UtilityOnSingleEdge) {
  const Coloring c(2, {0, 1, 1});
  for (Vertex v = 0; v < 3; ++v) {
    EXPECT_EQ(utility(kSingle, c, v, GameKind::NonMonochromatic), 1);
    EXPECT_EQ(utility(kSingle, c, v, GameKind::NonMonochromatic),
              oracle::utility(kSingle, c, v, GameKind::NonMonochromatic));
    EXPECT_EQ(utility(kSingle, c, v, GameKind::ConflictFree),
              oracle::utility(kSingle, c, v, GameKind::ConflictFree));
  }
  EXPECT_EQ(utility(kSingle, c, 0, GameKind::ConflictFree), 1);
  EXPECT_EQ(utility(kSingle, c, 1, GameKind::ConflictFree), 0);
  EXPECT_EQ(utility(kSingle, c, 2, GameKind::ConflictFree), 0);
  EXPECT_EQ(social_welfare(kSingle, c, GameKind::ConflictFree), 1);
}

TEST(Game, UtilityErrors) {
  EXPECT_THROW(utility(kSingle, Coloring(2, {0, 1}), 0, GameKind::ConflictFree), Error);
  try {
    utility(kSingle, Coloring(2, {0, 1, 1}), 5, GameKind::ConflictFree);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexOutOfRange);
  }
  try {
    social_welfare(kSingle, Coloring(2, {0, 1}), GameKind::NonMonochromatic);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(Game, MonochromaticGivesZero) {
  const Hypergraph h = gen_random_uniform(6, 8, 3, 5);
  const Coloring c = Coloring::uniform(3, 6, 2);
  for (GameKind kind : {GameKind::NonMonochromatic, GameKind::ConflictFree}) {
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(utility(h, c, v, kind), 0);
  }
}

TEST(Game, SingletonEdges) {
  const Hypergraph h = Hypergraph::build(2, {{0}, {0, 1}});
  const Coloring c(2, {0, 0});
  EXPECT_EQ(utility(h, c, 0, GameKind::NonMonochromatic), 0);
  EXPECT_EQ(utility(h, c, 0, GameKind::ConflictFree), 1);
  EXPECT_EQ(deviation_utilities(h, c, 0, GameKind::ConflictFree), (std::vector<std::int64_t>{1, 2}));
}

TEST(Game, Potentials) {
  EXPECT_EQ(potential(kSingle, Coloring(2, {0, 0, 0}), GameKind::NonMonochromatic), 0);
  EXPECT_EQ(potential(kSingle, Coloring(2, {0, 0, 0}), GameKind::ConflictFree), 1);
  EXPECT_EQ(potential(kSingle, Coloring(2, {0, 1, 1}), GameKind::NonMonochromatic), 1);
  EXPECT_EQ(potential(kSingle, Coloring(2, {0, 1, 1}), GameKind::ConflictFree), 2);

  const ConstructionBundle b = gen_nm_construction(3, 2);
  std::int64_t non_mono = 0;
  for (const Edge& e : b.hypergraph.edges()) non_mono += oracle::image(b.nash_witness, e).size() > 1;
  EXPECT_EQ(non_mono, 12);
  EXPECT_EQ(potential(b.hypergraph, b.nash_witness, GameKind::NonMonochromatic), 12);
}

TEST(Game, MatchesOracleOnRandomInstances) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [h, c] = sample(rng);
    for (GameKind kind : {GameKind::NonMonochromatic, GameKind::ConflictFree}) {
      const auto u = utilities(h, c, kind);
      for (Vertex v = 0; v < h.num_vertices(); ++v) {
        ASSERT_EQ(u[v], oracle::utility(h, c, v, kind));
        ASSERT_EQ(utility(h, c, v, kind), u[v]);
        const auto dev = deviation_utilities(h, c, v, kind);
        for (Color i = 0; i < c.num_colors(); ++i) {
          ASSERT_EQ(dev[i], oracle::utility(h, c.with(v, i), v, kind));
        }
      }
    }
  }
}

// Both potentials change by exactly the deviator's utility change.
TEST(Game, PotentialDifferenceIdentity) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto [h, c] = sample(rng);
    const auto v = static_cast<Vertex>(rng.below(h.num_vertices()));
    const auto i = static_cast<Color>(rng.below(c.num_colors()));
    const Coloring moved = c.with(v, i);
    for (GameKind kind : {GameKind::NonMonochromatic, GameKind::ConflictFree}) {
      ASSERT_EQ(potential(h, moved, kind) - potential(h, c, kind),
                utility(h, moved, v, kind) - utility(h, c, v, kind));
    }
  }
}

TEST(Game, ColorPermutationInvariance) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [h, c] = sample(rng);
    std::vector<Color> perm(c.num_colors());
    std::iota(perm.begin(), perm.end(), Color{0});
    for (std::size_t a = perm.size(); a > 1; --a) std::swap(perm[a - 1], perm[rng.below(a)]);
    std::vector<Color> mapped(c.size());
    for (std::size_t x = 0; x < c.size(); ++x) mapped[x] = perm[c[static_cast<Vertex>(x)]];
    const Coloring pc(c.num_colors(), mapped);
    for (GameKind kind : {GameKind::NonMonochromatic, GameKind::ConflictFree}) {
      ASSERT_EQ(utilities(h, c, kind), utilities(h, pc, kind));
    }
  }
}

TEST(Game, GraphsMakeBothUtilitiesCoincide) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.in_range(2, 9);
    const Hypergraph h = gen_random_uniform(n, rng.in_range(1, 15), 2, rng.next());
    const Coloring c = oracle::random_coloring(rng, n, static_cast<std::uint32_t>(rng.in_range(1, 4)));
    ASSERT_EQ(utilities(h, c, GameKind::NonMonochromatic), utilities(h, c, GameKind::ConflictFree));
  }
}

TEST(Game, UtilityBoundedByDegreeAndPotentialRange) {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [h, c] = sample(rng);
    for (GameKind kind : {GameKind::NonMonochromatic, GameKind::ConflictFree}) {
      const auto u = utilities(h, c, kind);
      for (Vertex v = 0; v < h.num_vertices(); ++v) {
        ASSERT_GE(u[v], 0);
        ASSERT_LE(u[v], static_cast<std::int64_t>(h.degree(v)));
      }
    }
    const std::int64_t psi = potential(h, c, GameKind::NonMonochromatic);
    ASSERT_GE(psi, 0);
    ASSERT_LE(psi, static_cast<std::int64_t>(h.num_edges()));
    const std::int64_t phi = potential(h, c, GameKind::ConflictFree);
    ASSERT_GE(phi, static_cast<std::int64_t>(h.num_edges()));
    ASSERT_LE(phi - static_cast<std::int64_t>(h.num_edges()),
              potential_range(h, c.num_colors(), GameKind::ConflictFree));
  }
}

// |c(e)| <= r - j(e) + floor(j(e)/2) per edge, so phi <= r|E| - j_hat/2.
TEST(Game, ColorCountBoundViaRepeatedVertices) {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rng.in_range(2, 5);
    const std::size_t n = rng.in_range(r, 8);
    const Hypergraph h = gen_random_uniform(n, rng.in_range(1, 8), r, rng.next());
    const Coloring c = oracle::random_coloring(rng, n, static_cast<std::uint32_t>(rng.in_range(1, 5)));
    const JStats js = j_stats(h, c);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const auto j = js.j_per_edge[e];
      ASSERT_LE(static_cast<std::int64_t>(edge_colors(c, h.edge(e)).size()),
                static_cast<std::int64_t>(r) - j + j / 2);
    }
    ASSERT_LE(2 * potential(h, c, GameKind::ConflictFree),
              2 * static_cast<std::int64_t>(r * h.num_edges()) - js.j_hat);
  }
}

TEST(Game, ParseKind) {
  EXPECT_EQ(parse_game_kind("nm"), GameKind::NonMonochromatic);
  EXPECT_EQ(parse_game_kind("cf"), GameKind::ConflictFree);
  EXPECT_THROW(parse_game_kind("xx"), Error);
}
