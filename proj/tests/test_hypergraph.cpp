#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hcg/error.hpp"
#include "hcg/game.hpp"
#include "hcg/hypergraph.hpp"

using namespace hcg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no hcg::Error thrown";
  return ErrorCode::Internal;
}

Hypergraph triangle() { return Hypergraph::build(3, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST(Hypergraph, BuildSortsEdgesAndKeepsOrder) {
  const Hypergraph h = Hypergraph::build(4, {{2, 0, 1}, {3, 1}});
  ASSERT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.edge(0), (Edge{0, 1, 2}));
  EXPECT_EQ(h.edge(1), (Edge{1, 3}));
  EXPECT_EQ(Hypergraph::build(3, {{0, 1, 2}}).edge(0).size(), 3u);
}

TEST(Hypergraph, BuildRejectsMalformedEdges) {
  EXPECT_EQ(code_of([] { Hypergraph::build(3, {{}}); }), ErrorCode::EmptyEdge);
  EXPECT_EQ(code_of([] { Hypergraph::build(2, {{0, 2}}); }), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code_of([] { Hypergraph::build(3, {{1, 0, 1}}); }), ErrorCode::DuplicateVertexInEdge);
}

TEST(Hypergraph, RepeatedEdgesAreKept) {
  const Hypergraph h = Hypergraph::build(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.degree(0), 2u);
}

TEST(Hypergraph, IncidentEdges) {
  const Hypergraph single = Hypergraph::build(3, {{0, 1, 2}});
  EXPECT_EQ(std::vector<EdgeIndex>(single.incident_edges(0).begin(), single.incident_edges(0).end()),
            std::vector<EdgeIndex>{0});
  const Hypergraph t = triangle();
  EXPECT_EQ(std::vector<EdgeIndex>(t.incident_edges(0).begin(), t.incident_edges(0).end()),
            (std::vector<EdgeIndex>{0, 1}));
  EXPECT_EQ(code_of([&] { (void)t.incident_edges(3); }), ErrorCode::VertexOutOfRange);

  const Hypergraph nm = gen_nm_construction(3, 2).hypergraph;
  for (Vertex v = 0; v < nm.num_vertices(); ++v) EXPECT_EQ(nm.incident_edges(v).size(), 4u);
}

TEST(Hypergraph, Classify) {
  EXPECT_EQ(classify(triangle()), (UniformityClass{UniformityClass::Kind::Uniform, 2}));
  EXPECT_EQ(classify(Hypergraph::build(5, {{0, 1, 2}, {1, 2, 3, 4}})),
            (UniformityClass{UniformityClass::Kind::Minimal, 3}));
  EXPECT_EQ(classify(gen_cf_partite(3, 2).hypergraph),
            (UniformityClass{UniformityClass::Kind::Uniform, 3}));
  EXPECT_EQ(classify(Hypergraph::build(4, {})).kind, UniformityClass::Kind::General);
}

TEST(Generators, ConstructionsAreUniform) {
  for (std::size_t r : {3u, 4u, 5u}) {
    for (std::uint32_t k : {2u, 3u}) {
      EXPECT_EQ(classify(gen_nm_construction(r, k).hypergraph),
                (UniformityClass{UniformityClass::Kind::Uniform, r}));
      EXPECT_EQ(classify(gen_cf_partite(r, k).hypergraph),
                (UniformityClass{UniformityClass::Kind::Uniform, r}));
      EXPECT_EQ(classify(gen_single_edge(r, k).hypergraph),
                (UniformityClass{UniformityClass::Kind::Uniform, r}));
    }
  }
}

TEST(Generators, NmConstructionSmall) {
  const ConstructionBundle b = gen_nm_construction(3, 2);
  EXPECT_EQ(b.hypergraph.num_vertices(), 12u);
  EXPECT_EQ(b.hypergraph.num_edges(), 16u);
  EXPECT_EQ(b.family, Family::NmLowerBound);
  EXPECT_EQ(social_welfare(b.hypergraph, b.nash_witness, GameKind::NonMonochromatic), 36);
  EXPECT_EQ(social_welfare(b.hypergraph, b.optimum_witness, GameKind::NonMonochromatic), 48);
}

// Rebuilds the recipe as a set of vertex sets, counting vertices and
// hyperedges without going through the generator.
TEST(Generators, NmConstructionSizesMatchIndependentCount) {
  const std::size_t r = 4, k = 3;
  const std::size_t base = k * (r - 1);
  std::set<std::set<std::size_t>> copy_edges;
  for (std::size_t i = 0; i < k; ++i) {
    std::set<std::size_t> group;
    for (std::size_t s = 0; s < base; ++s) {
      if (s / (r - 1) == i) group.insert(s);
    }
    for (std::size_t x = 0; x < base; ++x) {
      if (group.count(x)) continue;
      auto e = group;
      e.insert(x);
      copy_edges.insert(e);
    }
  }
  const std::size_t expected_vertices = r * base;
  const std::size_t expected_edges = r * copy_edges.size() + base;
  EXPECT_EQ(expected_vertices, 36u);
  EXPECT_EQ(expected_edges, 81u);

  const ConstructionBundle b = gen_nm_construction(r, k);
  EXPECT_EQ(b.hypergraph.num_vertices(), expected_vertices);
  EXPECT_EQ(b.hypergraph.num_edges(), expected_edges);
}

TEST(Generators, NmConstructionStructure) {
  for (std::size_t r : {3u, 4u}) {
    for (std::uint32_t k : {2u, 3u, 4u}) {
      const ConstructionBundle b = gen_nm_construction(r, k);
      const Hypergraph& h = b.hypergraph;
      const std::size_t e1 = r * k * (k - 1) * (r - 1);
      ASSERT_EQ(h.num_edges(), e1 + k * (r - 1));
      for (Vertex v = 0; v < h.num_vertices(); ++v) EXPECT_EQ(h.degree(v), r * (k - 1) + 1);
      for (std::size_t e = 0; e < h.num_edges(); ++e) {
        const auto nash = edge_colors(b.nash_witness, h.edge(e)).size();
        const auto opt = edge_colors(b.optimum_witness, h.edge(e)).size();
        EXPECT_GE(opt, 2u);
        if (e < e1) {
          EXPECT_GE(nash, 2u);
        } else {
          EXPECT_EQ(nash, 1u);
        }
      }
    }
  }
}

TEST(Generators, CfPartite) {
  const ConstructionBundle b = gen_cf_partite(2, 2);
  EXPECT_EQ(b.hypergraph.num_vertices(), 4u);
  EXPECT_EQ(b.hypergraph.num_edges(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(b.hypergraph.degree(v), 2u);
  EXPECT_EQ(social_welfare(b.hypergraph, b.nash_witness, GameKind::ConflictFree), 4);
  EXPECT_EQ(social_welfare(b.hypergraph, b.optimum_witness, GameKind::ConflictFree), 8);
  EXPECT_FALSE(b.alt_witness.has_value());

  const ConstructionBundle b32 = gen_cf_partite(3, 2);
  ASSERT_TRUE(b32.alt_witness.has_value());
  EXPECT_EQ(social_welfare(b32.hypergraph, *b32.alt_witness, GameKind::ConflictFree), 8);
}

TEST(Generators, CfPartiteDegreesAndNashUtilities) {
  for (std::size_t r : {2u, 3u, 4u}) {
    for (std::uint32_t k : {2u, 3u}) {
      const ConstructionBundle b = gen_cf_partite(r, k);
      std::size_t deg = 1, nash_u = 1;
      for (std::size_t i = 0; i + 1 < r; ++i) {
        deg *= k;
        nash_u *= k - 1;
      }
      for (Vertex v = 0; v < b.hypergraph.num_vertices(); ++v) {
        EXPECT_EQ(b.hypergraph.degree(v), deg);
        EXPECT_EQ(utility(b.hypergraph, b.nash_witness, v, GameKind::ConflictFree),
                  static_cast<std::int64_t>(nash_u));
      }
    }
  }
}

TEST(Generators, SingleEdge) {
  const ConstructionBundle b = gen_single_edge(5, 2);
  EXPECT_EQ(b.nash_witness.colors().size(), 5u);
  EXPECT_EQ(std::vector<Color>(b.nash_witness.colors().begin(), b.nash_witness.colors().end()),
            (std::vector<Color>{0, 0, 1, 1, 0}));
  EXPECT_EQ(std::vector<Color>(b.optimum_witness.colors().begin(), b.optimum_witness.colors().end()),
            (std::vector<Color>{0, 1, 1, 1, 1}));
  EXPECT_EQ(social_welfare(b.hypergraph, b.nash_witness, GameKind::ConflictFree), 0);
  EXPECT_EQ(social_welfare(b.hypergraph, b.optimum_witness, GameKind::ConflictFree), 1);
  EXPECT_TRUE(b.nash_guaranteed);

  const ConstructionBundle four = gen_single_edge(4, 2);
  EXPECT_EQ(std::vector<Color>(four.nash_witness.colors().begin(), four.nash_witness.colors().end()),
            (std::vector<Color>{0, 0, 1, 1}));

  const ConstructionBundle one = gen_single_edge(1, 2);
  EXPECT_EQ(one.hypergraph.num_vertices(), 1u);
  EXPECT_EQ(one.hypergraph.edge(0), (Edge{0}));
  EXPECT_FALSE(one.nash_guaranteed);
}

TEST(Generators, SingleEdgeColorClassesHaveSizeTwo) {
  for (std::size_t r = 2; r <= 9; ++r) {
    for (std::uint32_t k = 2; 2 * k <= r; ++k) {
      const ConstructionBundle b = gen_single_edge(r, k);
      std::vector<int> count(k, 0);
      for (Color c : b.nash_witness.colors()) ++count[c];
      for (int n : count) EXPECT_GE(n, 2) << "r=" << r << " k=" << k;
      EXPECT_EQ(social_welfare(b.hypergraph, b.optimum_witness, GameKind::ConflictFree),
                static_cast<std::int64_t>(k - 1));
    }
  }
}

TEST(Generators, InvalidParams) {
  EXPECT_EQ(code_of([] { gen_nm_construction(2, 2); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { gen_nm_construction(3, 1); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { gen_cf_partite(1, 2); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { gen_single_edge(0, 2); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { gen_single_edge(3, 1); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { gen_random_uniform(3, 2, 4, 1); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { gen_random_uniform(3, 2, 0, 1); }), ErrorCode::InvalidParams);
}

TEST(Generators, RandomUniform) {
  EXPECT_EQ(gen_random_uniform(5, 0, 3, 1).num_edges(), 0u);
  EXPECT_EQ(gen_random_uniform(5, 10, 3, 7), gen_random_uniform(5, 10, 3, 7));
  EXPECT_NE(gen_random_uniform(8, 10, 3, 7), gen_random_uniform(8, 10, 3, 8));
  const Hypergraph all = gen_random_uniform(3, 4, 3, 9);
  ASSERT_EQ(all.num_edges(), 4u);
  for (const Edge& e : all.edges()) EXPECT_EQ(e, (Edge{0, 1, 2}));
}

TEST(Generators, RandomUniformCoversSubsets) {
  // 200 draws of 2-subsets of [0,4): all 6 subsets appear.
  const Hypergraph h = gen_random_uniform(4, 200, 2, 123);
  std::set<Edge> seen(h.edges().begin(), h.edges().end());
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(classify(h), (UniformityClass{UniformityClass::Kind::Uniform, 2}));
}

TEST(Generators, RandomMixedSizes) {
  const Hypergraph h = gen_random_mixed(8, 50, 3, 5, 4);
  EXPECT_GE(h.min_edge_size(), 3u);
  EXPECT_LE(h.max_edge_size(), 5u);
}

TEST(Coloring, RejectsOutOfRangeColors) {
  EXPECT_EQ(code_of([] { Coloring(2, {0, 2}); }), ErrorCode::ColorOutOfRange);
  EXPECT_EQ(code_of([] { Coloring(0, {}); }), ErrorCode::InvalidParams);
}
