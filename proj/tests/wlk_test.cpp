// Copyright 2026 The wlamr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "wlamr/wlk.hpp"

namespace wlamr {
namespace {

std::size_t index_of(const AmrGraph& g, const std::string& id) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.node(v).id == id) return v;
  }
  ADD_FAILURE() << "no node " << id;
  return 0;
}

// Same graph with node indices permuted, rebuilt through the triple list.
AmrGraph shuffled(const AmrGraph& g, Rng& rng) {
  auto t = triples(g);
  for (std::size_t i = t.size(); i > 1; --i) std::swap(t[i - 1], t[rng.index(i)]);
  return graph_from_triples(t, g.node(g.root()).id);
}

TEST(Relabel, IsolatedNode) {
  const AmrGraph g = parse_penman("(c / cat)");
  const auto l1 = wl_relabel(g, initial_wl_labels(g), Direction::kUndirected);
  EXPECT_EQ(printable_wl_label(l1[0]), "cat|");
}

TEST(Relabel, RootSeesBothArguments) {
  const AmrGraph g = parse_penman(testing::kCatDrinksMilk);
  const auto l1 = wl_relabel(g, initial_wl_labels(g), Direction::kUndirected);
  EXPECT_EQ(printable_wl_label(l1[index_of(g, "d")]), "drink-01|:arg0 cat,:arg1 milk");
  EXPECT_EQ(printable_wl_label(l1[index_of(g, "m")]), "milk|:arg1 drink-01");
}

TEST(Relabel, DirectionModes) {
  const AmrGraph g = parse_penman(testing::kCatDrinksMilk);
  const auto init = initial_wl_labels(g);
  const std::size_t d = index_of(g, "d"), m = index_of(g, "m");
  EXPECT_EQ(printable_wl_label(wl_relabel(g, init, Direction::kTopDown)[m]), "milk|");
  EXPECT_EQ(printable_wl_label(wl_relabel(g, init, Direction::kBottomUp)[d]), "drink-01|");
  EXPECT_EQ(printable_wl_label(wl_relabel(g, init, Direction::kTwoWays)[m]),
            "milk|:arg1-of drink-01");
  EXPECT_THROW(wl_relabel(g, {"x"}, Direction::kUndirected), std::invalid_argument);
}

TEST(Relabel, NestedLabelsStayDistinct) {
  // A naive join of "a|:r b" with extra text could collide; brackets keep them apart.
  const AmrGraph x = parse_penman("(a / a :r (b / b :s (c / c)))");
  const AmrGraph y = parse_penman("(a / a :r (b / b) :s (c / c))");
  EXPECT_LT(wlk_similarity(x, y, 2), 1.0);
}

TEST(Features, KZeroIsLabelHistogram) {
  const AmrGraph g = parse_penman("(a / and :op1 (c / cat) :op2 (c2 / cat))");
  const WlFeatureMap f = wlk_features(g, 0);
  ASSERT_EQ(f.iterations.size(), 1u);
  EXPECT_EQ(f.iterations[0].at("cat"), 2u);
  EXPECT_EQ(f.iterations[0].at("and"), 1u);
  EXPECT_THROW(wlk_features(g, -1), std::invalid_argument);
}

TEST(Features, SingleNodeHasOneLabelPerIteration) {
  const WlFeatureMap f = wlk_features(parse_penman("(c / cat)"), 2);
  ASSERT_EQ(f.k(), 2u);
  for (const auto& h : f.iterations) EXPECT_EQ(h.size(), 1u);
}

TEST(Features, FirstIterationDistinctLabels) {
  const WlFeatureMap f = wlk_features(parse_penman(testing::kCatDrinksMilk), 1);
  EXPECT_EQ(f.iterations[1].size(), 3u);
}

TEST(Similarity, SelfIsOneAndDisjointIsZero) {
  for (const auto& g : testing::graph_corpus(40, 2)) {
    for (Direction dir : kAllDirections) EXPECT_NEAR(wlk_similarity(g, g, 3, dir), 1.0, 1e-12);
  }
  EXPECT_EQ(wlk_similarity(parse_penman("(c / cat)"), parse_penman("(d / dog)")), 0.0);
}

TEST(Similarity, SharedLeafOnly) {
  const AmrGraph a = parse_penman(testing::kCatDrinksMilk);
  const AmrGraph b = parse_penman(testing::kKittenSlurpsMilk);
  EXPECT_NEAR(wlk_similarity(a, b, 2), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(wlk_similarity(a, b, 1), 1.0 / 6.0, 1e-15);
}

TEST(Similarity, MatchesOracle) {
  const auto gs = testing::graph_corpus(30, 17);
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    for (Direction dir : kAllDirections) {
      for (int k = 0; k <= 3; ++k) {
        EXPECT_NEAR(wlk_similarity(gs[i], gs[i + 1], k, dir),
                    oracle::wlk_cosine(gs[i], gs[i + 1], k, dir), 1e-12)
            << i << " " << direction_name(dir) << " K=" << k;
      }
    }
  }
}

TEST(Similarity, SymmetricAndPermutationInvariant) {
  Rng rng(99);
  const auto gs = testing::graph_corpus(30, 23);
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    const double s = wlk_similarity(gs[i], gs[i + 1], 2, Direction::kTwoWays);
    EXPECT_EQ(s, wlk_similarity(gs[i + 1], gs[i], 2, Direction::kTwoWays));
    EXPECT_NEAR(s, wlk_similarity(shuffled(gs[i], rng), gs[i + 1], 2, Direction::kTwoWays),
                1e-15);
  }
}

TEST(Similarity, MoreOverlapScoresHigher) {
  const AmrGraph base = parse_penman("(d / drink-01 :arg0 (c / cat :mod (b / black)) :arg1 (m / milk))");
  const AmrGraph close = parse_penman("(d / drink-01 :arg0 (c / cat :mod (w / white)) :arg1 (m / milk))");
  const AmrGraph far = parse_penman("(d / drink-01 :arg0 (c / dog :mod (w / white)) :arg1 (m / water))");
  EXPECT_GT(wlk_similarity(base, close), wlk_similarity(base, far));
}

TEST(Direction, NamesRoundTrip) {
  for (Direction d : kAllDirections) EXPECT_EQ(parse_direction(direction_name(d)), d);
  EXPECT_THROW(parse_direction("sideways"), ConfigError);
  const AmrGraph g = parse_penman(testing::kCatDrinksMilk);
  EXPECT_EQ(role_labels(g, Direction::kTwoWays).size(), 4u);
  EXPECT_EQ(role_labels(g, Direction::kUndirected).size(), 2u);
}

}  // namespace
}  // namespace wlamr
