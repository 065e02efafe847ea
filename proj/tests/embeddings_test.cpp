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

#include <cmath>
#include <cstring>
#include <sstream>

#include "wlamr/embeddings.hpp"

namespace wlamr {
namespace {

EmbeddingTable table_from(const std::string& text, std::uint64_t seed = 0) {
  std::istringstream in(text);
  return EmbeddingTable::parse(in, seed);
}

std::string error_of(const std::string& text) {
  try {
    table_from(text);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

TEST(Table, LoadsTwoRows) {
  const EmbeddingTable t = table_from("cat 1 0\ndog 0 1\n");
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(*t.find("dog"), (std::vector<double>{0.0, 1.0}));
}

TEST(Table, SkipsHeaderLine) {
  const EmbeddingTable t = table_from("2 3\ncat 1 0 0\ndog 0 1 0\n");
  EXPECT_EQ(t.dim(), 3u);
  EXPECT_EQ(t.size(), 2u);
}

TEST(Table, ErrorsNameTheLine) {
  EXPECT_NE(error_of("cat 1 0\ndog 0 1 2\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("cat 1 0\ndog 0 x\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("cat 1 0\ndog 0 x\n").find("non-numeric"), std::string::npos);
  EXPECT_NE(error_of("").find("no vectors"), std::string::npos);
  EXPECT_THROW(EmbeddingTable::load("/nonexistent/vectors.txt"), DataError);
}

TEST(Table, WriteRoundTrips) {
  const EmbeddingTable t = table_from("dog 0.1 0.2\ncat 0.30000000000000004 -1e-300\n");
  std::ostringstream out;
  t.write(out);
  const EmbeddingTable back = table_from(out.str());
  EXPECT_EQ(*back.find("cat"), *t.find("cat"));
  EXPECT_EQ(*back.find("dog"), *t.find("dog"));
}

TEST(Oov, DeterministicUnitVectors) {
  const EmbeddingTable a = table_from("cat 1 0 0 0\n", 42);
  const EmbeddingTable b = table_from("dog 0 1 0 0\n", 42);
  const auto va = a.oov_vector("kitten");
  const auto vb = b.oov_vector("kitten");
  ASSERT_EQ(va.size(), 4u);
  EXPECT_EQ(std::memcmp(va.data(), vb.data(), va.size() * sizeof(double)), 0);
  EXPECT_NEAR(norm(va), 1.0, 1e-15);
  EXPECT_NE(a.oov_vector("kitten"), a.oov_vector("puppy"));
  EXPECT_NE(table_from("cat 1 0 0 0\n", 43).oov_vector("kitten"), va);
  EXPECT_EQ(embed_label(a, "kitten"), va);
}

TEST(EmbedLabel, SenseSuffixStripped) {
  const EmbeddingTable t = table_from("drink 1 2\nmilk 3 4\n");
  EXPECT_EQ(embed_label(t, "drink-01"), (std::vector<double>{1, 2}));
  EXPECT_EQ(embed_label(t, "milk"), (std::vector<double>{3, 4}));
  EXPECT_EQ(strip_sense("drink-01"), "drink");
  EXPECT_EQ(strip_sense("look-up-05"), "look-up");
  EXPECT_EQ(strip_sense("-"), "-");
  EXPECT_EQ(strip_sense("well-off"), "well-off");
}

TEST(EmbedLabel, VerbatimRowWins) {
  const EmbeddingTable t = table_from("drink-01 9 9\ndrink 1 2\n");
  EXPECT_EQ(embed_label(t, "drink-01"), (std::vector<double>{9, 9}));
}

TEST(EmbedLabel, MultiTokenAverages) {
  const EmbeddingTable t = table_from("adult 1 4\nmale 3 0\n");
  EXPECT_EQ(embed_label(t, "adult_male"), (std::vector<double>{2, 2}));
}

TEST(EmbedLabel, QuotesAndCase) {
  const EmbeddingTable t = table_from("john 5 6\n");
  EXPECT_EQ(embed_label(t, "\"John\""), (std::vector<double>{5, 6}));
}

TEST(EdgeWeights, SingleLabelReproducible) {
  const auto a = init_edge_weights({":arg0"}, 7);
  const auto b = init_edge_weights({":arg0"}, 7);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.weight(":arg0"), b.weight(":arg0"));
  EXPECT_GE(a.weight(":arg0"), 0.25);
  EXPECT_LT(a.weight(":arg0"), 1.25);
}

TEST(EdgeWeights, KeyedPerLabel) {
  const auto a = init_edge_weights({":arg0", ":arg1", ":mod"}, 11);
  const auto b = init_edge_weights({":arg0", ":time"}, 11);
  EXPECT_EQ(a.weight(":arg0"), b.weight(":arg0"));
  EXPECT_EQ(a.weight(":arg0"), keyed_edge_weight(":arg0", 11));
  // Unknown roles fall back to the same keyed draw.
  EXPECT_EQ(a.weight(":time"), b.weight(":time"));
}

TEST(EdgeWeights, SeedsDiffer) {
  const std::set<std::string> labels = {":arg0", ":arg1", ":arg2", ":mod"};
  EXPECT_NE(init_edge_weights(labels, 1).values(), init_edge_weights(labels, 2).values());
}

TEST(EdgeWeights, RangeOverManyLabels) {
  std::set<std::string> labels;
  for (int i = 0; i < 500; ++i) labels.insert(":r" + std::to_string(i));
  for (double w : init_edge_weights(labels, 3).values()) {
    EXPECT_GE(w, 0.25);
    EXPECT_LT(w, 1.25);
  }
}

TEST(EdgeWeights, EmptyLabelSetRejected) {
  EXPECT_THROW(init_edge_weights({}, 1), std::invalid_argument);
}

TEST(EdgeWeights, SerializationIsBitExact) {
  EdgeParamVector p = init_edge_weights({":arg0", ":arg1", ":polarity"}, 99);
  p.set(":arg1", 0.1 + 0.2);
  p.set(":polarity", -1.0 / 3.0);
  std::istringstream in(p.serialize());
  const EdgeParamVector back = EdgeParamVector::parse(in);
  EXPECT_EQ(back, p);
  EXPECT_EQ(back.weight(":unseen"), p.weight(":unseen"));

  const EdgeParamVector ones = unit_edge_weights({":arg0"});
  std::istringstream in2(ones.serialize());
  EXPECT_EQ(EdgeParamVector::parse(in2).weight(":other"), 1.0);
}

TEST(EdgeWeights, ParseErrors) {
  std::istringstream bad(":arg0 abc\n");
  EXPECT_THROW(EdgeParamVector::parse(bad), DataError);
  std::istringstream bad_seed("@seed x\n");
  EXPECT_THROW(EdgeParamVector::parse(bad_seed), DataError);
}

}  // namespace
}  // namespace wlamr
