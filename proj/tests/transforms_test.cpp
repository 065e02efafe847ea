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

#include <sstream>

#include "support/corpus.hpp"
#include "wlamr/transforms.hpp"

namespace wlamr {
namespace {

const std::string kBite = "(b / bite-01 :arg0 (t / tiger) :arg1 (s / snake))";
const std::string kChain = "(a / go-02 :arg0 (b / boy :mod (c / tall)))";

std::string role_between(const AmrGraph& g, const std::string& from, const std::string& to) {
  for (const Edge& e : g.edges()) {
    if (g.node(e.source).id == from && g.node(e.target).id == to) return e.role;
  }
  return "";
}

GraphPairRecord pair_of(const std::string& id, const std::string& a, const std::string& b) {
  return {id, parse_penman(a), parse_penman(b), 0.5, "main-test"};
}

TEST(Reify, LocationBecomesNode) {
  const AmrGraph g = parse_penman("(s / sing-01 :arg0 (b / boy) :location (p / park))");
  const TransformResult r = reify(g, default_reify_rules());
  EXPECT_EQ(r.op_count, 1u);
  EXPECT_EQ(r.graph.size(), 4u);
  const AmrGraph want = parse_penman(
      "(s / sing-01 :arg0 (b / boy) :arg1-of (z / be-located-at-91 :arg2 (p / park)))");
  EXPECT_TRUE(isomorphic(r.graph, want));
}

TEST(Reify, NoApplicableRoleIsNoOp) {
  const AmrGraph g = parse_penman(testing::kCatDrinksMilk);
  const TransformResult r = reify(g, default_reify_rules());
  EXPECT_EQ(r.op_count, 0u);
  EXPECT_EQ(serialize_penman(r.graph), serialize_penman(g));
}

TEST(Reify, OnlyFilterAndCounts) {
  const AmrGraph g = parse_penman(
      "(s / sing-01 :time (n / night) :location (p / park) :manner (l / loud))");
  EXPECT_EQ(reify(g, default_reify_rules()).op_count, 3u);
  const TransformResult r = reify(g, default_reify_rules(), std::set<std::string>{":time"});
  EXPECT_EQ(r.op_count, 1u);
  EXPECT_EQ(r.graph.size(), g.size() + 1);
}

TEST(Reify, ConstantTargetsAllowed) {
  const AmrGraph g = parse_penman("(p / person :age 40 :polarity -)");
  const TransformResult r = reify(g, default_reify_rules());
  EXPECT_EQ(r.op_count, 2u);
  EXPECT_NO_THROW(validate(r.graph));
}

TEST(Reify, RuleFileParsing) {
  std::istringstream good("# comment\n:Location\tbe-located-at-91\t:ARG1\t:arg2\n");
  const auto rules = parse_reify_rules(good);
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].role, ":location");
  EXPECT_EQ(rules[0].source_role, ":arg1");
  std::istringstream short_row(":location\tbe-located-at-91\t:arg1\n");
  EXPECT_THROW(parse_reify_rules(short_row), DataError);
  std::istringstream dup(":time\tx\t:arg1\t:arg2\n:time\ty\t:arg1\t:arg2\n");
  EXPECT_THROW(parse_reify_rules(dup), DataError);
  std::istringstream same(":time\tx\t:arg1\t:arg1\n");
  EXPECT_THROW(parse_reify_rules(same), DataError);
}

TEST(Reify, ShippedRulesMatchBuiltIn) {
  const auto file = load_reify_rules(std::string(WLAMR_DATA_DIR) + "/reify_rules.tsv");
  const auto builtin = default_reify_rules();
  ASSERT_EQ(file.size(), builtin.size());
  for (std::size_t i = 0; i < file.size(); ++i) {
    EXPECT_EQ(file[i].role, builtin[i].role);
    EXPECT_EQ(file[i].concept_label, builtin[i].concept_label);
    EXPECT_EQ(file[i].source_role, builtin[i].source_role);
    EXPECT_EQ(file[i].target_role, builtin[i].target_role);
  }
}

TEST(RoleConfuse, SwapsAgentAndPatient) {
  Rng rng(1);
  const TransformResult r = role_confuse(parse_penman(kBite), rng);
  EXPECT_EQ(r.op_count, 1u);
  EXPECT_EQ(role_between(r.graph, "b", "t"), ":arg1");
  EXPECT_EQ(role_between(r.graph, "b", "s"), ":arg0");
}

TEST(RoleConfuse, ChainHasNothingToSwap) {
  Rng rng(1);
  const AmrGraph g = parse_penman(kChain);
  const TransformResult r = role_confuse(g, rng);
  EXPECT_EQ(r.op_count, 0u);
  EXPECT_TRUE(isomorphic(r.graph, g));
}

TEST(RoleConfuse, SymmetricChildrenAreNotCounted) {
  // Swapping roles over identical children yields an isomorphic graph.
  Rng rng(1);
  const AmrGraph g = parse_penman("(a / and :op1 (c / cat) :op2 (d / cat))");
  EXPECT_EQ(role_confuse(g, rng).op_count, 0u);
}

TEST(RoleConfuse, DeterministicAndBounded) {
  for (const auto& g : testing::graph_corpus(80, 7)) {
    Rng a(42), b(42);
    const TransformResult ra = role_confuse(g, a, 3);
    const TransformResult rb = role_confuse(g, b, 3);
    EXPECT_EQ(serialize_penman(ra.graph), serialize_penman(rb.graph));
    EXPECT_LE(ra.op_count, 3u);
    EXPECT_EQ(ra.graph.size(), g.size());
    EXPECT_EQ(ra.graph.edges().size(), g.edges().size());
    EXPECT_EQ(ra.op_count == 0, isomorphic(ra.graph, g));
  }
}

TEST(Syno, MultiTokenAddsModifier) {
  SynonymLexicon lex;
  lex.add("man", "adult_male");
  Rng rng(3);
  const TransformResult r = syno_replace(parse_penman("(r / run-02 :arg0 (m / man))"), lex, rng);
  EXPECT_EQ(r.op_count, 1u);
  EXPECT_TRUE(isomorphic(r.graph, parse_penman("(r / run-02 :arg0 (m / male :mod (s / adult)))")));
}

TEST(Syno, LemmaMatchKeepsSense) {
  SynonymLexicon lex;
  lex.add("fall", "decrease");
  Rng rng(3);
  const TransformResult r = syno_replace(parse_penman("(f / fall-01 :arg1 (p / price))"), lex, rng);
  EXPECT_EQ(r.op_count, 1u);
  EXPECT_EQ(r.graph.node(r.graph.root()).label, "decrease-01");
}

TEST(Syno, EmptyLexiconIsNoOp) {
  Rng rng(3);
  const AmrGraph g = parse_penman(testing::kCatDrinksMilk);
  const TransformResult r = syno_replace(g, SynonymLexicon{}, rng);
  EXPECT_EQ(r.op_count, 0u);
  EXPECT_EQ(serialize_penman(r.graph), serialize_penman(g));
}

TEST(Syno, ConstantsUntouched) {
  SynonymLexicon lex;
  lex.add("-", "+");
  Rng rng(3);
  EXPECT_EQ(syno_replace(parse_penman("(r / run-02 :polarity -)"), lex, rng).op_count, 0u);
}

TEST(Syno, LexiconParsing) {
  std::istringstream good("# c\nman\tadult_male\tguy\nman\tfellow\n");
  const SynonymLexicon lex = SynonymLexicon::parse(good);
  EXPECT_EQ(lex.find("man")->size(), 3u);
  std::istringstream no_alt("man\n");
  EXPECT_THROW(SynonymLexicon::parse(no_alt), DataError);
  std::istringstream self("man\tman\n");
  EXPECT_THROW(SynonymLexicon::parse(self), DataError);
  EXPECT_NO_THROW(SynonymLexicon::load(std::string(WLAMR_DATA_DIR) + "/synonyms.tsv"));
}

TEST(ArgPartition, EligiblePairYieldsTwoRecords) {
  Rng rng(5);
  const auto out = build_arg_partition({pair_of("p1", kBite, kBite)}, rng);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].id, "p1/para");
  EXPECT_EQ(out[0].human_score, 1.0);
  EXPECT_EQ(out[1].id, "p1/nonpara");
  EXPECT_EQ(out[1].human_score, 0.0);
  EXPECT_EQ(out[0].partition, "arg-test");
  EXPECT_FALSE(isomorphic(out[1].graph_a, out[1].graph_b));
}

TEST(ArgPartition, ChainPairDropped) {
  Rng rng(5);
  EXPECT_TRUE(build_arg_partition({pair_of("p1", kChain, kChain)}, rng).empty());
}

TEST(ArgPartition, DeterministicOverCorpus) {
  const auto gs = testing::graph_corpus(200, 13);
  std::vector<GraphPairRecord> pairs;
  for (std::size_t i = 0; i + 1 < gs.size(); i += 2) {
    pairs.push_back({"p" + std::to_string(i), gs[i], gs[i + 1], 0.5, "main"});
  }
  Rng a(9), b(9);
  std::vector<std::size_t> ops;
  const auto x = build_arg_partition(pairs, a, 3, &ops);
  const auto y = build_arg_partition(pairs, b, 3);
  ASSERT_EQ(x.size(), y.size());
  EXPECT_EQ(ops.size() * 2, x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].id, y[i].id);
    EXPECT_EQ(serialize_penman(x[i].graph_a), serialize_penman(y[i].graph_a));
    EXPECT_EQ(serialize_penman(x[i].graph_b), serialize_penman(y[i].graph_b));
  }
  EXPECT_EQ(arg_partition_name("main"), "arg-main");
}

TEST(OpStats, Percentiles) {
  const OpStats s = op_stats({1, 2, 2, 3, 7});
  EXPECT_EQ(s.graphs, 5u);
  EXPECT_DOUBLE_EQ(s.mean, 3.0);
  EXPECT_EQ(s.p25, 2.0);
  EXPECT_EQ(s.p50, 2.0);
  EXPECT_EQ(s.p75, 3.0);
  EXPECT_EQ(percentile({1.0, 2.0}, 0.5), 1.5);
  EXPECT_EQ(op_stats({}).graphs, 0u);
  EXPECT_EQ(format_op_stats("Reify", s), "Reify-OPS\tgraphs=5\tmean=3.00\t[2, 2, 3]");
}

}  // namespace
}  // namespace wlamr
