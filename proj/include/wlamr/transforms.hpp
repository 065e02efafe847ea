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

// Graph rewrites for robustness probes:
//   reify        meaning-preserving: role edge -> concept node with two :argN edges
//   syno_replace meaning-preserving: concept -> lexicon synonym (maybe a subgraph)
//   role_confuse meaning-altering:   swap outgoing role labels at a node

#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wlamr/common.hpp"
#include "wlamr/dataset.hpp"
#include "wlamr/embeddings.hpp"
#include "wlamr/penman.hpp"

namespace wlamr {

struct TransformResult {
  AmrGraph graph;
  std::size_t op_count = 0;
};

// ---------------------------------------------------------------------------
// Reification

struct ReifyRule {
  std::string role;         // edge to replace, e.g. ":location"
  std::string concept_label;  // new node's concept, e.g. "be-located-at-91"
  std::string source_role;  // new node -> old source, e.g. ":arg1"
  std::string target_role;  // new node -> old target, e.g. ":arg2"

  void validate() const {
    if (concept_label.empty()) throw DataError("reify rule for " + role + " has no concept");
    if (role == source_role || role == target_role || source_role == target_role) {
      throw DataError("reify rule for " + role + " needs three distinct roles");
    }
  }
};

inline std::vector<ReifyRule> parse_reify_rules(std::istream& in) {
  std::vector<ReifyRule> rules;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto f = dataset_detail::split_tabs(line);
    if (f.size() != 4) {
      throw DataError("reify rules line " + std::to_string(line_no) +
                      ": expected role, concept, source role, target role");
    }
    ReifyRule r{lowercase(f[0]), f[1], lowercase(f[2]), lowercase(f[3])};
    r.validate();
    if (!seen.insert(r.role).second) {
      throw DataError("reify rules line " + std::to_string(line_no) + ": duplicate role " + r.role);
    }
    rules.push_back(std::move(r));
  }
  return rules;
}

inline std::vector<ReifyRule> load_reify_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open reify rules " + path);
  return parse_reify_rules(in);
}

// Reifications from the AMR guidelines table. The same set ships as
// data/reify_rules.tsv.
inline std::vector<ReifyRule> default_reify_rules() {
  return {
      {":accompanier", "accompany-01", ":arg1", ":arg0"},
      {":age", "age-01", ":arg1", ":arg2"},
      {":beneficiary", "benefit-01", ":arg0", ":arg1"},
      {":cause", "cause-01", ":arg1", ":arg0"},
      {":concession", "have-concession-91", ":arg1", ":arg2"},
      {":condition", "have-condition-91", ":arg1", ":arg2"},
      {":degree", "have-degree-92", ":arg1", ":arg2"},
      {":destination", "be-destined-for-91", ":arg1", ":arg2"},
      {":duration", "last-01", ":arg1", ":arg2"},
      {":example", "exemplify-01", ":arg1", ":arg0"},
      {":extent", "have-extent-91", ":arg1", ":arg2"},
      {":frequency", "have-frequency-91", ":arg1", ":arg2"},
      {":instrument", "have-instrument-91", ":arg1", ":arg2"},
      {":location", "be-located-at-91", ":arg1", ":arg2"},
      {":manner", "have-manner-91", ":arg1", ":arg2"},
      {":mod", "have-mod-91", ":arg1", ":arg2"},
      {":name", "have-name-91", ":arg1", ":arg2"},
      {":ord", "have-ord-91", ":arg1", ":arg2"},
      {":part", "have-part-91", ":arg1", ":arg2"},
      {":polarity", "have-polarity-91", ":arg1", ":arg2"},
      {":poss", "own-01", ":arg1", ":arg0"},
      {":purpose", "have-purpose-91", ":arg1", ":arg2"},
      {":quant", "have-quant-91", ":arg1", ":arg2"},
      {":source", "be-from-91", ":arg1", ":arg2"},
      {":subevent", "have-subevent-91", ":arg1", ":arg2"},
      {":time", "be-temporally-at-91", ":arg1", ":arg2"},
      {":topic", "concern-02", ":arg0", ":arg1"},
  };
}

// Replaces every edge whose role has a rule (and passes `only`, when given)
// with a fresh node z: (z / concept) plus (z, source_role, x), (z, target_role, y).
inline TransformResult reify(const AmrGraph& g, const std::vector<ReifyRule>& rules,
                             const std::optional<std::set<std::string>>& only = std::nullopt) {
  std::map<std::string, const ReifyRule*> by_role;
  for (const auto& r : rules) by_role.emplace(r.role, &r);
  TransformResult out;
  AmrGraph& h = out.graph;
  for (const Node& n : g.nodes()) h.add_node(n.id, n.label, n.kind);
  h.set_root(g.root());
  for (const Edge& e : g.edges()) {
    auto it = by_role.find(e.role);
    if (it == by_role.end() || (only && !only->count(e.role))) {
      h.add_edge(e.source, e.role, e.target);
      continue;
    }
    const ReifyRule& rule = *it->second;
    const std::size_t z = h.add_node(h.fresh_id("z"), rule.concept_label, NodeKind::kVariable);
    h.add_edge(z, rule.source_role, e.source);
    h.add_edge(z, rule.target_role, e.target);
    ++out.op_count;
  }
  validate(h);
  return out;
}

// ---------------------------------------------------------------------------
// Role confusion

// Nodes with more than one outgoing edge.
inline std::vector<std::size_t> confusable_nodes(const AmrGraph& g) {
  std::vector<std::size_t> out_degree(g.size(), 0);
  for (const Edge& e : g.edges()) ++out_degree[e.source];
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (out_degree[v] > 1) out.push_back(v);
  }
  return out;
}

inline bool repeats_edge(const AmrGraph& g, std::size_t v) {
  std::set<std::pair<std::string, std::size_t>> seen;
  for (std::size_t e : g.out_edges(v)) {
    if (!seen.emplace(g.edges()[e].role, g.edges()[e].target).second) return true;
  }
  return false;
}

// Swaps the labels of two outgoing edges at up to `max_ops` random nodes. A
// swap that leaves the canonical form unchanged (equal labels, or symmetric
// children) is not applied; op_count counts applied swaps only.
inline TransformResult role_confuse(const AmrGraph& g, Rng& rng, int max_ops = 3) {
  TransformResult out{g, 0};
  std::vector<std::size_t> candidates = confusable_nodes(g);
  if (candidates.empty() || max_ops <= 0) return out;
  rng.shuffle(candidates);
  const std::size_t wanted =
      1 + rng.index(std::min<std::size_t>(static_cast<std::size_t>(max_ops), candidates.size()));
  const std::string original = canonical_form(g);
  std::string current = original;
  std::optional<AmrGraph> after_first;
  for (std::size_t v : candidates) {
    if (out.op_count == wanted) break;
    const std::vector<std::size_t> outs = out.graph.out_edges(v);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < outs.size(); ++a) {
      for (std::size_t b = a + 1; b < outs.size(); ++b) {
        if (out.graph.edges()[outs[a]].role != out.graph.edges()[outs[b]].role) {
          pairs.emplace_back(outs[a], outs[b]);
        }
      }
    }
    rng.shuffle(pairs);
    for (const auto& [ea, eb] : pairs) {
      AmrGraph trial = out.graph;
      const std::string ra = trial.edges()[ea].role;
      trial.set_role(ea, trial.edges()[eb].role);
      trial.set_role(eb, ra);
      if (repeats_edge(trial, v)) continue;
      std::string form = canonical_form(trial);
      if (form == current) continue;
      out.graph = std::move(trial);
      current = std::move(form);
      if (++out.op_count == 1) after_first = out.graph;
      break;
    }
  }
  // Later swaps can in principle undo the first one up to isomorphism.
  if (out.op_count > 1 && current == original) {
    out.graph = *after_first;
    out.op_count = 1;
  }
  validate(out.graph);
  return out;
}

// ---------------------------------------------------------------------------
// Synonym replacement

// concept or lemma -> alternatives. Multi-token alternatives use '_' with
// modifiers before the head ("adult_male").
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  void add(const std::string& key, const std::string& alternative) {
    if (alternative.empty()) throw DataError("empty synonym for '" + key + "'");
    auto& alts = entries_[key];
    if (std::find(alts.begin(), alts.end(), alternative) == alts.end()) {
      alts.push_back(alternative);
    }
  }

  // Drops self-mappings; an entry left with nothing is an error.
  void validate() const {
    for (const auto& [key, alts] : entries_) {
      if (std::none_of(alts.begin(), alts.end(), [&](const std::string& a) { return a != key; })) {
        throw DataError("synonym entry '" + key + "' maps only to itself");
      }
    }
  }

  // Alternatives other than `key` itself, or nullptr.
  const std::vector<std::string>* find(std::string_view key) const {
    auto it = entries_.find(std::string(key));
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // TSV: key<TAB>alt1[<TAB>alt2 ...]; repeated keys accumulate.
  static SynonymLexicon parse(std::istream& in) {
    SynonymLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      const auto f = dataset_detail::split_tabs(line);
      if (f.size() < 2 || f[0].empty()) {
        throw DataError("synonym lexicon line " + std::to_string(line_no) +
                        ": expected concept and at least one alternative");
      }
      for (std::size_t i = 1; i < f.size(); ++i) {
        if (!f[i].empty()) lex.add(f[0], f[i]);
      }
    }
    lex.validate();
    return lex;
  }

  static SynonymLexicon load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open synonym lexicon " + path);
    return parse(in);
  }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

// Replaces every concept that has a lexicon entry (looked up verbatim, then by
// lemma without sense suffix) with a random alternative. Lemma matches keep
// the original sense suffix; "a_b_head" becomes head plus one :mod child per
// modifier token.
inline TransformResult syno_replace(const AmrGraph& g, const SynonymLexicon& lex, Rng& rng) {
  TransformResult out{g, 0};
  if (lex.empty()) return out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const Node& node = g.node(v);
    if (!node.is_variable()) continue;
    std::string suffix;
    const std::vector<std::string>* alts = lex.find(node.label);
    std::string key = node.label;
    if (!alts) {
      const std::string_view lemma = strip_sense(node.label);
      if (lemma.size() == node.label.size()) continue;
      alts = lex.find(lemma);
      if (!alts) continue;
      key = std::string(lemma);
      suffix = node.label.substr(lemma.size());
    }
    std::vector<std::string> choices;
    for (const auto& a : *alts) {
      if (a != key) choices.push_back(a);
    }
    if (choices.empty()) continue;
    const std::string& pick = choices[rng.index(choices.size())];
    std::vector<std::string> tokens;
    std::stringstream ss(pick);
    for (std::string tok; std::getline(ss, tok, '_');) {
      if (!tok.empty()) tokens.push_back(tok);
    }
    if (tokens.empty()) continue;
    std::string head = tokens.back();
    if (tokens.size() == 1 && strip_sense(head).size() == head.size()) head += suffix;
    out.graph.set_label(v, head);
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      const std::size_t m = out.graph.add_node(out.graph.fresh_id("s"), tokens[i], NodeKind::kVariable);
      out.graph.add_edge(v, ":mod", m);
    }
    ++out.op_count;
  }
  validate(out.graph);
  return out;
}

// ---------------------------------------------------------------------------
// Arg partition

inline std::string arg_partition_name(const std::string& partition) {
  if (partition.rfind("main-", 0) == 0) return "arg-" + partition.substr(5);
  return "arg-" + partition;
}

// For each paraphrase pair, confuses roles on one randomly chosen side. Pairs
// where that side has no applicable swap are dropped; otherwise the original
// pair (score 1) and the altered pair (score 0) are emitted.
inline std::vector<GraphPairRecord> build_arg_partition(const std::vector<GraphPairRecord>& pairs,
                                                        Rng& rng, int max_ops = 3,
                                                        std::vector<std::size_t>* ops = nullptr) {
  std::vector<GraphPairRecord> out;
  for (const auto& p : pairs) {
    const bool alter_first = rng.coin();
    TransformResult t = role_confuse(alter_first ? p.graph_a : p.graph_b, rng, max_ops);
    if (t.op_count == 0) continue;
    if (ops) ops->push_back(t.op_count);
    GraphPairRecord para = p;
    para.id = p.id + "/para";
    para.human_score = 1.0;
    para.partition = arg_partition_name(p.partition);
    GraphPairRecord altered = para;
    altered.id = p.id + "/nonpara";
    altered.human_score = 0.0;
    (alter_first ? altered.graph_a : altered.graph_b) = std::move(t.graph);
    out.push_back(std::move(para));
    out.push_back(std::move(altered));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operation statistics: mean and 25/50/75th percentiles (linear interpolation).

struct OpStats {
  std::size_t graphs = 0;
  double mean = 0.0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
};

inline double percentile(std::vector<double> xs, double q) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] + (pos - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

inline OpStats op_stats(const std::vector<std::size_t>& ops) {
  OpStats s;
  s.graphs = ops.size();
  if (ops.empty()) return s;
  std::vector<double> xs(ops.begin(), ops.end());
  s.mean = compensated_sum(xs) / static_cast<double>(xs.size());
  s.p25 = percentile(xs, 0.25);
  s.p50 = percentile(xs, 0.50);
  s.p75 = percentile(xs, 0.75);
  return s;
}

// "<name>-OPS\tgraphs=N\tmean=2.74\t[1, 2, 4]"
inline std::string format_op_stats(const std::string& name, const OpStats& s) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s-OPS\tgraphs=%zu\tmean=%.2f\t[%g, %g, %g]", name.c_str(),
                s.graphs, s.mean, s.p25, s.p50, s.p75);
  return buf;
}

}  // namespace wlamr
