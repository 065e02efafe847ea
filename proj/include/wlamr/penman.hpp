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

// AMR graphs and the PENMAN text notation.
//
// An AmrGraph is a rooted, directed, acyclic graph whose nodes are either
// variables (carrying one concept label) or constants (numbers, strings, the
// polarity marker "-"). Roles are stored lowercased and in forward direction;
// an inverse role such as ":arg0-of" in the text becomes a forward ":arg0"
// edge from the child to the parent.

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wlamr/common.hpp"

namespace wlamr {

enum class NodeKind { kVariable, kConstant };

struct Node {
  std::string id;
  std::string label;
  NodeKind kind = NodeKind::kVariable;

  bool is_variable() const { return kind == NodeKind::kVariable; }
};

struct Edge {
  std::size_t source = 0;
  std::string role;
  std::size_t target = 0;
};

// Raised for malformed PENMAN or for graphs that break an AmrGraph invariant.
// offset() is the character position in the input text, or npos when the
// error is structural rather than lexical.
class ParseError : public DataError {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ParseError(std::size_t offset, const std::string& what)
      : DataError(offset == npos
                      ? what
                      : "offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class AmrGraph {
 public:
  AmrGraph() = default;

  std::size_t add_node(std::string id, std::string label, NodeKind kind) {
    if (index_.count(id)) {
      throw ParseError(ParseError::npos, "duplicate node id '" + id + "'");
    }
    index_.emplace(id, nodes_.size());
    nodes_.push_back(Node{std::move(id), std::move(label), kind});
    return nodes_.size() - 1;
  }

  void add_edge(std::size_t source, std::string role, std::size_t target) {
    edges_.push_back(Edge{source, std::move(role), target});
  }

  void set_root(std::size_t root) { root_ = root; }
  void set_label(std::size_t node, std::string label) {
    nodes_[node].label = std::move(label);
  }
  void set_role(std::size_t edge, std::string role) {
    edges_[edge].role = std::move(role);
  }
  void remove_edge(std::size_t edge) {
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(edge));
  }

  std::size_t root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // First id of the form prefix<k> (k = 1, 2, ...) not used by any node.
  std::string fresh_id(std::string_view prefix) const {
    for (std::size_t k = 1;; ++k) {
      std::string id = std::string(prefix) + std::to_string(k);
      if (!index_.count(id)) return id;
    }
  }

  std::size_t variable_count() const {
    return static_cast<std::size_t>(std::count_if(
        nodes_.begin(), nodes_.end(),
        [](const Node& n) { return n.is_variable(); }));
  }

  // Indices into edges() of the edges leaving `node`, in edge order.
  std::vector<std::size_t> out_edges(std::size_t node) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edges_[e].source == node) out.push_back(e);
    }
    return out;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t root_ = 0;
};

struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;

  auto operator<=>(const Triple&) const = default;
};

namespace penman_detail {

inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Roles whose "-of" ending is part of the name rather than an inversion.
inline bool is_lexical_of_role(std::string_view role) {
  return role == ":consist-of" || role == ":prep-on-behalf-of" ||
         role == ":prep-out-of";
}

}  // namespace penman_detail

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline bool is_inverse_role(std::string_view role) {
  return role.size() > 3 && role.substr(role.size() - 3) == "-of" &&
         !penman_detail::is_lexical_of_role(role);
}

inline std::string invert_role(std::string_view role) {
  if (is_inverse_role(role)) return std::string(role.substr(0, role.size() - 3));
  return std::string(role) + "-of";
}

// Membership in the AMR role inventory. Unknown roles are kept as written;
// this only drives reporting.
inline bool is_known_role(std::string_view role) {
  static const std::set<std::string, std::less<>> kNamed = {
      ":accompanier", ":age",       ":beneficiary", ":calendar", ":cause",
      ":century",     ":concession", ":condition",  ":conj-as-if",
      ":consist-of",  ":day",       ":dayperiod",   ":decade",   ":degree",
      ":destination", ":direction", ":domain",      ":duration", ":era",
      ":example",     ":extent",    ":frequency",   ":instrument", ":li",
      ":location",    ":manner",    ":medium",      ":mod",      ":mode",
      ":month",       ":name",      ":ord",         ":part",     ":path",
      ":polarity",    ":polite",    ":poss",        ":purpose",  ":quant",
      ":quarter",     ":range",     ":scale",       ":season",   ":source",
      ":subevent",    ":time",      ":timezone",    ":topic",    ":unit",
      ":value",       ":weekday",   ":wiki",        ":year",     ":year2"};
  std::string_view base = role;
  if (is_inverse_role(base)) base = base.substr(0, base.size() - 3);
  if (kNamed.count(base)) return true;
  for (std::string_view prefix : {":arg", ":op", ":snt"}) {
    if (base.size() > prefix.size() && base.substr(0, prefix.size()) == prefix &&
        std::all_of(base.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                    base.end(), [](char c) {
                      return std::isdigit(static_cast<unsigned char>(c)) != 0;
                    })) {
      return true;
    }
  }
  return base.substr(0, 6) == ":prep-";
}

// Distinct roles of g outside the known inventory, sorted.
inline std::vector<std::string> unknown_roles(const AmrGraph& g) {
  std::set<std::string> out;
  for (const Edge& e : g.edges()) {
    if (!is_known_role(e.role)) out.insert(e.role);
  }
  return {out.begin(), out.end()};
}

// Checks every AmrGraph invariant; throws ParseError on the first violation.
inline void validate(const AmrGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw ParseError(ParseError::npos, "empty graph");
  if (g.root() >= n) throw ParseError(ParseError::npos, "root out of range");
  if (!g.node(g.root()).is_variable()) {
    throw ParseError(ParseError::npos, "root must be a variable");
  }
  std::vector<std::size_t> in_degree(n, 0);
  std::vector<std::vector<std::size_t>> undirected(n), children(n);
  std::set<std::tuple<std::size_t, std::string, std::size_t>> seen;
  for (const Edge& e : g.edges()) {
    if (e.source >= n || e.target >= n) {
      throw ParseError(ParseError::npos, "edge endpoint out of range");
    }
    if (e.role.size() < 2 || e.role[0] != ':') {
      throw ParseError(ParseError::npos, "malformed role '" + e.role + "'");
    }
    if (e.source == e.target) {
      throw ParseError(ParseError::npos,
                       "self-loop on '" + g.node(e.source).id + "'");
    }
    if (!seen.emplace(e.source, e.role, e.target).second) {
      throw ParseError(ParseError::npos, "repeated edge " + g.node(e.source).id +
                                             " " + e.role + " " +
                                             g.node(e.target).id);
    }
    if (!g.node(e.source).is_variable()) {
      throw ParseError(ParseError::npos, "constant '" + g.node(e.source).label +
                                             "' has an outgoing edge");
    }
    ++in_degree[e.target];
    undirected[e.source].push_back(e.target);
    undirected[e.target].push_back(e.source);
    children[e.source].push_back(e.target);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Node& node = g.node(v);
    if (node.label.empty()) {
      throw ParseError(ParseError::npos, "node '" + node.id + "' has no label");
    }
    if (!node.is_variable() && in_degree[v] != 1) {
      throw ParseError(ParseError::npos,
                       "constant '" + node.label + "' must have one parent");
    }
  }
  // Connectivity, ignoring direction.
  std::vector<char> reached(n, 0);
  std::vector<std::size_t> stack = {g.root()};
  reached[g.root()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : undirected[v]) {
      if (!reached[u]) {
        reached[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  if (count != n) throw ParseError(ParseError::npos, "graph is disconnected");
  // Acyclicity (Kahn).
  std::vector<std::size_t> pending = in_degree;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (pending[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t u : children[v]) {
      if (--pending[u] == 0) ready.push_back(u);
    }
  }
  if (removed != n) throw ParseError(ParseError::npos, "graph has a directed cycle");
}

namespace penman_detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::size_t position() const { return pos_; }

  AmrGraph parse_graph() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError(pos_, "empty input");
    if (text_[pos_] != '(') throw ParseError(pos_, "expected '('");
    vars_.clear();
    var_order_.clear();
    pending_.clear();
    parse_node();
    return build(start);
  }

 private:
  struct Variable {
    std::string concept_label;
    std::size_t offset;
  };
  // An edge whose target is either a nested variable or an atom to resolve.
  struct PendingEdge {
    std::string parent;
    std::string role;
    std::string target;     // variable name or atom text
    bool nested = false;    // target is a variable defined in place
    std::size_t offset = 0;
  };

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (c == '#' && at_line_start()) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_line_start() const {
    for (std::size_t i = pos_; i > 0; --i) {
      const char c = text_[i - 1];
      if (c == '\n') return true;
      if (!is_space(c)) return false;
    }
    return true;
  }

  static bool ends_symbol(char c) {
    return is_space(c) || c == '(' || c == ')' || c == '"';
  }

  std::string read_symbol(bool stop_at_slash) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !ends_symbol(text_[pos_]) &&
           !(stop_at_slash && text_[pos_] == '/')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_string() {
    const std::size_t start = pos_;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      ++pos_;
    }
    if (pos_ >= text_.size()) throw ParseError(start, "unterminated string");
    ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_atom() {
    if (text_[pos_] == '"') return read_string();
    return read_symbol(false);
  }

  // Parses "(var / concept role value ...)" and returns the variable name.
  std::string parse_node() {
    const std::size_t open = pos_;
    ++pos_;  // '('
    skip_space();
    const std::size_t var_offset = pos_;
    std::string var = read_symbol(true);
    if (var.empty()) throw ParseError(var_offset, "expected variable name");
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '/') {
      throw ParseError(pos_, "expected '/' after variable '" + var + "'");
    }
    ++pos_;
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] == '(' || text_[pos_] == ')' ||
        text_[pos_] == ':') {
      throw ParseError(pos_, "missing concept for variable '" + var + "'");
    }
    std::string concept_label = read_atom();
    if (vars_.count(var)) {
      throw ParseError(var_offset, "duplicate variable definition '" + var + "'");
    }
    vars_.emplace(var, Variable{concept_label, var_offset});
    var_order_.push_back(var);
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError(open, "unbalanced parentheses");
      const char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        return var;
      }
      if (c != ':') throw ParseError(pos_, "expected role or ')'");
      const std::size_t role_offset = pos_;
      std::string role = read_symbol(false);
      if (role.size() < 2) throw ParseError(role_offset, "empty role name");
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')' || text_[pos_] == ':') {
        throw ParseError(role_offset, "role '" + role + "' has no target");
      }
      PendingEdge edge;
      edge.parent = var;
      edge.role = lowercase(role);
      edge.offset = role_offset;
      if (text_[pos_] == '(') {
        edge.target = parse_node();
        edge.nested = true;
      } else {
        edge.target = read_atom();
      }
      pending_.push_back(std::move(edge));
    }
  }

  AmrGraph build(std::size_t start) {
    AmrGraph g;
    for (const std::string& var : var_order_) {
      g.add_node(var, vars_.at(var).concept_label, NodeKind::kVariable);
    }
    g.set_root(0);
    std::size_t constant_counter = 0;
    for (const PendingEdge& pe : pending_) {
      const std::size_t parent = *g.find(pe.parent);
      std::size_t target;
      const bool is_reference =
          pe.nested || (pe.target[0] != '"' && vars_.count(pe.target));
      if (is_reference) {
        target = *g.find(pe.target);
      } else {
        if (is_inverse_role(pe.role)) {
          throw ParseError(pe.offset, "inverse role '" + pe.role +
                                          "' cannot point to a constant");
        }
        std::string id;
        do {
          id = "_" + std::to_string(++constant_counter);
        } while (vars_.count(id));
        target = g.add_node(id, pe.target, NodeKind::kConstant);
      }
      if (is_inverse_role(pe.role)) {
        g.add_edge(target, invert_role(pe.role), parent);
      } else {
        g.add_edge(parent, pe.role, target);
      }
    }
    try {
      validate(g);
    } catch (const ParseError& e) {
      throw ParseError(start, e.what());
    }
    return g;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, Variable> vars_;
  std::vector<std::string> var_order_;
  std::vector<PendingEdge> pending_;
};

}  // namespace penman_detail

// Parses exactly one PENMAN expression. '#' comment lines are ignored.
inline AmrGraph parse_penman(std::string_view text) {
  penman_detail::Parser parser(text);
  AmrGraph g = parser.parse_graph();
  if (!parser.at_end()) {
    throw ParseError(parser.position(), "trailing content after graph");
  }
  return g;
}

// Parses a sequence of PENMAN expressions, e.g. an AMR corpus file.
inline std::vector<AmrGraph> parse_penman_corpus(std::string_view text) {
  penman_detail::Parser parser(text);
  std::vector<AmrGraph> out;
  while (!parser.at_end()) out.push_back(parser.parse_graph());
  return out;
}

namespace penman_detail {

struct Writer {
  const AmrGraph& g;
  std::vector<std::vector<std::size_t>> out, in;
  std::vector<char> visited, covered, emitted;
  std::string text;

  explicit Writer(const AmrGraph& graph)
      : g(graph),
        out(graph.size()),
        in(graph.size()),
        visited(graph.size(), 0),
        covered(graph.size(), 0),
        emitted(graph.edges().size(), 0) {
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      out[g.edges()[e].source].push_back(e);
      in[g.edges()[e].target].push_back(e);
    }
  }

  // Marks everything reachable from v along forward edges.
  void cover(std::size_t v) {
    std::vector<std::size_t> stack = {v};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      if (covered[x]) continue;
      covered[x] = 1;
      for (std::size_t e : out[x]) stack.push_back(g.edges()[e].target);
    }
  }

  void target(std::size_t other) {
    const Node& o = g.node(other);
    if (!o.is_variable()) {
      text += o.label;
    } else if (visited[other]) {
      text += o.id;
    } else {
      write(other);
    }
  }

  // Outgoing edges first. An incoming edge is written (as an inverse role)
  // only when its source cannot be reached through forward edges otherwise.
  void write(std::size_t v) {
    visited[v] = 1;
    text += '(';
    text += g.node(v).id;
    text += " / ";
    text += g.node(v).label;
    for (std::size_t e : out[v]) {
      if (emitted[e]) continue;
      emitted[e] = 1;
      text += ' ';
      text += g.edges()[e].role;
      text += ' ';
      target(g.edges()[e].target);
    }
    for (std::size_t e : in[v]) {
      const std::size_t source = g.edges()[e].source;
      if (emitted[e] || covered[source]) continue;
      emitted[e] = 1;
      cover(source);
      text += ' ';
      text += invert_role(g.edges()[e].role);
      text += ' ';
      target(source);
    }
    text += ')';
  }
};

}  // namespace penman_detail

// Single-line PENMAN. Each node lists its outgoing edges in edge order;
// inverse roles appear only where the root cannot reach a node forwards.
inline std::string serialize_penman(const AmrGraph& g) {
  penman_detail::Writer w(g);
  w.cover(g.root());
  w.write(g.root());
  return w.text;
}

// Instance triples for variables (node order), then one triple per edge.
// Constant objects are written by label.
inline std::vector<Triple> triples(const AmrGraph& g) {
  std::vector<Triple> out;
  out.reserve(g.variable_count() + g.edges().size());
  for (const Node& n : g.nodes()) {
    if (n.is_variable()) out.push_back({n.id, "instance", n.label});
  }
  for (const Edge& e : g.edges()) {
    const Node& t = g.node(e.target);
    out.push_back({g.node(e.source).id, e.role, t.is_variable() ? t.id : t.label});
  }
  return out;
}

// Rebuilds a graph from triples(); objects that are not instance subjects
// become constants.
inline AmrGraph graph_from_triples(const std::vector<Triple>& ts,
                                   std::string_view root) {
  AmrGraph g;
  for (const Triple& t : ts) {
    if (t.predicate == "instance") {
      g.add_node(t.subject, t.object, NodeKind::kVariable);
    }
  }
  for (const Triple& t : ts) {
    if (t.predicate == "instance") continue;
    auto s = g.find(t.subject);
    if (!s) throw ParseError(ParseError::npos, "unknown subject " + t.subject);
    auto o = g.find(t.object);
    std::size_t target;
    if (o && g.node(*o).is_variable()) {
      target = *o;
    } else {
      target = g.add_node(g.fresh_id("_c"), t.object, NodeKind::kConstant);
    }
    g.add_edge(*s, t.predicate, target);
  }
  auto r = g.find(root);
  if (!r) throw ParseError(ParseError::npos, "unknown root " + std::string(root));
  g.set_root(*r);
  validate(g);
  return g;
}

namespace penman_detail {

// Iterative color refinement over both edge directions; colors are ranks of
// sorted signatures, so they do not depend on node ids or edge order.
inline std::vector<std::size_t> refined_colors(const AmrGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::string> sig(n);
  for (std::size_t v = 0; v < n; ++v) {
    sig[v] = std::string(g.node(v).is_variable() ? "v" : "c") + '\x1f' +
             g.node(v).label;
  }
  auto rank = [n](const std::vector<std::string>& s) {
    std::map<std::string, std::size_t> ids;
    for (const auto& x : s) ids.emplace(x, 0);
    std::size_t k = 0;
    for (auto& [key, id] : ids) id = k++;
    std::vector<std::size_t> colors(n);
    for (std::size_t v = 0; v < n; ++v) colors[v] = ids[s[v]];
    return std::pair{colors, k};
  };
  auto [colors, classes] = rank(sig);
  for (std::size_t iter = 0; iter < n; ++iter) {
    std::vector<std::vector<std::string>> parts(n);
    for (const Edge& e : g.edges()) {
      parts[e.source].push_back(">" + e.role + '\x1f' +
                                std::to_string(colors[e.target]));
      parts[e.target].push_back("<" + e.role + '\x1f' +
                                std::to_string(colors[e.source]));
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(parts[v].begin(), parts[v].end());
      std::string s = std::to_string(colors[v]);
      for (const auto& p : parts[v]) s += '\x1e' + p;
      sig[v] = std::move(s);
    }
    auto [next, next_classes] = rank(sig);
    colors = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colors;
}

}  // namespace penman_detail

// Canonical ids by DFS pre-order from the root. Incident edges are explored
// outgoing first, then by role, then by refined neighbor color.
inline std::vector<std::size_t> canonical_order(const AmrGraph& g) {
  const std::vector<std::size_t> colors = penman_detail::refined_colors(g);
  struct Step {
    bool incoming;
    std::string role;
    std::size_t color;
    std::size_t other;
  };
  std::vector<std::vector<Step>> adj(g.size());
  for (const Edge& e : g.edges()) {
    adj[e.source].push_back({false, e.role, colors[e.target], e.target});
    adj[e.target].push_back({true, e.role, colors[e.source], e.source});
  }
  for (auto& steps : adj) {
    std::stable_sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
      return std::tie(a.incoming, a.role, a.color) <
             std::tie(b.incoming, b.role, b.color);
    });
  }
  std::vector<std::size_t> order(g.size(), static_cast<std::size_t>(-1));
  std::size_t next = 0;
  std::vector<std::size_t> stack = {g.root()};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (order[v] != static_cast<std::size_t>(-1)) continue;
    order[v] = next++;
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
      if (order[it->other] == static_cast<std::size_t>(-1)) stack.push_back(it->other);
    }
  }
  return order;
}

// Sorted triple listing under canonical ids; equal strings mean isomorphic
// graphs (up to the tie-breaking limits of color refinement).
inline std::string canonical_form(const AmrGraph& g) {
  const std::vector<std::size_t> order = canonical_order(g);
  auto name = [&](std::size_t v) {
    const Node& n = g.node(v);
    return n.is_variable() ? "v" + std::to_string(order[v]) : n.label;
  };
  std::vector<std::string> lines;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.node(v).is_variable()) lines.push_back(name(v) + " / " + g.node(v).label);
  }
  for (const Edge& e : g.edges()) {
    lines.push_back(name(e.source) + " " + e.role + " " + name(e.target));
  }
  std::sort(lines.begin(), lines.end());
  std::string out = "root " + name(g.root());
  for (const auto& l : lines) out += "\n" + l;
  return out;
}

inline bool isomorphic(const AmrGraph& a, const AmrGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace wlamr
