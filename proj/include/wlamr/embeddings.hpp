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

// Word vectors for node labels and per-role edge weights.

#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wlamr/common.hpp"

namespace wlamr {

namespace embed_detail {

inline bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline bool is_integer(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace embed_detail

// Drops a PropBank sense suffix: "drink-01" -> "drink". Labels without a
// trailing "-<digits>" are returned unchanged.
inline std::string_view strip_sense(std::string_view label) {
  const std::size_t dash = label.rfind('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 == label.size()) {
    return label;
  }
  if (!embed_detail::is_integer(label.substr(dash + 1))) return label;
  return label.substr(0, dash);
}

inline std::string_view strip_quotes(std::string_view label) {
  if (label.size() >= 2 && label.front() == '"' && label.back() == '"') {
    return label.substr(1, label.size() - 2);
  }
  return label;
}

class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dim, std::uint64_t oov_seed = 0)
      : dim_(dim), oov_seed_(oov_seed) {
    if (dim == 0) throw ConfigError("embedding dimension must be positive");
  }

  // word2vec text format: one token followed by dim numbers per line. A
  // "<count> <dim>" header line is detected and skipped.
  static EmbeddingTable parse(std::istream& in, std::uint64_t oov_seed = 0) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    std::vector<std::pair<std::string, std::vector<double>>> rows;
    while (std::getline(in, line)) {
      ++line_no;
      const auto fields = embed_detail::split_whitespace(line);
      if (fields.empty()) continue;
      if (rows.empty() && dim == 0 && fields.size() == 2 &&
          embed_detail::is_integer(fields[0]) && embed_detail::is_integer(fields[1])) {
        dim = std::stoul(std::string(fields[1]));
        if (dim == 0) throw DataError("line " + std::to_string(line_no) + ": zero dimension");
        continue;
      }
      if (fields.size() < 2) {
        throw DataError("line " + std::to_string(line_no) + ": row has no values");
      }
      if (dim == 0) dim = fields.size() - 1;
      if (fields.size() - 1 != dim) {
        throw DataError("line " + std::to_string(line_no) + ": ragged row, expected " +
                        std::to_string(dim) + " values, found " +
                        std::to_string(fields.size() - 1));
      }
      std::vector<double> v(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!embed_detail::parse_double(fields[i + 1], v[i])) {
          throw DataError("line " + std::to_string(line_no) + ": non-numeric value '" +
                          std::string(fields[i + 1]) + "'");
        }
      }
      rows.emplace_back(std::string(fields[0]), std::move(v));
    }
    if (rows.empty()) throw DataError("embedding file has no vectors");
    EmbeddingTable table(dim, oov_seed);
    for (auto& [word, v] : rows) table.insert(word, std::move(v));
    return table;
  }

  static EmbeddingTable load(const std::string& path, std::uint64_t oov_seed = 0) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open embedding file " + path);
    try {
      return parse(in, oov_seed);
    } catch (const DataError& e) {
      throw DataError(path + ": " + e.what());
    }
  }

  // Keeps the first vector seen for a word.
  void insert(std::string word, std::vector<double> v) {
    if (v.size() != dim_) throw DataError("vector for '" + word + "' has wrong length");
    table_.emplace(std::move(word), std::move(v));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return table_.size(); }
  std::uint64_t oov_seed() const { return oov_seed_; }

  const std::vector<double>* find(std::string_view word) const {
    auto it = table_.find(std::string(word));
    return it == table_.end() ? nullptr : &it->second;
  }

  // Pseudo-random unit vector keyed by (word, oov_seed).
  std::vector<double> oov_vector(std::string_view word) const {
    Rng rng(keyed_hash(word, oov_seed_));
    std::vector<double> v(dim_);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (double& x : v) {
        x = rng.normal();
        norm2 += x * x;
      }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;
    return v;
  }

  // Table row for a token (verbatim, then lowercased), else its OOV vector.
  std::vector<double> token_vector(std::string_view token) const {
    if (const auto* v = find(token)) return *v;
    std::string lower(token);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (const auto* v = find(lower)) return *v;
    return oov_vector(token);
  }

  // word2vec text, rows sorted by word.
  void write(std::ostream& out) const {
    std::vector<const std::string*> words;
    for (const auto& [w, v] : table_) words.push_back(&w);
    std::sort(words.begin(), words.end(), [](auto* a, auto* b) { return *a < *b; });
    for (const std::string* w : words) {
      out << *w;
      for (double x : table_.at(*w)) out << ' ' << format_double(x);
      out << '\n';
    }
  }

 private:
  std::size_t dim_;
  std::uint64_t oov_seed_;
  std::unordered_map<std::string, std::vector<double>> table_;
};

// Initial vector for an AMR node label. Quotes and sense suffixes are removed
// before lookup; "adult_male" style labels average their tokens.
inline std::vector<double> embed_label(const EmbeddingTable& table,
                                       std::string_view label) {
  label = strip_quotes(label);
  if (const auto* v = table.find(label)) return *v;
  const std::string_view base = strip_sense(label);
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (start <= base.size()) {
    std::size_t end = base.find('_', start);
    if (end == std::string_view::npos) end = base.size();
    if (end > start) tokens.push_back(base.substr(start, end - start));
    start = end + 1;
  }
  if (tokens.size() <= 1) return table.token_vector(base.empty() ? label : base);
  std::vector<double> mean(table.dim(), 0.0);
  for (std::string_view t : tokens) {
    const std::vector<double> v = table.token_vector(t);
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += v[i];
  }
  for (double& x : mean) x /= static_cast<double>(tokens.size());
  return mean;
}

// Weight in [0.25, 1.25) derived from (role, seed) alone.
inline double keyed_edge_weight(std::string_view role, std::uint64_t seed) {
  return 0.25 + to_unit_interval(keyed_hash(role, seed));
}

// Edge parameters: one scalar per role label. Roles missing from the map get
// either a keyed random weight or a constant, depending on the policy.
class EdgeParamVector {
 public:
  enum class Fallback { kKeyed, kConstant };

  EdgeParamVector() = default;
  EdgeParamVector(std::map<std::string, double> weights, std::uint64_t seed,
                  Fallback fallback, double fallback_value = 1.0)
      : weights_(std::move(weights)),
        seed_(seed),
        fallback_(fallback),
        fallback_value_(fallback_value) {}

  double weight(std::string_view role) const {
    auto it = weights_.find(std::string(role));
    if (it != weights_.end()) return it->second;
    return fallback_ == Fallback::kKeyed ? keyed_edge_weight(role, seed_)
                                         : fallback_value_;
  }

  const std::map<std::string, double>& weights() const { return weights_; }
  std::uint64_t seed() const { return seed_; }
  Fallback fallback() const { return fallback_; }
  double fallback_value() const { return fallback_value_; }
  std::size_t size() const { return weights_.size(); }

  // Values in label order (sorted).
  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(weights_.size());
    for (const auto& [role, w] : weights_) out.push_back(w);
    return out;
  }

  void set_values(std::span<const double> values) {
    if (values.size() != weights_.size()) {
      throw std::invalid_argument("edge parameter size mismatch");
    }
    std::size_t i = 0;
    for (auto& [role, w] : weights_) w = values[i++];
  }

  void set(const std::string& role, double w) { weights_[role] = w; }

  std::string serialize() const {
    std::string out = "@seed " + std::to_string(seed_) + "\n";
    out += fallback_ == Fallback::kKeyed
               ? std::string("@fallback keyed\n")
               : "@fallback constant " + format_double(fallback_value_) + "\n";
    for (const auto& [role, w] : weights_) {
      out += role + " " + format_double(w) + "\n";
    }
    return out;
  }

  static EdgeParamVector parse(std::istream& in) {
    EdgeParamVector out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto fields = embed_detail::split_whitespace(line);
      if (fields.empty() || fields[0][0] == '#') continue;
      auto fail = [&](const std::string& why) {
        return DataError("edge parameters line " + std::to_string(line_no) + ": " + why);
      };
      if (fields[0] == "@seed") {
        if (fields.size() != 2 || !embed_detail::is_integer(fields[1])) throw fail("bad seed");
        out.seed_ = std::stoull(std::string(fields[1]));
      } else if (fields[0] == "@fallback") {
        if (fields.size() == 2 && fields[1] == "keyed") {
          out.fallback_ = Fallback::kKeyed;
        } else if (fields.size() == 3 && fields[1] == "constant" &&
                   embed_detail::parse_double(fields[2], out.fallback_value_)) {
          out.fallback_ = Fallback::kConstant;
        } else {
          throw fail("bad fallback");
        }
      } else {
        double w = 0.0;
        if (fields.size() != 2 || !embed_detail::parse_double(fields[1], w)) {
          throw fail("expected '<role> <weight>'");
        }
        out.weights_[std::string(fields[0])] = w;
      }
    }
    return out;
  }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    out << serialize();
  }

  static EdgeParamVector load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge parameter file " + path);
    return parse(in);
  }

  bool operator==(const EdgeParamVector&) const = default;

 private:
  std::map<std::string, double> weights_;
  std::uint64_t seed_ = 0;
  Fallback fallback_ = Fallback::kConstant;
  double fallback_value_ = 1.0;
};

// Random weights in [0.25, 1.25), keyed per label so a label gets the same
// weight in every label set built with the same seed.
inline EdgeParamVector init_edge_weights(const std::set<std::string>& labels,
                                         std::uint64_t seed) {
  if (labels.empty()) throw std::invalid_argument("empty edge label set");
  std::map<std::string, double> w;
  for (const auto& role : labels) w[role] = keyed_edge_weight(role, seed);
  return EdgeParamVector(std::move(w), seed, EdgeParamVector::Fallback::kKeyed);
}

// All-ones parameters, the starting point for training.
inline EdgeParamVector unit_edge_weights(const std::set<std::string>& labels) {
  std::map<std::string, double> w;
  for (const auto& role : labels) w[role] = 1.0;
  return EdgeParamVector(std::move(w), 0, EdgeParamVector::Fallback::kConstant, 1.0);
}

}  // namespace wlamr
