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

// Symbolic Weisfeiler-Leman kernel over AMR graphs.
//
// Each iteration gives every node the label
//   old_label SEP sorted(role ROLE_SEP [neighbor_label] ...)
// and the kernel is the cosine of the per-iteration label histograms of the
// two graphs, concatenated.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlamr/direction.hpp"
#include "wlamr/penman.hpp"

namespace wlamr {

// Sentinel bytes used in compressed labels. Nested neighbor labels are
// bracketed, so a compressed label decodes uniquely.
inline constexpr char kWlLabelSep = '\x1f';
inline constexpr char kWlRoleSep = '\x1e';
inline constexpr char kWlItemSep = '\x1d';
inline constexpr char kWlOpen = '\x02';
inline constexpr char kWlClose = '\x03';

// Human-readable rendering: "drink-01|:arg0 cat,:arg1 milk".
inline std::string printable_wl_label(std::string_view label) {
  std::string out;
  for (char c : label) {
    switch (c) {
      case kWlLabelSep: out += '|'; break;
      case kWlRoleSep: out += ' '; break;
      case kWlItemSep: out += ','; break;
      case kWlOpen:
      case kWlClose: break;
      default: out += c;
    }
  }
  return out;
}

inline std::vector<std::string> initial_wl_labels(const AmrGraph& g) {
  std::vector<std::string> out;
  out.reserve(g.size());
  for (const Node& n : g.nodes()) out.push_back(n.label);
  return out;
}

// One WL relabeling step.
inline std::vector<std::string> wl_relabel(const AmrGraph& g,
                                           const std::vector<std::string>& labels,
                                           Direction dir) {
  if (labels.size() != g.size()) {
    throw std::invalid_argument("wl_relabel: expected " + std::to_string(g.size()) +
                                " labels, got " + std::to_string(labels.size()));
  }
  const auto nbrs = neighborhoods(g, dir);
  std::vector<std::string> out(g.size());
  std::vector<std::string> items;
  for (std::size_t v = 0; v < g.size(); ++v) {
    items.clear();
    for (const Neighbor& u : nbrs[v]) {
      std::string item = u.role;
      item += kWlRoleSep;
      item += kWlOpen;
      item += labels[u.node];
      item += kWlClose;
      items.push_back(std::move(item));
    }
    std::sort(items.begin(), items.end());
    std::string label = labels[v];
    label += kWlLabelSep;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) label += kWlItemSep;
      label += items[i];
    }
    out[v] = std::move(label);
  }
  return out;
}

// Label histograms for iterations 0..K.
struct WlFeatureMap {
  std::vector<std::map<std::string, std::size_t>> iterations;

  std::size_t k() const { return iterations.empty() ? 0 : iterations.size() - 1; }
};

inline WlFeatureMap wlk_features(const AmrGraph& g, int k,
                                 Direction dir = Direction::kUndirected) {
  if (k < 0) throw std::invalid_argument("wlk_features: K must be >= 0");
  WlFeatureMap out;
  std::vector<std::string> labels = initial_wl_labels(g);
  for (int it = 0;; ++it) {
    auto& hist = out.iterations.emplace_back();
    for (const auto& l : labels) ++hist[l];
    if (it == k) break;
    labels = wl_relabel(g, labels, dir);
  }
  return out;
}

// Cosine of the concatenated histograms. Features of different iterations
// occupy different dimensions.
inline double wlk_cosine(const WlFeatureMap& a, const WlFeatureMap& b) {
  if (a.iterations.size() != b.iterations.size()) {
    throw std::invalid_argument("wlk_cosine: iteration count mismatch");
  }
  std::uint64_t dot = 0, na = 0, nb = 0;
  for (std::size_t k = 0; k < a.iterations.size(); ++k) {
    const auto& ha = a.iterations[k];
    const auto& hb = b.iterations[k];
    for (const auto& [label, c] : ha) {
      na += c * c;
      auto it = hb.find(label);
      if (it != hb.end()) dot += c * it->second;
    }
    for (const auto& [label, c] : hb) nb += c * c;
  }
  if (na == 0 || nb == 0) return 0.0;
  return static_cast<double>(dot) /
         (std::sqrt(static_cast<double>(na)) * std::sqrt(static_cast<double>(nb)));
}

inline double wlk_similarity(const AmrGraph& a, const AmrGraph& b, int k = 2,
                             Direction dir = Direction::kUndirected) {
  return wlk_cosine(wlk_features(a, k, dir), wlk_features(b, k, dir));
}

}  // namespace wlamr
