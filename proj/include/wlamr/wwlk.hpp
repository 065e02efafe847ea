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

// Wasserstein Weisfeiler-Leman distance between AMR graphs.
//
// Nodes start from their label vectors and are contextualized K times with
//   x(v)^{k+1} = 1/2 * (x(v)^k + 1/deg(v) * sum_{u in N(v)} w(u,v) * x(u)^k),
// where w(u,v) is the edge parameter of the connecting role. A node's row in
// the embedding is the concatenation of its K+1 vectors. The distance is the
// optimal transport cost between the two row sets under Euclidean cost.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlamr/direction.hpp"
#include "wlamr/embeddings.hpp"
#include "wlamr/penman.hpp"
#include "wlamr/transport.hpp"

namespace wlamr {

struct WlEmbedding {
  Matrix matrix;                        // n x (K+1)*d
  std::vector<std::string> node_order;  // row i belongs to node_order[i]
  int k = 0;
  std::size_t dim = 0;
};

struct WwlkOptions {
  int k = 2;
  Direction direction = Direction::kUndirected;
};

inline WlEmbedding wl_embed(const AmrGraph& g, const EmbeddingTable& table,
                            const EdgeParamVector& weights, int k,
                            Direction dir = Direction::kUndirected) {
  if (k < 0) throw std::invalid_argument("wl_embed: K must be >= 0");
  const std::size_t n = g.size();
  const std::size_t d = table.dim();
  WlEmbedding out;
  out.k = k;
  out.dim = d;
  out.matrix = Matrix(n, static_cast<std::size_t>(k + 1) * d);
  out.node_order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    out.node_order.push_back(g.node(v).id);
    const std::vector<double> x0 = embed_label(table, g.node(v).label);
    std::copy(x0.begin(), x0.end(), out.matrix.row(v).begin());
  }
  const auto nbrs = neighborhoods(g, dir);
  std::vector<std::vector<double>> w(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const Neighbor& u : nbrs[v]) w[v].push_back(weights.weight(u.role));
  }
  std::vector<double> acc(d);
  for (int it = 0; it < k; ++it) {
    const std::size_t src = static_cast<std::size_t>(it) * d;
    const std::size_t dst = src + d;
    for (std::size_t v = 0; v < n; ++v) {
      auto row = out.matrix.row(v);
      if (nbrs[v].empty()) {
        std::copy(row.begin() + src, row.begin() + src + d, row.begin() + dst);
        continue;
      }
      std::fill(acc.begin(), acc.end(), 0.0);
      for (std::size_t e = 0; e < nbrs[v].size(); ++e) {
        const auto urow = out.matrix.row(nbrs[v][e].node);
        for (std::size_t i = 0; i < d; ++i) acc[i] += w[v][e] * urow[src + i];
      }
      const double inv_deg = 1.0 / static_cast<double>(nbrs[v].size());
      for (std::size_t i = 0; i < d; ++i) {
        row[dst + i] = 0.5 * (row[src + i] + inv_deg * acc[i]);
      }
    }
  }
  return out;
}

// Pairwise Euclidean distances between embedding rows.
inline Matrix cost_matrix(const WlEmbedding& a, const WlEmbedding& b) {
  if (a.matrix.cols() != b.matrix.cols()) {
    throw std::invalid_argument("cost_matrix: embedding widths differ (" +
                                std::to_string(a.matrix.cols()) + " vs " +
                                std::to_string(b.matrix.cols()) + ")");
  }
  Matrix d(a.matrix.rows(), b.matrix.rows());
  for (std::size_t i = 0; i < a.matrix.rows(); ++i) {
    const auto ra = a.matrix.row(i);
    for (std::size_t j = 0; j < b.matrix.rows(); ++j) {
      const auto rb = b.matrix.row(j);
      double s = 0.0;
      for (std::size_t c = 0; c < ra.size(); ++c) {
        const double diff = ra[c] - rb[c];
        s += diff * diff;
      }
      d(i, j) = std::sqrt(s);
    }
  }
  return d;
}

struct WwlkResult {
  WlEmbedding source;
  WlEmbedding target;
  TransportPlan plan;
  double distance = 0.0;
};

inline WwlkResult wwlk_compare(const AmrGraph& a, const AmrGraph& b,
                               const EmbeddingTable& table,
                               const EdgeParamVector& weights,
                               const WwlkOptions& opts = {}) {
  WwlkResult r;
  r.source = wl_embed(a, table, weights, opts.k, opts.direction);
  r.target = wl_embed(b, table, weights, opts.k, opts.direction);
  r.plan = solve_transport(cost_matrix(r.source, r.target));
  r.distance = r.plan.objective;
  return r;
}

inline double wwlk_distance(const AmrGraph& a, const AmrGraph& b,
                            const EmbeddingTable& table,
                            const EdgeParamVector& weights,
                            const WwlkOptions& opts = {}) {
  return wwlk_compare(a, b, table, weights, opts).distance;
}

struct NodeAlignment {
  std::string source;
  std::string target;
  double flow = 0.0;
  double work = 0.0;
};

inline std::vector<NodeAlignment> align_nodes(const WwlkResult& r, double min_flow) {
  std::vector<NodeAlignment> out;
  for (const AlignedPair& p : extract_alignment(r.plan, min_flow)) {
    out.push_back({r.source.node_order[p.source], r.target.node_order[p.target],
                   p.flow, p.work});
  }
  return out;
}

}  // namespace wlamr
