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

// Exact balanced transportation with uniform marginals.
//
// Every source row carries mass 1/n and every target column 1/m. Masses are
// scaled to integers (m units per row, n per column) so the simplex moves
// exact integer flow; the plan is rescaled by 1/(n*m) at the end.
//
// The solver is the primal network simplex on the bipartite spanning-tree
// basis (the MODI form of the transportation simplex). Entering cells are
// chosen by most negative reduced cost, and ties in both the entering and
// the leaving choice go to the lowest cell index. A long run of degenerate
// pivots switches to Bland's rule until the next flow-carrying pivot, which
// rules out cycling.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlamr/common.hpp"

namespace wlamr {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  const std::vector<double>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct TransportPlan {
  Matrix flow;
  Matrix cost;
  double objective = 0.0;
  std::size_t pivots = 0;
};

namespace transport_detail {

class TransportSimplex {
 public:
  explicit TransportSimplex(const Matrix& cost)
      : cost_(cost),
        n_(cost.rows()),
        m_(cost.cols()),
        flow_(n_ * m_, 0),
        basic_(n_ * m_, 0),
        adjacency_(n_ + m_),
        u_(n_),
        v_(m_) {
    double scale = 1.0;
    for (double c : cost.data()) scale = std::max(scale, std::abs(c));
    tolerance_ = 1e-12 * scale;
  }

  void solve() {
    northwest_corner();
    const std::size_t max_pivots = 64 * (n_ + m_) * (n_ + m_) * (n_ + m_) + 1024;
    std::size_t degenerate_run = 0;
    bool bland = false;
    while (true) {
      compute_potentials();
      const std::size_t entering = price(bland);
      if (entering == kNone) return;
      if (++pivots_ > max_pivots) {
        throw std::runtime_error("transport simplex exceeded pivot limit");
      }
      const std::int64_t moved = pivot(entering);
      if (moved == 0) {
        if (++degenerate_run > n_ + m_) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
    }
  }

  std::int64_t flow(std::size_t i, std::size_t j) const { return flow_[i * m_ + j]; }
  std::size_t pivots() const { return pivots_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t row_of(std::size_t cell) const { return cell / m_; }
  std::size_t col_of(std::size_t cell) const { return cell % m_; }

  void add_basic(std::size_t cell) {
    basic_[cell] = 1;
    adjacency_[row_of(cell)].push_back(cell);
    adjacency_[n_ + col_of(cell)].push_back(cell);
  }

  void remove_basic(std::size_t cell) {
    basic_[cell] = 0;
    for (std::size_t node : {row_of(cell), n_ + col_of(cell)}) {
      auto& adj = adjacency_[node];
      adj.erase(std::find(adj.begin(), adj.end(), cell));
    }
  }

  // Initial spanning-tree basis with n + m - 1 cells; zero-flow cells fill in
  // when a row and a column are exhausted together.
  void northwest_corner() {
    std::size_t i = 0, j = 0;
    std::int64_t row_left = static_cast<std::int64_t>(m_);
    std::int64_t col_left = static_cast<std::int64_t>(n_);
    while (true) {
      const std::int64_t q = std::min(row_left, col_left);
      flow_[i * m_ + j] = q;
      add_basic(i * m_ + j);
      row_left -= q;
      col_left -= q;
      if (i + 1 == n_ && j + 1 == m_) break;
      if (row_left == 0 && i + 1 < n_) {
        ++i;
        row_left = static_cast<std::int64_t>(m_);
      } else {
        ++j;
        col_left = static_cast<std::int64_t>(n_);
      }
    }
  }

  // u_i + v_j = c_ij on basic cells, u_0 = 0.
  void compute_potentials() {
    std::vector<char> done(n_ + m_, 0);
    std::vector<std::size_t> queue = {0};
    u_[0] = 0.0;
    done[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t node = queue[q];
      for (std::size_t cell : adjacency_[node]) {
        const std::size_t i = row_of(cell), j = col_of(cell);
        const std::size_t other = node < n_ ? n_ + j : i;
        if (done[other]) continue;
        done[other] = 1;
        if (node < n_) {
          v_[j] = cost_(i, j) - u_[i];
        } else {
          u_[i] = cost_(i, j) - v_[j];
        }
        queue.push_back(other);
      }
    }
  }

  std::size_t price(bool bland) const {
    std::size_t best = kNone;
    double best_rc = -tolerance_;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        const std::size_t cell = i * m_ + j;
        if (basic_[cell]) continue;
        const double rc = cost_(i, j) - u_[i] - v_[j];
        if (rc < best_rc) {
          if (bland) return cell;
          best_rc = rc;
          best = cell;
        }
      }
    }
    return best;
  }

  // Tree path from row node of `entering` to its column node; pushes flow
  // around the cycle and swaps the basis. Returns the amount moved.
  std::int64_t pivot(std::size_t entering) {
    const std::size_t start = row_of(entering);
    const std::size_t goal = n_ + col_of(entering);
    std::vector<std::size_t> via(n_ + m_, kNone);
    std::vector<char> seen(n_ + m_, 0);
    std::vector<std::size_t> queue = {start};
    seen[start] = 1;
    for (std::size_t q = 0; q < queue.size() && !seen[goal]; ++q) {
      const std::size_t node = queue[q];
      for (std::size_t cell : adjacency_[node]) {
        const std::size_t other = node < n_ ? n_ + col_of(cell) : row_of(cell);
        if (seen[other]) continue;
        seen[other] = 1;
        via[other] = cell;
        queue.push_back(other);
      }
    }
    // Walk back from the column; edges alternate starting with the one that
    // touches the column, which loses flow.
    std::vector<std::size_t> path;
    for (std::size_t node = goal; node != start;) {
      const std::size_t cell = via[node];
      path.push_back(cell);
      node = node < n_ ? n_ + col_of(cell) : row_of(cell);
    }
    std::int64_t theta = std::numeric_limits<std::int64_t>::max();
    std::size_t leaving = kNone;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const std::size_t cell = path[k];
      if (flow_[cell] < theta || (flow_[cell] == theta && cell < leaving)) {
        theta = flow_[cell];
        leaving = cell;
      }
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      flow_[path[k]] += (k % 2 == 0) ? -theta : theta;
    }
    flow_[entering] = theta;
    remove_basic(leaving);
    add_basic(entering);
    return theta;
  }

  const Matrix& cost_;
  std::size_t n_, m_;
  std::vector<std::int64_t> flow_;
  std::vector<char> basic_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<double> u_, v_;
  double tolerance_ = 0.0;
  std::size_t pivots_ = 0;
};

}  // namespace transport_detail

// Minimum-cost plan with row sums 1/n and column sums 1/m.
inline TransportPlan solve_transport(const Matrix& cost) {
  if (cost.empty()) throw std::invalid_argument("solve_transport: empty cost matrix");
  for (double c : cost.data()) {
    if (!std::isfinite(c)) throw std::invalid_argument("solve_transport: non-finite cost");
  }
  transport_detail::TransportSimplex simplex(cost);
  simplex.solve();
  const std::size_t n = cost.rows(), m = cost.cols();
  const double unit = 1.0 / static_cast<double>(n * m);
  TransportPlan plan;
  plan.flow = Matrix(n, m);
  plan.cost = cost;
  CompensatedSum objective;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t x = simplex.flow(i, j);
      if (x == 0) continue;
      plan.flow(i, j) = static_cast<double>(x) * unit;
      objective.add(plan.flow(i, j) * cost(i, j));
    }
  }
  plan.objective = objective.value();
  plan.pivots = simplex.pivots();
  return plan;
}

struct AlignedPair {
  std::size_t source = 0;
  std::size_t target = 0;
  double flow = 0.0;
  double work = 0.0;
};

// Cells with flow above min_flow, heaviest work first.
inline std::vector<AlignedPair> extract_alignment(const TransportPlan& plan,
                                                  double min_flow) {
  if (min_flow < 0.0) throw std::invalid_argument("extract_alignment: negative min_flow");
  std::vector<AlignedPair> out;
  for (std::size_t i = 0; i < plan.flow.rows(); ++i) {
    for (std::size_t j = 0; j < plan.flow.cols(); ++j) {
      const double f = plan.flow(i, j);
      if (f > min_flow) out.push_back({i, j, f, f * plan.cost(i, j)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const AlignedPair& a, const AlignedPair& b) {
    return a.work > b.work;
  });
  return out;
}

}  // namespace wlamr
