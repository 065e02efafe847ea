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

// Learning edge parameters with simultaneous perturbation stochastic
// approximation (SPSA).
//
// The objective on a mini-batch is J = 1 - pearson(-distance, human score).
// Each step draws a Rademacher vector mu, evaluates J at theta + c_t mu and
// theta - c_t mu, and moves theta by -gamma_t times the estimate
// (J+ - J-) / (2 c_t mu_i), with gamma_t = a0 / (t+1)^decay_gamma and
// c_t = c0 / (t+1)^decay_c.

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "wlamr/common.hpp"
#include "wlamr/dataset.hpp"
#include "wlamr/embeddings.hpp"
#include "wlamr/wwlk.hpp"

namespace wlamr {

// Pearson correlation is undefined for a constant series.
class ZeroVarianceError : public DataError {
 public:
  using DataError::DataError;
};

inline double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("pearson: need at least 2 points");
  const double n = static_cast<double>(x.size());
  const double mx = compensated_sum(x) / n;
  const double my = compensated_sum(y) / n;
  CompensatedSum sxy, sxx, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  if (sxx.value() <= 0.0 || syy.value() <= 0.0) {
    throw ZeroVarianceError("pearson: zero variance");
  }
  const double r = sxy.value() / std::sqrt(sxx.value() * syy.value());
  return std::clamp(r, -1.0, 1.0);
}

struct TrainConfig {
  int batch_size = 16;
  int epochs = 10;
  double a0 = 0.5;
  double c0 = 0.1;
  double decay_gamma = 0.602;
  double decay_c = 0.101;
  std::uint64_t seed = 0;
  WwlkOptions wwlk;
  int threads = 1;

  void validate() const {
    if (batch_size < 2) throw ConfigError("batch_size must be >= 2");
    if (epochs < 1) throw ConfigError("epochs must be >= 1");
    if (!(a0 > 0.0) || !(c0 > 0.0)) throw ConfigError("a0 and c0 must be positive");
    if (wwlk.k < 0) throw ConfigError("K must be >= 0");
  }

  double gain(std::size_t t) const {
    return a0 / std::pow(static_cast<double>(t + 1), decay_gamma);
  }
  double perturbation(std::size_t t) const {
    return c0 / std::pow(static_cast<double>(t + 1), decay_c);
  }
};

struct SpsaStepResult {
  std::vector<double> theta;
  double loss = 0.0;  // mean of the two evaluations
};

// One SPSA update. `objective` is called exactly twice.
template <typename Objective>
SpsaStepResult spsa_step(std::span<const double> theta, Objective&& objective,
                         std::size_t t, const TrainConfig& cfg, Rng& rng) {
  const double c = cfg.perturbation(t);
  const double gamma = cfg.gain(t);
  if (!(c > 0.0)) throw std::invalid_argument("spsa_step: perturbation must be positive");
  std::vector<double> mu(theta.size());
  for (double& m : mu) m = rng.sign();
  std::vector<double> plus(theta.begin(), theta.end());
  std::vector<double> minus(theta.begin(), theta.end());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    plus[i] += c * mu[i];
    minus[i] -= c * mu[i];
  }
  const double j_plus = objective(std::as_const(plus));
  const double j_minus = objective(std::as_const(minus));
  SpsaStepResult out;
  out.theta.assign(theta.begin(), theta.end());
  const double diff = (j_plus - j_minus) / (2.0 * c);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    out.theta[i] -= gamma * diff * mu[i];  // 1/mu_i == mu_i for mu_i = +-1
  }
  out.loss = 0.5 * (j_plus + j_minus);
  return out;
}

// Negated WWLK distances, one per record, in input order.
inline std::vector<double> wwlk_similarities(const std::vector<const GraphPairRecord*>& batch,
                                             const EdgeParamVector& theta,
                                             const EmbeddingTable& table,
                                             const WwlkOptions& opts, int threads = 1) {
  std::vector<double> sims(batch.size());
  parallel_for(batch.size(), threads, [&](std::size_t i) {
    sims[i] = -wwlk_distance(batch[i]->graph_a, batch[i]->graph_b, table, theta, opts);
  });
  return sims;
}

inline std::vector<const GraphPairRecord*> record_pointers(
    const std::vector<GraphPairRecord>& records) {
  std::vector<const GraphPairRecord*> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(&r);
  return out;
}

// Pearson of negated distances against human scores.
inline double wwlk_correlation(const std::vector<const GraphPairRecord*>& batch,
                               const EdgeParamVector& theta, const EmbeddingTable& table,
                               const WwlkOptions& opts, int threads = 1) {
  const std::vector<double> sims = wwlk_similarities(batch, theta, table, opts, threads);
  std::vector<double> human;
  human.reserve(batch.size());
  for (const auto* r : batch) human.push_back(r->human_score);
  return pearson(sims, human);
}

// 1 - pearson(-distance, human score); in [0, 2].
inline double batch_loss(const std::vector<const GraphPairRecord*>& batch,
                         const EdgeParamVector& theta, const EmbeddingTable& table,
                         const WwlkOptions& opts, int threads = 1) {
  if (batch.size() < 2) throw std::invalid_argument("batch_loss: batch needs >= 2 pairs");
  return 1.0 - wwlk_correlation(batch, theta, table, opts, threads);
}

inline double batch_loss(const std::vector<GraphPairRecord>& batch,
                         const EdgeParamVector& theta, const EmbeddingTable& table,
                         const WwlkOptions& opts, int threads = 1) {
  return batch_loss(record_pointers(batch), theta, table, opts, threads);
}

// Role labels (under the direction mode) used by a set of records.
inline std::set<std::string> corpus_role_labels(const std::vector<GraphPairRecord>& records,
                                                Direction dir) {
  std::set<std::string> out;
  for (const auto& r : records) {
    for (const auto* g : {&r.graph_a, &r.graph_b}) {
      const auto labels = role_labels(*g, dir);
      out.insert(labels.begin(), labels.end());
    }
  }
  return out;
}

struct TrainStep {
  std::size_t t = 0;
  int epoch = 0;
  double loss = 0.0;
  std::uint64_t theta_hash = 0;
};

struct TrainTrace {
  std::vector<TrainStep> steps;
  EdgeParamVector theta;            // best parameters on dev
  double initial_dev = 0.0;         // dev Pearson with the starting parameters
  double final_dev = 0.0;           // dev Pearson of `theta`
  std::vector<double> epoch_dev;    // dev Pearson after each epoch
  int best_epoch = 0;               // 0 = starting parameters
  std::size_t skipped_batches = 0;  // batches with a constant score series
  std::size_t objective_evaluations = 0;

  std::string to_jsonl() const {
    std::string out;
    for (const auto& s : steps) {
      nlohmann::ordered_json j;
      j["t"] = s.t;
      j["epoch"] = s.epoch;
      j["loss"] = s.loss;
      char hash[17];
      std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(s.theta_hash));
      j["theta_hash"] = hash;
      out += j.dump() + "\n";
    }
    nlohmann::ordered_json summary;
    summary["summary"] = true;
    summary["steps"] = steps.size();
    summary["initial_dev"] = initial_dev;
    summary["final_dev"] = final_dev;
    summary["best_epoch"] = best_epoch;
    summary["epoch_dev"] = epoch_dev;
    summary["skipped_batches"] = skipped_batches;
    out += summary.dump() + "\n";
    return out;
  }
};

inline std::uint64_t theta_hash(const EdgeParamVector& theta) {
  return fnv1a(theta.serialize());
}

// Mini-batch SPSA from all-ones parameters. The returned parameters are the
// epoch checkpoint (including the start) with the best dev correlation.
inline TrainTrace train(const std::vector<GraphPairRecord>& records,
                        const std::vector<GraphPairRecord>& dev, const TrainConfig& cfg,
                        const EmbeddingTable& table) {
  cfg.validate();
  if (records.empty()) throw DataError("training set is empty");
  if (dev.size() < 2) throw DataError("dev set needs at least 2 records");
  std::set<std::string> labels = corpus_role_labels(records, cfg.wwlk.direction);
  const auto dev_labels = corpus_role_labels(dev, cfg.wwlk.direction);
  labels.insert(dev_labels.begin(), dev_labels.end());
  if (labels.empty()) throw DataError("training data has no edges");

  const auto dev_ptrs = record_pointers(dev);
  auto dev_pearson = [&](const EdgeParamVector& theta) {
    try {
      return wwlk_correlation(dev_ptrs, theta, table, cfg.wwlk, cfg.threads);
    } catch (const ZeroVarianceError&) {
      throw DataError("dev set is degenerate (constant scores or distances)");
    }
  };

  TrainTrace trace;
  EdgeParamVector theta = unit_edge_weights(labels);
  trace.initial_dev = dev_pearson(theta);
  trace.theta = theta;
  trace.final_dev = trace.initial_dev;

  Rng rng(cfg.seed);
  std::vector<std::size_t> order(records.size());
  std::size_t t = 0;
  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
      const std::size_t end = std::min(order.size(), start + cfg.batch_size);
      if (end - start < 2) continue;
      std::vector<const GraphPairRecord*> batch;
      for (std::size_t i = start; i < end; ++i) batch.push_back(&records[order[i]]);
      const bool constant_scores =
          std::all_of(batch.begin(), batch.end(), [&](const GraphPairRecord* r) {
            return r->human_score == batch.front()->human_score;
          });
      if (constant_scores) {
        ++trace.skipped_batches;
        continue;
      }
      EdgeParamVector probe = theta;
      auto objective = [&](const std::vector<double>& values) {
        ++trace.objective_evaluations;
        probe.set_values(values);
        return batch_loss(batch, probe, table, cfg.wwlk, cfg.threads);
      };
      const std::vector<double> current = theta.values();
      SpsaStepResult step;
      try {
        step = spsa_step(current, objective, t, cfg, rng);
      } catch (const ZeroVarianceError&) {
        ++trace.skipped_batches;
        continue;
      }
      theta.set_values(step.theta);
      trace.steps.push_back({t, epoch, step.loss, theta_hash(theta)});
      ++t;
    }
    const double dev_rho = dev_pearson(theta);
    trace.epoch_dev.push_back(dev_rho);
    if (dev_rho > trace.final_dev) {
      trace.final_dev = dev_rho;
      trace.theta = theta;
      trace.best_epoch = epoch;
    }
  }
  return trace;
}

}  // namespace wlamr
