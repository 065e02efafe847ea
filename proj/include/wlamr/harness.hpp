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

// Metric evaluation against human ratings: per-partition Pearson, arithmetic
// and harmonic means, symmetrization, stored-score replay and K/direction
// ablation grids.

#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wlamr/common.hpp"
#include "wlamr/dataset.hpp"
#include "wlamr/embeddings.hpp"
#include "wlamr/spsa.hpp"
#include "wlamr/wlk.hpp"
#include "wlamr/wwlk.hpp"

namespace wlamr {

// A similarity function over records. Higher means more similar.
struct Metric {
  std::string name;
  std::function<double(const GraphPairRecord&)> score;
  std::vector<std::pair<std::string, std::string>> fingerprint;
};

inline Metric wlk_metric(int k = 2, Direction dir = Direction::kUndirected) {
  Metric m;
  m.name = "wlk";
  m.score = [k, dir](const GraphPairRecord& r) {
    return wlk_similarity(r.graph_a, r.graph_b, k, dir);
  };
  m.fingerprint = {{"metric", "wlk"},
                   {"k", std::to_string(k)},
                   {"direction", std::string(direction_name(dir))},
                   {"similarity", "cosine"}};
  return m;
}

// Similarity is the negated distance; Pearson is invariant to the sign flip
// plus any positive affine rescaling.
inline Metric wwlk_metric(std::shared_ptr<const EmbeddingTable> table, EdgeParamVector theta,
                          WwlkOptions opts, std::string name, std::string theta_source) {
  Metric m;
  m.name = name;
  m.fingerprint = {{"metric", name},
                   {"k", std::to_string(opts.k)},
                   {"direction", std::string(direction_name(opts.direction))},
                   {"similarity", "negated distance"},
                   {"theta", theta_source},
                   {"embedding_dim", std::to_string(table->dim())},
                   {"oov_seed", std::to_string(table->oov_seed())}};
  m.score = [table = std::move(table), theta = std::move(theta), opts](const GraphPairRecord& r) {
    return -wwlk_distance(r.graph_a, r.graph_b, *table, theta, opts);
  };
  return m;
}

// Mean of m(a, b) and m(b, a).
inline Metric symmetrize(Metric m) {
  Metric out;
  out.name = m.name + "-sym";
  out.fingerprint = m.fingerprint;
  out.fingerprint.emplace_back("symmetrized", "yes");
  out.score = [inner = std::move(m.score)](const GraphPairRecord& r) {
    GraphPairRecord swapped;
    swapped.id = r.id;
    swapped.graph_a = r.graph_b;
    swapped.graph_b = r.graph_a;
    swapped.human_score = r.human_score;
    swapped.partition = r.partition;
    return 0.5 * (inner(r) + inner(swapped));
  };
  return out;
}

// Replays "id<TAB>score" lines produced elsewhere (or by `score`).
inline Metric external_scores(std::istream& in, const std::string& source) {
  auto scores = std::make_shared<std::unordered_map<std::string, double>>();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto f = dataset_detail::split_tabs(line);
    double value = 0.0;
    if (f.size() != 2 || !embed_detail::parse_double(f[1], value)) {
      throw DataError(source + " line " + std::to_string(line_no) + ": expected id<TAB>score");
    }
    if (!scores->emplace(f[0], value).second) {
      throw DataError(source + ": duplicate id '" + f[0] + "'");
    }
  }
  Metric m;
  m.name = "external";
  m.fingerprint = {{"metric", "external"}, {"scores", source}};
  m.score = [scores, source](const GraphPairRecord& r) {
    auto it = scores->find(r.id);
    if (it == scores->end()) {
      throw DataError(source + ": no score for record id '" + r.id + "'");
    }
    return it->second;
  };
  return m;
}

inline Metric external_scores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open score file " + path);
  return external_scores(in, path);
}

inline std::vector<double> score_records(const Metric& metric,
                                         const std::vector<GraphPairRecord>& records,
                                         int threads = 1) {
  std::vector<double> out(records.size());
  parallel_for(records.size(), threads, [&](std::size_t i) { out[i] = metric.score(records[i]); });
  return out;
}

inline void write_scores(std::ostream& out, const std::vector<GraphPairRecord>& records,
                         const std::vector<double>& scores) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << records[i].id << '\t' << format_double(scores[i]) << '\n';
  }
}

inline constexpr double kHmeanFloor = 0.01;

inline double arithmetic_mean(std::span<const double> xs) {
  return compensated_sum(xs) / static_cast<double>(xs.size());
}

// Values <= 0 count as kHmeanFloor.
inline double harmonic_mean(std::span<const double> xs, double floor = kHmeanFloor) {
  CompensatedSum inv;
  for (double x : xs) inv.add(1.0 / (x <= 0.0 ? floor : x));
  return static_cast<double>(xs.size()) / inv.value();
}

struct PartitionResult {
  std::string name;
  std::size_t size = 0;
  std::optional<double> rho;  // Pearson x 100
  std::string error;
};

struct EvalReport {
  std::string metric;
  std::vector<std::pair<std::string, std::string>> fingerprint;
  std::vector<PartitionResult> partitions;
  std::optional<double> amean;
  std::optional<double> hmean;

  std::vector<double> valid_scores() const {
    std::vector<double> out;
    for (const auto& p : partitions) {
      if (p.rho) out.push_back(*p.rho);
    }
    return out;
  }

  std::string to_markdown() const {
    std::string out = "# " + metric + "\n\n";
    for (const auto& [k, v] : fingerprint) out += "- " + k + ": " + v + "\n";
    out += "- hmean floor: scores <= 0 count as " + format_double(kHmeanFloor, 6) + "\n\n";
    out += "| partition | n | pearson x100 |\n|---|---:|---:|\n";
    for (const auto& p : partitions) {
      out += "| " + p.name + " | " + std::to_string(p.size) + " | " +
             (p.rho ? fixed(*p.rho) : "error: " + p.error) + " |\n";
    }
    out += "| amean | | " + (amean ? fixed(*amean) : std::string("n/a")) + " |\n";
    out += "| hmean | | " + (hmean ? fixed(*hmean) : std::string("n/a")) + " |\n";
    return out;
  }

  std::string to_csv() const {
    std::string out = "metric,partition,n,pearson_x100,error\n";
    for (const auto& p : partitions) {
      out += metric + "," + p.name + "," + std::to_string(p.size) + "," +
             (p.rho ? fixed(*p.rho) : "") + "," + p.error + "\n";
    }
    out += metric + ",amean,," + (amean ? fixed(*amean) : "") + ",\n";
    out += metric + ",hmean,," + (hmean ? fixed(*hmean) : "") + ",\n";
    return out;
  }

  static std::string fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
  }
};

// Builds a report from precomputed scores (input order matches records).
inline EvalReport report_from_scores(const Metric& metric,
                                     const std::vector<GraphPairRecord>& records,
                                     const std::vector<double>& scores) {
  EvalReport report;
  report.metric = metric.name;
  report.fingerprint = metric.fingerprint;
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto [it, fresh] = groups.try_emplace(records[i].partition);
    if (fresh) order.push_back(records[i].partition);
    it->second.first.push_back(scores[i]);
    it->second.second.push_back(records[i].human_score);
  }
  for (const auto& name : order) {
    const auto& [metric_scores, human] = groups.at(name);
    PartitionResult p;
    p.name = name;
    p.size = metric_scores.size();
    if (p.size < 2) {
      p.error = "fewer than 2 records";
    } else {
      try {
        p.rho = 100.0 * pearson(metric_scores, human);
      } catch (const ZeroVarianceError&) {
        p.error = "zero variance";
      }
    }
    report.partitions.push_back(std::move(p));
  }
  const std::vector<double> valid = report.valid_scores();
  if (!valid.empty()) {
    report.amean = arithmetic_mean(valid);
    report.hmean = harmonic_mean(valid);
  }
  return report;
}

inline EvalReport evaluate(const Metric& metric, const std::vector<GraphPairRecord>& records,
                           int threads = 1) {
  return report_from_scores(metric, records, score_records(metric, records, threads));
}

struct AblationCell {
  int k = 2;
  Direction direction = Direction::kUndirected;
  EvalReport report;
};

using MetricFamily = std::function<Metric(int k, Direction dir)>;

inline std::vector<AblationCell> ablate(const MetricFamily& family, const std::vector<int>& ks,
                                        const std::vector<Direction>& directions,
                                        const std::vector<GraphPairRecord>& records,
                                        int threads = 1) {
  std::vector<AblationCell> cells;
  for (int k : ks) {
    for (Direction d : directions) {
      cells.push_back({k, d, evaluate(family(k, d), records, threads)});
    }
  }
  return cells;
}

inline std::string ablation_markdown(const std::vector<AblationCell>& cells) {
  if (cells.empty()) return "";
  std::string out = "| metric | K | direction |";
  std::string rule = "|---|---:|---|";
  for (const auto& p : cells.front().report.partitions) {
    out += " " + p.name + " |";
    rule += "---:|";
  }
  out += " amean | hmean |\n" + rule + "---:|---:|\n";
  for (const auto& c : cells) {
    out += "| " + c.report.metric + " | " + std::to_string(c.k) + " | " +
           std::string(direction_name(c.direction)) + " |";
    for (const auto& p : c.report.partitions) {
      out += " " + (p.rho ? EvalReport::fixed(*p.rho) : std::string("error")) + " |";
    }
    out += " " + (c.report.amean ? EvalReport::fixed(*c.report.amean) : std::string("n/a")) +
           " | " + (c.report.hmean ? EvalReport::fixed(*c.report.hmean) : std::string("n/a")) +
           " |\n";
  }
  return out;
}

inline std::string ablation_csv(const std::vector<AblationCell>& cells) {
  std::string out = "metric,k,direction,partition,pearson_x100\n";
  for (const auto& c : cells) {
    const std::string prefix = c.report.metric + "," + std::to_string(c.k) + "," +
                               std::string(direction_name(c.direction)) + ",";
    for (const auto& p : c.report.partitions) {
      out += prefix + p.name + "," + (p.rho ? EvalReport::fixed(*p.rho) : "") + "\n";
    }
    out += prefix + "amean," + (c.report.amean ? EvalReport::fixed(*c.report.amean) : "") + "\n";
    out += prefix + "hmean," + (c.report.hmean ? EvalReport::fixed(*c.report.hmean) : "") + "\n";
  }
  return out;
}

}  // namespace wlamr
