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

// Scored AMR pair datasets.
//
// JSONL schema, one object per line:
//   {"id": str, "amr_a": PENMAN, "amr_b": PENMAN, "score": number,
//    "partition": str}
// TSV: id, amr_a, amr_b, score[, partition], tab separated, optional header.

#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wlamr/common.hpp"
#include "wlamr/penman.hpp"

namespace wlamr {

struct GraphPairRecord {
  std::string id;
  AmrGraph graph_a;
  AmrGraph graph_b;
  double human_score = 0.0;
  std::string partition = "main";
};

enum class DatasetFormat { kJsonl, kTsv };

inline DatasetFormat parse_dataset_format(std::string_view name) {
  if (name == "jsonl") return DatasetFormat::kJsonl;
  if (name == "tsv") return DatasetFormat::kTsv;
  throw ConfigError("unknown dataset format '" + std::string(name) + "'");
}

// Min-max rescales each partition whose scores leave [0, 1] (Likert inputs).
inline void normalize_scores(std::vector<GraphPairRecord>& records) {
  std::map<std::string, std::pair<double, double>> range;
  for (const auto& r : records) {
    auto [it, fresh] = range.try_emplace(r.partition, r.human_score, r.human_score);
    it->second.first = std::min(it->second.first, r.human_score);
    it->second.second = std::max(it->second.second, r.human_score);
  }
  for (auto& r : records) {
    const auto [lo, hi] = range.at(r.partition);
    if (lo >= 0.0 && hi <= 1.0) continue;
    if (hi == lo) {
      throw DataError("partition '" + r.partition +
                      "' has constant out-of-range scores; cannot normalize");
    }
    r.human_score = (r.human_score - lo) / (hi - lo);
  }
}

namespace dataset_detail {

inline AmrGraph parse_record_graph(const std::string& text, const std::string& id,
                                   const char* field) {
  try {
    return parse_penman(text);
  } catch (const DataError& e) {
    throw DataError("record '" + id + "' " + field + ": " + e.what());
  }
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos
                                                               : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  if (!out.empty() && !out.back().empty() && out.back().back() == '\r') {
    out.back().pop_back();
  }
  return out;
}

}  // namespace dataset_detail

inline std::vector<GraphPairRecord> parse_dataset(std::istream& in, DatasetFormat format,
                                                  bool normalize = true) {
  std::vector<GraphPairRecord> out;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_no);
    GraphPairRecord rec;
    std::string amr_a, amr_b;
    if (format == DatasetFormat::kJsonl) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw DataError(where + ": invalid JSON: " + e.what());
      }
      if (!j.is_object() || !j.contains("id") || !j.contains("amr_a") ||
          !j.contains("amr_b") || !j.contains("score")) {
        throw DataError(where + ": record needs id, amr_a, amr_b and score");
      }
      rec.id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
      if (!j["amr_a"].is_string() || !j["amr_b"].is_string()) {
        throw DataError("record '" + rec.id + "': amr_a and amr_b must be strings");
      }
      if (!j["score"].is_number()) {
        throw DataError("record '" + rec.id + "': non-numeric score " + j["score"].dump());
      }
      amr_a = j["amr_a"].get<std::string>();
      amr_b = j["amr_b"].get<std::string>();
      rec.human_score = j["score"].get<double>();
      if (j.contains("partition")) {
        if (!j["partition"].is_string()) {
          throw DataError("record '" + rec.id + "': partition must be a string");
        }
        rec.partition = j["partition"].get<std::string>();
      }
    } else {
      const auto fields = dataset_detail::split_tabs(line);
      if (out.empty() && ids.empty() && !fields.empty() && fields[0] == "id") continue;
      if (fields.size() != 4 && fields.size() != 5) {
        throw DataError(where + ": expected 4 or 5 tab-separated fields");
      }
      rec.id = fields[0];
      amr_a = fields[1];
      amr_b = fields[2];
      std::size_t used = 0;
      try {
        rec.human_score = std::stod(fields[3], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != fields[3].size()) {
        throw DataError("record '" + rec.id + "': non-numeric score '" + fields[3] + "'");
      }
      if (fields.size() == 5) rec.partition = fields[4];
    }
    if (!std::isfinite(rec.human_score)) {
      throw DataError("record '" + rec.id + "': score is not finite");
    }
    if (!ids.insert(rec.id).second) throw DataError("duplicate record id '" + rec.id + "'");
    rec.graph_a = dataset_detail::parse_record_graph(amr_a, rec.id, "amr_a");
    rec.graph_b = dataset_detail::parse_record_graph(amr_b, rec.id, "amr_b");
    out.push_back(std::move(rec));
  }
  if (normalize) normalize_scores(out);
  return out;
}

inline std::vector<GraphPairRecord> load_dataset(const std::string& path,
                                                 DatasetFormat format = DatasetFormat::kJsonl,
                                                 bool normalize = true) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset " + path);
  try {
    return parse_dataset(in, format, normalize);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

inline std::string record_to_jsonl(const GraphPairRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["amr_a"] = serialize_penman(r.graph_a);
  j["amr_b"] = serialize_penman(r.graph_b);
  j["score"] = r.human_score;
  j["partition"] = r.partition;
  return j.dump();
}

inline void write_dataset(std::ostream& out, const std::vector<GraphPairRecord>& records) {
  for (const auto& r : records) out << record_to_jsonl(r) << '\n';
}

}  // namespace wlamr
