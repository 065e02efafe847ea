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

// wlamr command-line tool.
//
//   wlamr parse FILE [--canonical | --triples]
//   wlamr score --data D --metric wlk|wwlk|wwlk-theta [--symmetric] [-o F]
//   wlamr align --data D [--min-flow X] [-o F]
//   wlamr train --train D --dev D --out THETA [--trace F]
//   wlamr transform reify|syno|arg --data D [-o F] [--stats F]
//   wlamr eval --data D (--metric M | --scores F) [--markdown F] [--csv F]
//   wlamr ablate --data D --metric M [--ks 1,2,3,4] [--directions all]
//
// Exit codes: 0 success, 1 data error, 2 configuration or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wlamr/common.hpp"
#include "wlamr/dataset.hpp"
#include "wlamr/direction.hpp"
#include "wlamr/embeddings.hpp"
#include "wlamr/harness.hpp"
#include "wlamr/penman.hpp"
#include "wlamr/spsa.hpp"
#include "wlamr/transforms.hpp"
#include "wlamr/wlk.hpp"
#include "wlamr/wwlk.hpp"

namespace {

using namespace wlamr;

struct GlobalOptions {
  int k = 2;
  std::string direction = "undirected";
  std::string embeddings;
  std::size_t dim = 50;
  std::string edge_params;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "jsonl";
};

GlobalOptions g_opts;

Direction direction() { return parse_direction(g_opts.direction); }

void check_globals() {
  if (g_opts.k < 0) throw ConfigError("--k must be >= 0");
  if (g_opts.threads < 1) throw ConfigError("--threads must be >= 1");
  if (g_opts.dim == 0) throw ConfigError("--dim must be positive");
  (void)direction();
}

std::shared_ptr<const EmbeddingTable> embedding_table() {
  if (g_opts.embeddings.empty()) {
    return std::make_shared<EmbeddingTable>(g_opts.dim, g_opts.seed);
  }
  return std::make_shared<EmbeddingTable>(EmbeddingTable::load(g_opts.embeddings, g_opts.seed));
}

std::vector<GraphPairRecord> dataset(const std::string& path) {
  return load_dataset(path, parse_dataset_format(g_opts.format));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `path`, or stdout when empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << text;
}

Metric make_metric(const std::string& name, int k, Direction dir,
                   const std::shared_ptr<const EmbeddingTable>& table,
                   const std::optional<EdgeParamVector>& trained = std::nullopt) {
  if (name == "wlk") return wlk_metric(k, dir);
  WwlkOptions opts{k, dir};
  if (name == "wwlk") {
    EdgeParamVector theta({}, g_opts.seed, EdgeParamVector::Fallback::kKeyed);
    return wwlk_metric(table, theta, opts, "wwlk",
                       "random keyed, seed " + std::to_string(g_opts.seed));
  }
  if (name == "wwlk-theta") {
    if (trained) return wwlk_metric(table, *trained, opts, "wwlk-theta", "trained in run");
    if (g_opts.edge_params.empty()) throw ConfigError("wwlk-theta needs --edge-params");
    return wwlk_metric(table, EdgeParamVector::load(g_opts.edge_params), opts, "wwlk-theta",
                       "file " + g_opts.edge_params);
  }
  throw ConfigError("unknown metric '" + name + "' (wlk, wwlk, wwlk-theta)");
}

// ---------------------------------------------------------------------------

struct ParseCmd {
  std::string input;
  bool canonical = false;
  bool triples = false;

  int run() const {
    const auto graphs = parse_penman_corpus(read_file(input));
    std::string out;
    for (const auto& g : graphs) {
      if (canonical) {
        out += canonical_form(g) + "\n";
      } else if (triples) {
        for (const auto& t : wlamr::triples(g)) {
          out += t.subject + "\t" + t.predicate + "\t" + t.object + "\n";
        }
        out += "\n";
      } else {
        out += serialize_penman(g) + "\n";
      }
      for (const auto& role : unknown_roles(g)) {
        std::cerr << "warning: unknown role " << role << "\n";
      }
    }
    emit("", out);
    return 0;
  }
};

struct ScoreCmd {
  std::string data;
  std::string metric = "wlk";
  bool symmetric = false;
  std::string output;

  int run() const {
    const auto records = dataset(data);
    Metric m = make_metric(metric, g_opts.k, direction(), embedding_table());
    if (symmetric) m = symmetrize(std::move(m));
    const auto scores = score_records(m, records, g_opts.threads);
    std::ostringstream out;
    write_scores(out, records, scores);
    emit(output, out.str());
    return 0;
  }
};

struct AlignCmd {
  std::string data;
  double min_flow = 0.0;
  std::string output;

  int run() const {
    if (min_flow < 0.0) throw ConfigError("--min-flow must be >= 0");
    const auto records = dataset(data);
    const auto table = embedding_table();
    const EdgeParamVector theta =
        g_opts.edge_params.empty()
            ? EdgeParamVector({}, g_opts.seed, EdgeParamVector::Fallback::kKeyed)
            : EdgeParamVector::load(g_opts.edge_params);
    const WwlkOptions opts{g_opts.k, direction()};
    std::vector<std::string> lines(records.size());
    parallel_for(records.size(), g_opts.threads, [&](std::size_t i) {
      const auto& r = records[i];
      const WwlkResult res = wwlk_compare(r.graph_a, r.graph_b, *table, theta, opts);
      for (const auto& a : align_nodes(res, min_flow)) {
        nlohmann::ordered_json j;
        j["pair_id"] = r.id;
        j["source"] = a.source;
        j["target"] = a.target;
        j["flow"] = a.flow;
        j["work"] = a.work;
        lines[i] += j.dump() + "\n";
      }
    });
    std::string out;
    for (const auto& l : lines) out += l;
    emit(output, out);
    return 0;
  }
};

struct TrainCmd {
  std::string train_path;
  std::string dev_path;
  std::string out_path;
  std::string trace_path;
  TrainConfig cfg;

  int run() {
    if (out_path.empty()) throw ConfigError("train needs --out");
    cfg.seed = g_opts.seed;
    cfg.threads = g_opts.threads;
    cfg.wwlk = {g_opts.k, direction()};
    cfg.validate();
    const auto train_set = dataset(train_path);
    const auto dev_set = dataset(dev_path);
    const auto table = embedding_table();
    const TrainTrace trace = train(train_set, dev_set, cfg, *table);
    trace.theta.save(out_path);
    if (!trace_path.empty()) emit(trace_path, trace.to_jsonl());
    std::cerr << "dev pearson " << format_double(trace.initial_dev, 6) << " -> "
              << format_double(trace.final_dev, 6) << " (epoch " << trace.best_epoch << ")\n";
    return 0;
  }
};

struct TransformCmd {
  std::string op;
  std::string data;
  std::string output;
  std::string stats;
  std::string rules;
  std::string lexicon;
  int max_ops = 3;

  int run() const {
    if (max_ops < 1) throw ConfigError("--max-ops must be >= 1");
    const auto records = dataset(data);
    Rng rng(g_opts.seed);
    std::vector<std::size_t> ops;
    std::vector<GraphPairRecord> out;
    if (op == "reify" || op == "syno") {
      const auto rule_set = rules.empty() ? default_reify_rules() : load_reify_rules(rules);
      std::optional<SynonymLexicon> lex;
      if (op == "syno") {
        if (lexicon.empty()) throw ConfigError("syno needs --lexicon");
        lex = SynonymLexicon::load(lexicon);
      }
      for (const auto& r : records) {
        GraphPairRecord t = r;
        for (AmrGraph* g : {&t.graph_a, &t.graph_b}) {
          TransformResult res = op == "reify" ? reify(*g, rule_set) : syno_replace(*g, *lex, rng);
          ops.push_back(res.op_count);
          *g = std::move(res.graph);
        }
        out.push_back(std::move(t));
      }
    } else if (op == "arg" || op == "arg-partition") {
      out = build_arg_partition(records, rng, max_ops, &ops);
    } else {
      throw ConfigError("unknown transform '" + op + "' (reify, syno, arg)");
    }
    std::ostringstream ss;
    write_dataset(ss, out);
    emit(output, ss.str());
    const std::string name = op == "reify" ? "Reify" : op == "syno" ? "Syno" : "Arg";
    const std::string line = format_op_stats(name, op_stats(ops)) + "\n";
    if (stats.empty()) {
      std::cerr << line;
    } else {
      emit(stats, line);
    }
    return 0;
  }
};

struct EvalCmd {
  std::string data;
  std::string metric;
  std::string scores;
  bool symmetric = false;
  std::string markdown;
  std::string csv;

  int run() const {
    if (metric.empty() == scores.empty()) {
      throw ConfigError("eval needs exactly one of --metric or --scores");
    }
    const auto records = dataset(data);
    Metric m = scores.empty() ? make_metric(metric, g_opts.k, direction(), embedding_table())
                              : external_scores(scores);
    if (symmetric) m = symmetrize(std::move(m));
    const EvalReport report = evaluate(m, records, g_opts.threads);
    emit(markdown, report.to_markdown());
    if (!csv.empty()) emit(csv, report.to_csv());
    return 0;
  }
};

struct AblateCmd {
  std::string data;
  std::string metric = "wwlk";
  std::string ks = "1,2,3,4";
  std::string directions = "all";
  bool retrain = false;
  std::string train_path;
  std::string dev_path;
  TrainConfig cfg;
  std::string markdown;
  std::string csv;

  std::vector<int> parse_ks() const {
    std::vector<int> out;
    std::stringstream ss(ks);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const int k = std::stoi(item, &used);
        if (used != item.size() || k < 0) throw std::invalid_argument(item);
        out.push_back(k);
      } catch (const std::exception&) {
        throw ConfigError("bad --ks entry '" + item + "'");
      }
    }
    if (out.empty()) throw ConfigError("--ks is empty");
    return out;
  }

  std::vector<Direction> parse_directions() const {
    if (directions == "all") return {kAllDirections.begin(), kAllDirections.end()};
    std::vector<Direction> out;
    std::stringstream ss(directions);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_direction(item));
    if (out.empty()) throw ConfigError("--directions is empty");
    return out;
  }

  int run() {
    const auto grid_k = parse_ks();
    const auto grid_dir = parse_directions();
    if (retrain && metric != "wwlk-theta") throw ConfigError("--retrain applies to wwlk-theta");
    if (retrain && (train_path.empty() || dev_path.empty())) {
      throw ConfigError("--retrain needs --train and --dev");
    }
    const auto records = dataset(data);
    const auto table = embedding_table();
    std::vector<GraphPairRecord> train_set, dev_set;
    if (retrain) {
      train_set = dataset(train_path);
      dev_set = dataset(dev_path);
      cfg.seed = g_opts.seed;
      cfg.threads = g_opts.threads;
    }
    MetricFamily family = [&](int k, Direction dir) {
      if (retrain) {
        TrainConfig c = cfg;
        c.wwlk = {k, dir};
        return make_metric(metric, k, dir, table, train(train_set, dev_set, c, *table).theta);
      }
      return make_metric(metric, k, dir, table);
    };
    const auto cells = ablate(family, grid_k, grid_dir, records, g_opts.threads);
    emit(markdown, ablation_markdown(cells));
    if (!csv.empty()) emit(csv, ablation_csv(cells));
    return 0;
  }
};

void add_train_config(CLI::App* cmd, TrainConfig& cfg) {
  cmd->add_option("--batch-size", cfg.batch_size, "mini-batch size")->capture_default_str();
  cmd->add_option("--epochs", cfg.epochs, "training epochs")->capture_default_str();
  cmd->add_option("--a0", cfg.a0, "initial step size")->capture_default_str();
  cmd->add_option("--c0", cfg.c0, "initial perturbation size")->capture_default_str();
  cmd->add_option("--decay-gamma", cfg.decay_gamma)->capture_default_str();
  cmd->add_option("--decay-c", cfg.decay_c)->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AMR similarity with Weisfeiler-Leman kernels"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--k", g_opts.k, "WL iterations")->capture_default_str();
  app.add_option("--direction", g_opts.direction, "undirected, top-down, bottom-up, 2ways")
      ->capture_default_str();
  app.add_option("--embeddings", g_opts.embeddings, "word2vec text file");
  app.add_option("--dim", g_opts.dim, "vector size when no --embeddings")->capture_default_str();
  app.add_option("--edge-params", g_opts.edge_params, "edge parameter file");
  app.add_option("--seed", g_opts.seed, "seed for every stochastic component")
      ->capture_default_str();
  app.add_option("--threads", g_opts.threads, "worker threads")->capture_default_str();
  app.add_option("--format", g_opts.format, "dataset format: jsonl or tsv")->capture_default_str();

  ParseCmd parse_cmd;
  auto* parse = app.add_subcommand("parse", "parse and re-serialize PENMAN graphs");
  parse->add_option("input", parse_cmd.input, "PENMAN file")->required();
  auto* canon = parse->add_flag("--canonical", parse_cmd.canonical, "print canonical forms");
  parse->add_flag("--triples", parse_cmd.triples, "print triples")->excludes(canon);

  ScoreCmd score_cmd;
  auto* score = app.add_subcommand("score", "score every record of a dataset");
  score->add_option("--data", score_cmd.data)->required();
  score->add_option("--metric", score_cmd.metric)->capture_default_str();
  score->add_flag("--symmetric", score_cmd.symmetric);
  score->add_option("-o,--output", score_cmd.output);

  AlignCmd align_cmd;
  auto* align = app.add_subcommand("align", "export WWLK node alignments");
  align->add_option("--data", align_cmd.data)->required();
  align->add_option("--min-flow", align_cmd.min_flow)->capture_default_str();
  align->add_option("-o,--output", align_cmd.output);

  TrainCmd train_cmd;
  auto* train_app = app.add_subcommand("train", "learn edge parameters with SPSA");
  train_app->add_option("--train", train_cmd.train_path)->required();
  train_app->add_option("--dev", train_cmd.dev_path)->required();
  train_app->add_option("--out", train_cmd.out_path)->required();
  train_app->add_option("--trace", train_cmd.trace_path);
  add_train_config(train_app, train_cmd.cfg);

  TransformCmd transform_cmd;
  auto* transform = app.add_subcommand("transform", "apply reify, syno or arg to a dataset");
  transform->add_option("op", transform_cmd.op, "reify, syno, arg")->required();
  transform->add_option("--data", transform_cmd.data)->required();
  transform->add_option("-o,--output", transform_cmd.output);
  transform->add_option("--stats", transform_cmd.stats);
  transform->add_option("--rules", transform_cmd.rules, "reification rule TSV");
  transform->add_option("--lexicon", transform_cmd.lexicon, "synonym lexicon TSV");
  transform->add_option("--max-ops", transform_cmd.max_ops)->capture_default_str();

  EvalCmd eval_cmd;
  auto* eval = app.add_subcommand("eval", "Pearson report against human scores");
  eval->add_option("--data", eval_cmd.data)->required();
  eval->add_option("--metric", eval_cmd.metric);
  eval->add_option("--scores", eval_cmd.scores, "id<TAB>score file");
  eval->add_flag("--symmetric", eval_cmd.symmetric);
  eval->add_option("--markdown", eval_cmd.markdown);
  eval->add_option("--csv", eval_cmd.csv);

  AblateCmd ablate_cmd;
  auto* ablate_app = app.add_subcommand("ablate", "K x direction grid");
  ablate_app->add_option("--data", ablate_cmd.data)->required();
  ablate_app->add_option("--metric", ablate_cmd.metric)->capture_default_str();
  ablate_app->add_option("--ks", ablate_cmd.ks)->capture_default_str();
  ablate_app->add_option("--directions", ablate_cmd.directions)->capture_default_str();
  ablate_app->add_flag("--retrain", ablate_cmd.retrain);
  ablate_app->add_option("--train", ablate_cmd.train_path);
  ablate_app->add_option("--dev", ablate_cmd.dev_path);
  ablate_app->add_option("--markdown", ablate_cmd.markdown);
  ablate_app->add_option("--csv", ablate_cmd.csv);
  add_train_config(ablate_app, ablate_cmd.cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    check_globals();
    if (*parse) return parse_cmd.run();
    if (*score) return score_cmd.run();
    if (*align) return align_cmd.run();
    if (*train_app) return train_cmd.run();
    if (*transform) return transform_cmd.run();
    if (*eval) return eval_cmd.run();
    if (*ablate_app) return ablate_cmd.run();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
