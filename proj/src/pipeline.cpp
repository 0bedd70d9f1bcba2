// Copyright 2026 Taureau Contributors
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

#include "taureau/pipeline.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "taureau/aggregate.hpp"
#include "taureau/corpus.hpp"
#include "taureau/market.hpp"
#include "taureau/predict.hpp"
#include "taureau/report.hpp"
#include "taureau/sentiment.hpp"

namespace taureau {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());

  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected key=value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }

  auto require = [&](const std::string& key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error("config missing key '" + key + "'");
    return it->second;
  };
  auto optional = [&](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };

  // Paths in the config resolve relative to the config file's directory.
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : path.parent_path() / fp;
  };

  PipelineConfig cfg;
  cfg.company = require("company");
  cfg.tweets = resolve(require("tweets"));
  cfg.lexicon = resolve(require("lexicon"));
  cfg.prices = resolve(require("prices"));
  cfg.index_prices = resolve(require("index_prices"));
  cfg.include = split_list(optional("include", cfg.company));
  cfg.exclude = split_list(optional("exclude", ""));
  cfg.window = std::stoi(optional("window", "3"));
  auto lag_strings = split_list(optional("lags", "1,2,3"));
  cfg.lags.clear();
  for (const auto& s : lag_strings) cfg.lags.push_back(std::stoi(s));
  cfg.recommendation_threshold = std::stod(optional("recommendation_threshold", "0.5"));
  cfg.report_threshold = std::stod(optional("report_threshold", "10.0"));
  cfg.top_k = std::stoi(optional("top_k", "15"));
  cfg.train_start = parse_date(require("train_start"));
  cfg.train_end = parse_date(require("train_end"));
  cfg.test_start = parse_date(require("test_start"));
  cfg.test_end = parse_date(require("test_end"));
  cfg.output_dir = resolve(require("output_dir"));
  cfg.seed = std::stoull(optional("seed", "42"));
  cfg.null_trials = std::stoi(optional("null_trials", "1000"));

  using std::chrono::sys_days;
  if (!(sys_days{cfg.train_start} <= sys_days{cfg.train_end} &&
        sys_days{cfg.train_end} < sys_days{cfg.test_start} &&
        sys_days{cfg.test_start} <= sys_days{cfg.test_end})) {
    throw std::runtime_error("config: train/test ranges must be ordered and disjoint");
  }
  if (cfg.include.empty()) throw std::runtime_error("config: include list is empty");
  if (!(cfg.recommendation_threshold > 0.0) || !(cfg.report_threshold > 0.0) ||
      cfg.top_k < 1) {
    throw std::runtime_error("config: thresholds must be positive");
  }
  return cfg;
}

int run_pipeline(const PipelineConfig& cfg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);

  int stage = kExitIngest;
  try {
    // 1: ingest
    auto ingested = ingest_jsonl(cfg.tweets, cfg.company);
    TweetCorpus corpus =
        filter_by_keywords(ingested.corpus, cfg.include, cfg.exclude);
    save_corpus_jsonl(corpus, cfg.output_dir / "corpus.jsonl");

    // 2: score
    stage = kExitScore;
    Lexicon lexicon = load_lexicon(cfg.lexicon);
    ScoresByDate scores = score_corpus(corpus, lexicon);
    save_scores_csv(scores, cfg.output_dir / "scores.csv");

    // 3: aggregate
    stage = kExitAggregate;
    DailyStats daily = daily_stats(scores);
    save_daily_csv(daily, cfg.output_dir / "daily.csv", cfg.window);

    // 4: market
    stage = kExitMarket;
    auto company_bars = load_prices(cfg.prices);
    auto index_bars = load_prices(cfg.index_prices);
    MovementSeries corrected =
        corrected_movement(pct_movement(company_bars), pct_movement(index_bars));
    save_movement_csv(corrected, cfg.output_dir / "corrected_movement.csv");
    CorrelationTable table = correlation_table(corrected, daily.rows);
    save_correlation_csv(table, cfg.output_dir / "correlation.csv");
    save_plot_csv(corrected, daily.rows, cfg.window, cfg.output_dir / "plot.csv");

    // 5: train + evaluate
    stage = kExitTrainEval;
    auto features = build_features(daily.rows, corrected, cfg.lags);
    save_features_csv(features, cfg.output_dir / "features.csv");
    auto train_rows = filter_by_date(features, cfg.train_start, cfg.train_end);
    auto test_rows = filter_by_date(features, cfg.test_start, cfg.test_end);
    LinearModel model = fit_ols(train_rows);
    save_model_json(model, cfg.lags,
                    format_date(cfg.train_start) + ".." + format_date(cfg.train_end),
                    cfg.output_dir / "model.json");
    EvalReport eval = evaluate(model, test_rows, cfg.null_trials, cfg.seed);

    nlohmann::ordered_json eval_json;
    eval_json["accuracy"] = eval.accuracy;
    eval_json["null_accuracy"] = eval.null_accuracy;
    eval_json["rmse"] = eval.rmse_value;
    eval_json["predictions"] = nlohmann::ordered_json::array();
    std::map<Date, double> predictions;
    for (const auto& item : eval.items) {
      eval_json["predictions"].push_back({{"date", format_date(item.date)},
                                          {"predicted", item.predicted},
                                          {"actual", item.actual},
                                          {"recommendation", to_string(item.rec)},
                                          {"correct", item.correct}});
      predictions[item.date] = item.predicted;
    }
    {
      std::ofstream out(cfg.output_dir / "evaluation.json");
      out << eval_json.dump(2) << '\n';
    }

    // 6: report
    stage = kExitReport;
    auto flagged = flag_dates(predictions, cfg.report_threshold);
    auto reports = report_top_tweets(corpus, predictions, flagged,
                                     static_cast<std::size_t>(cfg.top_k));
    save_reports_json(reports, cfg.output_dir / "report.json");

    // summary
    nlohmann::ordered_json summary;
    summary["company"] = cfg.company;
    summary["tweets_ingested"] = ingested.corpus.tweets.size();
    summary["duplicate_ids"] = ingested.duplicate_ids;
    summary["tweets_kept"] = corpus.tweets.size();
    summary["days_with_sentiment"] = daily.rows.size();
    summary["feature_rows"] = features.size();
    summary["train_rows"] = train_rows.size();
    summary["test_rows"] = test_rows.size();
    nlohmann::ordered_json corr;
    corr["windows"] = table.windows;
    for (int r = 0; r < 3; ++r) {
      std::vector<double> vals;
      for (Eigen::Index c = 0; c < table.values.cols(); ++c) {
        vals.push_back(table.values(r, c));
      }
      corr[table.row_names[r]] = vals;
    }
    summary["correlation"] = corr;
    summary["accuracy"] = eval.accuracy;
    summary["null_accuracy"] = eval.null_accuracy;
    summary["rmse"] = eval.rmse_value;
    std::vector<std::string> flagged_strings;
    for (const Date& d : flagged) flagged_strings.push_back(format_date(d));
    summary["flagged_dates"] = flagged_strings;
    summary["seed"] = cfg.seed;
    {
      std::ofstream out(cfg.output_dir / "summary.json");
      out << summary.dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "pipeline stage " << stage << " failed: " << e.what() << '\n';
    return stage;
  }
  return kExitOk;
}

}  // namespace taureau
