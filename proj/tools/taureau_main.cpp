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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taureau/aggregate.hpp"
#include "taureau/corpus.hpp"
#include "taureau/market.hpp"
#include "taureau/pipeline.hpp"
#include "taureau/predict.hpp"
#include "taureau/report.hpp"
#include "taureau/sentiment.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::map<taureau::Date, double> load_predictions(const std::string& path) {
  std::map<taureau::Date, double> predictions;
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open predictions file: " + path);
    nlohmann::json obj;
    in >> obj;
    const auto& items = obj.contains("predictions") ? obj["predictions"] : obj;
    for (const auto& item : items) {
      predictions[taureau::parse_date(item.at("date").get<std::string>())] =
          item.at("predicted").get<double>();
    }
    return predictions;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open predictions file: " + path);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || row == 1) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("predictions row " + std::to_string(row) + ": bad format");
    }
    predictions[taureau::parse_date(line.substr(0, comma))] =
        std::stod(line.substr(comma + 1));
  }
  return predictions;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace taureau;

  CLI::App app{"Twitter sentiment to stock movement pipeline"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Read, filter and tokenize a tweet JSONL file");
  std::string in_input, in_company, in_include, in_exclude, in_out;
  ingest->add_option("--input", in_input, "tweet JSONL file")->required();
  ingest->add_option("--company", in_company, "company name")->required();
  ingest->add_option("--include", in_include, "comma-separated include keywords");
  ingest->add_option("--exclude", in_exclude, "comma-separated exclude keywords");
  ingest->add_option("--out", in_out, "output corpus JSONL")->required();

  // score
  auto* score = app.add_subcommand("score", "Score a corpus against a lexicon");
  std::string sc_corpus, sc_lexicon, sc_out;
  bool sc_parallel = false;
  score->add_option("--corpus", sc_corpus)->required();
  score->add_option("--lexicon", sc_lexicon)->required();
  score->add_option("--out", sc_out)->required();
  score->add_flag("--parallel", sc_parallel, "score tweets on multiple threads");

  // aggregate
  auto* aggregate = app.add_subcommand("aggregate", "Collapse scores into daily statistics");
  std::string ag_scores, ag_out;
  int ag_window = 0;
  aggregate->add_option("--scores", ag_scores)->required();
  aggregate->add_option("--window", ag_window, "odd window for smoothed columns");
  aggregate->add_option("--out", ag_out)->required();

  // correlate
  auto* correlate = app.add_subcommand("correlate", "Correlation sweep of sentiment vs movement");
  std::string co_daily, co_prices, co_index, co_windows = "1,3,5,7,9", co_out, co_plot;
  int co_plot_window = 3;
  correlate->add_option("--daily", co_daily)->required();
  correlate->add_option("--prices", co_prices)->required();
  correlate->add_option("--index-prices", co_index)->required();
  correlate->add_option("--windows", co_windows, "comma-separated odd window sizes");
  correlate->add_option("--out", co_out)->required();
  correlate->add_option("--plot-out", co_plot, "standardized plot-data CSV");
  correlate->add_option("--plot-window", co_plot_window, "window for the plot series");

  // train
  auto* train = app.add_subcommand("train", "Fit the lagged linear model");
  std::string tr_features, tr_train_start, tr_train_end, tr_out;
  train->add_option("--features", tr_features)->required();
  train->add_option("--train-start", tr_train_start);
  train->add_option("--train-end", tr_train_end);
  train->add_option("--out", tr_out)->required();

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate a model on feature rows");
  std::string ev_model, ev_features, ev_test_start, ev_test_end, ev_out;
  int ev_null_trials = 1000;
  std::uint64_t ev_seed = 42;
  eval_cmd->add_option("--model", ev_model)->required();
  eval_cmd->add_option("--features", ev_features)->required();
  eval_cmd->add_option("--test-start", ev_test_start);
  eval_cmd->add_option("--test-end", ev_test_end);
  eval_cmd->add_option("--null-trials", ev_null_trials);
  eval_cmd->add_option("--seed", ev_seed);
  eval_cmd->add_option("--out", ev_out)->required();

  // report
  auto* report_cmd = app.add_subcommand("report", "Extreme-day tweet reports");
  std::string rp_corpus, rp_predictions, rp_out;
  double rp_threshold = 10.0;
  int rp_top = 15;
  report_cmd->add_option("--corpus", rp_corpus)->required();
  report_cmd->add_option("--predictions", rp_predictions,
                         "evaluation JSON or CSV date,predicted")->required();
  report_cmd->add_option("--threshold", rp_threshold);
  report_cmd->add_option("--top", rp_top);
  report_cmd->add_option("--out", rp_out)->required();

  // pipeline
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Run the whole pipeline from a config file");
  std::string pl_config;
  pipeline_cmd->add_option("--config", pl_config)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      auto result = ingest_jsonl(in_input, in_company);
      TweetCorpus corpus = result.corpus;
      if (!in_include.empty()) {
        corpus = filter_by_keywords(corpus, split_commas(in_include),
                                    split_commas(in_exclude));
      }
      save_corpus_jsonl(corpus, in_out);
      if (result.duplicate_ids > 0) {
        std::cerr << "warning: collapsed " << result.duplicate_ids
                  << " duplicate tweet ids\n";
      }
      std::cout << "wrote " << corpus.tweets.size() << " tweets to " << in_out << '\n';
    } else if (*score) {
      auto corpus = load_corpus_jsonl(sc_corpus);
      auto lexicon = load_lexicon(sc_lexicon);
      auto scores = score_corpus(corpus, lexicon, {}, sc_parallel);
      save_scores_csv(scores, sc_out);
      std::cout << "scored " << corpus.tweets.size() << " tweets\n";
    } else if (*aggregate) {
      auto scores = load_scores_csv(ag_scores);
      auto stats = daily_stats(scores);
      save_daily_csv(stats, ag_out, ag_window);
      std::cout << "aggregated " << stats.rows.size() << " days\n";
    } else if (*correlate) {
      auto daily = load_daily_csv(co_daily);
      auto corrected = corrected_movement(pct_movement(load_prices(co_prices)),
                                          pct_movement(load_prices(co_index)));
      std::vector<int> windows;
      for (const auto& w : split_commas(co_windows)) windows.push_back(std::stoi(w));
      auto table = correlation_table(corrected, daily, windows);
      save_correlation_csv(table, co_out);
      if (!co_plot.empty()) save_plot_csv(corrected, daily, co_plot_window, co_plot);
      std::cout << "wrote correlation table to " << co_out << '\n';
    } else if (*train) {
      auto features = load_features_csv(tr_features);
      std::optional<Date> start, end;
      if (!tr_train_start.empty()) start = parse_date(tr_train_start);
      if (!tr_train_end.empty()) end = parse_date(tr_train_end);
      auto rows = filter_by_date(features, start, end);
      auto model = fit_ols(rows);
      std::string range = (start ? format_date(*start) : std::string("begin")) + ".." +
                          (end ? format_date(*end) : std::string("end"));
      save_model_json(model, {1, 2, 3}, range, tr_out);
      std::cout << "fit model on " << rows.size() << " rows\n";
    } else if (*eval_cmd) {
      auto model = load_model_json(ev_model);
      auto features = load_features_csv(ev_features);
      std::optional<Date> start, end;
      if (!ev_test_start.empty()) start = parse_date(ev_test_start);
      if (!ev_test_end.empty()) end = parse_date(ev_test_end);
      auto rows = filter_by_date(features, start, end);
      auto report = evaluate(model, rows, ev_null_trials, ev_seed);
      nlohmann::ordered_json obj;
      obj["accuracy"] = report.accuracy;
      obj["null_accuracy"] = report.null_accuracy;
      obj["rmse"] = report.rmse_value;
      obj["predictions"] = nlohmann::ordered_json::array();
      for (const auto& item : report.items) {
        obj["predictions"].push_back({{"date", format_date(item.date)},
                                      {"predicted", item.predicted},
                                      {"actual", item.actual},
                                      {"recommendation", to_string(item.rec)},
                                      {"correct", item.correct}});
      }
      std::ofstream out(ev_out);
      if (!out) throw std::runtime_error("cannot write " + ev_out);
      out << obj.dump(2) << '\n';
      std::printf("accuracy %.4f null %.4f rmse %.4f\n", report.accuracy,
                  report.null_accuracy, report.rmse_value);
    } else if (*report_cmd) {
      auto corpus = load_corpus_jsonl(rp_corpus);
      auto predictions = load_predictions(rp_predictions);
      auto flagged = flag_dates(predictions, rp_threshold);
      auto reports = report_top_tweets(corpus, predictions, flagged,
                                       static_cast<std::size_t>(rp_top));
      save_reports_json(reports, rp_out);
      std::cout << "flagged " << flagged.size() << " dates\n";
    } else if (*pipeline_cmd) {
      PipelineConfig cfg;
      try {
        cfg = load_config(pl_config);
      } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
      }
      return run_pipeline(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
