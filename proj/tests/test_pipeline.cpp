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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "taureau/pipeline.hpp"

using namespace taureau;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures{FIXTURE_DIR};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PipelineConfig fixture_config(const std::string& out_name) {
  auto cfg = load_config(kFixtures / "config.ini");
  cfg.output_dir = fs::temp_directory_path() / out_name;
  fs::remove_all(cfg.output_dir);
  return cfg;
}

}  // namespace

TEST_CASE("load_config reads the fixture config") {
  auto cfg = load_config(kFixtures / "config.ini");
  CHECK(cfg.company == "tesla");
  CHECK(cfg.include == std::vector<std::string>{"tesla"});
  CHECK(cfg.exclude == std::vector<std::string>{"nikola"});
  CHECK(cfg.window == 3);
  CHECK(cfg.lags == std::vector<int>{1, 2, 3});
  CHECK(cfg.top_k == 15);
  CHECK(format_date(cfg.train_start) == "2020-03-03");
  CHECK(format_date(cfg.test_end) == "2020-04-15");
  CHECK(cfg.seed == 42);
}

TEST_CASE("load_config rejects bad range ordering") {
  auto path = fs::temp_directory_path() / "bad_cfg.ini";
  std::ofstream out(path);
  out << "company = x\ntweets = t\nlexicon = l\nprices = p\nindex_prices = i\n"
         "train_start = 2020-04-06\ntrain_end = 2020-04-10\n"
         "test_start = 2020-03-06\ntest_end = 2020-03-10\n"
         "output_dir = o\n";
  out.close();
  CHECK_THROWS_AS(load_config(path), std::runtime_error);
}

TEST_CASE("pipeline completes on the fixture and writes every artifact") {
  auto cfg = fixture_config("taureau_pipeline_out");
  cfg.null_trials = 100;  // keep the test quick
  REQUIRE(run_pipeline(cfg) == kExitOk);
  for (const char* name :
       {"corpus.jsonl", "scores.csv", "daily.csv", "corrected_movement.csv",
        "correlation.csv", "plot.csv", "features.csv", "model.json",
        "evaluation.json", "report.json", "summary.json"}) {
    CHECK(fs::exists(cfg.output_dir / name));
  }

  nlohmann::json summary;
  std::ifstream in(cfg.output_dir / "summary.json");
  in >> summary;
  CHECK(summary["correlation"]["windows"] == nlohmann::json({1, 3, 5, 7, 9}));
  CHECK(summary["correlation"]["polarity"].size() == 5);
  CHECK(summary["flagged_dates"].size() >= 1);
  CHECK(summary["flagged_dates"][0] == "2020-04-14");
  CHECK(summary["accuracy"].get<double>() >= 0.0);
  CHECK(summary["duplicate_ids"].get<int>() == 1);

  nlohmann::json report;
  std::ifstream rin(cfg.output_dir / "report.json");
  rin >> report;
  REQUIRE(report.size() >= 1);
  CHECK(report[0]["date"] == "2020-04-14");
  CHECK(report[0]["top_tweets"].size() <= 15);
  CHECK(report[0]["top_tweets"][0]["text"] == "tesla model 3 orders hit a new record");
  CHECK(report[0]["top_tweets"][0]["count"] == 5);
}

TEST_CASE("pipeline is byte-identical across runs with the same seed") {
  auto cfg1 = fixture_config("taureau_det_a");
  auto cfg2 = fixture_config("taureau_det_b");
  cfg1.null_trials = cfg2.null_trials = 50;
  REQUIRE(run_pipeline(cfg1) == kExitOk);
  REQUIRE(run_pipeline(cfg2) == kExitOk);
  for (const char* name : {"summary.json", "scores.csv", "daily.csv",
                           "correlation.csv", "evaluation.json", "report.json"}) {
    CHECK(slurp(cfg1.output_dir / name) == slurp(cfg2.output_dir / name));
  }
}

TEST_CASE("pipeline exit codes identify the failing stage") {
  auto missing_tweets = fixture_config("taureau_fail_ingest");
  missing_tweets.tweets = "/nonexistent/tweets.jsonl";
  CHECK(run_pipeline(missing_tweets) == kExitIngest);

  auto missing_lexicon = fixture_config("taureau_fail_score");
  missing_lexicon.lexicon = "/nonexistent/lexicon.tsv";
  CHECK(run_pipeline(missing_lexicon) == kExitScore);

  auto missing_prices = fixture_config("taureau_fail_market");
  missing_prices.prices = "/nonexistent/prices.csv";
  CHECK(run_pipeline(missing_prices) == kExitMarket);
}

TEST_CASE("intermediate files round-trip through the CLI stages") {
  // stage-by-stage run through the binary must match the single-pass run
  auto cfg = fixture_config("taureau_stage_out");
  cfg.null_trials = 50;
  REQUIRE(run_pipeline(cfg) == kExitOk);

  fs::path staged = fs::temp_directory_path() / "taureau_staged";
  fs::remove_all(staged);
  fs::create_directories(staged);
  auto bin = std::string(TAUREAU_BIN);
  auto fixture = [](const char* name) {
    return (kFixtures / name).string();
  };
  auto out = [&](const char* name) { return (staged / name).string(); };

  auto run = [](const std::string& cmd) {
    INFO(cmd);
    REQUIRE(std::system((cmd + " > /dev/null 2>&1").c_str()) == 0);
  };
  run(bin + " ingest --input " + fixture("tweets.jsonl") +
      " --company tesla --include tesla --exclude nikola --out " + out("corpus.jsonl"));
  run(bin + " score --corpus " + out("corpus.jsonl") + " --lexicon " +
      fixture("lexicon.tsv") + " --out " + out("scores.csv"));
  run(bin + " aggregate --scores " + out("scores.csv") + " --window 3 --out " +
      out("daily.csv"));
  run(bin + " correlate --daily " + out("daily.csv") + " --prices " +
      fixture("prices_company.csv") + " --index-prices " +
      fixture("prices_index.csv") + " --out " + out("correlation.csv"));

  CHECK(slurp(staged / "corpus.jsonl") == slurp(cfg.output_dir / "corpus.jsonl"));
  CHECK(slurp(staged / "scores.csv") == slurp(cfg.output_dir / "scores.csv"));
  CHECK(slurp(staged / "daily.csv") == slurp(cfg.output_dir / "daily.csv"));
  CHECK(slurp(staged / "correlation.csv") == slurp(cfg.output_dir / "correlation.csv"));
}
