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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "taureau/dates.hpp"

namespace taureau {

// Stage exit codes for the pipeline command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIngest = 1;
inline constexpr int kExitScore = 2;
inline constexpr int kExitAggregate = 3;
inline constexpr int kExitMarket = 4;
inline constexpr int kExitTrainEval = 5;
inline constexpr int kExitReport = 6;
inline constexpr int kExitConfig = 64;

struct PipelineConfig {
  std::string company;
  std::filesystem::path tweets;
  std::filesystem::path lexicon;
  std::filesystem::path prices;
  std::filesystem::path index_prices;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  int window = 3;
  std::vector<int> lags = {1, 2, 3};
  double recommendation_threshold = 0.5;
  double report_threshold = 10.0;
  int top_k = 15;
  Date train_start, train_end, test_start, test_end;
  std::filesystem::path output_dir;
  std::uint64_t seed = 42;
  int null_trials = 1000;
};

/// Parses a flat key=value config file ('#' starts a comment). Throws on
/// unknown keys, missing required keys, or invalid values.
PipelineConfig load_config(const std::filesystem::path& path);

/// Runs ingest -> score -> aggregate -> market -> train/eval -> report,
/// writing every stage artifact plus summary.json into output_dir. Returns
/// kExitOk or the failing stage's exit code, with a message on stderr.
int run_pipeline(const PipelineConfig& config);

}  // namespace taureau
