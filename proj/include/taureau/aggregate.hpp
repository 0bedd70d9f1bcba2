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

#include <filesystem>
#include <map>
#include <vector>

#include "taureau/dates.hpp"
#include "taureau/sentiment.hpp"

namespace taureau {

/// Per-day sentiment statistics. sum_pos/sum_neg partition the day's nonzero
/// polarities; zero-polarity tweets count toward count and mean_polarity only.
struct DailySentimentRow {
  Date date;
  double sum_pos = 0.0;   // sum of positive polarities, >= 0
  double sum_neg = 0.0;   // sum of negative polarities, <= 0
  int count = 0;          // tweets that day
  double mean_pos = 0.0;  // mean over positive-polarity tweets, 0 if none
  double mean_neg = 0.0;  // mean over negative-polarity tweets, 0 if none
  double mean_polarity = 0.0;
  double mean_subjectivity = 0.0;
  double p_d = 0.0;       // standardized composite daily polarity
  double aggregate = 0.0; // (mean_polarity + mean_subjectivity) / 2
};

/// Means and sample standard deviations, across days, of the daily positive
/// and negative polarity means.
struct MetaStats {
  double mu_pos = 0.0;
  double mu_neg = 0.0;
  double sigma_pos = 0.0;
  double sigma_neg = 0.0;
};

struct DailyStats {
  std::vector<DailySentimentRow> rows;  // sorted by date
  MetaStats meta;
};

/// Collapses per-tweet scores into daily rows plus meta statistics, then
/// fills p_d = (mean_pos - mu_pos)/sigma_pos - (|mean_neg| - |mu_neg|)/sigma_neg
/// with zero-sigma terms treated as 0. Throws on an empty input map.
DailyStats daily_stats(const ScoresByDate& scored);

/// Centered moving average over consecutive entries of the date-sorted
/// series. Entries without (w-1)/2 neighbors on each side stay unchanged.
/// w must be odd and positive; w=1 is the identity.
std::map<Date, double> sliding_window(const std::map<Date, double>& series, int w);

double aggregate_score(const DailySentimentRow& row);

void save_daily_csv(const DailyStats& stats, const std::filesystem::path& path,
                    int window = 0);
std::vector<DailySentimentRow> load_daily_csv(const std::filesystem::path& path);

}  // namespace taureau
