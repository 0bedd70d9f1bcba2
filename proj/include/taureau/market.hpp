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

#include <Eigen/Dense>
#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "taureau/aggregate.hpp"
#include "taureau/dates.hpp"

namespace taureau {

struct PriceBar {
  Date date;
  double adj_close = 0.0;  // > 0
};

/// Trading date -> percent movement. The first bar of a price series has no
/// movement entry.
using MovementSeries = std::map<Date, double>;

/// CSV with a header naming at least date and adj_close columns; extra
/// columns are ignored. Bars come back sorted with strictly increasing dates.
std::vector<PriceBar> load_prices(const std::filesystem::path& path);

/// movement(t) = 100 * (p_t - p_{t-1}) / p_{t-1}, keyed at date t.
MovementSeries pct_movement(std::span<const PriceBar> bars);

/// Entry-wise company minus index on the company's dates. Throws naming the
/// first company date missing from the index series.
MovementSeries corrected_movement(const MovementSeries& company,
                                  const MovementSeries& index);

/// Sample Pearson correlation. Throws on length mismatch, length < 2, or
/// zero variance.
double pearson(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Eigen::Ref<const Eigen::VectorXd>& y);

/// (x - mean) / sample std, elementwise. Throws on zero variance.
Eigen::VectorXd standardize(const Eigen::Ref<const Eigen::VectorXd>& x);

struct CorrelationTable {
  std::vector<int> windows;
  std::array<std::string, 3> row_names = {"polarity", "subjectivity", "aggregate"};
  Eigen::MatrixXd values;  // 3 x windows.size()
};

/// Correlation of movement against each smoothed sentiment series, one
/// column per window size. Sentiment and movement join on common dates.
CorrelationTable correlation_table(const MovementSeries& movement,
                                   const std::vector<DailySentimentRow>& daily,
                                   const std::vector<int>& windows = {1, 3, 5, 7, 9});

void save_correlation_csv(const CorrelationTable& table,
                          const std::filesystem::path& path);

/// Plot-ready series: date, standardized movement, standardized negated
/// smoothed mean polarity (window w over the joined dates).
void save_plot_csv(const MovementSeries& movement,
                   const std::vector<DailySentimentRow>& daily, int w,
                   const std::filesystem::path& path);

void save_movement_csv(const MovementSeries& movement,
                       const std::filesystem::path& path);
MovementSeries load_movement_csv(const std::filesystem::path& path);

}  // namespace taureau
