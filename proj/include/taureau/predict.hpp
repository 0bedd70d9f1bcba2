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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "taureau/aggregate.hpp"
#include "taureau/dates.hpp"
#include "taureau/market.hpp"

namespace taureau {

inline constexpr int kNumFeatures = 6;
using FeatureVector = Eigen::Matrix<double, kNumFeatures, 1>;

/// One regression observation: mean polarity at calendar-day lags 1,2,3
/// followed by mean subjectivity at the same lags, with the corrected
/// percent movement at `date` as target.
struct FeatureRow {
  Date date;
  FeatureVector features;
  double target = 0.0;
};

struct LinearModel {
  double intercept = 0.0;
  FeatureVector coefficients;
};

enum class Recommendation { Sell, Hold, Buy };

const char* to_string(Recommendation rec);

/// One row per movement date that has sentiment at every requested calendar
/// lag; dates missing any lag are skipped. Throws if nothing survives.
std::vector<FeatureRow> build_features(const std::vector<DailySentimentRow>& daily,
                                       const MovementSeries& movement,
                                       const std::vector<int>& lags = {1, 2, 3});

/// Least squares via normal equations with ridge damping 1e-8 on the Gram
/// matrix. Needs at least kNumFeatures + 2 rows.
LinearModel fit_ols(std::span<const FeatureRow> rows);

double predict_movement(const LinearModel& model, const FeatureVector& features);

/// > 0.5% -> Buy, < -0.5% -> Sell, boundaries inclusive to Hold.
Recommendation recommend(double predicted_pct);

/// Buy correct iff actual > 0.5; Hold correct iff -1 < actual < 1;
/// Sell correct iff actual < -0.5.
bool validate_recommendation(Recommendation rec, double actual_pct);

double rmse(std::span<const double> predicted, std::span<const double> actual);

struct EvalReport {
  struct Item {
    Date date;
    double predicted = 0.0;
    double actual = 0.0;
    Recommendation rec = Recommendation::Hold;
    bool correct = false;
  };
  std::vector<Item> items;
  double accuracy = 0.0;
  double null_accuracy = 0.0;
  double rmse_value = 0.0;
};

/// Scores the model on the test rows and estimates the chance baseline with
/// `null_trials` random-coefficient models (intercept 0, coefficients i.i.d.
/// standard normal, trial seeds derived from `seed`).
EvalReport evaluate(const LinearModel& model, std::span<const FeatureRow> rows,
                    int null_trials = 1000, std::uint64_t seed = 42);

std::vector<FeatureRow> filter_by_date(std::span<const FeatureRow> rows,
                                       const std::optional<Date>& start,
                                       const std::optional<Date>& end);

void save_features_csv(std::span<const FeatureRow> rows,
                       const std::filesystem::path& path);
std::vector<FeatureRow> load_features_csv(const std::filesystem::path& path);

void save_model_json(const LinearModel& model, const std::vector<int>& lags,
                     const std::string& trained_range,
                     const std::filesystem::path& path);
LinearModel load_model_json(const std::filesystem::path& path);

}  // namespace taureau
