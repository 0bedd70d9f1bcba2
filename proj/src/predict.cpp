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

#include "taureau/predict.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace taureau {

const char* to_string(Recommendation rec) {
  switch (rec) {
    case Recommendation::Buy: return "buy";
    case Recommendation::Hold: return "hold";
    case Recommendation::Sell: return "sell";
  }
  return "hold";
}

std::vector<FeatureRow> build_features(const std::vector<DailySentimentRow>& daily,
                                       const MovementSeries& movement,
                                       const std::vector<int>& lags) {
  if (lags.empty()) throw std::runtime_error("lag list is empty");
  for (int lag : lags) {
    if (lag <= 0) throw std::runtime_error("lags must be positive");
  }
  if (2 * lags.size() != kNumFeatures) {
    throw std::runtime_error("expected " + std::to_string(kNumFeatures / 2) + " lags");
  }

  std::map<Date, const DailySentimentRow*> by_date;
  for (const DailySentimentRow& row : daily) by_date[row.date] = &row;

  std::vector<FeatureRow> rows;
  for (const auto& [date, target] : movement) {
    FeatureRow row;
    row.date = date;
    row.target = target;
    bool complete = true;
    for (std::size_t i = 0; i < lags.size(); ++i) {
      auto it = by_date.find(shift_days(date, -lags[i]));
      if (it == by_date.end()) {
        complete = false;
        break;
      }
      row.features[static_cast<Eigen::Index>(i)] = it->second->mean_polarity;
      row.features[static_cast<Eigen::Index>(i + lags.size())] =
          it->second->mean_subjectivity;
    }
    if (complete) rows.push_back(row);
  }
  if (rows.empty()) {
    throw std::runtime_error("no dates have sentiment at every requested lag");
  }
  return rows;
}

LinearModel fit_ols(std::span<const FeatureRow> rows) {
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  if (n < kNumFeatures + 2) {
    throw std::runtime_error("need at least " + std::to_string(kNumFeatures + 2) +
                             " rows to fit, got " + std::to_string(rows.size()));
  }
  Eigen::MatrixXd design(n, kNumFeatures + 1);
  Eigen::VectorXd target(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!rows[i].features.allFinite() || !std::isfinite(rows[i].target)) {
      throw std::runtime_error("non-finite value in regression inputs");
    }
    design(i, 0) = 1.0;
    design.row(i).tail(kNumFeatures) = rows[i].features.transpose();
    target(i) = rows[i].target;
  }

  constexpr double kRidge = 1e-8;
  Eigen::MatrixXd gram = design.transpose() * design;
  gram.diagonal().array() += kRidge;
  Eigen::VectorXd params = gram.ldlt().solve(design.transpose() * target);

  LinearModel model;
  model.intercept = params(0);
  model.coefficients = params.tail(kNumFeatures);
  return model;
}

double predict_movement(const LinearModel& model, const FeatureVector& features) {
  return model.intercept + model.coefficients.dot(features);
}

Recommendation recommend(double predicted_pct) {
  if (predicted_pct > 0.5) return Recommendation::Buy;
  if (predicted_pct < -0.5) return Recommendation::Sell;
  return Recommendation::Hold;
}

bool validate_recommendation(Recommendation rec, double actual_pct) {
  switch (rec) {
    case Recommendation::Buy: return actual_pct > 0.5;
    case Recommendation::Hold: return actual_pct > -1.0 && actual_pct < 1.0;
    case Recommendation::Sell: return actual_pct < -0.5;
  }
  return false;
}

double rmse(std::span<const double> predicted, std::span<const double> actual) {
  if (predicted.size() != actual.size() || predicted.empty()) {
    throw std::runtime_error("rmse: series must have equal nonzero length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    double d = predicted[i] - actual[i];
    sum += d * d;
  }
  return std::sqrt(sum / predicted.size());
}

namespace {

double accuracy_of(const LinearModel& model, std::span<const FeatureRow> rows) {
  std::size_t correct = 0;
  for (const FeatureRow& row : rows) {
    double predicted = predict_movement(model, row.features);
    if (validate_recommendation(recommend(predicted), row.target)) ++correct;
  }
  return static_cast<double>(correct) / rows.size();
}

}  // namespace

EvalReport evaluate(const LinearModel& model, std::span<const FeatureRow> rows,
                    int null_trials, std::uint64_t seed) {
  if (rows.empty()) throw std::runtime_error("evaluate: no test rows");

  EvalReport report;
  std::vector<double> predicted, actual;
  std::size_t correct = 0;
  for (const FeatureRow& row : rows) {
    EvalReport::Item item;
    item.date = row.date;
    item.predicted = predict_movement(model, row.features);
    item.actual = row.target;
    item.rec = recommend(item.predicted);
    item.correct = validate_recommendation(item.rec, item.actual);
    if (item.correct) ++correct;
    predicted.push_back(item.predicted);
    actual.push_back(item.actual);
    report.items.push_back(item);
  }
  report.accuracy = static_cast<double>(correct) / rows.size();
  report.rmse_value = rmse(predicted, actual);

  // Chance baseline: random-coefficient models, per-trial derived seeds so
  // trial order does not matter.
  double null_sum = 0.0;
  for (int trial = 0; trial < null_trials; ++trial) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
    std::normal_distribution<double> normal(0.0, 1.0);
    LinearModel null_model;
    null_model.intercept = 0.0;
    for (int i = 0; i < kNumFeatures; ++i) null_model.coefficients[i] = normal(rng);
    null_sum += accuracy_of(null_model, rows);
  }
  report.null_accuracy = null_trials > 0 ? null_sum / null_trials : 0.0;
  return report;
}

std::vector<FeatureRow> filter_by_date(std::span<const FeatureRow> rows,
                                       const std::optional<Date>& start,
                                       const std::optional<Date>& end) {
  std::vector<FeatureRow> out;
  for (const FeatureRow& row : rows) {
    auto day = std::chrono::sys_days{row.date};
    if (start && day < std::chrono::sys_days{*start}) continue;
    if (end && day > std::chrono::sys_days{*end}) continue;
    out.push_back(row);
  }
  return out;
}

void save_features_csv(std::span<const FeatureRow> rows,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write features file: " + path.string());
  out << "date,pol_lag1,pol_lag2,pol_lag3,subj_lag1,subj_lag2,subj_lag3,target\n";
  char buf[64];
  for (const FeatureRow& row : rows) {
    out << format_date(row.date);
    for (int i = 0; i < kNumFeatures; ++i) {
      std::snprintf(buf, sizeof(buf), ",%.17g", row.features[i]);
      out << buf;
    }
    std::snprintf(buf, sizeof(buf), ",%.17g", row.target);
    out << buf << '\n';
  }
}

std::vector<FeatureRow> load_features_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open features file: " + path.string());
  std::vector<FeatureRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line_no == 1) continue;
    std::istringstream fields(line);
    std::vector<std::string> cols;
    std::string col;
    while (std::getline(fields, col, ',')) cols.push_back(col);
    if (cols.size() != kNumFeatures + 2) {
      throw std::runtime_error("features row " + std::to_string(line_no) +
                               ": expected " + std::to_string(kNumFeatures + 2) +
                               " columns");
    }
    FeatureRow row;
    row.date = parse_date(cols[0]);
    for (int i = 0; i < kNumFeatures; ++i) row.features[i] = std::stod(cols[i + 1]);
    row.target = std::stod(cols[kNumFeatures + 1]);
    rows.push_back(row);
  }
  return rows;
}

void save_model_json(const LinearModel& model, const std::vector<int>& lags,
                     const std::string& trained_range,
                     const std::filesystem::path& path) {
  nlohmann::ordered_json obj;
  obj["intercept"] = model.intercept;
  obj["coefficients"] = std::vector<double>(model.coefficients.data(),
                                            model.coefficients.data() + kNumFeatures);
  obj["lags"] = lags;
  obj["trained_range"] = trained_range;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path.string());
  out << obj.dump(2) << '\n';
}

LinearModel load_model_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path.string());
  nlohmann::json obj;
  in >> obj;
  LinearModel model;
  model.intercept = obj.at("intercept").get<double>();
  auto coefs = obj.at("coefficients").get<std::vector<double>>();
  if (coefs.size() != kNumFeatures) {
    throw std::runtime_error("model file has wrong coefficient count");
  }
  for (int i = 0; i < kNumFeatures; ++i) model.coefficients[i] = coefs[i];
  return model;
}

}  // namespace taureau
