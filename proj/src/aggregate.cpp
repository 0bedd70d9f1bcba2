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

#include "taureau/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace taureau {

namespace {

// Sorting before summing makes the reduction independent of input order.
double sorted_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::accumulate(values.begin(), values.end(), 0.0);
}

double sample_std(const std::vector<double>& values, double mean) {
  if (values.size() < 2) return 0.0;
  std::vector<double> sq;
  sq.reserve(values.size());
  for (double v : values) sq.push_back((v - mean) * (v - mean));
  return std::sqrt(sorted_sum(std::move(sq)) / (values.size() - 1));
}

}  // namespace

double aggregate_score(const DailySentimentRow& row) {
  return (row.mean_polarity + row.mean_subjectivity) / 2.0;
}

DailyStats daily_stats(const ScoresByDate& scored) {
  if (scored.empty()) throw std::runtime_error("no scores to aggregate");

  DailyStats stats;
  for (const auto& [date, list] : scored) {
    DailySentimentRow row;
    row.date = date;
    row.count = static_cast<int>(list.size());

    std::vector<double> pos, neg, all_pol, all_subj;
    for (const ScoredTweet& s : list) {
      all_pol.push_back(s.score.polarity);
      all_subj.push_back(s.score.subjectivity);
      if (s.score.polarity > 0.0) pos.push_back(s.score.polarity);
      if (s.score.polarity < 0.0) neg.push_back(s.score.polarity);
    }
    row.sum_pos = sorted_sum(pos);
    row.sum_neg = sorted_sum(neg);
    row.mean_pos = pos.empty() ? 0.0 : row.sum_pos / pos.size();
    row.mean_neg = neg.empty() ? 0.0 : row.sum_neg / neg.size();
    row.mean_polarity = sorted_sum(std::move(all_pol)) / row.count;
    row.mean_subjectivity = sorted_sum(std::move(all_subj)) / row.count;
    row.aggregate = aggregate_score(row);
    stats.rows.push_back(row);
  }

  std::vector<double> day_pos, day_neg;
  for (const DailySentimentRow& row : stats.rows) {
    day_pos.push_back(row.mean_pos);
    day_neg.push_back(row.mean_neg);
  }
  stats.meta.mu_pos = sorted_sum(day_pos) / day_pos.size();
  stats.meta.mu_neg = sorted_sum(day_neg) / day_neg.size();
  stats.meta.sigma_pos = sample_std(day_pos, stats.meta.mu_pos);
  stats.meta.sigma_neg = sample_std(day_neg, stats.meta.mu_neg);

  for (DailySentimentRow& row : stats.rows) {
    double pos_term = stats.meta.sigma_pos == 0.0
                          ? 0.0
                          : (row.mean_pos - stats.meta.mu_pos) / stats.meta.sigma_pos;
    double neg_term = stats.meta.sigma_neg == 0.0
                          ? 0.0
                          : (std::abs(row.mean_neg) - std::abs(stats.meta.mu_neg)) /
                                stats.meta.sigma_neg;
    row.p_d = pos_term - neg_term;
  }
  return stats;
}

std::map<Date, double> sliding_window(const std::map<Date, double>& series, int w) {
  if (w <= 0 || w % 2 == 0) {
    throw std::runtime_error("window size must be a positive odd integer, got " +
                             std::to_string(w));
  }
  std::vector<Date> dates;
  std::vector<double> values;
  for (const auto& [d, v] : series) {
    dates.push_back(d);
    values.push_back(v);
  }
  const int half = (w - 1) / 2;
  const int n = static_cast<int>(values.size());
  std::map<Date, double> out;
  for (int i = 0; i < n; ++i) {
    if (i - half < 0 || i + half >= n) {
      out[dates[i]] = values[i];  // not enough neighbors, left unchanged
      continue;
    }
    double sum = 0.0;
    for (int j = i - half; j <= i + half; ++j) sum += values[j];
    out[dates[i]] = sum / w;
  }
  return out;
}

void save_daily_csv(const DailyStats& stats, const std::filesystem::path& path,
                    int window) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write daily file: " + path.string());
  out << "date,sum_pos,sum_neg,count,mean_pos,mean_neg,mean_polarity,"
         "mean_subjectivity,p_d,aggregate";
  std::map<Date, double> pol_s, subj_s, agg_s;
  if (window > 1) {
    std::map<Date, double> pol, subj, agg;
    for (const auto& row : stats.rows) {
      pol[row.date] = row.mean_polarity;
      subj[row.date] = row.mean_subjectivity;
      agg[row.date] = row.aggregate;
    }
    pol_s = sliding_window(pol, window);
    subj_s = sliding_window(subj, window);
    agg_s = sliding_window(agg, window);
    out << ",mean_polarity_w" << window << ",mean_subjectivity_w" << window
        << ",aggregate_w" << window;
  }
  out << '\n';
  char buf[512];
  for (const auto& row : stats.rows) {
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                  row.sum_pos, row.sum_neg, row.count, row.mean_pos, row.mean_neg,
                  row.mean_polarity, row.mean_subjectivity, row.p_d, row.aggregate);
    out << format_date(row.date) << ',' << buf;
    if (window > 1) {
      std::snprintf(buf, sizeof(buf), ",%.17g,%.17g,%.17g", pol_s[row.date],
                    subj_s[row.date], agg_s[row.date]);
      out << buf;
    }
    out << '\n';
  }
}

std::vector<DailySentimentRow> load_daily_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open daily file: " + path.string());
  std::vector<DailySentimentRow> rows;
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
    if (cols.size() < 10) {
      throw std::runtime_error("daily row " + std::to_string(line_no) +
                               ": expected >= 10 columns");
    }
    DailySentimentRow row;
    row.date = parse_date(cols[0]);
    row.sum_pos = std::stod(cols[1]);
    row.sum_neg = std::stod(cols[2]);
    row.count = std::stoi(cols[3]);
    row.mean_pos = std::stod(cols[4]);
    row.mean_neg = std::stod(cols[5]);
    row.mean_polarity = std::stod(cols[6]);
    row.mean_subjectivity = std::stod(cols[7]);
    row.p_d = std::stod(cols[8]);
    row.aggregate = std::stod(cols[9]);
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::chrono::sys_days{a.date} < std::chrono::sys_days{b.date};
  });
  return rows;
}

}  // namespace taureau
