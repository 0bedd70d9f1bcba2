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

#include "taureau/market.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace taureau {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cols;
  std::istringstream in(line);
  std::string col;
  while (std::getline(in, col, ',')) cols.push_back(col);
  return cols;
}

std::string lower_trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s.erase(0, start);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

std::vector<PriceBar> load_prices(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open price file: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty price file: " + path.string());
  if (!line.empty() && line.back() == '\r') line.pop_back();

  auto header = split_csv_line(line);
  int date_col = -1, price_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string name = lower_trim(header[i]);
    if (name == "date") date_col = static_cast<int>(i);
    if (name == "adj_close" || name == "adj close" || name == "adjusted_close") {
      price_col = static_cast<int>(i);
    }
  }
  if (date_col < 0 || price_col < 0) {
    throw std::runtime_error("price file " + path.string() +
                             " needs date and adj_close columns");
  }

  std::vector<PriceBar> bars;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cols = split_csv_line(line);
    if (static_cast<int>(cols.size()) <= std::max(date_col, price_col)) {
      throw std::runtime_error("price row " + std::to_string(row) + ": too few columns");
    }
    PriceBar bar;
    bar.date = parse_date(lower_trim(cols[date_col]));
    bar.adj_close = std::stod(cols[price_col]);
    if (!(bar.adj_close > 0.0)) {
      throw std::runtime_error("price row " + std::to_string(row) +
                               ": adjusted close must be positive");
    }
    bars.push_back(bar);
  }
  std::sort(bars.begin(), bars.end(), [](const PriceBar& a, const PriceBar& b) {
    return std::chrono::sys_days{a.date} < std::chrono::sys_days{b.date};
  });
  for (std::size_t i = 1; i < bars.size(); ++i) {
    if (bars[i].date == bars[i - 1].date) {
      throw std::runtime_error("duplicate price date " + format_date(bars[i].date));
    }
  }
  return bars;
}

MovementSeries pct_movement(std::span<const PriceBar> bars) {
  if (bars.size() < 2) {
    throw std::runtime_error("need at least 2 price bars to compute movement");
  }
  MovementSeries out;
  for (std::size_t i = 1; i < bars.size(); ++i) {
    out[bars[i].date] =
        100.0 * (bars[i].adj_close - bars[i - 1].adj_close) / bars[i - 1].adj_close;
  }
  return out;
}

MovementSeries corrected_movement(const MovementSeries& company,
                                  const MovementSeries& index) {
  MovementSeries out;
  for (const auto& [date, movement] : company) {
    auto it = index.find(date);
    if (it == index.end()) {
      throw std::runtime_error("index series missing date " + format_date(date));
    }
    out[date] = movement - it->second;
  }
  return out;
}

double pearson(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Eigen::Ref<const Eigen::VectorXd>& y) {
  if (x.size() != y.size()) throw std::runtime_error("pearson: length mismatch");
  const auto n = x.size();
  if (n < 2) throw std::runtime_error("pearson: need at least 2 samples");
  Eigen::VectorXd xc = x.array() - x.mean();
  Eigen::VectorXd yc = y.array() - y.mean();
  double sx = xc.squaredNorm();
  double sy = yc.squaredNorm();
  if (sx == 0.0 || sy == 0.0) {
    throw std::runtime_error("pearson: zero variance, correlation undefined");
  }
  return xc.dot(yc) / std::sqrt(sx * sy);
}

Eigen::VectorXd standardize(const Eigen::Ref<const Eigen::VectorXd>& x) {
  const auto n = x.size();
  if (n < 2) throw std::runtime_error("standardize: need at least 2 samples");
  Eigen::VectorXd centered = x.array() - x.mean();
  double var = centered.squaredNorm() / (n - 1);
  if (var == 0.0) throw std::runtime_error("standardize: zero variance");
  return centered / std::sqrt(var);
}

CorrelationTable correlation_table(const MovementSeries& movement,
                                   const std::vector<DailySentimentRow>& daily,
                                   const std::vector<int>& windows) {
  std::map<Date, double> pol, subj, agg;
  for (const DailySentimentRow& row : daily) {
    pol[row.date] = row.mean_polarity;
    subj[row.date] = row.mean_subjectivity;
    agg[row.date] = row.aggregate;
  }

  CorrelationTable table;
  table.windows = windows;
  table.values.resize(3, static_cast<Eigen::Index>(windows.size()));

  for (std::size_t wi = 0; wi < windows.size(); ++wi) {
    const std::array<std::map<Date, double>, 3> smoothed = {
        sliding_window(pol, windows[wi]), sliding_window(subj, windows[wi]),
        sliding_window(agg, windows[wi])};
    for (int row = 0; row < 3; ++row) {
      std::vector<double> m, s;
      for (const auto& [date, value] : smoothed[row]) {
        auto it = movement.find(date);
        if (it == movement.end()) continue;
        s.push_back(value);
        m.push_back(it->second);
      }
      if (m.size() < 2) {
        throw std::runtime_error(
            "correlation_table: fewer than 2 overlapping dates");
      }
      Eigen::Map<const Eigen::VectorXd> mv(m.data(), static_cast<Eigen::Index>(m.size()));
      Eigen::Map<const Eigen::VectorXd> sv(s.data(), static_cast<Eigen::Index>(s.size()));
      table.values(row, static_cast<Eigen::Index>(wi)) = pearson(mv, sv);
    }
  }
  return table;
}

void save_correlation_csv(const CorrelationTable& table,
                          const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write correlation file: " + path.string());
  out << "series";
  for (int w : table.windows) out << ",w" << w;
  out << '\n';
  char buf[64];
  for (int row = 0; row < 3; ++row) {
    out << table.row_names[row];
    for (Eigen::Index col = 0; col < table.values.cols(); ++col) {
      std::snprintf(buf, sizeof(buf), ",%.17g", table.values(row, col));
      out << buf;
    }
    out << '\n';
  }
}

void save_plot_csv(const MovementSeries& movement,
                   const std::vector<DailySentimentRow>& daily, int w,
                   const std::filesystem::path& path) {
  std::map<Date, double> pol;
  for (const DailySentimentRow& row : daily) pol[row.date] = row.mean_polarity;
  auto smoothed = sliding_window(pol, w);

  std::vector<Date> dates;
  std::vector<double> m, s;
  for (const auto& [date, value] : smoothed) {
    auto it = movement.find(date);
    if (it == movement.end()) continue;
    dates.push_back(date);
    m.push_back(it->second);
    s.push_back(-value);  // negated sentiment, matching the negative correlation
  }
  if (m.size() < 2) throw std::runtime_error("plot data: fewer than 2 overlapping dates");

  Eigen::Map<const Eigen::VectorXd> mv(m.data(), static_cast<Eigen::Index>(m.size()));
  Eigen::Map<const Eigen::VectorXd> sv(s.data(), static_cast<Eigen::Index>(s.size()));
  Eigen::VectorXd mz = standardize(mv);
  Eigen::VectorXd sz = standardize(sv);

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write plot file: " + path.string());
  out << "date,movement_z,neg_sentiment_z\n";
  char buf[96];
  for (std::size_t i = 0; i < dates.size(); ++i) {
    std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", mz[static_cast<Eigen::Index>(i)],
                  sz[static_cast<Eigen::Index>(i)]);
    out << format_date(dates[i]) << buf << '\n';
  }
}

void save_movement_csv(const MovementSeries& movement,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write movement file: " + path.string());
  out << "date,movement\n";
  char buf[64];
  for (const auto& [date, value] : movement) {
    std::snprintf(buf, sizeof(buf), ",%.17g", value);
    out << format_date(date) << buf << '\n';
  }
}

MovementSeries load_movement_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open movement file: " + path.string());
  MovementSeries out;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || row == 1) continue;
    auto cols = split_csv_line(line);
    if (cols.size() < 2) {
      throw std::runtime_error("movement row " + std::to_string(row) + ": bad format");
    }
    out[parse_date(cols[0])] = std::stod(cols[1]);
  }
  return out;
}

}  // namespace taureau
