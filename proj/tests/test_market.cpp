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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "taureau/market.hpp"

using namespace taureau;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::vector<PriceBar> bars_of(const std::vector<double>& prices) {
  std::vector<PriceBar> bars;
  for (std::size_t i = 0; i < prices.size(); ++i) {
    bars.push_back({shift_days(parse_date("2020-03-06"), static_cast<int>(i)), prices[i]});
  }
  return bars;
}

Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

// straight-line reference implementation
double pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double cov = 0, vx = 0, vy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (x[i] - mx) * (y[i] - my);
    vx += (x[i] - mx) * (x[i] - mx);
    vy += (y[i] - my) * (y[i] - my);
  }
  return cov / std::sqrt(vx * vy);
}

}  // namespace

TEST_CASE("load_prices reads, sorts and validates") {
  auto path = write_temp("prices.csv",
                         "date,open,adj_close\n"
                         "2020-03-09,99,101.5\n"
                         "2020-03-06,98,100.0\n");
  auto bars = load_prices(path);
  REQUIRE(bars.size() == 2);
  CHECK(format_date(bars[0].date) == "2020-03-06");
  CHECK(bars[0].adj_close == doctest::Approx(100.0));
  CHECK(bars[1].adj_close == doctest::Approx(101.5));

  auto zero = write_temp("prices_zero.csv", "date,adj_close\n2020-03-06,0\n");
  CHECK_THROWS_AS(load_prices(zero), std::runtime_error);
  auto dup = write_temp("prices_dup.csv",
                        "date,adj_close\n2020-03-06,1\n2020-03-06,2\n");
  CHECK_THROWS_AS(load_prices(dup), std::runtime_error);
  auto nohdr = write_temp("prices_nohdr.csv", "when,price\n2020-03-06,1\n");
  CHECK_THROWS_AS(load_prices(nohdr), std::runtime_error);
}

TEST_CASE("pct_movement formula") {
  auto m = pct_movement(bars_of({100, 101}));
  REQUIRE(m.size() == 1);
  CHECK(m.begin()->second == doctest::Approx(1.0));
  CHECK(pct_movement(bars_of({100, 100})).begin()->second == doctest::Approx(0.0));
  CHECK(pct_movement(bars_of({100, 90})).begin()->second == doctest::Approx(-10.0));
  CHECK_THROWS_AS(pct_movement(bars_of({100})), std::runtime_error);
}

TEST_CASE("pct_movement compounds back to the final price") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> step(-0.08, 0.08);
  std::vector<double> prices{250.0};
  for (int i = 0; i < 40; ++i) prices.push_back(prices.back() * (1.0 + step(rng)));
  auto bars = bars_of(prices);
  auto movement = pct_movement(bars);
  double reconstructed = prices.front();
  for (const auto& [date, m] : movement) reconstructed *= 1.0 + m / 100.0;
  CHECK(reconstructed == doctest::Approx(prices.back()).epsilon(1e-9));
}

TEST_CASE("corrected_movement subtracts the index") {
  MovementSeries company{{parse_date("2020-03-06"), 2.0}, {parse_date("2020-03-07"), -1.0}};
  MovementSeries index{{parse_date("2020-03-06"), 0.5}, {parse_date("2020-03-07"), -3.0}};
  auto corrected = corrected_movement(company, index);
  CHECK(corrected[parse_date("2020-03-06")] == doctest::Approx(1.5));
  CHECK(corrected[parse_date("2020-03-07")] == doctest::Approx(2.0));

  auto self = corrected_movement(company, company);
  for (const auto& [date, v] : self) CHECK(v == 0.0);

  MovementSeries sparse{{parse_date("2020-03-06"), 0.5}};
  CHECK_THROWS_WITH_AS(corrected_movement(company, sparse),
                       doctest::Contains("2020-03-07"), std::runtime_error);
}

TEST_CASE("pearson basics") {
  auto x = vec({1, 2, 3});
  CHECK(pearson(x, x) == doctest::Approx(1.0));
  CHECK(pearson(x, -x) == doctest::Approx(-1.0));
  CHECK(pearson(x, vec({2, 4, 7})) ==
        doctest::Approx(pearson_oracle({1, 2, 3}, {2, 4, 7})).epsilon(1e-12));
  CHECK_THROWS_AS(pearson(x, vec({1, 2})), std::runtime_error);
  CHECK_THROWS_AS(pearson(vec({1, 1, 1}), x), std::runtime_error);
}

TEST_CASE("pearson symmetry and affine invariance on random series") {
  std::mt19937 rng(47);
  std::normal_distribution<double> normal(0.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 30);
    std::vector<double> xs, ys;
    for (int i = 0; i < n; ++i) {
      xs.push_back(normal(rng));
      ys.push_back(normal(rng));
    }
    Eigen::Map<Eigen::VectorXd> x(xs.data(), n), y(ys.data(), n);
    if (x.isConstant(x[0]) || y.isConstant(y[0])) continue;
    double r = pearson(x, y);
    CHECK(r == doctest::Approx(pearson_oracle(xs, ys)).epsilon(1e-9));
    CHECK(pearson(y, x) == doctest::Approx(r).epsilon(1e-12));
    Eigen::VectorXd xa = 3.5 * x.array() + 1.25;
    CHECK(pearson(xa, y) == doctest::Approx(r).epsilon(1e-9));
    Eigen::VectorXd xn = -2.0 * x.array();
    CHECK(std::abs(pearson(xn, y)) == doctest::Approx(std::abs(r)).epsilon(1e-9));
  }
}

TEST_CASE("standardize gives mean 0 and sample std 1") {
  auto z = standardize(vec({1, 2, 3}));
  CHECK(z[0] == doctest::Approx(-1.0));
  CHECK(z[1] == doctest::Approx(0.0));
  CHECK(z[2] == doctest::Approx(1.0));

  std::mt19937 rng(53);
  std::normal_distribution<double> normal(3.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 40);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = normal(rng);
    if (x.isConstant(x[0])) continue;
    Eigen::VectorXd z2 = standardize(x);
    CHECK(std::abs(z2.mean()) <= 1e-12);
    double std_dev = std::sqrt(z2.squaredNorm() / (n - 1) - 0.0);
    CHECK(std_dev == doctest::Approx(1.0).epsilon(1e-12));
    // idempotent on z-scores
    Eigen::VectorXd z3 = standardize(z2);
    CHECK((z3 - z2).cwiseAbs().maxCoeff() <= 1e-12);
  }

  CHECK_THROWS_AS(standardize(vec({4, 4, 4})), std::runtime_error);
}

TEST_CASE("correlation_table layout and self-correlation") {
  MovementSeries movement;
  std::vector<DailySentimentRow> daily;
  std::mt19937 rng(59);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    Date d = shift_days(parse_date("2020-03-06"), i);
    double v = normal(rng);
    movement[d] = v;
    DailySentimentRow row;
    row.date = d;
    row.mean_polarity = v;  // sentiment mirrors movement exactly
    row.mean_subjectivity = normal(rng);
    row.aggregate = (row.mean_polarity + row.mean_subjectivity) / 2;
    daily.push_back(row);
  }
  auto table = correlation_table(movement, daily);
  CHECK(table.windows == std::vector<int>{1, 3, 5, 7, 9});
  CHECK(table.values.rows() == 3);
  CHECK(table.values.cols() == 5);
  CHECK(table.row_names[0] == "polarity");
  CHECK(table.values(0, 0) == doctest::Approx(1.0));  // w=1 self-correlation
}

TEST_CASE("correlation_table matches brute-force pearson on planted relation") {
  MovementSeries movement;
  std::vector<DailySentimentRow> daily;
  std::mt19937 rng(61);
  std::normal_distribution<double> normal(0.0, 0.1);
  std::vector<double> m, s;
  for (int i = 0; i < 30; ++i) {
    Date d = shift_days(parse_date("2020-03-06"), i);
    double sentiment = std::sin(i * 0.7) * 0.2 + normal(rng);
    double move = -4.0 * sentiment + normal(rng);  // planted negative relation
    movement[d] = move;
    DailySentimentRow row;
    row.date = d;
    row.mean_polarity = sentiment;
    row.mean_subjectivity = 0.3 + 0.05 * std::cos(i);
    row.aggregate = (row.mean_polarity + row.mean_subjectivity) / 2;
    daily.push_back(row);
    m.push_back(move);
    s.push_back(sentiment);
  }
  auto table = correlation_table(movement, daily, {1});
  CHECK(table.values(0, 0) < -0.9);
  CHECK(table.values(0, 0) == doctest::Approx(pearson_oracle(m, s)).epsilon(1e-9));

  CHECK_THROWS_AS(correlation_table(MovementSeries{}, daily, {1}), std::runtime_error);
}

TEST_CASE("movement CSV round trip") {
  MovementSeries movement{{parse_date("2020-03-06"), 1.25},
                          {parse_date("2020-03-09"), -0.875}};
  auto path = std::filesystem::temp_directory_path() / "movement_rt.csv";
  save_movement_csv(movement, path);
  auto loaded = load_movement_csv(path);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[parse_date("2020-03-06")] == 1.25);
  CHECK(loaded[parse_date("2020-03-09")] == -0.875);
}
