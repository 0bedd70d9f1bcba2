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

#include "taureau/report.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace taureau {

std::vector<Date> flag_dates(const std::map<Date, double>& predictions,
                             double threshold) {
  if (!(threshold > 0.0)) throw std::runtime_error("threshold must be positive");
  std::vector<Date> out;
  for (const auto& [date, predicted] : predictions) {
    if (std::abs(predicted) > threshold) out.push_back(date);
  }
  return out;  // map iteration is already ascending
}

std::vector<ExtremeDayReport> report_top_tweets(
    const TweetCorpus& corpus, const std::map<Date, double>& predictions,
    const std::vector<Date>& dates, std::size_t k) {
  if (k == 0) throw std::runtime_error("k must be >= 1");
  std::vector<ExtremeDayReport> reports;
  for (const Date& date : dates) {
    ExtremeDayReport report;
    report.date = date;
    auto it = predictions.find(date);
    report.predicted_movement = it == predictions.end() ? 0.0 : it->second;
    report.entries = most_repeated(corpus, date, k);
    report.empty_day = report.entries.empty();
    reports.push_back(std::move(report));
  }
  return reports;
}

void save_reports_json(const std::vector<ExtremeDayReport>& reports,
                       const std::filesystem::path& path) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ExtremeDayReport& report : reports) {
    nlohmann::ordered_json obj;
    obj["date"] = format_date(report.date);
    obj["predicted_movement"] = report.predicted_movement;
    obj["empty_day"] = report.empty_day;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [text, count] : report.entries) {
      entries.push_back({{"text", text}, {"count", count}});
    }
    obj["top_tweets"] = std::move(entries);
    arr.push_back(std::move(obj));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report file: " + path.string());
  out << arr.dump(2) << '\n';
}

}  // namespace taureau
