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
#include <string>
#include <utility>
#include <vector>

#include "taureau/corpus.hpp"
#include "taureau/dates.hpp"

namespace taureau {

struct ExtremeDayReport {
  Date date;
  double predicted_movement = 0.0;
  std::vector<std::pair<std::string, std::size_t>> entries;  // count desc, text asc
  bool empty_day = false;  // flagged day had no tweets in the corpus
};

/// Dates whose |prediction| strictly exceeds the threshold, ascending.
std::vector<Date> flag_dates(const std::map<Date, double>& predictions,
                             double threshold = 10.0);

/// Top-k repeated tweets for each flagged date.
std::vector<ExtremeDayReport> report_top_tweets(
    const TweetCorpus& corpus, const std::map<Date, double>& predictions,
    const std::vector<Date>& dates, std::size_t k = 15);

void save_reports_json(const std::vector<ExtremeDayReport>& reports,
                       const std::filesystem::path& path);

}  // namespace taureau
