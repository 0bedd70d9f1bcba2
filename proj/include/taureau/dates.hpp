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

#include <chrono>
#include <string>

namespace taureau {

/// Calendar date in UTC. All day bucketing in the pipeline uses this type.
using Date = std::chrono::year_month_day;

/// Parses "YYYY-MM-DD". Throws std::runtime_error on malformed input.
Date parse_date(const std::string& text);

/// Parses an ISO-8601 timestamp with offset (e.g. "2020-04-12T15:30:00+02:00"
/// or trailing "Z") and returns the UTC calendar date of the instant.
Date timestamp_to_utc_date(const std::string& text);

std::string format_date(const Date& d);

inline Date shift_days(const Date& d, int days) {
  return Date{std::chrono::sys_days{d} + std::chrono::days{days}};
}

}  // namespace taureau
