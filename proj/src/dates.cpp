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

#include "taureau/dates.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace taureau {

namespace {

bool all_digits(const std::string& s, std::size_t pos, std::size_t n) {
  if (pos + n > s.size()) return false;
  for (std::size_t i = pos; i < pos + n; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

int to_int(const std::string& s, std::size_t pos, std::size_t n) {
  int v = 0;
  for (std::size_t i = pos; i < pos + n; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

}  // namespace

Date parse_date(const std::string& text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      !all_digits(text, 0, 4) || !all_digits(text, 5, 2) ||
      !all_digits(text, 8, 2)) {
    throw std::runtime_error("invalid date '" + text + "', expected YYYY-MM-DD");
  }
  Date d{std::chrono::year{to_int(text, 0, 4)},
         std::chrono::month{static_cast<unsigned>(to_int(text, 5, 2))},
         std::chrono::day{static_cast<unsigned>(to_int(text, 8, 2))}};
  if (!d.ok()) throw std::runtime_error("invalid calendar date '" + text + "'");
  return d;
}

Date timestamp_to_utc_date(const std::string& text) {
  // Expect YYYY-MM-DD[Thh:mm:ss[.frac]][Z|+hh:mm|-hh:mm|+hhmm]
  if (text.size() < 10) throw std::runtime_error("invalid timestamp '" + text + "'");
  Date base = parse_date(text.substr(0, 10));
  if (text.size() == 10) return base;

  char sep = text[10];
  if (sep != 'T' && sep != 't' && sep != ' ') {
    throw std::runtime_error("invalid timestamp '" + text + "'");
  }
  if (!all_digits(text, 11, 2) || text.size() < 16 || text[13] != ':' ||
      !all_digits(text, 14, 2)) {
    throw std::runtime_error("invalid timestamp '" + text + "'");
  }
  int hour = to_int(text, 11, 2);
  int minute = to_int(text, 14, 2);
  int second = 0;
  std::size_t pos = 16;
  if (pos + 2 < text.size() + 1 && pos < text.size() && text[pos] == ':') {
    if (!all_digits(text, pos + 1, 2)) {
      throw std::runtime_error("invalid timestamp '" + text + "'");
    }
    second = to_int(text, pos + 1, 2);
    pos += 3;
  }
  // skip fractional seconds
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  int offset_minutes = 0;
  if (pos < text.size()) {
    char c = text[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      int sign = (c == '+') ? 1 : -1;
      ++pos;
      if (!all_digits(text, pos, 2)) {
        throw std::runtime_error("invalid timestamp offset in '" + text + "'");
      }
      int oh = to_int(text, pos, 2);
      pos += 2;
      if (pos < text.size() && text[pos] == ':') ++pos;
      int om = 0;
      if (all_digits(text, pos, 2)) {
        om = to_int(text, pos, 2);
        pos += 2;
      }
      offset_minutes = sign * (oh * 60 + om);
    }
  }
  if (pos != text.size()) {
    throw std::runtime_error("trailing characters in timestamp '" + text + "'");
  }
  if (hour > 23 || minute > 59 || second > 60) {
    throw std::runtime_error("invalid time of day in '" + text + "'");
  }

  using namespace std::chrono;
  auto utc = sys_days{base} + hours{hour} + minutes{minute} + seconds{second} -
             minutes{offset_minutes};
  return Date{floor<days>(utc)};
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

}  // namespace taureau
