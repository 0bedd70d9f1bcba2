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

#include "taureau/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace taureau {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

bool starts_with_ci(const std::string& s, const char* prefix) {
  std::size_t n = std::char_traits<char>::length(prefix);
  if (s.size() < n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  }
  return true;
}

// Emoticon sequences and their sentinel tokens. :( is the only negative one.
const std::vector<std::pair<std::string, std::string>> kEmoticons = {
    {":)", " emo_pos "}, {":D", " emo_pos "}, {";)", " emo_pos "},
    {":(", " emo_neg "}};

void replace_emoticons(std::string& text) {
  for (const auto& [emo, sentinel] : kEmoticons) {
    std::size_t pos = 0;
    while ((pos = text.find(emo, pos)) != std::string::npos) {
      text.replace(pos, emo.size(), sentinel);
      pos += sentinel.size();
    }
  }
}

std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string chunk;
  while (in >> chunk) out.push_back(std::move(chunk));
  return out;
}

bool tweet_order(const CleanTweet& a, const CleanTweet& b) {
  auto da = std::chrono::sys_days{a.date};
  auto db = std::chrono::sys_days{b.date};
  if (da != db) return da < db;
  return a.id < b.id;
}

}  // namespace

CleanTweet clean_and_tokenize(const RawTweet& raw) {
  CleanTweet out;
  out.id = raw.id;
  out.date = timestamp_to_utc_date(raw.timestamp);

  // URL and mention removal works on whitespace chunks of the original text,
  // before any character filtering can mangle the prefixes.
  std::string kept;
  for (const std::string& chunk : split_ws(raw.text)) {
    if (starts_with_ci(chunk, "http://") || starts_with_ci(chunk, "https://") ||
        starts_with_ci(chunk, "www.") || chunk.front() == '@') {
      continue;
    }
    kept += chunk;
    kept += ' ';
  }

  replace_emoticons(kept);
  kept = to_lower(kept);

  for (std::string chunk : split_ws(kept)) {
    if (chunk.front() == '#') chunk.erase(0, 1);
    std::string token;
    for (char c : chunk) {
      unsigned char u = static_cast<unsigned char>(c);
      if (std::isalnum(u) || c == '\'' || c == '_') token += c;
    }
    if (!token.empty()) out.tokens.push_back(std::move(token));
  }

  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    if (i) out.normalized_text += ' ';
    out.normalized_text += out.tokens[i];
  }
  return out;
}

IngestResult ingest_jsonl(const std::filesystem::path& path,
                          const std::string& company) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tweet file: " + path.string());

  IngestResult result;
  result.corpus.company = company;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("malformed JSON on line " + std::to_string(line_no) +
                               " of " + path.string() + ": " + e.what());
    }
    if (!obj.contains("id") || !obj.contains("created_at") || !obj.contains("text")) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               " missing id/created_at/text");
    }
    RawTweet raw;
    raw.id = obj["id"].is_string() ? obj["id"].get<std::string>()
                                   : obj["id"].dump();
    raw.timestamp = obj["created_at"].get<std::string>();
    raw.text = obj["text"].get<std::string>();
    raw.company_query = company;
    if (raw.id.empty()) {
      throw std::runtime_error("empty tweet id on line " + std::to_string(line_no));
    }
    if (!seen.insert(raw.id).second) {
      ++result.duplicate_ids;
      continue;
    }
    CleanTweet clean;
    try {
      clean = clean_and_tokenize(raw);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("tweet id " + raw.id + ": " + e.what());
    }
    result.corpus.tweets.push_back(std::move(clean));
  }
  std::sort(result.corpus.tweets.begin(), result.corpus.tweets.end(), tweet_order);
  return result;
}

TweetCorpus filter_by_keywords(const TweetCorpus& corpus,
                               const std::vector<std::string>& include,
                               const std::vector<std::string>& exclude) {
  if (include.empty()) throw std::runtime_error("include keyword list is empty");
  std::vector<std::string> inc, exc;
  for (const auto& s : include) inc.push_back(to_lower(s));
  for (const auto& s : exclude) exc.push_back(to_lower(s));

  TweetCorpus out;
  out.company = corpus.company;
  for (const CleanTweet& t : corpus.tweets) {
    auto contains = [&t](const std::string& term) {
      return t.normalized_text.find(term) != std::string::npos;
    };
    if (std::any_of(inc.begin(), inc.end(), contains) &&
        std::none_of(exc.begin(), exc.end(), contains)) {
      out.tweets.push_back(t);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::size_t>> most_repeated(
    const TweetCorpus& corpus, const Date& date, std::size_t k) {
  if (k == 0) throw std::runtime_error("k must be >= 1");
  std::map<std::string, std::size_t> counts;
  for (const CleanTweet& t : corpus.tweets) {
    if (t.date == date) ++counts[t.normalized_text];
  }
  std::vector<std::pair<std::string, std::size_t>> groups(counts.begin(),
                                                          counts.end());
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (groups.size() > k) groups.resize(k);
  return groups;
}

void save_corpus_jsonl(const TweetCorpus& corpus,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write corpus file: " + path.string());
  nlohmann::ordered_json header;
  header["company"] = corpus.company;
  out << header.dump() << '\n';
  for (const CleanTweet& t : corpus.tweets) {
    nlohmann::ordered_json obj;
    obj["id"] = t.id;
    obj["date"] = format_date(t.date);
    obj["tokens"] = t.tokens;
    obj["normalized_text"] = t.normalized_text;
    out << obj.dump() << '\n';
  }
}

TweetCorpus load_corpus_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());
  TweetCorpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("malformed corpus line " + std::to_string(line_no) +
                               ": " + e.what());
    }
    if (line_no == 1 && obj.contains("company")) {
      corpus.company = obj["company"].get<std::string>();
      continue;
    }
    CleanTweet t;
    t.id = obj.at("id").get<std::string>();
    t.date = parse_date(obj.at("date").get<std::string>());
    t.tokens = obj.at("tokens").get<std::vector<std::string>>();
    t.normalized_text = obj.at("normalized_text").get<std::string>();
    corpus.tweets.push_back(std::move(t));
  }
  std::sort(corpus.tweets.begin(), corpus.tweets.end(), tweet_order);
  return corpus;
}

}  // namespace taureau
