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

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "taureau/dates.hpp"

namespace taureau {

struct RawTweet {
  std::string id;
  std::string timestamp;  // ISO-8601 with offset
  std::string text;
  std::string company_query;
};

/// A tokenized, normalized tweet bucketed to its UTC calendar date.
struct CleanTweet {
  std::string id;
  Date date;
  std::vector<std::string> tokens;
  std::string normalized_text;  // tokens joined by single spaces
};

struct TweetCorpus {
  std::string company;
  std::vector<CleanTweet> tweets;  // sorted by (date, id), ids unique
};

struct IngestResult {
  TweetCorpus corpus;
  std::size_t duplicate_ids = 0;
};

/// Reads a JSON-lines file (fields id, created_at, text; unknown fields
/// ignored), cleans and tokenizes each tweet, and returns the corpus sorted
/// by (date, id). Duplicate ids collapse to the first occurrence.
IngestResult ingest_jsonl(const std::filesystem::path& path,
                          const std::string& company);

/// Keeps tweets whose normalized text contains at least one include term and
/// no exclude term (case-insensitive substring match). Order preserved.
TweetCorpus filter_by_keywords(const TweetCorpus& corpus,
                               const std::vector<std::string>& include,
                               const std::vector<std::string>& exclude);

/// Lowercases, strips URLs and @mentions, keeps hashtag words without '#',
/// maps emoticons to sentinel tokens, drops everything except letters,
/// digits and apostrophes, and splits on whitespace.
CleanTweet clean_and_tokenize(const RawTweet& raw);

/// Top-k most repeated normalized texts on a day, count descending, ties by
/// ascending text.
std::vector<std::pair<std::string, std::size_t>> most_repeated(
    const TweetCorpus& corpus, const Date& date, std::size_t k);

void save_corpus_jsonl(const TweetCorpus& corpus,
                       const std::filesystem::path& path);
TweetCorpus load_corpus_jsonl(const std::filesystem::path& path);

}  // namespace taureau
