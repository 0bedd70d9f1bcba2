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
#include <unordered_map>
#include <vector>

#include "taureau/corpus.hpp"
#include "taureau/dates.hpp"

namespace taureau {

struct LexiconEntry {
  std::string term;
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
  double intensity = 1.0;     // > 0; != 1 marks an intensifier/diminisher
};

struct SentimentScore {
  double polarity = 0.0;
  double subjectivity = 0.0;
};

class Lexicon {
 public:
  void add(LexiconEntry entry);
  const LexiconEntry* find(const std::string& term) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
};

struct ScoringOptions {
  double negation_factor = -0.5;
  int negation_window = 3;
  std::vector<std::string> negators = {"not", "no", "never", "n't"};
};

/// Loads a TSV lexicon with header term\tpolarity\tsubjectivity\tintensity.
/// Throws on out-of-range values or duplicate terms, naming the row.
Lexicon load_lexicon(const std::filesystem::path& path);

/// Lexicon scan over the token list. Each token matching a non-intensifier
/// entry becomes a hit; a negator within the 3 preceding tokens multiplies
/// the hit polarity by -0.5; an intensifier entry immediately before the hit
/// multiplies polarity by its intensity (clamped to [-1,1]). The score is
/// the mean over hits, or (0,0) when nothing matched.
SentimentScore score_tweet(const CleanTweet& tweet, const Lexicon& lexicon,
                           const ScoringOptions& options = {});

struct ScoredTweet {
  std::string id;
  Date date;
  SentimentScore score;
};

using ScoresByDate = std::map<Date, std::vector<ScoredTweet>>;

/// Scores every tweet once; per-date lists are ordered by tweet id so the
/// parallel path is indistinguishable from the serial one.
ScoresByDate score_corpus(const TweetCorpus& corpus, const Lexicon& lexicon,
                          const ScoringOptions& options = {},
                          bool parallel = false);

void save_scores_csv(const ScoresByDate& scores, const std::filesystem::path& path);
ScoresByDate load_scores_csv(const std::filesystem::path& path);

}  // namespace taureau
