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

#include "taureau/sentiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace taureau {

void Lexicon::add(LexiconEntry entry) {
  auto [it, inserted] = entries_.emplace(entry.term, std::move(entry));
  if (!inserted) {
    throw std::runtime_error("duplicate lexicon term '" + it->first + "'");
  }
}

const LexiconEntry* Lexicon::find(const std::string& term) const {
  auto it = entries_.find(term);
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path.string());
  Lexicon lexicon;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (row == 1 && line.rfind("term\t", 0) == 0) continue;  // header
    std::istringstream fields(line);
    LexiconEntry entry;
    std::string pol, subj, inten;
    if (!std::getline(fields, entry.term, '\t') ||
        !std::getline(fields, pol, '\t') || !std::getline(fields, subj, '\t') ||
        !std::getline(fields, inten, '\t')) {
      throw std::runtime_error("lexicon row " + std::to_string(row) +
                               ": expected 4 tab-separated columns");
    }
    try {
      entry.polarity = std::stod(pol);
      entry.subjectivity = std::stod(subj);
      entry.intensity = std::stod(inten);
    } catch (const std::exception&) {
      throw std::runtime_error("lexicon row " + std::to_string(row) +
                               ": non-numeric value");
    }
    if (entry.term.empty() || entry.polarity < -1.0 || entry.polarity > 1.0 ||
        entry.subjectivity < 0.0 || entry.subjectivity > 1.0 ||
        entry.intensity <= 0.0) {
      throw std::runtime_error("lexicon row " + std::to_string(row) +
                               ": value out of range for term '" + entry.term + "'");
    }
    try {
      lexicon.add(std::move(entry));
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("lexicon row " + std::to_string(row) + ": " + e.what());
    }
  }
  return lexicon;
}

SentimentScore score_tweet(const CleanTweet& tweet, const Lexicon& lexicon,
                           const ScoringOptions& options) {
  double polarity_sum = 0.0;
  double subjectivity_sum = 0.0;
  std::size_t hits = 0;

  const auto& tokens = tweet.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const LexiconEntry* entry = lexicon.find(tokens[i]);
    if (entry == nullptr || entry->intensity != 1.0) continue;

    double polarity = entry->polarity;
    bool negated = false;
    for (int back = 1; back <= options.negation_window && back <= static_cast<int>(i);
         ++back) {
      const std::string& prev = tokens[i - back];
      if (std::find(options.negators.begin(), options.negators.end(), prev) !=
          options.negators.end()) {
        negated = true;
        break;
      }
    }
    if (negated) polarity *= options.negation_factor;
    if (i > 0) {
      const LexiconEntry* prev = lexicon.find(tokens[i - 1]);
      if (prev != nullptr && prev->intensity != 1.0) {
        polarity = std::clamp(polarity * prev->intensity, -1.0, 1.0);
      }
    }
    polarity_sum += polarity;
    subjectivity_sum += entry->subjectivity;
    ++hits;
  }

  if (hits == 0) return {0.0, 0.0};
  return {std::clamp(polarity_sum / hits, -1.0, 1.0),
          std::clamp(subjectivity_sum / hits, 0.0, 1.0)};
}

ScoresByDate score_corpus(const TweetCorpus& corpus, const Lexicon& lexicon,
                          const ScoringOptions& options, bool parallel) {
  std::vector<ScoredTweet> scored(corpus.tweets.size());
  auto score_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const CleanTweet& t = corpus.tweets[i];
      scored[i] = {t.id, t.date, score_tweet(t, lexicon, options)};
    }
  };

  if (parallel && corpus.tweets.size() > 1) {
    unsigned n_threads = std::min<unsigned>(std::thread::hardware_concurrency(),
                                            4u);
    n_threads = std::max(n_threads, 2u);
    std::size_t chunk = (corpus.tweets.size() + n_threads - 1) / n_threads;
    std::vector<std::future<void>> futures;
    for (unsigned t = 0; t < n_threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(begin + chunk, corpus.tweets.size());
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, score_range, begin, end));
    }
    for (auto& f : futures) f.get();
  } else {
    score_range(0, corpus.tweets.size());
  }

  ScoresByDate by_date;
  for (ScoredTweet& s : scored) by_date[s.date].push_back(std::move(s));
  for (auto& [date, list] : by_date) {
    std::sort(list.begin(), list.end(),
              [](const ScoredTweet& a, const ScoredTweet& b) { return a.id < b.id; });
  }
  return by_date;
}

void save_scores_csv(const ScoresByDate& scores, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scores file: " + path.string());
  out << "id,date,polarity,subjectivity\n";
  char buf[64];
  for (const auto& [date, list] : scores) {
    for (const ScoredTweet& s : list) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", s.score.polarity,
                    s.score.subjectivity);
      out << s.id << ',' << format_date(date) << ',' << buf << '\n';
    }
  }
}

ScoresByDate load_scores_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scores file: " + path.string());
  ScoresByDate scores;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || row == 1) continue;  // header
    std::istringstream fields(line);
    std::string id, date, pol, subj;
    if (!std::getline(fields, id, ',') || !std::getline(fields, date, ',') ||
        !std::getline(fields, pol, ',') || !std::getline(fields, subj, ',')) {
      throw std::runtime_error("scores row " + std::to_string(row) +
                               ": expected 4 columns");
    }
    ScoredTweet s;
    s.id = id;
    s.date = parse_date(date);
    s.score.polarity = std::stod(pol);
    s.score.subjectivity = std::stod(subj);
    scores[s.date].push_back(std::move(s));
  }
  for (auto& [date, list] : scores) {
    std::sort(list.begin(), list.end(),
              [](const ScoredTweet& a, const ScoredTweet& b) { return a.id < b.id; });
  }
  return scores;
}

}  // namespace taureau
