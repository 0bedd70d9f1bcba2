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

#include <filesystem>
#include <fstream>
#include <random>

#include "taureau/sentiment.hpp"

using namespace taureau;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

Lexicon make_lexicon(std::initializer_list<LexiconEntry> entries) {
  Lexicon lex;
  for (const auto& e : entries) lex.add(e);
  return lex;
}

CleanTweet tweet_with(std::vector<std::string> tokens) {
  CleanTweet t;
  t.id = "t";
  t.date = parse_date("2020-03-06");
  t.tokens = std::move(tokens);
  return t;
}

}  // namespace

TEST_CASE("load_lexicon parses rows and validates ranges") {
  auto path = write_temp("lex.tsv",
                         "term\tpolarity\tsubjectivity\tintensity\n"
                         "great\t0.8\t0.75\t1.0\n");
  auto lex = load_lexicon(path);
  REQUIRE(lex.size() == 1);
  const auto* entry = lex.find("great");
  REQUIRE(entry != nullptr);
  CHECK(entry->polarity == doctest::Approx(0.8));
  CHECK(entry->subjectivity == doctest::Approx(0.75));
  CHECK(entry->intensity == doctest::Approx(1.0));
}

TEST_CASE("load_lexicon rejects out-of-range and duplicate rows") {
  auto bad = write_temp("lex_bad.tsv",
                        "term\tpolarity\tsubjectivity\tintensity\n"
                        "wow\t1.5\t0.5\t1.0\n");
  CHECK_THROWS_WITH_AS(load_lexicon(bad), doctest::Contains("row 2"),
                       std::runtime_error);
  auto dup = write_temp("lex_dup.tsv",
                        "term\tpolarity\tsubjectivity\tintensity\n"
                        "wow\t0.5\t0.5\t1.0\nwow\t0.1\t0.1\t1.0\n");
  CHECK_THROWS_AS(load_lexicon(dup), std::runtime_error);
}

TEST_CASE("empty lexicon is valid and scores everything neutral") {
  auto path = write_temp("lex_empty.tsv", "");
  auto lex = load_lexicon(path);
  CHECK(lex.empty());
  auto score = score_tweet(tweet_with({"great", "stuff"}), lex);
  CHECK(score.polarity == 0.0);
  CHECK(score.subjectivity == 0.0);
}

TEST_CASE("score_tweet single hit") {
  auto lex = make_lexicon({{"great", 0.8, 0.75, 1.0}});
  auto score = score_tweet(tweet_with({"great", "product"}), lex);
  CHECK(score.polarity == doctest::Approx(0.8));
  CHECK(score.subjectivity == doctest::Approx(0.75));
}

TEST_CASE("score_tweet negation damps and flips") {
  auto lex = make_lexicon({{"great", 0.8, 0.75, 1.0}});
  auto score = score_tweet(tweet_with({"not", "great"}), lex);
  CHECK(score.polarity == doctest::Approx(-0.4));
  CHECK(score.subjectivity == doctest::Approx(0.75));

  // negator anywhere in the 3 preceding tokens
  auto far = score_tweet(tweet_with({"never", "a", "b", "great"}), lex);
  CHECK(far.polarity == doctest::Approx(-0.4));
  // out of window
  auto out = score_tweet(tweet_with({"never", "a", "b", "c", "great"}), lex);
  CHECK(out.polarity == doctest::Approx(0.8));
}

TEST_CASE("double negation applies the factor once") {
  auto lex = make_lexicon({{"great", 0.8, 0.75, 1.0}});
  auto score = score_tweet(tweet_with({"not", "not", "great"}), lex);
  CHECK(score.polarity == doctest::Approx(-0.4));
}

TEST_CASE("intensifier multiplies and clamps") {
  auto lex = make_lexicon({{"great", 0.8, 0.75, 1.0}, {"very", 0.0, 0.3, 1.3}});
  auto score = score_tweet(tweet_with({"very", "great"}), lex);
  CHECK(score.polarity == doctest::Approx(1.0));  // 0.8 * 1.3 clamped
  CHECK(score.subjectivity == doctest::Approx(0.75));

  auto lex2 = make_lexicon({{"good", 0.6, 0.5, 1.0}, {"slightly", 0.0, 0.1, 0.5}});
  auto damped = score_tweet(tweet_with({"slightly", "good"}), lex2);
  CHECK(damped.polarity == doctest::Approx(0.3));
}

TEST_CASE("no match yields exact neutral") {
  auto lex = make_lexicon({{"great", 0.8, 0.75, 1.0}});
  auto score = score_tweet(tweet_with({}), lex);
  CHECK(score.polarity == 0.0);
  CHECK(score.subjectivity == 0.0);
}

TEST_CASE("score ranges hold on fuzzed inputs") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> pol(-1.0, 1.0);
  std::uniform_real_distribution<double> subj(0.0, 1.0);
  std::uniform_real_distribution<double> inten(0.1, 3.0);

  for (int trial = 0; trial < 300; ++trial) {
    Lexicon lex;
    int n_terms = 1 + static_cast<int>(rng() % 20);
    for (int i = 0; i < n_terms; ++i) {
      bool intensifier = rng() % 5 == 0;
      lex.add({"w" + std::to_string(i), pol(rng), subj(rng),
               intensifier ? inten(rng) : 1.0});
    }
    std::vector<std::string> tokens;
    int n_tokens = static_cast<int>(rng() % 30);
    for (int i = 0; i < n_tokens; ++i) {
      switch (rng() % 4) {
        case 0: tokens.push_back("not"); break;
        case 1: tokens.push_back("filler"); break;
        default: tokens.push_back("w" + std::to_string(rng() % 25));
      }
    }
    auto score = score_tweet(tweet_with(tokens), lex);
    CHECK(score.polarity >= -1.0);
    CHECK(score.polarity <= 1.0);
    CHECK(score.subjectivity >= 0.0);
    CHECK(score.subjectivity <= 1.0);
  }
}

TEST_CASE("plain-mean oracle when no negators or intensifiers are involved") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> pol(-1.0, 1.0);
  std::uniform_real_distribution<double> subj(0.0, 1.0);

  for (int trial = 0; trial < 200; ++trial) {
    Lexicon lex;
    std::vector<LexiconEntry> entries;
    int n_terms = 1 + static_cast<int>(rng() % 15);
    for (int i = 0; i < n_terms; ++i) {
      LexiconEntry e{"w" + std::to_string(i), pol(rng), subj(rng), 1.0};
      lex.add(e);
      entries.push_back(e);
    }
    std::vector<std::string> tokens;
    int n_tokens = static_cast<int>(rng() % 20);
    for (int i = 0; i < n_tokens; ++i) {
      tokens.push_back(rng() % 3 ? "w" + std::to_string(rng() % 20) : "miss");
    }

    // brute force: mean over matched entries
    double psum = 0, ssum = 0;
    int hits = 0;
    for (const auto& tok : tokens) {
      for (const auto& e : entries) {
        if (e.term == tok) {
          psum += e.polarity;
          ssum += e.subjectivity;
          ++hits;
        }
      }
    }
    auto score = score_tweet(tweet_with(tokens), lex);
    if (hits == 0) {
      CHECK(score.polarity == 0.0);
      CHECK(score.subjectivity == 0.0);
    } else {
      CHECK(score.polarity == psum / hits);
      CHECK(score.subjectivity == ssum / hits);
    }
  }
}

TEST_CASE("score_corpus conserves tweet count and orders by id") {
  auto lex = make_lexicon({{"up", 0.5, 0.4, 1.0}});
  TweetCorpus corpus;
  for (int i = 0; i < 9; ++i) {
    CleanTweet t;
    t.id = "id" + std::to_string(9 - i);
    t.date = parse_date(i % 3 == 0 ? "2020-03-06" : "2020-03-07");
    t.tokens = {"up"};
    corpus.tweets.push_back(t);
  }
  auto scores = score_corpus(corpus, lex);
  std::size_t total = 0;
  for (const auto& [date, list] : scores) {
    total += list.size();
    for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].id < list[i].id);
  }
  CHECK(total == corpus.tweets.size());
  CHECK(scores.size() == 2);
  CHECK(score_corpus(TweetCorpus{}, lex).empty());
}

TEST_CASE("parallel scoring matches serial scoring exactly") {
  std::mt19937 rng(23);
  Lexicon lex;
  for (int i = 0; i < 40; ++i) {
    lex.add({"w" + std::to_string(i), (i % 7 - 3) / 3.0, (i % 5) / 4.0, 1.0});
  }
  TweetCorpus corpus;
  for (int i = 0; i < 500; ++i) {
    CleanTweet t;
    t.id = "t" + std::to_string(i);
    t.date = shift_days(parse_date("2020-03-06"), static_cast<int>(rng() % 10));
    int n = static_cast<int>(rng() % 12);
    for (int j = 0; j < n; ++j) t.tokens.push_back("w" + std::to_string(rng() % 50));
    corpus.tweets.push_back(t);
  }
  auto serial = score_corpus(corpus, lex, {}, false);
  auto parallel = score_corpus(corpus, lex, {}, true);
  REQUIRE(serial.size() == parallel.size());
  for (const auto& [date, list] : serial) {
    const auto& plist = parallel.at(date);
    REQUIRE(list.size() == plist.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(list[i].id == plist[i].id);
      CHECK(list[i].score.polarity == plist[i].score.polarity);
      CHECK(list[i].score.subjectivity == plist[i].score.subjectivity);
    }
  }
}

TEST_CASE("scores CSV round trip") {
  auto lex = make_lexicon({{"up", 0.5, 0.4, 1.0}, {"down", -0.7, 0.6, 1.0}});
  TweetCorpus corpus;
  for (int i = 0; i < 6; ++i) {
    CleanTweet t;
    t.id = "t" + std::to_string(i);
    t.date = parse_date(i % 2 ? "2020-03-06" : "2020-03-07");
    t.tokens = {i % 3 ? "up" : "down", "x"};
    corpus.tweets.push_back(t);
  }
  auto scores = score_corpus(corpus, lex);
  auto path = std::filesystem::temp_directory_path() / "scores_rt.csv";
  save_scores_csv(scores, path);
  auto loaded = load_scores_csv(path);
  REQUIRE(loaded.size() == scores.size());
  for (const auto& [date, list] : scores) {
    const auto& llist = loaded.at(date);
    REQUIRE(list.size() == llist.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(list[i].score.polarity == llist[i].score.polarity);
      CHECK(list[i].score.subjectivity == llist[i].score.subjectivity);
    }
  }
}
