#!/usr/bin/env python3
"""Generates the bundled demo dataset: tweets, lexicon, prices, config.

The corpus is synthetic but shaped like the real thing: daily tweet batches
for one company, a lexicon of ~200 scored terms, weekday price bars for the
company and the index. Corrected movement is wired to lag-1 daily polarity
(corrected = 30 * polarity[d-1]), so the fitted model is meaningful. Normal
days keep their mean polarity in a narrow positive band; one day before a
test trading day carries uniformly strong sentiment, pushing that day's
prediction past +10%.
"""

import json
import random
from datetime import date, timedelta
from pathlib import Path

OUT = Path(__file__).resolve().parent
rng = random.Random(20200306)

SENTIMENT_START = date(2020, 3, 1)
SENTIMENT_END = date(2020, 4, 15)
PRICE_START = date(2020, 3, 2)
FLAG_DAY = date(2020, 4, 14)        # prediction for this trading day exceeds +10%
HOT_SENTIMENT_DAY = FLAG_DAY - timedelta(days=1)
SLOPE = 30.0                        # corrected percent movement per unit lag-1 polarity

POSITIVE = [
    "great", "good", "excellent", "amazing", "awesome", "fantastic", "love",
    "win", "winning", "strong", "bullish", "beat", "beats", "record",
    "surge", "soar", "soaring", "rally", "gain", "gains", "profit",
    "profitable", "growth", "innovative", "breakthrough", "impressive",
    "success", "successful", "upgrade", "upgraded", "outperform", "best",
    "happy", "excited", "exciting", "optimistic", "boom", "booming",
    "milestone", "delivers", "delivered", "smash", "crushing", "stellar",
    "solid", "robust", "momentum", "brilliant", "superb", "thrilled",
]
NEGATIVE = [
    "bad", "terrible", "awful", "horrible", "hate", "lose", "losing",
    "weak", "bearish", "miss", "misses", "crash", "crashing", "plunge",
    "plunging", "drop", "drops", "tumble", "slump", "loss", "losses",
    "decline", "declining", "downgrade", "downgraded", "underperform",
    "worst", "sad", "angry", "worried", "fear", "panic", "bust",
    "recall", "recalls", "lawsuit", "delay", "delayed", "failure", "fail",
    "failing", "broken", "disaster", "disappointing", "disappoints",
    "overvalued", "bubble", "risky", "trouble", "struggling",
]
NEUTRAL_SENTIMENT = [
    "report", "reports", "update", "announcement", "quarterly", "earnings",
    "forecast", "guidance", "outlook", "estimate", "statement", "meeting",
    "conference", "launch", "event", "release", "factory", "production",
    "deliveries", "vehicle", "battery", "software", "autopilot", "charging",
]
FILLERS = [
    "the", "a", "an", "for", "with", "about", "today", "this", "that",
    "stock", "shares", "market", "price", "tesla", "tsla", "car", "cars",
    "new", "week", "year", "now", "just", "ok", "again", "still",
]


def build_lexicon():
    rows = []
    for i, term in enumerate(POSITIVE):
        pol = round(0.3 + 0.6 * ((i * 7) % 10) / 10 + 0.05, 2)
        subj = round(0.4 + 0.5 * ((i * 3) % 10) / 10, 2)
        rows.append((term, min(pol, 1.0), subj, 1.0))
    for i, term in enumerate(NEGATIVE):
        pol = -round(0.3 + 0.6 * ((i * 7) % 10) / 10 + 0.05, 2)
        subj = round(0.4 + 0.5 * ((i * 5) % 10) / 10, 2)
        rows.append((term, max(pol, -1.0), subj, 1.0))
    for i, term in enumerate(NEUTRAL_SENTIMENT):
        pol = round((((i * 7) % 11) - 5) / 100, 2)  # small values around zero
        subj = round(0.05 + 0.3 * ((i * 3) % 10) / 10, 2)
        rows.append((term, pol, subj, 1.0))
    rows.append(("emo_pos", 0.6, 0.9, 1.0))
    rows.append(("emo_neg", -0.6, 0.9, 1.0))
    # intensifiers / diminishers (polarity column unused for these)
    rows.append(("very", 0.0, 0.3, 1.3))
    rows.append(("extremely", 0.0, 0.4, 1.6))
    rows.append(("slightly", 0.0, 0.2, 0.5))
    rows.append(("somewhat", 0.0, 0.2, 0.7))
    with open(OUT / "lexicon.tsv", "w") as f:
        f.write("term\tpolarity\tsubjectivity\tintensity\n")
        for term, pol, subj, inten in rows:
            f.write(f"{term}\t{pol}\t{subj}\t{inten}\n")
    return {term: (pol, subj) for term, pol, subj, inten in rows if inten == 1.0}


# positives whose polarity sits near 0.5, used for normal days so the daily
# mean stays bounded well below the report threshold
MODERATE_POSITIVE = ["great", "love", "record", "gain", "growth", "solid", "happy"]


def tweet_text(word):
    lead = rng.sample(FILLERS, 3)
    return f"{lead[0]} {lead[1]} tesla {word} {lead[2]}"


def score_text(text, lexicon):
    hits = [lexicon[w][0] for w in text.split() if w in lexicon]
    return sum(hits) / len(hits) if hits else 0.0


def build_tweets(lexicon):
    tweets = []
    tid = 1000
    day = SENTIMENT_START
    while day <= SENTIMENT_END:
        n = rng.randint(6, 10)
        if day == HOT_SENTIMENT_DAY:
            words = ["love"] * n
        else:
            target = rng.uniform(0.06, 0.22)
            k = round(n * target / 0.45)
            words = [rng.choice(MODERATE_POSITIVE) for _ in range(k)]
            words += [rng.choice(NEUTRAL_SENTIMENT) for _ in range(n - k)]
            rng.shuffle(words)
        for k_idx, word in enumerate(words):
            tweets.append({
                "id": f"t{tid}",
                "created_at": f"{day.isoformat()}T{9 + (k_idx % 12):02d}:{(k_idx * 7) % 60:02d}:00Z",
                "text": tweet_text(word),
            })
            tid += 1
        day += timedelta(days=1)

    # repeated tweet on the flagged day, for the extreme-day report
    for k in range(5):
        tweets.append({
            "id": f"dup{k}",
            "created_at": f"{FLAG_DAY.isoformat()}T15:00:00Z",
            "text": "tesla model 3 orders hit a new record",
        })
    # a couple of decoys the exclude filter must drop
    tweets.append({
        "id": "decoy1",
        "created_at": "2020-03-10T12:00:00Z",
        "text": "reading a nikola tesla biography today",
    })
    tweets.append({
        "id": "decoy2",
        "created_at": "2020-03-20T12:00:00Z",
        "text": "nikola tesla was a great inventor",
    })
    # one duplicate id, collapsed on ingest
    tweets.append(dict(tweets[0], text="duplicate id payload"))

    with open(OUT / "tweets.jsonl", "w") as f:
        for t in tweets:
            f.write(json.dumps(t) + "\n")

    # daily mean polarity over the tweets that survive the nikola filter
    daily_polarity = {}
    per_day = {}
    seen = set()
    for t in tweets:
        if t["id"] in seen or "nikola" in t["text"]:
            continue
        seen.add(t["id"])
        per_day.setdefault(date.fromisoformat(t["created_at"][:10]), []).append(
            score_text(t["text"], lexicon))
    for day, pols in per_day.items():
        daily_polarity[day] = sum(pols) / len(pols)
    return daily_polarity


def weekdays(start, end):
    day = start
    while day <= end:
        if day.weekday() < 5:
            yield day
        day += timedelta(days=1)


def build_prices(daily_polarity):
    trading = list(weekdays(PRICE_START, SENTIMENT_END))
    index_price = 25000.0
    company_price = 100.0
    index_rows = [(trading[0], index_price)]
    company_rows = [(trading[0], company_price)]
    for i, day in enumerate(trading[1:], start=1):
        index_move = 0.4 * ((i * 13) % 7 - 3)  # deterministic wiggle in [-1.2, 1.2]
        corrected = SLOPE * daily_polarity[day - timedelta(days=1)]
        company_move = corrected + index_move
        index_price *= 1.0 + index_move / 100.0
        company_price *= 1.0 + company_move / 100.0
        index_rows.append((day, index_price))
        company_rows.append((day, company_price))

    with open(OUT / "prices_company.csv", "w") as f:
        f.write("date,adj_close\n")
        for day, price in company_rows:
            f.write(f"{day.isoformat()},{price:.10f}\n")
    with open(OUT / "prices_index.csv", "w") as f:
        f.write("date,adj_close\n")
        for day, price in index_rows:
            f.write(f"{day.isoformat()},{price:.10f}\n")


def build_config():
    with open(OUT / "config.ini", "w") as f:
        f.write(
            "# demo pipeline configuration\n"
            "company = tesla\n"
            "tweets = tweets.jsonl\n"
            "lexicon = lexicon.tsv\n"
            "prices = prices_company.csv\n"
            "index_prices = prices_index.csv\n"
            "include = tesla\n"
            "exclude = nikola\n"
            "window = 3\n"
            "lags = 1,2,3\n"
            "recommendation_threshold = 0.5\n"
            "report_threshold = 10.0\n"
            "top_k = 15\n"
            "train_start = 2020-03-03\n"
            "train_end = 2020-04-03\n"
            "test_start = 2020-04-06\n"
            "test_end = 2020-04-15\n"
            "output_dir = out\n"
            "seed = 42\n"
            "null_trials = 1000\n"
        )


def main():
    lexicon = build_lexicon()
    daily_polarity = build_tweets(lexicon)
    build_prices(daily_polarity)
    build_config()
    hot = daily_polarity[HOT_SENTIMENT_DAY]
    print(f"hot-day polarity {hot:.4f} -> prediction {SLOPE * hot:.2f}%")
    for day, pol in sorted(daily_polarity.items()):
        implied = SLOPE * pol
        assert (implied > 10.0) == (day == HOT_SENTIMENT_DAY), (day, implied)
    band = [p for d, p in daily_polarity.items() if d != HOT_SENTIMENT_DAY]
    print(f"normal-day polarity band [{min(band):.3f}, {max(band):.3f}]")


if __name__ == "__main__":
    main()
