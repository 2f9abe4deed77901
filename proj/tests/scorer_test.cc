/** Copyright 2026 The pathkeep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pathkeep/frequency_scorer.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "pathkeep/error.h"
#include "pathkeep/scorer.h"
#include "testing/fixtures.h"

namespace pathkeep {
namespace {

FrequencyScorer scorer_with(std::initializer_list<std::pair<const char*, double>> rows,
                            double default_prob = 1e-6) {
  FrequencyTable table(default_prob);
  for (const auto& [token, p] : rows) table.set(token, p);
  return FrequencyScorer(std::move(table));
}

TEST(OracleTokenize, SplitsPunctuationAndLowercases) {
  EXPECT_EQ(oracle_tokenize("The sky is blue."),
            (std::vector<std::string>{"the", "sky", "is", "blue", "."}));
  EXPECT_EQ(oracle_tokenize("work? finish jobs, because"),
            (std::vector<std::string>{"work", "?", "finish", "jobs", ",", "because"}));
  EXPECT_EQ(oracle_tokenize("don't"), (std::vector<std::string>{"don't"}));
  EXPECT_TRUE(oracle_tokenize("   ").empty());
}

TEST(FrequencyScorer, ReferenceExamples) {
  auto sky = scorer_with({{"sky", 1.0}});
  auto s = sky.score_sentence("sky");
  EXPECT_EQ(s.value, 0.0);
  EXPECT_EQ(s.tokens_scored, 1);

  auto ab = scorer_with({{"a", 0.5}, {"b", 0.5}});
  EXPECT_NEAR(ab.score_sentence("a b").value, std::log(0.5), 1e-12);
  EXPECT_NEAR(ab.score_sentence("a b").value, -0.6931, 1e-4);

  auto oov = scorer_with({{"a", 0.5}});
  EXPECT_NEAR(oov.score_sentence("a zzz").value, (std::log(0.5) + std::log(1e-6)) / 2, 1e-12);
}

TEST(FrequencyScorer, FloorKeepsScoresFinite) {
  auto scorer = scorer_with({}, 1e-300);
  auto s = scorer.score_sentence("nothing known here");
  EXPECT_EQ(s.value, kLogProbFloor);
  EXPECT_TRUE(std::isfinite(s.value));
}

TEST(FrequencyScorer, BatchEqualsOneByOne) {
  auto scorer = testing::oracle_from_file("people_work_oracle.tsv");
  std::vector<std::string> sentences = {"what do people aim", "Office is used for finish jobs",
                                        "xyz , abc ?", "people people people"};
  auto batch = scorer.score(sentences);
  ASSERT_EQ(batch.size(), sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    auto single = scorer.score(std::vector<std::string>{sentences[i]});
    EXPECT_NEAR(batch[i].value, single[0].value, 1e-12);
    EXPECT_EQ(batch[i].tokens_scored, single[0].tokens_scored);
  }
  std::vector<std::string> reversed(sentences.rbegin(), sentences.rend());
  auto rev = scorer.score(reversed);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    EXPECT_EQ(rev[sentences.size() - 1 - i].value, batch[i].value);
  }
}

TEST(FrequencyScorer, LengthInvarianceUnderRepetition) {
  auto scorer = scorer_with({{"cable", 0.3}, {"is", 0.9}, {"television", 0.05}}, 1e-4);
  const std::string base = "cable is a television";
  const double expected = scorer.score_sentence(base).value;
  std::string repeated = base;
  for (int k = 2; k <= 6; ++k) {
    repeated += " " + base;
    auto s = scorer.score_sentence(repeated);
    EXPECT_NEAR(s.value, expected, 1e-12) << k;
    EXPECT_EQ(s.tokens_scored, 4 * k);
  }
}

TEST(FrequencyScorer, RaisingAProbabilityRaisesTheScore) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> prob(0.01, 0.9);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e"};
  for (int trial = 0; trial < 200; ++trial) {
    FrequencyTable table(1e-3);
    for (const auto& w : vocab) table.set(w, prob(rng));
    std::string sentence;
    for (int k = 0; k < 6; ++k) sentence += vocab[rng() % vocab.size()] + " ";
    const std::string target = oracle_tokenize(sentence)[0];
    const double before = FrequencyScorer(table).score_sentence(sentence).value;
    table.set(target, std::min(1.0, table.probability(target) * 1.05));
    const double after = FrequencyScorer(table).score_sentence(sentence).value;
    EXPECT_GT(after, before);
  }
}

TEST(FrequencyScorer, RejectsEmptyInput) {
  auto scorer = scorer_with({});
  EXPECT_THROW(scorer.score(std::vector<std::string>{}), Error);
  EXPECT_THROW(scorer.score(std::vector<std::string>{"ok", ""}), Error);
  EXPECT_THROW(scorer.score_sentence("  "), Error);
}

TEST(FrequencyTable, RejectsOutOfRangeProbabilities) {
  FrequencyTable table;
  EXPECT_THROW(table.set("x", 0.0), Error);
  EXPECT_THROW(table.set("x", 1.5), Error);
  EXPECT_THROW(FrequencyTable(0.0), Error);
}

TEST(FrequencyTable, LoadSaveRoundTrip) {
  std::istringstream in("# comment\n<default>\t0.001\nSky\t0.25\nblue\t1\n");
  auto table = FrequencyTable::load(in);
  EXPECT_EQ(table.default_prob(), 0.001);
  EXPECT_EQ(table.probability("sky"), 0.25);
  EXPECT_EQ(table.probability("unknown"), 0.001);
  std::ostringstream out;
  table.save(out);
  std::istringstream again(out.str());
  auto copy = FrequencyTable::load(again);
  EXPECT_EQ(copy.entries(), table.entries());
  EXPECT_EQ(copy.default_prob(), table.default_prob());
}

TEST(FrequencyTable, LoadRejectsBadRows) {
  std::istringstream bad_prob("a\t2.0\n");
  EXPECT_THROW(FrequencyTable::load(bad_prob), Error);
  std::istringstream bad_shape("a 0.5\n");
  EXPECT_THROW(FrequencyTable::load(bad_shape), Error);
  EXPECT_THROW(FrequencyTable::load(std::filesystem::path("/nonexistent.tsv")), Error);
}

TEST(FrequencyTable, FromCorpusAddOne) {
  std::istringstream corpus("a a b");
  auto table = FrequencyTable::from_corpus(corpus);
  EXPECT_DOUBLE_EQ(table.probability("a"), 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(table.probability("b"), 2.0 / 5.0);
  EXPECT_DOUBLE_EQ(table.default_prob(), 1.0 / 6.0);

  std::istringstream again("a a b");
  EXPECT_EQ(FrequencyTable::from_corpus(again).entries(), table.entries());

  std::istringstream empty("\n  \n");
  EXPECT_THROW(FrequencyTable::from_corpus(empty), Error);
}

TEST(ScoreAnswerSentence, ConcatenatesWithSpace) {
  auto uniform = scorer_with({{"the", 0.2}, {"sky", 0.2}, {"is", 0.2}, {"blue", 0.2}, {".", 0.2}});
  auto s = score_answer_sentence(uniform, "the sky is", "blue .");
  EXPECT_NEAR(s.value, std::log(0.2), 1e-12);
  EXPECT_EQ(s.tokens_scored, 5);
  EXPECT_THROW(score_answer_sentence(uniform, "the sky is", ""), Error);
  EXPECT_THROW(score_answer_sentence(uniform, "", "blue"), Error);
}

}  // namespace
}  // namespace pathkeep
