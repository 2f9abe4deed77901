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

#include "pathkeep/corpus.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "pathkeep/error.h"
#include "pathkeep/verbalizer.h"
#include "testing/brute_force.h"
#include "testing/fixtures.h"
#include "testing/random_graph.h"

namespace pathkeep {
namespace {

std::vector<QAPair> cable_pairs() {
  std::ifstream in(testing::data_path("cable_qa.tsv"));
  return read_qa_pairs(in);
}

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

TEST(GenerateCorpus, CableQuestionYieldsBothSentences) {
  auto graph = testing::graph_from_file("cable.tsv");
  CorpusConfig config;
  config.seed = 1;
  auto result = generate_corpus(cable_pairs(), graph, config);
  std::set<std::string> texts;
  for (const auto& s : result.sentences) texts.insert(s.text);
  EXPECT_TRUE(texts.count("Cable is a type of television"));
  EXPECT_TRUE(texts.count("Cable is required for television"));
  EXPECT_EQ(result.report.pairs_processed, 1u);
  EXPECT_EQ(result.report.sentences_emitted, result.sentences.size());
}

TEST(GenerateCorpus, SentencesAreDeduplicatedAndCapped) {
  auto graph = testing::graph_from_file("cable.tsv");
  auto pairs = cable_pairs();
  pairs.push_back(pairs.front());
  CorpusConfig config;
  auto once = generate_corpus(cable_pairs(), graph, config);
  auto twice = generate_corpus(pairs, graph, config);
  EXPECT_EQ(twice.sentences.size(), once.sentences.size());
  EXPECT_EQ(twice.report.duplicate_sentences, once.sentences.size());

  config.max_sentences = 1;
  EXPECT_EQ(generate_corpus(pairs, graph, config).sentences.size(), 1u);
}

TEST(GenerateCorpus, UnlinkablePairsAreSkipped) {
  auto graph = testing::graph_from_file("cable.tsv");
  std::vector<QAPair> pairs = {{"xyzzy?", "television"}, {"Is cable good?", "unicorn"},
                               {"Where is copper?", "living room"}};
  auto result = generate_corpus(pairs, graph, CorpusConfig{});
  EXPECT_EQ(result.report.pairs_skipped, 2u);
  EXPECT_EQ(result.report.pairs_processed, 3u);
  // living_room is four hops from copper.
  EXPECT_EQ(result.report.pairs_without_paths, 1u);
  EXPECT_THROW(generate_corpus({}, graph, CorpusConfig{}), Error);
}

TEST(FindPathsBetween, MatchesBruteForceEnumeration) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = testing::make_random_graph(seed, 50, 120);
    const NodeId source = static_cast<NodeId>(seed % g.graph.node_count());
    const NodeId target = static_cast<NodeId>((seed * 13 + 5) % g.graph.node_count());
    if (source == target) continue;
    std::vector<NodeId> sources = {source};
    auto paths = find_paths_between(g.graph, sources, target, 3);
    std::multiset<std::string> got;
    for (const auto& p : paths) {
      EXPECT_EQ(p.terminal(), target);
      got.insert(render_path(g.graph, p.steps).text);
    }
    std::multiset<std::string> expected;
    for (const auto& p : testing::enumerate_simple_paths(g.graph, sources, 3, true)) {
      if (p.terminal() == target) {
        expected.insert(testing::brute_statement(g.graph, p.steps, p.steps.size()));
      }
    }
    EXPECT_EQ(got, expected) << "seed " << seed;
  }
}

TEST(MaskTokens, DocumentedCounts) {
  MaskRng rng(42);
  std::string twenty;
  for (int i = 0; i < 20; ++i) twenty += "w" + std::to_string(i) + " ";
  for (int trial = 0; trial < 50; ++trial) {
    EXPECT_EQ(mask_tokens(twenty, 0.15, rng).masked_positions.size(), 3u);
    EXPECT_EQ(mask_tokens("a b c", 0.15, rng).masked_positions.size(), 1u);
    EXPECT_EQ(mask_tokens("solo", 0.15, rng).masked_positions.size(), 1u);
  }
}

TEST(MaskTokens, HalfwayCountsSplitEvenly) {
  MaskRng rng(7);
  std::string thirty;
  for (int i = 0; i < 30; ++i) thirty += "t" + std::to_string(i) + " ";
  int fours = 0;
  int fives = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    auto n = mask_tokens(thirty, 0.15, rng).masked_positions.size();
    ASSERT_TRUE(n == 4 || n == 5) << n;
    (n == 4 ? fours : fives)++;
  }
  EXPECT_NEAR(fours / 4000.0, 0.5, 0.05);
  EXPECT_NEAR(fives / 4000.0, 0.5, 0.05);
}

TEST(MaskTokens, MasksDistinctPositionsAndReconstructs) {
  MaskRng rng(3);
  std::mt19937_64 words(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::string sentence;
    const int n = 1 + static_cast<int>(words() % 40);
    for (int i = 0; i < n; ++i) sentence += "tok" + std::to_string(words() % 50) + " ";
    auto masked = mask_tokens(sentence, 0.15, rng);
    auto tokens = split_ws(masked.masked_text);
    ASSERT_EQ(tokens.size(), static_cast<std::size_t>(n));
    std::set<std::size_t> positions(masked.masked_positions.begin(), masked.masked_positions.end());
    EXPECT_EQ(positions.size(), masked.masked_positions.size());
    EXPECT_TRUE(std::is_sorted(masked.masked_positions.begin(), masked.masked_positions.end()));
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      EXPECT_EQ(tokens[i] == kMaskToken, positions.count(i) == 1);
    }
    EXPECT_EQ(unmask(masked.masked_text, masked.masked_positions, masked.text), masked.text);
  }
}

TEST(MaskTokens, SeedDeterminesOutput) {
  MaskRng a(99);
  MaskRng b(99);
  MaskRng c(100);
  const std::string s = "one two three four five six seven eight nine ten eleven twelve";
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    auto x = mask_tokens(s, 0.3, a);
    auto y = mask_tokens(s, 0.3, b);
    auto z = mask_tokens(s, 0.3, c);
    EXPECT_EQ(x.masked_text, y.masked_text);
    differs |= x.masked_text != z.masked_text;
  }
  EXPECT_TRUE(differs);
}

TEST(MaskTokens, RejectsBadInput) {
  MaskRng rng(1);
  EXPECT_THROW(mask_tokens("a b", 0.0, rng), Error);
  EXPECT_THROW(mask_tokens("a b", 1.0, rng), Error);
  EXPECT_THROW(mask_tokens("   ", 0.15, rng), Error);
  EXPECT_THROW(unmask("a b", std::vector<std::size_t>{0}, "a"), Error);
}

TEST(WriteCorpus, TabSeparatedLines) {
  CorpusSentence s;
  s.text = "Cable is a type of television";
  s.masked_text = "Cable [MASK] a type of [MASK]";
  s.masked_positions = {1, 5};
  std::ostringstream out;
  write_corpus(std::vector<CorpusSentence>{s}, out);
  EXPECT_EQ(out.str(), "Cable is a type of television\tCable [MASK] a type of [MASK]\t1,5\n");
}

TEST(ReadQaPairs, ParsesAndValidates) {
  std::istringstream ok("What?\tyes\n\nWhy?\tno\r\n");
  auto pairs = read_qa_pairs(ok);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[1].gold_answer, "no");
  std::istringstream bad("What?\n");
  EXPECT_THROW(read_qa_pairs(bad), Error);
}

TEST(GenerateCorpus, ByteIdenticalUnderFixedSeed) {
  auto graph = testing::graph_from_file("cable.tsv");
  CorpusConfig config;
  config.seed = 2024;
  config.mask_rate = 0.3;
  auto render = [&] {
    std::ostringstream out;
    write_corpus(generate_corpus(cable_pairs(), graph, config).sentences, out);
    return out.str();
  };
  EXPECT_EQ(render(), render());
}

}  // namespace
}  // namespace pathkeep
