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

#ifndef PATHKEEP_TESTING_RANDOM_GRAPH_H_
#define PATHKEEP_TESTING_RANDOM_GRAPH_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathkeep/frequency_scorer.h"
#include "pathkeep/graph.h"

namespace pathkeep::testing {

struct RandomGraph {
  KnowledgeGraph graph;
  std::vector<std::string> labels;  // in generation order
  std::vector<std::string> words;   // every word used by labels
};

inline std::string random_word(std::mt19937_64& rng) {
  static constexpr std::array<const char*, 16> kSyllables = {
      "ka", "lo", "mi", "ne", "ru", "sa", "ti", "vo", "ba", "de", "fu", "go", "hi", "ja", "po", "ze"};
  std::uniform_int_distribution<int> count(2, 3);
  std::uniform_int_distribution<std::size_t> pick(0, kSyllables.size() - 1);
  std::string word;
  for (int i = count(rng); i > 0; --i) word += kSyllables[pick(rng)];
  return word;
}

inline const std::vector<std::string>& random_relation_pool() {
  static const std::vector<std::string> kPool = {
      "UsedFor", "AtLocation", "RelatedTo", "Antonym", "IsA",   "CapableOf",
      "Desires", "PartOf",     "HasA",      "MadeOf",  "Causes", "HasProperty"};
  return kPool;
}

/// Random graph with unique one- or two-word labels and up to `max_edges`
/// distinct loop-free triples.
inline RandomGraph make_random_graph(std::uint64_t seed, std::size_t max_nodes,
                                     std::size_t max_edges) {
  std::mt19937_64 rng(seed);
  RandomGraph out;
  std::uniform_int_distribution<std::size_t> node_count(4, max_nodes);
  const std::size_t n = node_count(rng);
  std::set<std::string> seen;
  std::set<std::string> words;
  std::bernoulli_distribution two_words(0.3);
  while (out.labels.size() < n) {
    std::string w1 = random_word(rng);
    std::string label = w1;
    words.insert(w1);
    if (two_words(rng)) {
      std::string w2 = random_word(rng);
      words.insert(w2);
      label += "_" + w2;
    }
    if (seen.insert(label).second) out.labels.push_back(label);
  }
  out.words.assign(words.begin(), words.end());

  std::uniform_int_distribution<std::size_t> edge_count(n / 2, max_edges);
  std::uniform_int_distribution<std::size_t> node(0, n - 1);
  std::uniform_int_distribution<std::size_t> rel(0, random_relation_pool().size() - 1);
  GraphBuilder builder;
  const std::size_t m = edge_count(rng);
  // Bounded attempts: duplicates and loops are simply skipped by the builder.
  for (std::size_t attempt = 0; attempt < 4 * m && builder.edge_count() < m; ++attempt) {
    builder.add(out.labels[node(rng)], random_relation_pool()[rel(rng)], out.labels[node(rng)]);
  }
  if (builder.edge_count() == 0) builder.add(out.labels[0], "RelatedTo", out.labels[1]);
  out.graph = std::move(builder).build();
  return out;
}

/// Oracle table giving every label word and template word its own random
/// probability, so distinct prompts rarely tie.
inline FrequencyTable make_random_table(std::uint64_t seed, const RandomGraph& g) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> prob(0.001, 1.0);
  FrequencyTable table(1e-4);
  std::set<std::string> tokens(g.words.begin(), g.words.end());
  for (const auto& relation : g.graph.relations()) {
    for (const auto* text : {&relation.surface_text, &relation.inverse_surface_text}) {
      for (auto& token : oracle_tokenize(*text)) tokens.insert(token);
    }
  }
  for (const auto& token : tokens) table.set(token, prob(rng));
  return table;
}

}  // namespace pathkeep::testing

#endif  // PATHKEEP_TESTING_RANDOM_GRAPH_H_
