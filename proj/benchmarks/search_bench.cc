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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "pathkeep/entity_link.h"
#include "pathkeep/expansion.h"
#include "pathkeep/frequency_scorer.h"
#include "testing/random_graph.h"

namespace pathkeep {
namespace {

constexpr const char* kQuestion = "Which concept is reachable from here?";

void BM_ExpandHop(benchmark::State& state) {
  auto g = testing::make_random_graph(7, 2000, static_cast<std::size_t>(state.range(0)));
  FrequencyScorer scorer(testing::make_random_table(7, g));
  SearchConfig config;
  std::vector<NodeId> seeds = {0, 1, 2};
  auto start = seed_frontier(seeds);
  for (auto _ : state) {
    auto next = expand_hop(start, g.graph, scorer, kQuestion, config);
    benchmark::DoNotOptimize(next.paths.data());
  }
}
BENCHMARK(BM_ExpandHop)->Arg(2000)->Arg(8000);

// Full three-hop search with the default beam.
void BM_Search(benchmark::State& state) {
  auto g = testing::make_random_graph(11, 2000, 8000);
  FrequencyScorer scorer(testing::make_random_table(11, g));
  SearchConfig config;
  config.beam_width = static_cast<std::size_t>(state.range(0));
  std::vector<NodeId> seeds = {0, 5};
  for (auto _ : state) {
    auto answers = search_from(kQuestion, seeds, g.graph, scorer, config);
    benchmark::DoNotOptimize(answers.data());
  }
}
BENCHMARK(BM_Search)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_LinkEntities(benchmark::State& state) {
  auto g = testing::make_random_graph(13, 5000, 10000);
  std::string question = "Where would a " + g.labels[3] + " keep the " + g.labels[40] +
                         " when the " + g.labels[99] + " is gone?";
  for (char& c : question) {
    if (c == '_') c = ' ';
  }
  LinkConfig config;
  for (auto _ : state) {
    auto link = extract_entities(question, g.graph, config);
    benchmark::DoNotOptimize(link.mentions.data());
  }
}
BENCHMARK(BM_LinkEntities);

}  // namespace
}  // namespace pathkeep
