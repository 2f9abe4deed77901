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

#include <sstream>
#include <string>

#include "pathkeep/ingest.h"
#include "testing/conceptnet_slice.h"

namespace pathkeep {
namespace {

void BM_IngestSlice(benchmark::State& state) {
  const auto text = testing::make_conceptnet_slice(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    std::istringstream in(text);
    auto result = ingest_conceptnet(in);
    benchmark::DoNotOptimize(result.graph.edge_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_IngestSlice)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pathkeep
