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

#ifndef PATHKEEP_EXPANSION_H_
#define PATHKEEP_EXPANSION_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathkeep/entity_link.h"
#include "pathkeep/graph.h"
#include "pathkeep/path.h"
#include "pathkeep/scorer.h"
#include "pathkeep/verbalizer.h"

namespace pathkeep {

enum class DirectionPolicy { kOut, kBoth };

const char* to_string(DirectionPolicy policy);
/// "out" or "both"; throws kInvalidArgument otherwise.
DirectionPolicy parse_direction_policy(std::string_view text);

struct SearchConfig {
  std::size_t max_hops = 3;
  std::size_t beam_width = 100;
  DirectionPolicy direction = DirectionPolicy::kBoth;
  std::size_t answers_returned = 5;
  LinkConfig link;

  /// Throws kInvalidArgument when max_hops or beam_width is zero.
  void validate() const;
};

/// Paths alive after pruning at hop `hop`, best first.
struct Frontier {
  std::size_t hop = 0;
  std::vector<ReasoningPath> paths;
  /// statements[i] verbalizes paths[i]; empty for seed paths.
  std::vector<std::string> statements;
};

struct Answer {
  NodeId entity = 0;
  ReasoningPath path;
  Statement statement;
  double score = 0.0;
};

struct SearchResult {
  LinkResult link;
  /// Ranked best first. Empty means "no answer found".
  std::vector<Answer> answers;

  bool found() const { return !answers.empty(); }
};

/// Total ranking order on scored paths: cumulative descending, then terminal
/// label ascending, then statement text ascending, then the step sequence.
bool ranks_before(const KnowledgeGraph& graph, const ReasoningPath& a, std::string_view a_text,
                  const ReasoningPath& b, std::string_view b_text);

/// Seeds one zero-length path per node at hop 0.
Frontier seed_frontier(std::span<const NodeId> seeds);

/// Extends every alive path by one admissible edge, scores each candidate's
/// cloze prompt in one batch, and keeps the beam_width best candidates.
/// A candidate may not revisit a node already on its path. Throws
/// kInvalidArgument when the frontier is already at max_hops; scorer errors
/// propagate unchanged.
Frontier expand_hop(const Frontier& frontier, const KnowledgeGraph& graph, const Scorer& scorer,
                    std::string_view question, const SearchConfig& config);

/// Links the question, runs expand_hop for hops 1..max_hops, and ranks every
/// surviving path of length >= 1 as an answer candidate. Keeps the best
/// path per terminal entity and drops question entities. Throws
/// kNoLinkableEntities when linking finds nothing.
SearchResult search(std::string_view question, const KnowledgeGraph& graph,
                    const Scorer& scorer, const SearchConfig& config);

/// Same as `search` but with an explicit seed set instead of linking.
std::vector<Answer> search_from(std::string_view question, std::span<const NodeId> seeds,
                                const KnowledgeGraph& graph, const Scorer& scorer,
                                const SearchConfig& config);

/// Best answer under the ranking order. Throws kInvalidArgument when empty.
const Answer& predict_answer(std::span<const Answer> answers, const KnowledgeGraph& graph);

}  // namespace pathkeep

#endif  // PATHKEEP_EXPANSION_H_
