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

#ifndef PATHKEEP_VERBALIZER_H_
#define PATHKEEP_VERBALIZER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathkeep/graph.h"
#include "pathkeep/path.h"

namespace pathkeep {

/// A verbalized edge sequence: one clause per edge, joined by ", ".
struct Statement {
  std::string text;
  std::vector<Edge> source_edges;
  std::vector<StepDirection> directions;

  std::size_t clause_count() const { return source_edges.size(); }
};

/// "<question> <candidate>, because <statement>"
struct ClozePrompt {
  std::string question;
  std::string candidate;
  Statement statement;
  std::string text;
};

/// "ice_cream" -> "ice cream".
std::string render_label(std::string_view label);

/// Forward: "<Head> <surface_text> <tail>". Reverse: "<Tail> <inverse> <head>".
Statement render_triplet(const KnowledgeGraph& graph, const Edge& edge,
                         StepDirection direction = StepDirection::kForward);

/// Clauses joined by ", " with only the first character capitalized.
/// Throws kInvalidArgument for an empty path.
Statement render_path(const KnowledgeGraph& graph, std::span<const PathStep> steps);

/// Throws kInvalidArgument for an empty path.
ClozePrompt build_prompt(const KnowledgeGraph& graph, std::string_view question,
                         const ReasoningPath& path);

}  // namespace pathkeep

#endif  // PATHKEEP_VERBALIZER_H_
