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

#include "pathkeep/verbalizer.h"

#include <cctype>

#include "pathkeep/error.h"

namespace pathkeep {

namespace {

void append_clause(std::string& out, const KnowledgeGraph& graph, const PathStep& step) {
  const auto& relation = graph.relation(step.edge.relation);
  const bool forward = step.direction == StepDirection::kForward;
  out += render_label(graph.label(step.from()));
  out.push_back(' ');
  out += forward ? relation.surface_text : relation.inverse_surface_text;
  out.push_back(' ');
  out += render_label(graph.label(step.to()));
}

void capitalize_first(std::string& text) {
  if (!text.empty()) {
    text.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  }
}

}  // namespace

std::string render_label(std::string_view label) {
  std::string out(label);
  for (auto& c : out) {
    if (c == '_') c = ' ';
  }
  return out;
}

Statement render_triplet(const KnowledgeGraph& graph, const Edge& edge, StepDirection direction) {
  const PathStep step{edge, direction};
  return render_path(graph, std::span<const PathStep>(&step, 1));
}

Statement render_path(const KnowledgeGraph& graph, std::span<const PathStep> steps) {
  if (steps.empty()) throw Error(ErrorKind::kInvalidArgument, "cannot render an empty path");
  Statement statement;
  statement.source_edges.reserve(steps.size());
  statement.directions.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) statement.text += ", ";
    append_clause(statement.text, graph, steps[i]);
    statement.source_edges.push_back(steps[i].edge);
    statement.directions.push_back(steps[i].direction);
  }
  capitalize_first(statement.text);
  return statement;
}

ClozePrompt build_prompt(const KnowledgeGraph& graph, std::string_view question,
                         const ReasoningPath& path) {
  if (path.empty()) throw Error(ErrorKind::kInvalidArgument, "cannot prompt with an empty path");
  ClozePrompt prompt;
  prompt.question = std::string(question);
  prompt.candidate = render_label(graph.label(path.terminal()));
  prompt.statement = render_path(graph, path.steps);
  prompt.text.reserve(question.size() + prompt.candidate.size() + prompt.statement.text.size() + 12);
  prompt.text.append(question);
  prompt.text.push_back(' ');
  prompt.text += prompt.candidate;
  prompt.text += ", because ";
  prompt.text += prompt.statement.text;
  return prompt;
}

}  // namespace pathkeep
