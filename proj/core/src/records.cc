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

#include "pathkeep/records.h"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace pathkeep {

namespace {

using ojson = nlohmann::ordered_json;

ojson config_json(const RunSnapshot& run) {
  return {{"graph", run.graph},
          {"scorer", run.scorer},
          {"hops", run.search.max_hops},
          {"beam", run.search.beam_width},
          {"top", run.search.answers_returned},
          {"direction", to_string(run.search.direction)},
          {"max_ngram", run.search.link.max_ngram}};
}

ojson path_json(const ReasoningPath& path, const KnowledgeGraph& graph) {
  ojson steps = ojson::array();
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& step = path.steps[i];
    steps.push_back({{"head", graph.label(step.edge.head)},
                     {"relation", graph.relation(step.edge.relation).canonical_name},
                     {"tail", graph.label(step.edge.tail)},
                     {"direction", step.direction == StepDirection::kForward ? "forward" : "reverse"},
                     {"hop_score", i < path.hop_scores.size() ? path.hop_scores[i] : 0.0}});
  }
  return steps;
}

ojson answer_json(const Answer& answer, const KnowledgeGraph& graph) {
  return {{"answer_label", graph.label(answer.entity)},
          {"score", answer.score},
          {"path", path_json(answer.path, graph)},
          {"statement_text", answer.statement.text}};
}

}  // namespace

std::string answer_record(const SearchResult& result, const KnowledgeGraph& graph,
                          const RunSnapshot& run) {
  ojson record;
  record["question"] = result.link.question;
  ojson entities = ojson::array();
  for (const auto& m : result.link.mentions) entities.push_back(graph.label(m.node));
  if (result.found()) {
    const auto& best = result.answers.front();
    record["status"] = "ok";
    record["answer_label"] = graph.label(best.entity);
    record["score"] = best.score;
    record["path"] = path_json(best.path, graph);
    record["statement_text"] = best.statement.text;
  } else {
    record["status"] = "no_answer";
    record["answer_label"] = nullptr;
    record["score"] = nullptr;
    record["path"] = ojson::array();
    record["statement_text"] = nullptr;
  }
  record["entities"] = entities;
  ojson ranked = ojson::array();
  for (const auto& a : result.answers) ranked.push_back(answer_json(a, graph));
  record["answers"] = ranked;
  record["config"] = config_json(run);
  return record.dump();
}

std::string failure_record(std::string_view question, std::string_view status,
                           std::string_view message, const RunSnapshot& run) {
  ojson record;
  record["question"] = question;
  record["status"] = status;
  record["answer_label"] = nullptr;
  record["error"] = message;
  record["config"] = config_json(run);
  return record.dump();
}

std::string pretty_answer(const SearchResult& result, const KnowledgeGraph& graph) {
  std::ostringstream out;
  out << "Question: " << result.link.question << '\n';
  out << "Entities:";
  for (const auto& m : result.link.mentions) out << ' ' << graph.label(m.node);
  out << '\n';
  if (!result.found()) {
    out << "Answer: (no answer found)\n";
    return out.str();
  }
  for (std::size_t rank = 0; rank < result.answers.size(); ++rank) {
    const auto& a = result.answers[rank];
    out << (rank == 0 ? "Answer: " : "  #" + std::to_string(rank + 1) + ": ")
        << render_label(graph.label(a.entity)) << "  (score " << std::fixed
        << std::setprecision(6) << a.score << ")\n";
    out << (rank == 0 ? "Reasoning chain: " : "      chain: ");
    const auto nodes = a.path.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i > 0) out << " -> ";
      out << graph.label(nodes[i]);
    }
    out << '\n' << (rank == 0 ? "Statement: " : "      statement: ") << a.statement.text
        << ".\n";
  }
  return out.str();
}

}  // namespace pathkeep
