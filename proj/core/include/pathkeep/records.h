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

#ifndef PATHKEEP_RECORDS_H_
#define PATHKEEP_RECORDS_H_

#include <string>
#include <string_view>

#include "pathkeep/expansion.h"
#include "pathkeep/graph.h"

namespace pathkeep {

/// Resolved run settings embedded in every answer record.
struct RunSnapshot {
  std::string graph;
  std::string scorer;
  SearchConfig search;
};

/// One-line JSON answer record:
///   {"question", "status": "ok"|"no_answer", "answer_label", "score",
///    "path": [{"head","relation","tail","direction","hop_score"}],
///    "statement_text", "answers": [...ranked...], "config": {...}}
std::string answer_record(const SearchResult& result, const KnowledgeGraph& graph,
                          const RunSnapshot& run);

/// Record for a question that could not be searched, e.g. status
/// "no_linkable_entities". answer_label is null.
std::string failure_record(std::string_view question, std::string_view status,
                           std::string_view message, const RunSnapshot& run);

/// Human-readable answer block with the reasoning chain.
std::string pretty_answer(const SearchResult& result, const KnowledgeGraph& graph);

}  // namespace pathkeep

#endif  // PATHKEEP_RECORDS_H_
