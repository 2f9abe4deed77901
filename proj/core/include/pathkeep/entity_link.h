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

#ifndef PATHKEEP_ENTITY_LINK_H_
#define PATHKEEP_ENTITY_LINK_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pathkeep/graph.h"

namespace pathkeep {

/// Alternative base forms of a token, most likely first. Empty when no
/// suffix rule or exception applies.
std::vector<std::string> lemma_candidates(std::string_view token);

/// First lemma candidate, or the lowercased token itself.
std::string lemmatize(std::string_view token);

/// Stopwords and interrogatives shipped with the linker.
const std::set<std::string, std::less<>>& default_stopwords();

/// One token per line; blank lines and '#' comments ignored.
std::set<std::string, std::less<>> load_stopwords(std::istream& in);

struct LinkConfig {
  std::size_t max_ngram = 4;
  /// Unset means no cap on the number of linked entities.
  std::optional<std::size_t> max_mentions;
  std::set<std::string, std::less<>> stopwords = default_stopwords();
};

struct EntityMention {
  std::string surface;
  std::size_t begin = 0;  // byte offsets into LinkResult::question
  std::size_t end = 0;
  NodeId node = 0;
};

struct LinkResult {
  std::string question;
  /// Non-overlapping, sorted by begin, one mention per node.
  std::vector<EntityMention> mentions;

  std::vector<NodeId> nodes() const;
};

/// Longest-n-gram lexical linker.
///
/// Tokens are maximal runs of letters, digits and apostrophes. An n-gram may
/// only span tokens separated by exactly one space. Each n-gram is tried
/// verbatim, then with its last token lemmatized, then with every token
/// lemmatized; the first form that is a graph label wins. Unigram stopwords
/// never link. Longer matches shadow the shorter matches they overlap; equal
/// lengths resolve leftmost-first.
///
/// Throws kInvalidArgument for an empty question and kNoLinkableEntities when
/// nothing matches.
LinkResult extract_entities(std::string_view question, const KnowledgeGraph& graph,
                            const LinkConfig& config = {});

/// {"question": ..., "mentions": [{"surface","start","end","node_label"}]}
std::string link_result_json(const LinkResult& result, const KnowledgeGraph& graph);

}  // namespace pathkeep

#endif  // PATHKEEP_ENTITY_LINK_H_
