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

#ifndef PATHKEEP_CORPUS_H_
#define PATHKEEP_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathkeep/entity_link.h"
#include "pathkeep/graph.h"
#include "pathkeep/path.h"

namespace pathkeep {

inline constexpr std::string_view kMaskToken = "[MASK]";

/// Seeded generator for masking. mt19937_64 has a fixed output sequence
/// across standard libraries, and the bounded draw below is our own, so
/// masked output is reproducible everywhere.
using MaskRng = std::mt19937_64;

struct QAPair {
  std::string question;
  std::string gold_answer;
};

struct CorpusSentence {
  std::string text;
  std::string masked_text;
  std::vector<std::size_t> masked_positions;  // ascending whitespace-token indices
  std::size_t question_index = 0;
  ReasoningPath path;
};

struct CorpusConfig {
  std::size_t max_hops = 3;
  std::size_t max_sentences = 20000;
  std::uint64_t seed = 0;
  double mask_rate = 0.15;
  LinkConfig link;
};

struct CorpusReport {
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;  // question or gold answer not linkable
  std::size_t pairs_without_paths = 0;
  std::size_t duplicate_sentences = 0;
  std::size_t sentences_emitted = 0;

  std::string to_text() const;
};

struct CorpusResult {
  std::vector<CorpusSentence> sentences;
  CorpusReport report;
};

/// All simple paths of 1..max_hops edges from any source to `target`,
/// traversing edges in both directions. Sources are walked in the given
/// order, neighbors in adjacency order. Paths end at the first arrival at
/// `target`. Throws kNotFound when target is not a node.
std::vector<ReasoningPath> find_paths_between(const KnowledgeGraph& graph,
                                              std::span<const NodeId> sources, NodeId target,
                                              std::size_t max_hops);

/// Masks max(1, round(rate * N)) distinct whitespace tokens with "[MASK]".
/// A rate * N that lands exactly on .5 rounds up or down on a coin flip drawn
/// from `rng`. Positions are sampled without replacement from `rng`.
/// Throws kInvalidArgument unless 0 < rate < 1 and the sentence has a token.
CorpusSentence mask_tokens(std::string_view sentence, double rate, MaskRng& rng);

/// Restores original tokens at masked positions.
std::string unmask(std::string_view masked_text, std::span<const std::size_t> positions,
                   std::string_view original_text);

/// Links each question, verbalizes every path to its gold answer, drops
/// exact duplicate sentences, truncates to max_sentences in pair order, then
/// masks with a generator seeded from config.seed.
CorpusResult generate_corpus(std::span<const QAPair> pairs, const KnowledgeGraph& graph,
                             const CorpusConfig& config);

/// "question<TAB>answer" lines.
std::vector<QAPair> read_qa_pairs(std::istream& in);

/// "text<TAB>masked_text<TAB>p1,p2,..." lines.
void write_corpus(std::span<const CorpusSentence> sentences, std::ostream& out);

}  // namespace pathkeep

#endif  // PATHKEEP_CORPUS_H_
