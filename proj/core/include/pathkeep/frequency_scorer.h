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

#ifndef PATHKEEP_FREQUENCY_SCORER_H_
#define PATHKEEP_FREQUENCY_SCORER_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pathkeep/scorer.h"

namespace pathkeep {

/// Whitespace split, then every punctuation character becomes its own token.
/// Tokens are lowercased. "The sky is blue." -> {the, sky, is, blue, .}
std::vector<std::string> oracle_tokenize(std::string_view text);

/// Unigram probabilities with a fallback for unknown tokens.
/// All probabilities lie in (0, 1]; default_prob > 0.
class FrequencyTable {
 public:
  explicit FrequencyTable(double default_prob = 1e-6);

  /// Throws kInvalidArgument when p is outside (0, 1].
  void set(std::string token, double probability);
  double probability(std::string_view token) const;
  double default_prob() const { return default_prob_; }
  std::size_t size() const { return probs_.size(); }
  const std::map<std::string, double, std::less<>>& entries() const { return probs_; }

  /// "token<TAB>probability" lines. A "<default>" row sets default_prob.
  static FrequencyTable load(std::istream& in);
  static FrequencyTable load(const std::filesystem::path& path);
  void save(std::ostream& out) const;

  /// Add-one smoothed unigram estimate:
  ///   p(t) = (count(t) + 1) / (total_tokens + vocab)
  ///   default_prob = 1 / (total_tokens + vocab + 1)
  /// Throws kInvalidArgument for a stream with no tokens.
  static FrequencyTable from_corpus(std::istream& in);

 private:
  std::map<std::string, double, std::less<>> probs_;
  double default_prob_;
};

/// Deterministic stand-in for a masked LM: p(w_n | context) = p(w_n), so a
/// sentence scores the mean floored log unigram probability of its tokens.
class FrequencyScorer final : public Scorer {
 public:
  explicit FrequencyScorer(FrequencyTable table) : table_(std::move(table)) {}

  using Scorer::score;
  std::vector<Score> score(const ScoreRequest& request) const override;

  Score score_sentence(std::string_view sentence) const;
  const FrequencyTable& table() const { return table_; }

 private:
  FrequencyTable table_;
};

}  // namespace pathkeep

#endif  // PATHKEEP_FREQUENCY_SCORER_H_
