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

#ifndef PATHKEEP_SCORER_H_
#define PATHKEEP_SCORER_H_

#include <string>
#include <string_view>
#include <vector>

namespace pathkeep {

/// Per-token log-probabilities are floored here so scores stay finite.
inline constexpr double kLogProbFloor = -30.0;

struct ScoreRequest {
  std::string id;
  std::vector<std::string> sentences;
};

/// Average per-token log-probability of one sentence:
///   value = (sum over n of log p(w_n | sentence without w_n)) / N
/// where N = tokens_scored is the scorer's own token count.
struct Score {
  double value = 0.0;
  int tokens_scored = 0;
};

/// Commonsense scorer contract. Implementations are shareable across
/// threads, order-preserving, and pure: the same request always yields the
/// same scores.
class Scorer {
 public:
  virtual ~Scorer() = default;

  /// One Score per sentence, in request order. Throws kInvalidArgument for
  /// an empty batch or an empty sentence.
  virtual std::vector<Score> score(const ScoreRequest& request) const = 0;

  /// Convenience wrapper that assigns a batch id.
  std::vector<Score> score(const std::vector<std::string>& sentences) const;
};

/// Throws kInvalidArgument unless the request has at least one sentence and
/// no sentence is empty.
void validate_request(const ScoreRequest& request);

/// Scores "question + ' ' + answer". Both must be non-empty.
Score score_answer_sentence(const Scorer& scorer, std::string_view question,
                            std::string_view answer);

}  // namespace pathkeep

#endif  // PATHKEEP_SCORER_H_
