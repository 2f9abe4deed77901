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

#include "pathkeep/scorer.h"

#include <atomic>

#include "pathkeep/error.h"
#include "support.h"

namespace pathkeep {

std::vector<Score> Scorer::score(const std::vector<std::string>& sentences) const {
  static std::atomic<unsigned long long> next_id{0};
  ScoreRequest request{"batch-" + std::to_string(next_id.fetch_add(1)), sentences};
  return score(request);
}

void validate_request(const ScoreRequest& request) {
  if (request.sentences.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "score request has no sentences");
  }
  for (std::size_t i = 0; i < request.sentences.size(); ++i) {
    if (request.sentences[i].empty()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "score request sentence " + std::to_string(i) + " is empty");
    }
  }
}

Score score_answer_sentence(const Scorer& scorer, std::string_view question,
                            std::string_view answer) {
  if (detail::trim(question).empty()) throw Error(ErrorKind::kInvalidArgument, "question is empty");
  if (detail::trim(answer).empty()) throw Error(ErrorKind::kInvalidArgument, "answer is empty");
  std::string sentence(question);
  sentence.push_back(' ');
  sentence.append(answer);
  auto scores = scorer.score(std::vector<std::string>{std::move(sentence)});
  if (scores.size() != 1) {
    throw Error(ErrorKind::kLengthMismatch, "scorer returned " + std::to_string(scores.size()) +
                                                " scores for one sentence");
  }
  return scores.front();
}

}  // namespace pathkeep
