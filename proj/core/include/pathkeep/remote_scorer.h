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

#ifndef PATHKEEP_REMOTE_SCORER_H_
#define PATHKEEP_REMOTE_SCORER_H_

#include <chrono>
#include <cstddef>
#include <string>

#include "pathkeep/scorer.h"

namespace pathkeep {

struct RemoteScorerConfig {
  /// "http://host:port", optionally followed by a path prefix.
  std::string base_url;
  std::size_t max_batch = 64;
  std::size_t max_in_flight = 4;
  int retries = 1;
  std::chrono::milliseconds connect_timeout{5000};
  std::chrono::milliseconds read_timeout{120000};
};

/// Client for the /v1/score protocol.
///
///   POST /v1/score  {"id": str, "sentences": [str, ...]}
///   200 {"id": str, "scores": [num, ...], "tokens": [int, ...]}
///   400 / 503 {"error": str}
///
/// Requests larger than max_batch are split into sub-batches with derived
/// ids and sent concurrently; replies are matched by id and reassembled in
/// request order. Transport failures are retried `retries` times.
/// Failures surface as Error with kind kTransport, kMalformedReply,
/// kLengthMismatch, kServiceRejected (400) or kServiceUnavailable (503).
class RemoteScorer final : public Scorer {
 public:
  explicit RemoteScorer(RemoteScorerConfig config);

  using Scorer::score;
  std::vector<Score> score(const ScoreRequest& request) const override;

  const RemoteScorerConfig& config() const { return config_; }

 private:
  std::vector<Score> post_batch(const std::string& id,
                                const std::vector<std::string>& sentences) const;

  RemoteScorerConfig config_;
  std::string host_;
  std::string path_;
};

/// Parses a /v1/score success body. Exposed for protocol tests.
std::vector<Score> parse_score_reply(const std::string& body, const std::string& expected_id,
                                     std::size_t expected_count);

/// Serializes a /v1/score request body.
std::string encode_score_request(const std::string& id, const std::vector<std::string>& sentences);

}  // namespace pathkeep

#endif  // PATHKEEP_REMOTE_SCORER_H_
