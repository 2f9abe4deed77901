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

#include "pathkeep/remote_scorer.h"

#include <algorithm>
#include <cmath>
#include <future>

#include "httplib.h"
#include "json.hpp"
#include "pathkeep/error.h"

namespace pathkeep {

namespace {

using json = nlohmann::json;

constexpr const char* kScorePath = "/v1/score";

std::string service_message(const std::string& body) {
  auto reply = json::parse(body, nullptr, false);
  if (reply.is_object() && reply.contains("error") && reply["error"].is_string()) {
    return reply["error"].get<std::string>();
  }
  return body;
}

}  // namespace

std::string encode_score_request(const std::string& id, const std::vector<std::string>& sentences) {
  json body = {{"id", id}, {"sentences", sentences}};
  return body.dump();
}

std::vector<Score> parse_score_reply(const std::string& body, const std::string& expected_id,
                                     std::size_t expected_count) {
  auto reply = json::parse(body, nullptr, false);
  if (reply.is_discarded() || !reply.is_object()) {
    throw Error(ErrorKind::kMalformedReply, "score reply is not a JSON object");
  }
  if (!reply.contains("id") || !reply["id"].is_string()) {
    throw Error(ErrorKind::kMalformedReply, "score reply has no string 'id'");
  }
  if (reply["id"].get<std::string>() != expected_id) {
    throw Error(ErrorKind::kMalformedReply, "score reply id '" + reply["id"].get<std::string>() +
                                                "' does not match request id '" + expected_id +
                                                "'");
  }
  if (!reply.contains("scores") || !reply["scores"].is_array() || !reply.contains("tokens") ||
      !reply["tokens"].is_array()) {
    throw Error(ErrorKind::kMalformedReply, "score reply needs 'scores' and 'tokens' arrays");
  }
  const auto& scores = reply["scores"];
  const auto& tokens = reply["tokens"];
  if (scores.size() != expected_count || tokens.size() != expected_count) {
    throw Error(ErrorKind::kLengthMismatch,
                "score reply has " + std::to_string(scores.size()) + " scores and " +
                    std::to_string(tokens.size()) + " token counts for " +
                    std::to_string(expected_count) + " sentences");
  }
  std::vector<Score> out;
  out.reserve(expected_count);
  for (std::size_t i = 0; i < expected_count; ++i) {
    if (!scores[i].is_number() || !tokens[i].is_number_integer()) {
      throw Error(ErrorKind::kMalformedReply,
                  "score reply entry " + std::to_string(i) + " has the wrong type");
    }
    double value = scores[i].get<double>();
    auto count = tokens[i].get<long long>();
    if (!std::isfinite(value) || count < 1 || count > std::numeric_limits<int>::max()) {
      throw Error(ErrorKind::kMalformedReply,
                  "score reply entry " + std::to_string(i) + " is out of range");
    }
    out.push_back(Score{value, static_cast<int>(count)});
  }
  return out;
}

RemoteScorer::RemoteScorer(RemoteScorerConfig config) : config_(std::move(config)) {
  if (config_.max_batch == 0) throw Error(ErrorKind::kInvalidArgument, "max_batch must be >= 1");
  if (config_.max_in_flight == 0) config_.max_in_flight = 1;
  const auto& url = config_.base_url;
  auto scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw Error(ErrorKind::kInvalidArgument, "scorer URL needs a scheme: '" + url + "'");
  }
  auto path_start = url.find('/', scheme + 3);
  host_ = url.substr(0, path_start);
  std::string prefix = path_start == std::string::npos ? "" : url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  path_ = prefix + kScorePath;
}

std::vector<Score> RemoteScorer::post_batch(const std::string& id,
                                            const std::vector<std::string>& sentences) const {
  const auto body = encode_score_request(id, sentences);
  std::string last_error;
  for (int attempt = 0; attempt <= config_.retries; ++attempt) {
    httplib::Client client(host_);
    client.set_connection_timeout(config_.connect_timeout);
    client.set_read_timeout(config_.read_timeout);
    auto res = client.Post(path_, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    switch (res->status) {
      case 200:
        return parse_score_reply(res->body, id, sentences.size());
      case 400:
        throw Error(ErrorKind::kServiceRejected,
                    "scoring service rejected the request: " + service_message(res->body));
      case 503:
        throw Error(ErrorKind::kServiceUnavailable,
                    "scoring service unavailable: " + service_message(res->body));
      default:
        throw Error(ErrorKind::kMalformedReply,
                    "unexpected HTTP status " + std::to_string(res->status) + " from scorer");
    }
  }
  throw Error(ErrorKind::kTransport,
              "cannot reach scoring service at " + config_.base_url + ": " + last_error);
}

std::vector<Score> RemoteScorer::score(const ScoreRequest& request) const {
  validate_request(request);
  const auto& sentences = request.sentences;
  if (sentences.size() <= config_.max_batch) return post_batch(request.id, sentences);

  struct Chunk {
    std::string id;
    std::vector<std::string> sentences;
  };
  std::vector<Chunk> chunks;
  for (std::size_t begin = 0; begin < sentences.size(); begin += config_.max_batch) {
    auto end = std::min(sentences.size(), begin + config_.max_batch);
    chunks.push_back({request.id + "/" + std::to_string(chunks.size()),
                      {sentences.begin() + static_cast<std::ptrdiff_t>(begin),
                       sentences.begin() + static_cast<std::ptrdiff_t>(end)}});
  }

  std::vector<Score> out;
  out.reserve(sentences.size());
  for (std::size_t wave = 0; wave < chunks.size(); wave += config_.max_in_flight) {
    auto wave_end = std::min(chunks.size(), wave + config_.max_in_flight);
    std::vector<std::future<std::vector<Score>>> pending;
    for (std::size_t i = wave; i < wave_end; ++i) {
      pending.push_back(std::async(std::launch::async, [this, &chunks, i] {
        return post_batch(chunks[i].id, chunks[i].sentences);
      }));
    }
    // Drain every future before rethrowing so no task outlives `chunks`.
    std::exception_ptr failure;
    for (auto& f : pending) {
      try {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace pathkeep
