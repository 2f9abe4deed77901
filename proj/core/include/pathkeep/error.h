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

#ifndef PATHKEEP_ERROR_H_
#define PATHKEEP_ERROR_H_

#include <stdexcept>
#include <string>

namespace pathkeep {

enum class ErrorKind {
  kInvalidArgument,
  kData,
  kNotFound,
  kNoLinkableEntities,
  // Scorer failures. Each remote failure mode is reported separately.
  kTransport,
  kMalformedReply,
  kLengthMismatch,
  kServiceRejected,     // HTTP 400
  kServiceUnavailable,  // HTTP 503
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  bool is_scorer_failure() const {
    switch (kind_) {
      case ErrorKind::kTransport:
      case ErrorKind::kMalformedReply:
      case ErrorKind::kLengthMismatch:
      case ErrorKind::kServiceRejected:
      case ErrorKind::kServiceUnavailable:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

}  // namespace pathkeep

#endif  // PATHKEEP_ERROR_H_
