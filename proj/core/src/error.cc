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

#include "pathkeep/error.h"

namespace pathkeep {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid_argument";
    case ErrorKind::kData:
      return "data";
    case ErrorKind::kNotFound:
      return "not_found";
    case ErrorKind::kNoLinkableEntities:
      return "no_linkable_entities";
    case ErrorKind::kTransport:
      return "transport";
    case ErrorKind::kMalformedReply:
      return "malformed_reply";
    case ErrorKind::kLengthMismatch:
      return "length_mismatch";
    case ErrorKind::kServiceRejected:
      return "service_rejected";
    case ErrorKind::kServiceUnavailable:
      return "service_unavailable";
  }
  return "unknown";
}

}  // namespace pathkeep
