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

#ifndef PATHKEEP_PATH_H_
#define PATHKEEP_PATH_H_

#include <vector>

#include "pathkeep/graph.h"

namespace pathkeep {

enum class StepDirection : std::uint8_t { kForward, kReverse };

/// One traversed edge. A reverse step walks the edge from tail to head.
struct PathStep {
  Edge edge;
  StepDirection direction = StepDirection::kForward;

  NodeId from() const { return direction == StepDirection::kForward ? edge.head : edge.tail; }
  NodeId to() const { return direction == StepDirection::kForward ? edge.tail : edge.head; }
};

/// A simple path out of a linked question entity.
///
/// hop_scores[i] is the commonsense score of the prompt built from the first
/// i + 1 steps; cumulative is their left-to-right sum. Unscored paths (corpus
/// generation) leave both empty / zero.
struct ReasoningPath {
  NodeId origin = 0;
  std::vector<PathStep> steps;
  std::vector<double> hop_scores;
  double cumulative = 0.0;

  bool empty() const { return steps.empty(); }
  std::size_t length() const { return steps.size(); }
  NodeId terminal() const { return steps.empty() ? origin : steps.back().to(); }

  bool visits(NodeId node) const {
    if (origin == node) return true;
    for (const auto& s : steps) {
      if (s.to() == node) return true;
    }
    return false;
  }

  std::vector<NodeId> nodes() const {
    std::vector<NodeId> out{origin};
    for (const auto& s : steps) out.push_back(s.to());
    return out;
  }

  double sum_hop_scores() const {
    double total = 0.0;
    for (double s : hop_scores) total += s;
    return total;
  }
};

}  // namespace pathkeep

#endif  // PATHKEEP_PATH_H_
