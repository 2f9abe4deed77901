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

#include "pathkeep/expansion.h"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "pathkeep/error.h"

namespace pathkeep {

namespace {

// Strict weak order on step sequences, used only after every other key ties.
bool steps_before(const ReasoningPath& a, const ReasoningPath& b) {
  if (a.origin != b.origin) return a.origin < b.origin;
  auto key = [](const PathStep& s) {
    return std::make_tuple(s.edge.head, s.edge.relation, s.edge.tail,
                           static_cast<int>(s.direction));
  };
  return std::lexicographical_compare(
      a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
      [&](const PathStep& x, const PathStep& y) { return key(x) < key(y); });
}

void append_admissible(const ReasoningPath& path, std::span<const Edge> edges,
                       StepDirection direction, std::vector<ReasoningPath>& out) {
  for (const auto& edge : edges) {
    PathStep step{edge, direction};
    if (path.visits(step.to())) continue;
    ReasoningPath next;
    next.origin = path.origin;
    next.steps.reserve(path.steps.size() + 1);
    next.steps = path.steps;
    next.steps.push_back(step);
    next.hop_scores = path.hop_scores;
    next.cumulative = path.cumulative;
    out.push_back(std::move(next));
  }
}

}  // namespace

const char* to_string(DirectionPolicy policy) {
  return policy == DirectionPolicy::kOut ? "out" : "both";
}

DirectionPolicy parse_direction_policy(std::string_view text) {
  if (text == "out") return DirectionPolicy::kOut;
  if (text == "both") return DirectionPolicy::kBoth;
  throw Error(ErrorKind::kInvalidArgument,
              "direction must be 'out' or 'both', got '" + std::string(text) + "'");
}

void SearchConfig::validate() const {
  if (max_hops < 1) throw Error(ErrorKind::kInvalidArgument, "max_hops must be >= 1");
  if (beam_width < 1) throw Error(ErrorKind::kInvalidArgument, "beam_width must be >= 1");
  if (answers_returned < 1) {
    throw Error(ErrorKind::kInvalidArgument, "answers_returned must be >= 1");
  }
}

bool ranks_before(const KnowledgeGraph& graph, const ReasoningPath& a, std::string_view a_text,
                  const ReasoningPath& b, std::string_view b_text) {
  if (a.cumulative != b.cumulative) return a.cumulative > b.cumulative;
  const auto& a_label = graph.label(a.terminal());
  const auto& b_label = graph.label(b.terminal());
  if (a_label != b_label) return a_label < b_label;
  if (a_text != b_text) return a_text < b_text;
  return steps_before(a, b);
}

Frontier seed_frontier(std::span<const NodeId> seeds) {
  Frontier frontier;
  for (NodeId seed : seeds) {
    ReasoningPath path;
    path.origin = seed;
    frontier.paths.push_back(std::move(path));
    frontier.statements.emplace_back();
  }
  return frontier;
}

Frontier expand_hop(const Frontier& frontier, const KnowledgeGraph& graph, const Scorer& scorer,
                    std::string_view question, const SearchConfig& config) {
  config.validate();
  if (frontier.hop >= config.max_hops) {
    throw Error(ErrorKind::kInvalidArgument, "frontier is already at the hop limit");
  }
  std::vector<ReasoningPath> candidates;
  for (const auto& path : frontier.paths) {
    const NodeId last = path.terminal();
    append_admissible(path, graph.out_edges(last), StepDirection::kForward, candidates);
    if (config.direction == DirectionPolicy::kBoth) {
      append_admissible(path, graph.in_edges(last), StepDirection::kReverse, candidates);
    }
  }

  Frontier next;
  next.hop = frontier.hop + 1;
  if (candidates.empty()) return next;

  std::vector<std::string> prompts;
  std::vector<std::string> statements;
  prompts.reserve(candidates.size());
  statements.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    auto prompt = build_prompt(graph, question, candidate);
    prompts.push_back(std::move(prompt.text));
    statements.push_back(std::move(prompt.statement.text));
  }
  const auto scores = scorer.score(prompts);
  if (scores.size() != candidates.size()) {
    throw Error(ErrorKind::kLengthMismatch, "scorer returned " + std::to_string(scores.size()) +
                                                " scores for " +
                                                std::to_string(candidates.size()) + " prompts");
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    candidates[i].hop_scores.push_back(scores[i].value);
    candidates[i].cumulative += scores[i].value;
  }

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto before = [&](std::size_t a, std::size_t b) {
    return ranks_before(graph, candidates[a], statements[a], candidates[b], statements[b]);
  };
  const std::size_t keep = std::min(config.beam_width, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    before);
  order.resize(keep);

  next.paths.reserve(keep);
  next.statements.reserve(keep);
  for (std::size_t i : order) {
    next.paths.push_back(std::move(candidates[i]));
    next.statements.push_back(std::move(statements[i]));
  }
  return next;
}

std::vector<Answer> search_from(std::string_view question, std::span<const NodeId> seeds,
                                const KnowledgeGraph& graph, const Scorer& scorer,
                                const SearchConfig& config) {
  config.validate();
  const std::unordered_set<NodeId> excluded(seeds.begin(), seeds.end());

  // Best surviving path per terminal entity.
  struct Best {
    ReasoningPath path;
    std::string statement;
  };
  std::unordered_map<NodeId, Best> best;
  Frontier frontier = seed_frontier(seeds);
  for (std::size_t hop = 1; hop <= config.max_hops; ++hop) {
    frontier = expand_hop(frontier, graph, scorer, question, config);
    if (frontier.paths.empty()) break;
    for (std::size_t i = 0; i < frontier.paths.size(); ++i) {
      const auto& path = frontier.paths[i];
      const NodeId entity = path.terminal();
      if (excluded.count(entity) > 0) continue;
      auto it = best.find(entity);
      if (it == best.end()) {
        best.emplace(entity, Best{path, frontier.statements[i]});
      } else if (ranks_before(graph, path, frontier.statements[i], it->second.path,
                              it->second.statement)) {
        it->second = Best{path, frontier.statements[i]};
      }
    }
  }

  std::vector<Best> ranked;
  ranked.reserve(best.size());
  for (auto& [entity, entry] : best) ranked.push_back(std::move(entry));
  std::sort(ranked.begin(), ranked.end(), [&](const Best& a, const Best& b) {
    return ranks_before(graph, a.path, a.statement, b.path, b.statement);
  });
  if (ranked.size() > config.answers_returned) ranked.resize(config.answers_returned);

  std::vector<Answer> answers;
  answers.reserve(ranked.size());
  for (auto& entry : ranked) {
    Answer answer;
    answer.entity = entry.path.terminal();
    answer.path = std::move(entry.path);
    answer.statement = render_path(graph, answer.path.steps);
    answer.score = answer.path.cumulative;
    answers.push_back(std::move(answer));
  }
  return answers;
}

SearchResult search(std::string_view question, const KnowledgeGraph& graph, const Scorer& scorer,
                    const SearchConfig& config) {
  config.validate();
  SearchResult result;
  result.link = extract_entities(question, graph, config.link);
  const auto seeds = result.link.nodes();
  result.answers = search_from(question, seeds, graph, scorer, config);
  return result;
}

const Answer& predict_answer(std::span<const Answer> answers, const KnowledgeGraph& graph) {
  if (answers.empty()) throw Error(ErrorKind::kInvalidArgument, "no answers to choose from");
  auto before = [&](const Answer& a, const Answer& b) {
    if (a.score != b.score) return a.score > b.score;
    const auto& a_label = graph.label(a.entity);
    const auto& b_label = graph.label(b.entity);
    if (a_label != b_label) return a_label < b_label;
    if (a.statement.text != b.statement.text) return a.statement.text < b.statement.text;
    return steps_before(a.path, b.path);
  };
  const Answer* best = &answers.front();
  for (const auto& answer : answers.subspan(1)) {
    if (before(answer, *best)) best = &answer;
  }
  return *best;
}

}  // namespace pathkeep
