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

#include "pathkeep/corpus.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "pathkeep/error.h"
#include "pathkeep/ingest.h"
#include "pathkeep/verbalizer.h"
#include "support.h"

namespace pathkeep {

namespace {

// Unbiased draw in [0, bound) (Lemire's multiply-and-reject).
std::uint64_t bounded_draw(MaskRng& rng, std::uint64_t bound) {
  std::uint64_t x = rng();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Nearest integer; an exact .5 goes either way on a fair coin from `rng`,
// which keeps the expected masked fraction equal to the rate.
std::size_t round_mask_count(double expected, MaskRng& rng) {
  const double whole = std::floor(expected);
  if (std::abs(expected - whole - 0.5) < 1e-9) {
    return static_cast<std::size_t>(whole) + static_cast<std::size_t>(rng() >> 63);
  }
  return static_cast<std::size_t>(std::llround(expected));
}

std::vector<std::string> whitespace_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) tokens.push_back(std::move(token));
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

void collect_paths(const KnowledgeGraph& graph, NodeId target, std::size_t max_hops,
                   ReasoningPath& current, std::vector<ReasoningPath>& out) {
  if (current.length() >= max_hops) return;
  const NodeId last = current.terminal();
  auto walk = [&](std::span<const Edge> edges, StepDirection direction) {
    for (const auto& edge : edges) {
      PathStep step{edge, direction};
      if (current.visits(step.to())) continue;
      current.steps.push_back(step);
      if (step.to() == target) {
        out.push_back(current);
      } else {
        collect_paths(graph, target, max_hops, current, out);
      }
      current.steps.pop_back();
    }
  };
  walk(graph.out_edges(last), StepDirection::kForward);
  walk(graph.in_edges(last), StepDirection::kReverse);
}

}  // namespace

std::string CorpusReport::to_text() const {
  std::ostringstream out;
  out << "pairs_processed=" << pairs_processed << '\n'
      << "pairs_skipped=" << pairs_skipped << '\n'
      << "pairs_without_paths=" << pairs_without_paths << '\n'
      << "duplicate_sentences=" << duplicate_sentences << '\n'
      << "sentences_emitted=" << sentences_emitted << '\n';
  return out.str();
}

std::vector<ReasoningPath> find_paths_between(const KnowledgeGraph& graph,
                                              std::span<const NodeId> sources, NodeId target,
                                              std::size_t max_hops) {
  if (!graph.contains(target)) {
    throw Error(ErrorKind::kNotFound, "target node " + std::to_string(target) + " not in graph");
  }
  std::vector<ReasoningPath> out;
  for (NodeId source : sources) {
    if (!graph.contains(source)) {
      throw Error(ErrorKind::kNotFound, "source node " + std::to_string(source) + " not in graph");
    }
    if (source == target) continue;
    ReasoningPath current;
    current.origin = source;
    collect_paths(graph, target, max_hops, current, out);
  }
  return out;
}

CorpusSentence mask_tokens(std::string_view sentence, double rate, MaskRng& rng) {
  if (!(rate > 0.0 && rate < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "mask rate must lie in (0, 1)");
  }
  auto tokens = whitespace_tokens(sentence);
  if (tokens.empty()) throw Error(ErrorKind::kInvalidArgument, "cannot mask an empty sentence");

  const std::size_t n = tokens.size();
  const auto count = std::min<std::size_t>(n, std::max<std::size_t>(1, round_mask_count(rate * n, rng)));
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    auto j = i + static_cast<std::size_t>(bounded_draw(rng, n - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(count);
  std::sort(indices.begin(), indices.end());

  CorpusSentence out;
  out.text = join_tokens(tokens);
  for (auto i : indices) tokens[i] = std::string(kMaskToken);
  out.masked_text = join_tokens(tokens);
  out.masked_positions = std::move(indices);
  return out;
}

std::string unmask(std::string_view masked_text, std::span<const std::size_t> positions,
                   std::string_view original_text) {
  auto masked = whitespace_tokens(masked_text);
  auto original = whitespace_tokens(original_text);
  if (masked.size() != original.size()) {
    throw Error(ErrorKind::kInvalidArgument, "masked and original token counts differ");
  }
  for (auto p : positions) {
    if (p >= masked.size()) throw Error(ErrorKind::kInvalidArgument, "mask position out of range");
    masked[p] = original[p];
  }
  return join_tokens(masked);
}

CorpusResult generate_corpus(std::span<const QAPair> pairs, const KnowledgeGraph& graph,
                             const CorpusConfig& config) {
  if (pairs.empty()) throw Error(ErrorKind::kInvalidArgument, "no QA pairs given");
  if (config.max_hops < 1) throw Error(ErrorKind::kInvalidArgument, "max_hops must be >= 1");

  CorpusResult result;
  auto& report = result.report;
  std::unordered_set<std::string> seen;
  struct Pending {
    std::string text;
    std::size_t question_index;
    ReasoningPath path;
  };
  std::vector<Pending> pending;

  for (std::size_t q = 0; q < pairs.size(); ++q) {
    ++report.pairs_processed;
    auto target = graph.find(normalize_label_text(pairs[q].gold_answer));
    if (!target) {
      ++report.pairs_skipped;
      continue;
    }
    LinkResult link;
    try {
      link = extract_entities(pairs[q].question, graph, config.link);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNoLinkableEntities) throw;
      ++report.pairs_skipped;
      continue;
    }
    const auto sources = link.nodes();
    auto paths = find_paths_between(graph, sources, *target, config.max_hops);
    if (paths.empty()) {
      ++report.pairs_without_paths;
      continue;
    }
    for (auto& path : paths) {
      auto text = render_path(graph, path.steps).text;
      if (!seen.insert(text).second) {
        ++report.duplicate_sentences;
        continue;
      }
      pending.push_back({std::move(text), q, std::move(path)});
    }
  }

  if (pending.size() > config.max_sentences) pending.resize(config.max_sentences);
  MaskRng rng(config.seed);
  result.sentences.reserve(pending.size());
  for (auto& p : pending) {
    auto sentence = mask_tokens(p.text, config.mask_rate, rng);
    sentence.question_index = p.question_index;
    sentence.path = std::move(p.path);
    result.sentences.push_back(std::move(sentence));
  }
  report.sentences_emitted = result.sentences.size();
  return result;
}

std::vector<QAPair> read_qa_pairs(std::istream& in) {
  std::vector<QAPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split(line, '\t');
    if (fields.size() != 2 || detail::trim(fields[0]).empty() ||
        detail::trim(fields[1]).empty()) {
      throw Error(ErrorKind::kData,
                  "QA line " + std::to_string(line_no) + ": expected question<TAB>answer");
    }
    pairs.push_back({std::string(detail::trim(fields[0])), std::string(detail::trim(fields[1]))});
  }
  return pairs;
}

void write_corpus(std::span<const CorpusSentence> sentences, std::ostream& out) {
  for (const auto& s : sentences) {
    out << s.text << '\t' << s.masked_text << '\t';
    for (std::size_t i = 0; i < s.masked_positions.size(); ++i) {
      if (i > 0) out << ',';
      out << s.masked_positions[i];
    }
    out << '\n';
  }
}

}  // namespace pathkeep
