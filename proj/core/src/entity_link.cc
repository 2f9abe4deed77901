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

#include "pathkeep/entity_link.h"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "pathkeep/error.h"
#include "support.h"

namespace pathkeep {

namespace {

struct Token {
  std::string text;  // lowercased
  std::size_t begin;
  std::size_t end;
};

bool is_token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_token_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    while (i < text.size() && is_token_char(text[i])) ++i;
    // Quotes around a word are not part of it.
    std::size_t b = begin;
    std::size_t e = i;
    while (b < e && text[b] == '\'') ++b;
    while (e > b && text[e - 1] == '\'' && !(e - b >= 2 && text[e - 2] == 's')) --e;
    if (b < e) tokens.push_back({detail::to_lower(text.substr(b, e - b)), b, e});
  }
  return tokens;
}

struct Match {
  std::size_t first_token;
  std::size_t length;  // tokens
  NodeId node;
};

std::string join_with_underscores(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back('_');
    out += words[i];
  }
  return out;
}

std::optional<NodeId> match_ngram(const std::vector<Token>& tokens, std::size_t first,
                                  std::size_t length, const KnowledgeGraph& graph) {
  std::vector<std::string> words;
  words.reserve(length);
  for (std::size_t k = first; k < first + length; ++k) words.push_back(tokens[k].text);

  if (auto node = graph.find(join_with_underscores(words))) return node;

  const std::string last = words.back();
  for (const auto& candidate : lemma_candidates(last)) {
    words.back() = candidate;
    if (auto node = graph.find(join_with_underscores(words))) return node;
  }
  words.back() = last;

  if (length > 1) {
    bool changed = false;
    for (auto& w : words) {
      auto lemma = lemmatize(w);
      changed |= lemma != w;
      w = std::move(lemma);
    }
    if (changed) {
      if (auto node = graph.find(join_with_underscores(words))) return node;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<NodeId> LinkResult::nodes() const {
  std::vector<NodeId> out;
  out.reserve(mentions.size());
  for (const auto& m : mentions) out.push_back(m.node);
  return out;
}

LinkResult extract_entities(std::string_view question, const KnowledgeGraph& graph,
                            const LinkConfig& config) {
  if (detail::trim(question).empty()) {
    throw Error(ErrorKind::kInvalidArgument, "question is empty");
  }
  const auto tokens = tokenize(question);
  const std::size_t max_ngram = std::max<std::size_t>(1, config.max_ngram);

  // joined[k]: token k and k+1 are separated by exactly one space.
  std::vector<bool> joined(tokens.size(), false);
  for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
    joined[k] = tokens[k + 1].begin == tokens[k].end + 1 && question[tokens[k].end] == ' ';
  }

  std::vector<Match> matches;
  for (std::size_t n = std::min(max_ngram, tokens.size()); n >= 1; --n) {
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      bool contiguous = true;
      for (std::size_t k = i; k + 1 < i + n; ++k) contiguous = contiguous && joined[k];
      if (!contiguous) continue;
      if (n == 1 && config.stopwords.count(tokens[i].text) > 0) continue;
      if (auto node = match_ngram(tokens, i, n, graph)) matches.push_back({i, n, *node});
    }
  }
  // Longest first, then leftmost. Accept greedily while spans stay disjoint.
  std::stable_sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.first_token < b.first_token;
  });
  std::vector<bool> taken(tokens.size(), false);
  std::vector<Match> accepted;
  for (const auto& m : matches) {
    bool free = true;
    for (std::size_t k = m.first_token; k < m.first_token + m.length; ++k) free = free && !taken[k];
    if (!free) continue;
    bool duplicate_node = std::any_of(accepted.begin(), accepted.end(),
                                      [&](const Match& a) { return a.node == m.node; });
    if (duplicate_node) continue;
    for (std::size_t k = m.first_token; k < m.first_token + m.length; ++k) taken[k] = true;
    accepted.push_back(m);
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const Match& a, const Match& b) { return a.first_token < b.first_token; });
  if (config.max_mentions && accepted.size() > *config.max_mentions) {
    accepted.resize(*config.max_mentions);
  }

  LinkResult result;
  result.question = std::string(question);
  for (const auto& m : accepted) {
    EntityMention mention;
    mention.begin = tokens[m.first_token].begin;
    mention.end = tokens[m.first_token + m.length - 1].end;
    mention.surface = result.question.substr(mention.begin, mention.end - mention.begin);
    mention.node = m.node;
    result.mentions.push_back(std::move(mention));
  }
  if (result.mentions.empty()) {
    throw Error(ErrorKind::kNoLinkableEntities,
                "no linkable entities in question: " + std::string(question));
  }
  return result;
}

std::string link_result_json(const LinkResult& result, const KnowledgeGraph& graph) {
  nlohmann::ordered_json mentions = nlohmann::ordered_json::array();
  for (const auto& m : result.mentions) {
    mentions.push_back({{"surface", m.surface},
                        {"start", m.begin},
                        {"end", m.end},
                        {"node_label", graph.label(m.node)}});
  }
  nlohmann::ordered_json record = {{"question", result.question}, {"mentions", mentions}};
  return record.dump();
}

}  // namespace pathkeep
