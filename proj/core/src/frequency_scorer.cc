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

#include "pathkeep/frequency_scorer.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

#include "pathkeep/error.h"
#include "support.h"

namespace pathkeep {

namespace {

constexpr std::string_view kDefaultRow = "<default>";

}  // namespace

std::vector<std::string> oracle_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      flush();
    } else if (std::ispunct(u) && c != '\'' && c != '_') {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(static_cast<char>(std::tolower(u)));
    }
  }
  flush();
  return tokens;
}

FrequencyTable::FrequencyTable(double default_prob) : default_prob_(default_prob) {
  if (!(default_prob > 0.0 && default_prob <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "default probability must lie in (0, 1]");
  }
}

void FrequencyTable::set(std::string token, double probability) {
  if (!(probability > 0.0 && probability <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "probability for '" + token + "' must lie in (0, 1]");
  }
  probs_[std::move(token)] = probability;
}

double FrequencyTable::probability(std::string_view token) const {
  auto it = probs_.find(token);
  return it == probs_.end() ? default_prob_ : it->second;
}

FrequencyTable FrequencyTable::load(std::istream& in) {
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto fields = detail::split(line, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorKind::kData, "oracle table line " + std::to_string(line_no) +
                                        ": expected token<TAB>probability");
    }
    std::string number(detail::trim(fields[1]));
    char* end = nullptr;
    double p = std::strtod(number.c_str(), &end);
    if (number.empty() || end != number.c_str() + number.size()) {
      throw Error(ErrorKind::kData,
                  "oracle table line " + std::to_string(line_no) + ": bad probability");
    }
    if (!(p > 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::kData, "oracle table line " + std::to_string(line_no) +
                                        ": probability must lie in (0, 1]");
    }
    if (fields[0] == kDefaultRow) {
      table.default_prob_ = p;
    } else {
      table.probs_[detail::to_lower(fields[0])] = p;
    }
  }
  return table;
}

FrequencyTable FrequencyTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kNotFound, "cannot open oracle table '" + path.string() + "'");
  return load(in);
}

void FrequencyTable::save(std::ostream& out) const {
  out << std::setprecision(17);
  out << kDefaultRow << '\t' << default_prob_ << '\n';
  for (const auto& [token, p] : probs_) out << token << '\t' << p << '\n';
}

FrequencyTable FrequencyTable::from_corpus(std::istream& in) {
  std::map<std::string, std::size_t, std::less<>> counts;
  std::size_t total = 0;
  std::string line;
  while (std::getline(in, line)) {
    for (auto& token : oracle_tokenize(line)) {
      ++counts[std::move(token)];
      ++total;
    }
  }
  if (total == 0) throw Error(ErrorKind::kInvalidArgument, "corpus has no tokens");
  const double vocab = static_cast<double>(counts.size());
  const double denom = static_cast<double>(total) + vocab;
  FrequencyTable table(1.0 / (denom + 1.0));
  for (const auto& [token, count] : counts) {
    table.probs_.emplace(token, (static_cast<double>(count) + 1.0) / denom);
  }
  return table;
}

Score FrequencyScorer::score_sentence(std::string_view sentence) const {
  auto tokens = oracle_tokenize(sentence);
  if (tokens.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "sentence has no scorable tokens");
  }
  double sum = 0.0;
  for (const auto& token : tokens) {
    sum += std::max(std::log(table_.probability(token)), kLogProbFloor);
  }
  return Score{sum / static_cast<double>(tokens.size()), static_cast<int>(tokens.size())};
}

std::vector<Score> FrequencyScorer::score(const ScoreRequest& request) const {
  validate_request(request);
  std::vector<Score> scores;
  scores.reserve(request.sentences.size());
  for (const auto& s : request.sentences) scores.push_back(score_sentence(s));
  return scores;
}

}  // namespace pathkeep
