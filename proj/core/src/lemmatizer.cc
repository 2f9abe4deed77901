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

#include <algorithm>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "pathkeep/entity_link.h"
#include "support.h"

namespace pathkeep {

namespace {

const std::map<std::string, std::string, std::less<>>& irregular_forms() {
  static const std::map<std::string, std::string, std::less<>> forms = {
      {"ate", "eat"},        {"are", "be"},           {"been", "be"},
      {"bought", "buy"},     {"brought", "bring"},    {"children", "child"},
      {"did", "do"},         {"does", "do"},          {"done", "do"},
      {"eaten", "eat"},      {"feet", "foot"},        {"felt", "feel"},
      {"found", "find"},     {"gave", "give"},        {"geese", "goose"},
      {"given", "give"},     {"gone", "go"},          {"got", "get"},
      {"had", "have"},       {"has", "have"},         {"is", "be"},
      {"kept", "keep"},      {"knives", "knife"},     {"left", "leave"},
      {"lives", "life"},     {"made", "make"},        {"men", "man"},
      {"mice", "mouse"},     {"people", "person"},    {"ran", "run"},
      {"said", "say"},       {"sat", "sit"},          {"saw", "see"},
      {"seen", "see"},       {"stood", "stand"},      {"taken", "take"},
      {"teeth", "tooth"},    {"thought", "think"},    {"told", "tell"},
      {"took", "take"},      {"was", "be"},           {"went", "go"},
      {"were", "be"},        {"wives", "wife"},       {"women", "woman"},
      {"written", "write"},  {"wrote", "write"},
  };
  return forms;
}

// Words ending in "s" that are not plurals.
const std::set<std::string, std::less<>>& invariant_s_words() {
  static const std::set<std::string, std::less<>> words = {
      "always", "as",    "bus",     "gas",    "his",     "its",    "lens",
      "news",   "perhaps", "series", "species", "this",   "thus",   "yes",
      "christmas", "physics", "mathematics", "chaos", "canvas", "atlas",
  };
  return words;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Stem ends consonant-vowel-consonant, e.g. "mak", "lik", "us": such stems
// usually lost a silent 'e'.
bool ends_cvc(std::string_view stem) {
  auto n = stem.size();
  if (n < 2) return false;
  char last = stem[n - 1];
  char mid = stem[n - 2];
  if (is_vowel(last) || last == 'w' || last == 'x' || last == 'y' || !is_vowel(mid)) return false;
  return n == 2 || !is_vowel(stem[n - 3]);
}

bool ends_doubled_consonant(std::string_view stem) {
  auto n = stem.size();
  return n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) &&
         stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z';
}

void push_unique(std::vector<std::string>& out, std::string candidate, std::string_view token) {
  if (candidate.empty() || candidate == token) return;
  if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(std::move(candidate));
}

// Shared by -ing and -ed once the suffix is removed.
void verb_stem_candidates(std::string_view stem, std::vector<std::string>& out,
                          std::string_view token) {
  std::string s(stem);
  if (ends_doubled_consonant(s)) {
    push_unique(out, s.substr(0, s.size() - 1), token);
    push_unique(out, s, token);
  } else if (ends_cvc(s)) {
    push_unique(out, s + "e", token);
    push_unique(out, s, token);
  } else {
    push_unique(out, s, token);
    push_unique(out, s + "e", token);
  }
}

}  // namespace

std::vector<std::string> lemma_candidates(std::string_view token) {
  std::vector<std::string> out;
  std::string word = detail::to_lower(token);
  if (word.ends_with("'s")) {
    word.resize(word.size() - 2);
    push_unique(out, word, token);
  } else if (word.ends_with("'")) {
    word.pop_back();
    push_unique(out, word, token);
  }

  if (auto it = irregular_forms().find(word); it != irregular_forms().end()) {
    push_unique(out, it->second, token);
    return out;
  }
  const auto n = word.size();
  if (n <= 3) return out;

  if (word.ends_with("s")) {
    if (invariant_s_words().count(word) > 0 || word.ends_with("ss") || word.ends_with("us") ||
        word.ends_with("is")) {
      return out;
    }
    if (word.ends_with("ies") && n > 4) {
      push_unique(out, word.substr(0, n - 3) + "y", token);
    } else if (word.ends_with("ches") || word.ends_with("shes") || word.ends_with("sses") ||
               word.ends_with("xes") || word.ends_with("zes")) {
      push_unique(out, word.substr(0, n - 2), token);
      push_unique(out, word.substr(0, n - 1), token);
    } else if (word.ends_with("ves")) {
      push_unique(out, word.substr(0, n - 1), token);
      push_unique(out, word.substr(0, n - 3) + "f", token);
      push_unique(out, word.substr(0, n - 3) + "fe", token);
    } else if (word.ends_with("oes")) {
      push_unique(out, word.substr(0, n - 1), token);
      push_unique(out, word.substr(0, n - 2), token);
    } else {
      push_unique(out, word.substr(0, n - 1), token);
    }
    return out;
  }

  if (word.ends_with("ing") && n >= 6) {
    auto stem = std::string_view(word).substr(0, n - 3);
    if (stem.ends_with("y") && stem.size() == 2) {
      push_unique(out, std::string(stem.substr(0, 1)) + "ie", token);
    }
    if (std::any_of(stem.begin(), stem.end(), [](char c) { return is_vowel(c) || c == 'y'; })) {
      verb_stem_candidates(stem, out, token);
    }
    return out;
  }

  if (word.ends_with("ied") && n > 4) {
    push_unique(out, word.substr(0, n - 3) + "y", token);
    return out;
  }
  if (word.ends_with("ed") && !word.ends_with("eed") && n >= 5) {
    auto stem = std::string_view(word).substr(0, n - 2);
    if (std::any_of(stem.begin(), stem.end(), [](char c) { return is_vowel(c) || c == 'y'; })) {
      verb_stem_candidates(stem, out, token);
    }
    return out;
  }
  return out;
}

std::string lemmatize(std::string_view token) {
  auto candidates = lemma_candidates(token);
  return candidates.empty() ? detail::to_lower(token) : candidates.front();
}

const std::set<std::string, std::less<>>& default_stopwords() {
  static const std::set<std::string, std::less<>> words = {
      // interrogatives
      "how", "what", "when", "where", "which", "who", "whom", "whose", "why",
      // function words
      "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and",
      "any", "are", "as", "at", "be", "because", "been", "before", "being", "below",
      "between", "both", "but", "by", "can", "could", "did", "do", "does", "doing", "down",
      "during", "each", "else", "ever", "few", "for", "from", "further", "had", "has", "have",
      "having", "he", "he'd", "her", "here", "hers", "herself", "him", "himself", "his", "i",
      "if", "in", "into", "is", "it", "it's", "its", "itself", "just", "let", "may", "me",
      "might", "more", "most", "must", "my", "myself", "no", "nor", "not", "now", "of",
      "off", "often", "on", "once", "one", "only", "or", "other", "ought", "our", "ours",
      "ourselves", "out", "over", "own", "same", "shall", "she", "should", "so", "some",
      "such", "than", "that", "the", "their", "theirs", "them", "themselves", "then",
      "there", "these", "they", "this", "those", "through", "to", "too", "under", "until",
      "up", "usually", "very", "was", "we", "were", "will", "with", "would", "you", "your",
      "yours", "yourself", "yourselves",
  };
  return words;
}

std::set<std::string, std::less<>> load_stopwords(std::istream& in) {
  std::set<std::string, std::less<>> words;
  std::string line;
  while (std::getline(in, line)) {
    auto word = detail::trim(line);
    if (word.empty() || word.front() == '#') continue;
    words.insert(detail::to_lower(word));
  }
  return words;
}

}  // namespace pathkeep
