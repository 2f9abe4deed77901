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

#include "pathkeep/relations.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "pathkeep/error.h"
#include "support.h"

namespace pathkeep {

namespace {

struct BuiltinTemplate {
  const char* name;
  const char* surface;
  const char* inverse;
};

// Merged groups first; the remaining rows cover ConceptNet 5.6 relations that
// pass through unmerged.
constexpr std::array kBuiltinTemplates = {
    BuiltinTemplate{"antonym", "is the antonym of", "is the antonym of"},
    BuiltinTemplate{"atlocation", "is at location of", "is the location of"},
    BuiltinTemplate{"causes", "causes", "is caused by"},
    BuiltinTemplate{"relatedto", "is related to", "is related to"},
    BuiltinTemplate{"isa", "is a type of", "has the subtype"},

    BuiltinTemplate{"formof", "is a form of", "has the form"},
    BuiltinTemplate{"partof", "is part of", "has the part"},
    BuiltinTemplate{"hasa", "has", "belongs to"},
    BuiltinTemplate{"usedfor", "is used for", "can be done with"},
    BuiltinTemplate{"capableof", "is capable of", "can be done by"},
    BuiltinTemplate{"hassubevent", "has the subevent", "is a subevent of"},
    BuiltinTemplate{"hasfirstsubevent", "starts with", "is the first step of"},
    BuiltinTemplate{"haslastsubevent", "ends with", "is the last step of"},
    BuiltinTemplate{"hasprerequisite", "requires", "is required for"},
    BuiltinTemplate{"hasproperty", "has the property", "is a property of"},
    BuiltinTemplate{"obstructedby", "is obstructed by", "obstructs"},
    BuiltinTemplate{"desires", "desires to", "is desired by"},
    BuiltinTemplate{"createdby", "is created by", "creates"},
    BuiltinTemplate{"derivedfrom", "is derived from", "is the origin of"},
    BuiltinTemplate{"symbolof", "is a symbol of", "is symbolized by"},
    BuiltinTemplate{"mannerof", "is a way of", "can be done by way of"},
    BuiltinTemplate{"hascontext", "is used in the context of",
                    "is the context of"},
    BuiltinTemplate{"etymologicallyrelatedto", "is etymologically related to",
                    "is etymologically related to"},
    BuiltinTemplate{"etymologicallyderivedfrom",
                    "is etymologically derived from",
                    "is the etymological origin of"},
    BuiltinTemplate{"madeof", "is made of", "is used to make"},
    BuiltinTemplate{"receivesaction", "can be", "can be done to"},
    BuiltinTemplate{"notdesires", "does not desire to", "is not desired by"},
    BuiltinTemplate{"notusedfor", "is not used for", "is not a use of"},
    BuiltinTemplate{"notcapableof", "is not capable of", "cannot be done by"},
    BuiltinTemplate{"nothasproperty", "does not have the property",
                    "is not a property of"},
    BuiltinTemplate{"entails", "entails", "is entailed by"},
    BuiltinTemplate{"externalurl", "has the external url", "is the url of"},
};

struct MergeAlias {
  const char* member;
  const char* canonical;
};

constexpr std::array kMergeAliases = {
    MergeAlias{"distinctfrom", "antonym"},
    MergeAlias{"locatednear", "atlocation"},
    MergeAlias{"causesdesire", "causes"},
    MergeAlias{"motivatedby", "causes"},
    MergeAlias{"motivatedbygoal", "causes"},
    MergeAlias{"similarto", "relatedto"},
    MergeAlias{"synonym", "relatedto"},
    MergeAlias{"instanceof", "isa"},
    MergeAlias{"definedas", "isa"},
};

constexpr std::array kTrailingPrepositions = {
    "about", "as", "at", "by", "for", "from", "in", "into",
    "of",    "on", "to", "with",
};

// "/r/DistinctFrom" -> "DistinctFrom"; "/r/dbpedia/genre" -> "genre".
std::string_view relation_name(std::string_view raw) {
  raw = detail::trim(raw);
  if (raw.starts_with("/r/")) raw.remove_prefix(3);
  while (!raw.empty() && raw.back() == '/') raw.remove_suffix(1);
  auto slash = raw.rfind('/');
  if (slash != std::string_view::npos) raw.remove_prefix(slash + 1);
  return raw;
}

std::string compact_key(std::string_view name) {
  std::string key;
  key.reserve(name.size());
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) key.push_back(static_cast<char>(std::tolower(u)));
  }
  return key;
}

std::string join(const std::vector<std::string>& words, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(words[i]);
  }
  return out;
}

void check_template_text(const std::string& text, const std::string& name) {
  if (text.empty()) {
    throw Error(ErrorKind::kData, "empty template text for relation '" + name + "'");
  }
  if (text.find('<') != std::string::npos || text.find('{') != std::string::npos) {
    throw Error(ErrorKind::kData,
                "template for relation '" + name + "' contains a placeholder marker");
  }
}

}  // namespace

std::vector<std::string> split_relation_words(std::string_view name) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (size_t i = 0; i < name.size(); ++i) {
    auto u = static_cast<unsigned char>(name[i]);
    if (!std::isalnum(u)) {
      flush();
      continue;
    }
    if (std::isupper(u) && !current.empty()) {
      auto prev = static_cast<unsigned char>(name[i - 1]);
      bool next_lower = i + 1 < name.size() &&
                        std::islower(static_cast<unsigned char>(name[i + 1]));
      // "UsedFor" splits at 'F'; "URLOf" splits before 'O' only.
      if (std::islower(prev) || std::isdigit(prev) ||
          (std::isupper(prev) && next_lower)) {
        flush();
      }
    }
    current.push_back(static_cast<char>(std::tolower(u)));
  }
  flush();
  return words;
}

RelationType default_relation_template(std::string_view name) {
  auto words = split_relation_words(relation_name(name));
  if (words.empty()) words.push_back("relation");
  RelationType type;
  type.canonical_name = join(words, "_");
  std::string phrase = join(words, " ");
  bool ends_with_preposition =
      std::find(kTrailingPrepositions.begin(), kTrailingPrepositions.end(),
                words.back()) != kTrailingPrepositions.end();
  type.surface_text = "is " + phrase + (ends_with_preposition ? "" : " of");
  type.inverse_surface_text = "is the inverse-" + phrase + " of";
  return type;
}

const TemplateTable& TemplateTable::builtin() {
  static const TemplateTable table = [] {
    TemplateTable t;
    for (const auto& row : kBuiltinTemplates) {
      t.templates_.emplace(row.name, RelationType{row.name, row.surface, row.inverse});
    }
    for (const auto& alias : kMergeAliases) {
      t.aliases_.emplace(alias.member, alias.canonical);
    }
    return t;
  }();
  return table;
}

TemplateTable TemplateTable::load(std::istream& in) {
  TemplateTable table = builtin();
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto fields = detail::split(line, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorKind::kData, "template table line " + std::to_string(line_no) +
                                        ": expected 3 tab-separated columns, got " +
                                        std::to_string(fields.size()));
    }
    RelationType type{std::string(detail::trim(fields[0])),
                      std::string(detail::trim(fields[1])),
                      std::string(detail::trim(fields[2]))};
    if (type.canonical_name.empty()) {
      throw Error(ErrorKind::kData,
                  "template table line " + std::to_string(line_no) + ": empty relation name");
    }
    check_template_text(type.surface_text, type.canonical_name);
    check_template_text(type.inverse_surface_text, type.canonical_name);
    table.templates_[type.canonical_name] = std::move(type);
  }
  return table;
}

std::string TemplateTable::canonical_name(std::string_view raw_relation) const {
  auto name = relation_name(raw_relation);
  auto key = compact_key(name);
  if (auto it = aliases_.find(key); it != aliases_.end()) return it->second;
  if (templates_.count(key) > 0) return key;
  auto words = split_relation_words(name);
  if (words.empty()) return "relation";
  return join(words, "_");
}

RelationType TemplateTable::resolve(std::string_view raw_relation) const {
  auto canonical = canonical_name(raw_relation);
  if (auto it = templates_.find(canonical); it != templates_.end()) return it->second;
  return default_relation_template(canonical);
}

std::uint64_t TemplateTable::fingerprint() const {
  std::ostringstream buffer;
  for (const auto& [member, canonical] : aliases_) {
    buffer << "alias\t" << member << '\t' << canonical << '\n';
  }
  save(buffer);
  return detail::fnv1a64(buffer.str());
}

void TemplateTable::save(std::ostream& out) const {
  for (const auto& [name, type] : templates_) {
    out << name << '\t' << type.surface_text << '\t' << type.inverse_surface_text << '\n';
  }
}

std::vector<RelationType> TemplateTable::entries() const {
  std::vector<RelationType> out;
  out.reserve(templates_.size());
  for (const auto& [name, type] : templates_) out.push_back(type);
  return out;
}

RelationType merge_relation(std::string_view raw_relation) {
  return TemplateTable::builtin().resolve(raw_relation);
}

}  // namespace pathkeep
