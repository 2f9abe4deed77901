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

#ifndef PATHKEEP_RELATIONS_H_
#define PATHKEEP_RELATIONS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pathkeep {

/// A merged relation type together with the phrases used to verbalize it.
///
/// `surface_text` renders a forward edge as "<head> <surface_text> <tail>",
/// `inverse_surface_text` renders a reversed edge as
/// "<tail> <inverse_surface_text> <head>".
struct RelationType {
  std::string canonical_name;
  std::string surface_text;
  std::string inverse_surface_text;

  bool operator==(const RelationType&) const = default;
};

/// Relation vocabulary: ConceptNet merge groups plus verbalization templates.
///
/// The built-in table folds the five published merge groups
/// (antonym, atlocation, causes, relatedto, isa) and carries hand-written
/// templates for the remaining ConceptNet 5.6 relations. Relations it does not
/// know fall through to an auto-generated template, so `resolve` is total.
/// A template file can override or extend any entry.
class TemplateTable {
 public:
  static const TemplateTable& builtin();

  /// Reads "canonical_name<TAB>surface_text<TAB>inverse_surface_text" lines
  /// on top of the built-in table. Blank lines and '#' comments are skipped.
  static TemplateTable load(std::istream& in);

  RelationType resolve(std::string_view raw_relation) const;

  /// Canonical name a raw relation maps to, without template lookup.
  std::string canonical_name(std::string_view raw_relation) const;

  /// Stable 64-bit hash of aliases and templates. Embedded in snapshots.
  std::uint64_t fingerprint() const;

  void save(std::ostream& out) const;

  std::vector<RelationType> entries() const;

 private:
  TemplateTable() = default;

  // Merge aliases keyed by compact lowercase name ("distinctfrom").
  std::map<std::string, std::string> aliases_;
  std::map<std::string, RelationType> templates_;
};

/// Built-in merge: maps a raw ConceptNet relation ("/r/DistinctFrom",
/// "Synonym", "used_for") to its merged RelationType.
RelationType merge_relation(std::string_view raw_relation);

/// Splits a relation name into lowercase words: "UsedFor" -> {"used", "for"},
/// "done_by" -> {"done", "by"}.
std::vector<std::string> split_relation_words(std::string_view name);

/// Template used for relations outside the table.
RelationType default_relation_template(std::string_view name);

}  // namespace pathkeep

#endif  // PATHKEEP_RELATIONS_H_
