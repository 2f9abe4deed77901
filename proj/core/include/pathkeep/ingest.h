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

#ifndef PATHKEEP_INGEST_H_
#define PATHKEEP_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathkeep/graph.h"
#include "pathkeep/relations.h"

namespace pathkeep {

struct IngestConfig {
  /// Abort on the first malformed line instead of skipping it.
  bool strict = false;
  /// Weights below this (including zero and negative) are clamped up to it.
  float min_weight = 0.01f;
  /// Malformed lines kept verbatim in the report, for diagnostics.
  std::size_t keep_malformed_samples = 16;
  const TemplateTable* templates = nullptr;
};

/// Per-line accounting. Every input line lands in exactly one bucket, so
/// total == kept + non_english + malformed + dedup + self_loops.
struct IngestReport {
  std::size_t total = 0;
  std::size_t kept = 0;
  std::size_t non_english = 0;
  std::size_t malformed = 0;
  std::size_t dedup = 0;
  std::size_t self_loops = 0;
  std::vector<std::pair<std::size_t, std::string>> malformed_samples;

  /// Key-value summary, one "key=value" per line in a fixed order.
  std::string to_text() const;
};

struct IngestResult {
  KnowledgeGraph graph;
  IngestReport report;
};

/// Reads ConceptNet 5.6 assertion rows
/// (assertion URI, relation URI, start URI, end URI, metadata JSON) and keeps
/// English-English, relation-merged, deduplicated, loop-free edges.
IngestResult ingest_conceptnet(std::istream& in, const IngestConfig& config = {});

/// Reads "head<TAB>relation<TAB>tail" rows with pre-normalized labels.
/// Blank lines are ignored; any other column count is an error.
IngestResult load_fixture(std::istream& in,
                          const TemplateTable& templates = TemplateTable::builtin());

/// Writes the graph back out in the fixture format, in canonical edge order.
void write_fixture(const KnowledgeGraph& graph, std::ostream& out);

/// "/c/en/Ice_Cream/n/wn/food" -> "ice_cream". Returns an empty string for
/// URIs that are not concept URIs. Does not check the language.
std::string normalize_concept_label(std::string_view concept_uri);

/// Normalizes free text to label form: lowercase, whitespace runs to '_'.
std::string normalize_label_text(std::string_view text);

/// Opens a file for line reading; gzip input is decompressed transparently.
/// Throws kNotFound when the file cannot be opened.
std::unique_ptr<std::istream> open_input(const std::filesystem::path& path);

}  // namespace pathkeep

#endif  // PATHKEEP_INGEST_H_
