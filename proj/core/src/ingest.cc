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

#include "pathkeep/ingest.h"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <streambuf>

#include "pathkeep/error.h"
#include "support.h"

namespace pathkeep {

namespace {

// gzread passes plain files through unchanged, so this serves both formats.
class GzipStreamBuf : public std::streambuf {
 public:
  explicit GzipStreamBuf(gzFile file) : file_(file) {}
  ~GzipStreamBuf() override { gzclose(file_); }
  GzipStreamBuf(const GzipStreamBuf&) = delete;
  GzipStreamBuf& operator=(const GzipStreamBuf&) = delete;

 protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    int n = gzread(file_, buffer_.data(), static_cast<unsigned>(buffer_.size()));
    if (n <= 0) return traits_type::eof();
    setg(buffer_.data(), buffer_.data(), buffer_.data() + n);
    return traits_type::to_int_type(*gptr());
  }

 private:
  gzFile file_;
  std::array<char, 1 << 16> buffer_{};
};

class GzipIStream : public std::istream {
 public:
  explicit GzipIStream(gzFile file) : std::istream(nullptr), buf_(file) { rdbuf(&buf_); }

 private:
  GzipStreamBuf buf_;
};

// Pulls "weight": <number> out of the metadata JSON without a full parse.
float parse_weight(std::string_view metadata) {
  constexpr std::string_view kKey = "\"weight\"";
  auto pos = metadata.find(kKey);
  if (pos == std::string_view::npos) return 1.0f;
  pos += kKey.size();
  while (pos < metadata.size() && (metadata[pos] == ' ' || metadata[pos] == ':')) ++pos;
  std::string number(metadata.substr(pos, 32));
  char* end = nullptr;
  double value = std::strtod(number.c_str(), &end);
  if (end == number.c_str() || !std::isfinite(value)) return 1.0f;
  return static_cast<float>(value);
}

bool is_english_concept(std::string_view uri) { return uri.starts_with("/c/en/"); }

}  // namespace

std::string normalize_label_text(std::string_view text) {
  std::string out;
  bool pending_sep = false;
  for (char c : detail::trim(text)) {
    auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || c == '_') {
      pending_sep = true;
      continue;
    }
    if (pending_sep && !out.empty()) out.push_back('_');
    pending_sep = false;
    out.push_back(static_cast<char>(std::tolower(u)));
  }
  return out;
}

std::string normalize_concept_label(std::string_view uri) {
  uri = detail::trim(uri);
  if (!uri.starts_with("/c/")) return {};
  uri.remove_prefix(3);
  auto lang_end = uri.find('/');
  if (lang_end == std::string_view::npos || lang_end == 0) return {};
  uri.remove_prefix(lang_end + 1);
  // Anything after the term is a sense suffix ("/n", "/v/wn/act", ...).
  auto term_end = uri.find('/');
  if (term_end != std::string_view::npos) uri = uri.substr(0, term_end);
  return normalize_label_text(uri);
}

std::string IngestReport::to_text() const {
  std::ostringstream out;
  out << "total=" << total << '\n'
      << "kept=" << kept << '\n'
      << "non_english=" << non_english << '\n'
      << "malformed=" << malformed << '\n'
      << "dedup=" << dedup << '\n'
      << "self_loops=" << self_loops << '\n';
  return out.str();
}

IngestResult ingest_conceptnet(std::istream& in, const IngestConfig& config) {
  const TemplateTable& templates =
      config.templates != nullptr ? *config.templates : TemplateTable::builtin();
  GraphBuilder builder(templates);
  IngestReport report;

  auto reject = [&](std::size_t line_no, const std::string& line, const std::string& why) {
    if (config.strict) {
      throw Error(ErrorKind::kData,
                  "malformed assertion at line " + std::to_string(line_no) + ": " + why);
    }
    ++report.malformed;
    if (report.malformed_samples.size() < config.keep_malformed_samples) {
      report.malformed_samples.emplace_back(line_no, line);
    }
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ++report.total;
    detail::strip_cr(line);
    auto fields = detail::split(line, '\t');
    if (fields.size() < 5) {
      reject(line_no, line, "expected 5 tab-separated fields, got " +
                                std::to_string(fields.size()));
      continue;
    }
    std::string_view relation = fields[1];
    std::string_view start = fields[2];
    std::string_view end = fields[3];
    if (!relation.starts_with("/r/") || relation.size() <= 3) {
      reject(line_no, line, "relation is not a /r/ URI");
      continue;
    }
    if (!start.starts_with("/c/") && !start.starts_with("http")) {
      reject(line_no, line, "start is not a concept URI");
      continue;
    }
    if (!end.starts_with("/c/") && !end.starts_with("http")) {
      reject(line_no, line, "end is not a concept URI");
      continue;
    }
    if (!is_english_concept(start) || !is_english_concept(end)) {
      ++report.non_english;
      continue;
    }
    auto head = normalize_concept_label(start);
    auto tail = normalize_concept_label(end);
    if (head.empty() || tail.empty()) {
      reject(line_no, line, "empty concept label");
      continue;
    }
    float weight = std::max(parse_weight(fields[4]), config.min_weight);
    switch (builder.add(head, relation, tail, weight)) {
      case AddResult::kAdded:
        ++report.kept;
        break;
      case AddResult::kDuplicate:
        ++report.dedup;
        break;
      case AddResult::kSelfLoop:
        ++report.self_loops;
        break;
    }
  }
  return IngestResult{std::move(builder).build(), std::move(report)};
}

IngestResult load_fixture(std::istream& in, const TemplateTable& templates) {
  GraphBuilder builder(templates);
  IngestReport report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::trim(line).empty()) continue;
    ++report.total;
    auto fields = detail::split(line, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorKind::kData, "fixture line " + std::to_string(line_no) +
                                        ": expected 3 tab-separated columns, got " +
                                        std::to_string(fields.size()));
    }
    auto head = detail::trim(fields[0]);
    auto relation = detail::trim(fields[1]);
    auto tail = detail::trim(fields[2]);
    if (head.empty() || relation.empty() || tail.empty()) {
      throw Error(ErrorKind::kData,
                  "fixture line " + std::to_string(line_no) + ": empty column");
    }
    switch (builder.add(head, relation, tail)) {
      case AddResult::kAdded:
        ++report.kept;
        break;
      case AddResult::kDuplicate:
        ++report.dedup;
        break;
      case AddResult::kSelfLoop:
        ++report.self_loops;
        break;
    }
  }
  return IngestResult{std::move(builder).build(), std::move(report)};
}

void write_fixture(const KnowledgeGraph& graph, std::ostream& out) {
  for (const auto& e : graph.edges()) {
    out << graph.label(e.head) << '\t' << graph.relation(e.relation).canonical_name << '\t'
        << graph.label(e.tail) << '\n';
  }
}

std::unique_ptr<std::istream> open_input(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorKind::kNotFound, "cannot open input file '" + path.string() + "'");
  }
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) {
    throw Error(ErrorKind::kNotFound, "cannot open input file '" + path.string() + "'");
  }
  gzbuffer(file, 1 << 17);
  return std::make_unique<GzipIStream>(file);
}

}  // namespace pathkeep
