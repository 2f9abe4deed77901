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

#ifndef PATHKEEP_TESTING_FIXTURES_H_
#define PATHKEEP_TESTING_FIXTURES_H_

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "pathkeep/frequency_scorer.h"
#include "pathkeep/graph.h"
#include "pathkeep/ingest.h"

namespace pathkeep::testing {

inline std::filesystem::path data_path(std::string_view name) {
  return std::filesystem::path(PATHKEEP_TEST_DATA_DIR) / std::string(name);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline KnowledgeGraph graph_from_text(std::string_view tsv) {
  std::istringstream in{std::string(tsv)};
  return load_fixture(in).graph;
}

inline KnowledgeGraph graph_from_file(std::string_view name) {
  std::ifstream in(data_path(name));
  return load_fixture(in).graph;
}

inline FrequencyScorer oracle_from_file(std::string_view name) {
  return FrequencyScorer(FrequencyTable::load(data_path(name)));
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    path_ = std::filesystem::temp_directory_path() /
            ("pathkeep-test-" + std::to_string(stamp) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(std::string_view name) const { return path_ / std::string(name); }

 private:
  std::filesystem::path path_;
};

}  // namespace pathkeep::testing

#endif  // PATHKEEP_TESTING_FIXTURES_H_
