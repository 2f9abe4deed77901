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

#include "pathkeep/snapshot.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <type_traits>

#include "pathkeep/error.h"
#include "support.h"

namespace pathkeep {

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot encoding assumes a little-endian host");

constexpr char kMagic[8] = {'P', 'K', 'G', 'R', 'A', 'P', 'H', '\0'};

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  template <typename T>
  void put(T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    write(bytes, sizeof(T));
  }

  void put_string(const std::string& s) {
    put(static_cast<std::uint32_t>(s.size()));
    write(s.data(), s.size());
  }

  std::uint64_t checksum() const { return hash_; }

 private:
  void write(const char* data, std::size_t n) {
    hash_ = detail::fnv1a64(std::string_view(data, n), hash_);
    out_.write(data, static_cast<std::streamsize>(n));
  }

  std::ostream& out_;
  std::uint64_t hash_ = 14695981039346656037ull;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  template <typename T>
  T get() {
    char bytes[sizeof(T)];
    read(bytes, sizeof(T));
    T value;
    std::memcpy(&value, bytes, sizeof(T));
    return value;
  }

  std::string get_string() {
    auto n = get<std::uint32_t>();
    if (n > (1u << 24)) throw Error(ErrorKind::kData, "snapshot string length is implausible");
    std::string s(n, '\0');
    read(s.data(), n);
    return s;
  }

  std::uint64_t checksum() const { return hash_; }

 private:
  void read(char* data, std::size_t n) {
    in_.read(data, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw Error(ErrorKind::kData, "snapshot is truncated");
    }
    hash_ = detail::fnv1a64(std::string_view(data, n), hash_);
  }

  std::istream& in_;
  std::uint64_t hash_ = 14695981039346656037ull;
};

}  // namespace

void save_snapshot(const KnowledgeGraph& graph, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  Writer w(out);
  w.put(kSnapshotVersion);
  w.put(graph.templates_fingerprint());
  w.put(static_cast<std::uint32_t>(graph.relation_count()));
  for (const auto& r : graph.relations()) {
    w.put_string(r.canonical_name);
    w.put_string(r.surface_text);
    w.put_string(r.inverse_surface_text);
  }
  w.put(static_cast<std::uint32_t>(graph.node_count()));
  for (NodeId i = 0; i < graph.node_count(); ++i) w.put_string(graph.label(i));
  w.put(static_cast<std::uint64_t>(graph.edge_count()));
  for (const auto& e : graph.edges()) {
    w.put(e.head);
    w.put(e.relation);
    w.put(e.tail);
    w.put(e.weight);
  }
  const auto checksum = w.checksum();
  out.write(reinterpret_cast<const char*>(&checksum), sizeof(checksum));
  if (!out) throw Error(ErrorKind::kData, "failed writing snapshot");
}

void save_snapshot(const KnowledgeGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kNotFound, "cannot write snapshot '" + path.string() + "'");
  save_snapshot(graph, out);
}

KnowledgeGraph load_snapshot(std::istream& in) {
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  if (in.gcount() != sizeof(magic) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw Error(ErrorKind::kData, "not a pathkeep graph snapshot (bad magic)");
  }
  Reader r(in);
  auto version = r.get<std::uint32_t>();
  if (version != kSnapshotVersion) {
    throw Error(ErrorKind::kData, "unsupported snapshot version " + std::to_string(version));
  }
  auto fingerprint = r.get<std::uint64_t>();

  auto relation_count = r.get<std::uint32_t>();
  if (relation_count > 65535) throw Error(ErrorKind::kData, "too many relations in snapshot");
  std::vector<RelationType> relations;
  relations.reserve(relation_count);
  for (std::uint32_t i = 0; i < relation_count; ++i) {
    RelationType t;
    t.canonical_name = r.get_string();
    t.surface_text = r.get_string();
    t.inverse_surface_text = r.get_string();
    relations.push_back(std::move(t));
  }

  auto node_count = r.get<std::uint32_t>();
  std::vector<std::string> labels;
  labels.reserve(node_count);
  for (std::uint32_t i = 0; i < node_count; ++i) labels.push_back(r.get_string());

  auto edge_count = r.get<std::uint64_t>();
  if (edge_count > (1ull << 34)) throw Error(ErrorKind::kData, "edge count is implausible");
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    Edge e;
    e.head = r.get<NodeId>();
    e.relation = r.get<RelationId>();
    e.tail = r.get<NodeId>();
    e.weight = r.get<float>();
    edges.push_back(e);
  }

  const auto expected = r.checksum();
  std::uint64_t stored = 0;
  in.read(reinterpret_cast<char*>(&stored), sizeof(stored));
  if (in.gcount() != sizeof(stored)) throw Error(ErrorKind::kData, "snapshot is truncated");
  if (stored != expected) throw Error(ErrorKind::kData, "snapshot checksum mismatch");

  return assemble_graph(std::move(labels), std::move(relations), std::move(edges), fingerprint);
}

KnowledgeGraph load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kNotFound, "cannot open snapshot '" + path.string() + "'");
  return load_snapshot(in);
}

}  // namespace pathkeep
