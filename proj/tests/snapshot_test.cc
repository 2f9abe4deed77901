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

#include <gtest/gtest.h>

#include <sstream>

#include "pathkeep/error.h"
#include "pathkeep/ingest.h"
#include "testing/fixtures.h"
#include "testing/random_graph.h"

namespace pathkeep {
namespace {

std::string fixture_text(const KnowledgeGraph& graph) {
  std::ostringstream out;
  write_fixture(graph, out);
  return out.str();
}

std::string snapshot_bytes(const KnowledgeGraph& graph) {
  std::ostringstream out;
  save_snapshot(graph, out);
  return out.str();
}

void expect_same_graph(const KnowledgeGraph& a, const KnowledgeGraph& b) {
  ASSERT_EQ(a.node_count(), b.node_count());
  ASSERT_EQ(a.edge_count(), b.edge_count());
  for (NodeId n = 0; n < a.node_count(); ++n) EXPECT_EQ(a.label(n), b.label(n));
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    EXPECT_TRUE(a.edges()[i].same_triple(b.edges()[i]));
    EXPECT_EQ(a.edges()[i].weight, b.edges()[i].weight);
  }
  ASSERT_EQ(a.relation_count(), b.relation_count());
  for (RelationId r = 0; r < a.relation_count(); ++r) EXPECT_EQ(a.relation(r), b.relation(r));
  EXPECT_EQ(a.templates_fingerprint(), b.templates_fingerprint());
}

TEST(Snapshot, RoundTripPreservesGraph) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = testing::make_random_graph(seed, 200, 600);
    std::istringstream in(snapshot_bytes(g.graph));
    auto loaded = load_snapshot(in);
    expect_same_graph(g.graph, loaded);
    EXPECT_EQ(fixture_text(g.graph), fixture_text(loaded));
    for (NodeId n = 0; n < loaded.node_count(); ++n) {
      auto a = g.graph.neighbors(n, Direction::kBoth);
      auto b = loaded.neighbors(n, Direction::kBoth);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].same_triple(b[i]));
    }
  }
}

TEST(Snapshot, BytesAreDeterministic) {
  auto graph = testing::graph_from_file("people_work.tsv");
  auto again = testing::graph_from_file("people_work.tsv");
  EXPECT_EQ(snapshot_bytes(graph), snapshot_bytes(again));
  std::istringstream in(snapshot_bytes(graph));
  EXPECT_EQ(snapshot_bytes(load_snapshot(in)), snapshot_bytes(graph));
}

TEST(Snapshot, FileRoundTrip) {
  testing::TempDir dir;
  auto graph = testing::graph_from_file("cable.tsv");
  save_snapshot(graph, dir / "g.pkg");
  expect_same_graph(graph, load_snapshot(dir / "g.pkg"));
}

TEST(Snapshot, CorruptionDetected) {
  auto bytes = snapshot_bytes(testing::graph_from_file("people_work.tsv"));
  auto expect_data_error = [](std::string data) {
    std::istringstream in(std::move(data));
    try {
      load_snapshot(in);
      ADD_FAILURE() << "expected a data error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kData) << e.what();
    }
  };
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  expect_data_error(bad_magic);

  auto bad_version = bytes;
  bad_version[8] = 9;
  expect_data_error(bad_version);

  auto flipped = bytes;
  flipped[bytes.size() / 2] ^= 0x5a;
  expect_data_error(flipped);

  expect_data_error(bytes.substr(0, bytes.size() - 3));
  expect_data_error("");
}

TEST(Snapshot, MissingFileIsNotFound) {
  try {
    load_snapshot(std::filesystem::path("/nonexistent/graph.pkg"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotFound);
  }
}

}  // namespace
}  // namespace pathkeep
