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

#ifndef PATHKEEP_GRAPH_H_
#define PATHKEEP_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pathkeep/relations.h"

namespace pathkeep {

using NodeId = std::uint32_t;
using RelationId = std::uint16_t;

enum class Direction { kOut, kIn, kBoth };

struct Edge {
  NodeId head = 0;
  RelationId relation = 0;
  NodeId tail = 0;
  float weight = 1.0f;

  bool same_triple(const Edge& other) const {
    return head == other.head && relation == other.relation && tail == other.tail;
  }
};

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::map<std::string, std::size_t> relation_histogram;
};

/// Immutable multi-relational graph with label-sorted adjacency.
///
/// Out edges of a node are ordered by (relation canonical name, tail label),
/// in edges by (relation canonical name, head label). Both views hold the
/// same edge set. Safe for concurrent readers.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return out_edges_.size(); }
  std::size_t relation_count() const { return relations_.size(); }

  std::optional<NodeId> find(std::string_view label) const;
  /// Throws kNotFound for unknown labels.
  NodeId id_of(std::string_view label) const;
  const std::string& label(NodeId node) const;
  bool contains(NodeId node) const { return node < labels_.size(); }

  const RelationType& relation(RelationId id) const;
  std::span<const RelationType> relations() const { return relations_; }
  std::optional<RelationId> find_relation(std::string_view canonical_name) const;

  std::span<const Edge> out_edges(NodeId node) const;
  std::span<const Edge> in_edges(NodeId node) const;

  /// Deterministic neighbor query. kBoth yields out edges, then in edges.
  /// Throws kNotFound for unknown node ids.
  std::vector<Edge> neighbors(NodeId node, Direction direction) const;

  /// All edges in canonical order (grouped by head, adjacency order within).
  std::span<const Edge> edges() const { return out_edges_; }

  GraphStats stats() const;

  std::uint64_t templates_fingerprint() const { return templates_fingerprint_; }

 private:
  friend class GraphBuilder;
  friend KnowledgeGraph assemble_graph(std::vector<std::string> labels,
                                       std::vector<RelationType> relations,
                                       std::vector<Edge> edges,
                                       std::uint64_t templates_fingerprint);

  void check_node(NodeId node) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<RelationType> relations_;
  std::vector<Edge> out_edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Edge> in_edges_;
  std::vector<std::size_t> in_offsets_;
  std::uint64_t templates_fingerprint_ = 0;
};

/// Builds a graph from labels, an interned relation vocabulary, and edges.
/// Edges must already be deduplicated and loop-free.
KnowledgeGraph assemble_graph(std::vector<std::string> labels,
                              std::vector<RelationType> relations,
                              std::vector<Edge> edges,
                              std::uint64_t templates_fingerprint);

enum class AddResult { kAdded, kDuplicate, kSelfLoop };

/// Single-writer accumulator that interns labels and merged relations,
/// drops self-loops and duplicate triples.
class GraphBuilder {
 public:
  explicit GraphBuilder(const TemplateTable& templates = TemplateTable::builtin());

  /// `relation` is a raw name; it is merged through the template table.
  AddResult add(std::string_view head, std::string_view relation, std::string_view tail,
                float weight = 1.0f);

  std::size_t edge_count() const { return edges_.size(); }

  /// Throws kData when no edges were added.
  KnowledgeGraph build() &&;

 private:
  struct TripleHash {
    std::size_t operator()(const Edge& e) const noexcept;
  };
  struct TripleEq {
    bool operator()(const Edge& a, const Edge& b) const noexcept { return a.same_triple(b); }
  };

  NodeId intern_label(std::string_view label);
  RelationId intern_relation(std::string_view raw);

  const TemplateTable& templates_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<RelationType> relations_;
  std::unordered_map<std::string, RelationId> relation_cache_;
  std::unordered_map<std::string, RelationId> relation_index_;
  std::vector<Edge> edges_;
  std::unordered_map<Edge, std::size_t, TripleHash, TripleEq> seen_;
};

}  // namespace pathkeep

#endif  // PATHKEEP_GRAPH_H_
