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

#include "pathkeep/graph.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pathkeep/error.h"

namespace pathkeep {

namespace {

// Ranks of labels / relation names in lexicographic order, so adjacency can
// be sorted with integer comparisons.
std::vector<std::uint32_t> lexicographic_ranks(const std::vector<std::string>& names) {
  std::vector<std::uint32_t> order(names.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return names[a] < names[b]; });
  std::vector<std::uint32_t> rank(names.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

std::vector<std::size_t> offsets_by(const std::vector<Edge>& sorted, std::size_t nodes,
                                    NodeId Edge::*key) {
  std::vector<std::size_t> offsets(nodes + 1, 0);
  for (const auto& e : sorted) ++offsets[e.*key + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  return offsets;
}

}  // namespace

KnowledgeGraph assemble_graph(std::vector<std::string> labels,
                              std::vector<RelationType> relations, std::vector<Edge> edges,
                              std::uint64_t templates_fingerprint) {
  KnowledgeGraph g;
  g.labels_ = std::move(labels);
  g.relations_ = std::move(relations);
  g.templates_fingerprint_ = templates_fingerprint;
  g.index_.reserve(g.labels_.size());
  for (NodeId i = 0; i < g.labels_.size(); ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second) {
      throw Error(ErrorKind::kData, "duplicate node label '" + g.labels_[i] + "'");
    }
  }
  for (const auto& e : edges) {
    if (e.head >= g.labels_.size() || e.tail >= g.labels_.size() ||
        e.relation >= g.relations_.size()) {
      throw Error(ErrorKind::kData, "edge references an unknown node or relation");
    }
    if (e.head == e.tail) throw Error(ErrorKind::kData, "self-loop edge in graph data");
  }

  std::vector<std::string> relation_names;
  relation_names.reserve(g.relations_.size());
  for (const auto& r : g.relations_) relation_names.push_back(r.canonical_name);
  const auto rel_rank = lexicographic_ranks(relation_names);
  const auto label_rank = lexicographic_ranks(g.labels_);

  g.in_edges_ = edges;
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    if (a.head != b.head) return a.head < b.head;
    if (a.relation != b.relation) return rel_rank[a.relation] < rel_rank[b.relation];
    return label_rank[a.tail] < label_rank[b.tail];
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].same_triple(edges[i - 1])) {
      throw Error(ErrorKind::kData, "duplicate edge in graph data");
    }
  }
  std::sort(g.in_edges_.begin(), g.in_edges_.end(), [&](const Edge& a, const Edge& b) {
    if (a.tail != b.tail) return a.tail < b.tail;
    if (a.relation != b.relation) return rel_rank[a.relation] < rel_rank[b.relation];
    return label_rank[a.head] < label_rank[b.head];
  });
  g.out_edges_ = std::move(edges);
  g.out_offsets_ = offsets_by(g.out_edges_, g.labels_.size(), &Edge::head);
  g.in_offsets_ = offsets_by(g.in_edges_, g.labels_.size(), &Edge::tail);
  return g;
}

std::optional<NodeId> KnowledgeGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId KnowledgeGraph::id_of(std::string_view label) const {
  auto id = find(label);
  if (!id) throw Error(ErrorKind::kNotFound, "unknown node label '" + std::string(label) + "'");
  return *id;
}

void KnowledgeGraph::check_node(NodeId node) const {
  if (!contains(node)) {
    throw Error(ErrorKind::kNotFound, "unknown node id " + std::to_string(node));
  }
}

const std::string& KnowledgeGraph::label(NodeId node) const {
  check_node(node);
  return labels_[node];
}

const RelationType& KnowledgeGraph::relation(RelationId id) const {
  if (id >= relations_.size()) {
    throw Error(ErrorKind::kNotFound, "unknown relation id " + std::to_string(id));
  }
  return relations_[id];
}

std::optional<RelationId> KnowledgeGraph::find_relation(std::string_view canonical_name) const {
  for (RelationId i = 0; i < relations_.size(); ++i) {
    if (relations_[i].canonical_name == canonical_name) return i;
  }
  return std::nullopt;
}

std::span<const Edge> KnowledgeGraph::out_edges(NodeId node) const {
  check_node(node);
  return std::span<const Edge>(out_edges_).subspan(
      out_offsets_[node], out_offsets_[node + 1] - out_offsets_[node]);
}

std::span<const Edge> KnowledgeGraph::in_edges(NodeId node) const {
  check_node(node);
  return std::span<const Edge>(in_edges_).subspan(in_offsets_[node],
                                                  in_offsets_[node + 1] - in_offsets_[node]);
}

std::vector<Edge> KnowledgeGraph::neighbors(NodeId node, Direction direction) const {
  std::vector<Edge> out;
  if (direction != Direction::kIn) {
    auto span = out_edges(node);
    out.insert(out.end(), span.begin(), span.end());
  }
  if (direction != Direction::kOut) {
    auto span = in_edges(node);
    out.insert(out.end(), span.begin(), span.end());
  }
  return out;
}

GraphStats KnowledgeGraph::stats() const {
  GraphStats s;
  s.node_count = node_count();
  s.edge_count = edge_count();
  std::vector<std::size_t> counts(relations_.size(), 0);
  for (const auto& e : out_edges_) ++counts[e.relation];
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    s.relation_histogram[relations_[i].canonical_name] += counts[i];
  }
  return s;
}

std::size_t GraphBuilder::TripleHash::operator()(const Edge& e) const noexcept {
  std::uint64_t h = (static_cast<std::uint64_t>(e.head) << 32) | e.tail;
  h ^= static_cast<std::uint64_t>(e.relation) * 0x9e3779b97f4a7c15ull;
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 32;
  return static_cast<std::size_t>(h);
}

GraphBuilder::GraphBuilder(const TemplateTable& templates) : templates_(templates) {}

NodeId GraphBuilder::intern_label(std::string_view label) {
  auto [it, inserted] = index_.try_emplace(std::string(label), 0);
  if (inserted) {
    if (labels_.size() >= std::numeric_limits<NodeId>::max()) {
      throw Error(ErrorKind::kData, "node id space exhausted");
    }
    it->second = static_cast<NodeId>(labels_.size());
    labels_.emplace_back(label);
  }
  return it->second;
}

RelationId GraphBuilder::intern_relation(std::string_view raw) {
  if (auto it = relation_cache_.find(std::string(raw)); it != relation_cache_.end()) {
    return it->second;
  }
  auto type = templates_.resolve(raw);
  RelationId id;
  if (auto it = relation_index_.find(type.canonical_name); it != relation_index_.end()) {
    id = it->second;
  } else {
    if (relations_.size() >= std::numeric_limits<RelationId>::max()) {
      throw Error(ErrorKind::kData, "relation id space exhausted");
    }
    id = static_cast<RelationId>(relations_.size());
    relation_index_.emplace(type.canonical_name, id);
    relations_.push_back(std::move(type));
  }
  relation_cache_.emplace(std::string(raw), id);
  return id;
}

AddResult GraphBuilder::add(std::string_view head, std::string_view relation,
                            std::string_view tail, float weight) {
  if (head.empty() || tail.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "edge endpoint label is empty");
  }
  if (head == tail) return AddResult::kSelfLoop;
  Edge edge{intern_label(head), intern_relation(relation), intern_label(tail), weight};
  auto [it, inserted] = seen_.try_emplace(edge, edges_.size());
  if (!inserted) {
    auto& kept = edges_[it->second];
    kept.weight = std::max(kept.weight, weight);
    return AddResult::kDuplicate;
  }
  edges_.push_back(edge);
  return AddResult::kAdded;
}

KnowledgeGraph GraphBuilder::build() && {
  if (edges_.empty()) throw Error(ErrorKind::kData, "graph is empty: no edges were kept");
  seen_.clear();
  return assemble_graph(std::move(labels_), std::move(relations_), std::move(edges_),
                        templates_.fingerprint());
}

}  // namespace pathkeep
