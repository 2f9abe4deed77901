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

#ifndef PATHKEEP_SNAPSHOT_H_
#define PATHKEEP_SNAPSHOT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "pathkeep/graph.h"

namespace pathkeep {

inline constexpr std::uint32_t kSnapshotVersion = 1;

// Binary layout, little-endian:
//   magic "PKGRAPH\0" | u32 version | u64 template fingerprint
//   u32 relation count | per relation: 3 length-prefixed strings
//   u32 node count     | per node: length-prefixed label
//   u64 edge count     | per edge: u32 head, u16 relation, u32 tail, f32 weight
//   u64 FNV-1a checksum of everything after the magic
void save_snapshot(const KnowledgeGraph& graph, std::ostream& out);
void save_snapshot(const KnowledgeGraph& graph, const std::filesystem::path& path);

/// Throws kData on bad magic, unsupported version, truncation or checksum
/// mismatch; kNotFound when the file cannot be opened.
KnowledgeGraph load_snapshot(std::istream& in);
KnowledgeGraph load_snapshot(const std::filesystem::path& path);

}  // namespace pathkeep

#endif  // PATHKEEP_SNAPSHOT_H_
