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

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "pathkeep/error.h"

namespace pathkeep {
namespace {

struct GroupCase {
  std::vector<std::string> members;
  std::string canonical;
  std::string surface;
};

std::vector<GroupCase> merge_groups() {
  return {
      {{"antonym", "distinctfrom"}, "antonym", "is the antonym of"},
      {{"atlocation", "locatednear"}, "atlocation", "is at location of"},
      {{"causes", "causesdesire", "motivatedby"}, "causes", "causes"},
      {{"relatedto", "similarto", "synonym"}, "relatedto", "is related to"},
      {{"isa", "instanceof", "definedas"}, "isa", "is a type of"},
  };
}

TEST(MergeRelation, MergeGroupsCollapseToCanonicalType) {
  for (const auto& group : merge_groups()) {
    for (const auto& member : group.members) {
      auto type = merge_relation(member);
      EXPECT_EQ(type.canonical_name, group.canonical) << member;
      EXPECT_EQ(type.surface_text, group.surface) << member;
    }
  }
}

TEST(MergeRelation, AcceptsUrisAndCamelCase) {
  EXPECT_EQ(merge_relation("/r/DistinctFrom").canonical_name, "antonym");
  EXPECT_EQ(merge_relation("/r/DistinctFrom").surface_text, "is the antonym of");
  EXPECT_EQ(merge_relation("/r/Synonym").canonical_name, "relatedto");
  EXPECT_EQ(merge_relation("/r/Synonym").surface_text, "is related to");
  EXPECT_EQ(merge_relation("MotivatedByGoal").canonical_name, "causes");
  EXPECT_EQ(merge_relation("/r/LocatedNear/").canonical_name, "atlocation");
  EXPECT_EQ(merge_relation("similar_to").canonical_name, "relatedto");
}

TEST(MergeRelation, IdempotentOnOwnOutput) {
  for (const auto& raw : {"/r/Antonym", "/r/DistinctFrom", "UsedFor", "RequiredFor", "done_by",
                          "/r/InstanceOf", "HasPrerequisite", "URLOf"}) {
    auto once = merge_relation(raw);
    auto twice = merge_relation(once.canonical_name);
    EXPECT_EQ(once, twice) << raw;
  }
}

TEST(MergeRelation, UnknownRelationsGetGeneratedTemplate) {
  auto required = merge_relation("RequiredFor");
  EXPECT_EQ(required.canonical_name, "required_for");
  EXPECT_EQ(required.surface_text, "is required for");
  EXPECT_EQ(required.inverse_surface_text, "is the inverse-required for of");

  auto done = merge_relation("done_by");
  EXPECT_EQ(done.surface_text, "is done by");

  auto color = merge_relation("/r/HasColour");
  EXPECT_EQ(color.canonical_name, "has_colour");
  EXPECT_EQ(color.surface_text, "is has colour of");
}

TEST(MergeRelation, EveryTemplateIsNonEmptyAndPlaceholderFree) {
  for (const auto& type : TemplateTable::builtin().entries()) {
    EXPECT_FALSE(type.surface_text.empty()) << type.canonical_name;
    EXPECT_FALSE(type.inverse_surface_text.empty()) << type.canonical_name;
    EXPECT_EQ(type.surface_text.find('<'), std::string::npos);
    EXPECT_EQ(type.surface_text.find('{'), std::string::npos);
  }
}

TEST(SplitRelationWords, HandlesCamelSnakeAndAcronyms) {
  EXPECT_EQ(split_relation_words("UsedFor"), (std::vector<std::string>{"used", "for"}));
  EXPECT_EQ(split_relation_words("done_by"), (std::vector<std::string>{"done", "by"}));
  EXPECT_EQ(split_relation_words("URLOf"), (std::vector<std::string>{"url", "of"}));
  EXPECT_TRUE(split_relation_words("__").empty());
}

TEST(TemplateTable, LoadOverridesAndExtends) {
  std::istringstream in(
      "# custom templates\n"
      "isa\tis a\thas the subtype\n"
      "\n"
      "required_for\tis needed for\tneeds\n");
  auto table = TemplateTable::load(in);
  EXPECT_EQ(table.resolve("/r/InstanceOf").surface_text, "is a");
  EXPECT_EQ(table.resolve("RequiredFor").surface_text, "is needed for");
  EXPECT_EQ(table.resolve("RequiredFor").inverse_surface_text, "needs");
  EXPECT_NE(table.fingerprint(), TemplateTable::builtin().fingerprint());
}

TEST(TemplateTable, FingerprintIsStable) {
  std::istringstream empty("");
  EXPECT_EQ(TemplateTable::load(empty).fingerprint(), TemplateTable::builtin().fingerprint());
}

TEST(TemplateTable, RejectsBadRows) {
  std::istringstream two_columns("isa\tis a\n");
  EXPECT_THROW(TemplateTable::load(two_columns), Error);
  std::istringstream placeholder("isa\t{head} is a {tail}\tx\n");
  EXPECT_THROW(TemplateTable::load(placeholder), Error);
  std::istringstream empty_text("isa\t\tx\n");
  EXPECT_THROW(TemplateTable::load(empty_text), Error);
}

}  // namespace
}  // namespace pathkeep
