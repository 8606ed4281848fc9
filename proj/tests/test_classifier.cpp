#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "oddrule/classifier.hpp"

using namespace oddrule;

namespace {

std::vector<Mask> masks(std::initializer_list<const char*> rules) {
  std::vector<Mask> out;
  for (const char* r : rules) out.push_back(parse_rule(r));
  return out;
}

// rep -> sorted members, straight from the annotation table
std::map<std::string, std::set<std::string>> expected_partition() {
  std::map<std::string, std::set<std::string>> part;
  for (const RuleInfo& info : kRuleTable) {
    std::string rep = info.same_as ? info.same_as : info.rule;
    part[rep].insert(info.rule);
  }
  return part;
}

std::map<std::string, std::set<std::string>> partition_of(
    const std::vector<CombinatorialClass>& classes) {
  std::map<std::string, std::set<std::string>> part;
  for (const auto& c : classes)
    for (Mask m : c.members)
      part[format_rule(c.representative)].insert(format_rule(m));
  return part;
}

}  // namespace

TEST_CASE("the 86 canonical rules fall into 48 population classes") {
  auto classes = combinatorial_classes();
  REQUIRE(classes.size() == 48);
  CHECK(partition_of(classes) == expected_partition());

  std::vector<std::string> reps;
  for (const auto& c : classes) reps.push_back(format_rule(c.representative));
  CHECK(reps == table_representatives());

  int total = 0;
  for (const auto& c : classes) total += static_cast<int>(c.members.size());
  CHECK(total == 86);
}

TEST_CASE("pinned class contents") {
  auto classes = combinatorial_classes();
  auto find = [&](const char* rep) -> const CombinatorialClass& {
    for (const auto& c : classes)
      if (c.representative == parse_rule(rep)) return c;
    FAIL("class not found");
    return classes.front();
  };

  CHECK(find("003").members == masks({"003", "005", "012", "014", "104"}));
  CHECK(find("033").members ==
        masks({"033", "036", "055", "154", "162", "252", "505"}));
  CHECK(find("077").members == masks({"077", "555"}));
  CHECK(find("376").members == masks({"376", "557"}));
  CHECK(find("365").members == masks({"365"}));

  CHECK(gf_equal(find("365").gf, parse_gf("(1-x)/((1-3*x)*(1-4*x))")));
  REQUIRE(find("003").b_prefix.size() == 26);
  CHECK(find("003").b_prefix[0] == 1);
  CHECK(find("003").b_prefix[1] == 2);
  CHECK(find("003").b_prefix[5] == 32);
  CHECK(find("000").b_prefix[0] == 1);
  CHECK(find("000").b_prefix[1] == 0);
}

TEST_CASE("classification is stable under a longer prefix") {
  CHECK(partition_of(combinatorial_classes(26)) ==
        partition_of(combinatorial_classes(32)));
  CHECK_THROWS_AS(combinatorial_classes(25), std::invalid_argument);
}

TEST_CASE("emit_tables produces one annotated row per canonical rule") {
  auto rows = emit_tables(combinatorial_classes());
  REQUIRE(rows.size() == 86);

  int with_ids = 0;
  for (const TableRow& r : rows) {
    CAPTURE(r.rule);
    const RuleInfo& info = find_rule_info(r.rule);
    CHECK(r.cells == info.cells);
    CHECK(r.class_rep == (info.same_as ? info.same_as : r.rule));
    CHECK(r.poly == rule_poly_string(parse_rule(r.rule)));
    int mask = 0;
    for (int k = 0; k < 9; ++k) mask |= r.bits[k] << (8 - k);
    CHECK(mask == parse_rule(r.rule));
    if (!r.a_id.empty()) ++with_ids;
    CHECK(r.a_id.empty() == (info.same_as != nullptr));
  }
  CHECK(with_ids == 48);

  const TableRow& r757 = *std::find_if(
      rows.begin(), rows.end(),
      [](const TableRow& r) { return r.rule == "757"; });
  CHECK(r757.cells == 8);
  CHECK(r757.bits == std::array<int, 9>{1, 1, 1, 1, 0, 1, 1, 1, 1});
  CHECK(r757.a_id == "A160239");
  CHECK(r757.b_id == "A246030");
  CHECK(r757.class_rep == "757");

  std::string text = table_to_text(rows);
  CHECK(text.find("757  8    111101111  A160239 A246030") != std::string::npos);
  CHECK(text.find("= 033") != std::string::npos);
}

TEST_CASE("explicit transform recipes certify cross-class-looking pairs") {
  Mask r033 = parse_rule("033"), r505 = parse_rule("505");
  std::vector<TransformStep> recipe033{
      StepSubstitutePower{2, 1}, StepTranslate{-1, 0},
      StepSubstitutePower{1, 2}, StepTranslate{0, 1}};
  CHECK(substitution_equivalence_check(r033, r505, recipe033));

  Mask r003 = parse_rule("003"), r012 = parse_rule("012");
  CHECK(substitution_equivalence_check(r003, r012,
                                       {StepSubstituteMonomial{1, 1, 0, 1}}));
  CHECK(substitution_equivalence_check(
      r003, r012,
      {StepTranslate{0, 1}, StepSubstituteMonomial{1, 1, 0, 1},
       StepTranslate{0, -1}}));

  // translations alone can never connect these two: they preserve the
  // difference set of the exponent pairs
  CHECK_FALSE(substitution_equivalence_check(r003, r012, {}));
  CHECK_FALSE(substitution_equivalence_check(r003, r012,
                                             {StepTranslate{0, 1}}));
  CHECK_FALSE(substitution_equivalence_check(r003, r012,
                                             {StepTranslate{1, -1}}));
  CHECK_FALSE(substitution_equivalence_check(r033, r505,
                                             {StepSubstitutePower{2, 1}}));

  // recipes land inside the classification's own classes
  auto classes = combinatorial_classes();
  auto rep_of = [&](Mask m) {
    for (const auto& c : classes)
      for (Mask x : c.members)
        if (x == m) return c.representative;
    return Mask(0xFFFF);
  };
  CHECK(rep_of(r033) == rep_of(r505));
  CHECK(rep_of(r003) == rep_of(r012));
}
