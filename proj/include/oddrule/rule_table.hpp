#pragma once
// Catalog of the 86 canonical rules: cell count, the published OEIS ids for
// the a- and b-sequences when the rule represents a combinatorial class, or
// the representative it collapses to otherwise.  48 rules carry ids.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddrule/catalog.hpp"

namespace oddrule {

struct RuleInfo {
  const char* rule;     // canonical 3-digit octal string
  int cells;
  const char* a_id;     // OEIS id of the a-sequence, or nullptr
  const char* b_id;     // OEIS id of the b-sequence, or nullptr
  const char* same_as;  // representative this rule matches, or nullptr
};

inline constexpr RuleInfo kRuleTable[86] = {
    {"000", 0, "A000004", "A000004", nullptr},
    {"001", 1, "A000012", "A000012", nullptr},
    {"003", 2, "A001316", "A000079", nullptr},
    {"005", 2, nullptr, nullptr, "003"},
    {"012", 2, nullptr, nullptr, "003"},
    {"014", 2, nullptr, nullptr, "003"},
    {"104", 2, nullptr, nullptr, "003"},
    {"007", 3, "A071053", "A001045", nullptr},
    {"013", 3, "A048883", "A000244", nullptr},
    {"015", 3, nullptr, nullptr, "013"},
    {"016", 3, nullptr, nullptr, "013"},
    {"025", 3, nullptr, nullptr, "013"},
    {"105", 3, nullptr, nullptr, "013"},
    {"106", 3, nullptr, nullptr, "013"},
    {"124", 3, nullptr, nullptr, "007"},
    {"141", 3, nullptr, nullptr, "013"},
    {"142", 3, nullptr, nullptr, "013"},
    {"017", 4, "A253064", "A087206", nullptr},
    {"027", 4, nullptr, nullptr, "017"},
    {"033", 4, "A102376", "A000302", nullptr},
    {"035", 4, "A255297", "A027649", nullptr},
    {"036", 4, nullptr, nullptr, "033"},
    {"055", 4, nullptr, nullptr, "033"},
    {"107", 4, nullptr, nullptr, "017"},
    {"116", 4, nullptr, nullptr, "035"},
    {"125", 4, nullptr, nullptr, "017"},
    {"126", 4, nullptr, nullptr, "017"},
    {"143", 4, "A255298", "A255299", nullptr},
    {"145", 4, nullptr, nullptr, "035"},
    {"146", 4, "A255302", "A255303", nullptr},
    {"151", 4, nullptr, nullptr, "017"},
    {"152", 4, nullptr, nullptr, "146"},
    {"154", 4, nullptr, nullptr, "033"},
    {"161", 4, "A255300", "A255301", nullptr},
    {"162", 4, nullptr, nullptr, "033"},
    {"252", 4, nullptr, nullptr, "033"},
    {"505", 4, nullptr, nullptr, "033"},
    {"037", 5, "A255445", "A001834", nullptr},
    {"057", 5, "A072272", "A007483", nullptr},
    {"117", 5, "A255304", "A255442", nullptr},
    {"127", 5, nullptr, nullptr, "117"},
    {"136", 5, nullptr, nullptr, "037"},
    {"147", 5, "A255443", "A255444", nullptr},
    {"153", 5, "A255454", "A255455", nullptr},
    {"155", 5, nullptr, nullptr, "037"},
    {"156", 5, "A255452", "A255453", nullptr},
    {"163", 5, "A255456", "A255457", nullptr},
    {"165", 5, "A255446", "A255447", nullptr},
    {"166", 5, "A255450", "A255451", nullptr},
    {"171", 5, "A253065", "A253067", nullptr},
    {"172", 5, nullptr, nullptr, "166"},
    {"174", 5, nullptr, nullptr, "057"},
    {"253", 5, nullptr, nullptr, "156"},
    {"255", 5, "A255458", "A255459", nullptr},
    {"272", 5, nullptr, nullptr, "057"},
    {"345", 5, "A255448", "A255449", nullptr},
    {"507", 5, nullptr, nullptr, "057"},
    {"525", 5, nullptr, nullptr, "057"},
    {"077", 6, "A246037", "A246036", nullptr},
    {"137", 6, "A255464", "A255465", nullptr},
    {"157", 6, "A255468", "A255469", nullptr},
    {"167", 6, "A255466", "A255467", nullptr},
    {"173", 6, "A255475", "A255476", nullptr},
    {"175", 6, "A253069", "A253070", nullptr},
    {"176", 6, "A255470", "A255471", nullptr},
    {"257", 6, "A255473", "A255474", nullptr},
    {"273", 6, nullptr, nullptr, "176"},
    {"275", 6, "A253066", "A253068", nullptr},
    {"347", 6, "A253100", "A253101", nullptr},
    {"356", 6, "A247640", "A164908", nullptr},
    {"365", 6, "A255462", "A255463", nullptr},
    {"517", 6, "A255460", "A255461", nullptr},
    {"527", 6, "A255295", "A255296", nullptr},
    {"555", 6, nullptr, nullptr, "077"},
    {"177", 7, "A255277", "A255278", nullptr},
    {"277", 7, "A255279", "A255280", nullptr},
    {"357", 7, "A253071", "A253072", nullptr},
    {"367", 7, "A255281", "A255282", nullptr},
    {"376", 7, "A247666", "A102900", nullptr},
    {"537", 7, "A255283", "A255284", nullptr},
    {"557", 7, nullptr, nullptr, "376"},
    {"575", 7, "A246039", "A246038", nullptr},
    {"377", 8, "A255275", "A255276", nullptr},
    {"577", 8, "A253104", "A253105", nullptr},
    {"757", 8, "A160239", "A246030", nullptr},
    {"777", 9, "A246035", "A139818", nullptr},
};

inline const RuleInfo& find_rule_info(const std::string& rule) {
  for (const RuleInfo& r : kRuleTable)
    if (rule == r.rule) return r;
  throw std::out_of_range("rule " + rule + " is not canonical");
}

// The 48 rules that carry sequence ids.
// Rules that own their class (no same_as mark), ascending by octal value.
inline std::vector<std::string> table_representatives() {
  std::vector<std::string> out;
  for (const RuleInfo& r : kRuleTable)
    if (r.a_id) out.emplace_back(r.rule);
  std::sort(out.begin(), out.end());
  return out;
}

// Every sequence id referenced by the catalog, plus the run-length-structure
// sequence A245562 that the b->a transform is built on: 95 distinct ids.
inline std::vector<std::string> concerned_ids() {
  std::set<std::string> ids;
  for (const RuleInfo& r : kRuleTable) {
    if (r.a_id) ids.insert(r.a_id);
    if (r.b_id) ids.insert(r.b_id);
  }
  ids.insert("A245562");
  return {ids.begin(), ids.end()};
}

}  // namespace oddrule
