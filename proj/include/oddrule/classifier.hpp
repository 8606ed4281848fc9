#pragma once
// Combinatorial equivalence: rules whose population sequences agree at every
// generation.  Canonical rules are grouped by exact equality of a long
// b-prefix, then each group is certified by equality of guessed generating
// functions; prefix grouping and GF certification must agree or the whole
// classification is rejected.  Also: explicit transform-step checking for
// hand-supplied equivalence recipes.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "oddrule/catalog.hpp"
#include "oddrule/genfunc.hpp"
#include "oddrule/rule_table.hpp"
#include "oddrule/sequence.hpp"

namespace oddrule {

struct CombinatorialClass {
  Mask representative = 0;    // smallest member by octal value
  std::vector<Mask> members;  // canonical rules, sorted ascending
  RationalGF gf;              // guessed from the representative's b-prefix
  std::vector<BigInt> b_prefix;
};

struct ClassifierError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group the 86 canonical rules by b-prefix equality and certify each group
// (internal GF agreement, cross-group GF distinctness).  prefix_len >= 26.
inline std::vector<CombinatorialClass> combinatorial_classes(
    int prefix_len = 26) {
  if (prefix_len < 26)
    throw std::invalid_argument("combinatorial_classes: prefix_len must be >= 26");
  std::map<std::vector<BigInt>, std::vector<Mask>> groups;
  for (const auto& c : enumerate_canonical())
    groups[b_seq_window(c.canonical, prefix_len - 1)].push_back(c.canonical);
  std::vector<CombinatorialClass> out;
  for (auto& [prefix, members] : groups) {
    CombinatorialClass cls;
    cls.b_prefix = prefix;
    cls.members = members;  // map iteration found them in ascending mask order
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    bool first = true;
    for (Mask m : cls.members) {
      std::vector<BigInt> terms = b_seq_window(m, prefix_len - 1);
      RationalGF gf;
      try {
        Recurrence rec = guess_recurrence(terms);
        gf = recurrence_to_gf(rec, terms);
      } catch (const GuessError& e) {
        throw ClassifierError("rule " + format_rule(m) +
                              ": no generating function found: " + e.what());
      }
      if (first) {
        cls.gf = gf;
        first = false;
      } else if (!gf_equal(cls.gf, gf)) {
        throw ClassifierError(
            "rules " + format_rule(cls.representative) + " and " +
            format_rule(m) +
            " share a b-prefix but have unequal generating functions");
      }
    }
    out.push_back(std::move(cls));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (gf_equal(out[i].gf, out[j].gf))
        throw ClassifierError(
            "rules " + format_rule(out[i].representative) + " and " +
            format_rule(out[j].representative) +
            " have equal generating functions but different b-prefixes");
  std::sort(out.begin(), out.end(),
            [](const CombinatorialClass& a, const CombinatorialClass& b) {
              return a.representative < b.representative;
            });
  return out;
}

// ---------------------------------------------------------------------------
// Per-rule table rows combining the catalog, the classification, and the
// published sequence ids.

struct TableRow {
  std::string rule;
  int cells = 0;
  std::array<int, 9> bits{};
  std::string poly;
  std::string class_rep;  // representative of the rule's class
  std::string a_id;       // empty unless this rule is the representative
  std::string b_id;
};

inline std::vector<TableRow> emit_tables(
    const std::vector<CombinatorialClass>& classes) {
  std::map<Mask, Mask> rep_of;
  for (const auto& c : classes)
    for (Mask m : c.members) rep_of[m] = c.representative;
  std::vector<TableRow> rows;
  for (const auto& c : enumerate_canonical()) {
    TableRow r;
    r.rule = format_rule(c.canonical);
    r.cells = c.cell_count;
    for (int k = 0; k < 9; ++k) r.bits[k] = (c.canonical >> (8 - k)) & 1;
    r.poly = rule_poly_string(c.canonical);
    auto it = rep_of.find(c.canonical);
    if (it == rep_of.end())
      throw ClassifierError("rule " + r.rule + " missing from classification");
    r.class_rep = format_rule(it->second);
    if (it->second == c.canonical) {
      const RuleInfo& info = find_rule_info(r.rule);
      if (info.a_id) r.a_id = info.a_id;
      if (info.b_id) r.b_id = info.b_id;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// Plain-text rendering, one row per rule: ids for representatives, an
// "= NNN" mark for the rest.
inline std::string table_to_text(const std::vector<TableRow>& rows) {
  std::string s = "rule cells bits      ids/class  poly\n";
  for (const TableRow& r : rows) {
    s += r.rule + "  " + std::to_string(r.cells) + "    ";
    for (int b : r.bits) s += static_cast<char>('0' + b);
    s += "  ";
    if (!r.a_id.empty())
      s += r.a_id + " " + r.b_id;
    else
      s += "= " + r.class_rep + "          ";
    s += "  " + r.poly + "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Hand-supplied equivalence recipes as explicit transform steps.

struct StepSubstitutePower {
  std::int64_t kx, ky;
};
struct StepTranslate {
  std::int64_t dx, dy;
};
// x -> x^a y^b, y -> x^c y^d (unimodular monomial substitution)
struct StepSubstituteMonomial {
  std::int64_t a, b, c, d;
};
using TransformStep =
    std::variant<StepSubstitutePower, StepTranslate, StepSubstituteMonomial>;

inline LaurentPoly apply_transform(LaurentPoly p,
                                   const std::vector<TransformStep>& steps) {
  for (const TransformStep& s : steps)
    p = std::visit(
        [&p](const auto& st) -> LaurentPoly {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, StepSubstitutePower>)
            return p.substitute_power(st.kx, st.ky);
          else if constexpr (std::is_same_v<T, StepTranslate>)
            return p.translate(st.dx, st.dy);
          else
            return p.substitute_monomial(st.a, st.b, st.c, st.d);
        },
        s);
  return p;
}

// True iff the steps carry ruleA's polynomial exactly onto ruleB's.
inline bool substitution_equivalence_check(
    Mask rule_a, Mask rule_b, const std::vector<TransformStep>& steps) {
  return apply_transform(mask_to_poly(rule_a), steps) == mask_to_poly(rule_b);
}

}  // namespace oddrule
