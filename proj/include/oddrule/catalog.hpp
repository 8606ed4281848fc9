#pragma once
// Octal rule numbering for 3x3 neighborhoods, the trivial-equivalence group
// (8 square symmetries + in-window translations), canonical representatives,
// and the enumeration of the 86 equivalence classes.
//
// A mask is the 9-bit rule value itself.  Bit k (reading the grid row-major,
// top-left first) sits at shift 8-k, so the three octal digits of the value
// are exactly the three rows.  Cell k corresponds to the monomial exponent
// (i, j) = (k%3 - 1, 1 - k/3): top row is y^1, left column x^-1.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddrule/laurent.hpp"

namespace oddrule {

using Mask = std::uint16_t;  // 9-bit rule value, 0..0777

struct CanonicalClass {
  Mask canonical = 0;
  std::vector<Mask> orbit;  // sorted ascending, includes canonical
  int cell_count = 0;
};

inline Mask parse_rule(const std::string& text) {
  if (text.size() != 3)
    throw std::invalid_argument("rule '" + text +
                                "': expected exactly 3 octal digits");
  Mask v = 0;
  for (char c : text) {
    if (c < '0' || c > '7')
      throw std::invalid_argument("rule '" + text + "': character '" +
                                  std::string(1, c) + "' is not an octal digit");
    v = static_cast<Mask>((v << 3) | (c - '0'));
  }
  return v;
}

inline std::string format_rule(Mask m) {
  std::string s(3, '0');
  s[0] = static_cast<char>('0' + ((m >> 6) & 7));
  s[1] = static_cast<char>('0' + ((m >> 3) & 7));
  s[2] = static_cast<char>('0' + (m & 7));
  return s;
}

inline int cell_count(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

// Exponent pair of grid cell k (row-major, top-left first).
inline LaurentPoly::Exp cell_exponent(int k) {
  return {k % 3 - 1, 1 - k / 3};
}

inline LaurentPoly mask_to_poly(Mask m) {
  std::vector<LaurentPoly::Exp> exps;
  for (int k = 0; k < 9; ++k)
    if ((m >> (8 - k)) & 1) exps.push_back(cell_exponent(k));
  return LaurentPoly::from_exponents(exps);
}

// Inverse of mask_to_poly; rejects support outside the 3x3 window.
inline Mask poly_to_mask(const LaurentPoly& p) {
  Mask m = 0;
  for (const auto& [i, j] : p.support()) {
    if (i < -1 || i > 1 || j < -1 || j > 1)
      throw std::domain_error("poly_to_mask: exponent (" + std::to_string(i) +
                              "," + std::to_string(j) +
                              ") is outside the 3x3 window");
    int k = (1 - static_cast<int>(j)) * 3 + (static_cast<int>(i) + 1);
    m |= Mask(1) << (8 - k);
  }
  return m;
}

namespace detail {

// The 8 symmetries of the square as index permutations on the 9 cells:
// kSymPerm[s][k] is the cell index that cell k lands on.
inline const std::array<std::array<int, 9>, 8>& sym_perms() {
  static const std::array<std::array<int, 9>, 8> perms = [] {
    // Exponent maps (i,j) -> (i',j') for: identity, rotations by 90/180/270,
    // the two axis mirrors, and the two diagonal mirrors.
    struct M { int a, b, c, d; };  // i' = a*i + b*j, j' = c*i + d*j
    constexpr M maps[8] = {{1, 0, 0, 1},  {0, -1, 1, 0}, {-1, 0, 0, -1},
                           {0, 1, -1, 0}, {-1, 0, 0, 1}, {1, 0, 0, -1},
                           {0, 1, 1, 0},  {0, -1, -1, 0}};
    std::array<std::array<int, 9>, 8> out{};
    for (int s = 0; s < 8; ++s)
      for (int k = 0; k < 9; ++k) {
        auto [i, j] = cell_exponent(k);
        int ni = maps[s].a * static_cast<int>(i) + maps[s].b * static_cast<int>(j);
        int nj = maps[s].c * static_cast<int>(i) + maps[s].d * static_cast<int>(j);
        out[s][k] = (1 - nj) * 3 + (ni + 1);
      }
    return out;
  }();
  return perms;
}

inline Mask apply_perm(Mask m, const std::array<int, 9>& perm) {
  Mask r = 0;
  for (int k = 0; k < 9; ++k)
    if ((m >> (8 - k)) & 1) r |= Mask(1) << (8 - perm[k]);
  return r;
}

}  // namespace detail

// All masks reachable by a square symmetry followed by any translation that
// keeps the cells inside the 3x3 window.  The empty mask's orbit is itself.
inline std::vector<Mask> orbit(Mask m) {
  if (m == 0) return {0};
  std::vector<Mask> out;
  for (const auto& perm : detail::sym_perms()) {
    Mask img = detail::apply_perm(m, perm);
    int lo_r = 3, hi_r = -1, lo_c = 3, hi_c = -1;
    for (int k = 0; k < 9; ++k)
      if ((img >> (8 - k)) & 1) {
        lo_r = std::min(lo_r, k / 3);
        hi_r = std::max(hi_r, k / 3);
        lo_c = std::min(lo_c, k % 3);
        hi_c = std::max(hi_c, k % 3);
      }
    for (int dr = -lo_r; dr <= 2 - hi_r; ++dr)
      for (int dc = -lo_c; dc <= 2 - hi_c; ++dc) {
        Mask t = 0;
        for (int k = 0; k < 9; ++k)
          if ((img >> (8 - k)) & 1) {
            int nk = (k / 3 + dr) * 3 + (k % 3 + dc);
            t |= Mask(1) << (8 - nk);
          }
        out.push_back(t);
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Mask canonical(Mask m) { return orbit(m).front(); }

// The 86 trivial-equivalence classes, sorted by canonical octal value.
inline std::vector<CanonicalClass> enumerate_canonical() {
  std::vector<CanonicalClass> out;
  std::vector<bool> seen(512, false);
  for (Mask m = 0; m < 512; ++m) {
    if (seen[m]) continue;
    CanonicalClass c;
    c.orbit = orbit(m);
    c.canonical = c.orbit.front();
    c.cell_count = cell_count(m);
    for (Mask o : c.orbit) seen[o] = true;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const CanonicalClass& a, const CanonicalClass& b) {
              return a.canonical < b.canonical;
            });
  return out;
}

// Human-readable polynomial for a mask: the center term first if present,
// then the remaining cells in row-major order, joined with '+'.
inline std::string rule_poly_string(Mask m) {
  static const char* kMonomial[9] = {"y/x", "y",   "x*y",     "1/x", "1",
                                     "x",   "1/(x*y)", "1/y", "x/y"};
  if (m == 0) return "0";
  std::string s;
  auto append = [&](int k) {
    if (!s.empty()) s += '+';
    s += kMonomial[k];
  };
  if ((m >> 4) & 1) append(4);
  for (int k = 0; k < 9; ++k)
    if (k != 4 && ((m >> (8 - k)) & 1)) append(k);
  return s;
}

}  // namespace oddrule
