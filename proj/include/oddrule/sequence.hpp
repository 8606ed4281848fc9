#pragma once
// Population sequences of rule powers: a_n = |F^n|, the subsequence
// b_k = a at index 2^k - 1, the run-length transform connecting them, a
// brute-force grid oracle (no polynomial arithmetic), and a digit-DP
// counter that reaches b-indices far beyond what explicit powering can
// hold in memory.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddrule/catalog.hpp"
#include "oddrule/laurent.hpp"

namespace oddrule {

using BigInt = boost::multiprecision::cpp_int;

// [|F^0|, |F^1|, ..., |F^N|] by incremental multiplication.
inline std::vector<std::int64_t> a_seq(const LaurentPoly& F, std::int64_t N) {
  if (N < 0) throw std::invalid_argument("a_seq: N must be >= 0");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  LaurentPoly cur = LaurentPoly::one();
  out.push_back(cur.term_count());
  for (std::int64_t n = 1; n <= N; ++n) {
    cur = cur * F;
    out.push_back(cur.term_count());
  }
  return out;
}

// [b_0..b_N] with b_k = |F^(2^k - 1)|, via the doubling recursion
// G_{k+1} = G_k(x^2, y^2) * F starting from G_0 = 1 (so b_0 = 1).
inline std::vector<std::int64_t> b_seq(const LaurentPoly& F, std::int64_t N) {
  if (N < 0) throw std::invalid_argument("b_seq: N must be >= 0");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  LaurentPoly G = LaurentPoly::one();
  out.push_back(G.term_count());
  for (std::int64_t k = 1; k <= N; ++k) {
    G = G.substitute_power(2, 2) * F;
    out.push_back(G.term_count());
  }
  return out;
}

// Lengths of the maximal runs of 1s in the binary expansion of n, read from
// the most significant bit down.  run_lengths(0) = [].
inline std::vector<int> run_lengths(std::uint64_t n) {
  std::vector<int> out;
  int cur = 0;
  for (int bit = 63; bit >= 0; --bit) {
    if ((n >> bit) & 1) {
      ++cur;
    } else if (cur) {
      out.push_back(cur);
      cur = 0;
    }
  }
  if (cur) out.push_back(cur);
  return out;
}

// Run-length transform: T_n = product of S_i over the run lengths i of n,
// with T_0 = 1 (empty product).  Requires S to cover every run length that
// occurs for n <= N, i.e. length > floor(log2(N+1)).
template <class T>
std::vector<T> rlt(const std::vector<T>& S, std::uint64_t N) {
  // largest run length occurring for any n <= N is floor(log2(N+1))
  int need = std::bit_width(N + 1) - 1;
  if (static_cast<int>(S.size()) < need + 1)
    throw std::invalid_argument(
        "rlt: S has " + std::to_string(S.size()) + " terms but indices up to " +
        std::to_string(need) + " are required for N=" + std::to_string(N));
  std::vector<T> out;
  out.reserve(N + 1);
  for (std::uint64_t n = 0; n <= N; ++n) {
    T t(1);
    for (int len : run_lengths(n)) t *= S[static_cast<std::size_t>(len)];
    out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force grid oracle.  Simulates the automaton on a bounded array with
// one cell of margin beyond the reachable box; never touches LaurentPoly.

struct OracleGrid {
  std::int64_t side = 0;            // grid is side x side, center at the middle
  std::vector<std::uint8_t> cells;  // row-major, row 0 = top = largest y
  std::uint8_t at(std::int64_t r, std::int64_t c) const {
    return cells[static_cast<std::size_t>(r * side + c)];
  }
};

// One synchronous update on the fixed grid; cells beyond the edge read as 0.
inline void oracle_step(OracleGrid& g, Mask m) {
  std::vector<std::pair<int, int>> nbrs;  // (i, j) offsets of the mask
  for (int k = 0; k < 9; ++k)
    if ((m >> (8 - k)) & 1) {
      auto [i, j] = cell_exponent(k);
      nbrs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  std::vector<std::uint8_t> next(g.cells.size(), 0);
  for (std::int64_t r = 0; r < g.side; ++r)
    for (std::int64_t c = 0; c < g.side; ++c) {
      unsigned acc = 0;
      // cell is ON next step iff it lies in the shifted neighborhood of an
      // odd number of ON cells: parity over F-offsets f of state(pos - f).
      for (auto [fi, fj] : nbrs) {
        std::int64_t rr = r + fj, cc = c - fi;
        if (rr >= 0 && rr < g.side && cc >= 0 && cc < g.side)
          acc ^= g.at(rr, cc);
      }
      next[static_cast<std::size_t>(r * g.side + c)] =
          static_cast<std::uint8_t>(acc & 1);
    }
  g.cells.swap(next);
}

// A grid big enough for n generations with one cell of margin, single seed
// at the center.
inline OracleGrid oracle_seed(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("oracle grid: n must be >= 0");
  OracleGrid g;
  g.side = 2 * n + 3;
  g.cells.assign(static_cast<std::size_t>(g.side) * g.side, 0);
  std::int64_t mid = n + 1;
  g.cells[static_cast<std::size_t>(mid * g.side + mid)] = 1;
  return g;
}

inline OracleGrid oracle_simulate(Mask m, std::int64_t n) {
  OracleGrid g = oracle_seed(n);
  for (std::int64_t step = 0; step < n; ++step) oracle_step(g, m);
  return g;
}

inline std::int64_t oracle_on_count(const OracleGrid& g) {
  std::int64_t n = 0;
  for (std::uint8_t v : g.cells) n += v;
  return n;
}

// ON coordinates relative to the center, sorted by (y, x) ascending to match
// LaurentPoly::support().
inline std::vector<LaurentPoly::Exp> oracle_support(const OracleGrid& g) {
  std::vector<LaurentPoly::Exp> out;
  std::int64_t mid = g.side / 2;
  for (std::int64_t r = g.side - 1; r >= 0; --r)
    for (std::int64_t c = 0; c < g.side; ++c)
      if (g.at(r, c)) out.emplace_back(c - mid, mid - r);
  return out;
}

// ---------------------------------------------------------------------------
// Digit DP for b_k at large k.  Write Q_k = (xy F)^(2^k-1) shifted to have
// exponents in [0, 2^k-1]^2 ... more precisely Q_0 = 1 and
// Q_{k+1} = H * Q_k(x^2, y^2) with H = xy*F (exponents in [0,2]^2), so
// Q_k = F^(2^k-1) up to a monomial shift and b_k = |Q_k|.
//
// The coefficient of Q_{k+1} at a cell depends only on a 2x2 window of Q_k
// and on the cell's coordinate parities, so counting nonzero coefficients
// reduces to a 16-state automaton over the base-2 digits of the coordinates:
// state = the 4 window bits, one transition table per parity pair.  One DP
// pass yields b_0, b_1, ... with exact bignum counts.

namespace detail {

struct WindowTables {
  // next[q][p][w]: window state after appending digit pair (p, q) to (x, y).
  std::array<std::array<std::array<std::uint8_t, 16>, 2>, 2> next{};
};

inline WindowTables window_tables(Mask m) {
  std::vector<std::pair<int, int>> H;  // mask offsets shifted by (+1, +1)
  for (int k = 0; k < 9; ++k)
    if ((m >> (8 - k)) & 1) {
      auto [i, j] = cell_exponent(k);
      H.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    }
  WindowTables t;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int w = 0; w < 16; ++w) {
        int nw = 0;
        for (int xi = 0; xi < 2; ++xi)
          for (int eta = 0; eta < 2; ++eta) {
            int bit = 0;
            for (auto [r, s] : H) {
              int ax = p - 1 + xi - r, ay = q - 1 + eta - s;
              if ((ax & 1) || (ay & 1)) continue;
              int xp = ax / 2 + 1, yp = ay / 2 + 1;
              if (xp >= 0 && xp <= 1 && yp >= 0 && yp <= 1)
                bit ^= (w >> (2 * yp + xp)) & 1;
            }
            if (bit) nw |= 1 << (2 * eta + xi);
          }
        t.next[q][p][static_cast<std::size_t>(w)] =
            static_cast<std::uint8_t>(nw);
      }
  return t;
}

}  // namespace detail

// [b_0..b_N] for arbitrary N, as exact big integers.
inline std::vector<BigInt> b_seq_window(Mask m, int N) {
  if (N < 0) throw std::invalid_argument("b_seq_window: N must be >= 0");
  detail::WindowTables t = detail::window_tables(m);
  // counts[w] = number of 2x2 windows of Q_k in state w, over windows
  // addressed by the top digit pair; start from the four corner placements
  // of the single coefficient of Q_0 = 1.
  std::array<BigInt, 16> counts{};
  counts[8] += 1;  // digits (0,0): coefficient in window component (1,1)
  counts[4] += 1;  // digits (1,0)
  counts[2] += 1;  // digits (0,1)
  counts[1] += 1;  // digits (1,1)
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  auto emit = [&] {
    BigInt b = 0;
    for (int w = 0; w < 16; ++w)
      if (w & 8) b += counts[static_cast<std::size_t>(w)];
    out.push_back(b);
  };
  emit();
  for (int k = 1; k <= N; ++k) {
    std::array<BigInt, 16> nxt{};
    for (int w = 1; w < 16; ++w) {  // state 0 only feeds state 0
      const BigInt& c = counts[static_cast<std::size_t>(w)];
      if (c.is_zero()) continue;
      for (int q = 0; q < 2; ++q)
        for (int p = 0; p < 2; ++p) nxt[t.next[q][p][static_cast<std::size_t>(w)]] += c;
    }
    counts = std::move(nxt);
    emit();
  }
  return out;
}

// ---------------------------------------------------------------------------

struct SequenceRecord {
  std::string rule;                  // canonical 3-digit octal string
  std::vector<std::int64_t> a_terms; // a_0..a_max_n
  std::vector<BigInt> b_terms;       // at least every k with 2^k-1 <= max_n
  std::int64_t max_n = 0;
};

// b_len < 0 keeps exactly the b-indices reachable from a_terms; larger
// values extend the b-subsequence with the digit DP.  Where both sources
// apply they must agree.
inline SequenceRecord make_record(Mask m, std::int64_t N,
                                  std::int64_t b_len = -1) {
  SequenceRecord rec;
  rec.rule = format_rule(m);
  rec.max_n = N;
  rec.a_terms = a_seq(mask_to_poly(m), N);
  std::int64_t k_max = 0;
  while ((std::int64_t(1) << (k_max + 1)) - 1 <= N) ++k_max;
  std::int64_t want = std::max(b_len, k_max + 1);
  rec.b_terms = b_seq_window(m, static_cast<int>(want - 1));
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const auto a_val =
        rec.a_terms[static_cast<std::size_t>((std::int64_t(1) << k) - 1)];
    if (rec.b_terms[static_cast<std::size_t>(k)] != a_val)
      throw std::logic_error("make_record: b_" + std::to_string(k) +
                             " disagrees between powering and the digit DP");
  }
  return rec;
}

// Line-oriented "n value" rendering (b-file convention, indexed from 0).
template <class T>
std::string to_bfile(const std::vector<T>& terms, std::int64_t first_index = 0) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    s += std::to_string(first_index + static_cast<std::int64_t>(i));
    s += ' ';
    if constexpr (std::is_same_v<T, BigInt>)
      s += terms[i].str();
    else
      s += std::to_string(terms[i]);
    s += '\n';
  }
  return s;
}

}  // namespace oddrule
