#pragma once
// Laurent polynomials over GF(2) in two variables x, y.
//
// A polynomial is identified with its support: the set of exponent pairs
// (i, j) whose coefficient is 1.  Storage is a dense bit grid anchored at
// (min_x, min_y); each row of the grid packs 64 x-positions per word.
// Invariant: the bounding box is tight (every extreme row/column holds at
// least one bit) and the term count is cached, so comparisons, height and
// size queries are O(1) on the metadata or a plain memcmp.

#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddrule {

class LaurentPoly {
public:
  using Exp = std::pair<std::int64_t, std::int64_t>;  // (x exponent, y exponent)

  LaurentPoly() = default;  // zero polynomial

  static LaurentPoly one() {
    LaurentPoly p;
    p.init_box(0, 0, 1, 1);
    p.words_[0] = 1;
    p.terms_ = 1;
    return p;
  }

  // Build from a list of exponent pairs.  Pairs toggle bits, so duplicates
  // cancel in pairs, matching GF(2) addition of monomials.
  static LaurentPoly from_exponents(const std::vector<Exp>& exps) {
    if (exps.empty()) return LaurentPoly();
    std::int64_t lox = exps[0].first, hix = exps[0].first;
    std::int64_t loy = exps[0].second, hiy = exps[0].second;
    for (const Exp& e : exps) {
      lox = std::min(lox, e.first);
      hix = std::max(hix, e.first);
      loy = std::min(loy, e.second);
      hiy = std::max(hiy, e.second);
    }
    LaurentPoly p;
    p.init_box(lox, loy, hix - lox + 1, hiy - loy + 1);
    for (const Exp& e : exps) {
      std::uint64_t* row = p.row(e.second - loy);
      std::uint64_t bx = static_cast<std::uint64_t>(e.first - lox);
      row[bx >> 6] ^= std::uint64_t(1) << (bx & 63);
    }
    p.normalize();
    return p;
  }

  bool is_zero() const { return terms_ == 0; }
  std::int64_t term_count() const { return terms_; }

  std::int64_t min_x() const { return minx_; }
  std::int64_t min_y() const { return miny_; }
  std::int64_t max_x() const { return minx_ + width_ - 1; }
  std::int64_t max_y() const { return miny_ + rows_ - 1; }

  // Largest absolute value among exponents appearing in the support.
  std::int64_t height() const {
    if (is_zero()) return 0;
    std::int64_t h = 0;
    for (std::int64_t v : {minx_, max_x(), miny_, max_y()})
      h = std::max(h, v < 0 ? -v : v);
    return h;
  }

  bool coeff(std::int64_t i, std::int64_t j) const {
    if (is_zero() || i < minx_ || i > max_x() || j < miny_ || j > max_y())
      return false;
    std::uint64_t bx = static_cast<std::uint64_t>(i - minx_);
    return (crow(j - miny_)[bx >> 6] >> (bx & 63)) & 1;
  }

  // Support as a list of exponent pairs, sorted by (y, x) ascending.
  std::vector<Exp> support() const {
    std::vector<Exp> out;
    out.reserve(static_cast<std::size_t>(terms_));
    for (std::int64_t r = 0; r < rows_; ++r) {
      const std::uint64_t* w = crow(r);
      for (std::size_t k = 0; k < wpr_; ++k) {
        std::uint64_t word = w[k];
        while (word) {
          int b = std::countr_zero(word);
          word &= word - 1;
          out.emplace_back(minx_ + static_cast<std::int64_t>(k * 64 + b),
                           miny_ + r);
        }
      }
    }
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.is_zero()) return true;
    return a.minx_ == b.minx_ && a.miny_ == b.miny_ && a.width_ == b.width_ &&
           a.rows_ == b.rows_ && a.words_ == b.words_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t lox = std::min(a.minx_, b.minx_);
    std::int64_t loy = std::min(a.miny_, b.miny_);
    std::int64_t hix = std::max(a.max_x(), b.max_x());
    std::int64_t hiy = std::max(a.max_y(), b.max_y());
    LaurentPoly r;
    r.init_box(lox, loy, hix - lox + 1, hiy - loy + 1);
    r.xor_in(a);
    r.xor_in(b);
    r.normalize();
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    // Iterate the support of the smaller operand, XOR-shifting the larger.
    const LaurentPoly& big = a.terms_ >= b.terms_ ? a : b;
    const LaurentPoly& small = a.terms_ >= b.terms_ ? b : a;
    LaurentPoly r;
    r.init_box(a.minx_ + b.minx_, a.miny_ + b.miny_,
               a.width_ + b.width_ - 1, a.rows_ + b.rows_ - 1);
    for (std::int64_t sr = 0; sr < small.rows_; ++sr) {
      const std::uint64_t* srow = small.crow(sr);
      for (std::size_t k = 0; k < small.wpr_; ++k) {
        std::uint64_t word = srow[k];
        while (word) {
          int b2 = std::countr_zero(word);
          word &= word - 1;
          std::uint64_t dx = k * 64 + static_cast<std::uint64_t>(b2);
          std::size_t word_off = dx >> 6;
          int bit_off = static_cast<int>(dx & 63);
          for (std::int64_t br = 0; br < big.rows_; ++br) {
            const std::uint64_t* src = big.crow(br);
            std::uint64_t* dst = r.row(br + sr) + word_off;
            if (bit_off == 0) {
              for (std::size_t m = 0; m < big.wpr_; ++m) dst[m] ^= src[m];
            } else {
              std::uint64_t carry = 0;
              for (std::size_t m = 0; m < big.wpr_; ++m) {
                dst[m] ^= (src[m] << bit_off) | carry;
                carry = src[m] >> (64 - bit_off);
              }
              if (carry) dst[big.wpr_] ^= carry;
            }
          }
        }
      }
    }
    r.normalize();
    return r;
  }

  // x -> x^kx, y -> y^ky (kx, ky >= 1).  Exponent (i, j) maps to (i*kx, j*ky).
  LaurentPoly substitute_power(std::int64_t kx, std::int64_t ky) const {
    if (kx < 1 || ky < 1)
      throw std::invalid_argument("substitute_power: exponents must be >= 1");
    if (is_zero() || (kx == 1 && ky == 1)) return *this;
    if (kx == 2 && ky == 2) return spread2();
    LaurentPoly r;
    r.init_box(minx_ * kx, miny_ * ky, (width_ - 1) * kx + 1,
               (rows_ - 1) * ky + 1);
    for (std::int64_t sr = 0; sr < rows_; ++sr) {
      const std::uint64_t* w = crow(sr);
      std::uint64_t* dst = r.row(sr * ky);
      for (std::size_t k = 0; k < wpr_; ++k) {
        std::uint64_t word = w[k];
        while (word) {
          int b = std::countr_zero(word);
          word &= word - 1;
          std::uint64_t bx = (k * 64 + static_cast<std::uint64_t>(b)) *
                             static_cast<std::uint64_t>(kx);
          dst[bx >> 6] |= std::uint64_t(1) << (bx & 63);
        }
      }
    }
    r.terms_ = terms_;
    return r;
  }

  // General monomial substitution x -> x^a y^b, y -> x^c y^d, so the
  // exponent map is (i, j) -> (a*i + c*j, b*i + d*j).  Requires a nonzero
  // determinant, which makes the map injective and preserves term counts.
  LaurentPoly substitute_monomial(std::int64_t a, std::int64_t b,
                                  std::int64_t c, std::int64_t d) const {
    if (a * d - b * c == 0)
      throw std::invalid_argument(
          "substitute_monomial: determinant must be nonzero");
    std::vector<Exp> out;
    out.reserve(static_cast<std::size_t>(terms_));
    for (const Exp& e : support())
      out.emplace_back(a * e.first + c * e.second, b * e.first + d * e.second);
    return from_exponents(out);
  }

  // Multiply by the monomial x^dx y^dy.
  LaurentPoly translate(std::int64_t dx, std::int64_t dy) const {
    if (is_zero()) return *this;
    LaurentPoly r = *this;
    r.minx_ = checked_add(r.minx_, dx);
    r.miny_ = checked_add(r.miny_, dy);
    return r;
  }

  // p^n by binary expansion of n: over GF(2), p^(2^k) = p with every
  // exponent scaled by 2^k, so p^n is the product of those images over the
  // set bits of n.  n = 0 yields 1.
  LaurentPoly pow(std::uint64_t n) const {
    LaurentPoly acc = one();
    if (n == 0) return acc;
    if (is_zero()) return LaurentPoly();
    std::int64_t scale = 1;
    bool first = true;
    for (std::uint64_t m = n; m; m >>= 1, scale <<= 1) {
      if (m & 1) {
        LaurentPoly img = substitute_power(scale, scale);
        acc = first ? img : acc * img;
        first = false;
      }
      if (m == 1) break;  // avoid scaling past what is needed
    }
    return acc;
  }

private:
  std::int64_t minx_ = 0, miny_ = 0;
  std::int64_t width_ = 0, rows_ = 0;  // extents in bits / rows; 0 = zero poly
  std::size_t wpr_ = 0;                // words per row
  std::vector<std::uint64_t> words_;
  std::int64_t terms_ = 0;

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("LaurentPoly: exponent overflow");
    return r;
  }

  void init_box(std::int64_t lox, std::int64_t loy, std::int64_t w,
                std::int64_t h) {
    constexpr std::int64_t kMaxWords = std::int64_t(1) << 28;  // 2 GiB cap
    if (w <= 0 || h <= 0)
      throw std::logic_error("LaurentPoly: empty box");
    if (w > (kMaxWords << 6) || h > kMaxWords)
      throw std::length_error("LaurentPoly: grid of " + std::to_string(w) +
                              "x" + std::to_string(h) + " bits exceeds cap");
    std::size_t wpr = static_cast<std::size_t>((w + 63) / 64);
    if (static_cast<std::int64_t>(wpr) * h > kMaxWords)
      throw std::length_error("LaurentPoly: grid of " + std::to_string(w) +
                              "x" + std::to_string(h) + " bits exceeds cap");
    minx_ = lox;
    miny_ = loy;
    width_ = w;
    rows_ = h;
    wpr_ = wpr;
    words_.assign(wpr * static_cast<std::size_t>(h), 0);
    terms_ = 0;
  }

  std::uint64_t* row(std::int64_t r) {
    return words_.data() + static_cast<std::size_t>(r) * wpr_;
  }
  const std::uint64_t* crow(std::int64_t r) const {
    return words_.data() + static_cast<std::size_t>(r) * wpr_;
  }

  void xor_in(const LaurentPoly& src) {
    std::uint64_t dx = static_cast<std::uint64_t>(src.minx_ - minx_);
    std::size_t word_off = dx >> 6;
    int bit_off = static_cast<int>(dx & 63);
    for (std::int64_t sr = 0; sr < src.rows_; ++sr) {
      const std::uint64_t* s = src.crow(sr);
      std::uint64_t* d = row(sr + (src.miny_ - miny_)) + word_off;
      if (bit_off == 0) {
        for (std::size_t m = 0; m < src.wpr_; ++m) d[m] ^= s[m];
      } else {
        std::uint64_t carry = 0;
        for (std::size_t m = 0; m < src.wpr_; ++m) {
          d[m] ^= (s[m] << bit_off) | carry;
          carry = s[m] >> (64 - bit_off);
        }
        if (carry) d[src.wpr_] ^= carry;
      }
    }
  }

  // Trim the bounding box to the support and recount terms.
  void normalize() {
    std::int64_t lo_r = -1, hi_r = -1;
    for (std::int64_t r = 0; r < rows_; ++r) {
      const std::uint64_t* w = crow(r);
      bool any = false;
      for (std::size_t k = 0; k < wpr_; ++k)
        if (w[k]) { any = true; break; }
      if (any) {
        if (lo_r < 0) lo_r = r;
        hi_r = r;
      }
    }
    if (lo_r < 0) {
      *this = LaurentPoly();
      return;
    }
    std::int64_t lo_c = width_, hi_c = -1;
    for (std::int64_t r = lo_r; r <= hi_r; ++r) {
      const std::uint64_t* w = crow(r);
      for (std::size_t k = 0; k < wpr_; ++k) {
        if (!w[k]) continue;
        std::int64_t first = static_cast<std::int64_t>(k * 64) +
                             std::countr_zero(w[k]);
        std::int64_t last = static_cast<std::int64_t>(k * 64) + 63 -
                            std::countl_zero(w[k]);
        lo_c = std::min(lo_c, first);
        hi_c = std::max(hi_c, last);
      }
    }
    if (lo_r == 0 && hi_r == rows_ - 1 && lo_c == 0 && hi_c == width_ - 1) {
      recount();
      return;
    }
    LaurentPoly t;
    t.init_box(minx_ + lo_c, miny_ + lo_r, hi_c - lo_c + 1, hi_r - lo_r + 1);
    std::size_t word_off = static_cast<std::size_t>(lo_c) >> 6;
    int bit_off = static_cast<int>(lo_c & 63);
    for (std::int64_t r = lo_r; r <= hi_r; ++r) {
      const std::uint64_t* s = crow(r) + word_off;
      std::uint64_t* d = t.row(r - lo_r);
      std::size_t avail = wpr_ - word_off;
      if (bit_off == 0) {
        for (std::size_t m = 0; m < t.wpr_ && m < avail; ++m) d[m] = s[m];
      } else {
        for (std::size_t m = 0; m < t.wpr_; ++m) {
          std::uint64_t lo = m < avail ? s[m] >> bit_off : 0;
          std::uint64_t hi = m + 1 < avail ? s[m + 1] << (64 - bit_off) : 0;
          d[m] = lo | hi;
        }
      }
      // mask tail bits beyond the new width
      int tail = static_cast<int>(t.width_ & 63);
      if (tail) d[t.wpr_ - 1] &= (std::uint64_t(1) << tail) - 1;
    }
    t.recount();
    *this = std::move(t);
  }

  void recount() {
    std::int64_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    terms_ = n;
  }

  // Fast path for x -> x^2, y -> y^2: interleave zeros into each row and
  // double the row spacing.
  LaurentPoly spread2() const {
    LaurentPoly r;
    r.init_box(minx_ * 2, miny_ * 2, width_ * 2 - 1, rows_ * 2 - 1);
    for (std::int64_t sr = 0; sr < rows_; ++sr) {
      const std::uint64_t* s = crow(sr);
      std::uint64_t* d = r.row(sr * 2);
      for (std::size_t k = 0; k < wpr_; ++k) {
        if (!s[k]) continue;
        d[2 * k] = spread_bits(s[k] & 0xFFFFFFFFu);
        if (2 * k + 1 < r.wpr_) d[2 * k + 1] = spread_bits(s[k] >> 32);
      }
    }
    r.terms_ = terms_;
    return r;
  }

  static std::uint64_t spread_bits(std::uint64_t x) {
    x &= 0xFFFFFFFFu;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
  }
};

}  // namespace oddrule
