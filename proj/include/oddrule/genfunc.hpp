#pragma once
// Exact univariate polynomial arithmetic over arbitrary-precision integers,
// rational generating functions, minimal-order recurrence guessing with a
// guess-then-verify discipline, and a parser for linear ASCII formulas like
// "(1-x)/((1-3*x)*(1-4*x))".  No floating point anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddrule {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Dense univariate polynomials, coefficients ascending by degree.

struct Poly {
  std::vector<BigInt> c;

  Poly() = default;
  explicit Poly(BigInt k) { if (k != 0) c.push_back(std::move(k)); }
  explicit Poly(std::vector<BigInt> v) : c(std::move(v)) { trim(); }

  static Poly x() { return Poly(std::vector<BigInt>{0, 1}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 if zero
  const BigInt& coeff(std::size_t i) const {
    static const BigInt zero = 0;
    return i < c.size() ? c[i] : zero;
  }
  BigInt at0() const { return coeff(0); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i)
      r.c[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i)
      r.c[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial
  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c) g = boost::multiprecision::gcd(g, v);
    return g;
  }

  Poly divided_by_int(const BigInt& k) const {
    Poly r = *this;
    for (auto& v : r.c) {
      if (v % k != 0)
        throw std::logic_error("Poly: inexact integer division");
      v /= k;
    }
    return r;
  }
};

// Quotient of an exact polynomial division; throws if it does not divide.
inline Poly poly_divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("Poly: division by zero");
  if (a.is_zero()) return Poly();
  std::vector<BigRat> rem(a.c.begin(), a.c.end());
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) throw std::logic_error("Poly: inexact division (degree)");
  std::vector<BigRat> q(static_cast<std::size_t>(dq) + 1);
  BigRat lead(b.c.back());
  for (int i = dq; i >= 0; --i) {
    BigRat f = rem[static_cast<std::size_t>(i + db)] / lead;
    q[static_cast<std::size_t>(i)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i + j)] -= f * BigRat(b.c[static_cast<std::size_t>(j)]);
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("Poly: inexact division (remainder)");
  Poly out;
  out.c.reserve(q.size());
  for (const auto& v : q) {
    if (boost::multiprecision::denominator(v) != 1)
      throw std::logic_error("Poly: inexact division (fraction)");
    out.c.push_back(boost::multiprecision::numerator(v));
  }
  out.trim();
  return out;
}

// Primitive polynomial gcd (Euclid over rationals, primitivized each step).
inline Poly poly_gcd(Poly a, Poly b) {
  auto primitive = [](Poly p) {
    BigInt g = p.content();
    if (g > 1) p = p.divided_by_int(g);
    if (!p.is_zero() && p.c.back() < 0) p = -p;
    return p;
  };
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    Poly r = a;
    const BigInt& lead = b.c.back();
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
      int shift = r.degree() - db;
      BigInt f = r.c.back();
      for (auto& v : r.c) v *= lead;
      for (int j = 0; j <= db; ++j)
        r.c[static_cast<std::size_t>(shift + j)] -= f * b.c[static_cast<std::size_t>(j)];
      r.trim();
    }
    a = std::move(b);
    b = primitive(std::move(r));
  }
  return a.is_zero() ? Poly(BigInt(1)) : a;
}

// Formula-table rendering: ascending powers, "1-7*x+12*x^2".
inline std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    const BigInt& v = p.c[i];
    if (v == 0) continue;
    BigInt a = v < 0 ? BigInt(-v) : v;
    if (s.empty()) {
      if (v < 0) s += '-';
    } else {
      s += v < 0 ? '-' : '+';
    }
    bool unit = (a == 1) && i > 0;
    if (!unit) s += a.str();
    if (i > 0) {
      if (!unit) s += '*';
      s += 'x';
      if (i > 1) s += '^' + std::to_string(i);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Rational generating functions, stored reduced with den(0) > 0.

struct RationalGF {
  Poly num;
  Poly den = Poly(BigInt(1));
};

inline RationalGF gf_normalize(Poly num, Poly den) {
  if (den.is_zero())
    throw std::invalid_argument("RationalGF: zero denominator");
  if (num.is_zero()) return {Poly(), Poly(BigInt(1))};
  BigInt g = boost::multiprecision::gcd(num.content(), den.content());
  if (g > 1) {
    num = num.divided_by_int(g);
    den = den.divided_by_int(g);
  }
  Poly pg = poly_gcd(num, den);
  if (pg.degree() > 0 || pg.coeff(0) != 1) {
    num = poly_divide_exact(num, pg);
    den = poly_divide_exact(den, pg);
  }
  if (den.at0() < 0 || (den.at0() == 0 && den.c.back() < 0)) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den)};
}

inline bool gf_equal(const RationalGF& a, const RationalGF& b) {
  return a.num * b.den == b.num * a.den;
}

inline std::string format_gf(const RationalGF& g) {
  if (g.den.degree() == 0 && g.den.coeff(0) == 1) return format_poly(g.num);
  std::string num = g.num.degree() > 0 ? "(" + format_poly(g.num) + ")"
                                       : format_poly(g.num);
  return num + "/(" + format_poly(g.den) + ")";
}

// First N+1 Taylor coefficients by exact long division.  Requires
// den(0) != 0; throws if a coefficient fails to be an integer.
inline std::vector<BigInt> gf_expand(const RationalGF& g, std::int64_t N) {
  if (g.den.at0() == 0)
    throw std::domain_error("gf_expand: denominator has zero constant term");
  const BigInt d0 = g.den.at0();
  std::vector<BigInt> a;
  a.reserve(static_cast<std::size_t>(N) + 1);
  for (std::int64_t n = 0; n <= N; ++n) {
    BigInt acc = g.num.coeff(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= g.den.degree() && i <= n; ++i)
      acc -= g.den.coeff(static_cast<std::size_t>(i)) *
             a[static_cast<std::size_t>(n - i)];
    if (acc % d0 != 0)
      throw std::domain_error("gf_expand: non-integer coefficient at index " +
                              std::to_string(n));
    a.push_back(acc / d0);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Linear recurrences b_n = c_1 b_{n-1} + ... + c_d b_{n-d} for n >= start.

struct Recurrence {
  int order = 0;
  std::vector<BigInt> coeffs;   // c_1..c_order
  int start = 0;                // recurrence valid from this index on
  std::vector<BigInt> initial;  // terms 0..start-1
};

inline bool recurrence_fits(const Recurrence& r,
                            const std::vector<BigInt>& terms) {
  for (std::size_t n = static_cast<std::size_t>(r.start); n < terms.size();
       ++n) {
    BigInt acc = 0;
    for (int i = 1; i <= r.order; ++i)
      acc += r.coeffs[static_cast<std::size_t>(i - 1)] *
             terms[n - static_cast<std::size_t>(i)];
    if (acc != terms[n]) return false;
  }
  return true;
}

struct GuessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Try a fixed order: solve the exact linear system over the rationals from
// the equations n = d .. L-1.  Returns false on inconsistency or non-integer
// coefficients; free variables are set to zero.
inline bool try_order(const std::vector<BigInt>& terms, int d,
                      Recurrence& out) {
  std::size_t L = terms.size();
  std::size_t rows = L - static_cast<std::size_t>(d);
  std::size_t cols = static_cast<std::size_t>(d);
  std::vector<std::vector<BigRat>> m(rows,
                                     std::vector<BigRat>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t n = r + static_cast<std::size_t>(d);
    for (std::size_t i = 0; i < cols; ++i)
      m[r][i] = BigRat(terms[n - 1 - i]);
    m[r][cols] = BigRat(terms[n]);
  }
  std::vector<std::int64_t> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    BigRat p = m[rank][col];
    for (std::size_t j = col; j <= cols; ++j) m[rank][j] /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      BigRat f = m[r][col];
      for (std::size_t j = col; j <= cols; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_of_col[col] = static_cast<std::int64_t>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return false;  // inconsistent
  std::vector<BigRat> sol(cols, BigRat(0));
  for (std::size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0)
      sol[col] = m[static_cast<std::size_t>(pivot_of_col[col])][cols];
  out.order = d;
  out.coeffs.clear();
  for (const auto& v : sol) {
    if (boost::multiprecision::denominator(v) != 1) return false;
    out.coeffs.push_back(boost::multiprecision::numerator(v));
  }
  out.start = d;
  out.initial.assign(terms.begin(), terms.begin() + d);
  return recurrence_fits(out, terms);
}

}  // namespace detail

// Smallest-order recurrence fitting every supplied term; order d needs at
// least 2d+2 terms (d equations of slack beyond the unknowns).
inline Recurrence guess_recurrence(const std::vector<BigInt>& terms,
                                   int max_order = 12) {
  int usable = 0;
  for (int d = 0; d <= max_order; ++d) {
    if (terms.size() < 2 * static_cast<std::size_t>(d) + 2) break;
    usable = d;
    Recurrence r;
    if (detail::try_order(terms, d, r)) return r;
  }
  throw GuessError("no recurrence up to order " + std::to_string(max_order) +
                   " found (searched orders 0.." + std::to_string(usable) +
                   " on " + std::to_string(terms.size()) + " terms)");
}

// Denominator 1 - c_1 x - ... - c_d x^d; numerator from the initial terms,
// truncated below max(start, order).  Expanding the result reproduces the
// supplied terms.
inline RationalGF recurrence_to_gf(const Recurrence& r,
                                   const std::vector<BigInt>& terms) {
  Poly den;
  den.c.assign(static_cast<std::size_t>(r.order) + 1, BigInt(0));
  den.c[0] = 1;
  for (int i = 1; i <= r.order; ++i)
    den.c[static_cast<std::size_t>(i)] = -r.coeffs[static_cast<std::size_t>(i - 1)];
  den.trim();
  Poly t;
  t.c.assign(terms.begin(), terms.end());
  t.trim();
  Poly prod = t * den;
  std::size_t cut = static_cast<std::size_t>(std::max(r.start, r.order));
  if (prod.c.size() > cut) prod.c.resize(cut);
  prod.trim();
  return gf_normalize(std::move(prod), std::move(den));
}

// ---------------------------------------------------------------------------
// Parser for the linear ASCII formula format.  Grammar (loosest first):
//   expr   <- term (('+'|'-') term)*
//   term   <- unary (('*'|'/') unary)*
//   unary  <- '-' unary | power
//   power  <- atom ('^' unary)?      (exponent must be a constant >= 0)
//   atom   <- integer | 'x' | '(' expr ')'
// Whitespace (including newlines) is ignored.

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
};

namespace detail {

class GFParser {
public:
  explicit GFParser(const std::string& s) : s_(s) {}

  RationalGF parse() {
    RationalGF r = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'",
                       pos_);
    return gf_normalize(std::move(r.num), std::move(r.den));
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() &&
           (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
            s_[pos_] == '\r'))
      ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RationalGF expr() {
    RationalGF acc = term();
    for (;;) {
      if (eat('+')) {
        RationalGF r = term();
        acc = {acc.num * r.den + r.num * acc.den, acc.den * r.den};
      } else if (eat('-')) {
        RationalGF r = term();
        acc = {acc.num * r.den - r.num * acc.den, acc.den * r.den};
      } else {
        return acc;
      }
    }
  }

  RationalGF term() {
    RationalGF acc = unary();
    for (;;) {
      if (eat('*')) {
        RationalGF r = unary();
        acc = {acc.num * r.num, acc.den * r.den};
      } else if (eat('/')) {
        std::size_t at = pos_;
        RationalGF r = unary();
        if (r.num.is_zero())
          throw ParseError("division by zero", at);
        if (r.num.at0() == 0)
          throw ParseError("division by a polynomial with zero constant term",
                           at);
        acc = {acc.num * r.den, acc.den * r.num};
      } else {
        return acc;
      }
    }
  }

  RationalGF unary() {
    if (eat('-')) {
      RationalGF r = unary();
      return {-r.num, r.den};
    }
    return power();
  }

  RationalGF power() {
    RationalGF base = atom();
    if (!eat('^')) return base;
    std::size_t at = pos_;
    RationalGF e = unary();
    if (e.num.degree() > 0 || e.den.degree() > 0)
      throw ParseError("exponent is not a constant", at);
    if (!e.den.is_zero() && e.num.at0() % e.den.at0() != 0)
      throw ParseError("exponent is not an integer", at);
    BigInt k = e.num.at0() / e.den.at0();
    if (k < 0) throw ParseError("negative exponent", at);
    if (k > 64) throw ParseError("exponent too large", at);
    RationalGF acc = {Poly(BigInt(1)), Poly(BigInt(1))};
    for (BigInt i = 0; i < k; ++i)
      acc = {acc.num * base.num, acc.den * base.den};
    return acc;
  }

  RationalGF atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalGF r = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return {Poly::x(), Poly(BigInt(1))};
    }
    if (c >= '0' && c <= '9') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
      return {Poly(BigInt(s_.substr(start, pos_ - start))), Poly(BigInt(1))};
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }
};

}  // namespace detail

inline RationalGF parse_gf(const std::string& text) {
  return detail::GFParser(text).parse();
}

// ---------------------------------------------------------------------------
// Guess-then-verify: guess from a prefix window, demand that the next
// `slack` terms are reproduced exactly.  If the window is too narrow for the
// true order (or verification fails), widen and retry; exhausting every
// window is a hard error.

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GuessOutcome {
  Recurrence rec;
  RationalGF gf;
  int window_used = 0;
};

inline GuessOutcome guess_checked(const std::vector<BigInt>& terms,
                                  int initial_window = 16, int slack = 10,
                                  int max_order = 12) {
  std::string last = "window never applied";
  for (int w = initial_window;; w += 6) {
    if (terms.size() < static_cast<std::size_t>(w) + static_cast<std::size_t>(slack)) break;
    std::vector<BigInt> head(terms.begin(), terms.begin() + w);
    Recurrence rec;
    try {
      rec = guess_recurrence(head, max_order);
    } catch (const GuessError& e) {
      last = e.what();
      continue;
    }
    std::vector<BigInt> span(terms.begin(), terms.begin() + w + slack);
    if (!recurrence_fits(rec, span)) {
      last = "order-" + std::to_string(rec.order) +
             " fit from window " + std::to_string(w) +
             " failed on the following " + std::to_string(slack) + " terms";
      continue;
    }
    GuessOutcome out;
    out.gf = recurrence_to_gf(rec, head);
    out.rec = std::move(rec);
    out.window_used = w;
    return out;
  }
  throw VerificationError("guess-then-verify failed on every window: " + last);
}

}  // namespace oddrule
