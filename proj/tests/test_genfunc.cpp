#include <catch2/catch_amalgamated.hpp>

#include "oddrule/catalog.hpp"
#include "oddrule/genfunc.hpp"
#include "oddrule/sequence.hpp"

using namespace oddrule;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("poly basics: arithmetic, content, exact division, gcd") {
  Poly a(std::vector<BigInt>{1, 2});        // 1+2x
  Poly b(std::vector<BigInt>{1, -1});       // 1-x
  CHECK((a * b) == Poly(std::vector<BigInt>{1, 1, -2}));
  CHECK((a + b) == Poly(std::vector<BigInt>{2, 1}));
  CHECK((a - a).is_zero());
  CHECK(Poly(std::vector<BigInt>{2, 4, 6}).content() == 2);
  CHECK(poly_divide_exact(a * b, b) == a);
  CHECK_THROWS(poly_divide_exact(Poly(std::vector<BigInt>{1, 0, 1}), a));
  Poly g = poly_gcd(a * b, a * Poly(std::vector<BigInt>{3, 3}));
  CHECK(g == a);  // primitive gcd
  CHECK(poly_gcd(b, Poly(BigInt(5))) == Poly(BigInt(1)));
}

TEST_CASE("format_poly ascending with unit coefficients elided") {
  CHECK(format_poly(Poly(std::vector<BigInt>{1, -7, 12})) == "1-7*x+12*x^2");
  CHECK(format_poly(Poly()) == "0");
  CHECK(format_poly(Poly::x()) == "x");
  CHECK(format_poly(Poly(std::vector<BigInt>{0, -1, 3})) == "-x+3*x^2");
  CHECK(format_poly(Poly(BigInt(-5))) == "-5");
  CHECK(format_poly(Poly(std::vector<BigInt>{0, 0, -1})) == "-x^2");
}

TEST_CASE("guess_recurrence finds minimal orders") {
  Recurrence r = guess_recurrence(big({1, 6, 30, 138, 606, 2586, 10830}));
  CHECK(r.order == 2);
  CHECK(r.coeffs == big({7, -12}));
  CHECK(r.start == 2);
  CHECK(r.initial == big({1, 6}));

  Recurrence c = guess_recurrence(big({1, 1, 1, 1, 1}));
  CHECK(c.order == 1);
  CHECK(c.coeffs == big({1}));

  Recurrence z = guess_recurrence(big({0, 0, 0, 0}));
  CHECK(z.order == 0);

  Recurrence d = guess_recurrence(b_seq_window(parse_rule("037"), 12));
  CHECK(d.order == 2);
  CHECK(d.coeffs == big({4, -1}));
}

TEST_CASE("guess_recurrence refuses sequences with no short recurrence") {
  std::vector<BigInt> fact{1};
  for (int n = 1; n <= 16; ++n) fact.push_back(fact.back() * n);
  CHECK_THROWS_AS(guess_recurrence(fact), GuessError);
  CHECK_THROWS_WITH(
      guess_recurrence(fact),
      Catch::Matchers::ContainsSubstring("no recurrence up to order 12"));
}

TEST_CASE("recurrence_to_gf reproduces known closed forms") {
  auto terms365 = b_seq_window(parse_rule("365"), 12);
  RationalGF gf365 = recurrence_to_gf(guess_recurrence(terms365), terms365);
  CHECK(gf_equal(gf365, parse_gf("(1-x)/((1-3*x)*(1-4*x))")));
  CHECK(format_gf(gf365) == "(1-x)/(1-7*x+12*x^2)");

  auto ones = big({1, 1, 1, 1, 1, 1});
  RationalGF gf1 = recurrence_to_gf(guess_recurrence(ones), ones);
  CHECK(format_gf(gf1) == "1/(1-x)");

  auto terms003 = b_seq_window(parse_rule("003"), 12);
  RationalGF gf003 = recurrence_to_gf(guess_recurrence(terms003), terms003);
  CHECK(gf_equal(gf003, parse_gf("1/(1-2*x)")));
  CHECK(format_gf(gf003) == "1/(1-2*x)");

  auto zeros = big({1, 0, 0, 0, 0, 0});  // 1,0,0,... has gf exactly 1
  RationalGF gfz = recurrence_to_gf(guess_recurrence(zeros), zeros);
  CHECK(format_gf(gfz) == "1");
}

TEST_CASE("gf round trip across every canonical rule") {
  for (const auto& c : enumerate_canonical()) {
    auto t = b_seq_window(c.canonical, 25);
    RationalGF gf = recurrence_to_gf(guess_recurrence(t), t);
    CAPTURE(format_rule(c.canonical));
    CHECK(gf_expand(gf, 25) == t);
  }
}

TEST_CASE("parse_gf handles the linear ASCII grammar") {
  RationalGF g = parse_gf("(1+2*x)/((1+x)*(1-2*x))");
  CHECK(g.num == Poly(std::vector<BigInt>{1, 2}));
  CHECK(g.den == Poly(std::vector<BigInt>{1, -1, -2}));

  RationalGF one = parse_gf("1");
  CHECK(one.num == Poly(BigInt(1)));
  CHECK(one.den == Poly(BigInt(1)));

  CHECK(parse_gf("-x^2+x") .num == Poly(std::vector<BigInt>{0, 1, -1}));
  CHECK(parse_gf(" ( 1 - x ) / ( 1 - 2*x )\n").den ==
        Poly(std::vector<BigInt>{1, -2}));
  CHECK(gf_equal(parse_gf("2/2"), parse_gf("1")));
  CHECK(gf_equal(parse_gf("x^0"), parse_gf("1")));
  // reduction happens on construction
  CHECK(format_gf(parse_gf("(1+x)/((1+x)*(1-2*x))")) == "1/(1-2*x)");
}

TEST_CASE("parse_gf reports errors with positions") {
  using Catch::Matchers::ContainsSubstring;
  CHECK_THROWS_AS(parse_gf("(1+x"), ParseError);
  CHECK_THROWS_WITH(parse_gf("(1+x"), ContainsSubstring("expected ')'"));
  CHECK_THROWS_WITH(parse_gf("1/x"), ContainsSubstring("zero constant term"));
  CHECK_THROWS_WITH(parse_gf("1/(x-x)"), ContainsSubstring("division by zero"));
  CHECK_THROWS_WITH(parse_gf("x^y"),
                    ContainsSubstring("unexpected character 'y'"));
  CHECK_THROWS_WITH(parse_gf("x^(1+x)"), ContainsSubstring("not a constant"));
  CHECK_THROWS_WITH(parse_gf("x^-2"), ContainsSubstring("negative exponent"));
  CHECK_THROWS_AS(parse_gf(""), ParseError);
  CHECK_THROWS_AS(parse_gf("1+"), ParseError);
  bool threw = false;
  try {
    parse_gf("(1+x))");
  } catch (const ParseError& e) {
    threw = true;
    CHECK(e.position == 5);
  }
  CHECK(threw);
}

TEST_CASE("gf_expand produces exact Taylor prefixes") {
  CHECK(gf_expand(parse_gf("(1-x)/((1-3*x)*(1-4*x))"), 4) ==
        big({1, 6, 30, 138, 606}));
  CHECK(gf_expand(parse_gf("1/(1-x)"), 3) == big({1, 1, 1, 1}));
  auto b537 = b_seq(mask_to_poly(parse_rule("537")), 8);
  auto expanded = gf_expand(parse_gf("(1+4*x)*(1-x)/((1-4*x)*(1-7*x^2))"), 8);
  REQUIRE(expanded.size() == b537.size());
  for (std::size_t i = 0; i < b537.size(); ++i)
    CHECK(expanded[i] == BigInt(b537[i]));
  RationalGF half{Poly(std::vector<BigInt>{2, 1}),
                  Poly(std::vector<BigInt>{2, -2})};
  CHECK_THROWS_AS(gf_expand(half, 3), std::domain_error);
  CHECK_THROWS_WITH(gf_expand(half, 3),
                    Catch::Matchers::ContainsSubstring("index 1"));
}

TEST_CASE("gf_equal cross-multiplies") {
  CHECK(gf_equal(parse_gf("(1-x)/(1-7*x+12*x^2)"),
                 parse_gf("(1-x)/((1-3*x)*(1-4*x))")));
  CHECK(gf_equal(parse_gf("1/(1-2*x)"), parse_gf("(1+x)/(1-x-2*x^2)")));
  CHECK_FALSE(gf_equal(parse_gf("(1+2*x)/((1+x)*(1-2*x))"),
                       parse_gf("1/(1-3*x)")));
}

TEST_CASE("guess_checked verifies on fresh terms and can widen its window") {
  auto t365 = b_seq_window(parse_rule("365"), 35);
  GuessOutcome g365 = guess_checked(t365);
  CHECK(g365.window_used == 16);
  CHECK(gf_equal(g365.gf, parse_gf("(1-x)/((1-3*x)*(1-4*x))")));

  // this rule's denominator has degree 8: a 16-term window cannot pin it
  // down (the guess precondition needs 2d+2 terms), so widening kicks in
  auto t143 = b_seq_window(parse_rule("143"), 35);
  GuessOutcome g143 = guess_checked(t143);
  CHECK(g143.window_used == 22);
  CHECK(g143.rec.order == 8);

  std::vector<BigInt> primes{2,  3,  5,  7,  11, 13, 17, 19, 23,
                             29, 31, 37, 41, 43, 47, 53, 59, 61,
                             67, 71, 73, 79, 83, 89, 97, 101};
  CHECK_THROWS_AS(guess_checked(primes), VerificationError);
}
