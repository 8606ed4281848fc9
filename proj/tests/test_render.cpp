#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "oddrule/render.hpp"
#include "oddrule/sequence.hpp"

using namespace oddrule;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("render_generation draws the reachable box with origin centered") {
  Bitmap g0 = render_generation(parse_rule("365"), 0);
  CHECK(g0.width == 1);
  CHECK(g0.height == 1);
  CHECK(g0.black_count() == 1);

  Bitmap g1 = render_generation(parse_rule("757"), 1);
  CHECK(g1.width == 3);
  CHECK(g1.black_count() == 8);
  CHECK(g1.at(1, 1) == 0);  // this rule's neighborhood omits the center

  // single-cell rules pin the orientation: x*y^-1 is bottom-right,
  // x alone is mid-right
  Bitmap se = render_generation(parse_rule("001"), 1);
  CHECK(se.black_count() == 1);
  CHECK(se.at(2, 2) == 1);
  Bitmap e = render_generation(parse_rule("010"), 1);
  CHECK(e.black_count() == 1);
  CHECK(e.at(1, 2) == 1);

  CHECK_THROWS_AS(render_generation(parse_rule("365"), -1),
                  std::invalid_argument);
}

TEST_CASE("generation 15 pixel counts match the population sequence") {
  Bitmap b365 = render_generation(parse_rule("365"), 15);
  CHECK(b365.width == 31);
  CHECK(b365.height == 31);
  CHECK(b365.black_count() == 606);
  CHECK(b365.black_count() == a_seq(mask_to_poly(parse_rule("365")), 15)[15]);

  Bitmap b013 = render_generation(parse_rule("013"), 15);
  CHECK(b013.black_count() == 81);
}

TEST_CASE("encode_pbm emits plain P1 text with optional scaling") {
  Bitmap bm(2, 1);
  bm.at(0, 0) = 1;
  CHECK(encode_pbm(bm) == "P1\n2 1\n10\n");
  CHECK(encode_pbm(bm, 2) == "P1\n4 2\n1100\n1100\n");
  CHECK_THROWS_AS(encode_pbm(bm, 0), std::invalid_argument);
}

TEST_CASE("generation renders are byte-identical to the pinned goldens") {
  std::string dir = std::string(ODDRULE_SOURCE_DIR) + "/tests/golden/";
  CHECK(encode_pbm(render_generation(parse_rule("365"), 15)) ==
        slurp(dir + "golden_365_15.pbm"));
  CHECK(encode_pbm(render_generation(parse_rule("013"), 15)) ==
        slurp(dir + "golden_013_15.pbm"));
}

TEST_CASE("render_montage lays panels on a shared grid") {
  Bitmap m = render_montage(parse_rule("003"), 2, 2);
  CHECK(m.width == 11);
  CHECK(m.height == 11);
  // generation 2 sits in the second row, first column
  CHECK(m.at(10, 2) == 1);
  CHECK(m.at(10, 4) == 1);

  // subtracting the empty-rule montage (separators + its single seed pixel)
  // leaves exactly the total population of generations 0..n_max
  std::int64_t cnt365 = render_montage(parse_rule("365"), 5, 3).black_count();
  std::int64_t blank = render_montage(parse_rule("000"), 5, 3).black_count();
  auto a = a_seq(mask_to_poly(parse_rule("365")), 5);
  std::int64_t total = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  CHECK(cnt365 - (blank - 1) == total);

  CHECK_THROWS_AS(render_montage(parse_rule("003"), -1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(render_montage(parse_rule("003"), 3, 0),
                  std::invalid_argument);
}

TEST_CASE("write_pbm round-trips through the filesystem") {
  auto path = (std::filesystem::temp_directory_path() /
               "oddrule_render_test.pbm")
                  .string();
  Bitmap bm = render_generation(parse_rule("013"), 3);
  write_pbm(path, bm, 2);
  CHECK(slurp(path) == encode_pbm(bm, 2));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_pbm("/nonexistent-dir/x.pbm", bm),
                  std::runtime_error);
}
