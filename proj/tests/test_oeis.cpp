#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "oddrule/oeis.hpp"

using namespace oddrule;
namespace fs = std::filesystem;

static const std::string kSnapshotDir =
    std::string(ODDRULE_SOURCE_DIR) + "/data/oeis_snapshot";

TEST_CASE("valid_oeis_id") {
  CHECK(valid_oeis_id("A255463"));
  CHECK(valid_oeis_id("A000004"));
  CHECK_FALSE(valid_oeis_id("B255463"));
  CHECK_FALSE(valid_oeis_id("A25546"));
  CHECK_FALSE(valid_oeis_id("A2554631"));
  CHECK_FALSE(valid_oeis_id("A25546x"));
  CHECK_FALSE(valid_oeis_id(""));
}

TEST_CASE("parse_bfile accepts the published shape") {
  OeisSequence s = parse_bfile("# header\n\n0 1\n1 6\n2 30\n", "A255463");
  CHECK(s.id == "A255463");
  CHECK(s.offset == 0);
  CHECK(s.terms == std::vector<BigInt>{1, 6, 30});

  OeisSequence neg = parse_bfile("3 -5\n4 12\n", "A000001");
  CHECK(neg.offset == 3);
  CHECK(neg.terms[0] == -5);

  OeisSequence big = parse_bfile("1 123456789012345678901234567890\n",
                                 "A000001");
  CHECK(big.terms[0] == BigInt("123456789012345678901234567890"));
}

TEST_CASE("parse_bfile rejects malformed input with line numbers") {
  using Catch::Matchers::ContainsSubstring;
  CHECK_THROWS_WITH(parse_bfile("0 1\n2 4\n", "A000001"),
                    ContainsSubstring("line 2") &&
                        ContainsSubstring("breaks the run"));
  CHECK_THROWS_WITH(parse_bfile("0\n", "A000001"),
                    ContainsSubstring("expected 'index value'"));
  CHECK_THROWS_WITH(parse_bfile("0 12x3\n", "A000001"),
                    ContainsSubstring("bad integer"));
  CHECK_THROWS_WITH(parse_bfile("0 -\n", "A000001"),
                    ContainsSubstring("bad integer"));
  CHECK_THROWS_WITH(parse_bfile("# only comments\n", "A000001"),
                    ContainsSubstring("no terms"));
}

TEST_CASE("format_bfile round-trips") {
  OeisSequence s;
  s.id = "A000001";
  s.offset = 2;
  s.terms = {BigInt(4), BigInt(-7), BigInt("900000000000000000000")};
  std::string text = format_bfile(s);
  CHECK(text == "2 4\n3 -7\n4 900000000000000000000\n");
  OeisSequence back = parse_bfile(text, s.id);
  CHECK(back.offset == s.offset);
  CHECK(back.terms == s.terms);
}

TEST_CASE("client resolves from the bundled snapshot") {
  OeisClient client(kSnapshotDir);
  OeisSequence s = client.fetch_bfile("A255463");
  CHECK(s.source == "bundled-snapshot");
  CHECK(s.fetched_at.empty());
  CHECK(s.offset == 0);
  REQUIRE(s.terms.size() >= 5);
  CHECK(s.terms[4] == 606);

  OeisSequence j = client.fetch_bfile("A001045");
  CHECK(j.offset == 1);
  CHECK(j.terms[0] == 1);
  CHECK(j.terms[1] == 1);
  CHECK(j.terms[2] == 3);

  CHECK_THROWS_WITH(client.fetch_bfile("A999999"),
                    Catch::Matchers::ContainsSubstring("A999999"));
  CHECK_THROWS_AS(client.fetch_bfile("255463"), std::invalid_argument);
}

TEST_CASE("the snapshot covers every referenced id with 40 terms") {
  OeisClient client(kSnapshotDir);
  auto ids = concerned_ids();
  CHECK(ids.size() == 95);
  for (const auto& id : ids) {
    CAPTURE(id);
    OeisSequence s = client.fetch_bfile(id);
    CHECK(s.terms.size() == 40);
  }
}

TEST_CASE("client prefers cache, then network, then snapshot") {
  fs::path cache = fs::temp_directory_path() / "oddrule_oeis_cache_test";
  fs::remove_all(cache);

  int calls = 0;
  auto fetcher = [&calls](const std::string& id) -> std::string {
    ++calls;
    if (id == "A000045") return "0 0\n1 1\n2 1\n3 2\n4 3\n";
    return "";  // simulate a failed fetch
  };

  OeisClient client(kSnapshotDir, cache, fetcher);
  OeisSequence s = client.fetch_bfile("A000045");
  CHECK(s.source == "network");
  CHECK_FALSE(s.fetched_at.empty());
  CHECK(s.terms == std::vector<BigInt>{0, 1, 1, 2, 3});
  CHECK(calls == 1);
  CHECK(fs::exists(cache / "A000045.txt"));

  // second fetch is served from the cache without touching the fetcher
  OeisSequence again = client.fetch_bfile("A000045");
  CHECK(calls == 1);
  CHECK(again.terms == s.terms);

  // a failing fetch falls back to the snapshot
  OeisSequence fell = client.fetch_bfile("A255463");
  CHECK(calls == 2);
  CHECK(fell.source == "bundled-snapshot");

  fs::remove_all(cache);
}

TEST_CASE("align_terms tries shifts -1, 0, +1") {
  std::vector<BigInt> ours;
  for (int n = 0; n < 40; ++n) ours.emplace_back(n * n + 1);

  OeisSequence same;
  same.terms = ours;
  AlignResult r0 = align_terms(ours, same);
  CHECK(r0.matched);
  CHECK(r0.shift == 0);
  CHECK(r0.overlap == 40);

  OeisSequence extra;  // one extra initial term upstream
  extra.terms.emplace_back(99);
  extra.terms.insert(extra.terms.end(), ours.begin(), ours.end() - 1);
  AlignResult rp = align_terms(ours, extra);
  CHECK(rp.matched);
  CHECK(rp.shift == 1);
  CHECK(rp.overlap == 39);

  OeisSequence missing;  // upstream starts one term later
  missing.terms.assign(ours.begin() + 1, ours.end());
  AlignResult rm = align_terms(ours, missing);
  CHECK(rm.matched);
  CHECK(rm.shift == -1);
  CHECK(rm.overlap == 39);

  OeisSequence corrupt;
  corrupt.terms = ours;
  corrupt.terms[20] = -1;
  AlignResult rc = align_terms(ours, corrupt);
  CHECK_FALSE(rc.matched);
  CHECK(rc.detail.find("shift 0: first divergence at n=20") !=
        std::string::npos);

  std::vector<BigInt> tiny(ours.begin(), ours.begin() + 10);
  AlignResult rt = align_terms(tiny, same);
  CHECK_FALSE(rt.matched);
  CHECK(rt.detail.find("below the required") != std::string::npos);
  AlignResult rt2 = align_terms(tiny, same, 8);
  CHECK(rt2.matched);
}

TEST_CASE("crosscheck compares records against published sequences") {
  OeisClient client(kSnapshotDir);

  SequenceRecord r365 = make_record(parse_rule("365"), 63, 40);
  CrosscheckReport rep = crosscheck(r365, "A255462", "A255463", client);
  CHECK(rep.ok());
  CHECK(rep.a_result.matched);
  CHECK(rep.a_result.shift == 0);
  CHECK(rep.b_result.matched);
  CHECK_FALSE(rep.known_difference);

  // published b-sequence for this rule carries one extra initial term
  SequenceRecord r007 = make_record(parse_rule("007"), 63, 39);
  CrosscheckReport rep7 = crosscheck(r007, "A071053", "A001045", client);
  CHECK(rep7.ok());
  CHECK(rep7.b_result.shift == 1);

  SequenceRecord r000 = make_record(parse_rule("000"), 63, 40);
  CrosscheckReport rep0 = crosscheck(r000, "A000004", "A000004", client);
  CHECK(rep0.known_difference);
  CHECK(rep0.ok());
  CHECK_FALSE(rep0.note.empty());

  // wiring a rule to the wrong ids must fail loudly
  CrosscheckReport bad = crosscheck(r365, "A071053", "A001045", client);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.a_result.matched);
  CHECK_FALSE(bad.a_result.detail.empty());
}
