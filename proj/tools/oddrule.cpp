// Command-line front end: rule canonicalization, population sequences,
// generating functions, classification tables, published-sequence
// cross-checks, PBM rendering, the brute-force grid oracle, and snapshot
// maintenance.  Exit codes: 0 ok, 1 a verification or comparison failed,
// 2 usage or operational error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"

#include "oddrule/catalog.hpp"
#include "oddrule/classifier.hpp"
#include "oddrule/genfunc.hpp"
#include "oddrule/gf_corpus.hpp"
#include "oddrule/oeis.hpp"
#include "oddrule/parallel.hpp"
#include "oddrule/render.hpp"
#include "oddrule/rule_table.hpp"
#include "oddrule/sequence.hpp"

using json = nlohmann::json;
using namespace oddrule;

namespace {

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

std::vector<std::string> big_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back(t.str());
  return out;
}

// b(n) = 7*b(n-1)-12*b(n-2) for n >= 2
std::string format_recurrence(const Recurrence& r) {
  if (r.order == 0) return "b(n) = 0 for n >= " + std::to_string(r.start);
  std::string s = "b(n) = ";
  bool firstterm = true;
  for (int i = 1; i <= r.order; ++i) {
    const BigInt& c = r.coeffs[static_cast<std::size_t>(i - 1)];
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (firstterm) {
      if (c < 0) s += "-";
      firstterm = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (a != 1) s += a.str() + "*";
    s += "b(n-" + std::to_string(i) + ")";
  }
  if (firstterm) s += "0";
  s += " for n >= " + std::to_string(r.start);
  return s;
}

OeisClient::Fetcher make_http_fetcher() {
  return [](const std::string& id) -> std::string {
    std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
    httplib::Client cli("https://oeis.org");
#else
    httplib::Client cli("http://oeis.org");
#endif
    cli.set_connection_timeout(10, 0);
    cli.set_read_timeout(30, 0);
    cli.set_follow_location(true);
    auto res = cli.Get(path);
    if (!res || res->status != 200) {
      std::cerr << "note: fetch of " << id << " failed ("
                << (res ? std::to_string(res->status)
                        : httplib::to_string(res.error()))
                << "), falling back\n";
      return "";
    }
    return res->body;
  };
}

// first `count` entries of the row-by-row flattening of the maximal-run
// structure of 1, 2, 3, ...
std::vector<BigInt> flattened_run_lengths(std::size_t count) {
  std::vector<BigInt> out;
  for (std::int64_t n = 1; out.size() < count; ++n)
    for (int len : run_lengths(n)) {
      out.emplace_back(len);
      if (out.size() == count) break;
    }
  return out;
}

int run_enumerate(bool json_out) {
  auto classes = enumerate_canonical();
  if (json_out) {
    json arr = json::array();
    for (const auto& c : classes) {
      json orbit = json::array();
      for (Mask m : c.orbit) orbit.push_back(format_rule(m));
      arr.push_back({{"rule", format_rule(c.canonical)},
                     {"cells", c.cell_count},
                     {"orbit_size", c.orbit.size()},
                     {"orbit", orbit}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& c : classes)
      std::cout << format_rule(c.canonical) << " cells=" << c.cell_count
                << " orbit=" << c.orbit.size() << "\n";
    std::cout << classes.size() << " canonical rules\n";
  }
  return 0;
}

int run_canon(const std::string& rule, bool json_out) {
  Mask m = parse_rule(rule);
  std::string canon = format_rule(canonical(m));
  if (json_out)
    std::cout << json{{"rule", rule}, {"canonical", canon}}.dump() << "\n";
  else
    std::cout << canon << "\n";
  return 0;
}

int run_seq(const std::string& rule, std::int64_t max_n, std::int64_t b_terms,
            bool b_only, bool json_out) {
  SequenceRecord rec = make_record(parse_rule(rule), max_n, b_terms);
  if (json_out) {
    std::cout << json{{"rule", rec.rule},
                      {"max_n", rec.max_n},
                      {"a", rec.a_terms},
                      {"b", big_strings(rec.b_terms)}}
                     .dump()
              << "\n";
    return 0;
  }
  if (b_only) {
    for (std::size_t k = 0; k < rec.b_terms.size(); ++k)
      std::cout << k << " " << rec.b_terms[k].str() << "\n";
  } else {
    for (std::size_t n = 0; n < rec.a_terms.size(); ++n)
      std::cout << n << " " << rec.a_terms[n] << "\n";
  }
  return 0;
}

// Locate this rule's formula in the bundled table (keyed by its class
// representative).  Returns true if a comparison was possible.
bool table_formula_for(const std::string& gf_file, const std::string& canon,
                       CorpusEntry& out) {
  std::string table_rule = canon;
  const RuleInfo& info = find_rule_info(canon);
  if (info.same_as) table_rule = info.same_as;
  std::vector<CorpusEntry> entries;
  try {
    entries = load_gf_corpus(gf_file);
  } catch (const std::exception& e) {
    std::cerr << "note: " << e.what() << "; skipping table comparison\n";
    return false;
  }
  for (auto& e : entries)
    if (e.rule == table_rule) {
      out = std::move(e);
      return true;
    }
  std::cerr << "note: no table entry for class " << table_rule << "\n";
  return false;
}

int run_gf(const std::string& rule, std::int64_t terms,
           const std::string& gf_file, bool json_out) {
  Mask m = canonical(parse_rule(rule));
  std::string canon = format_rule(m);
  auto bw = b_seq_window(m, terms - 1);
  GuessOutcome g = guess_checked(bw);

  CorpusEntry entry;
  bool have_entry = table_formula_for(gf_file, canon, entry);
  bool match = false;
  if (have_entry) match = gf_equal(g.gf, parse_gf(entry.expr));

  if (json_out) {
    json j{{"rule", rule},
           {"canonical", canon},
           {"order", g.rec.order},
           {"coeffs", big_strings(g.rec.coeffs)},
           {"initial", big_strings(g.rec.initial)},
           {"gf", format_gf(g.gf)},
           {"window_used", g.window_used},
           {"table_match", have_entry ? json(match) : json(nullptr)}};
    if (have_entry) {
      j["table_rule"] = entry.rule;
      j["table_id"] = entry.id;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "rule " << rule;
    if (canon != rule) std::cout << " (canonical " << canon << ")";
    std::cout << "\n";
    std::cout << format_recurrence(g.rec) << "\n";
    std::cout << "G(x) = " << format_gf(g.gf) << "\n";
    std::cout << "guessed from " << g.window_used << " terms, verified on "
              << (g.window_used + 10) << "\n";
    if (have_entry)
      std::cout << "table: "
                << (match ? "matches " : "MISMATCH against ") << entry.rule
                << " (" << entry.id << ")\n";
  }
  return have_entry && !match ? 1 : 0;
}

int run_classify(int prefix, bool json_out) {
  auto classes = combinatorial_classes(prefix);
  auto rows = emit_tables(classes);
  if (json_out) {
    json jrows = json::array();
    for (const TableRow& r : rows) {
      json jr{{"rule", r.rule},
              {"cells", r.cells},
              {"bits", r.bits},
              {"poly", r.poly},
              {"class", r.class_rep}};
      if (!r.a_id.empty()) {
        jr["a_id"] = r.a_id;
        jr["b_id"] = r.b_id;
      }
      jrows.push_back(std::move(jr));
    }
    json jclasses = json::array();
    for (const auto& c : classes) {
      json members = json::array();
      for (Mask m : c.members) members.push_back(format_rule(m));
      jclasses.push_back({{"representative", format_rule(c.representative)},
                          {"members", members},
                          {"gf", format_gf(c.gf)},
                          {"b_prefix", big_strings(c.b_prefix)}});
    }
    std::cout << json{{"table", jrows}, {"classes", jclasses}}.dump(2) << "\n";
  } else {
    std::cout << table_to_text(rows);
    std::cout << rows.size() << " rules in " << classes.size()
              << " classes\n";
  }
  return 0;
}

int run_verify_appendix(const std::string& gf_file, std::int64_t expand_k,
                        bool json_out) {
  auto entries = load_gf_corpus(gf_file);
  std::vector<std::string> rules;
  for (const auto& e : entries) rules.push_back(e.rule);
  std::sort(rules.begin(), rules.end());
  int failures = 0;
  json jout = json::array();
  if (rules != table_representatives()) {
    std::cerr << "coverage mismatch: table lists " << entries.size()
              << " formulas, expected one per class representative\n";
    ++failures;
  }
  for (const auto& e : entries) {
    std::string why;
    bool expand_ok = false, guess_ok = false;
    try {
      RationalGF gf = parse_gf(e.expr);
      Mask m = parse_rule(e.rule);
      expand_ok = gf_expand(gf, expand_k) == b_seq_window(m, expand_k);
      if (!expand_ok) why = "expansion diverges from the census sequence";
      GuessOutcome g = guess_checked(b_seq_window(m, 35));
      guess_ok = gf_equal(g.gf, gf);
      if (expand_ok && !guess_ok) why = "guessed gf differs";
    } catch (const std::exception& ex) {
      why = ex.what();
    }
    bool ok = expand_ok && guess_ok;
    if (!ok) ++failures;
    if (json_out)
      jout.push_back({{"rule", e.rule},
                      {"id", e.id},
                      {"expand_ok", expand_ok},
                      {"guess_ok", guess_ok}});
    else if (ok)
      std::cout << e.rule << " " << e.id << " ok\n";
    else
      std::cout << e.rule << " " << e.id << " FAIL: " << why << "\n";
  }
  if (json_out)
    std::cout << jout.dump(2) << "\n";
  else if (failures == 0)
    std::cout << entries.size() << "/" << entries.size()
              << " formulas verified\n";
  else
    std::cout << failures << " failures\n";
  return failures ? 1 : 0;
}

int run_crosscheck(bool offline, const std::string& snapshot_dir,
                   const std::string& cache_dir, bool json_out) {
  bool net = !offline && env_or("ODDRULE_OEIS_NETWORK", "") == "1";
  OeisClient client(snapshot_dir, cache_dir,
                    net ? make_http_fetcher() : OeisClient::Fetcher{});

  std::vector<CrosscheckReport> reports;
  for (const RuleInfo& info : kRuleTable) {
    if (!info.a_id) continue;
    SequenceRecord rec = make_record(parse_rule(info.rule), 63, 40);
    reports.push_back(crosscheck(rec, info.a_id, info.b_id, client));
  }

  AlignResult runlen =
      align_terms(flattened_run_lengths(40), client.fetch_bfile("A245562"));

  int failures = 0;
  json jout = json::array();
  auto describe = [](const AlignResult& r) {
    return r.matched ? "ok(shift " + std::to_string(r.shift) + ", overlap " +
                           std::to_string(r.overlap) + ")"
                     : "MISMATCH (" + r.detail + ")";
  };
  for (const auto& rep : reports) {
    if (!rep.ok()) ++failures;
    if (json_out) {
      json jr{{"rule", rep.rule},
              {"a_id", rep.a_id},
              {"b_id", rep.b_id},
              {"known_difference", rep.known_difference},
              {"ok", rep.ok()}};
      if (rep.known_difference) {
        jr["note"] = rep.note;
      } else {
        jr["a"] = {{"matched", rep.a_result.matched},
                   {"shift", rep.a_result.shift},
                   {"overlap", rep.a_result.overlap},
                   {"detail", rep.a_result.detail}};
        jr["b"] = {{"matched", rep.b_result.matched},
                   {"shift", rep.b_result.shift},
                   {"overlap", rep.b_result.overlap},
                   {"detail", rep.b_result.detail}};
      }
      jout.push_back(std::move(jr));
    } else if (rep.known_difference) {
      std::cout << rep.rule << ": " << rep.a_id << "/" << rep.b_id
                << " known-difference (" << rep.note << ")\n";
    } else {
      std::cout << rep.rule << ": " << rep.a_id << " "
                << describe(rep.a_result) << ", " << rep.b_id << " "
                << describe(rep.b_result) << "\n";
    }
  }
  if (!runlen.matched) ++failures;
  if (json_out) {
    jout.push_back({{"rule", nullptr},
                    {"id", "A245562"},
                    {"ok", runlen.matched},
                    {"shift", runlen.shift},
                    {"overlap", runlen.overlap},
                    {"detail", runlen.detail}});
    std::cout << jout.dump(2) << "\n";
  } else {
    std::cout << "A245562 (run-length structure): " << describe(runlen)
              << "\n";
    if (failures == 0)
      std::cout << "checked " << reports.size()
                << " rules + A245562: all ok\n";
    else
      std::cout << failures << " failures\n";
  }
  return failures ? 1 : 0;
}

int run_render(const std::string& rule, std::int64_t gen,
               const std::string& out, std::int64_t scale, bool json_out) {
  Bitmap bm = render_generation(parse_rule(rule), gen);
  write_pbm(out, bm, scale);
  if (json_out)
    std::cout << json{{"rule", rule},
                      {"gen", gen},
                      {"path", out},
                      {"width", bm.width * scale},
                      {"height", bm.height * scale},
                      {"black", bm.black_count()}}
                     .dump()
              << "\n";
  else
    std::cout << "wrote " << out << " (" << bm.width * scale << "x"
              << bm.height * scale << ", " << bm.black_count()
              << " cells on)\n";
  return 0;
}

int run_montage(const std::string& rule, std::int64_t max_n,
                std::int64_t cols, const std::string& out, std::int64_t scale,
                bool json_out) {
  Bitmap bm = render_montage(parse_rule(rule), max_n, cols);
  write_pbm(out, bm, scale);
  if (json_out)
    std::cout << json{{"rule", rule},
                      {"max", max_n},
                      {"columns", cols},
                      {"path", out},
                      {"width", bm.width * scale},
                      {"height", bm.height * scale}}
                     .dump()
              << "\n";
  else
    std::cout << "wrote " << out << " (" << bm.width * scale << "x"
              << bm.height * scale << ", generations 0.." << max_n << ")\n";
  return 0;
}

int run_oracle(const std::string& rule, std::int64_t gen, bool json_out) {
  Mask m = parse_rule(rule);
  OracleGrid g = oracle_simulate(m, gen);
  std::int64_t grid = oracle_on_count(g);
  LaurentPoly p = mask_to_poly(m).pow(static_cast<std::uint64_t>(gen));
  bool match = oracle_support(g) == p.support() && grid == p.term_count();
  if (json_out)
    std::cout << json{{"rule", rule},
                      {"gen", gen},
                      {"oracle_cells", grid},
                      {"poly_terms", p.term_count()},
                      {"match", match}}
                     .dump()
              << "\n";
  else
    std::cout << "grid oracle: " << grid << " cells on\n"
              << "polynomial:  " << p.term_count() << " terms\n"
              << "support " << (match ? "match" : "MISMATCH") << "\n";
  return match ? 0 : 1;
}

int run_snapshot(const std::string& out_dir, std::int64_t terms) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::size_t T = static_cast<std::size_t>(terms);
  int written = 0;
  for (const std::string& id : concerned_ids()) {
    OeisSequence seq;
    seq.id = id;
    seq.offset = 0;
    if (id == "A000004") {
      seq.terms.assign(T, BigInt(0));
    } else if (id == "A001045" || id == "A139818") {
      // published entries carry one extra initial term; store from their
      // index 1 so position alignment lands on shift +1
      const char* rule = id == "A001045" ? "007" : "777";
      seq.offset = 1;
      seq.terms.push_back(1);
      auto b = b_seq_window(parse_rule(rule), static_cast<std::int64_t>(T) - 2);
      seq.terms.insert(seq.terms.end(), b.begin(), b.end());
    } else if (id == "A245562") {
      seq.offset = 1;
      seq.terms = flattened_run_lengths(T);
    } else {
      bool found = false;
      for (const RuleInfo& info : kRuleTable) {
        if (info.a_id && id == info.a_id) {
          for (std::int64_t v :
               a_seq(mask_to_poly(parse_rule(info.rule)),
                     static_cast<std::int64_t>(T) - 1))
            seq.terms.emplace_back(v);
          found = true;
          break;
        }
        if (info.b_id && id == info.b_id) {
          seq.terms =
              b_seq_window(parse_rule(info.rule), static_cast<std::int64_t>(T) - 1);
          found = true;
          break;
        }
      }
      if (!found) throw std::runtime_error("no generator for " + id);
    }
    std::ofstream f(fs::path(out_dir) / (id + ".txt"),
                    std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write snapshot for " + id);
    f << format_bfile(seq);
    ++written;
  }
  std::cout << "wrote " << written << " b-files to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odd-rule cellular automaton toolkit"};
  app.require_subcommand(1);
  bool json_out = false;
  int rc = 0;

  std::string rule;
  std::int64_t max_n = 20, b_terms = -1, gen = 8, terms = 36, scale = 1;
  std::int64_t cols = 4;
  int prefix = 26;
  bool b_only = false, offline = false;
  std::string out_path, gf_file = env_or("ODDRULE_GF_TABLE", "data/gf_table.txt");
  std::string snapshot_dir =
      env_or("ODDRULE_SNAPSHOT_DIR", "data/oeis_snapshot");
  std::string cache_dir = env_or("ODDRULE_OEIS_CACHE", "");
  std::string snap_out = "data/oeis_snapshot";
  std::int64_t snap_terms = 40;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", json_out, "machine-readable output");
  };

  CLI::App* c_enum = app.add_subcommand("enumerate",
                                        "list the canonical rules");
  add_json(c_enum);
  c_enum->callback([&] { rc = run_enumerate(json_out); });

  CLI::App* c_canon =
      app.add_subcommand("canon", "canonical form of a rule number");
  c_canon->add_option("rule", rule, "3-digit octal rule")->required();
  add_json(c_canon);
  c_canon->callback([&] { rc = run_canon(rule, json_out); });

  CLI::App* c_seq = app.add_subcommand("seq", "population sequences");
  c_seq->add_option("rule", rule)->required();
  c_seq->add_option("--max", max_n, "last generation index")
      ->check(CLI::NonNegativeNumber);
  c_seq->add_option("--b-terms", b_terms,
                    "extend the doubling subsequence to this many terms");
  c_seq->add_flag("--b-only", b_only, "print the doubling subsequence");
  add_json(c_seq);
  c_seq->callback(
      [&] { rc = run_seq(rule, max_n, b_terms, b_only, json_out); });

  CLI::App* c_gf =
      app.add_subcommand("gf", "guess and verify a generating function");
  c_gf->add_option("rule", rule)->required();
  c_gf->add_option("--terms", terms, "doubling-subsequence terms to compute")
      ->check(CLI::Range(std::int64_t(26), std::int64_t(200)));
  c_gf->add_option("--gf-file", gf_file, "bundled formula table");
  add_json(c_gf);
  c_gf->callback([&] { rc = run_gf(rule, terms, gf_file, json_out); });

  CLI::App* c_classify =
      app.add_subcommand("classify", "population-equivalence classes");
  c_classify->add_option("--prefix", prefix, "b-prefix length (>= 26)");
  add_json(c_classify);
  c_classify->callback([&] { rc = run_classify(prefix, json_out); });

  CLI::App* c_verify = app.add_subcommand(
      "verify-appendix", "check every bundled formula against the engine");
  c_verify->add_option("--gf-file", gf_file, "bundled formula table");
  c_verify->add_option("--expand", max_n, "terms to expand")->default_val(12);
  add_json(c_verify);
  c_verify->callback(
      [&] { rc = run_verify_appendix(gf_file, max_n, json_out); });

  CLI::App* c_cross = app.add_subcommand(
      "crosscheck", "compare sequences against published b-files");
  c_cross->add_flag("--offline", offline,
                    "never touch the network even if enabled");
  c_cross->add_option("--snapshot", snapshot_dir, "bundled snapshot dir");
  c_cross->add_option("--cache", cache_dir, "local cache dir");
  add_json(c_cross);
  c_cross->callback([&] {
    rc = run_crosscheck(offline, snapshot_dir, cache_dir, json_out);
  });

  CLI::App* c_render =
      app.add_subcommand("render", "write one generation as a PBM image");
  c_render->add_option("rule", rule)->required();
  c_render->add_option("--gen", gen, "generation")->required();
  c_render->add_option("--out", out_path, "output file")->required();
  c_render->add_option("--scale", scale)->check(CLI::PositiveNumber);
  add_json(c_render);
  c_render->callback(
      [&] { rc = run_render(rule, gen, out_path, scale, json_out); });

  CLI::App* c_montage = app.add_subcommand(
      "montage", "write generations 0..max as one gridded PBM");
  c_montage->add_option("rule", rule)->required();
  c_montage->add_option("--max", max_n, "last generation")->required();
  c_montage->add_option("--cols", cols)->check(CLI::PositiveNumber);
  c_montage->add_option("--out", out_path, "output file")->required();
  c_montage->add_option("--scale", scale)->check(CLI::PositiveNumber);
  add_json(c_montage);
  c_montage->callback([&] {
    rc = run_montage(rule, max_n, cols, out_path, scale, json_out);
  });

  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "compare the grid simulation against the polynomial");
  c_oracle->add_option("rule", rule)->required();
  c_oracle->add_option("--gen", gen, "generation")->required()
      ->check(CLI::Range(std::int64_t(0), std::int64_t(256)));
  add_json(c_oracle);
  c_oracle->callback([&] { rc = run_oracle(rule, gen, json_out); });

  CLI::App* c_snap = app.add_subcommand(
      "snapshot", "regenerate the bundled b-file snapshot");
  c_snap->add_option("--out", snap_out, "output directory");
  c_snap->add_option("--terms", snap_terms, "terms per sequence")
      ->check(CLI::Range(std::int64_t(24), std::int64_t(200)));
  c_snap->callback([&] { rc = run_snapshot(snap_out, snap_terms); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
