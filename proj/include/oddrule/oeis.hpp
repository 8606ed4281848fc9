#pragma once
// OEIS b-file bridge: parse/format, a client with bundled-snapshot and
// local-cache lookup (network fetch is injected by the application), and
// position-based alignment of our sequences against published terms.

#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <unistd.h>

#include "oddrule/rule_table.hpp"
#include "oddrule/sequence.hpp"

namespace oddrule {

struct OeisSequence {
  std::string id;       // "A" + 6 digits
  std::int64_t offset = 0;  // index of the first stored term
  std::vector<BigInt> terms;
  std::string source;      // "network" | "bundled-snapshot"
  std::string fetched_at;  // RFC3339-ish timestamp, empty for the snapshot
};

inline bool valid_oeis_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < 7; ++i)
    if (id[i] < '0' || id[i] > '9') return false;
  return true;
}

// Parse b-file text: "index value" per line, '#' comments, blank lines
// ignored.  Indices must be contiguous and ascending.
inline OeisSequence parse_bfile(const std::string& text,
                                const std::string& id) {
  OeisSequence seq;
  seq.id = id;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_first = false;
  std::int64_t expect = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t at = line.find_first_not_of(" \t\r");
    if (at == std::string::npos || line[at] == '#') continue;
    std::istringstream ls(line);
    std::int64_t idx;
    std::string value;
    if (!(ls >> idx >> value))
      throw std::runtime_error(id + " b-file line " + std::to_string(lineno) +
                               ": expected 'index value', got '" + line + "'");
    std::size_t digits_from = value[0] == '-' ? 1 : 0;
    if (value.size() == digits_from)
      throw std::runtime_error(id + " b-file line " + std::to_string(lineno) +
                               ": bad integer '" + value + "'");
    for (std::size_t i = digits_from; i < value.size(); ++i)
      if (value[i] < '0' || value[i] > '9')
        throw std::runtime_error(id + " b-file line " + std::to_string(lineno) +
                                 ": bad integer '" + value + "'");
    if (!have_first) {
      seq.offset = idx;
      expect = idx;
      have_first = true;
    }
    if (idx != expect)
      throw std::runtime_error(id + " b-file line " + std::to_string(lineno) +
                               ": index " + std::to_string(idx) +
                               " breaks the run (expected " +
                               std::to_string(expect) + ")");
    ++expect;
    seq.terms.emplace_back(value);
  }
  if (seq.terms.empty())
    throw std::runtime_error(id + " b-file holds no terms");
  return seq;
}

inline std::string format_bfile(const OeisSequence& seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    s += std::to_string(seq.offset + static_cast<std::int64_t>(i));
    s += ' ';
    s += seq.terms[i].str();
    s += '\n';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Client.  Resolution order: local cache, injected network fetcher (which
// populates the cache atomically), bundled snapshot.  With no fetcher the
// client is fully offline.

class OeisClient {
public:
  using Fetcher = std::function<std::string(const std::string& id)>;

  explicit OeisClient(std::filesystem::path snapshot_dir,
                      std::filesystem::path cache_dir = {},
                      Fetcher fetcher = nullptr)
      : snapshot_(std::move(snapshot_dir)),
        cache_(std::move(cache_dir)),
        fetcher_(std::move(fetcher)) {}

  OeisSequence fetch_bfile(const std::string& id) const {
    if (!valid_oeis_id(id))
      throw std::invalid_argument("malformed OEIS id '" + id + "'");
    if (!cache_.empty()) {
      if (auto cached = read_dir(cache_, id, "network")) return *cached;
    }
    if (fetcher_) {
      std::string body = fetcher_(id);
      if (!body.empty()) {
        OeisSequence seq = parse_bfile(body, id);
        seq.source = "network";
        seq.fetched_at = now_stamp();
        if (!cache_.empty()) write_atomic(cache_ / (id + ".txt"), body);
        return seq;
      }
    }
    if (auto snap = read_dir(snapshot_, id, "bundled-snapshot")) return *snap;
    throw std::runtime_error("sequence " + id +
                             " not found in cache, network, or snapshot");
  }

  const std::filesystem::path& snapshot_dir() const { return snapshot_; }

private:
  std::filesystem::path snapshot_;
  std::filesystem::path cache_;
  Fetcher fetcher_;

  static std::optional<OeisSequence> read_dir(const std::filesystem::path& dir,
                                              const std::string& id,
                                              const std::string& source) {
    if (dir.empty()) return std::nullopt;
    std::filesystem::path p = dir / (id + ".txt");
    std::ifstream f(p);
    if (!f) return std::nullopt;
    std::ostringstream ss;
    ss << f.rdbuf();
    OeisSequence seq = parse_bfile(ss.str(), id);
    seq.source = source;
    return seq;
  }

  static std::string now_stamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
  }

  // write-then-rename so concurrent writers never expose partial files
  static void write_atomic(const std::filesystem::path& path,
                           const std::string& body) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      f << body;
    }
    std::filesystem::rename(tmp, path);
  }
};

// ---------------------------------------------------------------------------
// Alignment.  Published entries sometimes carry one extra (or one missing)
// initial term relative to our indexing, so compare ours[n] against
// terms[n + shift] for shift in {-1, 0, +1} and take the first shift whose
// whole overlap agrees.

struct AlignResult {
  bool matched = false;
  int shift = 0;
  std::int64_t overlap = 0;
  std::string detail;  // on mismatch: first divergence per attempted shift
};

inline AlignResult align_terms(const std::vector<BigInt>& ours,
                               const OeisSequence& theirs,
                               std::int64_t min_overlap = 16) {
  AlignResult res;
  for (int shift : {-1, 0, 1}) {
    std::int64_t lo = std::max<std::int64_t>(0, -shift);
    std::int64_t hi = std::min<std::int64_t>(
        static_cast<std::int64_t>(ours.size()),
        static_cast<std::int64_t>(theirs.terms.size()) - shift);
    std::int64_t overlap = hi - lo;
    if (overlap < min_overlap) {
      res.detail += "shift " + std::to_string(shift) + ": overlap " +
                    std::to_string(overlap) + " below the required " +
                    std::to_string(min_overlap) + "; ";
      continue;
    }
    std::int64_t bad = -1;
    for (std::int64_t n = lo; n < hi; ++n)
      if (ours[static_cast<std::size_t>(n)] !=
          theirs.terms[static_cast<std::size_t>(n + shift)]) {
        bad = n;
        break;
      }
    if (bad < 0) {
      res.matched = true;
      res.shift = shift;
      res.overlap = overlap;
      res.detail.clear();
      return res;
    }
    res.detail += "shift " + std::to_string(shift) + ": first divergence at n=" +
                  std::to_string(bad) + "; ";
  }
  return res;
}

struct CrosscheckReport {
  std::string rule;
  std::string a_id, b_id;
  AlignResult a_result, b_result;
  bool known_difference = false;  // documented n=0 divergence, not a failure
  std::string note;
  bool ok() const {
    return (a_result.matched && b_result.matched) || known_difference;
  }
};

// Compare a rule's record against its published a- and b-sequences.
//
// Rule 000 is the one documented divergence: its published id (A000004) is
// the all-zero sequence while |F^0| = 1, so the n=0 term can never match.
// That case is validated term-by-term from n=1 and reported as a known
// difference rather than a failure.
inline CrosscheckReport crosscheck(const SequenceRecord& record,
                                   const std::string& a_id,
                                   const std::string& b_id,
                                   const OeisClient& client,
                                   std::int64_t min_overlap = 16) {
  CrosscheckReport rep;
  rep.rule = record.rule;
  rep.a_id = a_id;
  rep.b_id = b_id;
  std::vector<BigInt> a_terms(record.a_terms.begin(), record.a_terms.end());
  OeisSequence a_pub = client.fetch_bfile(a_id);
  OeisSequence b_pub = client.fetch_bfile(b_id);
  if (record.rule == "000") {
    auto tail_zero = [](const OeisSequence& pub, const std::vector<BigInt>& ours) {
      for (std::size_t n = 1; n < ours.size() && n < pub.terms.size(); ++n)
        if (ours[n] != pub.terms[n]) return false;
      return true;
    };
    std::vector<BigInt> b_terms(record.b_terms.begin(), record.b_terms.end());
    rep.known_difference = tail_zero(a_pub, a_terms) && tail_zero(b_pub, b_terms);
    rep.note =
        "published entry pins 0 at n=0 where the empty rule's zeroth power "
        "has one term; all later terms agree";
    return rep;
  }
  rep.a_result = align_terms(a_terms, a_pub, min_overlap);
  rep.b_result = align_terms(record.b_terms, b_pub, min_overlap);
  return rep;
}

}  // namespace oddrule
