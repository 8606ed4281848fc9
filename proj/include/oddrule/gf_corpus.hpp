#pragma once
// Loader for the bundled generating-function corpus (data/gf_table.txt).
// Format: section header lines ending in ':', entry lines
// "NNN: (Axxxxxx) EXPR", and continuation lines that start with whitespace
// and extend the previous entry's expression.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddrule {

struct CorpusEntry {
  std::string rule;  // 3-digit octal string
  std::string id;    // published sequence id for the b-sequence
  std::string expr;  // linear ASCII formula
  int line = 0;      // 1-based line of the entry header
};

inline std::vector<CorpusEntry> parse_gf_corpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == ' ' || line[0] == '\t') {  // continuation
      if (out.empty())
        throw std::runtime_error("gf corpus line " + std::to_string(lineno) +
                                 ": continuation with no open entry");
      std::size_t s = line.find_first_not_of(" \t");
      std::size_t e = line.find_last_not_of(" \t\r");
      out.back().expr += line.substr(s, e - s + 1);
      continue;
    }
    std::size_t e = line.find_last_not_of(" \t\r");
    if (line[e] == ':') continue;  // section header
    CorpusEntry entry;
    entry.line = lineno;
    if (line.size() < 16 || line[3] != ':' || line[4] != ' ' ||
        line[5] != '(' || line[13] != ')' || line[14] != ' ')
      throw std::runtime_error("gf corpus line " + std::to_string(lineno) +
                               ": expected 'NNN: (Axxxxxx) expr', got '" +
                               line + "'");
    entry.rule = line.substr(0, 3);
    entry.id = line.substr(6, 7);
    entry.expr = line.substr(15, e - 14);
    for (char c : entry.rule)
      if (c < '0' || c > '7')
        throw std::runtime_error("gf corpus line " + std::to_string(lineno) +
                                 ": bad rule number '" + entry.rule + "'");
    out.push_back(std::move(entry));
  }
  return out;
}

inline std::vector<CorpusEntry> load_gf_corpus(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw std::runtime_error("cannot open gf corpus at " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_gf_corpus(ss.str());
}

}  // namespace oddrule
