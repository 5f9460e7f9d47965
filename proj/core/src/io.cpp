#include "lcd/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "lcd/errors.hpp"

namespace lcd {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t to_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty() || tok[0] == '-')
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

void expect_row_count(const std::vector<Line>& lines, std::size_t k) {
  if (lines.size() - 1 < k)
    throw ParseError(lines.back().number, "expected " + std::to_string(k) + " rows, found " +
                                              std::to_string(lines.size() - 1));
  if (lines.size() - 1 > k) throw ParseError(lines[k + 1].number, "more rows than k");
}

LinearCode gen1_from(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "missing header 'n k'");
  const Line& head = lines[0];
  if (head.tokens.size() != 2) throw ParseError(head.number, "GEN1 header must be 'n k'");
  const std::size_t n = to_count(head.tokens[0], head.number, "n");
  const std::size_t k = to_count(head.tokens[1], head.number, "k");
  if (k > n) throw ParseError(head.number, "k exceeds n");
  expect_row_count(lines, k);
  BitMatrix g(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    const Line& l = lines[i + 1];
    std::string row;
    for (const auto& t : l.tokens) row += t;
    if (row.size() != n)
      throw ParseError(l.number, "row has " + std::to_string(row.size()) + " symbols, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] != '0' && row[j] != '1') throw ParseError(l.number, std::string("bad symbol '") + row[j] + "'");
      if (row[j] == '1') g.set(i, j);
    }
  }
  if (g.rank() != k) throw ParseError(head.number, "generator rows are linearly dependent");
  return LinearCode(std::move(g));
}

ExtFieldCode extgen1_from(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "missing header 'n k m'");
  const Line& head = lines[0];
  if (head.tokens.size() != 3) throw ParseError(head.number, "EXTGEN1 header must be 'n k m'");
  const std::size_t n = to_count(head.tokens[0], head.number, "n");
  const std::size_t k = to_count(head.tokens[1], head.number, "k");
  const std::size_t m = to_count(head.tokens[2], head.number, "m");
  if (k > n) throw ParseError(head.number, "k exceeds n");
  if (m < 1 || m > 4) throw ParseError(head.number, "m must be in 1..4");
  const ExtField f = ExtField::standard(m);
  expect_row_count(lines, k);
  ExtMatrix g;
  for (std::size_t i = 0; i < k; ++i) {
    const Line& l = lines[i + 1];
    if (l.tokens.size() != n)
      throw ParseError(l.number, "row has " + std::to_string(l.tokens.size()) + " entries, expected " +
                                     std::to_string(n));
    ExtVector row;
    for (const auto& t : l.tokens) {
      const std::size_t v = to_count(t, l.number, "a field element");
      if (v >= f.size()) throw ParseError(l.number, "element " + t + " outside GF(2^" + std::to_string(m) + ")");
      row.push_back(static_cast<Element>(v));
    }
    g.push_back(std::move(row));
  }
  if (ext_rank(f, g) != k) throw ParseError(head.number, "generator rows are linearly dependent");
  return ExtFieldCode(f, n, std::move(g));
}

std::vector<Line> tokenize_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return tokenize(in);
}

}  // namespace

LinearCode parse_gen1(std::istream& in) { return gen1_from(tokenize(in)); }

ExtFieldCode parse_extgen1(std::istream& in) { return extgen1_from(tokenize(in)); }

std::string format_gen1(const LinearCode& c) {
  std::string out = std::to_string(c.length()) + " " + std::to_string(c.dimension()) + "\n";
  for (const auto& r : c.generator().row_list()) out += r.to_string() + "\n";
  return out;
}

std::string format_extgen1(const ExtFieldCode& c) {
  std::string out = std::to_string(c.length()) + " " + std::to_string(c.dimension()) + " " +
                    std::to_string(c.field().degree()) + "\n";
  for (const auto& row : c.generator()) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
    out += "\n";
  }
  return out;
}

AnyCode read_code(const std::filesystem::path& path, std::optional<CodeFormat> format) {
  const auto lines = tokenize_file(path);
  if (!format) format = !lines.empty() && lines[0].tokens.size() == 3 ? CodeFormat::extgen1 : CodeFormat::gen1;
  if (*format == CodeFormat::extgen1) return extgen1_from(lines);
  return gen1_from(lines);
}

LinearCode read_gen1(const std::filesystem::path& path) { return gen1_from(tokenize_file(path)); }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace lcd
