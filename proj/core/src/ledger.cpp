#include "lcd/ledger.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "lcd/conjecture.hpp"
#include "lcd/constructions.hpp"
#include "lcd/errors.hpp"
#include "lcd/field_expansion.hpp"
#include "lcd/io.hpp"
#include "lcd/search.hpp"

namespace lcd {

namespace {

using nlohmann::json;

std::size_t one_based(const json& v, std::size_t n, const char* what) {
  const auto i = v.get<std::size_t>();
  if (i == 0 || i > n) throw PreconditionError(std::string(what) + " out of range");
  return i - 1;
}

CoordinateSet coordinates(const json& aux, std::size_t n) {
  std::vector<std::size_t> idx;
  for (const auto& v : aux.at("coordinates")) idx.push_back(one_based(v, n, "coordinate"));
  return CoordinateSet::zero_based(std::move(idx));
}

BitVector bits(const json& aux, const char* key, std::size_t length) {
  const BitVector v = BitVector::from_string(aux.at(key).get<std::string>());
  if (v.size() != length)
    throw PreconditionError(std::string(key) + " has length " + std::to_string(v.size()) + ", expected " +
                            std::to_string(length));
  return v;
}

using BinaryOp = std::function<LinearCode(const LinearCode&, const json&)>;

const std::map<std::string, BinaryOp>& binary_ops() {
  static const std::map<std::string, BinaryOp> ops = {
      {"extend_even", [](const LinearCode& c, const json&) { return extend_even(c).code; }},
      {"extend_odd_two", [](const LinearCode& c, const json&) { return extend_odd_two(c).code; }},
      {"puncture_even_lcd",
       [](const LinearCode& c, const json& a) {
         return puncture_even_lcd(c, one_based(a.at("coordinate"), c.length(), "coordinate")).code;
       }},
      {"shorten_odd_lcd",
       [](const LinearCode& c, const json& a) {
         std::optional<std::size_t> i;
         if (a.contains("coordinate")) i = one_based(a.at("coordinate"), c.length(), "coordinate");
         return shorten_odd_lcd(c, i).shortened.code;
       }},
      {"puncture_to_lcd",
       [](const LinearCode& c, const json& a) { return puncture_to_lcd(c, coordinates(a, c.length())).code; }},
      {"hull_shorten",
       [](const LinearCode& c, const json& a) {
         std::optional<CoordinateSet> t;
         if (a.contains("coordinates")) t = coordinates(a, c.length());
         return hull_shorten(c, t).code;
       }},
      {"hull_puncture",
       [](const LinearCode& c, const json& a) {
         std::optional<CoordinateSet> t;
         if (a.contains("coordinates")) t = coordinates(a, c.length());
         return hull_puncture(c, t).code;
       }},
      {"extend_row_dual",
       [](const LinearCode& c, const json& a) { return extend_row_dual(c, bits(a, "x", c.length())).code; }},
      {"extend_systematic",
       [](const LinearCode& c, const json& a) {
         const auto v = extend_systematic(c, bits(a, "x", c.length() - c.dimension()));
         if (!v.lcd) throw PreconditionError("x gives a code that is not LCD");
         return v.outcome->code;
       }},
      {"extend_hull_drop",
       [](const LinearCode& c, const json& a) { return extend_hull_drop(c, bits(a, "x", c.length())).code; }},
      {"extend_column_hull_drop",
       [](const LinearCode& c, const json& a) {
         return extend_column_hull_drop(c, bits(a, "y", c.dimension())).code;
       }},
      {"extend_two_multi",
       [](const LinearCode& c, const json& a) {
         const auto all = extend_two_multi(c);
         const std::size_t i = a.value("index", std::size_t{0});
         if (i >= all.size()) throw PreconditionError("index beyond the 2^(k-1) variants");
         return all[i].code;
       }},
      {"certify_step_down", [](const LinearCode& c, const json&) { return certify_step_down(c).output; }},
  };
  return ops;
}

LinearCode expand_op(const ExtFieldCode& c, const json& aux) {
  ExtMatrix g = c.generator();
  if (aux.contains("transform_prefix")) {
    const auto prefix = aux.at("transform_prefix").get<std::vector<Element>>();
    if (prefix.size() > c.length()) throw PreconditionError("transform longer than the code");
    for (std::size_t j = 0; j < prefix.size(); ++j) {
      if (prefix[j] == 0 || !c.field().contains(prefix[j])) throw PreconditionError("transform entry is not a unit");
      for (auto& row : g) row[j] = c.field().mul(row[j], prefix[j]);
    }
  }
  const ExtFieldCode scaled(c.field(), c.length(), std::move(g));
  return expand_code(scaled, find_self_dual_basis(c.field()));
}

bool known_op(const std::string& op) { return op == "expand" || binary_ops().count(op) != 0; }

}  // namespace

std::vector<std::string> registered_ops() {
  std::vector<std::string> out{"expand"};
  for (const auto& [name, fn] : binary_ops()) out.push_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConstructionRecord> parse_ledger(std::istream& in) {
  std::vector<ConstructionRecord> out;
  std::map<std::string, std::size_t> ids;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (text.find_first_not_of(" \t\r") == std::string::npos || text[text.find_first_not_of(" \t")] == '#') continue;
    ConstructionRecord r;
    r.line = line;
    try {
      const json j = json::parse(text);
      r.id = j.at("id").get<std::string>();
      r.group = j.value("group", "");
      r.op = j.at("op").get<std::string>();
      r.inputs = j.at("inputs");
      r.aux = j.value("aux", json::object());
      const auto e = j.at("expect").get<std::vector<std::size_t>>();
      if (e.size() != 3) throw ParseError(line, "expect must be [n,k,d]");
      r.expect = {e[0], e[1], e[2]};
      r.status = j.at("status").get<std::string>();
      r.note = j.value("note", "");
      if (!r.inputs.contains("code")) throw ParseError(line, "inputs.code missing");
    } catch (const json::exception& e) {
      throw ParseError(line, e.what());
    }
    if (!known_op(r.op)) throw ParseError(line, "unknown op '" + r.op + "'");
    if (r.status != "BUILTIN" && r.status != "EXTERNAL") throw ParseError(line, "status must be BUILTIN or EXTERNAL");
    if (!ids.emplace(r.id, line).second) throw ParseError(line, "duplicate id '" + r.id + "'");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ConstructionRecord> load_ledger(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_ledger(in);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped_missing_seed: return "SKIPPED-MISSING-SEED";
    case Verdict::unverified: return "UNVERIFIED";
  }
  return "?";
}

LedgerRunner::LedgerRunner(std::vector<ConstructionRecord> records, std::filesystem::path base_dir)
    : records_(std::move(records)), base_(std::move(base_dir)) {
  for (std::size_t i = 0; i < records_.size(); ++i) index_[records_[i].id] = i;
}

const RowResult& LedgerRunner::run(const std::string& id) {
  if (auto it = done_.find(id); it != done_.end()) return it->second;
  const auto at = index_.find(id);
  if (at == index_.end()) throw PreconditionError("no ledger row '" + id + "'");
  if (std::find(active_.begin(), active_.end(), id) != active_.end())
    throw PreconditionError("ledger rows depend on each other in a cycle through '" + id + "'");
  active_.push_back(id);
  RowResult res = evaluate(records_[at->second]);
  active_.pop_back();
  return done_.emplace(id, std::move(res)).first->second;
}

std::vector<RowResult> LedgerRunner::run_all() {
  std::vector<RowResult> out;
  for (const auto& r : records_) out.push_back(run(r.id));
  return out;
}

RowResult LedgerRunner::evaluate(const ConstructionRecord& r) {
  RowResult res;
  res.id = r.id;
  res.op = r.op;
  auto fail = [&](const std::string& why) {
    res.verdict = Verdict::fail;
    res.detail = why;
    return res;
  };

  // Resolve the input.
  std::optional<AnyCode> input;
  const json& src = r.inputs.at("code");
  try {
    if (src.contains("rows")) {
      std::vector<std::string> rows = src.at("rows").get<std::vector<std::string>>();
      input = LinearCode(BitMatrix::from_strings(rows));
    } else if (src.contains("ext")) {
      const json& e = src.at("ext");
      const ExtField f = ExtField::standard(e.at("m").get<std::size_t>());
      const auto rows = e.at("rows").get<ExtMatrix>();
      input = ExtFieldCode(f, rows.empty() ? 0 : rows[0].size(), rows);
    } else if (src.contains("file")) {
      const auto path = base_ / src.at("file").get<std::string>();
      if (!std::filesystem::exists(path)) {
        res.verdict = Verdict::skipped_missing_seed;
        res.detail = "seed " + src.at("file").get<std::string>() + " not present";
        return res;
      }
      input = read_code(path);
    } else if (src.contains("row")) {
      const RowResult& up = run(src.at("row").get<std::string>());
      if (up.verdict == Verdict::skipped_missing_seed) {
        res.verdict = Verdict::skipped_missing_seed;
        res.detail = "upstream " + up.id + " skipped";
        return res;
      }
      if (!up.output) return fail("upstream " + up.id + " produced nothing");
      input = *up.output;
    } else if (src.contains("search")) {
      const json& s = src.at("search");
      const auto found = search_lcd(s.at("n").get<std::size_t>(), s.at("k").get<std::size_t>(),
                                    s.at("d").get<std::size_t>(), s.value("seed", kDefaultSeed));
      if (!found.code) return fail("search found no code");
      input = *found.code;
    } else {
      return fail("unrecognized input source");
    }
  } catch (const ParseError& e) {
    return fail(std::string("input: ") + e.what());
  } catch (const std::exception& e) {
    return fail(std::string("input: ") + e.what());
  }

  if (r.inputs.contains("params")) {
    const auto p = r.inputs.at("params").get<std::vector<std::size_t>>();
    const std::size_t n = std::visit([](const auto& c) { return c.length(); }, *input);
    const std::size_t k = std::visit([](const auto& c) { return c.dimension(); }, *input);
    if (p.size() >= 2 && (p[0] != n || p[1] != k))
      return fail("input is [" + std::to_string(n) + "," + std::to_string(k) + "], expected [" +
                  std::to_string(p[0]) + "," + std::to_string(p[1]) + "]");
  }

  // Apply the construction.
  try {
    if (r.op == "expand") {
      const auto* ext = std::get_if<ExtFieldCode>(&*input);
      if (!ext) return fail("expand needs an extension-field code");
      res.output = expand_op(*ext, r.aux);
    } else {
      const auto* bin = std::get_if<LinearCode>(&*input);
      if (!bin) return fail(r.op + " needs a binary code");
      res.output = binary_ops().at(r.op)(*bin, r.aux);
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }

  // Verify.
  const LinearCode& out = *res.output;
  if (out.length() != r.expect[0] || out.dimension() != r.expect[1])
    return fail("got [" + std::to_string(out.length()) + "," + std::to_string(out.dimension()) + "]");
  if (!is_lcd(out)) return fail("output is not LCD (hull " + std::to_string(hull_dimension(out)) + ")");
  if (out.dimension() == 0) {
    res.verdict = Verdict::pass;
    return res;
  }
  res.distance = try_min_distance(out);
  if (!res.distance) {
    res.verdict = Verdict::unverified;
    res.detail = "d unverifiable at budget";
    return res;
  }
  if (*res.distance < r.expect[2]) return fail("d = " + std::to_string(*res.distance));
  res.verdict = Verdict::pass;
  res.detail = "d = " + std::to_string(*res.distance);
  return res;
}

LedgerSummary summarize(const std::vector<RowResult>& results) {
  LedgerSummary s;
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::skipped_missing_seed: ++s.skipped; break;
      case Verdict::unverified: ++s.unverified; break;
    }
  }
  return s;
}

int ledger_exit_code(const LedgerSummary& s) {
  if (s.fail > 0) return 1;
  return s.pass > 0 ? 0 : 2;
}

std::string format_row(const ConstructionRecord& r, const RowResult& res) {
  std::ostringstream os;
  os << r.id << " " << r.op << " [" << r.expect[0] << "," << r.expect[1] << "," << r.expect[2] << "] "
     << to_string(res.verdict);
  if (!res.detail.empty()) os << " " << res.detail;
  return os.str();
}

}  // namespace lcd
