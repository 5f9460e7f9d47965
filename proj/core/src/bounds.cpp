#include "lcd/bounds.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lcd/errors.hpp"

namespace lcd {

BoundsLedger parse_bounds(const std::string& text) {
  BoundsLedger out;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& e : j.at("entries")) {
      BoundsEntry b;
      b.lower = e.at("lower").get<std::size_t>();
      b.upper = e.at("upper").get<std::size_t>();
      const auto status = e.at("status").get<std::string>();
      if (status != "exact" && status != "interval") throw ParseError(0, "status must be exact or interval");
      b.exact = status == "exact";
      const auto key = std::make_pair(e.at("n").get<std::size_t>(), e.at("k").get<std::size_t>());
      if (!out.entries.emplace(key, b).second)
        throw ParseError(0, "duplicate entry (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  }
  return out;
}

BoundsLedger load_bounds(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bounds(ss.str());
}

BoundsLedger bounds_from_table(const DlcdTable& table) {
  BoundsLedger out;
  for (std::size_t n = 1; n <= table.n_max; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t d = table.value(n, k);
      out.entries[{n, k}] = {d, d, true};
    }
  return out;
}

std::vector<std::string> check_bounds(const BoundsLedger& ledger) {
  std::vector<std::string> bad;
  auto at = [](std::size_t n, std::size_t k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; };
  auto find = [&](std::size_t n, std::size_t k) -> const BoundsEntry* {
    const auto it = ledger.entries.find({n, k});
    return it == ledger.entries.end() ? nullptr : &it->second;
  };
  for (const auto& [key, e] : ledger.entries) {
    const auto [n, k] = key;
    if (e.lower > e.upper) bad.push_back("lower above upper at " + at(n, k));
    if (e.exact && e.lower != e.upper) bad.push_back("exact entry with an interval at " + at(n, k));
    if (const auto* next = find(n + 1, k)) {
      if (e.lower > next->upper) bad.push_back("not monotone in n at " + at(n, k));
      if (k >= 2 && next->lower > e.upper + 1) bad.push_back("step larger than one at " + at(n, k));
    }
    if (k > 1)
      if (const auto* prev = find(n, k - 1); prev && e.lower > prev->upper)
        bad.push_back("not antitone in k at " + at(n, k));
  }
  return bad;
}

}  // namespace lcd
