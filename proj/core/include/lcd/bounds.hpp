#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcd/enumeration.hpp"

namespace lcd {

struct BoundsEntry {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
};

/// Lower/upper bounds on d_LCD(n, k), keyed by (n, k).
struct BoundsLedger {
  std::map<std::pair<std::size_t, std::size_t>, BoundsEntry> entries;
};

/// Reads {"entries": [{"n","k","lower","upper","status": "exact"|"interval"}, ...]}.
/// Throws ParseError on malformed input.
BoundsLedger load_bounds(const std::filesystem::path& path);
BoundsLedger parse_bounds(const std::string& text);

/// Exact table as a ledger (every entry exact).
BoundsLedger bounds_from_table(const DlcdTable& table);

/// Violations of lower <= upper, exact => lower = upper, and, where both
/// neighbours are present, of what d(n,k) <= d(n+1,k) <= d(n,k) + 1 and
/// d(n,k) <= d(n,k-1) allow: lower(n,k) <= upper(n+1,k),
/// lower(n+1,k) <= upper(n,k) + 1 (k >= 2 only; for k = 1 the value jumps
/// by two from even to odd n), lower(n,k) <= upper(n,k-1).
std::vector<std::string> check_bounds(const BoundsLedger& ledger);

}  // namespace lcd
