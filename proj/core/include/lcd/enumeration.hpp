#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcd/linear_code.hpp"

namespace lcd {

/// Largest length the systematic enumerator accepts.
inline constexpr std::size_t kEnumerationMaxLength = 12;

/// Options for walking systematic generators [I_k | A].
struct SystematicWalk {
  std::size_t n = 0;
  std::size_t k = 0;
  /// Keep only A with rows and columns both non-increasing (first entry most
  /// significant). Every code is equivalent to at least one such generator.
  bool canonical = true;
  /// Every nonzero codeword must have at least this weight (0 disables).
  std::size_t min_distance = 0;
  /// Reject codes that are not LCD.
  bool lcd_only = true;
};

/// Calls visit(rows) for every matching A, rows given as integers whose most
/// significant of n - k bits is column k. Stops when visit returns false.
/// Returns the number of codes visited.
std::uint64_t walk_systematic(const SystematicWalk& walk,
                              const std::function<bool(const std::vector<std::uint64_t>&)>& visit);

/// The code generated by [I_k | A] for rows encoded as in walk_systematic.
LinearCode systematic_code(std::size_t n, std::size_t k, const std::vector<std::uint64_t>& a_rows);

/// Largest d for which a binary [n, k, d] linear code can exist (Griesmer).
std::size_t griesmer_max_distance(std::size_t n, std::size_t k);

/// d_LCD(n, k) by search over systematic generators, trying d from the
/// Griesmer bound downwards. `canonical` switches the orbit pruning.
std::size_t dlcd_exact(std::size_t n, std::size_t k, bool canonical = true);

/// d_LCD(n, 1) in closed form: n for odd n, n - 1 for even n.
std::size_t dlcd_dimension_one(std::size_t n);

struct DlcdTable {
  std::size_t n_max = 0;
  /// value(n, k) for 1 <= k <= n <= n_max.
  std::vector<std::vector<std::size_t>> d;

  std::size_t value(std::size_t n, std::size_t k) const { return d.at(n).at(k); }
};

/// Exact table for 1 <= k <= n <= n_max (n_max <= kEnumerationMaxLength), one
/// worker per dimension.
DlcdTable dlcd_table(std::size_t n_max, unsigned workers = 0);

/// Human-readable violations of the k = 1 closed form, the step property
/// d(n+1,k) - d(n,k) in {0,1} for k >= 2, monotonicity in n and antitonicity
/// in k. Empty when the table is consistent.
std::vector<std::string> check_dlcd_table(const DlcdTable& table);

/// Representatives, up to column permutation, of all LCD_oe codes of length
/// n with k >= 2 and d >= 3 (several representatives per class may appear).
std::vector<LinearCode> lcd_oe_corpus(std::size_t n);

}  // namespace lcd
