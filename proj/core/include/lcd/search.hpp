#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "lcd/linear_code.hpp"

namespace lcd {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'1cd0'2024'0001ULL;

struct SearchBudget {
  /// Candidate evaluations over all restarts.
  std::uint64_t evaluations = 200000;
  /// Evaluations without improvement before a restart.
  std::uint64_t patience = 2000;
  /// Wall-clock cap; results are only reproducible when it is not hit.
  std::optional<std::chrono::milliseconds> time_limit;
};

struct SearchResult {
  std::optional<LinearCode> code;
  std::size_t best_distance = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t restarts = 0;
  /// True when d_target exceeds the Griesmer bound and nothing was tried.
  bool impossible = false;
};

/// Hill climb over systematic generators [I_k | A] that only ever holds LCD
/// codes: a move flips one entry of A and is rejected if the result is not
/// LCD. Scores are (d, -#codewords of weight d), compared lexicographically;
/// sideways moves are accepted. Returns the first code with d >= d_target.
/// Deterministic for a given seed. Requires 1 <= k <= n <= 64.
SearchResult search_lcd(std::size_t n, std::size_t k, std::size_t d_target, std::uint64_t seed = kDefaultSeed,
                        const SearchBudget& budget = {});

}  // namespace lcd
