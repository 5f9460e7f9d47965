#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcd/linear_code.hpp"

namespace lcd {

/// Parameters a construction promises. d_lower is absent when the input
/// distance could not be computed within the engine budgets.
struct ClaimedParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d_lower;
};

/// Data needed to replay a construction bit-exactly. Coordinates are 0-based.
struct ConstructionWitness {
  std::vector<std::size_t> coordinates;
  std::vector<BitVector> vectors;
  std::string note;
};

struct ConstructionOutcome {
  LinearCode code;
  ClaimedParameters claimed;
  ConstructionWitness witness;
};

/// Exact distance, or nothing when both engines are out of budget.
std::optional<std::size_t> try_min_distance(const LinearCode& c);

/// Rows (1, c_i) over an orthonormal basis: [n+1, k, d+1] even-like LCD.
/// Requires an LCD code with k even and d odd.
ConstructionOutcome extend_even(const LinearCode& c);

/// Rows (1, 1, c_i) over an orthonormal basis: [n+2, k, >= d+1] odd-like LCD.
/// Requires an LCD code with k odd and d odd.
ConstructionOutcome extend_odd_two(const LinearCode& c);

/// Puncturing an even-like LCD code on one coordinate keeps it LCD.
ConstructionOutcome puncture_even_lcd(const LinearCode& c, std::size_t coordinate);

struct ShortenOddResult {
  ConstructionOutcome shortened;
  /// Present when 1_n is not in C: a coordinate whose puncturing is LCD.
  std::optional<ConstructionOutcome> punctured;
};

/// Shortening of an odd-like LCD code. With 1_n in C every coordinate works and
/// `coordinate` (default 0) is used. Otherwise the requested coordinate is
/// tried first, then the rest in ascending order, and a puncture coordinate is
/// searched for as well.
ShortenOddResult shorten_odd_lcd(const LinearCode& c, std::optional<std::size_t> coordinate = std::nullopt);

/// Puncturing on an arbitrary coordinate set, accepted only if the result is LCD.
ConstructionOutcome puncture_to_lcd(const LinearCode& c, const CoordinateSet& t);

struct SubsetSearchBudget {
  /// Maximum number of coordinate sets tried when n exceeds the exhaustive limit.
  std::size_t max_tries = std::size_t{1} << 20;
  /// Lengths up to this bound are searched exhaustively regardless of max_tries.
  std::size_t exhaustive_length = 20;
};

/// Finds T with |T| = l = dim Hull(C) such that shortening on T gives an
/// [n-l, k-l, >= d] LCD code. A supplied T is only checked.
ConstructionOutcome hull_shorten(const LinearCode& c, std::optional<CoordinateSet> t = std::nullopt,
                                 SubsetSearchBudget budget = {});

/// Finds T with |T| = l = dim Hull(C) < d such that puncturing on T gives an
/// [n-l, k, >= d-l] LCD code. A supplied T is only checked.
ConstructionOutcome hull_puncture(const LinearCode& c, std::optional<CoordinateSet> t = std::nullopt,
                                  SubsetSearchBudget budget = {});

/// Support of the hull vector of a code with one-dimensional hull; puncturing
/// on any of these coordinates is LCD (each is checked).
std::vector<std::size_t> hull1_puncture(const LinearCode& c);

/// Generator [[1, x], [0, G]] for x in the dual with even weight: [n+1, k+1] LCD.
ConstructionOutcome extend_row_dual(const LinearCode& c, const BitVector& x);

struct SystematicVerdict {
  bool lcd = false;
  std::size_t x_weight = 0;
  /// Rows of G with <x~, row> = 1.
  std::size_t odd_rows = 0;
  /// Built only when the verdict is LCD.
  std::optional<ConstructionOutcome> outcome;
};

/// Leading-column extension by x~ = (0_k, x), x of length n-k, decided from
/// wt(x) alone (even-like C) or from wt(x) plus the number of rows meeting x~
/// (odd-like C). The stored generator must be orthonormal or symplectic and
/// its first k columns independent; it is never re-normalized here.
SystematicVerdict extend_systematic(const LinearCode& c, const BitVector& x);

/// Generator [[1, x], [0, G]] for x not orthogonal to Hull(C): hull dimension
/// drops by exactly one.
ConstructionOutcome extend_hull_drop(const LinearCode& c, const BitVector& x);

/// Generator [y^T | G]. Accepted when some a with a G G^T = 0 has <a, y> = 1,
/// i.e. y meets the hull; hull dimension drops by exactly one.
ConstructionOutcome extend_column_hull_drop(const LinearCode& c, const BitVector& y);

/// Column form driven by a vector x of length n: y_i = <x, r_i> over the rows
/// r_i of the stored generator.
ConstructionOutcome extend_column_hull_drop_from_vector(const LinearCode& c, const BitVector& x);

/// All 2^(k-1) [n+2, k, >= d+1] LCD codes obtained from one parity extension
/// by the choices y = (1, y_2, ..., y_k), in the integer order of
/// (y_2, ..., y_k) with y_2 most significant. Requires k and d odd.
std::vector<ConstructionOutcome> extend_two_multi(const LinearCode& c);

}  // namespace lcd
