#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "lcd/bit_matrix.hpp"
#include "lcd/bit_vector.hpp"

namespace lcd {

/// Sorted, distinct, 0-based coordinates. Ledger files and the CLI speak
/// 1-based coordinates; convert at the boundary with one_based().
class CoordinateSet {
 public:
  CoordinateSet() = default;
  static CoordinateSet zero_based(std::vector<std::size_t> indices);
  static CoordinateSet one_based(const std::vector<std::size_t>& indices);
  static CoordinateSet single(std::size_t index) { return zero_based({index}); }

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::vector<std::size_t> one_based_indices() const;
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(std::size_t i) const;

  /// Throws PreconditionError unless every index is below n.
  void check_range(std::size_t n) const;

 private:
  std::vector<std::size_t> indices_;
};

/// Binary [n, k] code held by a k x n generator of full row rank. The
/// generator is kept exactly as supplied: several constructions depend on a
/// particular basis, so nothing here re-reduces it behind the caller's back.
class LinearCode {
 public:
  LinearCode() = default;
  /// Throws PreconditionError if the rows are dependent.
  explicit LinearCode(BitMatrix generator);
  static LinearCode from_strings(std::initializer_list<std::string_view> rows);
  /// Keeps an independent subset of `rows` (first occurrences win).
  static LinearCode from_spanning_set(const BitMatrix& rows);
  static LinearCode zero(std::size_t n);
  static LinearCode full_space(std::size_t n);
  static LinearCode repetition(std::size_t n);

  std::size_t length() const noexcept { return gen_.cols(); }
  std::size_t dimension() const noexcept { return gen_.rows(); }
  const BitMatrix& generator() const noexcept { return gen_; }

  /// Same code, new basis. Throws PreconditionError if `g` spans something else.
  LinearCode with_generator(BitMatrix g) const;

  bool contains(const BitVector& v) const;
  /// Row-space containment.
  bool contains(const LinearCode& sub) const;
  /// Reduced row echelon generator; equal for equal codes.
  BitMatrix canonical_generator() const;

  /// Codes are equal when their codeword sets are equal.
  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  BitMatrix gen_;
};

enum class Parity { odd_like, even_like };

struct ParityClass {
  Parity self = Parity::odd_like;
  Parity dual = Parity::odd_like;
  std::size_t hull_dim = 0;

  bool is_lcd() const noexcept { return hull_dim == 0; }
  /// "LCD_oo", "LCD_oe", "LCD_eo" or "NotLCD".
  std::string label() const;
};

LinearCode dual(const LinearCode& c);
/// k - rank(G G^T).
std::size_t hull_dimension(const LinearCode& c);
/// C intersect C-perp, as a code.
LinearCode hull(const LinearCode& c);
bool is_lcd(const LinearCode& c);
/// Every codeword has even weight (equivalently every generator row does).
bool is_even_like(const LinearCode& c);
bool contains_all_one(const LinearCode& c);
ParityClass parity_class(const LinearCode& c);

LinearCode puncture(const LinearCode& c, const CoordinateSet& t);
LinearCode shorten(const LinearCode& c, const CoordinateSet& t);
/// Subcode of codewords vanishing on t (length unchanged).
LinearCode vanishing_subcode(const LinearCode& c, const CoordinateSet& t);
/// Appends an all-zero coordinate.
LinearCode pad_zero_column(const LinearCode& c);

// ---------------------------------------------------------------------------
// Minimum distance

inline constexpr std::size_t kFullEnumerationMaxDim = 26;  // engine A cap on k
inline constexpr std::size_t kLowWeightMaxWeight = 8;      // engine B ceiling on w

enum class DistanceEngine { automatic, full_enumeration, low_weight };

struct DistanceOptions {
  DistanceEngine engine = DistanceEngine::automatic;
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Exact minimum nonzero weight. Engine A walks all 2^k - 1 codewords in Gray
/// order; engine B searches for the smallest dependent set of parity-check
/// columns up to kLowWeightMaxWeight and throws BudgetExceeded beyond it.
/// Rejects k = 0.
std::size_t min_distance(const LinearCode& c, DistanceOptions options = {});
std::size_t min_distance(const LinearCode& c, DistanceEngine engine);

/// Calls `visit` for every codeword of weight exactly w until it returns
/// false. Uses enumeration when k <= kFullEnumerationMaxDim, otherwise the
/// parity-check column search (w <= kLowWeightMaxWeight).
void visit_codewords_of_weight(const LinearCode& c, std::size_t w,
                               const std::function<bool(const BitVector&)>& visit);
std::vector<BitVector> codewords_of_weight(const LinearCode& c, std::size_t w);
/// Span of all codewords of weight exactly w; its generator rows are
/// themselves weight-w codewords.
LinearCode codeword_span(const LinearCode& c, std::size_t w);

}  // namespace lcd
