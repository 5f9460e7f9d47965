#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lcd/linear_code.hpp"

namespace lcd {

/// Largest degree for which find_self_dual_basis will search.
inline constexpr std::size_t kSelfDualBasisMaxDegree = 4;

using Element = std::uint32_t;
using ExtVector = std::vector<Element>;
using ExtMatrix = std::vector<ExtVector>;

/// GF(2^m) with elements encoded as polynomials in x, bit i = coefficient of x^i.
class ExtField {
 public:
  /// GF(2); multiplication is AND.
  ExtField() : ExtField(1, 0b11) {}
  /// Throws PreconditionError unless `modulus` is irreducible of degree m
  /// and 1 <= m <= 16.
  ExtField(std::size_t m, std::uint32_t modulus);
  /// Fixed moduli: x+1, x^2+x+1, x^3+x+1, x^4+x+1.
  static ExtField standard(std::size_t m);

  std::size_t degree() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return std::size_t{1} << m_; }
  bool contains(Element a) const noexcept { return a < size(); }

  Element add(Element a, Element b) const noexcept { return a ^ b; }
  Element mul(Element a, Element b) const noexcept;
  Element pow(Element a, std::uint64_t e) const noexcept;
  /// Throws PreconditionError for 0.
  Element inv(Element a) const;
  /// a + a^2 + a^4 + ... + a^(2^(m-1)), always 0 or 1.
  bool trace(Element a) const noexcept;

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  std::size_t m_;
  std::uint32_t modulus_;
};

/// Trace-orthonormal basis: Tr(alphas[i] * alphas[j]) = [i == j].
struct SelfDualBasis {
  ExtField field;
  std::vector<Element> alphas;
};

/// Lexicographically least self-dual basis by exhaustive search. Throws
/// BudgetExceeded for m > kSelfDualBasisMaxDegree.
SelfDualBasis find_self_dual_basis(const ExtField& field);

// Small dense linear algebra over the field.
std::size_t ext_rank(const ExtField& f, ExtMatrix m);
/// Basis of {x : x M = 0}, rows of length M.size().
ExtMatrix ext_left_kernel(const ExtField& f, const ExtMatrix& m);
ExtMatrix ext_multiply(const ExtField& f, const ExtMatrix& a, const ExtMatrix& b);
ExtMatrix ext_transpose(const ExtMatrix& m);
/// Euclidean inner product sum x_i y_i.
Element ext_dot(const ExtField& f, const ExtVector& x, const ExtVector& y);

/// Linear [n, k] code over GF(2^m) held by a full-row-rank generator. The
/// inner product is the Euclidean one.
class ExtFieldCode {
 public:
  /// Throws PreconditionError on ragged rows, out-of-field entries or
  /// dependent rows.
  ExtFieldCode(ExtField field, std::size_t n, ExtMatrix generator);
  static ExtFieldCode from_spanning_set(ExtField field, std::size_t n, const ExtMatrix& rows);

  const ExtField& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return gen_.size(); }
  const ExtMatrix& generator() const noexcept { return gen_; }

  ExtMatrix gram() const;
  /// Basis of C intersect C-perp, from the left kernel of the Gram matrix.
  ExtFieldCode hull() const;
  std::size_t hull_dimension() const;
  bool is_lcd() const { return hull_dimension() == 0; }
  bool is_self_orthogonal() const;
  bool is_self_dual() const { return 2 * dimension() == length() && is_self_orthogonal(); }
  bool contains(const ExtVector& x) const;
  /// Exact, by walking all q^k codewords. Throws BudgetExceeded when
  /// m * k > 30 and PreconditionError for k = 0.
  std::size_t min_distance() const;

 private:
  ExtField field_;
  std::size_t n_;
  ExtMatrix gen_;
};

/// phi_n(x): block i is (Tr(x_i a_1), ..., Tr(x_i a_m)), length m n.
BitVector expand_vector(const SelfDualBasis& basis, const ExtVector& x);
/// Binary [m n, m k] code generated by phi_n(a_j g_i) over rows g_i and basis
/// elements a_j (i-major order).
LinearCode expand_code(const ExtFieldCode& c, const SelfDualBasis& basis);

/// Lower bound on d_LCD(n, k) from an LCD code over GF(2^m) of length
/// floor(n/m), dimension ceil(k/m) and distance d_ext.
struct ExpansionBound {
  std::size_t ext_length = 0;
  std::size_t ext_dimension = 0;
  std::size_t bound = 0;
};
ExpansionBound expansion_bound(std::size_t n, std::size_t k, std::size_t m, std::size_t d_ext);

/// Uniformly random full-rank generator.
ExtFieldCode random_ext_code(const ExtField& f, std::size_t n, std::size_t k, std::mt19937_64& rng);
/// Random self-orthogonal [n, k] code, built row by row inside the dual of
/// what is already there. Throws PreconditionError if 2k > n.
ExtFieldCode random_self_orthogonal(const ExtField& f, std::size_t n, std::size_t k, std::mt19937_64& rng);
/// Random self-dual [n, n/2] code. Throws PreconditionError for odd n.
ExtFieldCode random_self_dual(const ExtField& f, std::size_t n, std::mt19937_64& rng);

}  // namespace lcd
