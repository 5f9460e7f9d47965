#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcd/bit_matrix.hpp"
#include "lcd/linear_code.hpp"

namespace lcd {

enum class BlockKind { absent, symplectic, orthonormal };

std::string to_string(BlockKind kind);

/// Describes the Gram matrix of a normal-form basis.
///
/// Hull layout (subcode_dim == dimension): diag(0_s, A1).
///
/// Subcode layout (subcode_dim < dimension), rows grouped as
///   [0, s)                      hull of the subcode D
///   [s, k1)                     rest of D, Gram block A1
///   [k1, k1 + s)                partners of the hull rows, coupled by I_s,
///                               Gram block A2 = diag(1 x s1, 0 x (s - s1))
///   [k1 + s, k)                 Gram block A3
/// with every other block zero.
struct GramShape {
  std::size_t dimension = 0;    // k
  std::size_t subcode_dim = 0;  // k1
  std::size_t s = 0;
  BlockKind a1 = BlockKind::absent;
  std::size_t s1 = 0;
  BlockKind a3 = BlockKind::absent;
  std::size_t t = 0;

  bool hull_layout() const noexcept { return subcode_dim == dimension; }
  /// The Gram matrix this shape describes.
  BitMatrix expected_gram() const;
};

struct NormalFormCertificate {
  BitMatrix basis;
  GramShape shape;

  /// gram(basis) equals shape.expected_gram().
  bool gram_matches() const;
};

/// Basis whose first s rows span Hull(C) and whose Gram matrix is
/// diag(0_s, A) with A symplectic for even-like C and the identity otherwise.
NormalFormCertificate hull_normal_basis(const LinearCode& c);

/// Gram matrix I_k. Requires an odd-like LCD code.
BitMatrix orthonormal_basis(const LinearCode& c);

/// Rows b1, b1', b2, b2', ... with Gram diag(J_2, ..., J_2). Requires an
/// even-like LCD code.
BitMatrix symplectic_basis(const LinearCode& c);

/// Extends an odd-weight codeword g1 to a basis {g1, g2, ...} with
/// <g1, gi> = 0 for i >= 2. Requires an odd-like LCD code.
BitMatrix complete_orthogonal_basis(const LinearCode& c, const BitVector& g1);

/// Basis of C whose first dim(D) rows span the subcode D and whose Gram
/// matrix has the subcode layout of GramShape. C must be odd-like LCD and
/// dim(D) < dim(C).
NormalFormCertificate subcode_normal_form(const LinearCode& c, const LinearCode& d);

/// Indices (0-based) of basis rows summing to the all-one vector, for a
/// subcode-layout certificate of a code containing 1_n. The choice follows
/// the four (D even/odd) x (A3 symplectic/identity) cases; the sum is
/// checked and an InternalError thrown if it is not 1_n.
std::vector<std::size_t> recover_all_one(const NormalFormCertificate& cert);

/// Turns a basis whose Gram matrix splits into isolated odd vectors (type 1),
/// coupled odd/even pairs (type 2) and coupled even/even pairs (type 3) into
/// an orthonormal basis of the same code.
BitMatrix type_classify_and_orthogonalize(const BitMatrix& basis);
BitMatrix type_classify_and_orthogonalize(const NormalFormCertificate& cert);

}  // namespace lcd
