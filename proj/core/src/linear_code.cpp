#include "lcd/linear_code.hpp"

#include <algorithm>

#include "lcd/errors.hpp"

namespace lcd {

CoordinateSet CoordinateSet::zero_based(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw PreconditionError("coordinate set has repeated entries");
  CoordinateSet t;
  t.indices_ = std::move(indices);
  return t;
}

CoordinateSet CoordinateSet::one_based(const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> zero;
  zero.reserve(indices.size());
  for (auto i : indices) {
    if (i == 0) throw PreconditionError("1-based coordinate 0 is out of range");
    zero.push_back(i - 1);
  }
  return zero_based(std::move(zero));
}

std::vector<std::size_t> CoordinateSet::one_based_indices() const {
  std::vector<std::size_t> out;
  for (auto i : indices_) out.push_back(i + 1);
  return out;
}

bool CoordinateSet::contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

void CoordinateSet::check_range(std::size_t n) const {
  if (!indices_.empty() && indices_.back() >= n)
    throw PreconditionError("coordinate " + std::to_string(indices_.back() + 1) + " exceeds length " +
                            std::to_string(n));
}

LinearCode::LinearCode(BitMatrix generator) : gen_(std::move(generator)) {
  if (!gen_.full_row_rank()) throw PreconditionError("generator rows are linearly dependent");
}

LinearCode LinearCode::from_strings(std::initializer_list<std::string_view> rows) {
  return LinearCode(BitMatrix::from_strings(rows));
}

LinearCode LinearCode::from_spanning_set(const BitMatrix& rows) { return LinearCode(independent_rows(rows)); }

LinearCode LinearCode::zero(std::size_t n) { return LinearCode(BitMatrix(0, n)); }

LinearCode LinearCode::full_space(std::size_t n) { return LinearCode(BitMatrix::identity(n)); }

LinearCode LinearCode::repetition(std::size_t n) {
  return LinearCode(BitMatrix::from_rows({BitVector::ones(n)}));
}

LinearCode LinearCode::with_generator(BitMatrix g) const {
  LinearCode other(std::move(g));
  if (!(other == *this)) throw PreconditionError("replacement generator spans a different code");
  return other;
}

bool LinearCode::contains(const BitVector& v) const {
  if (v.size() != length()) return false;
  return solve(gen_, v).has_value();
}

bool LinearCode::contains(const LinearCode& sub) const {
  if (sub.length() != length()) return false;
  return std::all_of(sub.gen_.row_list().begin(), sub.gen_.row_list().end(),
                     [&](const BitVector& r) { return contains(r); });
}

BitMatrix LinearCode::canonical_generator() const { return rref(gen_).reduced; }

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.length() == b.length() && a.dimension() == b.dimension() && same_row_space(a.gen_, b.gen_);
}

std::string ParityClass::label() const {
  if (hull_dim != 0) return "NotLCD";
  std::string s = "LCD_";
  s += self == Parity::odd_like ? 'o' : 'e';
  s += dual == Parity::odd_like ? 'o' : 'e';
  return s;
}

LinearCode dual(const LinearCode& c) { return LinearCode(c.generator().kernel()); }

std::size_t hull_dimension(const LinearCode& c) { return c.dimension() - c.generator().gram().rank(); }

LinearCode hull(const LinearCode& c) {
  // a G lies in C-perp exactly when a (G G^T) = 0.
  const BitMatrix coeffs = c.generator().gram().left_kernel();
  return LinearCode(coeffs * c.generator());
}

bool is_lcd(const LinearCode& c) { return hull_dimension(c) == 0; }

bool is_even_like(const LinearCode& c) {
  const auto& rows = c.generator().row_list();
  return std::all_of(rows.begin(), rows.end(), [](const BitVector& r) { return !r.is_odd(); });
}

bool contains_all_one(const LinearCode& c) { return c.contains(BitVector::ones(c.length())); }

ParityClass parity_class(const LinearCode& c) {
  ParityClass p;
  p.self = is_even_like(c) ? Parity::even_like : Parity::odd_like;
  // The dual is even-like iff the all-one vector is orthogonal to it, i.e. lies in C.
  p.dual = contains_all_one(c) ? Parity::even_like : Parity::odd_like;
  p.hull_dim = hull_dimension(c);
  return p;
}

LinearCode puncture(const LinearCode& c, const CoordinateSet& t) {
  t.check_range(c.length());
  if (t.size() >= c.length() && c.length() > 0) throw PreconditionError("puncture: |T| must be below n");
  return LinearCode::from_spanning_set(c.generator().erase_columns(t.indices()));
}

LinearCode vanishing_subcode(const LinearCode& c, const CoordinateSet& t) {
  t.check_range(c.length());
  const BitMatrix restricted = c.generator().select_columns(t.indices());
  const BitMatrix coeffs = restricted.left_kernel();
  if (coeffs.rows() == 0) return LinearCode::zero(c.length());
  return LinearCode(coeffs * c.generator());
}

LinearCode shorten(const LinearCode& c, const CoordinateSet& t) {
  t.check_range(c.length());
  if (t.size() >= c.length() && c.length() > 0) throw PreconditionError("shorten: |T| must be below n");
  const LinearCode sub = vanishing_subcode(c, t);
  if (sub.dimension() == 0) return LinearCode::zero(c.length() - t.size());
  return LinearCode(sub.generator().erase_columns(t.indices()));
}

LinearCode pad_zero_column(const LinearCode& c) {
  return LinearCode(c.generator().append_column(BitVector(c.dimension())));
}

std::vector<BitVector> codewords_of_weight(const LinearCode& c, std::size_t w) {
  std::vector<BitVector> out;
  visit_codewords_of_weight(c, w, [&](const BitVector& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

LinearCode codeword_span(const LinearCode& c, std::size_t w) {
  if (w == 0) throw PreconditionError("codeword_span: weight must be at least 1");
  std::vector<BitVector> reduced;
  std::vector<std::size_t> pivot;
  std::vector<BitVector> kept;
  const std::size_t k = c.dimension();
  visit_codewords_of_weight(c, w, [&](const BitVector& word) {
    BitVector v = word;
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (v.get(pivot[i])) v ^= reduced[i];
    if (!v.is_zero()) {
      pivot.push_back(v.first_one());
      reduced.push_back(std::move(v));
      kept.push_back(word);
    }
    return kept.size() < k;
  });
  return LinearCode(BitMatrix::from_rows(std::move(kept), c.length()));
}

}  // namespace lcd
