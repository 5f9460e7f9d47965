#include "lcd/bit_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "lcd/errors.hpp"

namespace lcd {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m;
  m.cols_ = rows.empty() ? cols : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != m.cols_) throw PreconditionError("rows of differing length");
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVector> v;
  for (auto r : rows) v.push_back(BitVector::from_string(r));
  return from_rows(std::move(v));
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVector> v;
  for (const auto& r : rows) v.push_back(BitVector::from_string(r));
  return from_rows(std::move(v));
}

void BitMatrix::set_row(std::size_t i, BitVector v) {
  if (v.size() != cols_) throw PreconditionError("row length mismatch");
  rows_[i] = std::move(v);
}

void BitMatrix::push_row(BitVector v) {
  if (rows_.empty() && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw PreconditionError("row length mismatch");
  rows_.push_back(std::move(v));
}

BitVector BitMatrix::column(std::size_t j) const {
  BitVector c(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    if (rows_[i].get(j)) c.set(i);
  return c;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (auto j : rows_[i].support()) t.set(j, i);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw PreconditionError("matrix product dimension mismatch");
  BitMatrix out(rows(), rhs.cols());
  for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = rhs.combine(rows_[i]);
  return out;
}

BitMatrix BitMatrix::gram() const {
  BitMatrix g(rows(), rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = i; j < rows(); ++j)
      if (inner_product(rows_[i], rows_[j])) {
        g.set(i, j);
        g.set(j, i);
      }
  return g;
}

BitVector BitMatrix::combine(const BitVector& coefficients) const {
  if (coefficients.size() != rows()) throw PreconditionError("coefficient length mismatch");
  BitVector out(cols_);
  for (auto i : coefficients.support()) out ^= rows_[i];
  return out;
}

BitVector BitMatrix::apply(const BitVector& x) const {
  BitVector out(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    if (inner_product(rows_[i], x)) out.set(i);
  return out;
}

std::size_t BitMatrix::rank() const { return rref(*this).pivots.size(); }

bool BitMatrix::is_symmetric() const {
  if (rows() != cols_) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

bool BitMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

bool BitMatrix::has_zero_diagonal() const {
  for (std::size_t i = 0; i < std::min(rows(), cols_); ++i)
    if (get(i, i)) return false;
  return true;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<BitVector> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(rows_[i]);
  return from_rows(std::move(out), cols_);
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> indices) const {
  BitMatrix out(rows(), indices.size());
  for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = rows_[i].select(indices);
  return out;
}

BitMatrix BitMatrix::erase_columns(std::span<const std::size_t> sorted_indices) const {
  BitMatrix out(rows(), cols_ - sorted_indices.size());
  for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = rows_[i].erase(sorted_indices);
  return out;
}

BitMatrix BitMatrix::prepend_column(const BitVector& column) const {
  if (column.size() != rows()) throw PreconditionError("column length mismatch");
  BitMatrix out(rows(), cols_ + 1);
  for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = rows_[i].prepend(column.get(i));
  return out;
}

BitMatrix BitMatrix::append_column(const BitVector& column) const {
  if (column.size() != rows()) throw PreconditionError("column length mismatch");
  BitMatrix out(rows(), cols_ + 1);
  for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = rows_[i].append(column.get(i));
  return out;
}

BitMatrix BitMatrix::stack(const BitMatrix& below) const {
  if (below.rows() > 0 && rows() > 0 && below.cols() != cols_) throw PreconditionError("column count mismatch");
  std::vector<BitVector> out = rows_;
  out.insert(out.end(), below.rows_.begin(), below.rows_.end());
  return from_rows(std::move(out), rows() > 0 ? cols_ : below.cols());
}

BitMatrix BitMatrix::kernel() const {
  const Echelon e = rref(*this);
  std::vector<char> is_pivot(cols_, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitVector x(cols_);
    x.set(free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (e.reduced.get(r, free)) x.set(e.pivots[r]);
    basis.push_back(std::move(x));
  }
  return from_rows(std::move(basis), cols_);
}

BitMatrix BitMatrix::left_kernel() const { return transpose().kernel(); }

std::string BitMatrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

Echelon rref(const BitMatrix& m) {
  std::vector<BitVector> rows = m.row_list();
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < m.cols() && top < rows.size(); ++col) {
    std::size_t p = top;
    while (p < rows.size() && !rows[p].get(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[top], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != top && rows[r].get(col)) rows[r] ^= rows[top];
    pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  return {BitMatrix::from_rows(std::move(rows), m.cols()), std::move(pivots)};
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const Echelon ea = rref(a);
  const Echelon eb = rref(b);
  return ea.pivots == eb.pivots && ea.reduced == eb.reduced;
}

BitMatrix independent_rows(const BitMatrix& m) {
  // Incremental basis keyed by pivot column; keeps the original rows that extend it.
  std::vector<BitVector> reduced;
  std::vector<std::size_t> pivot;
  std::vector<BitVector> kept;
  for (const auto& row : m.row_list()) {
    BitVector v = row;
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (v.get(pivot[i])) v ^= reduced[i];
    if (v.is_zero()) continue;
    pivot.push_back(v.first_one());
    reduced.push_back(std::move(v));
    kept.push_back(row);
  }
  return BitMatrix::from_rows(std::move(kept), m.cols());
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.cols()) throw PreconditionError("solve: right-hand side length must equal the column count");
  // Eliminate on the augmented system, tracking each reduced row as a combination of the originals.
  const std::size_t k = m.rows();
  std::vector<BitVector> rows = m.row_list();
  std::vector<BitVector> combo;
  combo.reserve(k);
  for (std::size_t i = 0; i < k; ++i) combo.push_back(BitVector::unit(k, i));

  std::size_t top = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m.cols() && top < k; ++col) {
    std::size_t p = top;
    while (p < k && !rows[p].get(col)) ++p;
    if (p == k) continue;
    std::swap(rows[top], rows[p]);
    std::swap(combo[top], combo[p]);
    for (std::size_t r = 0; r < k; ++r)
      if (r != top && rows[r].get(col)) {
        rows[r] ^= rows[top];
        combo[r] ^= combo[top];
      }
    pivots.push_back(col);
    ++top;
  }

  BitVector residual = b;
  BitVector x(k);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (residual.get(pivots[r])) {
      residual ^= rows[r];
      x ^= combo[r];
    }
  if (!residual.is_zero()) return std::nullopt;
  return x;
}

namespace {

class Form {
 public:
  explicit Form(const BitMatrix& s) : s_(s) {}
  bool operator()(const BitVector& x, const BitVector& y) const { return inner_product(x, s_.apply(y)); }

 private:
  const BitMatrix& s_;
};

}  // namespace

CongruentNormalForm congruent_normal_form(const BitMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw PreconditionError("congruent_normal_form: matrix is not symmetric");
  const std::size_t n = symmetric.rows();
  const Form form(symmetric);

  std::vector<BitVector> remaining;
  for (std::size_t i = 0; i < n; ++i) remaining.push_back(BitVector::unit(n, i));

  std::vector<BitVector> orthonormal;
  std::vector<std::pair<BitVector, BitVector>> pairs;

  while (!remaining.empty()) {
    // Diagonal one first: an orthonormal direction.
    auto diag = std::find_if(remaining.begin(), remaining.end(), [&](const BitVector& v) { return form(v, v); });
    if (diag != remaining.end()) {
      BitVector v = *diag;
      remaining.erase(diag);
      for (auto& w : remaining)
        if (form(w, v)) w ^= v;
      orthonormal.push_back(std::move(v));
      continue;
    }
    // Otherwise the lowest pair with an off-diagonal one: a symplectic block.
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    for (std::size_t i = 0; i < remaining.size() && !hit; ++i)
      for (std::size_t j = i + 1; j < remaining.size(); ++j)
        if (form(remaining[i], remaining[j])) {
          hit = std::make_pair(i, j);
          break;
        }
    if (!hit) break;  // what is left spans the radical
    BitVector a = remaining[hit->first];
    BitVector b = remaining[hit->second];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(hit->second));
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(hit->first));
    for (auto& w : remaining) {
      const bool wa = form(w, a);
      const bool wb = form(w, b);
      if (wb) w ^= a;
      if (wa) w ^= b;
    }
    pairs.emplace_back(std::move(a), std::move(b));
  }

  CongruentNormalForm out;
  out.alternating = symmetric.has_zero_diagonal();
  out.radical_dim = remaining.size();

  std::vector<BitVector> p_rows = remaining;
  if (orthonormal.empty()) {
    for (auto& [a, b] : pairs) {
      p_rows.push_back(a);
      p_rows.push_back(b);
    }
  } else {
    // Fold each symplectic pair into three orthonormal vectors using an anchor a:
    // u + a, v + a, a + u + v.
    for (auto& [u, v] : pairs) {
      BitVector& anchor = orthonormal.front();
      BitVector u2 = u ^ anchor;
      BitVector v2 = v ^ anchor;
      anchor ^= u;
      anchor ^= v;
      orthonormal.push_back(std::move(u2));
      orthonormal.push_back(std::move(v2));
    }
    p_rows.insert(p_rows.end(), orthonormal.begin(), orthonormal.end());
  }

  out.transform = BitMatrix::from_rows(std::move(p_rows), n);
  out.normal = out.transform * symmetric * out.transform.transpose();

  const std::size_t s = out.radical_dim;
  BitMatrix expected(n, n);
  if (out.alternating) {
    expected = symplectic_block(s, (n - s) / 2);
  } else {
    for (std::size_t i = s; i < n; ++i) expected.set(i, i);
  }
  if (out.normal != expected) throw InternalError("congruent_normal_form: reduction did not reach the normal form");
  return out;
}

BitMatrix symplectic_block(std::size_t zeros, std::size_t pairs) {
  const std::size_t n = zeros + 2 * pairs;
  BitMatrix m(n, n);
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t i = zeros + 2 * p;
    m.set(i, i + 1);
    m.set(i + 1, i);
  }
  return m;
}

}  // namespace lcd
