#include "lcd/field_expansion.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "lcd/errors.hpp"

namespace lcd {

namespace {

constexpr std::size_t kExtDistanceMaxBits = 24;

// Remainder of a modulo b as GF(2) polynomials.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = std::bit_width(b) - 1;
  for (int da = std::bit_width(a) - 1; da >= db; da = std::bit_width(a) - 1) a ^= b << (da - db);
  return a;
}

bool irreducible(std::uint32_t p, std::size_t m) {
  for (std::uint64_t q = 2; q < (std::uint64_t{1} << (m / 2 + 1)); ++q)
    if (poly_mod(p, q) == 0) return false;
  return true;
}

// Row reduction in place; returns pivot columns.
std::vector<std::size_t> reduce(const ExtField& f, ExtMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Element s = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Element t = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= f.mul(t, a[r][j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void check_matrix(const ExtField& f, std::size_t n, const ExtMatrix& m, const char* who) {
  for (const auto& row : m) {
    if (row.size() != n) throw PreconditionError(std::string(who) + ": row length differs from n");
    for (Element x : row)
      if (!f.contains(x)) throw PreconditionError(std::string(who) + ": entry outside the field");
  }
}

ExtVector random_vector(const ExtField& f, std::size_t n, std::mt19937_64& rng) {
  ExtVector v(n);
  for (auto& x : v) x = static_cast<Element>(rng() % f.size());
  return v;
}

// Random element of the row space of `basis` (rows), or zero when empty.
ExtVector random_combination(const ExtField& f, const ExtMatrix& basis, std::size_t n, std::mt19937_64& rng) {
  ExtVector v(n, 0);
  for (const auto& row : basis) {
    const Element s = static_cast<Element>(rng() % f.size());
    for (std::size_t j = 0; j < n; ++j) v[j] ^= f.mul(s, row[j]);
  }
  return v;
}

}  // namespace

ExtField::ExtField(std::size_t m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  if (m == 0 || m > 16) throw PreconditionError("ExtField: degree must be in 1..16");
  if (static_cast<std::size_t>(std::bit_width(modulus)) != m + 1)
    throw PreconditionError("ExtField: modulus degree differs from m");
  if (!irreducible(modulus, m)) throw PreconditionError("ExtField: modulus is reducible");
}

ExtField ExtField::standard(std::size_t m) {
  switch (m) {
    case 1: return ExtField(1, 0b11);
    case 2: return ExtField(2, 0b111);
    case 3: return ExtField(3, 0b1011);
    case 4: return ExtField(4, 0b10011);
    default: throw PreconditionError("ExtField::standard: no fixed modulus for m = " + std::to_string(m));
  }
}

Element ExtField::mul(Element a, Element b) const noexcept {
  std::uint64_t prod = 0;
  for (std::uint64_t x = a; b != 0; b >>= 1, x <<= 1)
    if (b & 1U) prod ^= x;
  return static_cast<Element>(poly_mod(prod, modulus_));
}

Element ExtField::pow(Element a, std::uint64_t e) const noexcept {
  Element r = 1;
  for (; e != 0; e >>= 1, a = mul(a, a))
    if (e & 1U) r = mul(r, a);
  return r;
}

Element ExtField::inv(Element a) const {
  if (a == 0 || !contains(a)) throw PreconditionError("ExtField::inv: not a unit");
  return pow(a, size() - 2);
}

bool ExtField::trace(Element a) const noexcept {
  Element t = 0;
  for (std::size_t i = 0; i < m_; ++i, a = mul(a, a)) t ^= a;
  return t != 0;
}

SelfDualBasis find_self_dual_basis(const ExtField& field) {
  const std::size_t m = field.degree();
  if (m > kSelfDualBasisMaxDegree)
    throw BudgetExceeded("find_self_dual_basis: degree above " + std::to_string(kSelfDualBasisMaxDegree));
  // Candidates have Tr(a^2) = 1; the tuple is strictly increasing, so the
  // first one found in lexicographic order is the least.
  std::vector<Element> cand;
  for (Element a = 1; a < field.size(); ++a)
    if (field.trace(field.mul(a, a))) cand.push_back(a);
  std::vector<Element> pick;
  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    if (pick.size() == m) return true;
    for (std::size_t i = from; i < cand.size(); ++i) {
      bool ok = true;
      for (Element b : pick) ok = ok && !field.trace(field.mul(b, cand[i]));
      if (!ok) continue;
      pick.push_back(cand[i]);
      if (search(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!search(0)) throw InternalError("find_self_dual_basis: none found");
  // Trace-orthonormal elements are independent: a dependency sum c_i a_i = 0
  // multiplied by a_j and traced gives c_j = 0.
  return {field, pick};
}

std::size_t ext_rank(const ExtField& f, ExtMatrix m) { return reduce(f, m).size(); }

ExtMatrix ext_transpose(const ExtMatrix& m) {
  if (m.empty()) return {};
  ExtMatrix t(m[0].size(), ExtVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

ExtMatrix ext_left_kernel(const ExtField& f, const ExtMatrix& m) {
  // x M = 0  <=>  M^T x^T = 0.
  ExtMatrix a = ext_transpose(m);
  const std::size_t vars = m.size();
  if (a.empty()) {
    ExtMatrix id(vars, ExtVector(vars, 0));
    for (std::size_t i = 0; i < vars; ++i) id[i][i] = 1;
    return id;
  }
  const auto pivots = reduce(f, a);
  ExtMatrix out;
  std::vector<bool> is_pivot(vars, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < vars; ++free) {
    if (is_pivot[free]) continue;
    ExtVector x(vars, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][free];
    out.push_back(std::move(x));
  }
  return out;
}

ExtMatrix ext_multiply(const ExtField& f, const ExtMatrix& a, const ExtMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  ExtMatrix out(a.size(), ExtVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw PreconditionError("ext_multiply: shape mismatch");
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] ^= f.mul(a[i][l], b[l][j]);
    }
  }
  return out;
}

Element ext_dot(const ExtField& f, const ExtVector& x, const ExtVector& y) {
  if (x.size() != y.size()) throw PreconditionError("ext_dot: length mismatch");
  Element s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s ^= f.mul(x[i], y[i]);
  return s;
}

ExtFieldCode::ExtFieldCode(ExtField field, std::size_t n, ExtMatrix generator)
    : field_(field), n_(n), gen_(std::move(generator)) {
  check_matrix(field_, n_, gen_, "ExtFieldCode");
  if (ext_rank(field_, gen_) != gen_.size()) throw PreconditionError("ExtFieldCode: rows are dependent");
}

ExtFieldCode ExtFieldCode::from_spanning_set(ExtField field, std::size_t n, const ExtMatrix& rows) {
  check_matrix(field, n, rows, "ExtFieldCode::from_spanning_set");
  ExtMatrix keep;
  for (const auto& r : rows) {
    keep.push_back(r);
    if (ext_rank(field, keep) != keep.size()) keep.pop_back();
  }
  return ExtFieldCode(field, n, std::move(keep));
}

ExtMatrix ExtFieldCode::gram() const { return ext_multiply(field_, gen_, ext_transpose(gen_)); }

ExtFieldCode ExtFieldCode::hull() const {
  const ExtMatrix ker = ext_left_kernel(field_, gram());
  return ExtFieldCode(field_, n_, ext_multiply(field_, ker, gen_));
}

std::size_t ExtFieldCode::hull_dimension() const { return dimension() - ext_rank(field_, gram()); }

bool ExtFieldCode::is_self_orthogonal() const {
  for (const auto& row : gram())
    for (Element x : row)
      if (x != 0) return false;
  return true;
}

bool ExtFieldCode::contains(const ExtVector& x) const {
  if (x.size() != n_) return false;
  ExtMatrix a = gen_;
  a.push_back(x);
  return ext_rank(field_, std::move(a)) == dimension();
}

std::size_t ExtFieldCode::min_distance() const {
  if (dimension() == 0) throw PreconditionError("ExtFieldCode::min_distance: zero code");
  const std::size_t m = field_.degree();
  const std::size_t bits = m * dimension();
  if (bits > kExtDistanceMaxBits)
    throw BudgetExceeded("ExtFieldCode::min_distance: m k above " + std::to_string(kExtDistanceMaxBits));
  // GF(2) basis of the code: x^j * g_i. Walk its span in Gray order.
  ExtMatrix basis;
  for (const auto& g : gen_)
    for (std::size_t j = 0; j < m; ++j) {
      ExtVector v(n_);
      for (std::size_t c = 0; c < n_; ++c) v[c] = field_.mul(Element{1} << j, g[c]);
      basis.push_back(std::move(v));
    }
  ExtVector cur(n_, 0);
  std::size_t weight = 0;
  std::size_t best = n_ + 1;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << bits); ++step) {
    const auto& b = basis[static_cast<std::size_t>(std::countr_zero(step))];
    for (std::size_t c = 0; c < n_; ++c) {
      if (b[c] == 0) continue;
      const bool was = cur[c] != 0;
      cur[c] ^= b[c];
      if (was && cur[c] == 0) --weight;
      if (!was) ++weight;
    }
    best = std::min(best, weight);
  }
  return best;
}

BitVector expand_vector(const SelfDualBasis& basis, const ExtVector& x) {
  const std::size_t m = basis.alphas.size();
  BitVector out(m * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!basis.field.contains(x[i])) throw PreconditionError("expand_vector: entry outside the field");
    for (std::size_t j = 0; j < m; ++j)
      if (basis.field.trace(basis.field.mul(x[i], basis.alphas[j]))) out.set(i * m + j);
  }
  return out;
}

LinearCode expand_code(const ExtFieldCode& c, const SelfDualBasis& basis) {
  if (!(basis.field == c.field())) throw PreconditionError("expand_code: basis and code use different fields");
  const std::size_t m = basis.alphas.size();
  if (c.dimension() == 0) return LinearCode::zero(m * c.length());
  std::vector<BitVector> rows;
  for (const auto& g : c.generator())
    for (Element a : basis.alphas) {
      ExtVector v(g.size());
      for (std::size_t t = 0; t < g.size(); ++t) v[t] = c.field().mul(a, g[t]);
      rows.push_back(expand_vector(basis, v));
    }
  // phi_n is injective and GF(2)-linear, so these m k rows are independent.
  return LinearCode(BitMatrix::from_rows(std::move(rows), m * c.length()));
}

ExpansionBound expansion_bound(std::size_t n, std::size_t k, std::size_t m, std::size_t d_ext) {
  if (n == 0 || k == 0 || m == 0 || d_ext == 0) throw PreconditionError("expansion_bound: inputs must be positive");
  if (k > n) throw PreconditionError("expansion_bound: k > n");
  return {n / m, (k + m - 1) / m, d_ext};
}

ExtFieldCode random_ext_code(const ExtField& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (k > n) throw PreconditionError("random_ext_code: k > n");
  while (true) {
    ExtMatrix g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(random_vector(f, n, rng));
    if (ext_rank(f, g) == k) return ExtFieldCode(f, n, std::move(g));
  }
}

ExtFieldCode random_self_orthogonal(const ExtField& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (2 * k > n) throw PreconditionError("random_self_orthogonal: need 2k <= n");
  // In characteristic 2, x.x = (sum x_i)^2, so self-orthogonality of a new row
  // is the linear condition x . 1 = 0 next to x . r = 0 for earlier rows r.
  // That solution space has dimension at least n - r - 1 > r while r < k, so
  // it always reaches past the rows chosen so far.
  ExtMatrix rows;
  while (rows.size() < k) {
    ExtMatrix constraints = ext_transpose(rows);
    if (constraints.empty()) constraints.assign(n, ExtVector{});
    for (auto& c : constraints) c.push_back(1);
    const ExtMatrix space = ext_left_kernel(f, constraints);
    ExtMatrix with = rows;
    with.push_back(random_combination(f, space, n, rng));
    if (ext_rank(f, with) == with.size()) rows = std::move(with);
  }
  return ExtFieldCode(f, n, std::move(rows));
}

ExtFieldCode random_self_dual(const ExtField& f, std::size_t n, std::mt19937_64& rng) {
  if (n % 2 != 0) throw PreconditionError("random_self_dual: n must be even");
  return random_self_orthogonal(f, n, n / 2, rng);
}

}  // namespace lcd
