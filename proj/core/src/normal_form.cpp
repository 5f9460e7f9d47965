#include "lcd/normal_form.hpp"

#include <algorithm>
#include <numeric>

#include "lcd/errors.hpp"

namespace lcd {

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::absent:
      return "absent";
    case BlockKind::symplectic:
      return "symplectic";
    case BlockKind::orthonormal:
      return "orthonormal";
  }
  return "?";
}

namespace {

void place_block(BitMatrix& m, std::size_t offset, std::size_t size, BlockKind kind) {
  if (kind == BlockKind::orthonormal) {
    for (std::size_t i = 0; i < size; ++i) m.set(offset + i, offset + i);
  } else if (kind == BlockKind::symplectic) {
    for (std::size_t i = 0; i + 1 < size; i += 2) {
      m.set(offset + i, offset + i + 1);
      m.set(offset + i + 1, offset + i);
    }
  }
}

// Incrementally reduced basis used to test and extend spans.
class SpanBuilder {
 public:
  bool add(const BitVector& v) {
    BitVector r = reduce(v);
    if (r.is_zero()) return false;
    pivot_.push_back(r.first_one());
    reduced_.push_back(std::move(r));
    return true;
  }
  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
  std::size_t size() const { return reduced_.size(); }

 private:
  BitVector reduce(BitVector v) const {
    for (std::size_t i = 0; i < reduced_.size(); ++i)
      if (v.get(pivot_[i])) v ^= reduced_[i];
    return v;
  }
  std::vector<BitVector> reduced_;
  std::vector<std::size_t> pivot_;
};

bool form(const std::vector<BitVector>& g, std::size_t i, std::size_t j) { return inner_product(g[i], g[j]); }

BitMatrix rows_to_matrix(std::vector<BitVector> rows, std::size_t n) { return BitMatrix::from_rows(std::move(rows), n); }

}  // namespace

BitMatrix GramShape::expected_gram() const {
  const std::size_t k = dimension;
  BitMatrix m(k, k);
  if (hull_layout()) {
    place_block(m, s, k - s, a1);
    return m;
  }
  const std::size_t k1 = subcode_dim;
  place_block(m, s, k1 - s, a1);
  for (std::size_t i = 0; i < s; ++i) {
    m.set(i, k1 + i);
    m.set(k1 + i, i);
    if (i < s1) m.set(k1 + i, k1 + i);
  }
  place_block(m, k1 + s, t, a3);
  return m;
}

bool NormalFormCertificate::gram_matches() const {
  return basis.rows() == shape.dimension && basis.gram() == shape.expected_gram();
}

NormalFormCertificate hull_normal_basis(const LinearCode& c) {
  const CongruentNormalForm nf = congruent_normal_form(c.generator().gram());
  NormalFormCertificate cert;
  cert.basis = nf.transform * c.generator();
  cert.shape.dimension = c.dimension();
  cert.shape.subcode_dim = c.dimension();
  cert.shape.s = nf.radical_dim;
  if (nf.radical_dim == c.dimension())
    cert.shape.a1 = BlockKind::absent;
  else
    cert.shape.a1 = nf.alternating ? BlockKind::symplectic : BlockKind::orthonormal;
  if (!cert.gram_matches()) throw InternalError("hull_normal_basis: Gram matrix does not match its shape");
  return cert;
}

BitMatrix orthonormal_basis(const LinearCode& c) {
  if (!is_lcd(c)) throw PreconditionError("orthonormal_basis: code is not LCD");
  if (is_even_like(c)) throw PreconditionError("orthonormal_basis: code is even-like");
  return hull_normal_basis(c).basis;
}

BitMatrix symplectic_basis(const LinearCode& c) {
  if (!is_lcd(c)) throw PreconditionError("symplectic_basis: code is not LCD");
  if (!is_even_like(c)) throw PreconditionError("symplectic_basis: code is odd-like");
  return hull_normal_basis(c).basis;
}

BitMatrix complete_orthogonal_basis(const LinearCode& c, const BitVector& g1) {
  if (!is_lcd(c) || is_even_like(c)) throw PreconditionError("complete_orthogonal_basis: code must be odd-like LCD");
  if (!g1.is_odd()) throw PreconditionError("complete_orthogonal_basis: g1 has even weight");
  if (!c.contains(g1)) throw PreconditionError("complete_orthogonal_basis: g1 is not a codeword");

  SpanBuilder span;
  span.add(g1);
  std::vector<BitVector> rows{g1};
  for (const auto& r : c.generator().row_list()) {
    if (!span.add(r)) continue;
    BitVector gi = r;
    if (inner_product(g1, r)) gi ^= g1;
    rows.push_back(std::move(gi));
  }
  return rows_to_matrix(std::move(rows), c.length());
}

NormalFormCertificate subcode_normal_form(const LinearCode& c, const LinearCode& d) {
  if (!is_lcd(c) || is_even_like(c)) throw PreconditionError("subcode_normal_form: C must be odd-like LCD");
  if (d.length() != c.length() || !c.contains(d)) throw PreconditionError("subcode_normal_form: D is not a subcode of C");
  if (d.dimension() >= c.dimension()) throw PreconditionError("subcode_normal_form: dim D must be below dim C");

  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  const std::size_t k1 = d.dimension();

  GramShape shape;
  shape.dimension = k;
  shape.subcode_dim = k1;

  std::vector<BitVector> g;
  if (k1 > 0) {
    const NormalFormCertificate dn = hull_normal_basis(d);
    shape.s = dn.shape.s;
    shape.a1 = dn.shape.a1;
    g = dn.basis.row_list();
  }
  const std::size_t s = shape.s;

  SpanBuilder span;
  for (const auto& v : g) span.add(v);
  for (const auto& r : c.generator().row_list())
    if (span.add(r)) g.push_back(r);
  if (g.size() != k) throw InternalError("subcode_normal_form: basis extension failed");

  // Step 1: clear the couplings between A1 and the complement rows.
  if (k1 > s) {
    std::vector<BitVector> a1_rows(g.begin() + static_cast<std::ptrdiff_t>(s), g.begin() + static_cast<std::ptrdiff_t>(k1));
    const BitMatrix a1 = rows_to_matrix(a1_rows, n).gram();
    for (std::size_t r = k1; r < k; ++r) {
      BitVector b(k1 - s);
      for (std::size_t j = s; j < k1; ++j) b.set(j - s, form(g, r, j));
      const auto x = solve(a1, b);
      if (!x) throw InternalError("subcode_normal_form: A1 is singular");
      for (auto j : x->support()) g[r] ^= g[s + j];
    }
  }

  // Step 2: reduce the coupling of the complement with the hull of D to [I_s; 0],
  // pivoting on the lowest available row.
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t p = k1 + i;
    while (p < k && !form(g, p, i)) ++p;
    if (p == k) throw InternalError("subcode_normal_form: hull coupling has rank below s");
    std::swap(g[k1 + i], g[p]);
    for (std::size_t r = k1; r < k; ++r)
      if (r != k1 + i && form(g, r, i)) g[r] ^= g[k1 + i];
  }

  // Step 3: decouple A3 from the partner rows, then make the partner block diagonal.
  for (std::size_t r = k1 + s; r < k; ++r)
    for (std::size_t i = 0; i < s; ++i)
      if (form(g, r, k1 + i)) g[r] ^= g[i];
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (form(g, k1 + i, k1 + j)) g[k1 + j] ^= g[i];

  // Step 4: permute the (hull, partner) pairs so the partners of odd weight come first.
  {
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return form(g, k1 + i, k1 + i); });
    std::vector<BitVector> hull_rows;
    std::vector<BitVector> partners;
    for (auto i : order) {
      hull_rows.push_back(g[i]);
      partners.push_back(g[k1 + i]);
    }
    for (std::size_t i = 0; i < s; ++i) {
      g[i] = hull_rows[i];
      g[k1 + i] = partners[i];
      if (form(g, k1 + i, k1 + i)) ++shape.s1;
    }
  }

  // Step 5: bring the remaining block to its own normal form.
  shape.t = k - k1 - s;
  if (shape.t > 0) {
    std::vector<BitVector> rest(g.begin() + static_cast<std::ptrdiff_t>(k1 + s), g.end());
    const BitMatrix rest_m = rows_to_matrix(rest, n);
    const CongruentNormalForm nf = congruent_normal_form(rest_m.gram());
    if (nf.radical_dim != 0) throw InternalError("subcode_normal_form: remaining block is singular");
    const BitMatrix moved = nf.transform * rest_m;
    for (std::size_t i = 0; i < shape.t; ++i) g[k1 + s + i] = moved.row(i);
    shape.a3 = nf.alternating ? BlockKind::symplectic : BlockKind::orthonormal;
  }

  NormalFormCertificate cert{rows_to_matrix(std::move(g), n), shape};
  if (!cert.gram_matches()) throw InternalError("subcode_normal_form: Gram matrix does not match its shape");
  return cert;
}

std::vector<std::size_t> recover_all_one(const NormalFormCertificate& cert) {
  const GramShape& sh = cert.shape;
  std::vector<std::size_t> picked;
  if (sh.hull_layout()) {
    if (sh.s != 0 || sh.a1 != BlockKind::orthonormal)
      throw PreconditionError("recover_all_one: hull-layout certificate must be orthonormal");
    picked.resize(sh.dimension);
    std::iota(picked.begin(), picked.end(), 0);
  } else {
    for (std::size_t i = 0; i < sh.s1; ++i) picked.push_back(i);
    if (sh.a1 == BlockKind::orthonormal)
      for (std::size_t i = sh.s; i < sh.subcode_dim; ++i) picked.push_back(i);
    if (sh.a3 == BlockKind::orthonormal)
      for (std::size_t i = sh.subcode_dim + sh.s; i < sh.dimension; ++i) picked.push_back(i);
  }
  BitVector sum(cert.basis.cols());
  for (auto i : picked) sum ^= cert.basis.row(i);
  if (sum != BitVector::ones(cert.basis.cols()))
    throw InternalError("recover_all_one: selected rows do not sum to the all-one vector");
  return picked;
}

BitMatrix type_classify_and_orthogonalize(const BitMatrix& basis) {
  const std::size_t k = basis.rows();
  const BitMatrix gm = basis.gram();
  std::vector<BitVector> g = basis.row_list();

  std::vector<std::size_t> partner(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> off;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && gm.get(i, j)) off.push_back(j);
    if (off.size() > 1) throw PreconditionError("type_classify: Gram matrix is not a sum of 1x1 and 2x2 blocks");
    if (off.empty()) {
      if (!gm.get(i, i)) throw PreconditionError("type_classify: basis vector in the radical (code not LCD)");
    } else {
      partner[i] = off.front();
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> type3;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = partner[i];
    if (j == k || j < i) continue;
    if (partner[j] != i) throw PreconditionError("type_classify: asymmetric coupling");
    const bool oi = gm.get(i, i);
    const bool oj = gm.get(j, j);
    if (oi && oj) throw PreconditionError("type_classify: singular 2x2 block (code not LCD)");
    if (oi != oj) {
      // Type 2: add the odd vector to the even one.
      const std::size_t even = oi ? j : i;
      const std::size_t odd = oi ? i : j;
      g[even] ^= g[odd];
      partner[i] = partner[j] = k;
    } else {
      type3.emplace_back(i, j);
    }
  }

  if (!type3.empty()) {
    std::size_t anchor = k;
    for (std::size_t i = 0; i < k && anchor == k; ++i)
      if (partner[i] == k) anchor = i;
    if (anchor == k) throw InternalError("type_classify: no type-1 vector to anchor the even pairs");
    for (auto [u, v] : type3) {
      const BitVector gu = g[u];
      const BitVector gv = g[v];
      g[u] ^= g[anchor];
      g[v] ^= g[anchor];
      g[anchor] ^= gu;
      g[anchor] ^= gv;
    }
  }

  BitMatrix out = BitMatrix::from_rows(std::move(g), basis.cols());
  if (out.gram() != BitMatrix::identity(k)) throw InternalError("type_classify: result is not orthonormal");
  return out;
}

BitMatrix type_classify_and_orthogonalize(const NormalFormCertificate& cert) {
  return type_classify_and_orthogonalize(cert.basis);
}

}  // namespace lcd
