#include "lcd/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "lcd/errors.hpp"
#include "lcd/normal_form.hpp"

namespace lcd {

namespace {

std::size_t require_distance(const LinearCode& c, const char* what) {
  const auto d = try_min_distance(c);
  if (!d) throw BudgetExceeded(std::string(what) + ": minimum distance of the input is out of budget");
  return *d;
}

std::optional<std::size_t> minus(std::optional<std::size_t> d, std::size_t by) {
  if (!d) return std::nullopt;
  return *d > by ? *d - by : 1;
}

BitMatrix prefix_rows(const BitMatrix& g, std::initializer_list<bool> prefix) {
  std::vector<BitVector> rows;
  for (const auto& r : g.row_list()) {
    BitVector head(prefix.size());
    std::size_t i = 0;
    for (bool b : prefix) head.set(i++, b);
    rows.push_back(head.concat(r));
  }
  return BitMatrix::from_rows(std::move(rows), g.cols() + prefix.size());
}

// Generator [[1, x], [0, G]].
LinearCode leading_row_extension(const LinearCode& c, const BitVector& x) {
  std::vector<BitVector> rows{x.prepend(true)};
  for (const auto& r : c.generator().row_list()) rows.push_back(r.prepend(false));
  return LinearCode(BitMatrix::from_rows(std::move(rows), c.length() + 1));
}

// Calls visit(subset) for every l-subset of `order` (positions taken in
// lexicographic order); stops when visit returns true. Returns the number of
// subsets tried, or stops at `cap`.
template <typename Visit>
bool for_each_subset(const std::vector<std::size_t>& order, std::size_t l, std::size_t cap, std::size_t& tried,
                     Visit&& visit) {
  const std::size_t n = order.size();
  if (l > n) return false;
  std::vector<std::size_t> pos(l);
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    if (tried++ >= cap) return false;
    std::vector<std::size_t> subset;
    subset.reserve(l);
    for (auto p : pos) subset.push_back(order[p]);
    if (visit(subset)) return true;
    std::size_t i = l;
    while (i > 0 && pos[i - 1] == n - l + i - 1) --i;
    if (i == 0) return false;
    ++pos[i - 1];
    for (std::size_t j = i; j < l; ++j) pos[j] = pos[j - 1] + 1;
  }
}

// Coordinates ordered by how many hull basis vectors cover them, most first.
std::vector<std::size_t> hull_guided_order(const LinearCode& c) {
  const BitMatrix h = hull(c).canonical_generator();
  std::vector<std::size_t> freq(c.length(), 0);
  for (const auto& r : h.row_list())
    for (auto i : r.support()) ++freq[i];
  std::vector<std::size_t> order(c.length());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return freq[a] > freq[b]; });
  return order;
}

template <typename Accept>
std::optional<CoordinateSet> search_subsets(const LinearCode& c, std::size_t l, SubsetSearchBudget budget,
                                            const char* what, Accept&& accept) {
  const std::size_t cap = c.length() <= budget.exhaustive_length ? static_cast<std::size_t>(-1) : budget.max_tries;
  std::size_t tried = 0;
  std::optional<CoordinateSet> found;
  const bool hit = for_each_subset(hull_guided_order(c), l, cap, tried, [&](const std::vector<std::size_t>& s) {
    CoordinateSet t = CoordinateSet::zero_based(s);
    if (!accept(t)) return false;
    found = std::move(t);
    return true;
  });
  if (!hit && tried > cap)
    throw BudgetExceeded(std::string(what) + ": no coordinate set found within " + std::to_string(cap) + " tries");
  return found;
}

}  // namespace

std::optional<std::size_t> try_min_distance(const LinearCode& c) {
  if (c.dimension() == 0) return std::nullopt;
  try {
    return min_distance(c);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

ConstructionOutcome extend_even(const LinearCode& c) {
  if (!is_lcd(c)) throw PreconditionError("extend_even: code is not LCD");
  if (c.dimension() % 2 != 0) throw PreconditionError("extend_even: dimension must be even");
  const std::size_t d = require_distance(c, "extend_even");
  if (d % 2 == 0) throw PreconditionError("extend_even: minimum distance must be odd");
  const BitMatrix basis = orthonormal_basis(c);
  return {LinearCode(prefix_rows(basis, {true})), {c.length() + 1, c.dimension(), d + 1}, {{}, {}, "rows (1, c_i)"}};
}

ConstructionOutcome extend_odd_two(const LinearCode& c) {
  if (!is_lcd(c)) throw PreconditionError("extend_odd_two: code is not LCD");
  if (c.dimension() % 2 == 0) throw PreconditionError("extend_odd_two: dimension must be odd");
  const std::size_t d = require_distance(c, "extend_odd_two");
  if (d % 2 == 0) throw PreconditionError("extend_odd_two: minimum distance must be odd");
  const BitMatrix basis = orthonormal_basis(c);
  return {LinearCode(prefix_rows(basis, {true, true})),
          {c.length() + 2, c.dimension(), d + 1},
          {{}, {}, "rows (1, 1, c_i)"}};
}

ConstructionOutcome puncture_even_lcd(const LinearCode& c, std::size_t coordinate) {
  if (!is_lcd(c)) throw PreconditionError("puncture_even_lcd: code is not LCD");
  if (!is_even_like(c)) throw PreconditionError("puncture_even_lcd: code is odd-like");
  const auto t = CoordinateSet::single(coordinate);
  LinearCode out = puncture(c, t);
  if (!is_lcd(out)) throw InternalError("puncture_even_lcd: punctured code is not LCD");
  return {std::move(out), {c.length() - 1, c.dimension(), minus(try_min_distance(c), 1)}, {{coordinate}, {}, "puncture"}};
}

ShortenOddResult shorten_odd_lcd(const LinearCode& c, std::optional<std::size_t> coordinate) {
  if (!is_lcd(c)) throw PreconditionError("shorten_odd_lcd: code is not LCD");
  if (is_even_like(c)) throw PreconditionError("shorten_odd_lcd: code is even-like");
  const std::size_t n = c.length();
  if (coordinate && *coordinate >= n) throw PreconditionError("shorten_odd_lcd: coordinate out of range");
  const auto d = try_min_distance(c);

  auto shorten_at = [&](std::size_t i) -> std::optional<ConstructionOutcome> {
    LinearCode s = shorten(c, CoordinateSet::single(i));
    if (s.dimension() > 0 && !is_lcd(s)) return std::nullopt;
    const std::size_t k = s.dimension();
    return ConstructionOutcome{std::move(s), {n - 1, k, d}, {{i}, {}, "shorten"}};
  };

  ShortenOddResult result;
  if (contains_all_one(c)) {
    auto s = shorten_at(coordinate.value_or(0));
    if (!s) throw InternalError("shorten_odd_lcd: shortening is not LCD although 1_n lies in the code");
    result.shortened = std::move(*s);
    return result;
  }

  std::vector<std::size_t> order;
  if (coordinate) order.push_back(*coordinate);
  for (std::size_t i = 0; i < n; ++i)
    if (!coordinate || i != *coordinate) order.push_back(i);

  bool found = false;
  for (auto i : order) {
    if (auto s = shorten_at(i)) {
      result.shortened = std::move(*s);
      found = true;
      break;
    }
  }
  if (!found) throw InternalError("shorten_odd_lcd: no coordinate gives an LCD shortening");
  for (auto j : order) {
    LinearCode p = puncture(c, CoordinateSet::single(j));
    if (p.dimension() == c.dimension() && is_lcd(p)) {
      result.punctured = ConstructionOutcome{std::move(p), {n - 1, c.dimension(), minus(d, 1)}, {{j}, {}, "puncture"}};
      break;
    }
  }
  if (!result.punctured) throw InternalError("shorten_odd_lcd: no coordinate gives an LCD puncturing");
  return result;
}

ConstructionOutcome puncture_to_lcd(const LinearCode& c, const CoordinateSet& t) {
  LinearCode p = puncture(c, t);
  if (p.dimension() != c.dimension()) throw PreconditionError("puncture_to_lcd: puncturing lowers the dimension");
  if (!is_lcd(p)) throw PreconditionError("puncture_to_lcd: punctured code is not LCD");
  return {std::move(p), {c.length() - t.size(), c.dimension(), minus(try_min_distance(c), t.size())},
          {t.indices(), {}, "puncture"}};
}

ConstructionOutcome hull_shorten(const LinearCode& c, std::optional<CoordinateSet> t, SubsetSearchBudget budget) {
  const std::size_t l = hull_dimension(c);
  if (l == 0) throw PreconditionError("hull_shorten: code is already LCD (hull dimension 0)");
  if (l == c.dimension()) throw PreconditionError("hull_shorten: hull dimension equals k, the result would be empty");
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  auto accept = [&](const CoordinateSet& s) {
    const LinearCode out = shorten(c, s);
    return out.dimension() == k - l && is_lcd(out);
  };
  if (t) {
    t->check_range(n);
    if (t->size() != l || !accept(*t))
      throw PreconditionError("hull_shorten: supplied coordinates do not give an LCD [n-l, k-l] code");
  } else {
    t = search_subsets(c, l, budget, "hull_shorten", accept);
    if (!t) throw InternalError("hull_shorten: exhaustive search found no coordinate set");
  }
  LinearCode out = shorten(c, *t);
  return {std::move(out), {n - l, k - l, try_min_distance(c)}, {t->indices(), {}, "shorten on hull-guided set"}};
}

ConstructionOutcome hull_puncture(const LinearCode& c, std::optional<CoordinateSet> t, SubsetSearchBudget budget) {
  const std::size_t l = hull_dimension(c);
  if (l == 0) throw PreconditionError("hull_puncture: code is already LCD (hull dimension 0)");
  const auto d = try_min_distance(c);
  if (d && l >= *d) throw PreconditionError("hull_puncture: hull dimension must be below the minimum distance");
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  auto accept = [&](const CoordinateSet& s) {
    const LinearCode out = puncture(c, s);
    return out.dimension() == k && is_lcd(out);
  };
  if (t) {
    t->check_range(n);
    if (t->size() != l || !accept(*t))
      throw PreconditionError("hull_puncture: supplied coordinates do not give an LCD [n-l, k] code");
  } else {
    t = search_subsets(c, l, budget, "hull_puncture", accept);
    if (!t) throw InternalError("hull_puncture: exhaustive search found no coordinate set");
  }
  LinearCode out = puncture(c, *t);
  return {std::move(out), {n - l, k, minus(d, l)}, {t->indices(), {}, "puncture on hull-guided set"}};
}

std::vector<std::size_t> hull1_puncture(const LinearCode& c) {
  if (hull_dimension(c) != 1) throw PreconditionError("hull1_puncture: hull dimension must be 1");
  const BitVector h = hull(c).generator().row(0);
  std::vector<std::size_t> support = h.support();
  for (auto v : support) {
    if (!is_lcd(puncture(c, CoordinateSet::single(v))))
      throw InternalError("hull1_puncture: puncturing on a hull coordinate is not LCD");
  }
  return support;
}

ConstructionOutcome extend_row_dual(const LinearCode& c, const BitVector& x) {
  if (!is_lcd(c)) throw PreconditionError("extend_row_dual: code is not LCD");
  if (x.size() != c.length()) throw PreconditionError("extend_row_dual: x has the wrong length");
  if (!c.generator().apply(x).is_zero()) throw PreconditionError("extend_row_dual: x is not in the dual code");
  if (x.is_odd()) throw PreconditionError("extend_row_dual: x has odd weight");
  LinearCode out = leading_row_extension(c, x);
  if (!is_lcd(out)) throw InternalError("extend_row_dual: result is not LCD");
  return {std::move(out), {c.length() + 1, c.dimension() + 1, std::nullopt}, {{}, {x}, "row (1, x)"}};
}

SystematicVerdict extend_systematic(const LinearCode& c, const BitVector& x) {
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  if (!is_lcd(c)) throw PreconditionError("extend_systematic: code is not LCD");
  if (x.size() != n - k) throw PreconditionError("extend_systematic: x must have length n - k");
  const bool even = is_even_like(c);
  const BitMatrix gm = c.generator().gram();
  const BitMatrix expected = even ? symplectic_block(0, k / 2) : BitMatrix::identity(k);
  if (gm != expected)
    throw PreconditionError(std::string("extend_systematic: stored generator is not ") +
                            (even ? "symplectic" : "orthonormal"));
  std::vector<std::size_t> info(k);
  std::iota(info.begin(), info.end(), 0);
  if (c.generator().select_columns(info).rank() != k)
    throw PreconditionError("extend_systematic: first k columns of the generator are dependent");

  const BitVector x_full = BitVector(k).concat(x);
  SystematicVerdict v;
  v.x_weight = x.weight();
  v.odd_rows = c.generator().apply(x_full).weight();
  v.lcd = even ? v.x_weight % 2 == 0 : (v.x_weight + v.odd_rows) % 2 == 0;

  const LinearCode out = leading_row_extension(c, x_full);
  if (is_lcd(out) != v.lcd) throw InternalError("extend_systematic: verdict disagrees with the Gram matrix");
  if (v.lcd) v.outcome = ConstructionOutcome{out, {n + 1, k + 1, std::nullopt}, {{}, {x_full}, "row (1, 0_k, x)"}};
  return v;
}

ConstructionOutcome extend_hull_drop(const LinearCode& c, const BitVector& x) {
  const std::size_t s = hull_dimension(c);
  if (s == 0) throw PreconditionError("extend_hull_drop: hull dimension must be at least 1");
  if (x.size() != c.length()) throw PreconditionError("extend_hull_drop: x has the wrong length");
  const LinearCode h = hull(c);
  const BitVector meets = h.generator().apply(x);
  if (meets.is_zero()) throw PreconditionError("extend_hull_drop: x is orthogonal to the whole hull");
  const BitVector partner = h.generator().row(meets.first_one());
  LinearCode out = leading_row_extension(c, x);
  if (hull_dimension(out) != s - 1) throw InternalError("extend_hull_drop: hull did not drop by one");
  return {std::move(out), {c.length() + 1, c.dimension() + 1, std::nullopt}, {{}, {x, partner}, "row (1, x)"}};
}

ConstructionOutcome extend_column_hull_drop(const LinearCode& c, const BitVector& y) {
  const std::size_t s = hull_dimension(c);
  if (s == 0) throw PreconditionError("extend_column_hull_drop: hull dimension must be at least 1");
  if (y.size() != c.dimension()) throw PreconditionError("extend_column_hull_drop: y must have length k");
  const BitMatrix radical = c.generator().gram().left_kernel();
  if (radical.apply(y).is_zero()) throw PreconditionError("extend_column_hull_drop: column is orthogonal to the hull");
  LinearCode out(c.generator().prepend_column(y));
  if (hull_dimension(out) != s - 1) throw InternalError("extend_column_hull_drop: hull did not drop by one");
  return {std::move(out), {c.length() + 1, c.dimension(), try_min_distance(c)}, {{}, {y}, "column y"}};
}

ConstructionOutcome extend_column_hull_drop_from_vector(const LinearCode& c, const BitVector& x) {
  if (x.size() != c.length()) throw PreconditionError("extend_column_hull_drop: x has the wrong length");
  return extend_column_hull_drop(c, c.generator().apply(x));
}

std::vector<ConstructionOutcome> extend_two_multi(const LinearCode& c) {
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  if (!is_lcd(c)) throw PreconditionError("extend_two_multi: code is not LCD");
  if (k % 2 == 0) throw PreconditionError("extend_two_multi: dimension must be odd");
  if (k > 24) throw BudgetExceeded("extend_two_multi: 2^(k-1) outputs is too many");
  const std::size_t d = require_distance(c, "extend_two_multi");
  if (d % 2 == 0) throw PreconditionError("extend_two_multi: minimum distance must be odd");

  // Parity extension of an orthonormal basis has Gram E_k + I_k, so a
  // one-dimensional hull; its hull normal form puts the hull vector first.
  const LinearCode parity(prefix_rows(orthonormal_basis(c), {true}));
  const NormalFormCertificate cert = hull_normal_basis(parity);
  if (cert.shape.s != 1 || cert.shape.a1 == BlockKind::orthonormal)
    throw InternalError("extend_two_multi: parity extension does not have a one-dimensional hull");
  const BitMatrix& g = cert.basis;

  std::vector<ConstructionOutcome> out;
  const std::uint64_t count = std::uint64_t{1} << (k - 1);
  for (std::uint64_t t = 0; t < count; ++t) {
    BitVector y(k);
    y.set(0);
    for (std::size_t i = 1; i < k; ++i) y.set(i, (t >> (k - 1 - i)) & 1U);
    std::vector<BitVector> rows{g.row(0).append(true)};
    for (std::size_t i = 1; i < k; ++i) {
      BitVector r = g.row(i);
      if (y.get(i)) r ^= g.row(0);
      rows.push_back(r.append(false));
    }
    LinearCode code(BitMatrix::from_rows(std::move(rows), n + 2));
    if (!is_lcd(code)) throw InternalError("extend_two_multi: output is not LCD");
    out.push_back({std::move(code), {n + 2, k, d + 1}, {{}, {y}, "column y after parity extension"}});
  }

  std::vector<BitMatrix> canon;
  for (const auto& o : out) canon.push_back(o.code.canonical_generator());
  std::sort(canon.begin(), canon.end(), [](const BitMatrix& a, const BitMatrix& b) {
    return std::lexicographical_compare(a.row_list().begin(), a.row_list().end(), b.row_list().begin(),
                                        b.row_list().end());
  });
  if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
    throw InternalError("extend_two_multi: two choices of y gave the same code");
  return out;
}

}  // namespace lcd
