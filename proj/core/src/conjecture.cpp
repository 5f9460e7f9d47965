#include "lcd/conjecture.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "lcd/constructions.hpp"
#include "lcd/errors.hpp"
#include "lcd/normal_form.hpp"

namespace lcd {

namespace {

using nlohmann::json;

std::size_t require_distance(const LinearCode& c, const char* what) {
  const auto d = try_min_distance(c);
  if (!d) throw BudgetExceeded(std::string(what) + ": minimum distance is out of budget");
  return *d;
}

// Checks the LCD_oe, k >= 2, d >= 3 precondition and returns d.
std::size_t require_step_down_input(const LinearCode& c, const char* what) {
  const std::string w(what);
  const ParityClass pc = parity_class(c);
  if (!pc.is_lcd()) throw PreconditionError(w + ": not LCD (hull dimension " + std::to_string(pc.hull_dim) + ")");
  if (pc.self != Parity::odd_like) throw PreconditionError(w + ": not LCD_oe (not-odd-like)");
  if (pc.dual != Parity::even_like) throw PreconditionError(w + ": not LCD_oe (dual-not-even)");
  if (c.dimension() < 2) throw PreconditionError(w + ": k<2");
  const std::size_t d = require_distance(c, what);
  if (d < 3) throw PreconditionError(w + ": d<3 (d = " + std::to_string(d) + ")");
  return d;
}

// Coefficients of each row of `rows` over the basis `basis`, as rows.
BitMatrix coordinates_in(const BitMatrix& basis, const BitMatrix& rows) {
  std::vector<BitVector> out;
  for (const auto& r : rows.row_list()) {
    auto x = solve(basis, r);
    if (!x) throw InternalError("vector outside the expected span");
    out.push_back(std::move(*x));
  }
  return BitMatrix::from_rows(std::move(out), basis.rows());
}

BitMatrix first_rows(const BitMatrix& g, std::size_t count) {
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = i;
  return g.select_rows(idx);
}

std::vector<std::size_t> sorted_pair(std::size_t u, std::size_t v) {
  return u < v ? std::vector<std::size_t>{u, v} : std::vector<std::size_t>{v, u};
}

BitVector puncture_vector(const BitVector& x, std::size_t u, std::size_t v) {
  const auto idx = sorted_pair(u, v);
  return x.erase(idx);
}

json one_based(std::size_t i) { return i + 1; }

class StepDown {
 public:
  StepDown(const LinearCode& c, std::size_t d) : c_(c), d_(d), pairs_(c.length()) {}

  const std::vector<PunctureWitness>& pairs(std::size_t u) {
    if (!pairs_[u]) pairs_[u] = good_puncture_pairs(c_, u, d_);
    return *pairs_[u];
  }

  const LinearCode& span_d2(std::size_t u, std::size_t v) {
    for (const auto& [key, span] : spans_)
      if (key.first == u && key.second == v) return span;
    const auto& list = pairs(u);
    auto it = std::find_if(list.begin(), list.end(), [&](const PunctureWitness& w) { return w.v == v; });
    if (it == list.end()) throw InternalError("certify_step_down: pair is not an LCD witness");
    spans_.emplace_back(std::make_pair(u, v), min_weight_span_punctured(*it, d_));
    return spans_.back().second;
  }

  const PunctureWitness& witness(std::size_t u, std::size_t v) {
    for (const auto& w : pairs(u))
      if (w.v == v) return w;
    throw InternalError("certify_step_down: pair is not an LCD witness");
  }

  bool all_one_outside(std::size_t u, std::size_t v) {
    return !span_d2(u, v).contains(BitVector::ones(c_.length() - 2));
  }

 private:
  const LinearCode& c_;
  std::size_t d_;
  std::vector<std::optional<std::vector<PunctureWitness>>> pairs_;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, LinearCode>> spans_;
};

}  // namespace

std::vector<PunctureWitness> good_puncture_pairs(const LinearCode& c, std::size_t u) {
  const std::size_t d = require_step_down_input(c, "good_puncture_pairs");
  return good_puncture_pairs(c, u, d);
}

std::vector<PunctureWitness> good_puncture_pairs(const LinearCode& c, std::size_t u, std::size_t d) {
  if (u >= c.length()) throw PreconditionError("good_puncture_pairs: coordinate out of range");
  const BitMatrix g = orthonormal_basis(c);
  BitVector h(c.length());
  for (const auto& r : g.row_list())
    if (r.get(u)) h ^= r;
  std::vector<PunctureWitness> out;
  for (auto v : h.support()) {
    if (v == u) continue;
    PunctureWitness w;
    w.u = u;
    w.v = v;
    w.punctured = puncture(c, CoordinateSet::zero_based(sorted_pair(u, v)));
    w.lcd = is_lcd(w.punctured);
    if (!w.lcd) throw InternalError("good_puncture_pairs: punctured code on a hull-support pair is not LCD");
    w.dmin = require_distance(w.punctured, "good_puncture_pairs");
    out.push_back(std::move(w));
  }
  if (out.size() + 1 < d)
    throw InternalError("good_puncture_pairs: fewer than d - 1 witnesses at coordinate " + std::to_string(u));
  return out;
}

LinearCode min_weight_span_punctured(const PunctureWitness& w, std::size_t d) {
  if (!w.lcd) throw PreconditionError("min_weight_span_punctured: witness is not LCD");
  if (d < 3) throw PreconditionError("min_weight_span_punctured: d must be at least 3");
  return codeword_span(w.punctured, d - 2);
}

LinearCode column_append_even(const LinearCode& c, const BitVector& y) {
  const ParityClass pc = parity_class(c);
  if (pc.label() != "LCD_eo") throw PreconditionError("column_append_even: input is not LCD_eo");
  if (y.size() != c.dimension()) throw PreconditionError("column_append_even: column length must equal k");
  const std::size_t k = c.dimension();

  // Carry y into a symplectic basis b_1, b_1', ... and apply the two row steps.
  const BitMatrix s = symplectic_basis(c);
  const BitVector ys = coordinates_in(c.generator(), s).apply(y);
  std::vector<BitVector> rows = s.row_list();
  BitVector yy = ys;
  for (std::size_t i = 0; i + 1 < k; i += 2) {
    const bool a = yy.get(i);
    const bool b = yy.get(i + 1);
    if (a && !b) {
      rows[i + 1] ^= rows[i];
      yy.set(i + 1);
    } else if (!a && b) {
      rows[i] ^= rows[i + 1];
      yy.set(i);
    }
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i + 1 < k; i += 2)
    if (yy.get(i)) order.insert(order.end(), {i, i + 1});
  const std::size_t h = order.size();
  for (std::size_t i = 0; i + 1 < k; i += 2)
    if (!yy.get(i)) order.insert(order.end(), {i, i + 1});
  std::vector<BitVector> arranged;
  for (auto i : order) arranged.push_back(rows[i].append(yy.get(i)));
  const BitMatrix cert = BitMatrix::from_rows(std::move(arranged), c.length() + 1);
  const BitMatrix gram = cert.gram();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const bool in_a = i < h && j < h;
      bool expect;
      if (in_a)
        expect = (i / 2 == j / 2) ? i == j : true;
      else
        expect = (i / 2 == j / 2) && i != j;
      if (gram.get(i, j) != expect) throw InternalError("column_append_even: certificate Gram has the wrong shape");
    }
  if (gram.rank() != k) throw InternalError("column_append_even: certificate Gram is singular");

  LinearCode out(c.generator().append_column(y));
  if (!is_lcd(out)) throw InternalError("column_append_even: result is not LCD");
  return out;
}

bool column_append_odd_last_bit(const LinearCode& c, const BitVector& y_prefix) {
  const std::size_t k = c.dimension();
  if (k == 0) throw PreconditionError("column_append_odd: zero-dimensional code");
  if (!is_lcd(c) || is_even_like(c)) throw PreconditionError("column_append_odd: input must be odd-like LCD");
  if (y_prefix.size() + 1 != k) throw PreconditionError("column_append_odd: prefix length must be k - 1");
  const BitMatrix& g = c.generator();
  const BitVector& last = g.row(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (inner_product(last, g.row(i)))
      throw PreconditionError("column_append_odd: last row is not orthogonal to row " + std::to_string(i + 1));
  if (k == 1) return false;
  const LinearCode sub(first_rows(g, k - 1));
  if (is_even_like(sub)) return false;
  const BitMatrix on = orthonormal_basis(sub);
  const BitVector moved = coordinates_in(sub.generator(), on).apply(y_prefix);
  return moved.is_odd();
}

LinearCode column_append_odd(const LinearCode& c, const BitVector& y_prefix) {
  const bool last = column_append_odd_last_bit(c, y_prefix);
  LinearCode out(c.generator().append_column(y_prefix.append(last)));
  if (!is_lcd(out)) throw InternalError("column_append_odd: result is not LCD");
  return out;
}

LinearCode extend_after_puncture(const PunctureWitness& w, const LinearCode& span_d2) {
  if (!w.lcd) throw PreconditionError("extend_after_puncture: witness is not LCD");
  const LinearCode& p = w.punctured;
  const std::size_t m = p.length();
  const std::size_t k = p.dimension();
  if (span_d2.length() != m) throw PreconditionError("extend_after_puncture: span length mismatch");
  if (span_d2.contains(BitVector::ones(m)))
    throw PreconditionError("extend_after_puncture: the all-one vector lies in the weight-(d-2) span");
  if (!p.contains(span_d2)) throw PreconditionError("extend_after_puncture: span is not a subcode");

  const NormalFormCertificate nf = subcode_normal_form(p, span_d2);
  if (nf.shape.a3 != BlockKind::orthonormal)
    throw InternalError("extend_after_puncture: no odd codeword orthogonal to the span");
  const BitVector c = nf.basis.row(nf.shape.subcode_dim + nf.shape.s);

  // Basis c_1, ..., c_{k-1}, c with c orthogonal to the rest.
  const BitMatrix completed = complete_orthogonal_basis(p, c);
  std::vector<BitVector> rows(completed.row_list().begin() + 1, completed.row_list().end());
  rows.push_back(c);
  const BitMatrix basis = BitMatrix::from_rows(std::move(rows), m);

  BitVector y_prefix(k - 1);
  const std::size_t r = span_d2.dimension();
  if (r > 0) {
    const BitMatrix coeffs = coordinates_in(basis, span_d2.generator());
    std::vector<std::size_t> head(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) head[i] = i;
    for (const auto& row : coeffs.row_list())
      if (row.get(k - 1)) throw InternalError("extend_after_puncture: span is not orthogonal to c");
    const BitMatrix a = coeffs.select_columns(head);
    auto y = solve(a.transpose(), BitVector::ones(r));
    if (!y) throw InternalError("extend_after_puncture: no column lifts the weight-(d-2) span");
    y_prefix = *y;
  }
  const LinearCode staged(basis);
  const bool last = column_append_odd_last_bit(staged, y_prefix);
  LinearCode out(basis.append_column(y_prefix.append(last)));
  if (!is_lcd(out)) throw InternalError("extend_after_puncture: result is not LCD");
  for (const auto& a : span_d2.generator().row_list())
    if (!out.contains(a.append(true))) throw InternalError("extend_after_puncture: a weight-(d-2) word did not lift");
  return out;
}

std::string to_string(StepDownRoute route) {
  return route == StepDownRoute::padded_puncture ? "padded-puncture" : "extension";
}

ConjectureCertificate certify_step_down(const LinearCode& c) {
  const std::size_t d = require_step_down_input(c, "certify_step_down");
  const std::size_t n1 = c.length();
  ConjectureCertificate cert;
  cert.input_length = n1;
  cert.dimension = c.dimension();
  cert.input_distance = d;
  auto note = [&](std::string step, json detail) { cert.trace.push_back({std::move(step), std::move(detail)}); };
  note("input", {{"n", n1}, {"k", c.dimension()}, {"d", d}, {"class", "LCD_oe"}});

  StepDown search(c, d);

  // Route (a): a punctured LCD code that already has distance d - 1.
  const PunctureWitness* direct = nullptr;
  for (std::size_t u = 0; u < n1 && !direct; ++u)
    for (const auto& w : search.pairs(u))
      if (w.dmin + 1 >= d) {
        direct = &w;
        break;
      }

  if (direct) {
    cert.route = StepDownRoute::padded_puncture;
    cert.u = direct->u;
    cert.v = direct->v;
    cert.output = pad_zero_column(direct->punctured);
    note("lcd-puncture-pair", {{"u", one_based(direct->u)}, {"v", one_based(direct->v)}, {"dmin", direct->dmin}});
    note("pad-zero-column", {{"n", cert.output.length()}});
  } else {
    // Route (b): find (u, v) whose weight-(d-2) span misses the all-one vector.
    std::optional<std::pair<std::size_t, std::size_t>> candidate;
    const LinearCode cd = codeword_span(c, d);
    const BitVector ones = BitVector::ones(n1);
    const auto coeff = solve(cd.generator(), ones);
    if (!coeff) {
      note("all-one-outside-weight-d-span", {{"dim_span", cd.dimension()}});
      const auto& first = search.pairs(0).front();
      candidate = std::make_pair(first.u, first.v);
    } else {
      std::vector<BitVector> r;
      for (auto i : coeff->support()) r.push_back(cd.generator().row(i));
      note("all-one-decomposition", {{"s", r.size()}});
      for (std::size_t depth = 0; !candidate; ++depth) {
        if (depth > n1) throw InternalError("certify_step_down: case (2)(ii) recursion exceeded its cap");
        cert.recursion_depth = depth;
        // Case (1): two decomposition words share a coordinate u.
        std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> shared;
        for (std::size_t u = 0; u < n1 && !shared; ++u)
          for (std::size_t a = 0; a < r.size() && !shared; ++a)
            for (std::size_t b = a + 1; b < r.size() && !shared; ++b)
              if (r[a].get(u) && r[b].get(u)) shared = std::make_tuple(u, a, b);
        if (shared) {
          const auto [u, a, b] = *shared;
          for (const auto& w : search.pairs(u))
            if (!r[a].get(w.v) || !r[b].get(w.v)) {
              candidate = std::make_pair(u, w.v);
              break;
            }
          if (!candidate) throw InternalError("certify_step_down: case (1) found no separating coordinate");
          note("case-1", {{"u", one_based(u)}, {"v", one_based(candidate->second)}, {"w1", a + 1}, {"w2", b + 1}});
          break;
        }
        // Case (2): the decomposition words have disjoint supports.
        const std::size_t u = 0;
        const std::size_t v1 = search.pairs(u).front().v;
        std::size_t w0 = 0;
        while (w0 < r.size() && !r[w0].get(u)) ++w0;
        if (w0 == r.size()) throw InternalError("certify_step_down: decomposition does not cover coordinate 1");
        if (!r[w0].get(v1)) {
          candidate = std::make_pair(u, v1);
          note("case-2", {{"u", one_based(u)}, {"v", one_based(v1)}, {"w0", w0 + 1}});
          break;
        }
        const LinearCode& s = search.span_d2(u, v1);
        for (std::size_t w1 = 0; w1 < r.size(); ++w1)
          if (w1 != w0 && !s.contains(puncture_vector(r[w1], u, v1))) {
            candidate = std::make_pair(u, v1);
            note("case-2-i", {{"u", one_based(u)}, {"v", one_based(v1)}, {"w1", w1 + 1}});
            break;
          }
        if (candidate) break;
        const auto h = solve(s.generator(), BitVector::ones(n1 - 2));
        if (!h) {
          candidate = std::make_pair(u, v1);
          note("case-2-ii-direct", {{"u", one_based(u)}, {"v", one_based(v1)}});
          break;
        }
        // Lift the decomposition of 1_{n-1} back to C and restart at case (1).
        const PunctureWitness& pw = search.witness(u, v1);
        std::vector<BitVector> lifted;
        for (auto i : h->support()) {
          const auto x = solve(pw.punctured.generator(), s.generator().row(i));
          if (!x) throw InternalError("certify_step_down: punctured word has no preimage");
          lifted.push_back(c.generator().combine(*x));
        }
        note("case-2-ii", {{"u", one_based(u)}, {"v", one_based(v1)}, {"lifted", lifted.size()}, {"depth", depth + 1}});
        r = std::move(lifted);
      }
    }

    if (!search.all_one_outside(candidate->first, candidate->second)) {
      note("candidate-rejected", {{"u", one_based(candidate->first)}, {"v", one_based(candidate->second)}});
      candidate.reset();
      for (std::size_t u = 0; u < n1 && !candidate; ++u)
        for (const auto& w : search.pairs(u))
          if (search.all_one_outside(u, w.v)) {
            candidate = std::make_pair(u, w.v);
            break;
          }
      if (!candidate) throw InternalError("certify_step_down: no LCD pair avoids the all-one vector");
      cert.used_fallback = true;
      note("fallback-scan", {{"u", one_based(candidate->first)}, {"v", one_based(candidate->second)}});
    }

    const auto [u, v] = *candidate;
    const PunctureWitness& w = search.witness(u, v);
    const LinearCode& s = search.span_d2(u, v);
    cert.route = StepDownRoute::extension;
    cert.u = u;
    cert.v = v;
    note("weight-d-2-span", {{"u", one_based(u)}, {"v", one_based(v)}, {"dim", s.dimension()}, {"dmin", w.dmin}});
    cert.output = extend_after_puncture(w, s);
    note("extend-after-puncture", {{"n", cert.output.length()}});
  }

  if (cert.output.length() + 1 != n1 || cert.output.dimension() != c.dimension() || !is_lcd(cert.output))
    throw InternalError("certify_step_down: output failed re-verification");
  cert.output_distance = require_distance(cert.output, "certify_step_down");
  if (cert.output_distance + 1 < d) throw InternalError("certify_step_down: output distance below d - 1");
  note("verified", {{"n", cert.output.length()}, {"k", cert.dimension}, {"d", cert.output_distance}, {"lcd", true}});
  return cert;
}

std::string to_json_lines(const ConjectureCertificate& cert) {
  std::ostringstream out;
  json rows = json::array();
  for (const auto& r : cert.output.generator().row_list()) rows.push_back(r.to_string());
  json head = {{"certificate", "step-down"},
               {"input", {cert.input_length, cert.dimension, cert.input_distance}},
               {"output", {cert.output.length(), cert.dimension, cert.output_distance}},
               {"route", to_string(cert.route)},
               {"u", cert.u + 1},
               {"v", cert.v + 1},
               {"recursion_depth", cert.recursion_depth},
               {"fallback", cert.used_fallback},
               {"generator", rows}};
  out << head.dump() << '\n';
  for (const auto& step : cert.trace) {
    json line = {{"step", step.step}, {"detail", step.detail}};
    out << line.dump() << '\n';
  }
  return out.str();
}

}  // namespace lcd
