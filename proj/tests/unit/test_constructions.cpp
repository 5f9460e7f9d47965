#include <doctest.h>

#include <random>
#include <set>

#include "lcd/constructions.hpp"
#include "lcd/errors.hpp"
#include "lcd/normal_form.hpp"
#include "oracle.hpp"

using lcd::BitMatrix;
using lcd::BitVector;
using lcd::CoordinateSet;
using lcd::LinearCode;

namespace {

LinearCode hamming7() { return LinearCode::from_strings({"1000110", "0100101", "0010011", "0001111"}); }

LinearCode code(std::initializer_list<std::string_view> rows) { return LinearCode::from_strings(rows); }

// Orthonormal or symplectic generator of a random LCD code whose first k
// columns are independent, as the systematic extension requires.
LinearCode normalized_lcd(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  while (true) {
    const LinearCode c = oracle::random_lcd_code(rng, n, k);
    const BitMatrix g = lcd::is_even_like(c) ? lcd::symplectic_basis(c) : lcd::orthonormal_basis(c);
    std::vector<std::size_t> head(k);
    for (std::size_t i = 0; i < k; ++i) head[i] = i;
    if (g.select_columns(head).rank() == k) return LinearCode(g);
  }
}

}  // namespace

TEST_CASE("extend_even examples") {
  auto out = lcd::extend_even(LinearCode::full_space(2));
  CHECK(out.code == code({"110", "101"}));
  CHECK(oracle::is_lcd(out.code));
  CHECK(oracle::min_distance(out.code) == 2);
  CHECK(lcd::is_even_like(out.code));

  out = lcd::extend_even(code({"111000", "000111"}));
  CHECK(out.code.length() == 7);
  CHECK(oracle::min_distance(out.code) == 4);
  CHECK(oracle::is_lcd(out.code));

  CHECK_THROWS_AS(lcd::extend_even(LinearCode::repetition(3)), lcd::PreconditionError);
}

TEST_CASE("extend_odd_two examples") {
  CHECK(lcd::extend_odd_two(code({"1"})).code == LinearCode::repetition(3));
  CHECK(lcd::extend_odd_two(LinearCode::repetition(3)).code == LinearCode::repetition(5));
  CHECK_THROWS_AS(lcd::extend_odd_two(LinearCode::full_space(2)), lcd::PreconditionError);
}

TEST_CASE("parity extensions on random LCD codes") {
  std::mt19937_64 rng(21);
  int even_runs = 0;
  int odd_runs = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 4 + rng() % 11;
    const std::size_t k = 1 + rng() % (n - 2);
    const LinearCode c = oracle::random_lcd_code(rng, n, k);
    const std::size_t d = oracle::min_distance(c);
    if (d % 2 == 0) continue;
    if (k % 2 == 0) {
      const auto out = lcd::extend_even(c);
      CHECK(oracle::is_lcd(out.code));
      CHECK(oracle::min_distance(out.code) == d + 1);
      CHECK(lcd::is_even_like(out.code));
      ++even_runs;
    } else {
      const auto out = lcd::extend_odd_two(c);
      CHECK(oracle::is_lcd(out.code));
      CHECK(oracle::min_distance(out.code) >= d + 1);
      CHECK(out.code.length() == n + 2);
      ++odd_runs;
    }
  }
  CHECK(even_runs > 20);
  CHECK(odd_runs > 20);
}

TEST_CASE("puncturing an even-like LCD code") {
  CHECK(lcd::puncture_even_lcd(code({"1100", "0110"}), 0).code == code({"100", "110"}));
  CHECK(lcd::puncture_even_lcd(code({"1100", "0110"}), 3).code == code({"110", "011"}));
  CHECK_THROWS_AS(lcd::puncture_even_lcd(code({"111"}), 0), lcd::PreconditionError);

  std::mt19937_64 rng(22);
  int runs = 0;
  for (int t = 0; t < 2000 && runs < 200; ++t) {
    const std::size_t n = 4 + rng() % 10;
    const LinearCode c = oracle::random_lcd_code(rng, n, 1 + rng() % (n - 1));
    if (!lcd::is_even_like(c)) continue;
    for (std::size_t i = 0; i < n; ++i) CHECK(oracle::is_lcd(lcd::puncture_even_lcd(c, i).code));
    ++runs;
  }
  CHECK(runs > 50);
}

TEST_CASE("shortening an odd-like LCD code") {
  CHECK(lcd::shorten_odd_lcd(code({"111000", "000111"}), 0).shortened.code == code({"00111"}));
  CHECK(lcd::shorten_odd_lcd(LinearCode::full_space(2), 1).shortened.code == code({"1"}));
  // Gram diag(1, 0): not LCD, so refused.
  CHECK_THROWS_AS(lcd::shorten_odd_lcd(code({"100", "011"}), 0), lcd::PreconditionError);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 3 + rng() % 11;
    const LinearCode c = oracle::random_lcd_code(rng, n, 1 + rng() % (n - 1));
    if (lcd::is_even_like(c)) continue;
    const auto r = lcd::shorten_odd_lcd(c);
    const std::size_t i = r.shortened.witness.coordinates.at(0);
    const bool covered = !c.generator().column(i).is_zero();
    CHECK(r.shortened.code.dimension() + (covered ? 1 : 0) == c.dimension());
    if (r.shortened.code.dimension() > 0) CHECK(oracle::is_lcd(r.shortened.code));
    if (lcd::contains_all_one(c)) {
      CHECK_FALSE(r.punctured.has_value());
      for (std::size_t i = 0; i < n; ++i) {
        const auto s = lcd::shorten(c, CoordinateSet::single(i));
        if (s.dimension() > 0) CHECK(oracle::is_lcd(s));
      }
    } else {
      REQUIRE(r.punctured.has_value());
      CHECK(oracle::is_lcd(r.punctured->code));
      CHECK(r.punctured->code.dimension() == c.dimension());
    }
  }
}

TEST_CASE("hull-guided shortening and puncturing") {
  const auto s = lcd::hull_shorten(hamming7());
  CHECK(s.code.length() == 4);
  CHECK(s.code.dimension() == 1);
  CHECK(oracle::is_lcd(s.code));
  CHECK(oracle::min_distance(s.code) >= 3);
  CHECK(s.witness.coordinates.size() == 3);

  CHECK_THROWS_AS(lcd::hull_shorten(code({"11"})), lcd::PreconditionError);
  CHECK_THROWS_AS(lcd::hull_puncture(hamming7()), lcd::PreconditionError);

  std::mt19937_64 rng(24);
  int shortened = 0;
  int punctured = 0;
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 5 + rng() % 9;
    const std::size_t k = 2 + rng() % (n - 3);
    const LinearCode c = oracle::random_code(rng, n, k);
    const std::size_t l = oracle::hull_dimension(c);
    if (l == 0 || l == k) continue;
    const std::size_t d = oracle::min_distance(c);
    const auto hs = lcd::hull_shorten(c);
    CHECK(hs.code.length() == n - l);
    CHECK(hs.code.dimension() == k - l);
    CHECK(oracle::is_lcd(hs.code));
    CHECK(oracle::min_distance(hs.code) >= d);
    ++shortened;
    if (l < d) {
      const auto hp = lcd::hull_puncture(c);
      CHECK(hp.code.dimension() == k);
      CHECK(oracle::is_lcd(hp.code));
      CHECK(oracle::min_distance(hp.code) + l >= d);
      ++punctured;
    }
  }
  CHECK(shortened > 100);
  CHECK(punctured > 20);
}

TEST_CASE("supplied coordinate sets are only checked") {
  const auto s = lcd::hull_shorten(hamming7());
  const auto t = CoordinateSet::zero_based(s.witness.coordinates);
  CHECK(lcd::hull_shorten(hamming7(), t).code == s.code);
  CHECK_THROWS_AS(lcd::hull_shorten(hamming7(), CoordinateSet::zero_based({0})), lcd::PreconditionError);
}

TEST_CASE("puncturing a one-dimensional hull") {
  CHECK_THROWS_AS(lcd::hull1_puncture(code({"11", "10"})), lcd::PreconditionError);
  CHECK(lcd::hull1_puncture(code({"1100", "0010"})) == std::vector<std::size_t>{0, 1});
  CHECK(lcd::is_lcd(lcd::puncture(code({"1100", "0010"}), CoordinateSet::single(0))));
  CHECK(lcd::hull1_puncture(code({"11000", "00111"})) == std::vector<std::size_t>{0, 1});

  std::mt19937_64 rng(25);
  int runs = 0;
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 3 + rng() % 11;
    const LinearCode c = oracle::random_code(rng, n, 1 + rng() % (n - 1));
    if (oracle::hull_dimension(c) != 1) continue;
    for (auto v : lcd::hull1_puncture(c)) CHECK(oracle::is_lcd(lcd::puncture(c, CoordinateSet::single(v))));
    ++runs;
  }
  CHECK(runs > 50);
}

TEST_CASE("row extension by a dual vector") {
  CHECK(lcd::extend_row_dual(code({"111"}), BitVector(3)).code == code({"1000", "0111"}));
  const auto out = lcd::extend_row_dual(code({"111"}), BitVector::from_string("110"));
  CHECK(out.code.generator() == BitMatrix::from_strings({"1110", "0111"}));
  CHECK(out.code.generator().gram() == BitMatrix::identity(2));
  CHECK_THROWS_AS(lcd::extend_row_dual(code({"111"}), BitVector::from_string("100")), lcd::PreconditionError);

  std::mt19937_64 rng(26);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 4 + rng() % 10;
    const LinearCode c = oracle::random_lcd_code(rng, n, 1 + rng() % (n - 2));
    const BitMatrix dual_rows = lcd::dual(c).generator();
    BitVector coeff(dual_rows.rows());
    for (std::size_t i = 0; i < coeff.size(); ++i) coeff.set(i, rng() & 1U);
    const BitVector x = dual_rows.combine(coeff);
    if (x.is_odd()) continue;
    const auto o = lcd::extend_row_dual(c, x);
    CHECK(oracle::is_lcd(o.code));
    CHECK(o.code.dimension() == c.dimension() + 1);
  }
}

TEST_CASE("systematic extension examples") {
  const LinearCode odd = code({"100", "010"});
  auto v = lcd::extend_systematic(odd, BitVector::from_string("0"));
  CHECK(v.lcd);
  CHECK(v.odd_rows == 0);
  REQUIRE(v.outcome.has_value());
  CHECK(v.outcome->code == code({"1000", "0100", "0010"}));

  v = lcd::extend_systematic(odd, BitVector::from_string("1"));
  CHECK_FALSE(v.lcd);
  CHECK_FALSE(v.outcome.has_value());

  v = lcd::extend_systematic(code({"1100", "0110"}), BitVector::from_string("01"));
  CHECK_FALSE(v.lcd);

  // Not orthonormal: refused rather than silently re-normalized.
  CHECK_THROWS_AS(lcd::extend_systematic(code({"110", "010"}), BitVector::from_string("0")), lcd::PreconditionError);
}

TEST_CASE("systematic extension verdict matches the Gram matrix for every x") {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 4 + rng() % 9;
    const std::size_t k = 1 + rng() % (n - 2);
    const LinearCode c = normalized_lcd(rng, n, k);
    const std::size_t r = n - k;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << r); ++x) {
      const BitVector xv = BitVector::from_word(r, x);
      const auto v = lcd::extend_systematic(c, xv);
      // Independent check on [[1, 0_k, x], [0, G]].
      std::vector<oracle::Word> rows{1};
      for (std::size_t j = 0; j < r; ++j)
        if ((x >> j) & 1U) rows[0] |= oracle::Word{1} << (1 + k + j);
      for (auto w : oracle::rows_of(c)) rows.push_back(w << 1);
      CHECK(v.lcd == (oracle::hull_dimension(rows) == 0));
    }
  }
}

TEST_CASE("row extension that lowers the hull") {
  auto out = lcd::extend_hull_drop(code({"11"}), BitVector::from_string("10"));
  CHECK(out.code.generator() == BitMatrix::from_strings({"110", "011"}));
  CHECK(lcd::is_lcd(out.code));
  CHECK_THROWS_AS(lcd::extend_hull_drop(code({"11"}), BitVector::from_string("11")), lcd::PreconditionError);

  out = lcd::extend_hull_drop(hamming7(), BitVector::from_string("1000000"));
  CHECK(oracle::hull_dimension(out.code) == 2);

  std::mt19937_64 rng(28);
  int runs = 0;
  for (int t = 0; t < 800; ++t) {
    const std::size_t n = 4 + rng() % 10;
    const LinearCode c = oracle::random_code(rng, n, 1 + rng() % (n - 1));
    const std::size_t s = oracle::hull_dimension(c);
    if (s == 0 || s > 3) continue;
    const BitVector x = BitVector::from_word(n, rng() & ((oracle::Word{1} << n) - 1));
    if (lcd::hull(c).generator().apply(x).is_zero()) {
      CHECK_THROWS_AS(lcd::extend_hull_drop(c, x), lcd::PreconditionError);
      continue;
    }
    CHECK(oracle::hull_dimension(lcd::extend_hull_drop(c, x).code) == s - 1);
    ++runs;
  }
  CHECK(runs > 100);
}

TEST_CASE("column extension that lowers the hull") {
  // Codeword-driven columns never meet the hull.
  CHECK_THROWS_AS(lcd::extend_column_hull_drop_from_vector(code({"11000", "00111"}), BitVector::from_string("00111")),
                  lcd::PreconditionError);
  CHECK_THROWS_AS(lcd::extend_column_hull_drop_from_vector(code({"11000", "00111"}), BitVector::from_string("11111")),
                  lcd::PreconditionError);
  CHECK_THROWS_AS(lcd::extend_column_hull_drop(code({"110", "010"}), BitVector::from_string("10")),
                  lcd::PreconditionError);
  CHECK_THROWS_AS(lcd::extend_column_hull_drop_from_vector(code({"1111", "1100"}), BitVector::from_string("1111")),
                  lcd::PreconditionError);

  const auto out = lcd::extend_column_hull_drop(code({"11000", "00111"}), BitVector::from_string("10"));
  CHECK(out.code.generator() == BitMatrix::from_strings({"111000", "000111"}));
  CHECK(oracle::is_lcd(out.code));

  std::mt19937_64 rng(29);
  int runs = 0;
  for (int t = 0; t < 800; ++t) {
    const std::size_t n = 4 + rng() % 10;
    const std::size_t k = 1 + rng() % (n - 1);
    const LinearCode c = oracle::random_code(rng, n, k);
    const std::size_t s = oracle::hull_dimension(c);
    if (s == 0) continue;
    const BitVector y = BitVector::from_word(k, rng() & ((oracle::Word{1} << k) - 1));
    if (c.generator().gram().left_kernel().apply(y).is_zero()) continue;
    CHECK(oracle::hull_dimension(lcd::extend_column_hull_drop(c, y).code) == s - 1);
    ++runs;
  }
  CHECK(runs > 100);
}

TEST_CASE("two-coordinate extensions with a free column") {
  auto out = lcd::extend_two_multi(LinearCode::repetition(3));
  REQUIRE(out.size() == 1);
  CHECK(out[0].code == LinearCode::repetition(5));
  out = lcd::extend_two_multi(code({"1"}));
  REQUIRE(out.size() == 1);
  CHECK(out[0].code == LinearCode::repetition(3));
  CHECK_THROWS_AS(lcd::extend_two_multi(LinearCode::full_space(2)), lcd::PreconditionError);

  std::mt19937_64 rng(30);
  int runs = 0;
  for (int t = 0; t < 400 && runs < 60; ++t) {
    const std::size_t n = 5 + rng() % 9;
    const std::size_t k = 1 + 2 * (rng() % 3);
    if (k + 1 >= n) continue;
    const LinearCode c = oracle::random_lcd_code(rng, n, k);
    const std::size_t d = oracle::min_distance(c);
    if (d % 2 == 0) continue;
    const auto outs = lcd::extend_two_multi(c);
    CHECK(outs.size() == (std::size_t{1} << (k - 1)));
    std::set<std::set<oracle::Word>> distinct;
    for (const auto& o : outs) {
      CHECK(oracle::is_lcd(o.code));
      CHECK(oracle::min_distance(o.code) >= d + 1);
      distinct.insert(oracle::word_set(o.code));
    }
    CHECK(distinct.size() == outs.size());
    ++runs;
  }
  CHECK(runs > 20);
}
