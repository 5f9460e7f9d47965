#include <doctest.h>

#include <random>

#include "lcd/bit_matrix.hpp"
#include "lcd/errors.hpp"
#include "oracle.hpp"

using lcd::BitMatrix;
using lcd::BitVector;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, (rng() & 1U) != 0);
  return m;
}

BitMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, n, n);
    if (m.rank() == n) return m;
  }
}

BitMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, bool alternating) {
  BitMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const bool b = (i == j && alternating) ? false : (rng() & 1U) != 0;
      s.set(i, j, b);
      s.set(j, i, b);
    }
  return s;
}

}  // namespace

TEST_CASE("bit vector basics") {
  const auto v = BitVector::from_string("1011");
  CHECK(v.size() == 4);
  CHECK(v.weight() == 3);
  CHECK(v.to_string() == "1011");
  CHECK(inner_product(v, BitVector::from_string("0011")) == false);
  CHECK(inner_product(v, BitVector::from_string("0010")) == true);
  CHECK(v.erase(std::vector<std::size_t>{0, 2}).to_string() == "01");
  CHECK(v.prepend(false).to_string() == "01011");
  CHECK(v.append(true).to_string() == "10111");
  CHECK_THROWS_AS(v ^ BitVector(5), lcd::PreconditionError);
}

TEST_CASE("padding bits stay clear") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
    BitVector a = BitVector::ones(n);
    BitVector b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, (rng() & 1U) != 0);
    CHECK(a.padding_clear());
    CHECK((a ^ b).padding_clear());
    CHECK(a.append(true).padding_clear());
    CHECK(a.prepend(true).padding_clear());
    CHECK(a.erase(std::vector<std::size_t>{0}).padding_clear());
    CHECK(a.concat(b).padding_clear());
  }
}

TEST_CASE("inner product is bilinear") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 150;
    BitVector u(n), v(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
      u.set(i, rng() & 1U);
      v.set(i, rng() & 1U);
      w.set(i, rng() & 1U);
    }
    CHECK(inner_product(u ^ v, w) == (inner_product(u, w) != inner_product(v, w)));
    CHECK(inner_product(u, w) == inner_product(w, u));
  }
}

TEST_CASE("rank examples") {
  CHECK(BitMatrix::identity(3).rank() == 3);
  CHECK(BitMatrix::from_strings({"1111", "1111", "1111", "1111"}).rank() == 1);
  CHECK(BitMatrix::from_strings({"01", "10"}).rank() == 2);
}

TEST_CASE("rank agrees with the word-level oracle and transposition") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 40);
    CHECK(m.rank() == oracle::rank(oracle::rows_of(m)));
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("rank is invariant under invertible left factors") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t r = 1 + rng() % 16;
    const auto m = random_matrix(rng, r, 1 + rng() % 64);
    const auto p = random_invertible(rng, r);
    CHECK((p * m).rank() == m.rank());
  }
}

TEST_CASE("gram examples") {
  CHECK(BitMatrix::identity(2).gram() == BitMatrix::identity(2));
  CHECK(BitMatrix::from_strings({"111"}).gram() == BitMatrix::from_strings({"1"}));
  CHECK(BitMatrix::from_strings({"111000", "000111"}).gram() == BitMatrix::identity(2));
}

TEST_CASE("solve examples") {
  auto x = lcd::solve(BitMatrix::identity(3), BitVector::from_string("101"));
  REQUIRE(x);
  CHECK(x->to_string() == "101");
  const auto m = BitMatrix::from_strings({"110", "011"});
  x = lcd::solve(m, BitVector::from_string("101"));
  REQUIRE(x);
  CHECK(x->to_string() == "11");
  CHECK_FALSE(lcd::solve(m, BitVector::from_string("100")));
}

TEST_CASE("solve reproduces its right-hand side") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_matrix(rng, 1 + rng() % 10, 1 + rng() % 30);
    BitVector a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) a.set(i, rng() & 1U);
    const BitVector b = m.combine(a);
    const auto x = lcd::solve(m, b);
    REQUIRE(x);
    CHECK(m.combine(*x) == b);
  }
}

TEST_CASE("kernel and left kernel") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(rng, 1 + rng() % 10, 1 + rng() % 20);
    const auto k = m.kernel();
    CHECK(k.rows() == m.cols() - m.rank());
    for (const auto& r : k.row_list()) CHECK(m.apply(r).is_zero());
    const auto lk = m.left_kernel();
    CHECK(lk.rows() == m.rows() - m.rank());
    for (const auto& r : lk.row_list()) CHECK(m.combine(r).is_zero());
  }
}

TEST_CASE("congruent normal form examples") {
  auto nf = lcd::congruent_normal_form(BitMatrix(2, 2));
  CHECK(nf.radical_dim == 2);
  CHECK(nf.normal.is_zero());

  nf = lcd::congruent_normal_form(BitMatrix::from_strings({"11", "11"}));
  CHECK(nf.radical_dim == 1);
  CHECK(nf.normal == BitMatrix::from_strings({"00", "01"}));

  nf = lcd::congruent_normal_form(BitMatrix::from_strings({"01", "10"}));
  CHECK(nf.radical_dim == 0);
  CHECK(nf.normal == BitMatrix::from_strings({"01", "10"}));
  CHECK(nf.alternating);

  CHECK_THROWS_AS(lcd::congruent_normal_form(BitMatrix::from_strings({"01", "00"})), lcd::PreconditionError);
}

TEST_CASE("congruent normal form holds bit-exactly on random symmetric matrices") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 14;
    const bool alt = (t % 3) == 0;
    const auto s = random_symmetric(rng, n, alt);
    const auto nf = lcd::congruent_normal_form(s);
    CHECK(nf.transform.rank() == n);
    CHECK(nf.transform * s * nf.transform.transpose() == nf.normal);
    CHECK(nf.radical_dim == n - s.rank());
    if (nf.radical_dim < n) CHECK(nf.alternating == s.has_zero_diagonal());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool want = false;
        if (i >= nf.radical_dim && j >= nf.radical_dim) {
          const std::size_t a = i - nf.radical_dim;
          const std::size_t b = j - nf.radical_dim;
          want = nf.alternating ? (a / 2 == b / 2 && a != b) : a == b;
        }
        CHECK(nf.normal.get(i, j) == want);
      }
  }
}
