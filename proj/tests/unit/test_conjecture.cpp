#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "lcd/conjecture.hpp"
#include "lcd/enumeration.hpp"
#include "lcd/errors.hpp"
#include "lcd/normal_form.hpp"
#include "oracle.hpp"

using lcd::BitMatrix;
using lcd::BitVector;
using lcd::CoordinateSet;
using lcd::LinearCode;

namespace {

LinearCode code(std::initializer_list<std::string_view> rows) { return LinearCode::from_strings(rows); }

std::vector<std::size_t> vs(const std::vector<lcd::PunctureWitness>& ws) {
  std::vector<std::size_t> out;
  for (const auto& w : ws) out.push_back(w.v);
  return out;
}

// Independent re-verification of a certificate against the input code.
void check_certificate(const LinearCode& c, const lcd::ConjectureCertificate& cert) {
  const std::size_t d = oracle::min_distance(c);
  CHECK(cert.output.length() + 1 == c.length());
  CHECK(cert.output.dimension() == c.dimension());
  CHECK(oracle::rank(oracle::rows_of(cert.output)) == c.dimension());
  CHECK(oracle::is_lcd(cert.output));
  CHECK(oracle::min_distance(cert.output) + 1 >= d);
}

bool is_lcd_oe(const LinearCode& c) {
  return oracle::is_lcd(c) && lcd::contains_all_one(c);
}

// Random LCD_oe code of length n and dimension k with d >= 3, or nothing.
std::optional<LinearCode> random_lcd_oe(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    lcd::BitMatrix g(k, n);
    for (std::size_t j = 0; j < n; ++j) g.set(0, j);
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) g.set(i, j, (rng() & 1U) != 0);
    if (!g.full_row_rank()) continue;
    LinearCode c(g);
    if (is_lcd_oe(c) && oracle::min_distance(c) >= 3) return c;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("good puncture pairs examples") {
  const LinearCode c = code({"111000", "000111"});
  CHECK(vs(lcd::good_puncture_pairs(c, 0)) == std::vector<std::size_t>{1, 2});
  CHECK(vs(lcd::good_puncture_pairs(c, 3)) == std::vector<std::size_t>{4, 5});
  const auto ws = lcd::good_puncture_pairs(c, 0);
  CHECK(ws[0].punctured == code({"1000", "0111"}));
  CHECK(ws[0].punctured.generator().gram() == BitMatrix::identity(2));
  CHECK(ws[0].lcd);
  CHECK(ws[0].dmin == 1);

  CHECK_THROWS_AS(lcd::good_puncture_pairs(LinearCode::full_space(2), 0), lcd::PreconditionError);
  CHECK_THROWS_AS(lcd::good_puncture_pairs(code({"1100", "0110"}), 0), lcd::PreconditionError);
}

TEST_CASE("weight d-2 span of a punctured code") {
  const auto ws = lcd::good_puncture_pairs(code({"111000", "000111"}), 0);
  CHECK(lcd::min_weight_span_punctured(ws[0], 3) == code({"1000"}));
  CHECK(lcd::min_weight_span_punctured(ws[1], 3) == code({"1000"}));
  // Distance above d - 2: nothing of that weight.
  lcd::PunctureWitness w;
  w.lcd = true;
  w.punctured = code({"1110", "0111"});
  CHECK(lcd::min_weight_span_punctured(w, 3).dimension() == 0);
}

TEST_CASE("column append on an LCD_eo code") {
  const LinearCode c = code({"1100", "0110"});
  const auto out = lcd::column_append_even(c, BitVector::from_string("10"));
  CHECK(out.generator() == BitMatrix::from_strings({"11001", "01100"}));
  CHECK(oracle::is_lcd(out));
  CHECK(oracle::is_lcd(lcd::column_append_even(c, BitVector::from_string("00"))));
  CHECK(oracle::is_lcd(lcd::column_append_even(c, BitVector::from_string("11"))));
  CHECK(oracle::is_lcd(lcd::column_append_even(c, BitVector::from_string("01"))));
  CHECK_THROWS_AS(lcd::column_append_even(code({"100", "010"}), BitVector::from_string("10")),
                  lcd::PreconditionError);
}

TEST_CASE("column append on LCD_eo codes is LCD for every column") {
  std::mt19937_64 rng(31);
  int runs = 0;
  for (int t = 0; t < 4000 && runs < 40; ++t) {
    const std::size_t n = 4 + rng() % 12;
    const std::size_t k = 2 * (1 + rng() % 4);
    if (k >= n) continue;
    const LinearCode c = oracle::random_code(rng, n, k);
    if (lcd::parity_class(c).label() != "LCD_eo") continue;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << k); ++y) {
      const auto out = lcd::column_append_even(c, BitVector::from_word(k, y));
      CHECK(oracle::is_lcd(out));
    }
    ++runs;
  }
  CHECK(runs == 40);
}

TEST_CASE("column append on an odd-like code with an orthogonal last row") {
  auto out = lcd::column_append_odd(code({"1000", "0111"}), BitVector::from_string("1"));
  CHECK(out.generator() == BitMatrix::from_strings({"10001", "01111"}));
  out = lcd::column_append_odd(code({"1000", "0111"}), BitVector::from_string("0"));
  CHECK(out.generator() == BitMatrix::from_strings({"10000", "01110"}));
  out = lcd::column_append_odd(code({"100", "010", "001"}), BitVector::from_string("11"));
  CHECK(out.generator() == BitMatrix::from_strings({"1001", "0101", "0010"}));
  CHECK(oracle::is_lcd(out));
  CHECK_THROWS_AS(lcd::column_append_odd(code({"110", "011"}), BitVector::from_string("1")), lcd::PreconditionError);

  std::mt19937_64 rng(32);
  int runs = 0;
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 3 + rng() % 10;
    const std::size_t k = 1 + rng() % (n - 1);
    const LinearCode c = oracle::random_lcd_code(rng, n, k);
    if (lcd::is_even_like(c)) continue;
    // Put an odd codeword last with the rest orthogonal to it.
    const BitMatrix on = lcd::orthonormal_basis(c);
    const LinearCode staged(on);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << (k - 1)) && y < 64; ++y)
      CHECK(oracle::is_lcd(lcd::column_append_odd(staged, BitVector::from_word(k - 1, y))));
    ++runs;
  }
  CHECK(runs > 100);
}

TEST_CASE("extension after puncturing") {
  const auto ws = lcd::good_puncture_pairs(code({"111000", "000111"}), 0);
  const LinearCode span = code({"1000"});
  const auto out = lcd::extend_after_puncture(ws[0], span);
  CHECK(out == code({"10001", "01111"}));
  CHECK(oracle::is_lcd(out));
  CHECK(oracle::min_distance(out) == 2);

  const auto free = lcd::extend_after_puncture(ws[0], LinearCode::zero(4));
  CHECK(oracle::is_lcd(free));
  CHECK(free.length() == 5);

  CHECK_THROWS_AS(lcd::extend_after_puncture(ws[0], code({"1111"})), lcd::PreconditionError);
}

TEST_CASE("step-down certificate examples") {
  const auto cert = lcd::certify_step_down(code({"111000", "000111"}));
  CHECK(cert.route == lcd::StepDownRoute::extension);
  CHECK(cert.output == code({"10001", "01111"}));
  CHECK(cert.output_distance == 2);
  CHECK(cert.u == 0);
  CHECK(cert.v == 1);
  check_certificate(code({"111000", "000111"}), cert);

  CHECK_THROWS_AS(lcd::certify_step_down(LinearCode::repetition(3)), lcd::PreconditionError);
  CHECK_THROWS_AS(lcd::certify_step_down(code({"1100", "0110"})), lcd::PreconditionError);
  CHECK_THROWS_AS(lcd::certify_step_down(code({"1111111", "1110000"})), lcd::PreconditionError);
}

TEST_CASE("certificate trace is one JSON object per line") {
  const auto cert = lcd::certify_step_down(code({"111000", "000111"}));
  std::istringstream in(lcd::to_json_lines(cert));
  std::string line;
  std::vector<nlohmann::json> lines;
  while (std::getline(in, line)) lines.push_back(nlohmann::json::parse(line));
  REQUIRE(lines.size() == cert.trace.size() + 1);
  CHECK(lines[0]["route"] == "extension");
  CHECK(lines[0]["output"] == nlohmann::json::array({5, 2, 2}));
  CHECK(lines[0]["generator"] == nlohmann::json::array({"10001", "01111"}));
  CHECK(lines.back()["step"] == "verified");
}

TEST_CASE("step-down over every small LCD_oe code") {
  std::size_t total = 0;
  for (std::size_t n = 4; n <= 10; ++n) {
    for (const auto& c : lcd::lcd_oe_corpus(n)) {
      REQUIRE(is_lcd_oe(c));
      const std::size_t d = oracle::min_distance(c);
      REQUIRE(d >= 3);
      for (std::size_t u = 0; u < n; ++u) CHECK(lcd::good_puncture_pairs(c, u).size() + 1 >= d);
      check_certificate(c, lcd::certify_step_down(c));
      ++total;
    }
  }
  CHECK(total > 50);
}

TEST_CASE("puncture map facts on small LCD_oe codes") {
  for (std::size_t n = 6; n <= 9; ++n) {
    for (const auto& c : lcd::lcd_oe_corpus(n)) {
      const std::size_t d = oracle::min_distance(c);
      const auto words = oracle::all_words(oracle::rows_of(c));
      for (std::size_t u = 0; u < n; ++u) {
        for (const auto& w : lcd::good_puncture_pairs(c, u)) {
          const auto span = lcd::min_weight_span_punctured(w, d);
          const auto idx = std::vector<std::size_t>{std::min(w.u, w.v), std::max(w.u, w.v)};
          for (auto x : words) {
            const BitVector full = BitVector::from_word(n, x);
            const BitVector p = full.erase(idx);
            // The only preimage of the all-one vector is the all-one vector.
            if (p == BitVector::ones(n - 2)) CHECK(full == BitVector::ones(n));
            if (full.get(w.u) != full.get(w.v)) CHECK_FALSE(span.contains(p));
          }
        }
      }
    }
  }
}

TEST_CASE("step-down on random longer LCD_oe codes") {
  std::mt19937_64 rng(33);
  int runs = 0;
  for (int t = 0; t < 400 && runs < 80; ++t) {
    const std::size_t n = 10 + rng() % 11;
    const std::size_t k = 2 + rng() % 6;
    const auto c = random_lcd_oe(rng, n, k);
    if (!c) continue;
    check_certificate(*c, lcd::certify_step_down(*c));
    ++runs;
  }
  CHECK(runs >= 40);
}
