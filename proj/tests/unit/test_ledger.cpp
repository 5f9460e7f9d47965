#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>

#include "lcd/bounds.hpp"
#include "lcd/errors.hpp"
#include "lcd/io.hpp"
#include "lcd/ledger.hpp"
#include "oracle.hpp"

#ifndef LCDWB_DATA_DIR
#error "LCDWB_DATA_DIR must point at the data directory"
#endif

namespace fs = std::filesystem;

namespace {

const fs::path kData = LCDWB_DATA_DIR;

std::vector<lcd::ConstructionRecord> records(const std::string& text) {
  std::istringstream in(text);
  return lcd::parse_ledger(in);
}

std::size_t ledger_error_line(const std::string& text) {
  try {
    records(text);
  } catch (const lcd::ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("ledger parsing") {
  const auto r = records(
      "{\"id\":\"a\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"rows\":[\"111000\",\"000111\"]}},"
      "\"expect\":[7,2,4],\"status\":\"BUILTIN\"}\n");
  REQUIRE(r.size() == 1);
  CHECK(r[0].expect == std::array<std::size_t, 3>{7, 2, 4});

  const std::string good =
      "{\"id\":\"a\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"rows\":[\"1\"]}},\"expect\":[1,1,1],"
      "\"status\":\"BUILTIN\"}\n";
  CHECK(ledger_error_line(good + "{bad json\n") == 2);
  CHECK(ledger_error_line(good + good) == 2);
  CHECK(ledger_error_line("\n" +
                          std::string("{\"id\":\"b\",\"op\":\"frobnicate\",\"inputs\":{\"code\":{}},"
                                      "\"expect\":[1,1,1],\"status\":\"BUILTIN\"}\n")) == 2);
  CHECK(ledger_error_line("{\"id\":\"c\",\"op\":\"extend_even\",\"inputs\":{\"code\":{}},\"expect\":[1,1],"
                          "\"status\":\"BUILTIN\"}\n") == 1);
  CHECK(ledger_error_line("{\"id\":\"c\",\"op\":\"extend_even\",\"inputs\":{\"code\":{}},\"expect\":[1,1,1],"
                          "\"status\":\"MAYBE\"}\n") == 1);
  const auto ops = lcd::registered_ops();
  CHECK(std::set<std::string>(ops.begin(), ops.end()).count("expand") == 1);
}

TEST_CASE("shipped ledger: built-in rows pass, seed rows skip") {
  lcd::LedgerRunner run(lcd::load_ledger(kData / "ledger.jsonl"), kData);
  const auto results = run.run_all();
  REQUIRE(results.size() == run.records().size());
  std::size_t builtin = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& rec = run.records()[i];
    const auto& res = results[i];
    CAPTURE(lcd::format_row(rec, res));
    if (rec.status == "BUILTIN") {
      ++builtin;
      CHECK(res.verdict == lcd::Verdict::pass);
      REQUIRE(res.output);
      // Independent re-check of the emitted code.
      CHECK(res.output->length() == rec.expect[0]);
      CHECK(res.output->dimension() == rec.expect[1]);
      CHECK(oracle::is_lcd(*res.output));
      CHECK(oracle::min_distance(*res.output) >= rec.expect[2]);
    } else {
      CHECK(res.verdict == lcd::Verdict::skipped_missing_seed);
    }
  }
  CHECK(builtin >= 15);
  const auto s = lcd::summarize(results);
  CHECK(s.fail == 0);
  CHECK(lcd::ledger_exit_code(s) == 0);
}

TEST_CASE("ledger replay is deterministic") {
  auto first = lcd::LedgerRunner(lcd::load_ledger(kData / "ledger.jsonl"), kData).run_all();
  auto second = lcd::LedgerRunner(lcd::load_ledger(kData / "ledger.jsonl"), kData).run_all();
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].verdict == second[i].verdict);
    if (first[i].output) CHECK(lcd::format_gen1(*first[i].output) == lcd::format_gen1(*second[i].output));
  }
  // Requesting rows out of order gives the same outputs.
  lcd::LedgerRunner reversed(lcd::load_ledger(kData / "ledger.jsonl"), kData);
  for (auto it = first.rbegin(); it != first.rend(); ++it) {
    const auto& r = reversed.run(it->id);
    if (it->output) CHECK(lcd::format_gen1(*r.output) == lcd::format_gen1(*it->output));
  }
}

TEST_CASE("ledger seeds, chains and failures") {
  const auto dir = fs::temp_directory_path() / "lcdwb_ledger_test";
  fs::create_directories(dir / "seeds");
  lcd::write_text(dir / "seeds" / "c.gen1", "6 2\n111000\n000111\n");
  const auto recs = records(
      "{\"id\":\"s\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"file\":\"seeds/c.gen1\"},\"params\":[6,2,3]},"
      "\"expect\":[7,2,4],\"status\":\"EXTERNAL\"}\n"
      "{\"id\":\"m\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"file\":\"seeds/none.gen1\"}},"
      "\"expect\":[7,2,4],\"status\":\"EXTERNAL\"}\n"
      "{\"id\":\"down\",\"op\":\"puncture_even_lcd\",\"inputs\":{\"code\":{\"row\":\"m\"}},\"aux\":{\"coordinate\":1},"
      "\"expect\":[6,2,3],\"status\":\"EXTERNAL\"}\n"
      "{\"id\":\"wrong\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"rows\":[\"111000\",\"000111\"]}},"
      "\"expect\":[7,2,5],\"status\":\"BUILTIN\"}\n"
      "{\"id\":\"pre\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"rows\":[\"110\",\"011\"]}},"
      "\"expect\":[4,2,3],\"status\":\"BUILTIN\"}\n"
      "{\"id\":\"shape\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"file\":\"seeds/c.gen1\"},\"params\":[7,2,3]},"
      "\"expect\":[8,2,4],\"status\":\"EXTERNAL\"}\n");
  lcd::LedgerRunner run(recs, dir);
  CHECK(run.run("s").verdict == lcd::Verdict::pass);
  CHECK(run.run("m").verdict == lcd::Verdict::skipped_missing_seed);
  CHECK(run.run("down").verdict == lcd::Verdict::skipped_missing_seed);
  CHECK(run.run("wrong").verdict == lcd::Verdict::fail);
  CHECK(run.run("pre").verdict == lcd::Verdict::fail);
  CHECK(run.run("shape").verdict == lcd::Verdict::fail);
  CHECK(lcd::ledger_exit_code(lcd::summarize(run.run_all())) == 1);

  lcd::LedgerRunner skipped_only(records(
                                     "{\"id\":\"m\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"file\":\"x.gen1\"}},"
                                     "\"expect\":[7,2,4],\"status\":\"EXTERNAL\"}\n"),
                                 dir);
  CHECK(lcd::ledger_exit_code(lcd::summarize(skipped_only.run_all())) == 2);

  lcd::LedgerRunner cycle(records("{\"id\":\"a\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"row\":\"b\"}},"
                                  "\"expect\":[1,1,1],\"status\":\"BUILTIN\"}\n"
                                  "{\"id\":\"b\",\"op\":\"extend_even\",\"inputs\":{\"code\":{\"row\":\"a\"}},"
                                  "\"expect\":[1,1,1],\"status\":\"BUILTIN\"}\n"),
                          dir);
  CHECK(cycle.run("a").verdict == lcd::Verdict::fail);
  fs::remove_all(dir);
}

TEST_CASE("shipped bounds are consistent") {
  const auto b = lcd::load_bounds(kData / "bounds.json");
  CHECK(b.entries.size() > 300);
  CHECK(lcd::check_bounds(b).empty());
  const auto& e = b.entries.at({41, 6});
  CHECK(e.lower == 19);
  CHECK(e.exact);
  const auto& i = b.entries.at({50, 25});
  CHECK(i.lower == 10);
  CHECK(i.upper == 12);
}

TEST_CASE("bounds checks catch planted violations") {
  auto table = lcd::bounds_from_table(lcd::dlcd_table(8, 2));
  CHECK(lcd::check_bounds(table).empty());
  auto flipped = table;
  flipped.entries[{5, 2}] = {4, 3, false};
  CHECK_FALSE(lcd::check_bounds(flipped).empty());
  auto jump = table;
  jump.entries[{7, 3}] = {6, 6, true};
  CHECK_FALSE(lcd::check_bounds(jump).empty());
  auto bad_exact = table;
  bad_exact.entries[{4, 2}] = {1, 2, true};
  CHECK_FALSE(lcd::check_bounds(bad_exact).empty());
  CHECK_THROWS_AS(lcd::parse_bounds("{\"entries\":[{\"n\":1}]}"), lcd::ParseError);
}
