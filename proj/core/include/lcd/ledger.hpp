#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcd/linear_code.hpp"

namespace lcd {

/// One construction to replay. Ledger files hold one JSON object per line:
///   {"id", "op", "inputs": {"code": <source>, "params"?: [n,k,d]}, "aux",
///    "expect": [n,k,d], "status": "BUILTIN" | "EXTERNAL", "note"?, ...}
/// A code source is one of
///   {"rows": ["0101", ...]}                   inline binary generator
///   {"ext": {"m": 2, "rows": [[1,2], ...]}}   inline extension-field generator
///   {"file": "seeds/x.gen1"}                  GEN1 or EXTGEN1, relative to the ledger
///   {"row": "B01"}                            output of another record
///   {"search": {"n", "k", "d", "seed"}}       LCD hill-climb result
/// Coordinates in aux are 1-based.
struct ConstructionRecord {
  std::string id;
  std::string group;
  std::string op;
  nlohmann::json inputs;
  nlohmann::json aux;
  std::array<std::size_t, 3> expect{};
  std::string status;
  std::string note;
  std::size_t line = 0;
};

/// Names accepted in the "op" field.
std::vector<std::string> registered_ops();

/// Throws ParseError (with the line) on malformed JSON, a missing field, an
/// unknown op or a duplicate id.
std::vector<ConstructionRecord> parse_ledger(std::istream& in);
std::vector<ConstructionRecord> load_ledger(const std::filesystem::path& path);

enum class Verdict { pass, fail, skipped_missing_seed, unverified };
std::string to_string(Verdict v);

struct RowResult {
  std::string id;
  std::string op;
  Verdict verdict = Verdict::fail;
  std::optional<LinearCode> output;
  std::optional<std::size_t> distance;
  std::string detail;
};

/// Replays records with memoized dependencies. Results are independent of the
/// order rows are requested in.
class LedgerRunner {
 public:
  LedgerRunner(std::vector<ConstructionRecord> records, std::filesystem::path base_dir);

  const RowResult& run(const std::string& id);
  /// Results in record order.
  std::vector<RowResult> run_all();
  const std::vector<ConstructionRecord>& records() const noexcept { return records_; }

 private:
  RowResult evaluate(const ConstructionRecord& r);

  std::vector<ConstructionRecord> records_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, RowResult> done_;
  std::vector<std::string> active_;
  std::filesystem::path base_;
};

struct LedgerSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t unverified = 0;
};
LedgerSummary summarize(const std::vector<RowResult>& results);
/// 0 when nothing failed and something passed, 1 on any failure, 2 when
/// every row was skipped or unverified.
int ledger_exit_code(const LedgerSummary& s);
/// "<id> <op> [n,k,d] VERDICT detail".
std::string format_row(const ConstructionRecord& r, const RowResult& res);

}  // namespace lcd
