// lcdwb: command-line front end for the LCD code workbench.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>

#include "lcd/bounds.hpp"
#include "lcd/conjecture.hpp"
#include "lcd/enumeration.hpp"
#include "lcd/errors.hpp"
#include "lcd/field_expansion.hpp"
#include "lcd/io.hpp"
#include "lcd/ledger.hpp"
#include "lcd/search.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 3;

struct Globals {
  std::uint64_t seed = lcd::kDefaultSeed;
  std::string engine = "auto";
  long budget_ms = 0;
  std::string format;
};

std::optional<lcd::CodeFormat> format_of(const Globals& g) {
  if (g.format == "gen1") return lcd::CodeFormat::gen1;
  if (g.format == "extgen1") return lcd::CodeFormat::extgen1;
  return std::nullopt;
}

lcd::DistanceEngine engine_of(const Globals& g) {
  if (g.engine == "full") return lcd::DistanceEngine::full_enumeration;
  if (g.engine == "lowweight") return lcd::DistanceEngine::low_weight;
  return lcd::DistanceEngine::automatic;
}

int analyze(const Globals& g, const std::string& path) {
  const auto code = lcd::read_code(path, format_of(g));
  if (const auto* c = std::get_if<lcd::LinearCode>(&code)) {
    const auto pc = lcd::parity_class(*c);
    std::string d = "-";
    if (c->dimension() > 0) d = std::to_string(lcd::min_distance(*c, engine_of(g)));
    std::cout << c->length() << " " << c->dimension() << " " << d << " hull=" << pc.hull_dim << " " << pc.label()
              << "\n";
    return kExitPass;
  }
  const auto& e = std::get<lcd::ExtFieldCode>(code);
  const std::string d = e.dimension() > 0 ? std::to_string(e.min_distance()) : "-";
  std::cout << e.length() << " " << e.dimension() << " " << d << " hull=" << e.hull_dimension() << " "
            << (e.is_lcd() ? "LCD" : "NotLCD") << " GF(2^" << e.field().degree() << ")\n";
  return kExitPass;
}

int expand(const Globals& g, const std::string& path, const std::string& out) {
  const auto code = lcd::read_code(path, format_of(g).value_or(lcd::CodeFormat::extgen1));
  const auto* e = std::get_if<lcd::ExtFieldCode>(&code);
  if (!e) throw lcd::ParseError(1, "expand needs an EXTGEN1 file");
  const auto basis = lcd::find_self_dual_basis(e->field());
  const auto b = lcd::expand_code(*e, basis);
  const std::string text = lcd::format_gen1(b);
  if (out.empty())
    std::cout << text;
  else
    lcd::write_text(out, text);
  std::cerr << "expanded to [" << b.length() << "," << b.dimension() << "] hull=" << lcd::hull_dimension(b) << "\n";
  return kExitPass;
}

int certify(const Globals& g, const std::string& path, std::string prefix) {
  const auto code = lcd::read_code(path, format_of(g).value_or(lcd::CodeFormat::gen1));
  const auto* c = std::get_if<lcd::LinearCode>(&code);
  if (!c) throw lcd::ParseError(1, "certify needs a GEN1 file");
  const auto cert = lcd::certify_step_down(*c);
  if (prefix.empty()) prefix = (fs::path(path).parent_path() / fs::path(path).stem()).string() + ".cert";
  lcd::write_text(prefix + ".jsonl", lcd::to_json_lines(cert));
  lcd::write_text(prefix + ".gen1", lcd::format_gen1(cert.output));
  std::cout << "[" << cert.input_length << "," << cert.dimension << "," << cert.input_distance << "] -> ["
            << cert.output.length() << "," << cert.output.dimension() << "," << cert.output_distance << "] via "
            << lcd::to_string(cert.route) << "; wrote " << prefix << ".jsonl and " << prefix << ".gen1\n";
  return kExitPass;
}

int dlcd_table(std::size_t n_max, const std::string& json_out) {
  const auto table = lcd::dlcd_table(n_max);
  std::cout << "n\\k";
  for (std::size_t k = 1; k <= n_max; ++k) std::cout << " " << k;
  std::cout << "\n";
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::cout << n;
    for (std::size_t k = 1; k <= n; ++k) std::cout << " " << table.value(n, k);
    std::cout << "\n";
  }
  if (!json_out.empty()) {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (std::size_t n = 1; n <= n_max; ++n)
      for (std::size_t k = 1; k <= n; ++k)
        j["entries"].push_back({{"n", n}, {"k", k}, {"lower", table.value(n, k)}, {"upper", table.value(n, k)},
                                {"status", "exact"}});
    lcd::write_text(json_out, j.dump(1) + "\n");
  }
  const auto bad = lcd::check_dlcd_table(table);
  for (const auto& b : bad) std::cout << "violation: " << b << "\n";
  std::cout << (bad.empty() ? "consistent" : "INCONSISTENT") << "\n";
  return bad.empty() ? kExitPass : kExitFail;
}

int search(const Globals& g, std::size_t n, std::size_t k, std::size_t d, const std::string& out) {
  lcd::SearchBudget budget;
  if (g.budget_ms > 0) budget.time_limit = std::chrono::milliseconds(g.budget_ms);
  const auto r = lcd::search_lcd(n, k, d, g.seed, budget);
  if (!r.code) {
    std::cout << "none" << (r.impossible ? " (above the Griesmer bound)" : "") << "; best d = " << r.best_distance
              << " after " << r.evaluations << " evaluations\n";
    return kExitPass;
  }
  const std::string text = lcd::format_gen1(*r.code);
  if (out.empty())
    std::cout << text;
  else
    lcd::write_text(out, text);
  return kExitPass;
}

int run_ledger(const std::string& path, const std::vector<std::string>& ids, const std::string& out_dir) {
  lcd::LedgerRunner runner(lcd::load_ledger(path), fs::path(path).parent_path());
  std::vector<lcd::RowResult> results;
  std::map<std::string, const lcd::ConstructionRecord*> by_id;
  for (const auto& r : runner.records()) by_id[r.id] = &r;
  std::vector<std::string> order = ids;
  if (order.empty())
    for (const auto& r : runner.records()) order.push_back(r.id);
  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (const auto& id : order) {
    if (!by_id.count(id)) throw lcd::PreconditionError("no ledger row '" + id + "'");
    const auto& res = runner.run(id);
    results.push_back(res);
    std::cout << lcd::format_row(*by_id[id], res) << "\n";
    if (!out_dir.empty() && res.output) lcd::write_text(fs::path(out_dir) / (id + ".gen1"), lcd::format_gen1(*res.output));
  }
  const auto s = lcd::summarize(results);
  std::cout << "pass " << s.pass << ", fail " << s.fail << ", skipped " << s.skipped << ", unverified " << s.unverified
            << "\n";
  return lcd::ledger_exit_code(s);
}

int check_bounds_file(const std::string& path) {
  const auto bad = lcd::check_bounds(lcd::load_bounds(path));
  for (const auto& b : bad) std::cout << "bounds violation: " << b << "\n";
  std::cout << "bounds " << (bad.empty() ? "consistent" : "INCONSISTENT") << "\n";
  return bad.empty() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary LCD code workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized operations")->capture_default_str();
  app.add_option("--engine", g.engine, "Minimum-distance engine")
      ->check(CLI::IsMember({"auto", "full", "lowweight"}))
      ->capture_default_str();
  app.add_option("--budget-ms", g.budget_ms, "Wall-clock budget for searches (0 = none)");
  app.add_option("--format", g.format, "Input format (default: detect)")->check(CLI::IsMember({"gen1", "extgen1"}));

  std::string path, out, prefix, json_out, bounds;
  std::size_t n = 0, k = 0, d = 0, n_max = 0;
  std::vector<std::string> ids;

  auto* a = app.add_subcommand("analyze", "Print n k d hull=s and the parity class");
  a->add_option("file", path, "GEN1 or EXTGEN1 file")->required();

  auto* c = app.add_subcommand("construct", "Replay selected ledger rows");
  c->add_option("ledger", path, "Ledger file (JSON lines)")->required();
  c->add_option("ids", ids, "Row ids (default: all)");
  c->add_option("--out", out, "Directory for output GEN1 files");

  auto* e = app.add_subcommand("expand", "Binary image of an extension-field code");
  e->add_option("file", path, "EXTGEN1 file")->required();
  e->add_option("--out", out, "Output GEN1 file (default: stdout)");

  auto* ce = app.add_subcommand("certify", "Step-down certificate for an LCD_oe code");
  ce->add_option("file", path, "GEN1 file")->required();
  ce->add_option("--out-prefix", prefix, "Writes <prefix>.jsonl and <prefix>.gen1");

  auto* t = app.add_subcommand("dlcd-table", "Exact d_LCD(n,k) for small n");
  t->add_option("n_max", n_max, "Largest length")->required()->check(CLI::Range(1, 64));
  t->add_option("--json", json_out, "Also write the table as a bounds file");

  auto* s = app.add_subcommand("search", "Hill-climb for an LCD code with d >= target");
  s->add_option("n", n)->required();
  s->add_option("k", k)->required();
  s->add_option("d", d)->required();
  s->add_option("--out", out, "Output GEN1 file (default: stdout)");

  auto* v = app.add_subcommand("verify-ledger", "Replay every ledger row and check the bounds file");
  v->add_option("ledger", path, "Ledger file (JSON lines)")->required();
  v->add_option("--bounds", bounds, "Bounds file to check as well");
  v->add_option("--out", out, "Directory for output GEN1 files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*a) return analyze(g, path);
    if (*c) return run_ledger(path, ids, out);
    if (*e) return expand(g, path, out);
    if (*ce) return certify(g, path, prefix);
    if (*t) return dlcd_table(n_max, json_out);
    if (*s) return search(g, n, k, d, out);
    if (*v) {
      int rc = run_ledger(path, {}, out);
      if (!bounds.empty() && check_bounds_file(bounds) != kExitPass) rc = kExitFail;
      return rc;
    }
  } catch (const lcd::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const lcd::PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  } catch (const lcd::BudgetExceeded& err) {
    std::cerr << "budget exceeded: " << err.what() << "\n";
    return kExitFail;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
