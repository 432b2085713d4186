#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "klv/closure.hpp"
#include "klv/errors.hpp"
#include "klv/hecke.hpp"
#include "klv/io.hpp"
#include "klv/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string clans;
  int diagonal = 0;
  std::string format = "text";
  std::string out;
  int max_size = 0;
  bool quiet = false;
  bool timing = false;
  bool with_mu = false;
};

void add_common_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--clans", cfg.clans,
                  "Clan model: p,q (e.g. --clans 2,1)");
  cmd->add_option("--diagonal", cfg.diagonal,
                  "Diagonal model: rank n (orbits are permutations)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  cmd->add_option("--out", cfg.out, "Write output to a file");
  cmd->add_option("--max-size", cfg.max_size,
                  "Override the size cap (clans: p+q, default 7; diagonal: "
                  "n, default 6)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--quiet", cfg.quiet, "Suppress the summary line");
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

klv::OrbitModel make_model(const Config& cfg) {
  const bool have_clans = !cfg.clans.empty();
  const bool have_diag = cfg.diagonal > 0;
  if (have_clans == have_diag)
    throw UsageError("select exactly one model: --clans p,q or --diagonal n");
  if (have_diag) {
    const int cap = cfg.max_size > 0 ? cfg.max_size : klv::kDefaultDiagonalCap;
    return klv::make_diagonal_model(cfg.diagonal, cap);
  }
  int p = 0, q = 0;
  char comma = 0;
  std::istringstream is(cfg.clans);
  if (!(is >> p >> comma >> q) || comma != ',' || !is.eof() || p < 1 || q < 1)
    throw UsageError("--clans expects p,q with p, q >= 1");
  const int cap = cfg.max_size > 0 ? cfg.max_size : klv::kDefaultClanCap;
  return klv::make_clan_model(p, q, cap);
}

/// Writes to cfg.out when set (with a summary line on stdout unless
/// --quiet), otherwise prints the payload itself.
void emit(const Config& cfg, const std::string& payload,
          const std::string& summary) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + cfg.out);
  f << payload;
  if (!cfg.quiet) std::cout << summary << " -> " << cfg.out << "\n";
}

int cmd_orbits(const Config& cfg) {
  const klv::OrbitModel model = make_model(cfg);
  std::string payload;
  if (cfg.format == "json")
    payload = klv::orbits_to_json(model);
  else if (cfg.format == "csv")
    payload = klv::orbits_to_csv(model);
  else if (cfg.format == "text")
    payload = klv::orbits_to_text(model);
  else
    throw UsageError("orbits supports --format json|csv|text");
  std::ostringstream sum;
  sum << model.name() << ": " << model.size() << " orbits";
  emit(cfg, payload, sum.str());
  return kExitOk;
}

int cmd_closure(const Config& cfg) {
  const klv::OrbitModel model = make_model(cfg);
  const klv::ClosurePoset poset = klv::build_poset(model);
  std::string payload;
  if (cfg.format == "json")
    payload = klv::poset_to_json(model, poset);
  else if (cfg.format == "csv")
    payload = klv::poset_to_csv(poset);
  else if (cfg.format == "dot")
    payload = klv::poset_to_dot(poset);
  else
    payload = klv::poset_to_text(poset);
  std::ostringstream sum;
  sum << model.name() << ": " << poset.size() << " orbits, "
      << poset.covers().size() << " covers";
  emit(cfg, payload, sum.str());
  return kExitOk;
}

int cmd_table(const Config& cfg) {
  const klv::OrbitModel model = make_model(cfg);
  const klv::KLVResult r = klv::klv_table(model);
  std::string payload;
  if (cfg.format == "json")
    payload = klv::table_to_json(r, cfg.with_mu);
  else if (cfg.format == "csv")
    payload = klv::table_to_csv(r, cfg.with_mu);
  else if (cfg.format == "text")
    payload = klv::table_to_text(r, cfg.with_mu);
  else
    throw UsageError("table supports --format json|csv|text");
  long long entries = 0;
  for (int hi = 0; hi < r.table.size(); ++hi)
    entries += static_cast<long long>(r.table.column(hi).size());
  std::ostringstream sum;
  sum << model.name() << ": " << entries << " table entries";
  emit(cfg, payload, sum.str());
  return kExitOk;
}

int cmd_verify(const Config& cfg) {
  const klv::OrbitModel model = make_model(cfg);
  const klv::KLVResult r = klv::klv_table(model);
  const klv::ClosurePoset poset = klv::build_poset(model);

  std::vector<klv::Report> reports;
  reports.push_back(klv::check_semicontinuity(r.table, poset));
  reports.push_back(klv::check_paper_claims(r.table, poset, model));
  if (model.kind() == klv::ModelKind::Diagonal && model.size() <= 24)
    reports.push_back(klv::compare_engines(model.rank() + 1));

  std::string payload;
  if (cfg.format == "json") {
    std::string body;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string one = klv::report_to_json(reports[i], cfg.timing);
      if (!one.empty() && one.back() == '\n') one.pop_back();
      body += (i == 0 ? "" : ",\n") + one;
    }
    payload = "[\n" + body + "\n]\n";
  } else if (cfg.format == "text") {
    for (const klv::Report& rep : reports) payload += klv::report_summary(rep);
  } else {
    throw UsageError("verify supports --format json|text");
  }

  bool ok = true;
  long long violations = 0;
  for (const klv::Report& rep : reports) {
    ok = ok && rep.ok();
    violations += static_cast<long long>(rep.violations.size());
  }
  std::ostringstream sum;
  sum << model.name() << ": " << reports.size() << " checks, " << violations
      << " violation(s)";
  emit(cfg, payload, sum.str());
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-orbit closures and Kazhdan-Lusztig-Vogan polynomials for "
               "symmetric pairs"};
  app.set_version_flag("--version", std::string(KLV_VERSION));
  app.require_subcommand(1);

  Config cfg;
  CLI::App* orbits =
      app.add_subcommand("orbits", "List the orbits of a model");
  add_common_options(orbits, cfg);
  CLI::App* closure =
      app.add_subcommand("closure", "Export the closure order (Hasse covers)");
  add_common_options(closure, cfg);
  CLI::App* table =
      app.add_subcommand("table", "Compute the polynomial table");
  add_common_options(table, cfg);
  table->add_flag("--mu", cfg.with_mu, "Include mu coefficients");
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the semicontinuity and supporting checks");
  add_common_options(verify, cfg);
  verify->add_flag("--timing", cfg.timing,
                   "Include elapsed_ms in JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (orbits->parsed()) return cmd_orbits(cfg);
    if (closure->parsed()) return cmd_closure(cfg);
    if (table->parsed()) return cmd_table(cfg);
    return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const klv::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const klv::EngineError& e) {
    std::cerr << "engine error: " << e.what() << "\n"
              << "detail: " << e.detail() << "\n";
    return kExitViolation;
  }
}
