// Command-line front end: expand, invariants, check, search, verify-table.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "etaeigen/errors.hpp"
#include "etaeigen/eta.hpp"
#include "etaeigen/hecke.hpp"
#include "etaeigen/reference_table.hpp"
#include "etaeigen/report_json.hpp"
#include "etaeigen/search.hpp"

namespace {

using namespace etaeigen;

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kNotModular = 3,
  kVerificationFailed = 4,
  kInternalError = 5,
};

std::uint64_t default_prime_cap() {
  if (const char* env = std::getenv("ETA_EIGEN_PRIME_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("ETA_EIGEN_PRIME_CAP must be a positive integer, got '") + env + "'");
  }
  return kDefaultPrimeCap;
}

std::uint64_t parse_weight(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || text.substr(slash + 1) != "2") {
    throw DomainError("weight must be written as k/2, got '" + text + "'");
  }
  std::size_t used = 0;
  const unsigned long long k = std::stoull(text.substr(0, slash), &used);
  if (used != slash) throw DomainError("weight must be written as k/2, got '" + text + "'");
  return k;
}

Json coefficient_json(const mpz_class& c) {
  if (mpz_fits_slong_p(c.get_mpz_t())) return Json(c.get_si());
  return Json(c.get_str());
}

int run_expand(const std::string& text, std::size_t prec, const std::string& format) {
  const EtaQuotient f = parse_eta(text);
  if (!is_modular(f)) throw NotModularError("");
  const QSeries series = q_expansion(f, prec);
  const std::uint64_t v = f.weighted_sum() / 24;
  if (format == "json") {
    Json j;
    j["eta"] = f.to_compact();
    j["valuation"] = v;
    j["prec"] = prec;
    Json coeffs = Json::array();
    for (const auto& c : series.coefficients()) coeffs.push_back(coefficient_json(c));
    j["coefficients"] = std::move(coeffs);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "# " << f.to_string() << "  valuation " << v << '\n';
    for (std::size_t n = 0; n < series.prec(); ++n) std::cout << n << ' ' << series[n] << '\n';
  }
  return kOk;
}

int run_invariants(const std::string& text) {
  const EtaQuotient f = parse_eta(text);
  std::cout << invariants_json(f, invariants(f)).dump() << '\n';
  return kOk;
}

int run_check(const std::string& text, std::optional<std::uint64_t> cap, bool full, bool koblitz_only) {
  const EtaQuotient f = parse_eta(text);
  EigenCheckOptions options{.prime_cap = cap.value_or(default_prime_cap()), .skip_level_primes = koblitz_only};
  if (full) options.prime_cap.reset();
  std::cout << report_json(eigen_check(f, options)).dump() << '\n';
  return kOk;
}

int run_search(SearchConfig config, const std::string& format) {
  if (format == "csv") std::cout << csv_header() << '\n';
  const ClassificationSummary summary = classify(config, [&](const ClassificationRecord& r) {
    if (format == "csv") {
      std::cout << record_csv(r) << '\n';
    } else {
      std::cout << record_json(r).dump() << '\n';
    }
  });
  std::cerr << "candidates " << summary.total() << ": certified " << summary.certified << ", up to cap "
            << summary.up_to_cap << ", not eigenform " << summary.not_eigenform << ", not applicable "
            << summary.not_applicable << '\n';
  return kOk;
}

int run_verify_table(const TableCheckOptions& options, const std::string& format) {
  const TableAudit audit = verify_table(options);
  for (const auto& row : audit.rows) {
    if (format == "json") {
      std::cout << row_audit_json(row).dump() << '\n';
      continue;
    }
    std::cout << "row " << row.row << ": " << to_string(row.status);
    if (!row.audited.empty()) std::cout << "  [" << row.audited << ']';
    if (row.report) std::cout << "  " << to_string(row.report->verdict);
    for (const auto& m : row.messages) std::cout << "\n    " << m;
    std::cout << '\n';
  }
  // Keep stdout pure JSON lines in json mode.
  std::ostream& summary = format == "json" ? std::cerr : std::cout;
  summary << "canonical rows passed: " << audit.canonical_passed << '/' << audit.canonical_rows
            << "; invariants matched: " << audit.invariant_matches << '/' << audit.canonical_rows
            << "; anomalies as annotated: " << (audit.anomalies_as_annotated ? "yes" : "no") << '\n';
  return audit.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dedekind eta quotients: q-expansions, invariants, and half-integral weight Hecke eigenform checks"};
  app.require_subcommand(1);

  std::string quotient;
  std::string format = "text";
  std::size_t prec = 20;
  auto* expand = app.add_subcommand("expand", "Print the q-expansion a_0..a_{P-1}");
  expand->add_option("quotient", quotient, "eta(mz)^r*... or m:r,...")->required();
  expand->add_option("--prec", prec, "number of coefficients")->check(CLI::PositiveNumber);
  expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* inv = app.add_subcommand("invariants", "Weight, level, character, valuation, Sturm bound and R as JSON");
  inv->add_option("quotient", quotient)->required();

  std::optional<std::uint64_t> cap;
  bool full = false;
  bool koblitz_only = false;
  auto* check = app.add_subcommand("check", "Test the T_{p^2} eigenform property; prints a JSON report");
  check->add_option("quotient", quotient)->required();
  check->add_option("--prime-cap", cap, "largest prime to test (default 30 or ETA_EIGEN_PRIME_CAP)");
  check->add_flag("--full", full, "test every prime p <= R");
  check->add_flag("--koblitz-only", koblitz_only, "skip primes dividing the level");

  SearchConfig config;
  std::string weight = "3/2";
  std::optional<std::uint64_t> max_level;
  std::string search_format = "json";
  auto* search = app.add_subcommand("search", "Enumerate and classify eta quotients of one weight");
  search->add_option("--weight", weight, "weight as k/2")->required();
  search->add_option("--max-sum", config.max_weighted_sum, "bound on sum m*r_m (multiple of 24)");
  search->add_option("--max-level", max_level);
  search->add_option("--prime-cap", cap);
  search->add_option("--jobs", config.parallelism)->check(CLI::PositiveNumber);
  search->add_option("--format", search_format)->check(CLI::IsMember({"json", "csv"}));
  search->add_flag("--koblitz-only", koblitz_only, "skip primes dividing the level");

  TableCheckOptions table;
  std::optional<int> row;
  auto* verify = app.add_subcommand("verify-table", "Audit the embedded reference table");
  verify->add_flag("--strict-printed", table.strict_printed, "audit rows as printed, without corrections");
  verify->add_option("--row", row, "audit a single row");
  verify->add_flag("--full", table.full, "test every prime p <= R on every row");
  verify->add_option("--prime-cap", cap);
  verify->add_option("--jobs", table.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--koblitz-only", table.skip_level_primes, "skip primes dividing the level");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand) return run_expand(quotient, prec, format);
    if (*inv) return run_invariants(quotient);
    if (*check) return run_check(quotient, cap, full, koblitz_only);
    if (*search) {
      config.weight_num = parse_weight(weight);
      config.max_level = max_level;
      config.prime_cap = cap.value_or(default_prime_cap());
      config.skip_level_primes = koblitz_only;
      return run_search(config, search_format);
    }
    table.prime_cap = cap.value_or(default_prime_cap());
    table.only_row = row;
    return run_verify_table(table, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotModularError&) {
    const EtaQuotient f = parse_eta(quotient);
    std::cerr << "not modular: sum m*r_m = " << f.weighted_sum() << " is not divisible by 24 (mod 24 criterion)\n";
    return kNotModular;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
