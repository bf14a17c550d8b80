#include "etaeigen/reference_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "etaeigen/arith.hpp"
#include "etaeigen/errors.hpp"
#include "etaeigen/search.hpp"

namespace etaeigen {

EtaQuotient ReferenceRow::quotient() const { return parse_eta(corrected.value_or(printed)); }

const std::vector<ReferenceRow>& reference_table() {
  // level, weight numerator, character label, quotient as printed,
  // duplicate_of, inconsistent as printed, corrected form.
  static const std::vector<ReferenceRow> rows = {
      {1, 576, 1, 12, "eta(24z)", std::nullopt, false, std::nullopt},
      {2, 1152, 1, 24, "eta(48z)", std::nullopt, false, std::nullopt},
      {3, 176, 3, 44, "eta(z)^2*eta(22z)", std::nullopt, false, std::nullopt},
      {4, 160, 3, 40, "eta(2z)^2*eta(20z)", std::nullopt, false, std::nullopt},
      {5, 864, 3, 8, "eta(2z)*eta(4z)*eta(18z)", std::nullopt, false, std::nullopt},
      {6, 448, 3, 28, "eta(2z)*eta(8z)*eta(14z)", std::nullopt, false, std::nullopt},
      {7, 176, 3, 1, "eta(2z)*eta(11z)^2", std::nullopt, false, std::nullopt},
      {8, 432, 3, 1, "eta(3z)^2*eta(18z)", std::nullopt, false, std::nullopt},
      {9, 864, 3, 8, "eta(3z)*eta(9z)*eta(12z)", std::nullopt, false, std::nullopt},
      {10, 128, 3, 8, "eta(4z)^2*eta(16z)", std::nullopt, false, std::nullopt},
      {11, 128, 3, 8, "eta(16z)^3", std::nullopt, false, std::nullopt},
      {12, 576, 3, 12, "eta(4z)*eta(8z)*eta(12z)", std::nullopt, false, std::nullopt},
      {13, 160, 3, 8, "eta(4z)*eta(10z)^2", std::nullopt, false, std::nullopt},
      {14, 288, 3, 24, "eta(6z)^2*eta(12z)", std::nullopt, false, std::nullopt},
      {15, 432, 3, 12, "eta(6z)*eta(9z)^2", std::nullopt, false, std::nullopt},
      {16, 64, 3, 1, "eta(8z)^3", std::nullopt, false, std::nullopt},
      {17, 720, 5, 5, "eta(z)^3*eta(6z)*eta(15z)", std::nullopt, false, std::nullopt},
      {18, 28, 5, 28, "eta(z)^2*eta(4z)^2*eta(14z)", std::nullopt, false, std::nullopt},
      {19, 128, 5, 8, "eta(2z)^4*eta(16z)", std::nullopt, false, std::nullopt},
      {20, 224, 5, 56, "eta(2z)^3*eta(4z)*eta(14z)", std::nullopt, false, std::nullopt},
      {21, 96, 5, 8, "eta(2z)^3*eta(6z)*eta(12z)", std::nullopt, false, std::nullopt},
      {22, 288, 5, 24, "eta(2z)^2*eta(4z)^2*eta(12z)", std::nullopt, false, std::nullopt},
      {23, 16, 5, 8, "eta(2z)^2*eta(4z)*eta(8z)^2", std::nullopt, false, std::nullopt},
      {24, 96, 5, 24, "eta(2z)*eta(4z)*eta(6z)^3", std::nullopt, false, std::nullopt},
      {25, 288, 5, 24, "eta(3z)^4*eta(12z)", std::nullopt, false, std::nullopt},
      {26, 432, 5, 1, "eta(3z)^3*eta(6z)*eta(9z)", std::nullopt, false, std::nullopt},
      {27, 144, 5, 12, "eta(3z)^2*eta(6z)^3", std::nullopt, false, std::nullopt},
      {28, 64, 5, 1, "eta(4z)^4*eta(8z)", std::nullopt, false, std::nullopt},
      {29, 288, 5, 8, "eta(4z)^3*eta(6z)^2", std::nullopt, false, std::nullopt},
      {30, 144, 7, 1, "eta(z)^3*eta(3z)*eta(6z)^3", std::nullopt, false, std::nullopt},
      {31, 48, 7, 12, "eta(z)^2*eta(2z)^2*eta(6z)^3", std::nullopt, false, std::nullopt},
      {32, 64, 7, 1, "eta(2z)^4*eta(4z)^2*eta(8z)", std::nullopt, false, std::nullopt},
      {33, 48, 7, 1, "eta(2z)^3*eta(3z)^2*eta(6z)^2", std::nullopt, false, std::nullopt},
      {34, 32, 7, 8, "eta(z)^2*eta(4z)^5", std::nullopt, true, "eta(2z)^2*eta(4z)^5"},
      {35, 144, 7, 12, "eta(4z)^3*eta(6z)^2", std::nullopt, false, std::nullopt},
      {36, 48, 9, 12, "eta(z)^6*eta(6z)^3", std::nullopt, false, std::nullopt},
      {37, 32, 9, 8, "eta(z)^4*eta(4z)^5", std::nullopt, false, std::nullopt},
      {38, 80, 9, 5, "eta(z)^3*eta(2z)^3*eta(5z)^3", std::nullopt, false, std::nullopt},
      {39, 16, 9, 1, "eta(z)^2*eta(2z)^3*eta(4z)^4", std::nullopt, false, std::nullopt},
      {40, 64, 9, 1, "eta(z)^8*eta(8z)", std::nullopt, true, "eta(2z)^8*eta(8z)"},
      {41, 32, 9, 8, "eta(2z)^6*eta(4z)^3", std::nullopt, false, std::nullopt},
      {42, 48, 9, 1, "eta(2z)^3*eta(3z)^6", std::nullopt, false, std::nullopt},
      {43, 4, 11, 1, "eta(z)^2*eta(2z)^7*eta(4z)^2", std::nullopt, false, std::nullopt},
      {44, 32, 11, 8, "eta(2z)^10*eta(4z)", std::nullopt, false, std::nullopt},
      {45, 48, 13, 12, "eta(z)^5*eta(2z)^5*eta(3z)^3", std::nullopt, false, std::nullopt},
      {46, 16, 13, 1, "eta(z)^2*eta(2z)^11", std::nullopt, false, std::nullopt},
      {47, 16, 15, 1, "eta(z)^6*eta(2z)^9", std::nullopt, false, std::nullopt},
      {48, 48, 13, 12, "eta(z)^5*eta(2z)^5*eta(3z)^3", 45, false, std::nullopt},
      {49, 16, 13, 1, "eta(z)^2*eta(2z)^11", 46, false, std::nullopt},
      {50, 16, 15, 1, "eta(z)^6*eta(2z)^9", 47, false, std::nullopt},
  };
  return rows;
}

const ReferenceRow& reference_row(int row) {
  const auto& rows = reference_table();
  if (row < 1 || row > static_cast<int>(rows.size())) {
    throw DomainError("reference table has no row " + std::to_string(row));
  }
  return rows[static_cast<std::size_t>(row - 1)];
}

std::optional<int> find_table_row(const EtaQuotient& f) {
  static const std::vector<std::pair<EtaQuotient, int>> index = [] {
    std::vector<std::pair<EtaQuotient, int>> out;
    for (const auto& r : reference_table()) {
      if (r.canonical()) out.emplace_back(r.quotient(), r.row);
    }
    return out;
  }();
  for (const auto& [q, row] : index) {
    if (q == f) return row;
  }
  return std::nullopt;
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "PASS";
    case RowStatus::flag: return "FLAG";
    case RowStatus::fail: return "FAIL";
  }
  throw std::logic_error("unknown row status");
}

namespace {

std::optional<int> detect_duplicate(const ReferenceRow& row) {
  for (const auto& earlier : reference_table()) {
    if (earlier.row >= row.row) break;
    if (earlier.level == row.level && earlier.weight_num == row.weight_num &&
        earlier.character == row.character && parse_eta(earlier.printed) == parse_eta(row.printed)) {
      return earlier.row;
    }
  }
  return std::nullopt;
}

std::string describe_failure(const EigenReport& r) {
  const Witness& w = *r.witness;
  std::string text = "not an eigenform: T_{" + std::to_string(w.prime) + "^2} fails at n = " +
                     std::to_string(w.index);
  text += r.invariants.level % w.prime == 0 ? " (p | N, U_{p^2} extension)" : " (p does not divide N)";
  return text;
}

RowAudit audit_row(const ReferenceRow& row, const TableCheckOptions& options) {
  RowAudit audit{.row = row.row};
  const EtaQuotient printed = parse_eta(row.printed);
  audit.detected_inconsistent = !is_modular(printed);
  audit.detected_duplicate_of = detect_duplicate(row);

  if (audit.detected_inconsistent) {
    audit.messages.push_back("inconsistent as printed: sum m*r_m = " + std::to_string(printed.weighted_sum()) +
                             " is not divisible by 24");
  }
  if (audit.detected_duplicate_of) {
    audit.messages.push_back("duplicate of row " + std::to_string(*audit.detected_duplicate_of));
  }
  if (audit.detected_inconsistent != row.printed_inconsistent || audit.detected_duplicate_of != row.duplicate_of) {
    audit.messages.push_back("anomaly detection disagrees with the row annotation");
    audit.status = RowStatus::fail;
  }
  if (!row.canonical()) {
    if (audit.status != RowStatus::fail) audit.status = RowStatus::flag;
    return audit;
  }

  const EtaQuotient quotient = options.strict_printed ? printed : row.quotient();
  audit.audited = quotient.to_compact();
  if (row.corrected && !options.strict_printed) audit.messages.push_back("audited corrected form " + *row.corrected);

  audit.modular = is_modular(quotient);
  if (!audit.modular) {
    audit.status = RowStatus::fail;
    return audit;
  }
  audit.computed = invariants(quotient);
  const ModularInvariants& inv = *audit.computed;
  audit.level_matches = inv.level == row.level;
  audit.weight_matches = inv.weight_num == row.weight_num;
  audit.character_matches = inv.character == normalize_character(row.character);
  if (!audit.level_matches) {
    audit.messages.push_back("printed level " + std::to_string(row.level) + " != computed " +
                             std::to_string(inv.level));
  }
  if (!audit.weight_matches) {
    audit.messages.push_back("printed weight " + std::to_string(row.weight_num) + "/2 != computed " +
                             inv.weight_string());
  }
  if (!audit.character_matches) {
    audit.messages.push_back("printed character " + std::to_string(row.character) + " != computed " +
                             std::to_string(inv.character));
  }
  if (const auto same = find_table_row(quotient); same && *same != row.row) {
    audit.messages.push_back("same quotient as row " + std::to_string(*same));
  }

  if (inv.half_integral()) {
    EigenCheckOptions check{.prime_cap = options.prime_cap, .skip_level_primes = options.skip_level_primes};
    if (inv.weight_num >= 3 && inv.level % 4 == 0) {
      const Rational r = purkait_bound(inv.level, inv.weight_num);
      if (options.full || r.floor() <= options.full_certification_limit) check.prime_cap.reset();
    }
    audit.report = eigen_check(quotient, check);
    if (audit.report->verdict == Verdict::not_eigenform) audit.messages.push_back(describe_failure(*audit.report));
    if (audit.report->vacuous) audit.messages.push_back(audit.report->note);
  }

  const bool eigen_ok = audit.report && (audit.report->verdict == Verdict::eigenform_certified ||
                                          audit.report->verdict == Verdict::eigenform_up_to_cap);
  if (!audit.invariants_match() || !eigen_ok) {
    audit.status = RowStatus::fail;
  } else if (audit.status != RowStatus::fail) {
    audit.status = (row.printed_inconsistent || audit.detected_inconsistent) ? RowStatus::flag : RowStatus::pass;
  }
  return audit;
}

}  // namespace

TableAudit verify_table(const TableCheckOptions& options) {
  std::vector<const ReferenceRow*> selected;
  for (const auto& row : reference_table()) {
    if (!options.only_row || *options.only_row == row.row) selected.push_back(&row);
  }
  if (selected.empty()) throw DomainError("reference table has no row " + std::to_string(options.only_row.value_or(0)));

  TableAudit audit;
  ordered_parallel_map<RowAudit>(
      selected.size(), options.jobs, [&](std::size_t i) { return audit_row(*selected[i], options); },
      [&](std::size_t, RowAudit& row) { audit.rows.push_back(std::move(row)); });

  for (std::size_t i = 0; i < selected.size(); ++i) {
    const ReferenceRow& ref = *selected[i];
    const RowAudit& row = audit.rows[i];
    if (row.detected_inconsistent != ref.printed_inconsistent || row.detected_duplicate_of != ref.duplicate_of) {
      audit.anomalies_as_annotated = false;
    }
    if (!ref.canonical()) continue;
    ++audit.canonical_rows;
    if (row.invariants_match()) ++audit.invariant_matches;
    if (row.status != RowStatus::fail) ++audit.canonical_passed;
  }
  return audit;
}

}  // namespace etaeigen
