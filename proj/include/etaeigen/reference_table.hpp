#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etaeigen/eta.hpp"
#include "etaeigen/hecke.hpp"

namespace etaeigen {

/// One printed row of the published table of eta-quotient eigenforms.
struct ReferenceRow {
  int row = 0;
  std::uint64_t level = 0;
  std::uint64_t weight_num = 0;     // printed weight is weight_num / 2
  std::int64_t character = 0;       // printed character label
  std::string printed;              // eta quotient as typeset
  std::optional<int> duplicate_of;  // row repeats an earlier row verbatim
  bool printed_inconsistent = false;
  std::optional<std::string> corrected;

  bool canonical() const { return !duplicate_of.has_value(); }
  /// The corrected form when there is one, else the printed form.
  EtaQuotient quotient() const;
};

/// All 50 printed rows, in order.
const std::vector<ReferenceRow>& reference_table();
const ReferenceRow& reference_row(int row);

/// First canonical row whose (corrected) quotient equals f.
std::optional<int> find_table_row(const EtaQuotient& f);

struct TableCheckOptions {
  std::uint64_t prime_cap = kDefaultPrimeCap;
  /// Rows with k >= 3 and R at most this are checked for every p <= R.
  std::int64_t full_certification_limit = 200;
  /// Check every p <= R regardless of the limit.
  bool full = false;
  /// Audit the printed forms of rows with corrections instead of the fixes.
  bool strict_printed = false;
  bool skip_level_primes = false;
  std::optional<int> only_row;
  unsigned jobs = 1;
};

enum class RowStatus { pass, flag, fail };

std::string to_string(RowStatus s);

struct RowAudit {
  int row = 0;
  std::string audited;  // compact form of the quotient that was checked
  bool modular = false;
  std::optional<ModularInvariants> computed;
  bool level_matches = false;
  bool weight_matches = false;
  bool character_matches = false;
  std::optional<EigenReport> report;
  /// Anomalies detected from the printed data.
  bool detected_inconsistent = false;
  std::optional<int> detected_duplicate_of;
  std::vector<std::string> messages;
  RowStatus status = RowStatus::pass;

  bool invariants_match() const { return level_matches && weight_matches && character_matches; }
};

struct TableAudit {
  std::vector<RowAudit> rows;
  std::size_t canonical_rows = 0;
  std::size_t canonical_passed = 0;
  std::size_t invariant_matches = 0;
  /// Anomaly flags agree with the annotations (and nothing else is flagged).
  bool anomalies_as_annotated = true;

  bool ok() const { return canonical_passed == canonical_rows && anomalies_as_annotated; }
};

/// Recomputes invariants for every row, compares them with the printed
/// columns, runs the eigenform check on canonical rows, and detects
/// non-modular and duplicated printed rows.
TableAudit verify_table(const TableCheckOptions& options);

}  // namespace etaeigen
