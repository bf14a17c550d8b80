#pragma once

#include <gmpxx.h>

#include "json.hpp"
#include <string>

#include "etaeigen/hecke.hpp"
#include "etaeigen/reference_table.hpp"
#include "etaeigen/search.hpp"

namespace etaeigen {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits stay numbers; everything else is "num/den".
Json exact_json(const mpq_class& q);
Json rational_json(const std::optional<Rational>& r);

/// {eta, weight, level, character, valuation, sturm, R}
Json invariants_json(const EtaQuotient& f, const ModularInvariants& inv);
Json report_json(const EigenReport& report);
/// Search record: {eta, weight, level, character, valuation, sturm, R,
/// prime_cap, eigenvalues, verdict, table_row}
Json record_json(const ClassificationRecord& record);
Json row_audit_json(const RowAudit& audit);

std::string csv_header();
std::string record_csv(const ClassificationRecord& record);

}  // namespace etaeigen
