#include "etaeigen/report_json.hpp"

namespace etaeigen {

Json exact_json(const mpq_class& q) {
  const mpz_class& num = q.get_num();
  if (q.get_den() == 1 && mpz_fits_slong_p(num.get_mpz_t())) return Json(num.get_si());
  return Json(q.get_str());
}

Json rational_json(const std::optional<Rational>& r) {
  if (!r) return Json(nullptr);
  return Json(r->to_string());
}

Json invariants_json(const EtaQuotient& f, const ModularInvariants& inv) {
  Json j;
  j["eta"] = f.to_compact();
  j["weight"] = inv.weight_string();
  j["level"] = inv.level;
  j["character"] = inv.character;
  j["valuation"] = inv.valuation;
  j["sturm"] = sturm_bound(inv.level, inv.weight_num);
  const bool has_r = inv.half_integral() && inv.weight_num >= 3 && inv.level % 4 == 0;
  j["R"] = has_r ? rational_json(purkait_bound(inv.level, inv.weight_num)) : Json(nullptr);
  return j;
}

namespace {

Json eigenvalues_json(const EigenReport& report) {
  Json list = Json::array();
  for (const auto& pe : report.primes_checked) list.push_back(Json::array({pe.prime, exact_json(pe.eigenvalue)}));
  return list;
}

}  // namespace

Json report_json(const EigenReport& report) {
  Json j = invariants_json(report.quotient, report.invariants);
  j["sturm"] = report.sturm;
  j["R"] = rational_json(report.purkait);
  j["prime_cap"] = report.prime_cap_used;
  j["eigenvalues"] = eigenvalues_json(report);
  Json level_primes = Json::array();
  for (const auto& pe : report.primes_checked) {
    if (pe.divides_level) level_primes.push_back(pe.prime);
  }
  j["level_primes"] = level_primes;
  j["verdict"] = to_string(report.verdict);
  j["witness"] = report.witness ? Json::array({report.witness->prime, report.witness->index}) : Json(nullptr);
  j["vacuous"] = report.vacuous;
  j["skipped_level_primes"] = report.skipped_level_primes;
  j["note"] = report.note;
  return j;
}

Json record_json(const ClassificationRecord& record) {
  Json j = invariants_json(record.quotient, record.invariants);
  j["sturm"] = record.report.sturm;
  j["R"] = rational_json(record.report.purkait);
  j["prime_cap"] = record.report.prime_cap_used;
  j["eigenvalues"] = eigenvalues_json(record.report);
  j["verdict"] = to_string(record.report.verdict);
  j["table_row"] = record.table_row ? Json(*record.table_row) : Json(nullptr);
  return j;
}

Json row_audit_json(const RowAudit& audit) {
  Json j;
  j["row"] = audit.row;
  j["status"] = to_string(audit.status);
  j["audited"] = audit.audited.empty() ? Json(nullptr) : Json(audit.audited);
  j["invariants_match"] = audit.computed ? Json(audit.invariants_match()) : Json(nullptr);
  j["verdict"] = audit.report ? Json(to_string(audit.report->verdict)) : Json(nullptr);
  j["messages"] = audit.messages;
  return j;
}

std::string csv_header() { return "eta,weight,level,character,valuation,sturm,R,verdict,eigenvalues"; }

std::string record_csv(const ClassificationRecord& r) {
  std::string eigen;
  for (const auto& pe : r.report.primes_checked) {
    if (!eigen.empty()) eigen += ';';
    eigen += std::to_string(pe.prime) + '=' + pe.eigenvalue.get_str();
  }
  std::string line = '"' + r.quotient.to_compact() + "\",";
  line += r.invariants.weight_string() + ',';
  line += std::to_string(r.invariants.level) + ',';
  line += std::to_string(r.invariants.character) + ',';
  line += std::to_string(r.invariants.valuation) + ',';
  line += std::to_string(r.report.sturm) + ',';
  line += (r.report.purkait ? r.report.purkait->to_string() : std::string()) + ',';
  line += to_string(r.report.verdict) + ',';
  line += eigen;
  return line;
}

}  // namespace etaeigen
