#include "etaeigen/search.hpp"

#include <algorithm>

#include "etaeigen/errors.hpp"
#include "etaeigen/reference_table.hpp"

namespace etaeigen {

void SearchConfig::validate() const {
  if (weight_num == 0 || weight_num % 2 == 0) {
    throw DomainError("search weight must be half-integral (odd numerator), got " + std::to_string(weight_num) + "/2");
  }
  if (max_weighted_sum == 0 || max_weighted_sum % 24 != 0) {
    throw DomainError("max weighted sum must be a positive multiple of 24, got " + std::to_string(max_weighted_sum));
  }
  if (prime_cap == 0) throw DomainError("prime cap must be positive");
  if (max_level && *max_level == 0) throw DomainError("max level must be positive");
  if (parallelism == 0) throw DomainError("parallelism must be positive");
}

namespace {

// Terms with strictly increasing scales; every multiset of scales with the
// given total exponent and weighted sum exactly `target`.
void descend(std::uint64_t min_scale, std::uint64_t weight_left, std::uint64_t sum_left,
             std::vector<EtaTerm>& terms, std::vector<EtaQuotient>& out) {
  if (weight_left == 0) {
    if (sum_left == 0) out.emplace_back(terms);
    return;
  }
  for (std::uint64_t m = min_scale; m * weight_left <= sum_left; ++m) {
    for (std::uint64_t r = 1; r <= weight_left; ++r) {
      const std::uint64_t used = m * r;
      if (used > sum_left) break;
      const std::uint64_t rest_weight = weight_left - r;
      // Remaining units need scales above m.
      if (rest_weight > 0 && (m + 1) * rest_weight > sum_left - used) continue;
      terms.push_back({m, r});
      descend(m + 1, rest_weight, sum_left - used, terms, out);
      terms.pop_back();
    }
  }
}

}  // namespace

void for_each_candidate(const SearchConfig& config, const std::function<void(const EtaQuotient&)>& visit) {
  config.validate();
  std::vector<EtaTerm> terms;
  for (std::uint64_t target = 24; target <= config.max_weighted_sum; target += 24) {
    std::vector<EtaQuotient> batch;
    descend(1, config.weight_num, target, terms, batch);
    std::sort(batch.begin(), batch.end());
    for (const auto& f : batch) {
      if (config.max_level && invariants(f).level > *config.max_level) continue;
      visit(f);
    }
  }
}

std::vector<EtaQuotient> enumerate(const SearchConfig& config) {
  std::vector<EtaQuotient> out;
  for_each_candidate(config, [&](const EtaQuotient& f) { out.push_back(f); });
  return out;
}

void ClassificationSummary::add(Verdict v) {
  switch (v) {
    case Verdict::eigenform_certified: ++certified; break;
    case Verdict::eigenform_up_to_cap: ++up_to_cap; break;
    case Verdict::not_eigenform: ++not_eigenform; break;
    case Verdict::not_applicable: ++not_applicable; break;
  }
}

ClassificationSummary classify(const SearchConfig& config,
                               const std::function<void(const ClassificationRecord&)>& emit) {
  const std::vector<EtaQuotient> candidates = enumerate(config);
  ClassificationSummary summary;
  const EigenCheckOptions check{.prime_cap = config.prime_cap, .skip_level_primes = config.skip_level_primes};
  ordered_parallel_map<ClassificationRecord>(
      candidates.size(), config.parallelism,
      [&](std::size_t i) {
        const EtaQuotient& f = candidates[i];
        EigenReport report = eigen_check(f, check);
        return ClassificationRecord{
            .quotient = f, .invariants = report.invariants, .report = std::move(report), .table_row = find_table_row(f)};
      },
      [&](std::size_t, ClassificationRecord& record) {
        summary.add(record.report.verdict);
        emit(record);
      });
  return summary;
}

std::vector<ClassificationRecord> classify(const SearchConfig& config) {
  std::vector<ClassificationRecord> out;
  classify(config, [&](const ClassificationRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace etaeigen
