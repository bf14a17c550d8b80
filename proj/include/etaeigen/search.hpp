#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "etaeigen/eta.hpp"
#include "etaeigen/hecke.hpp"

namespace etaeigen {

struct SearchConfig {
  std::uint64_t weight_num = 3;          // odd; weight is weight_num / 2
  std::uint64_t max_weighted_sum = 48;   // bound on sum m * r_m, multiple of 24
  std::optional<std::uint64_t> max_level;
  std::uint64_t prime_cap = kDefaultPrimeCap;
  unsigned parallelism = 1;
  bool skip_level_primes = false;

  /// Throws DomainError on an even weight, a bound not divisible by 24, or
  /// zero caps.
  void validate() const;
};

/// Modular quotients of the configured weight with sum m * r_m <= bound, in
/// canonical order (weighted sum, then terms lexicographically).
void for_each_candidate(const SearchConfig& config, const std::function<void(const EtaQuotient&)>& visit);
std::vector<EtaQuotient> enumerate(const SearchConfig& config);

struct ClassificationRecord {
  EtaQuotient quotient;
  ModularInvariants invariants;
  EigenReport report;
  std::optional<int> table_row;

  bool in_reference_table() const { return table_row.has_value(); }
};

struct ClassificationSummary {
  std::size_t certified = 0;
  std::size_t up_to_cap = 0;
  std::size_t not_eigenform = 0;
  std::size_t not_applicable = 0;

  std::size_t total() const { return certified + up_to_cap + not_eigenform + not_applicable; }
  void add(Verdict v);
};

/// Classifies every candidate on `config.parallelism` workers. `emit` sees
/// records one at a time in canonical order regardless of completion order.
ClassificationSummary classify(const SearchConfig& config,
                               const std::function<void(const ClassificationRecord&)>& emit);
std::vector<ClassificationRecord> classify(const SearchConfig& config);

/// Runs `work(i)` for i in [0, count) on `workers` threads, handing results
/// to `emit` in index order from the calling thread.
template <class Result>
void ordered_parallel_map(std::size_t count, unsigned workers, const std::function<Result(std::size_t)>& work,
                          const std::function<void(std::size_t, Result&)>& emit);

}  // namespace etaeigen

#include "etaeigen/detail/ordered_parallel_map.hpp"
