#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "etaeigen/arith.hpp"
#include "etaeigen/eta.hpp"

namespace etaeigen {

/// Sturm bound at weight k/2: floor(k * [SL2(Z):Gamma0(N)] / 24) + 1.
std::uint64_t sturm_bound(std::uint64_t level, std::uint64_t weight_num);

/// Purkait's bound R for weight k/2 (k odd, k >= 3) and level N (4 | N).
/// Throws DomainError outside that range.
Rational purkait_bound(std::uint64_t level, std::uint64_t weight_num);

/// N' * N' * prod_{p | N'} (1 - 1/p^2) for N' = N / 2.
std::uint64_t purkait_m(std::uint64_t level);

struct HeckeContext {
  std::uint64_t weight_num = 0;  // k, odd
  std::uint64_t lambda = 0;      // k = 2 lambda + 1
  std::uint64_t level = 0;       // 4 | level
  std::int64_t character = 1;
  std::uint64_t sturm = 0;
  std::optional<Rational> purkait;  // absent for k = 1

  /// chi(t) = (D / t) when gcd(t, N) = 1, else 0.
  int chi(std::uint64_t t) const;
};

/// Throws DomainError for even weight or a level not divisible by 4.
HeckeContext make_context(const ModularInvariants& inv);

/// b_n of T_{p^2} f is numerators[n] / denominator. The denominator is p at
/// weight 1/2, where p^(lambda - 1) and p^(k - 2) are 1/p, and 1 otherwise.
struct HeckeImage {
  std::vector<mpz_class> numerators;
  unsigned long denominator = 1;

  std::size_t size() const { return numerators.size(); }
  mpq_class value(std::size_t n) const;
};

/// T_{p^2} on absolutely indexed coefficients a_0..a_{P-1}; yields b_n for
/// n < floor(P / p^2). Throws DomainError when P < p^2 or p is not prime.
HeckeImage apply_tp2(std::span<const mpz_class> a, std::uint64_t p, const HeckeContext& ctx);

enum class Verdict { eigenform_certified, eigenform_up_to_cap, not_eigenform, not_applicable };

std::string to_string(Verdict v);

struct PrimeEigenvalue {
  std::uint64_t prime = 0;
  mpq_class eigenvalue;
  /// p | N: only the U_{p^2} part of the operator survives, which lies
  /// outside the p not dividing N hypothesis of Koblitz's description.
  bool divides_level = false;
};

struct Witness {
  std::uint64_t prime = 0;
  std::uint64_t index = 0;
};

struct EigenReport {
  EtaQuotient quotient;
  ModularInvariants invariants;
  std::uint64_t sturm = 0;
  std::optional<Rational> purkait;
  std::uint64_t prime_cap_used = 0;
  std::vector<PrimeEigenvalue> primes_checked;
  Verdict verdict = Verdict::not_applicable;
  std::optional<Witness> witness;
  /// Certified with no prime p <= R to test.
  bool vacuous = false;
  bool skipped_level_primes = false;
  std::string note;
};

/// Tests whether the quotient is a T_{p^2}-eigenform for every prime
/// p <= min(prime_cap, R) (p <= prime_cap at weight 1/2; with no cap given,
/// p <= R, or the default cap at weight 1/2). Throws NotModularError for
/// non-modular input and DomainError for integral weight.
EigenReport eigen_check(const EtaQuotient& f, std::optional<std::uint64_t> prime_cap);

struct EigenCheckOptions {
  std::optional<std::uint64_t> prime_cap;
  /// Test only primes p not dividing N, where Koblitz's description holds.
  /// A passing run is then never reported as eigenform_certified.
  bool skip_level_primes = false;
};

EigenReport eigen_check(const EtaQuotient& f, const EigenCheckOptions& options);

inline constexpr std::uint64_t kDefaultPrimeCap = 30;

}  // namespace etaeigen
