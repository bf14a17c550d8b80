#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace etaeigen {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, sorted by prime.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::uint64_t n);
std::uint64_t reconstruct(const Factorization& f);

/// Primes p with 2 <= p <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);
/// Primes p <= floor(bound); negative or sub-2 bounds give an empty list.
std::vector<std::uint64_t> primes_up_to(double bound);

bool is_prime(std::uint64_t n);

/// Kronecker symbol (d/n). Throws DomainError for (0, 0).
int kronecker(std::int64_t d, std::int64_t n);

/// Canonical label of the quadratic character chi_d: 1 when d is a perfect
/// square, otherwise the fundamental discriminant of Q(sqrt d).
std::int64_t normalize_character(std::int64_t d);

/// Same as normalize_character for d = sign * prod p^e, without forming d.
std::int64_t normalize_character(int sign, const Factorization& d);

/// Index of Gamma_0(n) in SL_2(Z).
std::uint64_t gamma0_index(std::uint64_t n);

/// Exact rational with 64-bit parts, always in lowest terms, den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::int64_t floor() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// "num/den", or "num" when den == 1.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace etaeigen
