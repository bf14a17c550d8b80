#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace etaeigen {

/// Truncated power series sum c_n q^n + O(q^prec) with exact integer
/// coefficients. Every operation contracts to the smallest input precision.
class QSeries {
 public:
  /// Zero series with the given precision.
  explicit QSeries(std::size_t prec);
  explicit QSeries(std::vector<mpz_class> coeffs);

  static QSeries one(std::size_t prec);

  std::size_t prec() const { return coeffs_.size(); }
  const mpz_class& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const mpz_class> coefficients() const { return coeffs_; }

  /// First `prec` coefficients; prec must not exceed this->prec().
  QSeries truncated(std::size_t prec) const;
  /// Multiply by q^shift, keeping the precision.
  QSeries shifted(std::size_t shift) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

QSeries mul(const QSeries& f, const QSeries& g);
QSeries pow(const QSeries& f, unsigned exponent);

/// prod_{n >= 1} (1 - q^(scale n)) to `prec` terms, read off the
/// pentagonal-number series.
QSeries euler_product(std::size_t scale, std::size_t prec);

}  // namespace etaeigen
