#include "etaeigen/qseries.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "etaeigen/errors.hpp"

namespace etaeigen {

QSeries::QSeries(std::size_t prec) : coeffs_(prec) {
  if (prec == 0) throw DomainError("QSeries: precision must be positive");
}

QSeries::QSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("QSeries: precision must be positive");
}

QSeries QSeries::one(std::size_t prec) {
  QSeries s(prec);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::truncated(std::size_t prec) const {
  if (prec > coeffs_.size()) throw DomainError("QSeries::truncated: precision exceeds known terms");
  return QSeries(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(prec)));
}

QSeries QSeries::shifted(std::size_t shift) const {
  QSeries out(prec());
  for (std::size_t n = shift; n < prec(); ++n) out.coeffs_[n] = coeffs_[n - shift];
  return out;
}

namespace {

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

std::size_t max_bits(std::span<const mpz_class> c) {
  std::size_t bits = 0;
  for (const auto& x : c) {
    if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

// Writes sum_{i} c_i 2^(slot_limbs * GMP_NUMB_BITS * i) into `out` as a
// signed integer, built as (positive part) - (negative part).
void pack(std::span<const mpz_class> c, std::size_t slot_limbs, mpz_class& out) {
  const std::size_t total = c.size() * slot_limbs;
  mpz_class positive;
  mpz_class negative;
  mp_limb_t* pos = mpz_limbs_write(positive.get_mpz_t(), static_cast<mp_size_t>(total));
  mp_limb_t* neg = mpz_limbs_write(negative.get_mpz_t(), static_cast<mp_size_t>(total));
  std::fill(pos, pos + total, mp_limb_t{0});
  std::fill(neg, neg + total, mp_limb_t{0});
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int s = sgn(c[i]);
    if (s == 0) continue;
    mp_limb_t* dst = (s > 0 ? pos : neg) + i * slot_limbs;
    const std::size_t used = mpz_size(c[i].get_mpz_t());
    const mp_limb_t* src = mpz_limbs_read(c[i].get_mpz_t());
    std::copy(src, src + used, dst);
  }
  mpz_limbs_finish(positive.get_mpz_t(), static_cast<mp_size_t>(total));
  mpz_limbs_finish(negative.get_mpz_t(), static_cast<mp_size_t>(total));
  out = positive - negative;
}

// Kronecker substitution: evaluate both series at 2^B, multiply the two
// integers, and read the low `n` balanced base-2^B digits back out.
std::vector<mpz_class> kronecker_product(std::span<const mpz_class> f, std::span<const mpz_class> g) {
  const std::size_t n = f.size();
  const std::size_t bf = max_bits(f);
  const std::size_t bg = max_bits(g);
  std::vector<mpz_class> out(n);
  if (bf == 0 || bg == 0) return out;

  // |h_i| <= n * 2^bf * 2^bg < 2^(B-1).
  const std::size_t needed = bf + bg + static_cast<std::size_t>(std::bit_width(n)) + 2;
  const std::size_t slot_limbs = (needed + kLimbBits - 1) / kLimbBits;
  const std::size_t slot_bits = slot_limbs * kLimbBits;

  mpz_class pf;
  mpz_class pg;
  pack(f, slot_limbs, pf);
  pack(g, slot_limbs, pg);
  mpz_class product = pf * pg;
  mpz_fdiv_r_2exp(product.get_mpz_t(), product.get_mpz_t(), n * slot_bits);

  // Add 2^(B-1) to each low slot so every digit is nonnegative.
  mpz_class bias;
  {
    const std::size_t total = n * slot_limbs;
    mp_limb_t* b = mpz_limbs_write(bias.get_mpz_t(), static_cast<mp_size_t>(total));
    std::fill(b, b + total, mp_limb_t{0});
    const mp_limb_t top = mp_limb_t{1} << (kLimbBits - 1);
    for (std::size_t i = 0; i < n; ++i) b[i * slot_limbs + slot_limbs - 1] = top;
    mpz_limbs_finish(bias.get_mpz_t(), static_cast<mp_size_t>(total));
  }
  product += bias;

  mpz_class half;
  mpz_setbit(half.get_mpz_t(), slot_bits - 1);
  const std::size_t have = mpz_size(product.get_mpz_t());
  const mp_limb_t* limbs = mpz_limbs_read(product.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t begin = i * slot_limbs;
    mp_limb_t* dst = mpz_limbs_write(out[i].get_mpz_t(), static_cast<mp_size_t>(slot_limbs));
    for (std::size_t j = 0; j < slot_limbs; ++j) {
      dst[j] = begin + j < have ? limbs[begin + j] : mp_limb_t{0};
    }
    mpz_limbs_finish(out[i].get_mpz_t(), static_cast<mp_size_t>(slot_limbs));
    out[i] -= half;
  }
  return out;
}

}  // namespace

QSeries mul(const QSeries& f, const QSeries& g) {
  const std::size_t n = std::min(f.prec(), g.prec());
  return QSeries(kronecker_product(f.coefficients().first(n), g.coefficients().first(n)));
}

QSeries pow(const QSeries& f, unsigned exponent) {
  QSeries result = QSeries::one(f.prec());
  if (exponent == 0) return result;
  QSeries base = f;
  bool first = true;
  while (true) {
    if (exponent & 1u) {
      result = first ? base : mul(result, base);
      first = false;
    }
    exponent >>= 1;
    if (exponent == 0) break;
    base = mul(base, base);
  }
  return result;
}

QSeries euler_product(std::size_t scale, std::size_t prec) {
  if (scale == 0) throw DomainError("euler_product: scale must be positive");
  std::vector<mpz_class> c(prec);
  if (prec == 0) throw DomainError("QSeries: precision must be positive");
  c[0] = 1;
  // Generalized pentagonal numbers g = m(3m - 1)/2 for m = 1, -1, 2, -2, ...
  for (std::uint64_t m = 1;; ++m) {
    const std::uint64_t g_pos = m * (3 * m - 1) / 2;
    const std::uint64_t g_neg = m * (3 * m + 1) / 2;
    if (g_pos * scale >= prec) break;
    const int sign = (m % 2 == 0) ? 1 : -1;
    c[g_pos * scale] = sign;
    if (g_neg * scale < prec) c[g_neg * scale] = sign;
  }
  return QSeries(std::move(c));
}

}  // namespace etaeigen
