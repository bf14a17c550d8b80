#include "etaeigen/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "etaeigen/errors.hpp"

namespace etaeigen {

namespace {

// (2/n) for odd n, indexed by n mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw DomainError("integer overflow in character computation");
  }
  return r;
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  Factorization out;
  if (n == 0) throw DomainError("factorize: n must be positive");
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t reconstruct(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : f) {
    for (unsigned i = 0; i < e; ++i) n *= p;
  }
  return n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

std::vector<std::uint64_t> primes_up_to(double bound) {
  if (!(bound >= 2.0)) return {};
  return primes_up_to(static_cast<std::uint64_t>(std::floor(bound)));
}

int kronecker(std::int64_t a, std::int64_t b) {
  if (b == 0) {
    if (a == 0) throw DomainError("kronecker(0, 0) is undefined");
    return (a == 1 || a == -1) ? 1 : 0;
  }
  if (a % 2 == 0 && b % 2 == 0) return 0;

  int v = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++v;
  }
  int k = (v % 2 == 0) ? 1 : kTwoTable[a & 7];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  // b is odd and positive from here on.
  while (true) {
    if (a == 0) return b > 1 ? 0 : k;
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) k *= kTwoTable[b & 7];
    if (a & b & 2) k = -k;
    const std::int64_t r = a < 0 ? -a : a;
    a = b % r;
    b = r;
  }
}

std::int64_t normalize_character(int sign, const Factorization& d) {
  std::int64_t core = sign < 0 ? -1 : 1;
  for (const auto& [p, e] : d) {
    if (e % 2 == 1) core = checked_mul(core, static_cast<std::int64_t>(p));
  }
  if (core == 1) return 1;
  const std::int64_t residue = ((core % 4) + 4) % 4;
  return residue == 1 ? core : checked_mul(core, 4);
}

std::int64_t normalize_character(std::int64_t d) {
  if (d == 0) throw DomainError("normalize_character: discriminant must be nonzero");
  const std::uint64_t magnitude = d < 0 ? 0 - static_cast<std::uint64_t>(d) : static_cast<std::uint64_t>(d);
  return normalize_character(d < 0 ? -1 : 1, factorize(magnitude));
}

std::uint64_t gamma0_index(std::uint64_t n) {
  std::uint64_t index = 1;
  for (const auto& [p, e] : factorize(n)) {
    index *= p + 1;
    for (unsigned i = 1; i < e; ++i) index *= p;
  }
  return index;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("Rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
  // Reduce in 128 bits before narrowing.
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace etaeigen
