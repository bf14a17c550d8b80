#include "etaeigen/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "etaeigen/errors.hpp"

namespace etaeigen {

std::uint64_t sturm_bound(std::uint64_t level, std::uint64_t weight_num) {
  if (level == 0 || weight_num == 0) throw DomainError("sturm_bound: level and weight must be positive");
  return weight_num * gamma0_index(level) / 24 + 1;
}

std::uint64_t purkait_m(std::uint64_t level) {
  const std::uint64_t half = level / 2;
  std::uint64_t m = 1;
  for (const auto& [p, e] : factorize(half)) {
    m *= p * p - 1;
    for (unsigned i = 1; i < e; ++i) m *= p * p;
  }
  return m;
}

Rational purkait_bound(std::uint64_t level, std::uint64_t weight_num) {
  if (weight_num < 3 || weight_num % 2 == 0) {
    throw DomainError("purkait_bound: weight numerator must be odd and at least 3");
  }
  if (level == 0 || level % 4 != 0) throw DomainError("purkait_bound: level must be divisible by 4");
  const auto half = static_cast<std::int64_t>(level / 2);
  const auto m = static_cast<std::int64_t>(purkait_m(level));
  return Rational(static_cast<std::int64_t>(weight_num - 1) * m, 12) - Rational(m - 1, half);
}

int HeckeContext::chi(std::uint64_t t) const {
  if (std::gcd(t, level) != 1) return 0;
  return kronecker(character, static_cast<std::int64_t>(t));
}

HeckeContext make_context(const ModularInvariants& inv) {
  if (!inv.half_integral()) throw DomainError("Hecke operators T_{p^2} need half-integral weight");
  if (inv.level % 4 != 0) throw DomainError("half-integral weight needs a level divisible by 4");
  HeckeContext ctx;
  ctx.weight_num = inv.weight_num;
  ctx.lambda = (inv.weight_num - 1) / 2;
  ctx.level = inv.level;
  ctx.character = inv.character;
  ctx.sturm = sturm_bound(inv.level, inv.weight_num);
  if (inv.weight_num >= 3) ctx.purkait = purkait_bound(inv.level, inv.weight_num);
  return ctx;
}

mpq_class HeckeImage::value(std::size_t n) const {
  mpq_class q(numerators.at(n), mpz_class(denominator));
  q.canonicalize();
  return q;
}

HeckeImage apply_tp2(std::span<const mpz_class> a, std::uint64_t p, const HeckeContext& ctx) {
  if (!is_prime(p)) throw DomainError("apply_tp2: " + std::to_string(p) + " is not prime");
  const std::uint64_t p2 = p * p;
  const std::size_t length = a.size() / p2;
  if (length == 0) {
    throw DomainError("apply_tp2: " + std::to_string(a.size()) + " coefficients cannot feed T_{" +
                      std::to_string(p) + "^2}");
  }

  const int chi_p = ctx.chi(p);
  const int chi_p2 = chi_p * chi_p;
  const bool weight_half = ctx.lambda == 0;
  const int middle_sign = ctx.lambda % 2 == 0 ? 1 : -1;

  // At weight 1/2 every b_n is scaled by p to keep the arithmetic integral.
  mpz_class middle_factor = 1;
  mpz_class last_factor = 1;
  mpz_class lead_factor = weight_half ? mpz_class(p) : mpz_class(1);
  if (!weight_half) {
    mpz_ui_pow_ui(middle_factor.get_mpz_t(), p, ctx.lambda - 1);
    mpz_ui_pow_ui(last_factor.get_mpz_t(), p, ctx.weight_num - 2);
  }

  HeckeImage out;
  out.denominator = weight_half ? static_cast<unsigned long>(p) : 1UL;
  out.numerators.resize(length);
  for (std::size_t n = 0; n < length; ++n) {
    mpz_class& b = out.numerators[n];
    b = a[p2 * n];
    if (weight_half) b *= lead_factor;
    if (chi_p != 0 && sgn(a[n]) != 0) {
      const int symbol = kronecker(middle_sign * static_cast<std::int64_t>(n), static_cast<std::int64_t>(p));
      if (symbol != 0) {
        const mpz_class term = middle_factor * a[n];
        if (chi_p * symbol > 0) {
          b += term;
        } else {
          b -= term;
        }
      }
    }
    if (chi_p2 != 0 && n % p2 == 0) b += last_factor * a[n / p2];
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::eigenform_certified: return "eigenform_certified";
    case Verdict::eigenform_up_to_cap: return "eigenform_up_to_cap";
    case Verdict::not_eigenform: return "not_eigenform";
    case Verdict::not_applicable: return "not_applicable";
  }
  throw std::logic_error("unknown verdict");
}

namespace {

constexpr std::size_t kFirstStagePrecision = std::size_t{1} << 13;
constexpr std::size_t kStageGrowth = 8;

struct PrimeState {
  std::uint64_t prime = 0;
  bool have_eigenvalue = false;
  bool complete = false;
};

}  // namespace

EigenReport eigen_check(const EtaQuotient& f, std::optional<std::uint64_t> prime_cap) {
  return eigen_check(f, EigenCheckOptions{.prime_cap = prime_cap});
}

EigenReport eigen_check(const EtaQuotient& f, const EigenCheckOptions& options) {
  const std::optional<std::uint64_t>& prime_cap = options.prime_cap;
  EigenReport report{.quotient = f, .invariants = invariants(f)};
  const ModularInvariants& inv = report.invariants;
  if (!inv.half_integral()) throw DomainError("eigen_check: integral weight is out of scope");
  if (inv.level % 4 != 0) {
    report.verdict = Verdict::not_applicable;
    report.note = "level not divisible by 4";
    return report;
  }

  const HeckeContext ctx = make_context(inv);
  report.sturm = ctx.sturm;
  report.purkait = ctx.purkait;

  std::uint64_t bound = 0;
  bool covers_purkait = false;
  if (ctx.purkait) {
    const auto floor_r = static_cast<std::uint64_t>(std::max<std::int64_t>(ctx.purkait->floor(), 0));
    bound = prime_cap ? std::min(*prime_cap, floor_r) : floor_r;
    covers_purkait = !prime_cap || *prime_cap >= floor_r;
  } else {
    bound = prime_cap.value_or(kDefaultPrimeCap);
  }
  report.prime_cap_used = bound;

  std::vector<PrimeState> states;
  report.skipped_level_primes = options.skip_level_primes;
  for (std::uint64_t p : primes_up_to(bound)) {
    if (options.skip_level_primes && inv.level % p == 0) continue;
    states.push_back({.prime = p});
  }
  report.primes_checked.reserve(states.size());
  for (const auto& st : states) {
    report.primes_checked.push_back({.prime = st.prime, .divides_level = inv.level % st.prime == 0});
  }

  const std::size_t s = ctx.sturm;
  const std::size_t v = inv.valuation;
  const std::size_t checked = s + 1;  // indices 0..s
  std::size_t full = v + 1;
  if (!states.empty()) full = std::max<std::size_t>(full, states.back().prime * states.back().prime * checked);

  // Failures usually show at small indices, so grow the expansion in stages
  // and stop at the first counterexample.
  std::size_t precision = std::min(full, kFirstStagePrecision);
  bool all_complete = states.empty();
  while (!all_complete) {
    const QSeries series = q_expansion(f, precision);
    const auto a = series.coefficients();
    if (a[v] != 1) throw std::logic_error("eta expansion must start with a_v = 1");

    all_complete = true;
    for (std::size_t i = 0; i < states.size(); ++i) {
      PrimeState& st = states[i];
      if (st.complete) continue;
      const std::uint64_t p2 = st.prime * st.prime;
      const std::size_t length = std::min<std::size_t>(precision / p2, checked);
      if (length <= v) {
        all_complete = false;
        continue;
      }
      const HeckeImage image = apply_tp2(a.first(length * p2), st.prime, ctx);
      const mpz_class& lead = image.numerators[v];
      report.primes_checked[i].eigenvalue = image.value(v);
      st.have_eigenvalue = true;
      for (std::size_t n = 0; n < length; ++n) {
        // b_n * a_v == b_v * a_n with a_v = 1.
        if (image.numerators[n] != lead * a[n]) {
          report.verdict = Verdict::not_eigenform;
          report.witness = Witness{st.prime, n};
          std::erase_if(report.primes_checked, [&](const PrimeEigenvalue& pe) {
            const auto it = std::find_if(states.begin(), states.end(),
                                         [&](const PrimeState& x) { return x.prime == pe.prime; });
            return !it->have_eigenvalue;
          });
          return report;
        }
      }
      if (length == checked) {
        st.complete = true;
      } else {
        all_complete = false;
      }
    }
    if (precision == full) break;
    precision = std::min(full, precision * kStageGrowth);
  }
  if (!all_complete) throw std::logic_error("eigen_check ended with unchecked primes");

  if (ctx.purkait && covers_purkait && !options.skip_level_primes) {
    report.verdict = Verdict::eigenform_certified;
    if (states.empty()) {
      report.vacuous = true;
      report.note = "vacuous certification: no prime p <= R = " + ctx.purkait->to_string();
    }
  } else {
    report.verdict = Verdict::eigenform_up_to_cap;
    report.note = options.skip_level_primes ? "primes dividing the level were skipped"
                  : ctx.purkait ? "prime cap " + std::to_string(bound) + " is below R = " + ctx.purkait->to_string()
                              : "weight 1/2: Purkait bound needs k >= 3, checked up to the prime cap only";
  }
  if (std::any_of(report.primes_checked.begin(), report.primes_checked.end(),
                  [](const PrimeEigenvalue& pe) { return pe.divides_level; })) {
    if (!report.note.empty()) report.note += "; ";
    report.note += "eigenvalues at p | N extend Koblitz's formula beyond p not dividing N";
  }
  return report;
}

}  // namespace etaeigen
