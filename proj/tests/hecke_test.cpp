#include "etaeigen/hecke.hpp"

#include <random>

#include "doctest.h"
#include "etaeigen/errors.hpp"
#include "oracles.hpp"

using namespace etaeigen;

namespace {

std::vector<mpz_class> expansion(const char* text, std::size_t prec) {
  const QSeries s = q_expansion(parse_eta(text), prec);
  return {s.coefficients().begin(), s.coefficients().end()};
}

HeckeContext context_for(const char* text) { return make_context(invariants(parse_eta(text))); }

// r_k(n) coefficients of theta(z)^k, theta = sum q^(n^2).
std::vector<mpz_class> theta_power(unsigned k, std::size_t prec) {
  std::vector<mpz_class> theta(prec);
  for (std::size_t m = 0; m * m < prec; ++m) theta[m * m] += m == 0 ? 1 : 2;
  std::vector<mpz_class> out(prec);
  out[0] = 1;
  for (unsigned i = 0; i < k; ++i) out = oracle::convolve(out, theta);
  return out;
}

}  // namespace

TEST_CASE("sturm_bound") {
  CHECK(sturm_bound(16, 9) == 10);
  CHECK(sturm_bound(64, 3) == 13);
  CHECK(sturm_bound(4, 1) == 1);
  CHECK_THROWS_AS(sturm_bound(0, 3), DomainError);
}

TEST_CASE("purkait_bound") {
  CHECK(purkait_m(16) == 48);
  CHECK(purkait_m(64) == 768);
  CHECK(purkait_m(4) == 3);
  CHECK(purkait_bound(16, 9) == Rational(209, 8));
  CHECK(purkait_bound(16, 9).to_double() == doctest::Approx(26.125));
  CHECK(purkait_bound(64, 3) == Rational(3329, 32));
  CHECK(purkait_bound(4, 11) == Rational(3, 2));
  CHECK_THROWS_AS(purkait_bound(16, 1), DomainError);
  CHECK_THROWS_AS(purkait_bound(16, 4), DomainError);
  CHECK_THROWS_AS(purkait_bound(18, 3), DomainError);
}

TEST_CASE("make_context") {
  const HeckeContext ctx = context_for("8:3");
  CHECK(ctx.weight_num == 3);
  CHECK(ctx.lambda == 1);
  CHECK(ctx.level == 64);
  CHECK(ctx.sturm == 13);
  CHECK(ctx.purkait == Rational(3329, 32));
  CHECK(ctx.chi(2) == 0);
  CHECK(ctx.chi(3) == 1);
  CHECK_FALSE(context_for("24:1").purkait.has_value());
  CHECK_THROWS_AS(make_context(invariants(parse_eta("1:24"))), DomainError);
}

TEST_CASE("apply_tp2 on eta(8z)^3 by hand") {
  const auto a = expansion("8:3", 300);
  const HeckeContext ctx = context_for("8:3");

  const HeckeImage t9 = apply_tp2(a, 3, ctx);
  CHECK(t9.size() == 300 / 9);
  CHECK(t9.denominator == 1);
  CHECK(t9.numerators[1] == -4);
  CHECK(t9.numerators[9] == 12);
  CHECK(t9.numerators[25] == -20);

  const HeckeImage t25 = apply_tp2(a, 5, ctx);
  CHECK(t25.numerators[1] == 6);
  CHECK(t25.numerators[9] == -18);

  // 2 | N: only a_{4n} survives.
  const HeckeImage t4 = apply_tp2(a, 2, ctx);
  for (std::size_t n = 0; n < t4.size(); ++n) CHECK(t4.numerators[n] == a[4 * n]);
}

TEST_CASE("apply_tp2 validates its inputs") {
  const HeckeContext ctx = context_for("8:3");
  const std::vector<mpz_class> a(8);
  CHECK_THROWS_AS(apply_tp2(a, 3, ctx), DomainError);
  CHECK_THROWS_AS(apply_tp2(std::vector<mpz_class>(100), 4, ctx), DomainError);
  const HeckeImage zero = apply_tp2(std::vector<mpz_class>(100), 3, ctx);
  for (const auto& b : zero.numerators) CHECK(b == 0);
}

TEST_CASE("theta powers are eigenforms with the classical eigenvalues") {
  // theta^k lies in M_{k/2}(Gamma0(4)); for k = 3, 5, 7 its eigenvalue at
  // odd p is p^(k-2) + 1. theta^9 mixes in a cusp form.
  for (unsigned k : {3u, 5u, 7u}) {
    const auto a = theta_power(k, 2000);
    const HeckeContext ctx{.weight_num = k, .lambda = (k - 1) / 2, .level = 4, .character = 1};
    for (std::uint64_t p : {3u, 5u, 7u}) {
      const HeckeImage img = apply_tp2(a, p, ctx);
      mpz_class lambda;
      mpz_ui_pow_ui(lambda.get_mpz_t(), p, k - 2);
      lambda += 1;
      for (std::size_t n = 0; n < img.size(); ++n) REQUIRE(img.numerators[n] == lambda * a[n]);
    }
  }
  const auto a9 = theta_power(9, 500);
  const HeckeContext ctx9{.weight_num = 9, .lambda = 4, .level = 4, .character = 1};
  const HeckeImage img = apply_tp2(a9, 3, ctx9);
  bool proportional = true;
  for (std::size_t n = 0; n < img.size(); ++n) proportional &= img.numerators[n] * a9[1] == img.numerators[1] * a9[n];
  CHECK_FALSE(proportional);
}

TEST_CASE("weight 1/2 keeps exact rational eigenvalues") {
  const EigenReport r = eigen_check(parse_eta("24:1"), std::uint64_t{11});
  REQUIRE(r.primes_checked.size() == 5);
  // lambda_p = chi_12(p) (1 + 1/p) for p not dividing 576.
  CHECK(r.primes_checked[2].prime == 5);
  CHECK(r.primes_checked[2].eigenvalue == mpq_class(-6, 5));
  CHECK(r.primes_checked[3].eigenvalue == mpq_class(-8, 7));
  CHECK(r.primes_checked[4].eigenvalue == mpq_class(12, 11));
  CHECK(r.primes_checked[0].divides_level);
  CHECK(r.verdict == Verdict::eigenform_up_to_cap);
}

TEST_CASE("apply_tp2 is linear") {
  std::mt19937_64 rng(99);
  for (const char* text : {"8:3", "1:2,4:2,14:1", "24:1", "1:6,2:9"}) {
    const HeckeContext ctx = context_for(text);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t len = 200 + rng() % 300;
      std::vector<mpz_class> f(len);
      std::vector<mpz_class> g(len);
      std::vector<mpz_class> combo(len);
      const long alpha = static_cast<long>(rng() % 21) - 10;
      const long beta = static_cast<long>(rng() % 21) - 10;
      for (std::size_t i = 0; i < len; ++i) {
        f[i] = static_cast<long>(rng() % 2001) - 1000;
        g[i] = static_cast<long>(rng() % 2001) - 1000;
        combo[i] = alpha * f[i] + beta * g[i];
      }
      for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const HeckeImage tf = apply_tp2(f, p, ctx);
        const HeckeImage tg = apply_tp2(g, p, ctx);
        const HeckeImage tc = apply_tp2(combo, p, ctx);
        for (std::size_t n = 0; n < tc.size(); ++n) {
          REQUIRE(tc.numerators[n] == alpha * tf.numerators[n] + beta * tg.numerators[n]);
        }
      }
    }
  }
}

TEST_CASE("Hecke operators commute on certified eigenforms") {
  for (const char* text : {"8:3", "1:2,4:2,14:1", "2:2,4:1,8:2", "2:2,4:5", "2:6,4:3", "2:10,4:1"}) {
    const auto a = expansion(text, 30000);
    const HeckeContext ctx = context_for(text);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      for (std::uint64_t q : {2u, 3u, 5u, 7u}) {
        if (q <= p) continue;
        const HeckeImage tp = apply_tp2(a, p, ctx);
        const HeckeImage tq = apply_tp2(a, q, ctx);
        const HeckeImage tqp = apply_tp2(tp.numerators, q, ctx);
        const HeckeImage tpq = apply_tp2(tq.numerators, p, ctx);
        const std::size_t overlap = std::min(tqp.size(), tpq.size());
        REQUIRE(overlap > 0);
        for (std::size_t n = 0; n < overlap; ++n) REQUIRE(tqp.numerators[n] == tpq.numerators[n]);
      }
    }
  }
}

TEST_CASE("eigen_check") {
  SUBCASE("eta(8z)^3 is certified through R") {
    const EigenReport r = eigen_check(parse_eta("8:3"), std::uint64_t{105});
    CHECK(r.verdict == Verdict::eigenform_certified);
    CHECK(r.sturm == 13);
    CHECK(r.purkait == Rational(3329, 32));
    CHECK(r.prime_cap_used == 104);
    REQUIRE(r.primes_checked.size() == 27);
    CHECK(r.primes_checked[0].prime == 2);
    CHECK(r.primes_checked[0].divides_level);
    CHECK(r.primes_checked[0].eigenvalue == 0);
    CHECK(r.primes_checked[1].eigenvalue == -4);
    CHECK(r.primes_checked[2].eigenvalue == 6);
    CHECK(r.primes_checked.back().prime == 103);
    CHECK_FALSE(r.witness.has_value());
  }

  SUBCASE("a cap below R gives eigenform_up_to_cap") {
    const EigenReport r = eigen_check(parse_eta("8:3"), std::uint64_t{7});
    CHECK(r.verdict == Verdict::eigenform_up_to_cap);
    CHECK(r.primes_checked.size() == 4);
    CHECK(r.primes_checked[3].eigenvalue == -8);
  }

  SUBCASE("no cap means every prime up to R") {
    CHECK(eigen_check(parse_eta("8:3"), std::nullopt).verdict == Verdict::eigenform_certified);
  }

  SUBCASE("vacuous certification at level 4") {
    const EigenReport r = eigen_check(parse_eta("1:2,2:7,4:2"), std::uint64_t{30});
    CHECK(r.verdict == Verdict::eigenform_certified);
    CHECK(r.vacuous);
    CHECK(r.primes_checked.empty());
    CHECK(r.purkait == Rational(3, 2));
  }

  SUBCASE("weight 1/2 stops at the cap") {
    const EigenReport r = eigen_check(parse_eta("24:1"), std::uint64_t{30});
    CHECK(r.verdict == Verdict::eigenform_up_to_cap);
    CHECK_FALSE(r.purkait.has_value());
    CHECK(r.prime_cap_used == 30);
  }

  SUBCASE("a non-eigenform carries a witness that really fails") {
    const EtaQuotient f = parse_eta("2:4,16:1");
    const EigenReport r = eigen_check(f, std::uint64_t{30});
    REQUIRE(r.verdict == Verdict::not_eigenform);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->prime == 3);
    CHECK(r.witness->index == 3);
    const auto a = oracle::eta_expansion({{2, 4}, {16, 1}}, 100);
    const HeckeImage img = apply_tp2(a, 3, make_context(r.invariants));
    CHECK(img.numerators[3] * a[1] != img.numerators[1] * a[3]);
  }

  SUBCASE("skipping primes that divide the level") {
    const EigenReport all = eigen_check(parse_eta("1:2,22:1"), std::uint64_t{30});
    CHECK(all.verdict == Verdict::not_eigenform);
    CHECK(all.witness->prime == 2);
    const EigenReport koblitz =
        eigen_check(parse_eta("1:2,22:1"), EigenCheckOptions{.prime_cap = 30, .skip_level_primes = true});
    CHECK(koblitz.verdict == Verdict::eigenform_up_to_cap);
    CHECK(koblitz.skipped_level_primes);
    for (const auto& pe : koblitz.primes_checked) CHECK(176 % pe.prime != 0);
    // Never certified while primes are skipped.
    CHECK(eigen_check(parse_eta("8:3"), EigenCheckOptions{.skip_level_primes = true}).verdict ==
          Verdict::eigenform_up_to_cap);
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(eigen_check(parse_eta("1:2,4:5"), std::uint64_t{30}), NotModularError);
    CHECK_THROWS_AS(eigen_check(parse_eta("1:24"), std::uint64_t{30}), DomainError);
  }

  SUBCASE("deterministic") {
    const EigenReport a = eigen_check(parse_eta("6:2,12:1"), std::uint64_t{30});
    const EigenReport b = eigen_check(parse_eta("6:2,12:1"), std::uint64_t{30});
    REQUIRE(a.primes_checked.size() == b.primes_checked.size());
    for (std::size_t i = 0; i < a.primes_checked.size(); ++i) {
      CHECK(a.primes_checked[i].eigenvalue == b.primes_checked[i].eigenvalue);
    }
    CHECK(a.verdict == b.verdict);
    CHECK(a.note == b.note);
  }
}

TEST_CASE("to_string(Verdict)") {
  CHECK(to_string(Verdict::eigenform_certified) == "eigenform_certified");
  CHECK(to_string(Verdict::not_applicable) == "not_applicable");
}
