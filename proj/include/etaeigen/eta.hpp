#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "etaeigen/qseries.hpp"

namespace etaeigen {

/// One factor eta(scale * z)^exponent.
struct EtaTerm {
  std::uint64_t scale = 0;
  std::uint64_t exponent = 0;

  friend auto operator<=>(const EtaTerm&, const EtaTerm&) = default;
};

/// prod eta(m z)^(r_m) with positive exponents and distinct, ascending scales.
class EtaQuotient {
 public:
  /// Canonicalizes: sorts by scale and merges repeated scales.
  explicit EtaQuotient(std::vector<EtaTerm> terms);

  const std::vector<EtaTerm>& terms() const { return terms_; }

  /// sum r_m: the form has weight weight_numerator() / 2.
  std::uint64_t weight_numerator() const;
  /// sum m * r_m.
  std::uint64_t weighted_sum() const;

  /// "eta(2z)*eta(11z)^2"
  std::string to_string() const;
  /// "2:1,11:2"
  std::string to_compact() const;

  friend auto operator<=>(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  std::vector<EtaTerm> terms_;
};

/// Accepts `eta(<m>z)[^<r>] (* ...)*` or `<m>:<r>(,<m>:<r>)*`.
EtaQuotient parse_eta(std::string_view text);

/// Holds when sum m * r_m is divisible by 24; such a quotient is a cusp form.
bool is_modular(const EtaQuotient& f);

struct ModularInvariants {
  std::uint64_t weight_num = 0;       // weight is weight_num / 2
  std::uint64_t level = 0;
  std::int64_t character = 1;         // normalized discriminant, 1 = trivial
  std::uint64_t valuation = 0;        // order of vanishing at infinity
  std::uint64_t scale_lcm = 0;

  bool half_integral() const { return weight_num % 2 == 1; }
  /// "k/2"
  std::string weight_string() const;

  friend bool operator==(const ModularInvariants&, const ModularInvariants&) = default;
};

/// Weight, level, character and valuation. Throws NotModularError.
ModularInvariants invariants(const EtaQuotient& f);

/// a_0 .. a_{prec-1} of the quotient, indexed absolutely (a_n = 0 below the
/// valuation). Throws NotModularError, or DomainError when prec <= valuation.
QSeries q_expansion(const EtaQuotient& f, std::size_t prec);

}  // namespace etaeigen
