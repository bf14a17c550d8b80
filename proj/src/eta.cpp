#include "etaeigen/eta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "etaeigen/arith.hpp"
#include "etaeigen/errors.hpp"

namespace etaeigen {

EtaQuotient::EtaQuotient(std::vector<EtaTerm> terms) {
  if (terms.empty()) throw DomainError("eta quotient needs at least one factor");
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& t : terms) {
    if (t.scale == 0) throw DomainError("eta quotient scale must be positive");
    if (t.exponent == 0) throw DomainError("eta quotient exponent must be positive");
    merged[t.scale] += t.exponent;
  }
  for (const auto& [m, r] : merged) terms_.push_back({m, r});
}

std::uint64_t EtaQuotient::weight_numerator() const {
  std::uint64_t k = 0;
  for (const auto& t : terms_) k += t.exponent;
  return k;
}

std::uint64_t EtaQuotient::weighted_sum() const {
  std::uint64_t s = 0;
  for (const auto& t : terms_) s += t.scale * t.exponent;
  return s;
}

std::string EtaQuotient::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '*';
    out += "eta(" + (t.scale == 1 ? std::string() : std::to_string(t.scale)) + "z)";
    if (t.exponent != 1) out += '^' + std::to_string(t.exponent);
  }
  return out;
}

std::string EtaQuotient::to_compact() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += ',';
    out += std::to_string(t.scale) + ':' + std::to_string(t.exponent);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }
  }

  bool done() const { return pos_ == s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  bool accept(std::string_view token) {
    if (s_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::uint64_t number(std::string_view what) {
    if (peek('-')) fail(std::string(what) + " must be positive");
    std::uint64_t value = 0;
    const char* first = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), value);
    if (ec != std::errc() || ptr == first) fail("expected " + std::string(what));
    pos_ += static_cast<std::size_t>(ptr - first);
    if (value == 0) fail(std::string(what) + " must be positive");
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse eta quotient '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

EtaQuotient parse_human(Cursor& in) {
  std::vector<EtaTerm> terms;
  do {
    in.expect("eta(");
    const std::uint64_t scale = in.at_digit() ? in.number("scale") : 1;
    in.expect("z)");
    const std::uint64_t exponent = in.accept("^") ? in.number("exponent") : 1;
    terms.push_back({scale, exponent});
  } while (in.accept("*"));
  if (!in.done()) in.fail("trailing characters");
  return EtaQuotient(std::move(terms));
}

EtaQuotient parse_compact(Cursor& in) {
  std::vector<EtaTerm> terms;
  do {
    const std::uint64_t scale = in.number("scale");
    in.expect(":");
    const std::uint64_t exponent = in.number("exponent");
    terms.push_back({scale, exponent});
  } while (in.accept(","));
  if (!in.done()) in.fail("trailing characters");
  return EtaQuotient(std::move(terms));
}

}  // namespace

EtaQuotient parse_eta(std::string_view text) {
  Cursor in(text);
  if (in.done()) in.fail("empty input");
  return in.peek('e') ? parse_human(in) : parse_compact(in);
}

bool is_modular(const EtaQuotient& f) { return f.weighted_sum() % 24 == 0; }

std::string ModularInvariants::weight_string() const { return std::to_string(weight_num) + "/2"; }

namespace {

void require_modular(const EtaQuotient& f) {
  if (!is_modular(f)) {
    throw NotModularError("eta quotient " + f.to_string() + " is not modular: sum m*r_m = " +
                          std::to_string(f.weighted_sum()) + " is not divisible by 24");
  }
}

}  // namespace

ModularInvariants invariants(const EtaQuotient& f) {
  require_modular(f);
  ModularInvariants inv;
  inv.weight_num = f.weight_numerator();
  inv.valuation = f.weighted_sum() / 24;

  std::uint64_t scale_lcm = 1;
  for (const auto& t : f.terms()) scale_lcm = std::lcm(scale_lcm, t.scale);
  inv.scale_lcm = scale_lcm;

  // sum r_m / (24 m) over the common denominator 24 * lcm(m).
  const std::uint64_t common = 24 * scale_lcm;
  std::uint64_t numerator = 0;
  for (const auto& t : f.terms()) numerator += t.exponent * (scale_lcm / t.scale);
  const std::uint64_t denominator = common / std::gcd(numerator, common);
  inv.level = std::lcm(scale_lcm, denominator);

  // D = 8 prod m^r (odd weight) or (-1)^k prod m^r (even weight), kept as a
  // factorization so large products never overflow.
  std::map<std::uint64_t, unsigned> exponents;
  for (const auto& t : f.terms()) {
    for (const auto& [p, e] : factorize(t.scale)) exponents[p] += static_cast<unsigned>(e * t.exponent);
  }
  int sign = 1;
  if (inv.half_integral()) {
    exponents[2] += 3;
  } else if (inv.weight_num / 2 % 2 == 1) {
    sign = -1;
  }
  Factorization d;
  for (const auto& [p, e] : exponents) d.push_back({p, e});
  inv.character = normalize_character(sign, d);
  return inv;
}

QSeries q_expansion(const EtaQuotient& f, std::size_t prec) {
  require_modular(f);
  const std::size_t v = f.weighted_sum() / 24;
  if (prec <= v) {
    throw DomainError("q_expansion: precision " + std::to_string(prec) + " does not exceed valuation " +
                      std::to_string(v));
  }
  const std::size_t body = prec - v;
  QSeries product = QSeries::one(body);
  for (const auto& t : f.terms()) {
    product = mul(product, pow(euler_product(t.scale, body), static_cast<unsigned>(t.exponent)));
  }
  std::vector<mpz_class> coeffs(prec);
  for (std::size_t n = 0; n < body; ++n) coeffs[n + v] = product[n];
  return QSeries(std::move(coeffs));
}

}  // namespace etaeigen
