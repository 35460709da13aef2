#include "hyperramsey/probability.hpp"

#include <cctype>
#include <string>

#include "hyperramsey/errors.hpp"

namespace hyperramsey {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

BigInt pow10(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

// Enclosure of base^(num/den) for base >= 1, num >= 0, den >= 1.
Enclosure root_enclosure(std::uint64_t base, unsigned long num, unsigned long den,
                         unsigned precision_bits) {
  BigInt radicand;
  mpz_ui_pow_ui(radicand.get_mpz_t(), base, num);
  // floor(base^(num/den) * 2^P) = floor((base^num * 2^(P*den))^(1/den))
  mpz_mul_2exp(radicand.get_mpz_t(), radicand.get_mpz_t(), precision_bits * den);
  BigInt root;
  const int exact = mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), den);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, precision_bits);
  Rational lower(root, scale);
  if (exact) return {lower, lower};
  return {lower, Rational(root + 1, scale)};
}

}  // namespace

Rational parse_decimal_or_fraction(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParameterError("empty number");
  if (s.find('/') != std::string::npos) return Rational::parse(s);

  std::string mantissa = s;
  long exponent = 0;
  if (const auto epos = s.find_first_of("eE"); epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(epos + 1), &used);
      if (used != s.size() - epos - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw ParameterError("bad exponent in '" + s + "'");
    }
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw ParameterError("not a number: '" + s + "'");
    }
  }
  if (digits.empty()) throw ParameterError("not a number: '" + s + "'");
  BigInt num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - frac_digits;
  if (shift >= 0) return Rational(num * pow10(static_cast<unsigned>(shift)));
  return Rational(num, pow10(static_cast<unsigned>(-shift)));
}

Probability Probability::exact(Rational value) {
  if (value.sign() < 0 || value > Rational(1)) {
    throw ParameterError("probability " + value.to_string() + " outside [0,1]");
  }
  return Probability(false, std::move(value));
}

Probability Probability::power_of_n(Rational exponent) {
  if (exponent.sign() > 0) throw ParameterError("n^x with x > 0 exceeds 1");
  return Probability(true, std::move(exponent));
}

Probability Probability::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.size() >= 2 && (s[0] == 'n' || s[0] == 'N') && s[1] == '^') {
    std::string exp = s.substr(2);
    if (exp.size() >= 2 && exp.front() == '(' && exp.back() == ')') exp = exp.substr(1, exp.size() - 2);
    return power_of_n(parse_decimal_or_fraction(exp));
  }
  return exact(parse_decimal_or_fraction(s));
}

Enclosure Probability::enclose(std::uint64_t n, unsigned precision_bits) const {
  if (!power_) return {value_, value_};
  if (n == 0) throw ParameterError("n^x needs n >= 1");
  // value_ <= 0, so p = 1 / n^(|a|/b)
  const BigInt a = -value_.numerator();
  const BigInt b = value_.denominator();
  if (!a.fits_ulong_p() || !b.fits_ulong_p()) throw ParameterError("exponent too large");
  const Enclosure inv = root_enclosure(n, a.get_ui(), b.get_ui(), precision_bits);
  return {Rational(1) / inv.upper, Rational(1) / inv.lower};
}

double Probability::to_double(std::uint64_t n) const {
  return enclose(n).lower.to_double();
}

std::string Probability::to_string() const {
  return power_ ? "n^" + value_.to_string() : value_.to_string();
}

}  // namespace hyperramsey
