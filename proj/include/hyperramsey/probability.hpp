#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hyperramsey/rational.hpp"

namespace hyperramsey {

/// Closed interval [lower, upper] of rationals known to contain a real value.
struct Enclosure {
  Rational lower;
  Rational upper;

  bool is_exact() const { return lower == upper; }
  double midpoint() const { return ((lower + upper) / Rational(2)).to_double(); }
};

/// An edge probability given either as an exact rational or as n^x for a
/// rational exponent x, resolved once the vertex count n is known.
///
/// Accepted text forms: "0.25", "1e-6", "3/7", "n^-4", "n^-2.75", "n^(-11/4)".
class Probability {
 public:
  Probability() = default;

  static Probability exact(Rational value);
  static Probability power_of_n(Rational exponent);
  static Probability parse(std::string_view text);

  bool is_power_of_n() const noexcept { return power_; }
  /// The exact value, or the exponent for the n^x form.
  const Rational& rational() const noexcept { return value_; }

  /// Interval containing p at vertex count n. Exact (lower == upper) for the
  /// rational form and for n^x whenever the root is rational; otherwise the
  /// width is at most 2^-precision_bits relative to the value.
  /// Throws ParameterError if the value lies outside [0, 1].
  Enclosure enclose(std::uint64_t n, unsigned precision_bits = 256) const;

  /// Double value used by the samplers. Computed from the lower end of the
  /// enclosure with GMP's truncating conversion, so it is platform independent.
  double to_double(std::uint64_t n) const;

  /// Canonical text: "a/b" or "n^a/b".
  std::string to_string() const;

 private:
  Probability(bool power, Rational value) : power_(power), value_(std::move(value)) {}

  bool power_ = false;
  Rational value_{0};
};

/// Parses a decimal with optional exponent ("2.75", "-1e-6") or "a/b" into
/// an exact rational.
Rational parse_decimal_or_fraction(std::string_view text);

}  // namespace hyperramsey
