#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "pantsbd/errors.hpp"

namespace pantsbd {

enum class Backend { exact, floating };

std::string_view to_string(Backend backend);

/// A field element carried either as an exact normalized rational
/// (GMP numerator / positive denominator, gcd 1) or as an IEEE double.
///
/// Binary operations require both operands to share a backend and throw
/// ArithmeticError otherwise. Nothing silently promotes between backends.
class Scalar {
 public:
  /// Exact zero.
  Scalar();

  static Scalar rational(std::int64_t num, std::int64_t den = 1);
  static Scalar rational(mpq_class value);
  static Scalar floating(double value);
  /// Integer constant in the requested backend.
  static Scalar integer(std::int64_t value, Backend backend);
  static Scalar zero(Backend backend) { return integer(0, backend); }
  static Scalar one(Backend backend) { return integer(1, backend); }

  /// Parses "p/q", "p" or "-p/q" (exact), or a decimal literal when the
  /// backend is floating. A rational string read into the float backend
  /// is converted after exact parsing.
  static Scalar parse(std::string_view text, Backend backend = Backend::exact);

  Backend backend() const noexcept;
  bool is_exact() const noexcept { return backend() == Backend::exact; }

  /// Exact value; throws ArithmeticError on the float backend.
  const mpq_class& exact_value() const;
  double to_double() const;

  /// Same value re-expressed in another backend (exact -> float rounds).
  Scalar to_backend(Backend backend) const;

  bool is_zero() const;
  /// -1, 0 or +1.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Integer power; negative exponents invert (and so require a nonzero base).
  Scalar pow(int exponent) const;
  Scalar inverse() const;
  Scalar abs() const;

  /// Exact equality in the exact backend, IEEE equality in the float backend.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  /// Canonical text: "p/q" (q omitted when 1) or a 17-significant-digit decimal.
  std::string to_string() const;

 private:
  explicit Scalar(std::variant<mpq_class, double> value) : value_(std::move(value)) {}
  void require_same_backend(const Scalar& rhs, const char* op) const;

  std::variant<mpq_class, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Natural log as a double. Throws ArithmeticError for values <= 0.
double log_to_float(const Scalar& value);

/// Exact square root of a non-negative rational when it is a perfect square.
/// Float backend returns std::sqrt. Throws DomainError when no rational root
/// exists or the value is negative.
Scalar exact_sqrt(const Scalar& value);

}  // namespace pantsbd
