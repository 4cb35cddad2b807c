#include "pantsbd/scalar.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace pantsbd {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";  // U+2212

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  // Trim surrounding whitespace.
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw DomainError("empty rational literal");
  s = s.substr(first, last - first + 1);

  bool negative = false;
  if (s.rfind(kUnicodeMinus, 0) == 0) {
    negative = true;
    s.erase(0, kUnicodeMinus.size());
  } else if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }

  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ArithmeticError("division by zero");
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

// log|z| for a nonzero integer without overflowing a double.
double log_abs(const mpz_class& z) {
  signed long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::exact ? "exact" : "float";
}

Scalar::Scalar() : value_(mpq_class(0)) {}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArithmeticError("division by zero");
  mpq_class q(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::rational(mpq_class value) {
  if (value.get_den() == 0) throw ArithmeticError("division by zero");
  value.canonicalize();
  return Scalar(std::variant<mpq_class, double>(std::move(value)));
}

Scalar Scalar::floating(double value) { return Scalar(std::variant<mpq_class, double>(value)); }

Scalar Scalar::integer(std::int64_t value, Backend backend) {
  if (backend == Backend::exact) return rational(value);
  return floating(static_cast<double>(value));
}

Scalar Scalar::parse(std::string_view text, Backend backend) {
  if (backend == Backend::exact) return rational(parse_rational(text));
  // Rational syntax first so "1/2" works in float mode too.
  try {
    return rational(parse_rational(text)).to_backend(Backend::floating);
  } catch (const DomainError&) {
  }
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed number '" + s + "'");
  }
  if (used != s.size()) throw DomainError("malformed number '" + s + "'");
  return floating(v);
}

Backend Scalar::backend() const noexcept {
  return std::holds_alternative<mpq_class>(value_) ? Backend::exact : Backend::floating;
}

const mpq_class& Scalar::exact_value() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw ArithmeticError("exact value requested from a float scalar");
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Scalar Scalar::to_backend(Backend target) const {
  if (target == backend()) return *this;
  if (target == Backend::floating) return floating(to_double());
  const double d = std::get<double>(value_);
  if (!std::isfinite(d)) throw DomainError("non-finite value has no exact form");
  return rational(mpq_class(d));
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  const double d = std::get<double>(value_);
  return (d > 0.0) - (d < 0.0);
}

void Scalar::require_same_backend(const Scalar& rhs, const char* op) const {
  if (backend() != rhs.backend()) {
    throw ArithmeticError(std::string("mixed backends in ") + op);
  }
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  return floating(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_backend(rhs, "addition");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) += std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_backend(rhs, "subtraction");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_backend(rhs, "multiplication");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_backend(rhs, "division");
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q /= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) /= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result = one(backend());
  Scalar base = *this;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

Scalar Scalar::inverse() const { return one(backend()) / *this; }

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_backend(rhs, "comparison");
  if (const auto* q = std::get_if<mpq_class>(&lhs.value_)) {
    return *q == std::get<mpq_class>(rhs.value_);
  }
  return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_backend(rhs, "comparison");
  if (const auto* q = std::get_if<mpq_class>(&lhs.value_)) {
    const int c = cmp(*q, std::get<mpq_class>(rhs.value_));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return std::get<double>(lhs.value_) <=> std::get<double>(rhs.value_);
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str(10);
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << std::get<double>(value_);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

double log_to_float(const Scalar& value) {
  if (value.sign() <= 0) throw ArithmeticError("log of non-positive value");
  if (!value.is_exact()) return std::log(value.to_double());
  const mpq_class& q = value.exact_value();
  return log_abs(q.get_num()) - log_abs(q.get_den());
}

Scalar exact_sqrt(const Scalar& value) {
  if (value.sign() < 0) throw DomainError("square root of a negative value");
  if (!value.is_exact()) return Scalar::floating(std::sqrt(value.to_double()));
  const mpq_class& q = value.exact_value();
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    throw DomainError("square root of " + value.to_string() + " is not rational");
  }
  mpz_class num;
  mpz_class den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Scalar::rational(mpq_class(num, den));
}

}  // namespace pantsbd
