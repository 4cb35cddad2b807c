#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pantsbd/scalar.hpp"

namespace pantsbd {

/// Hyperbolic lengths of the boundary components A, B, C.
struct PantsLengths {
  double l_a = 0.0;
  double l_b = 0.0;
  double l_c = 0.0;
};

/// Coordinates (alpha, beta, gamma) of a Fuchsian pants representation.
/// Basic validity: alpha > 1 with gamma in (0, 1) and beta positive.
/// check_domain covers the remaining inequalities.
struct PantsParams {
  Scalar alpha;
  Scalar beta;
  Scalar gamma;

  Backend backend() const { return alpha.backend(); }
  bool is_valid() const;
  /// Throws DomainError naming the first violated condition.
  void validate() const;
};

/// 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  Scalar a, b, c, d;

  static Mat2 identity(Backend backend);

  Scalar det() const { return a * d - b * c; }
  Scalar trace() const { return a + d; }
  /// Inverse via the adjugate; throws ArithmeticError when singular.
  Mat2 inverse() const;
  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) = default;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Images of the generators; c = (a·b)^{-1}, so a·b·c = 1.
struct PantsRep {
  Mat2 a;
  Mat2 b;
  Mat2 c;
};

/// A point [u : v] of the projective line; infinity is [1 : 0] and a finite
/// r is [r : 1].
class ProjPoint {
 public:
  ProjPoint(Scalar u, Scalar v);
  static ProjPoint infinity(Backend backend);
  static ProjPoint finite(Scalar r);

  const Scalar& u() const noexcept { return u_; }
  const Scalar& v() const noexcept { return v_; }
  Backend backend() const { return u_.backend(); }

  bool is_infinity() const { return v_.is_zero(); }
  /// u/v; throws DomainError at infinity.
  Scalar value() const;

  /// Cross-multiplication test u1·v2 = u2·v1.
  friend bool operator==(const ProjPoint& x, const ProjPoint& y);

  std::string to_string() const;

 private:
  Scalar u_;
  Scalar v_;
};

/// alpha = e^{l_A/2}, beta = e^{(l_C - l_A)/2}, gamma = e^{-l_B/2}. Float only.
PantsParams params_from_lengths(const PantsLengths& lengths);
/// l_A = 2 log alpha, l_B = -2 log gamma, l_C = 2 log(alpha·beta).
PantsLengths lengths_from_params(const PantsParams& params);

PantsRep build_rep(const PantsParams& params);

/// [u : v] -> [m11 u + m12 v : m21 u + m22 v].
std::ostream& operator<<(std::ostream& os, const ProjPoint& x);

ProjPoint mobius_apply(const Mat2& m, const ProjPoint& x);

struct FixedPoints {
  ProjPoint attracting;
  ProjPoint repelling;
};

/// Fixed points of a hyperbolic element; the attracting one is the
/// eigenvector of the eigenvalue of larger modulus. Throws DomainError
/// "not hyperbolic" when |trace| <= 2 (or det is not 1).
FixedPoints fixed_points(const Mat2& m);

/// Eigenvalue of modulus > 1 of the lift with positive trace.
Scalar dominant_eigenvalue(const Mat2& m);

struct DomainCheck {
  std::string name;
  bool passed = false;
};

struct DomainReport {
  std::vector<DomainCheck> checks;
  bool all_passed() const;
  /// First failed check, or nullptr.
  const DomainCheck* first_failure() const;
};

/// Evaluates the fixed-point ordering inequalities and their reductions.
/// Never throws; a vanishing denominator counts as a failure.
DomainReport check_domain(const PantsParams& params);

}  // namespace pantsbd
