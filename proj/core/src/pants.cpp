#include "pantsbd/pants.hpp"

#include <cmath>
#include <ostream>

namespace pantsbd {

bool PantsParams::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

void PantsParams::validate() const {
  if (alpha.backend() != beta.backend() || alpha.backend() != gamma.backend()) {
    throw DomainError("alpha, beta, gamma must share a backend");
  }
  const Scalar one = Scalar::one(backend());
  if (!(alpha > one)) throw DomainError("alpha > 1 violated (alpha=" + alpha.to_string() + ")");
  if (!(gamma.sign() > 0 && gamma < one)) {
    throw DomainError("0 < gamma < 1 violated (gamma=" + gamma.to_string() + ")");
  }
  if (!(beta.sign() > 0)) throw DomainError("beta > 0 violated (beta=" + beta.to_string() + ")");
}

Mat2 Mat2::identity(Backend backend) {
  return {Scalar::one(backend), Scalar::zero(backend), Scalar::zero(backend),
          Scalar::one(backend)};
}

Mat2 Mat2::inverse() const {
  const Scalar dt = det();
  if (dt.is_zero()) throw ArithmeticError("division by zero");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

ProjPoint::ProjPoint(Scalar u, Scalar v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_.backend() != v_.backend()) throw ArithmeticError("mixed backends in ProjPoint");
  if (u_.is_zero() && v_.is_zero()) throw DomainError("[0 : 0] is not a projective point");
}

ProjPoint ProjPoint::infinity(Backend backend) {
  return {Scalar::one(backend), Scalar::zero(backend)};
}

ProjPoint ProjPoint::finite(Scalar r) {
  Scalar one = Scalar::one(r.backend());
  return {std::move(r), std::move(one)};
}

Scalar ProjPoint::value() const {
  if (is_infinity()) throw DomainError("point at infinity has no finite value");
  return u_ / v_;
}

bool operator==(const ProjPoint& x, const ProjPoint& y) { return x.u_ * y.v_ == y.u_ * x.v_; }

std::string ProjPoint::to_string() const { return is_infinity() ? "inf" : value().to_string(); }

std::ostream& operator<<(std::ostream& os, const ProjPoint& x) { return os << x.to_string(); }

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

PantsParams params_from_lengths(const PantsLengths& lengths) {
  if (!(lengths.l_a > 0.0) || !(lengths.l_b > 0.0) || !(lengths.l_c > 0.0)) {
    throw DomainError("boundary lengths must be positive");
  }
  PantsParams params{Scalar::floating(std::exp(lengths.l_a / 2.0)),
                     Scalar::floating(std::exp((lengths.l_c - lengths.l_a) / 2.0)),
                     Scalar::floating(std::exp(-lengths.l_b / 2.0))};
  params.validate();
  return params;
}

PantsLengths lengths_from_params(const PantsParams& params) {
  params.validate();
  return {2.0 * log_to_float(params.alpha), -2.0 * log_to_float(params.gamma),
          2.0 * log_to_float(params.alpha * params.beta)};
}

PantsRep build_rep(const PantsParams& params) {
  params.validate();
  const Scalar& al = params.alpha;
  const Scalar& be = params.beta;
  const Scalar& ga = params.gamma;
  const Backend bk = params.backend();
  Mat2 a{al, al * be * ga + al.inverse(), Scalar::zero(bk), al.inverse()};
  Mat2 b{ga, Scalar::zero(bk), -be.inverse() - ga.inverse(), ga.inverse()};
  Mat2 c = (a * b).inverse();
  return {std::move(a), std::move(b), std::move(c)};
}

ProjPoint mobius_apply(const Mat2& m, const ProjPoint& x) {
  return {m.a * x.u() + m.b * x.v(), m.c * x.u() + m.d * x.v()};
}

namespace {

// Lift of a PSL_2 element with non-negative trace.
Mat2 positive_lift(const Mat2& m) { return m.trace().sign() < 0 ? -m : m; }

void require_hyperbolic(const Mat2& m) {
  const Backend bk = m.a.backend();
  const Scalar dt = m.det();
  const bool unit_det = bk == Backend::exact
                            ? dt == Scalar::one(bk)
                            : std::fabs(dt.to_double() - 1.0) <= 1e-9;
  if (!unit_det) throw DomainError("not hyperbolic: determinant is not 1");
  if (!(m.trace().abs() > Scalar::integer(2, bk))) throw DomainError("not hyperbolic");
}

ProjPoint eigenvector(const Mat2& m, const Scalar& lambda) {
  // Rows of (M - lambda I) annihilate the eigenvector. Use the larger row:
  // in float mode the other one may be pure rounding noise.
  const Scalar r0 = m.a - lambda;
  const Scalar r1 = m.d - lambda;
  if (r0.abs() + m.b.abs() >= m.c.abs() + r1.abs()) return {m.b, -r0};
  return {-r1, m.c};
}

}  // namespace

Scalar dominant_eigenvalue(const Mat2& m) {
  require_hyperbolic(m);
  const Mat2 lift = positive_lift(m);
  const Backend bk = m.a.backend();
  const Scalar t = lift.trace();
  const Scalar root = exact_sqrt(t * t - Scalar::integer(4, bk));
  return (t + root) / Scalar::integer(2, bk);
}

FixedPoints fixed_points(const Mat2& m) {
  const Scalar big = dominant_eigenvalue(m);
  const Mat2 lift = positive_lift(m);
  const Scalar small = big.inverse();
  return {eigenvector(lift, big), eigenvector(lift, small)};
}

bool DomainReport::all_passed() const { return first_failure() == nullptr; }

const DomainCheck* DomainReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

DomainReport check_domain(const PantsParams& params) {
  DomainReport report;
  auto add = [&](std::string name, auto&& predicate) {
    bool ok = false;
    try {
      ok = predicate();
    } catch (const Error&) {
      ok = false;
    }
    report.checks.push_back({std::move(name), ok});
  };
  const Scalar& al = params.alpha;
  const Scalar& be = params.beta;
  const Scalar& ga = params.gamma;
  Backend bk = Backend::exact;
  try {
    bk = params.backend();
  } catch (const Error&) {
  }
  const Scalar zero = Scalar::zero(bk);
  const Scalar one = Scalar::one(bk);

  add("(1) repelling fixed point of a is negative",
      [&] { return (al * al * be * ga + one) / (one - al * al) < zero; });
  add("(2) repelling fixed point of b lies in (0,1)", [&] {
    const Scalar x = (ga - ga.inverse()) / (-be.inverse() - ga.inverse());
    return zero < x && x < one;
  });
  add("(3) repelling fixed point of c exceeds 1", [&] {
    return one < (al * be + al.inverse() * ga.inverse()) /
                     (al.inverse() * ga.inverse() + al.inverse() * be.inverse());
  });
  add("(4) 1/beta + 1/gamma > 0 and 1/beta + gamma > 0", [&] {
    return be.inverse() + ga.inverse() > zero && be.inverse() + ga > zero;
  });
  add("(5) alpha^2 beta > 1/beta", [&] { return al * al * be > be.inverse(); });
  add("(6) alpha > 1", [&] { return al > one; });
  add("beta > 0", [&] { return be > zero; });
  add("0 < gamma < 1", [&] { return zero < ga && ga < one; });
  return report;
}

}  // namespace pantsbd
