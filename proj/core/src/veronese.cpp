#include "pantsbd/veronese.hpp"

#include <cmath>
#include <string>

namespace pantsbd {

namespace {

void require_rank(int n) {
  if (n < 2) throw DomainError("n must be at least 2 (got " + std::to_string(n) + ")");
}

VecN multiply(const VecN& x, const VecN& y) {
  VecN out(x.size() + y.size() - 1, Scalar::zero(x.front().backend()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

VecN power(const Scalar& u, const Scalar& v, int k) {
  VecN out{Scalar::one(u.backend())};
  const VecN linear{u, v};
  for (int i = 0; i < k; ++i) out = multiply(out, linear);
  return out;
}

}  // namespace

VecN binary_form_product(const Scalar& u, const Scalar& v, int k, const Scalar& s,
                         const Scalar& t, int l) {
  if (k < 0 || l < 0) throw DomainError("negative exponent in binary form");
  return multiply(power(u, v, k), power(s, t, l));
}

Matrix sym_power(const Mat2& m, int n) {
  require_rank(n);
  std::vector<VecN> columns;
  columns.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    columns.push_back(binary_form_product(m.a, m.c, n - j, m.b, m.d, j - 1));
  }
  return Matrix::from_columns(columns);
}

Flag flag_curve(const ProjPoint& x, int n) {
  require_rank(n);
  const Backend bk = x.backend();
  const Scalar zero = Scalar::zero(bk);
  const Scalar one = Scalar::one(bk);
  const bool at_infinity = x.is_infinity();
  const Scalar& ws = at_infinity ? zero : one;
  const Scalar& wt = at_infinity ? one : zero;
  std::vector<VecN> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    basis.push_back(binary_form_product(x.u(), x.v(), n - i, ws, wt, i - 1));
  }
  return Flag(std::move(basis));
}

std::vector<Scalar> sym_power_eigenvalues(const Mat2& m, int n) {
  require_rank(n);
  const Scalar lambda = dominant_eigenvalue(m);
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out.push_back(lambda.pow(n - 2 * k + 1));
  return out;
}

std::vector<Scalar> eigen_ratios(const Mat2& m, int n) {
  const auto eig = sym_power_eigenvalues(m, n);
  std::vector<Scalar> out;
  out.reserve(eig.size() - 1);
  for (std::size_t k = 0; k + 1 < eig.size(); ++k) out.push_back(eig[k] / eig[k + 1]);
  return out;
}

std::vector<double> eigen_lengths(const Mat2& m, int n) {
  std::vector<double> out;
  for (const auto& r : eigen_ratios(m, n)) out.push_back(log_to_float(r));
  return out;
}

Flag stable_flag(const Mat2& m, int n) {
  require_rank(n);
  const FixedPoints fp = fixed_points(m);
  const ProjPoint& plus = fp.attracting;
  const ProjPoint& minus = fp.repelling;
  std::vector<VecN> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    basis.push_back(binary_form_product(plus.u(), plus.v(), n - k, minus.u(), minus.v(), k - 1));
  }
  return Flag(std::move(basis));
}

}  // namespace pantsbd
