#include "pantsbd/closed_form.hpp"

#include <string>

#include "pantsbd/linalg.hpp"

namespace pantsbd::closed_form {

namespace {

Scalar binom(int m, int p, Backend bk) { return Scalar::integer(binom_ext(m, p), bk); }

Scalar sign_power(long long exponent, Backend bk) {
  return Scalar::integer(exponent % 2 == 0 ? 1 : -1, bk);
}

void require_y_index(int n, int i) {
  if (n < 2) throw DomainError("n must be at least 2");
  if (i < 0 || i > n - 1) throw DomainError("Y index out of range: " + std::to_string(i));
}

}  // namespace

std::int64_t binom_ext(int m, int p) {
  if (m < 0) throw DomainError("binom_ext requires m >= 0");
  if (p < 0 || p > m) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(p));
  if (!out.fits_slong_p()) throw DomainError("binomial coefficient overflows 64 bits");
  return out.get_si();
}

Scalar x_t0(int p, int q, int r, Backend bk) {
  if (p < 0 || q < 0 || r < 0) throw DomainError("negative X index");
  if (q == 0) return Scalar::one(bk);
  Matrix m(static_cast<std::size_t>(q), static_cast<std::size_t>(q), bk);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) m(i, j) = binom(p + r, p - j + i, bk);
  }
  return determinant(std::move(m));
}

Scalar x_t1(int p, int q, int r, const PantsParams& params) {
  if (p < 0 || q < 0 || r < 0) throw DomainError("negative X index");
  const Backend bk = params.backend();
  if (r == 0) return sign_power(q, bk);
  const Scalar t = -(params.beta * params.gamma);
  Matrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(r), bk);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const int k = p - j + i;
      // Entries with a vanishing binomial may carry a negative power.
      m(i, j) = (k < 0 || k > p + q) ? Scalar::zero(bk) : binom(p + q, k, bk) * t.pow(q - i + j);
    }
  }
  return sign_power(static_cast<long long>(q) * (r + 1), bk) * determinant(std::move(m));
}

Scalar y_hab(int n, const PantsParams& params, int i) {
  require_y_index(n, i);
  const Backend bk = params.backend();
  return binom(n - 1, i, bk) * (params.beta * params.gamma).pow(n - i - 1);
}

Scalar yprime_hab(int n, const PantsParams& params, int i) {
  require_y_index(n, i);
  const Backend bk = params.backend();
  return sign_power(n - i - 1, bk) * binom(n - 1, i, bk);
}

Scalar y_hbc(int n, const PantsParams& params, int i) {
  require_y_index(n, i);
  const Backend bk = params.backend();
  const Scalar s = params.beta / (params.beta + params.gamma);
  if (i == n - 1) return sign_power(n - 1, bk) * binom(n - 1, 0, bk) * s.pow(n - 1);
  // (n-i) x (n-i): Toeplitz block C(i+1, row - col) bordered by C(n-1, row) s^{n-1-row}.
  const int size = n - i;
  Matrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size), bk);
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col + 1 < size; ++col) m(row, col) = binom(i + 1, row - col, bk);
    m(row, size - 1) = binom(n - 1, row, bk) * s.pow(n - 1 - row);
  }
  return sign_power(static_cast<long long>(n - i) * i, bk) * determinant(std::move(m));
}

Scalar yprime_hbc(int n, const PantsParams& params, int i) {
  require_y_index(n, i);
  const Backend bk = params.backend();
  if (i == n - 1) return sign_power(n - 1, bk);
  const int size = n - i - 1;
  Matrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size), bk);
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col < size; ++col) m(row, col) = binom(i + 1, 1 + row - col, bk);
  }
  return sign_power(static_cast<long long>(n) * i + n + 1, bk) * determinant(std::move(m));
}

Scalar y_hca(int n, const PantsParams& params, int i) {
  require_y_index(n, i);
  const Backend bk = params.backend();
  if (i == 0) return Scalar::one(bk);
  const Scalar t = params.alpha * params.alpha * params.beta * params.gamma + Scalar::one(bk);
  // (i+1) x (i+1): C(n-i, n-i-1+row-col) bordered by C(n-1, n-i-1+row) t^{i-row}.
  const int size = i + 1;
  Matrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size), bk);
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col + 1 < size; ++col) {
      m(row, col) = binom(n - i, n - i - 1 + row - col, bk);
    }
    m(row, size - 1) = binom(n - 1, n - i - 1 + row, bk) * t.pow(i - row);
  }
  return sign_power(static_cast<long long>(n) * i, bk) * determinant(std::move(m));
}

Scalar yprime_hca(int n, const PantsParams& params, int i) {
  require_y_index(n, i);
  const Backend bk = params.backend();
  if (i == 0) return Scalar::one(bk);
  Matrix m(static_cast<std::size_t>(i), static_cast<std::size_t>(i), bk);
  for (int row = 0; row < i; ++row) {
    for (int col = 0; col < i; ++col) m(row, col) = binom(n - i, n - i - 1 + row - col, bk);
  }
  return sign_power(static_cast<long long>(n) * i, bk) * determinant(std::move(m));
}

}  // namespace pantsbd::closed_form
