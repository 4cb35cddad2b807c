#pragma once

#include <cstdint>

#include "pantsbd/pants.hpp"

namespace pantsbd::closed_form {

/// m!/(p!(m-p)!) for 0 <= p <= m, and 0 for any other p.
std::int64_t binom_ext(int m, int p);

// Wedge factors of the Fuchsian coordinates written as binomial
// (Toeplitz and bordered) determinants in alpha, beta, gamma. Each factor is
// evaluated with the generic determinant kernel; no product formulas.

/// X for T0 = (inf, 1, 0): the q x q determinant with entries
/// C(p+r, p - j + i); 1 when q = 0.
Scalar x_t0(int p, int q, int r, Backend backend);

/// X for T1 = (inf, 0, -beta gamma): (-1)^{q(r+1)} times the r x r
/// determinant with entries C(p+q, p - j + i) (-beta gamma)^{q - i + j};
/// (-1)^q when r = 0.
Scalar x_t1(int p, int q, int r, const PantsParams& params);

/// Y and Y' for the leaf h_AB, 0 <= i <= n-1.
Scalar y_hab(int n, const PantsParams& params, int i);
Scalar yprime_hab(int n, const PantsParams& params, int i);

/// Y and Y' for the leaf h_BC: bordered binomial determinants in
/// beta/(beta+gamma), with the special values at i = n-1.
Scalar y_hbc(int n, const PantsParams& params, int i);
Scalar yprime_hbc(int n, const PantsParams& params, int i);

/// Y and Y' for the leaf h_CA: bordered binomial determinants in
/// alpha^2 beta gamma + 1, with Y(0) = Y'(0) = 1.
Scalar y_hca(int n, const PantsParams& params, int i);
Scalar yprime_hca(int n, const PantsParams& params, int i);

}  // namespace pantsbd::closed_form
