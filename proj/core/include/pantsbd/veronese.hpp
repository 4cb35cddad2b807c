#pragma once

#include <vector>

#include "pantsbd/flag.hpp"
#include "pantsbd/pants.hpp"

namespace pantsbd {

/// Matrix of the irreducible n-dimensional representation of SL_2 on
/// degree n-1 binary forms, in the basis X^{n-1}, X^{n-2}Y, ..., Y^{n-1}.
/// Column j holds the expansion of (aX + cY)^{n-j} (bX + dY)^{j-1}
/// (1-based j), i.e. the substitution X -> aX + cY, Y -> bX + dY.
Matrix sym_power(const Mat2& m, int n);

/// Coefficient vector of (uX + vY)^k · (sX + tY)^l, padded to nothing:
/// the result has k + l + 1 entries.
VecN binary_form_product(const Scalar& u, const Scalar& v, int k, const Scalar& s,
                         const Scalar& t, int l);

/// Veronese flag at x = [u : v]: the i-th basis vector is
/// (uX + vY)^{n-i} · w^{i-1} with w = X for finite x and w = Y at infinity,
/// so the first i vectors span the forms divisible by (uX + vY)^{n-i}.
Flag flag_curve(const ProjPoint& x, int n);

/// Eigenvalues of the lift of sym_power(m, n) with positive eigenvalues,
/// in decreasing order: lambda^{n-1}, lambda^{n-3}, ..., lambda^{-(n-1)}.
std::vector<Scalar> sym_power_eigenvalues(const Mat2& m, int n);

/// Exponentiated length functions lambda_k / lambda_{k+1}, k = 1..n-1.
/// All equal lambda^2 for an irreducible image.
std::vector<Scalar> eigen_ratios(const Mat2& m, int n);

/// log(lambda_k / lambda_{k+1}) as doubles.
std::vector<double> eigen_lengths(const Mat2& m, int n);

/// Stable flag of the lift of sym_power(m, n): the k-th vector is the
/// eigenvector L+^{n-k} L-^{k-1} built from the attracting (L+) and
/// repelling (L-) eigenlines of m, ordered by decreasing eigenvalue.
Flag stable_flag(const Mat2& m, int n);

}  // namespace pantsbd
