#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pantsbd/linalg.hpp"

namespace pantsbd {

/// A complete flag in R^n stored as an ordered basis (v_1, ..., v_n);
/// F^(i) is the span of the first i vectors.
class Flag {
 public:
  /// Throws DomainError unless there are n vectors of length n that are
  /// linearly independent.
  explicit Flag(std::vector<VecN> basis);

  std::size_t dim() const noexcept { return basis_.size(); }
  Backend backend() const { return basis_.front().front().backend(); }
  const VecN& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<VecN>& basis() const noexcept { return basis_; }

  /// First i basis vectors, spanning F^(i).
  std::span<const VecN> head(std::size_t i) const;

  /// The flag M·F, obtained by applying M to every basis vector.
  Flag transformed(const Matrix& m) const;

  /// Same flag with basis vector i multiplied by a nonzero factor.
  Flag rescaled(std::size_t i, const Scalar& factor) const;

 private:
  std::vector<VecN> basis_;
};

/// v_1 ∧ ... ∧ v_n under the identification b_1 ∧ ... ∧ b_n = 1, i.e. the
/// determinant of the matrix whose columns are the vectors.
Scalar wedge_det(std::span<const VecN> vectors);

/// True iff for every composition n_1 + ... + n_k = n (n_i >= 0) the
/// concatenation of the first n_i basis vectors of each flag is a basis.
bool is_generic(std::span<const Flag> flags);

/// Subspace-wise equality: F^(i) = G^(i) for every i.
bool same_flag(const Flag& f, const Flag& g);

/// X(a, b, c) = e^(a) ∧ f^(b) ∧ g^(c) with a + b + c = n; zero indices drop
/// the corresponding factor.
Scalar triple_wedge(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c);

/// Triple ratio T_pqr(E, F, G), a ratio of six triple wedges.
/// Requires p, q, r >= 1 with p + q + r = n. Throws DegenerateFlagsError when
/// a denominator vanishes.
Scalar triple_ratio_exp(const Flag& e, const Flag& f, const Flag& g, int p, int q, int r);

/// Double ratio D_p(E, F, G, G') = -(Y(p)/Y'(p)) * (Y'(p-1)/Y(p-1)) where
/// Y(i) = e^(i) ∧ f^(n-i-1) ∧ g^(1) and Y' uses g' instead of g.
/// Requires 1 <= p <= n-1.
Scalar double_ratio_exp(const Flag& e, const Flag& f, const Flag& g, const Flag& g2, int p);

}  // namespace pantsbd
