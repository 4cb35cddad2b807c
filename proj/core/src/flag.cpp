#include "pantsbd/flag.hpp"

#include <utility>

#include <string>

namespace pantsbd {

namespace {

void require_same_dim(const Flag& a, const Flag& b) {
  if (a.dim() != b.dim()) throw DomainError("flag dimension mismatch");
}

std::string index_string(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Enumerates compositions of `remaining` into `slots.size() - pos` parts.
bool all_compositions_nonzero(std::span<const Flag> flags, std::vector<std::size_t>& slots,
                              std::size_t pos, std::size_t remaining) {
  if (pos + 1 == slots.size()) {
    slots[pos] = remaining;
    std::vector<VecN> vectors;
    for (std::size_t k = 0; k < flags.size(); ++k) {
      const auto head = flags[k].head(slots[k]);
      vectors.insert(vectors.end(), head.begin(), head.end());
    }
    return !wedge_det(vectors).is_zero();
  }
  for (std::size_t take = 0; take <= remaining; ++take) {
    slots[pos] = take;
    if (!all_compositions_nonzero(flags, slots, pos + 1, remaining - take)) return false;
  }
  return true;
}

}  // namespace

Flag::Flag(std::vector<VecN> basis) : basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw DomainError("flag needs at least one vector");
  for (const auto& v : basis_) {
    if (v.size() != n) throw DomainError("flag basis vector has wrong dimension");
  }
  if (wedge_det(basis_).is_zero()) throw DomainError("flag basis is linearly dependent");
}

std::span<const VecN> Flag::head(std::size_t i) const {
  if (i > basis_.size()) throw DomainError("flag index out of range");
  return std::span<const VecN>(basis_).first(i);
}

Flag Flag::transformed(const Matrix& m) const {
  std::vector<VecN> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(m * v);
  return Flag(std::move(out));
}

Flag Flag::rescaled(std::size_t i, const Scalar& factor) const {
  if (factor.is_zero()) throw DomainError("rescaling by zero");
  std::vector<VecN> out = basis_;
  for (auto& x : out.at(i)) x *= factor;
  return Flag(std::move(out));
}

Scalar wedge_det(std::span<const VecN> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != vectors.size()) {
      throw DomainError("wedge_det needs n vectors of dimension n");
    }
  }
  if (vectors.empty()) throw DomainError("wedge_det needs n vectors of dimension n");
  return determinant(Matrix::from_columns(vectors));
}

bool is_generic(std::span<const Flag> flags) {
  if (flags.empty()) throw DomainError("is_generic needs at least one flag");
  const std::size_t n = flags.front().dim();
  for (const auto& f : flags) {
    if (f.dim() != n) throw DomainError("flag dimension mismatch");
  }
  std::vector<std::size_t> slots(flags.size(), 0);
  return all_compositions_nonzero(flags, slots, 0, n);
}

bool same_flag(const Flag& f, const Flag& g) {
  require_same_dim(f, g);
  for (std::size_t i = 1; i < f.dim(); ++i) {
    std::vector<VecN> both(f.head(i).begin(), f.head(i).end());
    both.insert(both.end(), g.head(i).begin(), g.head(i).end());
    if (rank(Matrix::from_columns(both)) != i) return false;
  }
  return true;
}

Scalar triple_wedge(const Flag& e, const Flag& f, const Flag& g, int a, int b, int c) {
  require_same_dim(e, f);
  require_same_dim(e, g);
  const int n = static_cast<int>(e.dim());
  if (a < 0 || b < 0 || c < 0 || a + b + c != n) {
    throw DomainError("invalid wedge index " + index_string(a, b, c));
  }
  std::vector<VecN> vectors;
  vectors.reserve(e.dim());
  const std::pair<const Flag*, int> parts[] = {{&e, a}, {&f, b}, {&g, c}};
  for (const auto& [flag, take] : parts) {
    const auto head = flag->head(static_cast<std::size_t>(take));
    vectors.insert(vectors.end(), head.begin(), head.end());
  }
  return wedge_det(vectors);
}

Scalar triple_ratio_exp(const Flag& e, const Flag& f, const Flag& g, int p, int q, int r) {
  require_same_dim(e, f);
  require_same_dim(e, g);
  const int n = static_cast<int>(e.dim());
  if (p < 1 || q < 1 || r < 1 || p + q + r != n) {
    throw DomainError("invalid triple index " + index_string(p, q, r) + " for n=" +
                      std::to_string(n));
  }
  auto x = [&](int a, int b, int c) { return triple_wedge(e, f, g, a, b, c); };
  const Scalar num = x(p + 1, q, r - 1) * x(p, q - 1, r + 1) * x(p - 1, q + 1, r);
  const Scalar den = x(p - 1, q, r + 1) * x(p, q + 1, r - 1) * x(p + 1, q - 1, r);
  if (den.is_zero()) throw DegenerateFlagsError("triple ratio " + index_string(p, q, r));
  return num / den;
}

Scalar double_ratio_exp(const Flag& e, const Flag& f, const Flag& g, const Flag& g2, int p) {
  require_same_dim(e, f);
  require_same_dim(e, g);
  require_same_dim(e, g2);
  const int n = static_cast<int>(e.dim());
  if (p < 1 || p > n - 1) {
    throw DomainError("p out of range: p=" + std::to_string(p) + " for n=" + std::to_string(n));
  }
  auto y = [&](int i, const Flag& last) {
    std::vector<VecN> vectors(e.head(static_cast<std::size_t>(i)).begin(),
                              e.head(static_cast<std::size_t>(i)).end());
    const auto fh = f.head(static_cast<std::size_t>(n - i - 1));
    vectors.insert(vectors.end(), fh.begin(), fh.end());
    vectors.push_back(last[0]);
    return wedge_det(vectors);
  };
  const Scalar den = y(p, g2) * y(p - 1, g);
  if (den.is_zero()) throw DegenerateFlagsError("double ratio p=" + std::to_string(p));
  return -(y(p, g) * y(p - 1, g2)) / den;
}

}  // namespace pantsbd
