#include "pantsbd/coordinates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pantsbd/closed_form.hpp"
#include "pantsbd/veronese.hpp"

namespace pantsbd {

namespace {

void require_rank(int n) {
  if (n < 2) throw DomainError("n must be at least 2 (got " + std::to_string(n) + ")");
}

void require_shear_index(int n, int p) {
  require_rank(n);
  if (p < 1 || p > n - 1) {
    throw DomainError("p out of range: p=" + std::to_string(p) + " for n=" + std::to_string(n));
  }
}

void require_triple(int n, TripleIndex idx) {
  require_rank(n);
  if (idx.p < 1 || idx.q < 1 || idx.r < 1 || idx.p + idx.q + idx.r != n) {
    throw DomainError("invalid triple index (" + idx.key() + ") for n=" + std::to_string(n));
  }
}

InvariantValue positive(Scalar value, const std::string& what) {
  if (value.sign() <= 0) throw PositivityViolation(what + " = " + value.to_string());
  return {std::move(value)};
}

std::string shear_label(Leaf leaf, int p) {
  return "sigma_" + std::to_string(p) + "(" + std::string(name(leaf)) + ")";
}

std::string tau_label(Triangle t, TripleIndex idx) {
  return "tau_" + idx.key() + "(" + std::string(name(t)) + ")";
}

// -(Y(p)/Y'(p)) * (Y'(p-1)/Y(p-1)) from closed-form Y factors.
template <typename YFn, typename YpFn>
Scalar double_ratio_from(YFn y, YpFn yp, int p) {
  const Scalar den = yp(p) * y(p - 1);
  if (den.is_zero()) throw DegenerateFlagsError("closed-form Y denominator at p=" + std::to_string(p));
  return -(y(p) * yp(p - 1)) / den;
}

template <typename XFn>
Scalar triple_ratio_from(XFn x, TripleIndex idx) {
  const auto [p, q, r] = idx;
  const Scalar num = x(p + 1, q, r - 1) * x(p, q - 1, r + 1) * x(p - 1, q + 1, r);
  const Scalar den = x(p - 1, q, r + 1) * x(p, q + 1, r - 1) * x(p + 1, q - 1, r);
  if (den.is_zero()) throw DegenerateFlagsError("closed-form X denominator at (" + idx.key() + ")");
  return num / den;
}

std::array<Flag, 3> rotated_triangle_flags(int n, const PantsParams& params, Triangle triangle,
                                           int vertex) {
  const auto v = triangle_vertices(triangle, params);
  auto at = [&](int k) { return flag_curve(v[static_cast<std::size_t>((vertex + k) % 3)], n); };
  return {at(0), at(1), at(2)};
}

}  // namespace

std::optional<double> InvariantValue::log_value() const {
  if (exp_value.sign() <= 0) return std::nullopt;
  return log_to_float(exp_value);
}

std::string TripleIndex::key() const {
  return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r);
}

std::vector<TripleIndex> triple_indices(int n) {
  std::vector<TripleIndex> out;
  for (int p = 1; p <= n - 2; ++p) {
    for (int q = 1; p + q <= n - 1; ++q) out.push_back({p, q, n - p - q});
  }
  return out;
}

std::size_t CoordinateVector::entry_count() const {
  std::size_t count = 0;
  for (const auto& [leaf, values] : sigma) count += values.size();
  for (const auto& [tri, values] : tau) count += values.size();
  return count;
}

std::size_t CoordinateVector::expected_count(int n) {
  const auto m = static_cast<std::size_t>(n);
  return m * m - 1;
}

const InvariantValue& CoordinateVector::sigma_at(Leaf leaf, int p) const {
  const auto it = sigma.find(leaf);
  if (it == sigma.end() || p < 1 || static_cast<std::size_t>(p) > it->second.size()) {
    throw DomainError("missing entry " + shear_label(leaf, p));
  }
  return it->second[static_cast<std::size_t>(p - 1)];
}

const InvariantValue& CoordinateVector::tau_at(Triangle triangle, TripleIndex index) const {
  const auto it = tau.find(triangle);
  if (it != tau.end()) {
    const auto jt = it->second.find(index);
    if (jt != it->second.end()) return jt->second;
  }
  throw DomainError("missing entry " + tau_label(triangle, index));
}

InvariantValue triangle_invariant_generic(int n, const PantsParams& params, Triangle triangle,
                                          TripleIndex idx) {
  require_triple(n, idx);
  const auto flags = rotated_triangle_flags(n, params, triangle, 0);
  return positive(triple_ratio_exp(flags[0], flags[1], flags[2], idx.p, idx.q, idx.r),
                  tau_label(triangle, idx));
}

InvariantValue shearing_invariant_generic(int n, const PantsParams& params, Leaf leaf, int p) {
  require_shear_index(n, p);
  const LeafQuadruple quad = leaf_quadruple(leaf, params);
  return positive(double_ratio_exp(flag_curve(quad.terminal, n), flag_curve(quad.start, n),
                                   flag_curve(quad.left, n), flag_curve(quad.right, n), p),
                  shear_label(leaf, p));
}

InvariantValue cf_sigma_hab(int n, const PantsParams& params, int p) {
  require_shear_index(n, p);
  params.validate();
  return positive(
      double_ratio_from([&](int i) { return closed_form::y_hab(n, params, i); },
                        [&](int i) { return closed_form::yprime_hab(n, params, i); }, p),
      shear_label(Leaf::h_ab, p));
}

InvariantValue cf_sigma_hbc(int n, const PantsParams& params, int p) {
  require_shear_index(n, p);
  params.validate();
  return positive(
      double_ratio_from([&](int i) { return closed_form::y_hbc(n, params, i); },
                        [&](int i) { return closed_form::yprime_hbc(n, params, i); }, p),
      shear_label(Leaf::h_bc, p));
}

InvariantValue cf_sigma_hca(int n, const PantsParams& params, int p) {
  require_shear_index(n, p);
  params.validate();
  return positive(
      double_ratio_from([&](int i) { return closed_form::y_hca(n, params, i); },
                        [&](int i) { return closed_form::yprime_hca(n, params, i); }, p),
      shear_label(Leaf::h_ca, p));
}

InvariantValue cf_tau_t0(int n, const PantsParams& params, TripleIndex idx) {
  require_triple(n, idx);
  params.validate();
  const Backend bk = params.backend();
  return positive(
      triple_ratio_from([&](int p, int q, int r) { return closed_form::x_t0(p, q, r, bk); }, idx),
      tau_label(Triangle::t0, idx));
}

InvariantValue cf_tau_t1(int n, const PantsParams& params, TripleIndex idx) {
  require_triple(n, idx);
  params.validate();
  return positive(
      triple_ratio_from([&](int p, int q, int r) { return closed_form::x_t1(p, q, r, params); },
                        idx),
      tau_label(Triangle::t1, idx));
}

InvariantValue cf_sigma(int n, const PantsParams& params, Leaf leaf, int p) {
  switch (leaf) {
    case Leaf::h_ab: return cf_sigma_hab(n, params, p);
    case Leaf::h_bc: return cf_sigma_hbc(n, params, p);
    case Leaf::h_ca: return cf_sigma_hca(n, params, p);
  }
  throw DomainError("unknown leaf");
}

InvariantValue cf_tau(int n, const PantsParams& params, Triangle triangle, TripleIndex idx) {
  return triangle == Triangle::t0 ? cf_tau_t0(n, params, idx) : cf_tau_t1(n, params, idx);
}

CoordinateVector assemble_phi(int n, const PantsParams& params, Method method) {
  require_rank(n);
  params.validate();
  CoordinateVector coords;
  coords.n = n;
  for (Leaf leaf : kLeaves) {
    auto& values = coords.sigma[leaf];
    if (method == Method::closed_form) {
      for (int p = 1; p <= n - 1; ++p) values.push_back(cf_sigma(n, params, leaf, p));
      continue;
    }
    const LeafQuadruple quad = leaf_quadruple(leaf, params);
    const Flag e = flag_curve(quad.terminal, n);
    const Flag f = flag_curve(quad.start, n);
    const Flag g = flag_curve(quad.left, n);
    const Flag g2 = flag_curve(quad.right, n);
    for (int p = 1; p <= n - 1; ++p) {
      values.push_back(positive(double_ratio_exp(e, f, g, g2, p), shear_label(leaf, p)));
    }
  }
  for (Triangle tri : kTriangles) {
    auto& values = coords.tau[tri];
    if (method == Method::closed_form) {
      for (const auto& idx : triple_indices(n)) values.emplace(idx, cf_tau(n, params, tri, idx));
      continue;
    }
    const auto flags = rotated_triangle_flags(n, params, tri, 0);
    for (const auto& idx : triple_indices(n)) {
      values.emplace(idx, positive(triple_ratio_exp(flags[0], flags[1], flags[2], idx.p, idx.q,
                                                    idx.r),
                                   tau_label(tri, idx)));
    }
  }
  return coords;
}

const InvariantValue& tau_at_vertex(const CoordinateVector& coords, Triangle triangle, int vertex,
                                    TripleIndex idx) {
  switch (vertex) {
    case 0: return coords.tau_at(triangle, idx);
    case 1: return coords.tau_at(triangle, {idx.r, idx.p, idx.q});
    case 2: return coords.tau_at(triangle, {idx.q, idx.r, idx.p});
    default: throw DomainError("triangle vertex index must be 0, 1 or 2");
  }
}

InvariantValue boundary_sum_r(const CoordinateVector& coords, Boundary boundary, int p) {
  const int n = coords.n;
  require_shear_index(n, p);
  const auto& inc = boundary_incidence(boundary);
  Scalar product = Scalar::one(coords.sigma_at(inc.leaves[0].leaf, 1).exp_value.backend());
  for (const auto& leaf : inc.leaves) {
    product *= coords.sigma_at(leaf.leaf, leaf.toward_boundary ? p : n - p).exp_value;
  }
  for (const auto& corner : inc.corners) {
    for (int q = 1; q <= n - p - 1; ++q) {
      product *= tau_at_vertex(coords, corner.triangle, corner.vertex, {p, q, n - p - q}).exp_value;
    }
  }
  return {std::move(product)};
}

InvariantValue boundary_sum_r(int n, const PantsParams& params, Boundary boundary, int p) {
  require_shear_index(n, p);
  const auto& inc = boundary_incidence(boundary);
  Scalar product = Scalar::one(params.backend());
  for (const auto& leaf : inc.leaves) {
    product *=
        shearing_invariant_generic(n, params, leaf.leaf, leaf.toward_boundary ? p : n - p).exp_value;
  }
  for (const auto& corner : inc.corners) {
    const auto flags = rotated_triangle_flags(n, params, corner.triangle, corner.vertex);
    for (int q = 1; q <= n - p - 1; ++q) {
      product *= triple_ratio_exp(flags[0], flags[1], flags[2], p, q, n - p - q);
    }
  }
  return {std::move(product)};
}

bool PolytopeReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const PolytopeCheck* PolytopeReport::find(const std::string& check_name) const {
  for (const auto& c : checks) {
    if (c.name == check_name) return &c;
  }
  return nullptr;
}

PolytopeReport polytope_check(const CoordinateVector& coords) {
  PolytopeReport report;
  const int n = coords.n;

  {
    PolytopeCheck c{"positivity", true, ""};
    auto visit = [&](const InvariantValue& v, const std::string& label) {
      if (c.passed && v.exp_value.sign() <= 0) {
        c.passed = false;
        c.detail = label + " = " + v.exp_value.to_string();
      }
    };
    for (const auto& [leaf, values] : coords.sigma) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        visit(values[i], shear_label(leaf, static_cast<int>(i + 1)));
      }
    }
    for (const auto& [tri, values] : coords.tau) {
      for (const auto& [idx, v] : values) visit(v, tau_label(tri, idx));
    }
    report.checks.push_back(std::move(c));
  }

  {
    PolytopeCheck c{"entry_count", true, ""};
    const std::size_t expected = n >= 2 ? CoordinateVector::expected_count(n) : 0;
    bool shape_ok = n >= 2 && coords.sigma.size() == kLeaves.size() &&
                    coords.tau.size() == kTriangles.size();
    for (const auto& [leaf, values] : coords.sigma) {
      shape_ok = shape_ok && values.size() == static_cast<std::size_t>(n - 1);
    }
    const auto indices = triple_indices(n);
    for (const auto& [tri, values] : coords.tau) {
      shape_ok = shape_ok && values.size() == indices.size();
      for (const auto& idx : indices) shape_ok = shape_ok && values.count(idx) == 1;
    }
    c.passed = shape_ok && coords.entry_count() == expected;
    std::ostringstream os;
    os << coords.entry_count() << " entries, expected " << expected;
    c.detail = os.str();
    report.checks.push_back(std::move(c));
  }

  {
    PolytopeCheck c{"length_positivity", true, ""};
    try {
      for (Boundary b : kBoundaries) {
        for (int p = 1; p <= n - 1 && c.passed; ++p) {
          const Scalar r = boundary_sum_r(coords, b, p).exp_value;
          if (!(r > Scalar::one(r.backend()))) {
            c.passed = false;
            c.detail = "R_" + std::to_string(p) + "(" + std::string(name(b)) +
                       ") exp-value " + r.to_string() + " <= 1";
          }
        }
      }
    } catch (const Error& e) {
      c.passed = false;
      c.detail = e.what();
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

PolytopeReport polytope_check(const CoordinateVector& coords, const PantsParams& params) {
  PolytopeReport report = polytope_check(coords);
  PolytopeCheck c{"triangle_rotation", true, ""};
  try {
    for (Triangle tri : kTriangles) {
      for (int vertex = 1; vertex <= 2 && c.passed; ++vertex) {
        const auto flags = rotated_triangle_flags(coords.n, params, tri, vertex);
        for (const auto& idx : triple_indices(coords.n)) {
          const Scalar direct = triple_ratio_exp(flags[0], flags[1], flags[2], idx.p, idx.q, idx.r);
          const Scalar stored = tau_at_vertex(coords, tri, vertex, idx).exp_value;
          const bool equal = direct.is_exact()
                                 ? direct == stored
                                 : std::abs(direct.to_double() - stored.to_double()) <=
                                       1e-9 * std::max(1.0, std::abs(stored.to_double()));
          if (!equal) {
            c.passed = false;
            c.detail = tau_label(tri, idx) + " at vertex " + std::to_string(vertex) + ": " +
                       direct.to_string() + " vs " + stored.to_string();
            break;
          }
        }
      }
    }
  } catch (const Error& e) {
    c.passed = false;
    c.detail = e.what();
  }
  report.checks.push_back(std::move(c));
  return report;
}

}  // namespace pantsbd
