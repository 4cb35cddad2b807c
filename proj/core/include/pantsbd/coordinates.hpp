#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pantsbd/flag.hpp"
#include "pantsbd/lamination.hpp"
#include "pantsbd/pants.hpp"

namespace pantsbd {

/// A triangle or shearing invariant, kept exponentiated (the triple or
/// double ratio itself). The logarithm is derived on demand.
struct InvariantValue {
  Scalar exp_value;

  /// log(exp_value), or nullopt when exp_value <= 0.
  std::optional<double> log_value() const;
};

struct TripleIndex {
  int p = 0;
  int q = 0;
  int r = 0;

  auto operator<=>(const TripleIndex&) const = default;
  /// "p,q,r"
  std::string key() const;
};

/// All (p, q, r) with p, q, r >= 1 and p + q + r = n, lexicographic.
std::vector<TripleIndex> triple_indices(int n);

/// The coordinate vector of a pants representation: sigma_p for the three
/// biinfinite leaves and tau_pqr (at the vertex inf) for both triangles.
struct CoordinateVector {
  int n = 0;
  /// sigma[leaf][p-1], p = 1..n-1.
  std::map<Leaf, std::vector<InvariantValue>> sigma;
  std::map<Triangle, std::map<TripleIndex, InvariantValue>> tau;

  std::size_t entry_count() const;
  /// n^2 - 1: 3(n-1) shears plus (n-1)(n-2) triangle invariants.
  static std::size_t expected_count(int n);

  const InvariantValue& sigma_at(Leaf leaf, int p) const;
  const InvariantValue& tau_at(Triangle triangle, TripleIndex index) const;
};

enum class Method { generic, closed_form };

// Generic path: triple and double ratios of Veronese flags.
InvariantValue triangle_invariant_generic(int n, const PantsParams& params, Triangle triangle,
                                          TripleIndex index);
InvariantValue shearing_invariant_generic(int n, const PantsParams& params, Leaf leaf, int p);

// Closed-form path built from the binomial determinants in closed_form.hpp.
InvariantValue cf_sigma_hab(int n, const PantsParams& params, int p);
InvariantValue cf_sigma_hbc(int n, const PantsParams& params, int p);
InvariantValue cf_sigma_hca(int n, const PantsParams& params, int p);
InvariantValue cf_tau_t0(int n, const PantsParams& params, TripleIndex index);
InvariantValue cf_tau_t1(int n, const PantsParams& params, TripleIndex index);

InvariantValue cf_sigma(int n, const PantsParams& params, Leaf leaf, int p);
InvariantValue cf_tau(int n, const PantsParams& params, Triangle triangle, TripleIndex index);

CoordinateVector assemble_phi(int n, const PantsParams& params, Method method);

/// Triangle invariant at a corner other than inf, read from stored values
/// through the cyclic relation tau_pqr(v) = tau_qrp(v') = tau_rpq(v'').
const InvariantValue& tau_at_vertex(const CoordinateVector& coords, Triangle triangle, int vertex,
                                    TripleIndex index);

/// Exponentiated boundary sum R_p: product of the two oriented leaf shears
/// and of the triangle invariants tau_{p,q,r} (q + r = n - p) at the corners
/// spiralling into the boundary.
InvariantValue boundary_sum_r(const CoordinateVector& coords, Boundary boundary, int p);

/// Same sum evaluated straight from flags, with each corner's triangle
/// invariant computed at the rotated vertex triple.
InvariantValue boundary_sum_r(int n, const PantsParams& params, Boundary boundary, int p);

struct PolytopeCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PolytopeReport {
  std::vector<PolytopeCheck> checks;
  bool all_passed() const;
  const PolytopeCheck* find(const std::string& name) const;
};

/// Checks "positivity" (every exp-value > 0), "length_positivity"
/// (R_p > 1 for every boundary and p) and "entry_count" (n^2 - 1 entries).
/// With params, also "triangle_rotation": stored values read at the other
/// corners agree with direct evaluation at the rotated vertex triples.
PolytopeReport polytope_check(const CoordinateVector& coords);
PolytopeReport polytope_check(const CoordinateVector& coords, const PantsParams& params);

}  // namespace pantsbd
