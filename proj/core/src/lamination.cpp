#include "pantsbd/lamination.hpp"

namespace pantsbd {

std::string_view name(Leaf leaf) {
  switch (leaf) {
    case Leaf::h_ab: return "h_AB";
    case Leaf::h_bc: return "h_BC";
    case Leaf::h_ca: return "h_CA";
  }
  return "?";
}

std::string_view name(Triangle triangle) { return triangle == Triangle::t0 ? "T0" : "T1"; }

std::string_view name(Boundary boundary) {
  switch (boundary) {
    case Boundary::a: return "A";
    case Boundary::b: return "B";
    case Boundary::c: return "C";
  }
  return "?";
}

LeafQuadruple leaf_quadruple(Leaf leaf, const PantsParams& params) {
  params.validate();
  const Backend bk = params.backend();
  const Scalar& al = params.alpha;
  const Scalar& be = params.beta;
  const Scalar& ga = params.gamma;
  const auto inf = ProjPoint::infinity(bk);
  const auto zero = ProjPoint::finite(Scalar::zero(bk));
  const auto one = ProjPoint::finite(Scalar::one(bk));
  switch (leaf) {
    case Leaf::h_ab:
      return {inf, zero, ProjPoint::finite(-(be * ga)), one};
    case Leaf::h_bc:
      return {zero, one, ProjPoint::finite(be / (be + ga)), inf};
    case Leaf::h_ca:
      return {one, inf, ProjPoint::finite(al * al * be * ga + Scalar::one(bk)), zero};
  }
  throw DomainError("unknown leaf");
}

std::array<ProjPoint, 3> triangle_vertices(Triangle triangle, const PantsParams& params) {
  params.validate();
  const Backend bk = params.backend();
  const auto inf = ProjPoint::infinity(bk);
  const auto zero = ProjPoint::finite(Scalar::zero(bk));
  if (triangle == Triangle::t0) return {inf, ProjPoint::finite(Scalar::one(bk)), zero};
  return {inf, zero, ProjPoint::finite(-(params.beta * params.gamma))};
}

const BoundaryIncidence& boundary_incidence(Boundary boundary) {
  // T0 = (inf, 1, 0): inf <-> A, 1 <-> C, 0 <-> B.
  // T1 = (inf, 0, -beta gamma): inf <-> A, 0 <-> B, a^{-1}(1) <-> C.
  static const BoundaryIncidence kA{
      {{{Leaf::h_ab, true}, {Leaf::h_ca, false}}},
      {{{Triangle::t0, 0}, {Triangle::t1, 0}}}};
  static const BoundaryIncidence kB{
      {{{Leaf::h_ab, false}, {Leaf::h_bc, true}}},
      {{{Triangle::t0, 2}, {Triangle::t1, 1}}}};
  static const BoundaryIncidence kC{
      {{{Leaf::h_bc, false}, {Leaf::h_ca, true}}},
      {{{Triangle::t0, 1}, {Triangle::t1, 2}}}};
  switch (boundary) {
    case Boundary::a: return kA;
    case Boundary::b: return kB;
    case Boundary::c: return kC;
  }
  throw DomainError("unknown boundary");
}

}  // namespace pantsbd
