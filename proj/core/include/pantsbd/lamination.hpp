#pragma once

#include <array>
#include <string_view>

#include "pantsbd/pants.hpp"

namespace pantsbd {

/// Biinfinite leaves of the pants lamination.
enum class Leaf { h_ab, h_bc, h_ca };
/// Ideal triangles of the induced triangulation.
enum class Triangle { t0, t1 };
/// Boundary (closed) leaves.
enum class Boundary { a, b, c };

inline constexpr std::array<Leaf, 3> kLeaves{Leaf::h_ab, Leaf::h_bc, Leaf::h_ca};
inline constexpr std::array<Triangle, 2> kTriangles{Triangle::t0, Triangle::t1};
inline constexpr std::array<Boundary, 3> kBoundaries{Boundary::a, Boundary::b, Boundary::c};

std::string_view name(Leaf leaf);          // "h_AB", ...
std::string_view name(Triangle triangle);  // "T0", "T1"
std::string_view name(Boundary boundary);  // "A", "B", "C"

/// Lift of a leaf together with its two neighbouring triangle vertices:
/// the endpoints x (terminal) and y (start), then the vertices z on the left
/// and z' on the right.
struct LeafQuadruple {
  ProjPoint terminal;
  ProjPoint start;
  ProjPoint left;
  ProjPoint right;
};

/// h_AB: (inf, 0, -beta gamma, 1); h_BC: (0, 1, beta/(beta+gamma), inf);
/// h_CA: (1, inf, alpha^2 beta gamma + 1, 0).
LeafQuadruple leaf_quadruple(Leaf leaf, const PantsParams& params);

/// Clockwise vertex triple starting at the distinguished vertex inf:
/// T0 = (inf, 1, 0), T1 = (inf, 0, -beta gamma).
std::array<ProjPoint, 3> triangle_vertices(Triangle triangle, const PantsParams& params);

/// How a biinfinite leaf enters the length sum of a boundary component.
/// toward_boundary selects sigma_p; otherwise sigma_{n-p} is used.
struct LeafIncidence {
  Leaf leaf;
  bool toward_boundary;
};

/// A triangle corner spiralling into a boundary component; vertex is the
/// index into triangle_vertices().
struct CornerIncidence {
  Triangle triangle;
  int vertex;
};

/// Orientation table for the boundary length sums. Leaf orientations follow
/// the lifts above (h_AB runs 0 -> inf, h_BC runs 1 -> 0, h_CA runs inf -> 1)
/// and the endpoints inf, 0, 1 are fixed by a, b, c respectively. The table
/// is checked against eigenvalue lengths by the test suite.
struct BoundaryIncidence {
  std::array<LeafIncidence, 2> leaves;
  std::array<CornerIncidence, 2> corners;
};

const BoundaryIncidence& boundary_incidence(Boundary boundary);

}  // namespace pantsbd
