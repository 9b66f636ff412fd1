#pragma once

// Named arrangements shared by the unit, corpus and acceptance suites.

#include <string>
#include <vector>

#include "arrcd/geometry.hpp"
#include "arrcd/intersection_poset.hpp"
#include "arrcd/poset.hpp"

namespace arrcd::testing {

struct NamedArrangement {
  std::string name;
  IntersectionPoset poset;
  /// Euler characteristic of the manifold bounded by the carrier.
  Integer manifold_euler;
};

struct NamedSubspaces {
  std::string name;
  SubspaceArrangement arrangement;
};

/// Planes x = 0, y = 0 and the line x = y = z in R^3.
SubspaceArrangement two_planes_and_line();

/// Its spherical poset with each zero-sphere as a single element.
IntersectionPoset two_planes_and_line_spherical();

/// The same stratification data with every point as its own element.
IntersectionPoset two_planes_and_line_points();

/// Face poset of the induced subdivision of S^2, with weight 0 between the
/// punctured discs and the points they surround (and the minimum).
QuasiGradedPoset two_planes_and_line_faces();

/// Two closed curves on S^2 meeting in 2k points grouped into k zero-spheres.
IntersectionPoset two_curves(unsigned k);

/// V_1 < ... < V_{n-1} coordinate flag in R^n (central).
SubspaceArrangement complete_flag(unsigned n);

/// V_0 < ... < V_{n-1} coordinate flag through the origin, V_0 the origin.
SubspaceArrangement toric_flag(unsigned n);

/// m affine hyperplanes in R^d on the moment curve: any d meet in a point and
/// no d + 1 share a point.
SubspaceArrangement generic_hyperplanes(unsigned m, unsigned d);

/// Central hyperplanes in general position: normals on the moment curve.
SubspaceArrangement generic_central_hyperplanes(unsigned m, unsigned d);

/// Line arrangements in the plane, including parallel, concurrent and repeated lines.
std::vector<NamedSubspaces> planar_line_fixtures();

/// Central subspace arrangements.
std::vector<NamedSubspaces> central_fixtures();

/// Rational arrangements whose torus images are checked.
std::vector<NamedSubspaces> toric_fixtures();

/// Every arrangement with a bounding manifold used by the stratification checks.
std::vector<NamedArrangement> stratified_fixtures();

/// Hyperplane a . x = b with integer entries.
AffineSubspace hyperplane(const std::vector<long>& normal, long rhs);

}  // namespace arrcd::testing
