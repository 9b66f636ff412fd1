#pragma once

// Intersection posets of rational affine subspace arrangements, of their
// traces on the unit sphere (central case), and of their images in the torus
// R^n / Z^n.

#include <cstddef>
#include <vector>

#include "arrcd/intersection_poset.hpp"
#include "arrcd/rational_linalg.hpp"

namespace arrcd {

/// Solution set of constraints * x = rhs in Q^ambient.
class AffineSubspace {
 public:
  /// Throws ValidationError on shape mismatches.
  AffineSubspace(RationalMatrix constraints, std::vector<Rational> rhs);

  const RationalMatrix& constraints() const noexcept { return constraints_; }
  const std::vector<Rational>& rhs() const noexcept { return rhs_; }
  std::size_t ambient() const noexcept { return constraints_.cols(); }
  bool consistent() const;
  /// ambient - rank; requires consistent().
  std::size_t dim() const;
  bool central() const;

 private:
  RationalMatrix constraints_;
  std::vector<Rational> rhs_;
};

struct SubspaceArrangement {
  std::size_t ambient = 0;
  std::vector<AffineSubspace> subspaces;
};

/// All non-empty intersections ordered by reverse inclusion, with the whole
/// space at the bottom and the empty set on top (rank ambient + 1). Elements
/// are open affine flats with Euler characteristic 1. Ids: "R^n", "V{1,3}"
/// (the flat equals the intersection of exactly the listed subspaces, which
/// are all the subspaces containing it), "empty".
/// Throws InconsistentSubspace for empty inputs and ValidationError for
/// subspaces equal to the whole space.
IntersectionPoset intersection_lattice(const SubspaceArrangement& arr);

/// Same order, traced on the unit sphere: each flat of dimension k becomes a
/// (k-1)-sphere, the origin becomes the empty set. Throws NotCentral.
IntersectionPoset spherize(const SubspaceArrangement& arr);

struct TorifyOptions {
  /// One element per connected component instead of grouping components
  /// that lie in the same subspaces.
  bool per_component = false;
  /// Bound on the number of components kept in memory.
  std::size_t max_components = 20000;
};

/// Images in the torus. Element Euler characteristics are the point count for
/// dimension 0 and 0 otherwise; component counts are recorded.
IntersectionPoset torify(const SubspaceArrangement& arr, TorifyOptions options = {});

/// Regions cut out of the plane by affine lines (ambient 2, one equation
/// each), counted with Euler's formula on the arrangement graph.
Integer region_count_oracle(const SubspaceArrangement& lines);

}  // namespace arrcd
