#pragma once

// cd-index of the Whitney stratification that an arrangement in the boundary
// of a compact manifold M induces on M. Three independent routes:
//
//   main      closed form in omega and the lower intervals of P
//   chainsum  weighted chain sum over P with a new minimum adjoined,
//             weights Z on inner steps and Z_M on the last step
//   q         cd-index of the face-like poset Q built from P
//
// The carrier of P is the boundary of M, so dim M = carrier_dim + 1.

#include <optional>
#include <vector>

#include "arrcd/intersection_poset.hpp"
#include "arrcd/ncpoly.hpp"
#include "arrcd/poset.hpp"

namespace arrcd {

/// Q: elements x for every non-empty x of P, the empty element as the new
/// minimum and M as the new maximum, ordered by inclusion.
QuasiGradedPoset build_q(const IntersectionPoset& p, const Integer& manifold_euler);

CdPolynomial cd_index_main(const IntersectionPoset& p, const Integer& manifold_euler);
CdPolynomial cd_index_chainsum(const IntersectionPoset& p, const Integer& manifold_euler);
CdPolynomial cd_index_q(const IntersectionPoset& p, const Integer& manifold_euler);

/// omega(a Psi(P))*, for M with chi(M) = 1. Throws NotSpherical unless every
/// non-empty x has chi(x) = 1 + (-1)^dim(x).
CdPolynomial spherical_cd_index(const IntersectionPoset& p);

/// 1/2 omega(a H'(Psi(P)) b)* on the torus of dimension torus_dim, bounding
/// B^2 x T^(n-1). Throws TorusDimensionTooSmall for torus_dim < 2 and NotToric
/// unless the carrier has chi 0, positive-dimensional elements have chi 0 and
/// every point element is a single point.
CdPolynomial toric_cd_index(const IntersectionPoset& p, long torus_dim);

/// Words with k >= 1 d's whose coefficient is not divisible by 2^(k-1).
std::vector<Violation> divisibility_check(const CdPolynomial& q);

struct RouteSelection {
  bool main = true;
  bool chainsum = true;
  bool q = true;
};

struct StratificationResult {
  CdPolynomial cd_index;
  std::optional<CdPolynomial> main;
  std::optional<CdPolynomial> chainsum;
  std::optional<CdPolynomial> q;
  std::optional<QuasiGradedPoset> q_poset;
};

/// Runs the selected routes; throws RouteDisagreement when any two differ and
/// OddCoefficient when the result fails the divisibility check.
StratificationResult stratify(const IntersectionPoset& p, const Integer& manifold_euler,
                              RouteSelection routes = {});

}  // namespace arrcd
