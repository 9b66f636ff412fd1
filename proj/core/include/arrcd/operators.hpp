#pragma once

// Linear operators on Z<a,b> used to pass from the ab-index of an
// intersection poset to the cd-index of the induced stratification.
//
//   kappa       algebra map a -> a-b, b -> 0
//   lambda_bar  algebra map a -> 0, b -> a-b
//   eta         b^m a^k -> 2 (a-b)^(m+k), every other word -> 0
//   phi         sum over k of kappa(w1) b eta(w2) b ... b eta(wk), over all
//               ways of deleting k-1 letters of w
//   omega       each factor ab -> 2d, every remaining letter -> c
//   g_op        phi(w) b + sum over one-letter deletions w1|w2 of phi(w1) b lambda_bar(w2) (a-b)
//   h_prime     drops the last letter of each word; constants map to 0

#include "arrcd/intersection_poset.hpp"
#include "arrcd/ncpoly.hpp"
#include "arrcd/poset.hpp"

namespace arrcd {

AbPolynomial kappa(const AbPolynomial& p);
AbPolynomial lambda_bar(const AbPolynomial& p);
AbPolynomial eta(const AbPolynomial& p);
AbPolynomial phi(const AbPolynomial& p);
CdPolynomial omega(const AbPolynomial& p);
AbPolynomial g_op(const AbPolynomial& p);
AbPolynomial h_prime(const AbPolynomial& p);

/// Z_M(p; chi) (a-b)^(rank(p)-1). Needs the classical zeta.
AbPolynomial eta_M(const QuasiGradedPoset& p, const EulerData& chi);

}  // namespace arrcd
