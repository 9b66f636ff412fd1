#pragma once

// Chain enumeration on quasi-graded posets: chain weights, the ab-index (by
// interval recursion and through flag vectors), the cd-index, and the
// Zaslavsky sums.

#include <cstdint>
#include <vector>

#include "arrcd/intersection_poset.hpp"
#include "arrcd/ncpoly.hpp"
#include "arrcd/poset.hpp"

namespace arrcd {

/// Flag numbers indexed by rank sets S of {1, ..., length}, encoded as bitmasks
/// with rank i at bit i-1.
class FlagVector {
 public:
  enum class Flavor { f, h };

  FlagVector(Flavor flavor, unsigned length, std::vector<Integer> values);

  Flavor flavor() const noexcept { return flavor_; }
  unsigned length() const noexcept { return length_; }
  const Integer& at(std::uint32_t mask) const { return values_.at(mask); }
  const std::vector<Integer>& values() const noexcept { return values_; }

  /// "{}" , "{1}", "{1,3}".
  static std::string subset_label(std::uint32_t mask);

 private:
  Flavor flavor_;
  unsigned length_;
  std::vector<Integer> values_;
};

/// Throws InvalidChain unless chain runs strictly upward from the minimum to the maximum.
AbPolynomial chain_weight(const QuasiGradedPoset& p, const std::vector<std::size_t>& chain);

/// Degree rank(p) - 1; needs rank at least 1.
AbPolynomial ab_index(const QuasiGradedPoset& p);
/// Psi([x, top]) for every x below the top; the entry for the top is zero.
std::vector<AbPolynomial> upper_interval_indices(const QuasiGradedPoset& p);
/// Psi([bottom, y]) for every y above the bottom; the entry for the bottom is zero.
std::vector<AbPolynomial> lower_interval_indices(const QuasiGradedPoset& p);

FlagVector flag_f_vector(const QuasiGradedPoset& p);
FlagVector flag_h_vector(const QuasiGradedPoset& p);
AbPolynomial ab_index_via_flag(const QuasiGradedPoset& p);

/// Throws NotEulerian when the poset fails the Eulerian check.
CdPolynomial cd_index(const QuasiGradedPoset& p);

Integer zaslavsky_Z(const QuasiGradedPoset& p);
/// Over the interval [x, y] of p.
Integer zaslavsky_Z(const QuasiGradedPoset& p, std::size_t x, std::size_t y);
/// Throws MissingEulerData when chi lacks an element of p.
Integer zaslavsky_ZM(const QuasiGradedPoset& p, const EulerData& chi);
Integer zaslavsky_ZM(const QuasiGradedPoset& p, std::size_t x, std::size_t y, const EulerData& chi);

/// Euler characteristic of the complement of the arrangement.
Integer complement_euler(const IntersectionPoset& p);

}  // namespace arrcd
