#pragma once

// Intersection posets of manifold arrangements: a classical-zeta quasi-graded
// poset whose elements carry a dimension and an Euler characteristic. The
// empty intersection, when present, is the maximum, has no dimension and has
// Euler characteristic 0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrcd/poset.hpp"

namespace arrcd {

/// Euler characteristics keyed by element id.
class EulerData {
 public:
  void set(const std::string& id, const Integer& chi) { chi_[id] = chi; }
  bool contains(const std::string& id) const { return chi_.count(id) != 0; }
  /// Throws MissingEulerData for unknown ids.
  const Integer& at(const std::string& id) const;
  const std::map<std::string, Integer>& values() const noexcept { return chi_; }

 private:
  std::map<std::string, Integer> chi_;
};

/// What the elements are: closed submanifolds (odd dimensions force chi = 0),
/// or open affine flats of a real vector space (chi = 1 each).
enum class CarrierKind { closed, affine };

class IntersectionPoset {
 public:
  /// dims[i] is empty exactly for the empty intersection. components, when
  /// non-empty, gives per-element connected-component counts.
  IntersectionPoset(QuasiGradedPoset poset, long carrier_dim, std::vector<std::optional<long>> dims, EulerData euler,
                    CarrierKind kind = CarrierKind::closed, std::vector<std::optional<Integer>> components = {});

  const QuasiGradedPoset& poset() const noexcept { return poset_; }
  long carrier_dim() const noexcept { return carrier_dim_; }
  CarrierKind kind() const noexcept { return kind_; }
  const std::optional<long>& dim(std::size_t x) const { return dims_[x]; }
  const EulerData& euler() const noexcept { return euler_; }
  const Integer& chi(std::size_t x) const { return euler_.at(poset_.id(x)); }
  const std::vector<std::optional<Integer>>& components() const noexcept { return components_; }
  bool is_empty_element(std::size_t x) const { return !dims_[x].has_value(); }

  /// Poset violations followed by intersection-poset violations.
  std::vector<Violation> validate() const;
  void require_valid() const;

 private:
  QuasiGradedPoset poset_;
  long carrier_dim_;
  std::vector<std::optional<long>> dims_;
  EulerData euler_;
  CarrierKind kind_;
  std::vector<std::optional<Integer>> components_;
};

/// The compact manifold whose boundary carries the arrangement.
struct BoundingManifold {
  long dim = 0;
  Integer euler;
};

}  // namespace arrcd
