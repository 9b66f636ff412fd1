#include "arrcd/intersection_poset.hpp"

namespace arrcd {

const Integer& EulerData::at(const std::string& id) const {
  auto it = chi_.find(id);
  if (it == chi_.end()) throw MissingEulerData("no Euler characteristic for element '" + id + "'");
  return it->second;
}

IntersectionPoset::IntersectionPoset(QuasiGradedPoset poset, long carrier_dim, std::vector<std::optional<long>> dims,
                                     EulerData euler, CarrierKind kind, std::vector<std::optional<Integer>> components)
    : poset_(std::move(poset)),
      carrier_dim_(carrier_dim),
      dims_(std::move(dims)),
      euler_(std::move(euler)),
      kind_(kind),
      components_(std::move(components)) {
  if (dims_.size() != poset_.size() || (!components_.empty() && components_.size() != poset_.size())) {
    throw InternalConsistencyError("intersection poset annotations do not match the element count");
  }
}

std::vector<Violation> IntersectionPoset::validate() const {
  std::vector<Violation> out = poset_.validate();
  if (!out.empty()) return out;
  const QuasiGradedPoset& p = poset_;

  if (!p.has_classical_zeta()) out.push_back({"weighted zeta", "intersection posets carry the classical zeta"});
  if (carrier_dim_ < 0) out.push_back({"carrier dimension", std::to_string(carrier_dim_)});

  for (std::size_t x = 0; x < p.size(); ++x) {
    const std::string& id = p.id(x);
    if (!euler_.contains(id)) out.push_back({"missing Euler characteristic", id});
    if (!dims_[x]) {
      if (x != p.top()) out.push_back({"empty element not maximal", id});
      if (p.rank(x) != carrier_dim_ + 1) {
        out.push_back({"rank of empty element", id + " has rank " + std::to_string(p.rank(x)) + ", expected " +
                                                    std::to_string(carrier_dim_ + 1)});
      }
      if (euler_.contains(id) && euler_.at(id) != 0) out.push_back({"Euler characteristic of empty element", id});
      continue;
    }
    const long d = *dims_[x];
    if (d < 0 || d > carrier_dim_) out.push_back({"dimension out of range", id + " has dimension " + std::to_string(d)});
    if (p.rank(x) != carrier_dim_ - d) {
      out.push_back({"rank and dimension disagree",
                     id + " has rank " + std::to_string(p.rank(x)) + " and dimension " + std::to_string(d)});
    }
    if (kind_ == CarrierKind::closed && d % 2 != 0 && euler_.contains(id) && euler_.at(id) != 0) {
      out.push_back({"odd-dimensional Euler characteristic", id + " has dimension " + std::to_string(d) +
                                                                 " and Euler characteristic " +
                                                                 euler_.at(id).get_str()});
    }
  }
  if (dims_[p.bottom()] && *dims_[p.bottom()] != carrier_dim_) {
    out.push_back({"dimension of minimum", p.id(p.bottom()) + " is not the whole carrier"});
  }
  if (dims_[p.top()]) out.push_back({"missing empty element", "the maximum " + p.id(p.top()) + " is not empty"});

  // Order shadow of component nesting: a strictly larger element must have
  // strictly smaller dimension.
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.less(x, y) && dims_[x] && dims_[y] && *dims_[y] >= *dims_[x]) {
        out.push_back({"containment without dimension drop", p.id(x) + " < " + p.id(y)});
      }
    }
  }
  return out;
}

void IntersectionPoset::require_valid() const {
  auto violations = validate();
  if (violations.empty()) return;
  std::string message = "invalid intersection poset:";
  for (const auto& v : violations) message += "\n  " + v.kind + ": " + v.detail;
  throw ValidationError(message);
}

}  // namespace arrcd
