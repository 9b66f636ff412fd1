#pragma once

// Finite quasi-graded posets: a bounded poset, a rank function that strictly
// increases along the order with the minimum at rank 0, and an integer
// weighting of comparable pairs with unit diagonal.
//
// Elements are addressed by dense indices 0..size()-1; string ids are kept for
// I/O. The comparability matrix and the inverse weighting are computed once
// at construction, after which the object is immutable.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arrcd/ncpoly.hpp"

namespace arrcd {

/// Integer values on pairs (x, y); only comparable pairs x <= y are meaningful.
class IncidenceFunction {
 public:
  IncidenceFunction() = default;
  explicit IncidenceFunction(std::size_t n) : n_(n), values_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  const Integer& operator()(std::size_t x, std::size_t y) const { return values_[x * n_ + y]; }
  Integer& operator()(std::size_t x, std::size_t y) { return values_[x * n_ + y]; }

 private:
  std::size_t n_ = 0;
  std::vector<Integer> values_;
};

struct ElementSpec {
  std::string id;
  long rank = 0;
};

struct ZetaEntry {
  std::string from;
  std::string to;
  Integer value;
};

struct Violation {
  std::string kind;
  std::string detail;
};

struct EulerianReport {
  bool eulerian = true;
  /// First interval x < z (by index order of the linear extension) whose alternating sum is nonzero.
  std::optional<std::pair<std::size_t, std::size_t>> failing_interval;
  Integer failing_sum;
};

class QuasiGradedPoset {
 public:
  /// Builds from generating relations (typically covers) and weighting overrides.
  /// Unlisted comparable pairs weigh 1. Throws ParseError on duplicate or unknown ids;
  /// order-theoretic defects are reported by validate().
  static QuasiGradedPoset from_relations(const std::vector<ElementSpec>& elements,
                                         const std::vector<std::pair<std::string, std::string>>& relations,
                                         const std::vector<ZetaEntry>& zeta = {});

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(std::size_t x) const { return ids_[x]; }
  std::size_t index(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;
  long rank(std::size_t x) const { return ranks_[x]; }
  long rank_between(std::size_t x, std::size_t y) const { return ranks_[y] - ranks_[x]; }

  bool leq(std::size_t x, std::size_t y) const { return (leq_[x][y / 64] >> (y % 64)) & 1U; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  const Integer& zeta(std::size_t x, std::size_t y) const { return zeta_(x, y); }
  const IncidenceFunction& zeta() const noexcept { return zeta_; }
  bool has_classical_zeta() const;

  /// Empty when the poset satisfies all quasi-graded conditions.
  const std::vector<Violation>& validate() const noexcept { return violations_; }
  bool valid() const noexcept { return violations_.empty(); }
  /// Throws ValidationError listing every violation.
  void require_valid() const;

  // The remaining queries require a valid poset.
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  long rank() const { return ranks_[top_]; }
  const Integer& mobius(std::size_t x, std::size_t y) const;
  const IncidenceFunction& mobius() const;

  /// Indices sorted by (rank, index); a linear extension.
  const std::vector<std::size_t>& by_rank() const noexcept { return order_; }
  /// Hasse diagram edges (x, y) with x covered by y, in by_rank order of x.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  EulerianReport eulerian_check() const;
  QuasiGradedPoset dual() const;
  QuasiGradedPoset adjoin_min(std::string new_id = "-1") const;
  QuasiGradedPoset interval(std::size_t x, std::size_t y) const;
  /// Replaces x and y by one element carrying x's up-going weights and the sum
  /// of both down-going weights. Throws NotMergeable when the up-sets or their
  /// weights differ, the ranks differ, or x and y are comparable.
  QuasiGradedPoset merge_equivalent(std::size_t x, std::size_t y, std::string merged_id = {}) const;

  /// Low-level constructor from a full reflexive relation and weighting; the
  /// relation is closed transitively before validation.
  QuasiGradedPoset(std::vector<std::string> ids, std::vector<long> ranks,
                   std::vector<std::vector<std::uint64_t>> relation, IncidenceFunction zeta);

 private:
  void close_and_validate();
  void compute_mobius();

  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<long> ranks_;
  std::vector<std::vector<std::uint64_t>> leq_;
  IncidenceFunction zeta_;
  IncidenceFunction mu_;
  std::vector<std::size_t> order_;
  std::vector<Violation> violations_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Row of a bit-matrix with n columns, all zero.
std::vector<std::uint64_t> empty_bit_row(std::size_t n);
inline void set_bit(std::vector<std::uint64_t>& row, std::size_t j) { row[j / 64] |= std::uint64_t{1} << (j % 64); }

}  // namespace arrcd
