#include "arrcd/poset.hpp"

#include <algorithm>
#include <numeric>

namespace arrcd {

namespace {

using BitMatrix = std::vector<std::vector<std::uint64_t>>;

void close_transitively(BitMatrix& rel) {
  const std::size_t n = rel.size();
  for (std::size_t i = 0; i < n; ++i) set_bit(rel[i], i);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || !((rel[i][k / 64] >> (k % 64)) & 1U)) continue;
      for (std::size_t w = 0; w < rel[i].size(); ++w) rel[i][w] |= rel[k][w];
    }
  }
}

bool bit(const BitMatrix& rel, std::size_t i, std::size_t j) { return (rel[i][j / 64] >> (j % 64)) & 1U; }

}  // namespace

std::vector<std::uint64_t> empty_bit_row(std::size_t n) { return std::vector<std::uint64_t>((n + 63) / 64, 0); }

QuasiGradedPoset QuasiGradedPoset::from_relations(const std::vector<ElementSpec>& elements,
                                                  const std::vector<std::pair<std::string, std::string>>& relations,
                                                  const std::vector<ZetaEntry>& zeta) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> ids;
  std::vector<long> ranks;
  ids.reserve(n);
  ranks.reserve(n);
  for (const auto& e : elements) {
    if (!index.emplace(e.id, ids.size()).second) throw ParseError("duplicate element id '" + e.id + "'");
    ids.push_back(e.id);
    ranks.push_back(e.rank);
  }
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw ParseError("unknown element id '" + id + "'");
    return it->second;
  };

  BitMatrix rel(n, empty_bit_row(n));
  for (const auto& [lo, hi] : relations) set_bit(rel[lookup(lo)], lookup(hi));
  close_transitively(rel);

  IncidenceFunction z(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (bit(rel, i, j)) z(i, j) = 1;
    }
  }
  for (const auto& entry : zeta) z(lookup(entry.from), lookup(entry.to)) = entry.value;
  return QuasiGradedPoset(std::move(ids), std::move(ranks), std::move(rel), std::move(z));
}

QuasiGradedPoset::QuasiGradedPoset(std::vector<std::string> ids, std::vector<long> ranks,
                                   std::vector<std::vector<std::uint64_t>> relation, IncidenceFunction zeta)
    : ids_(std::move(ids)), ranks_(std::move(ranks)), leq_(std::move(relation)), zeta_(std::move(zeta)) {
  if (ranks_.size() != ids_.size() || leq_.size() != ids_.size() || zeta_.size() != ids_.size()) {
    throw InternalConsistencyError("poset component sizes disagree");
  }
  close_and_validate();
}

void QuasiGradedPoset::close_and_validate() {
  const std::size_t n = ids_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], i).second) violations_.push_back({"duplicate id", ids_[i]});
  }
  close_transitively(leq_);

  order_.resize(n);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return ranks_[a] < ranks_[b]; });

  if (n == 0) {
    violations_.push_back({"empty poset", "a bounded poset needs at least one element"});
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ranks_[i] < 0) violations_.push_back({"negative rank", ids_[i]});
  }

  bool antisymmetric = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq(i, j) && leq(j, i)) {
        antisymmetric = false;
        violations_.push_back({"cycle", ids_[i] + " and " + ids_[j] + " lie below each other"});
      }
    }
  }

  std::optional<std::size_t> minimum;
  std::optional<std::size_t> maximum;
  for (std::size_t i = 0; i < n && antisymmetric; ++i) {
    bool below_all = true;
    bool above_all = true;
    for (std::size_t j = 0; j < n; ++j) {
      below_all = below_all && leq(i, j);
      above_all = above_all && leq(j, i);
    }
    if (below_all) minimum = i;
    if (above_all) maximum = i;
  }
  if (antisymmetric && !minimum) violations_.push_back({"no minimum", "no element lies below every element"});
  if (antisymmetric && !maximum) violations_.push_back({"no maximum", "no element lies above every element"});
  if (minimum) {
    bottom_ = *minimum;
    if (ranks_[bottom_] != 0) {
      violations_.push_back({"rank of minimum", ids_[bottom_] + " has rank " + std::to_string(ranks_[bottom_])});
    }
  }
  if (maximum) top_ = *maximum;

  for (std::size_t i = 0; i < n; ++i) {
    if (zeta_(i, i) != 1) violations_.push_back({"diagonal zeta", ids_[i] + " has weight " + zeta_(i, i).get_str()});
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (leq(i, j)) {
        if (ranks_[i] >= ranks_[j]) {
          violations_.push_back({"rank not strictly increasing", ids_[i] + " < " + ids_[j] + " but ranks are " +
                                                                     std::to_string(ranks_[i]) + ", " +
                                                                     std::to_string(ranks_[j])});
        }
      } else if (zeta_(i, j) != 0) {
        violations_.push_back({"zeta on incomparable pair", ids_[i] + ", " + ids_[j]});
      }
    }
  }

  if (violations_.empty()) compute_mobius();
}

void QuasiGradedPoset::compute_mobius() {
  const std::size_t n = ids_.size();
  mu_ = IncidenceFunction(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t y = order_[pos];
      if (!leq(x, y)) continue;
      if (y == x) {
        mu_(x, y) = 1;
        continue;
      }
      Integer sum = 0;
      for (std::size_t before = 0; before < pos; ++before) {
        const std::size_t z = order_[before];
        if (leq(x, z) && leq(z, y)) sum += mu_(x, z) * zeta_(z, y);
      }
      mu_(x, y) = -sum;
    }
  }
}

std::size_t QuasiGradedPoset::index(std::string_view id) const {
  auto found = find(id);
  if (!found) throw ValidationError("unknown element id '" + std::string(id) + "'");
  return *found;
}

std::optional<std::size_t> QuasiGradedPoset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool QuasiGradedPoset::has_classical_zeta() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (leq(i, j) && zeta_(i, j) != 1) return false;
    }
  }
  return true;
}

void QuasiGradedPoset::require_valid() const {
  if (valid()) return;
  std::string message = "invalid quasi-graded poset:";
  for (const auto& v : violations_) message += "\n  " + v.kind + ": " + v.detail;
  throw ValidationError(message);
}

const Integer& QuasiGradedPoset::mobius(std::size_t x, std::size_t y) const {
  require_valid();
  return mu_(x, y);
}

const IncidenceFunction& QuasiGradedPoset::mobius() const {
  require_valid();
  return mu_;
}

std::vector<std::pair<std::size_t, std::size_t>> QuasiGradedPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x : order_) {
    for (std::size_t y : order_) {
      if (!less(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < size() && covered; ++z) {
        if (less(x, z) && less(z, y)) covered = false;
      }
      if (covered) out.emplace_back(x, y);
    }
  }
  return out;
}

EulerianReport QuasiGradedPoset::eulerian_check() const {
  require_valid();
  EulerianReport report;
  for (std::size_t x : order_) {
    for (std::size_t z : order_) {
      if (!less(x, z)) continue;
      Integer sum = 0;
      for (std::size_t y = 0; y < size(); ++y) {
        if (!leq(x, y) || !leq(y, z)) continue;
        Integer term = zeta_(x, y) * zeta_(y, z);
        if (rank_between(x, y) % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      if (sum != 0) {
        report.eulerian = false;
        report.failing_interval = {x, z};
        report.failing_sum = sum;
        return report;
      }
    }
  }
  return report;
}

QuasiGradedPoset QuasiGradedPoset::dual() const {
  require_valid();
  const std::size_t n = size();
  std::vector<long> ranks(n);
  BitMatrix rel(n, empty_bit_row(n));
  IncidenceFunction z(n);
  for (std::size_t i = 0; i < n; ++i) {
    ranks[i] = rank() - ranks_[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (leq(j, i)) {
        set_bit(rel[i], j);
        z(i, j) = zeta_(j, i);
      }
    }
  }
  return QuasiGradedPoset(ids_, std::move(ranks), std::move(rel), std::move(z));
}

QuasiGradedPoset QuasiGradedPoset::adjoin_min(std::string new_id) const {
  require_valid();
  if (find(new_id)) throw ValidationError("element id '" + new_id + "' already present");
  const std::size_t n = size() + 1;
  std::vector<std::string> ids{std::move(new_id)};
  ids.insert(ids.end(), ids_.begin(), ids_.end());
  std::vector<long> ranks{0};
  for (long r : ranks_) ranks.push_back(r + 1);
  BitMatrix rel(n, empty_bit_row(n));
  IncidenceFunction z(n);
  for (std::size_t j = 0; j < n; ++j) {
    set_bit(rel[0], j);
    z(0, j) = 1;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (leq(i - 1, j - 1)) {
        set_bit(rel[i], j);
        z(i, j) = zeta_(i - 1, j - 1);
      }
    }
  }
  return QuasiGradedPoset(std::move(ids), std::move(ranks), std::move(rel), std::move(z));
}

QuasiGradedPoset QuasiGradedPoset::interval(std::size_t x, std::size_t y) const {
  require_valid();
  if (!leq(x, y)) throw ValidationError("interval endpoints " + ids_[x] + ", " + ids_[y] + " are not comparable");
  std::vector<std::size_t> members;
  for (std::size_t z : order_) {
    if (leq(x, z) && leq(z, y)) members.push_back(z);
  }
  const std::size_t n = members.size();
  std::vector<std::string> ids;
  std::vector<long> ranks;
  BitMatrix rel(n, empty_bit_row(n));
  IncidenceFunction z(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(ids_[members[i]]);
    ranks.push_back(ranks_[members[i]] - ranks_[x]);
    for (std::size_t j = 0; j < n; ++j) {
      if (leq(members[i], members[j])) {
        set_bit(rel[i], j);
        z(i, j) = zeta_(members[i], members[j]);
      }
    }
  }
  return QuasiGradedPoset(std::move(ids), std::move(ranks), std::move(rel), std::move(z));
}

QuasiGradedPoset QuasiGradedPoset::merge_equivalent(std::size_t x, std::size_t y, std::string merged_id) const {
  require_valid();
  auto refuse = [&](const std::string& why) {
    throw NotMergeable("cannot merge " + ids_[x] + " and " + ids_[y] + ": " + why);
  };
  if (x == y) refuse("identical elements");
  if (leq(x, y) || leq(y, x)) refuse("comparable elements");
  if (ranks_[x] != ranks_[y]) refuse("different ranks");
  for (std::size_t v = 0; v < size(); ++v) {
    if (v == x || v == y) continue;
    if (less(x, v) != less(y, v)) refuse("different up-sets at " + ids_[v]);
    if (less(x, v) && zeta_(x, v) != zeta_(y, v)) refuse("different weights to " + ids_[v]);
  }
  if (merged_id.empty()) merged_id = ids_[x] + "+" + ids_[y];
  if (auto clash = find(merged_id); clash && *clash != x && *clash != y) {
    refuse("merged id '" + merged_id + "' already in use");
  }

  // Old index -> new index; y disappears into x's slot.
  const std::size_t keep = std::min(x, y);
  const std::size_t drop = std::max(x, y);
  auto remap = [&](std::size_t old) { return old < drop ? old : old - 1; };
  const std::size_t n = size() - 1;

  std::vector<std::string> ids;
  std::vector<long> ranks;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == drop) continue;
    ids.push_back(i == keep ? merged_id : ids_[i]);
    ranks.push_back(ranks_[i]);
  }
  BitMatrix rel(n, empty_bit_row(n));
  IncidenceFunction z(n);
  const std::size_t merged = remap(keep);
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == x || i == y) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (j == x || j == y) continue;
      if (leq(i, j)) {
        set_bit(rel[remap(i)], remap(j));
        z(remap(i), remap(j)) = zeta_(i, j);
      }
    }
    if (less(i, x) || less(i, y)) {
      set_bit(rel[remap(i)], merged);
      z(remap(i), merged) = (less(i, x) ? zeta_(i, x) : Integer(0)) + (less(i, y) ? zeta_(i, y) : Integer(0));
    }
    if (less(x, i)) {
      set_bit(rel[merged], remap(i));
      z(merged, remap(i)) = zeta_(x, i);
    }
  }
  set_bit(rel[merged], merged);
  z(merged, merged) = 1;
  return QuasiGradedPoset(std::move(ids), std::move(ranks), std::move(rel), std::move(z));
}

}  // namespace arrcd
