#include "arrcd/flagenum.hpp"

#include <map>

namespace arrcd {

namespace {

constexpr unsigned kMaxFlagLength = 30;

void require_positive_rank(const QuasiGradedPoset& p) {
  p.require_valid();
  if (p.rank() < 1) throw ValidationError("the ab-index needs a poset of rank at least 1");
}

const AbPolynomial& letter_b() {
  static const AbPolynomial b = AbPolynomial::letter('b');
  return b;
}

Integer signed_by_rank(long rank, const Integer& value) { return rank % 2 == 0 ? value : Integer(-value); }

}  // namespace

FlagVector::FlagVector(Flavor flavor, unsigned length, std::vector<Integer> values)
    : flavor_(flavor), length_(length), values_(std::move(values)) {
  if (values_.size() != (std::size_t{1} << length_)) throw InternalConsistencyError("flag vector size mismatch");
}

std::string FlagVector::subset_label(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < 32; ++i) {
    if (!((mask >> i) & 1U)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

AbPolynomial chain_weight(const QuasiGradedPoset& p, const std::vector<std::size_t>& chain) {
  p.require_valid();
  if (chain.size() < 2 || chain.front() != p.bottom() || chain.back() != p.top()) {
    throw InvalidChain("a chain must start at the minimum and end at the maximum");
  }
  AbPolynomial out = AbPolynomial::one();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!p.less(chain[i], chain[i + 1])) {
      throw InvalidChain("chain is not strictly increasing at " + p.id(chain[i]) + ", " + p.id(chain[i + 1]));
    }
    if (i > 0) out = out * letter_b();
    out = out * a_minus_b_power(static_cast<unsigned>(p.rank_between(chain[i], chain[i + 1]) - 1));
  }
  return out;
}

std::vector<AbPolynomial> upper_interval_indices(const QuasiGradedPoset& p) {
  require_positive_rank(p);
  const std::size_t top = p.top();
  std::vector<AbPolynomial> up(p.size());
  // b * Psi([y, top]), shared by every x below y.
  std::vector<AbPolynomial> b_up(p.size());
  const auto& order = p.by_rank();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    if (x == top) continue;
    AbPolynomial sum = a_minus_b_power(static_cast<unsigned>(p.rank_between(x, top) - 1)) * p.zeta(x, top);
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (y == top || !p.less(x, y) || p.zeta(x, y) == 0) continue;
      sum += (a_minus_b_power(static_cast<unsigned>(p.rank_between(x, y) - 1)) * b_up[y]) * p.zeta(x, y);
    }
    b_up[x] = letter_b() * sum;
    up[x] = std::move(sum);
  }
  return up;
}

std::vector<AbPolynomial> lower_interval_indices(const QuasiGradedPoset& p) {
  require_positive_rank(p);
  const std::size_t bottom = p.bottom();
  std::vector<AbPolynomial> low(p.size());
  std::vector<AbPolynomial> low_b(p.size());
  for (std::size_t y : p.by_rank()) {
    if (y == bottom) continue;
    AbPolynomial sum = a_minus_b_power(static_cast<unsigned>(p.rank_between(bottom, y) - 1)) * p.zeta(bottom, y);
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (x == bottom || !p.less(x, y) || p.zeta(x, y) == 0) continue;
      sum += (low_b[x] * a_minus_b_power(static_cast<unsigned>(p.rank_between(x, y) - 1))) * p.zeta(x, y);
    }
    low_b[y] = sum * letter_b();
    low[y] = std::move(sum);
  }
  return low;
}

AbPolynomial ab_index(const QuasiGradedPoset& p) { return upper_interval_indices(p)[p.bottom()]; }

FlagVector flag_f_vector(const QuasiGradedPoset& p) {
  require_positive_rank(p);
  const unsigned length = static_cast<unsigned>(p.rank() - 1);
  if (length > kMaxFlagLength) throw ValidationError("flag vectors are limited to rank " + std::to_string(kMaxFlagLength + 1));
  // weights[y][S]: weighted chains from the minimum to y whose interior ranks form S.
  std::vector<std::map<std::uint32_t, Integer>> weights(p.size());
  weights[p.bottom()][0] = 1;
  for (std::size_t y : p.by_rank()) {
    if (y == p.bottom()) continue;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!p.less(x, y) || p.zeta(x, y) == 0) continue;
      const std::uint32_t add = x == p.bottom() ? 0U : std::uint32_t{1} << (p.rank(x) - 1);
      for (const auto& [mask, w] : weights[x]) weights[y][mask | add] += w * p.zeta(x, y);
    }
  }
  std::vector<Integer> values(std::size_t{1} << length);
  for (const auto& [mask, w] : weights[p.top()]) values[mask] = w;
  return FlagVector(FlagVector::Flavor::f, length, std::move(values));
}

FlagVector flag_h_vector(const QuasiGradedPoset& p) {
  FlagVector f = flag_f_vector(p);
  std::vector<Integer> h = f.values();
  for (unsigned i = 0; i < f.length(); ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t mask = 0; mask < h.size(); ++mask) {
      if (mask & bit) h[mask] -= h[mask ^ bit];
    }
  }
  return FlagVector(FlagVector::Flavor::h, f.length(), std::move(h));
}

AbPolynomial ab_index_via_flag(const QuasiGradedPoset& p) {
  FlagVector h = flag_h_vector(p);
  AbPolynomial out;
  for (std::uint32_t mask = 0; mask < h.values().size(); ++mask) {
    std::string letters(h.length(), 'a');
    for (unsigned i = 0; i < h.length(); ++i) {
      if ((mask >> i) & 1U) letters[i] = 'b';
    }
    out.add_term(AbWord(std::move(letters)), h.at(mask));
  }
  return out;
}

CdPolynomial cd_index(const QuasiGradedPoset& p) {
  EulerianReport report = p.eulerian_check();
  if (!report.eulerian) {
    const auto [x, z] = *report.failing_interval;
    throw NotEulerian("poset is not Eulerian: interval [" + p.id(x) + ", " + p.id(z) + "] has alternating sum " +
                      report.failing_sum.get_str());
  }
  try {
    return collapse_to_cd(ab_index(p));
  } catch (const NotInCdAlgebra& e) {
    throw InternalConsistencyError(std::string("Eulerian poset without a cd-index: ") + e.what());
  }
}

Integer zaslavsky_Z(const QuasiGradedPoset& p) {
  p.require_valid();
  return zaslavsky_Z(p, p.bottom(), p.top());
}

Integer zaslavsky_Z(const QuasiGradedPoset& p, std::size_t x, std::size_t y) {
  Integer sum = 0;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.leq(x, z) && p.leq(z, y)) sum += signed_by_rank(p.rank_between(x, z), p.mobius(x, z) * p.zeta(z, y));
  }
  return sum;
}

Integer zaslavsky_ZM(const QuasiGradedPoset& p, const EulerData& chi) {
  p.require_valid();
  return zaslavsky_ZM(p, p.bottom(), p.top(), chi);
}

Integer zaslavsky_ZM(const QuasiGradedPoset& p, std::size_t x, std::size_t y, const EulerData& chi) {
  Integer sum = 0;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.leq(x, z) && p.leq(z, y)) {
      sum += signed_by_rank(p.rank_between(x, z), p.mobius(x, z) * p.zeta(z, y) * chi.at(p.id(z)));
    }
  }
  return sum;
}

Integer complement_euler(const IntersectionPoset& p) {
  p.require_valid();
  return zaslavsky_ZM(p.poset(), p.euler());
}

}  // namespace arrcd
