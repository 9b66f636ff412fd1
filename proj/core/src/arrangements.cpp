#include "arrcd/arrangements.hpp"

#include <algorithm>

#include "arrcd/flagenum.hpp"
#include "arrcd/operators.hpp"

namespace arrcd {

namespace {

const AbPolynomial& letter_a() {
  static const AbPolynomial a = AbPolynomial::letter('a');
  return a;
}

const AbPolynomial& letter_b() {
  static const AbPolynomial b = AbPolynomial::letter('b');
  return b;
}

long manifold_dim(const IntersectionPoset& p) { return p.carrier_dim() + 1; }

/// The boundary of M is the carrier, so chi(carrier) = (1 - (-1)^dim M) chi(M).
void check_bounding(const IntersectionPoset& p, const Integer& manifold_euler) {
  p.require_valid();
  if (p.kind() != CarrierKind::closed) {
    throw ValidationError("stratifications need an arrangement of closed submanifolds");
  }
  const Integer expected = manifold_dim(p) % 2 == 0 ? Integer(0) : Integer(2 * manifold_euler);
  const Integer& carrier = p.chi(p.poset().bottom());
  if (carrier != expected) {
    throw ValidationError("carrier Euler characteristic " + carrier.get_str() + " cannot bound a manifold of dimension " +
                          std::to_string(manifold_dim(p)) + " and Euler characteristic " + manifold_euler.get_str());
  }
}

CdPolynomial c_squared_minus_2d() {
  return CdPolynomial::word("cc") - CdPolynomial::word("d") * Integer(2);
}

CdPolynomial collapse_route(const AbPolynomial& p, const char* route) {
  try {
    return collapse_to_cd(p);
  } catch (const NotInCdAlgebra& e) {
    throw InternalConsistencyError(std::string(route) + " route left the cd-subalgebra: " + e.what());
  }
}

std::string unused_id(const QuasiGradedPoset& p, std::string id) {
  while (p.find(id)) id += "'";
  return id;
}

}  // namespace

QuasiGradedPoset build_q(const IntersectionPoset& p, const Integer& manifold_euler) {
  check_bounding(p, manifold_euler);
  const QuasiGradedPoset& P = p.poset();
  const std::size_t empty = P.top();

  // Q index 0 is the empty element, then the non-empty elements in P order, then M.
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (x != empty) members.push_back(x);
  }
  const std::size_t n = members.size() + 2;
  const std::size_t m_index = n - 1;

  std::vector<std::string> ids{P.id(empty)};
  std::vector<long> ranks{0};
  for (std::size_t x : members) {
    ids.push_back(P.id(x));
    ranks.push_back(*p.dim(x) + 1);
  }
  ids.push_back(unused_id(P, "M"));
  ranks.push_back(manifold_dim(p) + 1);

  std::vector<std::vector<std::uint64_t>> rel(n, empty_bit_row(n));
  IncidenceFunction zeta(n);
  for (std::size_t j = 0; j < n; ++j) set_bit(rel[0], j);
  zeta(0, 0) = 1;
  zeta(0, m_index) = manifold_euler;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::size_t x = members[i];
    zeta(0, i + 1) = zaslavsky_ZM(P, x, empty, p.euler());
    set_bit(rel[i + 1], m_index);
    zeta(i + 1, m_index) = 1;
    for (std::size_t j = 0; j < members.size(); ++j) {
      const std::size_t y = members[j];
      if (P.leq(y, x)) {
        set_bit(rel[i + 1], j + 1);
        zeta(i + 1, j + 1) = zaslavsky_Z(P, y, x);
      }
    }
  }
  set_bit(rel[m_index], m_index);
  zeta(m_index, m_index) = 1;
  return QuasiGradedPoset(std::move(ids), std::move(ranks), std::move(rel), std::move(zeta));
}

CdPolynomial cd_index_main(const IntersectionPoset& p, const Integer& manifold_euler) {
  check_bounding(p, manifold_euler);
  const QuasiGradedPoset& P = p.poset();
  const long n = manifold_dim(p);
  const CdPolynomial step = c_squared_minus_2d();

  CdPolynomial reversed = (n % 2 == 0 ? step.pow(static_cast<unsigned>(n / 2))
                                      : CdPolynomial::letter('c') * step.pow(static_cast<unsigned>((n - 1) / 2))) *
                          manifold_euler;

  const std::vector<AbPolynomial> lower = lower_interval_indices(P);
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (x == P.bottom() || x == P.top()) continue;
    const long d = *p.dim(x);
    const Integer& chi = p.chi(x);
    if (d % 2 != 0 || chi == 0) continue;
    CdPolynomial term = omega(letter_a() * lower[x] * letter_b()).divided_exactly(2);
    reversed += term * step.pow(static_cast<unsigned>(d / 2)) * chi;
  }
  return reversed.star();
}

CdPolynomial cd_index_chainsum(const IntersectionPoset& p, const Integer& manifold_euler) {
  check_bounding(p, manifold_euler);
  const QuasiGradedPoset& P = p.poset();
  const std::size_t empty = P.top();
  auto power = [](long k) -> const AbPolynomial& { return a_minus_b_power(static_cast<unsigned>(k)); };

  // prefix[y]: chains from the adjoined minimum up to y, weighted by Z on each
  // step after the first, times their weight up to (excluding) y.
  std::vector<AbPolynomial> prefix_b(P.size());
  AbPolynomial reversed = power(manifold_dim(p)) * manifold_euler;
  for (std::size_t y : P.by_rank()) {
    if (y == empty) continue;
    AbPolynomial prefix = power(P.rank(y));
    for (std::size_t x = 0; x < P.size(); ++x) {
      if (x == empty || !P.less(x, y)) continue;
      const Integer z = zaslavsky_Z(P, x, y);
      if (z != 0) prefix += prefix_b[x] * power(P.rank_between(x, y) - 1) * z;
    }
    prefix_b[y] = prefix * letter_b();
    const Integer last = zaslavsky_ZM(P, y, empty, p.euler());
    if (last != 0) reversed += prefix_b[y] * power(P.rank_between(y, empty) - 1) * last;
  }
  return collapse_route(reversed, "chain-sum").star();
}

CdPolynomial cd_index_q(const IntersectionPoset& p, const Integer& manifold_euler) {
  return cd_index(build_q(p, manifold_euler));
}

CdPolynomial spherical_cd_index(const IntersectionPoset& p) {
  p.require_valid();
  const QuasiGradedPoset& P = p.poset();
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (p.is_empty_element(x)) continue;
    const Integer expected = *p.dim(x) % 2 == 0 ? 2 : 0;
    if (p.chi(x) != expected) {
      throw NotSpherical("element " + P.id(x) + " of dimension " + std::to_string(*p.dim(x)) +
                         " has Euler characteristic " + p.chi(x).get_str() + ", expected " + expected.get_str());
    }
  }
  return omega(letter_a() * ab_index(P)).star();
}

CdPolynomial toric_cd_index(const IntersectionPoset& p, long torus_dim) {
  if (torus_dim < 2) throw TorusDimensionTooSmall("toric formula needs a torus of dimension at least 2");
  p.require_valid();
  const QuasiGradedPoset& P = p.poset();
  if (p.carrier_dim() != torus_dim) {
    throw NotToric("carrier dimension " + std::to_string(p.carrier_dim()) + " differs from torus dimension " +
                   std::to_string(torus_dim));
  }
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (p.is_empty_element(x)) continue;
    const Integer& chi = p.chi(x);
    if (*p.dim(x) > 0 && chi != 0) {
      throw NotToric("element " + P.id(x) + " of positive dimension has Euler characteristic " + chi.get_str());
    }
    if (*p.dim(x) == 0 && chi != 1) {
      throw NotToric("point element " + P.id(x) + " has Euler characteristic " + chi.get_str() +
                     "; the toric formula needs one element per point (per-component poset)");
    }
  }
  return omega(letter_a() * h_prime(ab_index(P)) * letter_b()).divided_exactly(2).star();
}

std::vector<Violation> divisibility_check(const CdPolynomial& q) {
  std::vector<Violation> out;
  for (const auto& [w, c] : q.terms()) {
    const auto k = std::count(w.letters().begin(), w.letters().end(), 'd');
    if (k < 1) continue;
    Integer modulus = 1;
    modulus <<= static_cast<unsigned long>(k - 1);
    if (!mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t())) {
      out.push_back({"divisibility", "coefficient " + c.get_str() + " of " + w.letters() + " is not divisible by " +
                                         modulus.get_str()});
    }
  }
  return out;
}

StratificationResult stratify(const IntersectionPoset& p, const Integer& manifold_euler, RouteSelection routes) {
  if (!routes.main && !routes.chainsum && !routes.q) throw ValidationError("no route selected");
  StratificationResult result;
  if (routes.main) result.main = cd_index_main(p, manifold_euler);
  if (routes.chainsum) result.chainsum = cd_index_chainsum(p, manifold_euler);
  if (routes.q) {
    result.q_poset = build_q(p, manifold_euler);
    result.q = cd_index(*result.q_poset);
  }

  const CdPolynomial* reference = nullptr;
  std::string reference_name;
  for (const auto& [name, value] : {std::pair{"main", &result.main}, std::pair{"chainsum", &result.chainsum},
                                    std::pair{"q", &result.q}}) {
    if (!value->has_value()) continue;
    if (!reference) {
      reference = &**value;
      reference_name = name;
    } else if (!(**value == *reference)) {
      throw RouteDisagreement("route " + std::string(name) + " gives " + to_string(**value) + " but route " +
                              reference_name + " gives " + to_string(*reference));
    }
  }
  result.cd_index = *reference;
  if (auto bad = divisibility_check(result.cd_index); !bad.empty()) throw OddCoefficient(bad.front().detail);
  return result;
}

}  // namespace arrcd
