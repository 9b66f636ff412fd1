#include "arrcd/operators.hpp"

#include "arrcd/flagenum.hpp"

namespace arrcd {

namespace {

template <class WordMap>
AbPolynomial apply_linear(const AbPolynomial& p, WordMap&& on_word) {
  AbPolynomial out;
  for (const auto& [w, c] : p.terms()) out += on_word(w) * c;
  return out;
}

const AbPolynomial& letter_b() {
  static const AbPolynomial b = AbPolynomial::letter('b');
  return b;
}

AbPolynomial kappa_word(const AbWord& w) {
  if (w.letters().find('b') != std::string::npos) return {};
  return a_minus_b_power(static_cast<unsigned>(w.length()));
}

AbPolynomial lambda_bar_word(const AbWord& w) {
  if (w.letters().find('a') != std::string::npos) return {};
  return a_minus_b_power(static_cast<unsigned>(w.length()));
}

AbPolynomial eta_word(const AbWord& w) {
  const std::string& s = w.letters();
  // b^m a^k: no "ab" factor.
  if (s.find("ab") != std::string::npos) return {};
  return a_minus_b_power(static_cast<unsigned>(s.size())) * Integer(2);
}

// E(v) = eta(v) + sum_j eta(v[0,j)) b E(v(j..]), the tail of phi after the
// first deletion. tail[i] caches E of the suffix starting at i.
AbPolynomial phi_word(const AbWord& w) {
  const std::size_t n = w.length();
  std::vector<AbPolynomial> tail(n + 1);
  for (std::size_t start = n + 1; start-- > 0;) {
    AbPolynomial sum = eta_word(w.substr(start));
    for (std::size_t j = start; j < n; ++j) {
      AbPolynomial head = eta_word(w.substr(start, j - start));
      if (head.is_zero()) continue;
      sum += head * letter_b() * tail[j + 1];
    }
    tail[start] = std::move(sum);
  }
  AbPolynomial out = kappa_word(w);
  for (std::size_t i = 0; i < n; ++i) {
    AbPolynomial head = kappa_word(w.substr(0, i));
    if (head.is_zero()) continue;
    out += head * letter_b() * tail[i + 1];
  }
  return out;
}

CdPolynomial omega_word(const AbWord& w) {
  const std::string& s = w.letters();
  std::string cd;
  Integer scale = 1;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == 'a' && i + 1 < s.size() && s[i + 1] == 'b') {
      cd.push_back('d');
      scale *= 2;
      i += 2;
    } else {
      cd.push_back('c');
      i += 1;
    }
  }
  return CdPolynomial(CdWord(std::move(cd)), scale);
}

AbPolynomial g_word(const AbWord& w) {
  AbPolynomial out = phi_word(w) * letter_b();
  const AbPolynomial& a_minus_b = a_minus_b_power(1);
  for (std::size_t i = 0; i < w.length(); ++i) {
    AbPolynomial tail = lambda_bar_word(w.substr(i + 1));
    if (tail.is_zero()) continue;
    out += phi_word(w.substr(0, i)) * letter_b() * tail * a_minus_b;
  }
  return out;
}

}  // namespace

AbPolynomial kappa(const AbPolynomial& p) { return apply_linear(p, kappa_word); }
AbPolynomial lambda_bar(const AbPolynomial& p) { return apply_linear(p, lambda_bar_word); }
AbPolynomial eta(const AbPolynomial& p) { return apply_linear(p, eta_word); }
AbPolynomial phi(const AbPolynomial& p) { return apply_linear(p, phi_word); }
AbPolynomial g_op(const AbPolynomial& p) { return apply_linear(p, g_word); }

CdPolynomial omega(const AbPolynomial& p) {
  CdPolynomial out;
  for (const auto& [w, c] : p.terms()) out += omega_word(w) * c;
  return out;
}

AbPolynomial h_prime(const AbPolynomial& p) {
  AbPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    if (!w.empty()) out.add_term(w.substr(0, w.length() - 1), c);
  }
  return out;
}

AbPolynomial eta_M(const QuasiGradedPoset& p, const EulerData& chi) {
  p.require_valid();
  if (!p.has_classical_zeta()) throw ValidationError("eta_M is defined for the classical zeta only");
  if (p.rank() < 1) throw ValidationError("eta_M needs a poset of rank at least 1");
  return a_minus_b_power(static_cast<unsigned>(p.rank() - 1)) * zaslavsky_ZM(p, chi);
}

}  // namespace arrcd
