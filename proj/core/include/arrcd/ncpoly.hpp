#pragma once

// Exact arithmetic in the free associative algebras Z<a,b> and Z<c,d>.
//
// Words are strings over a two-letter alphabet. Polynomials map words to
// nonzero arbitrary-precision integer coefficients; terms are kept in the
// canonical order (degree, then lexicographic with a < b and c < d), which is
// also the print order.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arrcd/errors.hpp"

namespace arrcd {

using Integer = mpz_class;

struct AbAlphabet {
  static constexpr char low = 'a';
  static constexpr char high = 'b';
  static constexpr bool compress_powers = false;
  static constexpr int weight(char) { return 1; }
};

struct CdAlphabet {
  static constexpr char low = 'c';
  static constexpr char high = 'd';
  static constexpr bool compress_powers = true;
  static constexpr int weight(char letter) { return letter == 'd' ? 2 : 1; }
};

template <class Alphabet>
class Word {
 public:
  Word() = default;

  /// Throws ParseError on letters outside the alphabet.
  explicit Word(std::string letters) : letters_(std::move(letters)) {
    for (char ch : letters_) {
      if (ch != Alphabet::low && ch != Alphabet::high) {
        throw ParseError(std::string("letter '") + ch + "' is not in the alphabet {" +
                         Alphabet::low + "," + Alphabet::high + "}");
      }
    }
    degree_ = compute_degree();
  }

  const std::string& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  int degree() const noexcept { return degree_; }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  Word reversed() const { return Word(std::string(letters_.rbegin(), letters_.rend()), degree_); }

  Word substr(std::size_t pos, std::size_t count = std::string::npos) const {
    Word out;
    out.letters_ = letters_.substr(pos, count);
    out.degree_ = out.compute_degree();
    return out;
  }

  friend Word operator+(const Word& lhs, const Word& rhs) {
    return Word(lhs.letters_ + rhs.letters_, lhs.degree_ + rhs.degree_);
  }

  friend bool operator==(const Word& lhs, const Word& rhs) { return lhs.letters_ == rhs.letters_; }

  friend bool operator<(const Word& lhs, const Word& rhs) {
    if (lhs.degree_ != rhs.degree_) return lhs.degree_ < rhs.degree_;
    return lhs.letters_ < rhs.letters_;
  }

 private:
  Word(std::string letters, int degree) : letters_(std::move(letters)), degree_(degree) {}

  int compute_degree() const {
    int d = 0;
    for (char ch : letters_) d += Alphabet::weight(ch);
    return d;
  }

  std::string letters_;
  int degree_ = 0;
};

using AbWord = Word<AbAlphabet>;
using CdWord = Word<CdAlphabet>;

template <class Alphabet>
class Polynomial {
 public:
  using word_type = Word<Alphabet>;
  using term_map = std::map<word_type, Integer>;

  Polynomial() = default;
  Polynomial(const word_type& word, const Integer& coefficient) { add_term(word, coefficient); }

  static Polynomial one() { return Polynomial(word_type(), 1); }
  static Polynomial constant(const Integer& value) { return Polynomial(word_type(), value); }
  static Polynomial letter(char ch) { return Polynomial(word_type(std::string(1, ch)), 1); }
  static Polynomial word(std::string_view letters) { return Polynomial(word_type(std::string(letters)), 1); }

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const word_type& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const word_type& word, const Integer& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(word, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// True for the zero polynomial and for any polynomial whose words share one degree.
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  /// Degrees present, ascending.
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [w, c] : terms_) {
      if (out.empty() || out.back() != w.degree()) out.push_back(w.degree());
    }
    return out;
  }

  Polynomial homogeneous_part(int degree) const {
    Polynomial out;
    for (const auto& [w, c] : terms_) {
      if (w.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), w, c);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
  }

  Polynomial& operator*=(const Integer& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) { return p *= Integer(-1); }
  friend Polynomial operator*(Polynomial p, const Integer& scalar) { return p *= scalar; }
  friend Polynomial operator*(const Integer& scalar, Polynomial p) { return p *= scalar; }

  /// Concatenation product extended bilinearly.
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    for (const auto& [lw, lc] : lhs.terms_) {
      for (const auto& [rw, rc] : rhs.terms_) out.add_term(lw + rw, lc * rc);
    }
    return out;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.terms_ == rhs.terms_; }

  Polynomial pow(unsigned exponent) const {
    Polynomial out = one();
    for (unsigned i = 0; i < exponent; ++i) out = out * *this;
    return out;
  }

  /// Reverses every word; the star involution.
  Polynomial star() const {
    Polynomial out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.reversed(), c);
    return out;
  }

  /// Exact division by an integer; throws OddCoefficient when a coefficient is not divisible.
  Polynomial divided_exactly(const Integer& divisor) const {
    Polynomial out;
    for (const auto& [w, c] : terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t())) {
        throw OddCoefficient("coefficient " + c.get_str() + " of word '" + w.letters() +
                             "' is not divisible by " + divisor.get_str());
      }
      Integer q = c / divisor;
      out.terms_.emplace_hint(out.terms_.end(), w, q);
    }
    return out;
  }

 private:
  term_map terms_;
};

using AbPolynomial = Polynomial<AbAlphabet>;
using CdPolynomial = Polynomial<CdAlphabet>;

extern template class Polynomial<AbAlphabet>;
extern template class Polynomial<CdAlphabet>;

/// Elements of Z<a,b> (x) Z<a,b>, stored as word pairs with nonzero coefficients.
class TensorAbPolynomial {
 public:
  using key_type = std::pair<AbWord, AbWord>;
  using term_map = std::map<key_type, Integer>;

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const AbWord& left, const AbWord& right, const Integer& coefficient);

  TensorAbPolynomial& operator+=(const TensorAbPolynomial& rhs);
  friend TensorAbPolynomial operator+(TensorAbPolynomial lhs, const TensorAbPolynomial& rhs) { return lhs += rhs; }
  friend bool operator==(const TensorAbPolynomial& lhs, const TensorAbPolynomial& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  /// x (x) y  ->  (u * x) (x) y
  TensorAbPolynomial times_left(const AbPolynomial& u) const;
  /// x (x) y  ->  x (x) (y * v)
  TensorAbPolynomial times_right(const AbPolynomial& v) const;

 private:
  term_map terms_;
};

/// p (x) q, bilinear.
TensorAbPolynomial tensor(const AbPolynomial& left, const AbPolynomial& right);

/// Algebra map c -> a+b, d -> ab+ba.
AbPolynomial expand_cd(const CdPolynomial& p);

/// Inverse of expand_cd on its image, degree by degree. Throws NotInCdAlgebra when
/// some homogeneous component is not a combination of expanded cd-words.
CdPolynomial collapse_to_cd(const AbPolynomial& p);

/// Deconcatenation coproduct dropping one letter: u1..uk -> sum_i u1..u(i-1) (x) u(i+1)..uk.
TensorAbPolynomial coproduct(const AbPolynomial& p);

/// (a - b)^k, cached per exponent (k < 40).
const AbPolynomial& a_minus_b_power(unsigned k);

std::string to_string(const AbPolynomial& p);
std::string to_string(const CdPolynomial& p);
std::string to_string(const TensorAbPolynomial& t);

std::ostream& operator<<(std::ostream& out, const AbPolynomial& p);
std::ostream& operator<<(std::ostream& out, const CdPolynomial& p);
std::ostream& operator<<(std::ostream& out, const TensorAbPolynomial& t);

/// Accepts the printed grammar: signed sums of [integer][*]factor(*factor)* with
/// optional ^exponents on single letters, e.g. "c^3 + 2*d*c" or "a*a - a*b".
AbPolynomial parse_ab(std::string_view text);
CdPolynomial parse_cd(std::string_view text);

}  // namespace arrcd
