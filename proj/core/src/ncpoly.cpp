#include "arrcd/ncpoly.hpp"

#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace arrcd {

template class Polynomial<AbAlphabet>;
template class Polynomial<CdAlphabet>;

void TensorAbPolynomial::add_term(const AbWord& left, const AbWord& right, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(key_type(left, right), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorAbPolynomial& TensorAbPolynomial::operator+=(const TensorAbPolynomial& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

TensorAbPolynomial TensorAbPolynomial::times_left(const AbPolynomial& u) const {
  TensorAbPolynomial out;
  for (const auto& [key, c] : terms_) {
    for (const auto& [w, uc] : u.terms()) out.add_term(w + key.first, key.second, c * uc);
  }
  return out;
}

TensorAbPolynomial TensorAbPolynomial::times_right(const AbPolynomial& v) const {
  TensorAbPolynomial out;
  for (const auto& [key, c] : terms_) {
    for (const auto& [w, vc] : v.terms()) out.add_term(key.first, key.second + w, c * vc);
  }
  return out;
}

TensorAbPolynomial tensor(const AbPolynomial& left, const AbPolynomial& right) {
  TensorAbPolynomial out;
  for (const auto& [lw, lc] : left.terms()) {
    for (const auto& [rw, rc] : right.terms()) out.add_term(lw, rw, lc * rc);
  }
  return out;
}

AbPolynomial expand_cd(const CdPolynomial& p) {
  const AbPolynomial c = AbPolynomial::letter('a') + AbPolynomial::letter('b');
  const AbPolynomial d = AbPolynomial::word("ab") + AbPolynomial::word("ba");
  AbPolynomial out;
  for (const auto& [w, coeff] : p.terms()) {
    AbPolynomial term = AbPolynomial::constant(coeff);
    for (char ch : w.letters()) term = term * (ch == 'c' ? c : d);
    out += term;
  }
  return out;
}

namespace {

// The expansion of a cd-word has, as its lexicographically smallest ab-word
// (a < b), the word obtained by c -> a and d -> ab, with coefficient 1. Those
// leading words are exactly the ab-words in which every b directly follows an
// a that is not already paired. Reading one back is a greedy scan.
bool leading_word_to_cd(const AbWord& word, CdWord& out) {
  const std::string& s = word.letters();
  std::string cd;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] != 'a') return false;
    if (i + 1 < s.size() && s[i + 1] == 'b') {
      cd.push_back('d');
      i += 2;
    } else {
      cd.push_back('c');
      i += 1;
    }
  }
  out = CdWord(std::move(cd));
  return true;
}

CdPolynomial collapse_homogeneous(AbPolynomial remainder) {
  CdPolynomial out;
  while (!remainder.is_zero()) {
    // Same degree throughout, so the first term in canonical order is the
    // lexicographically smallest word.
    const auto& [lead, coeff] = *remainder.terms().begin();
    CdWord cd;
    if (!leading_word_to_cd(lead, cd)) {
      throw NotInCdAlgebra("ab-polynomial is not in the cd-subalgebra: no cd-word leads with '" +
                           lead.letters() + "'");
    }
    const Integer c = coeff;
    out.add_term(cd, c);
    remainder -= expand_cd(CdPolynomial(cd, c));
  }
  return out;
}

}  // namespace

CdPolynomial collapse_to_cd(const AbPolynomial& p) {
  CdPolynomial out;
  for (int degree : p.degrees()) out += collapse_homogeneous(p.homogeneous_part(degree));
  return out;
}

TensorAbPolynomial coproduct(const AbPolynomial& p) {
  TensorAbPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.length(); ++i) out.add_term(w.substr(0, i), w.substr(i + 1), c);
  }
  return out;
}

const AbPolynomial& a_minus_b_power(unsigned k) {
  constexpr unsigned kMax = 40;
  static std::array<std::once_flag, kMax> flags;
  static std::array<std::unique_ptr<AbPolynomial>, kMax> table;
  if (k >= kMax) throw std::length_error("(a-b)^k requested beyond the cached range");
  std::call_once(flags[k], [k] {
    const AbPolynomial base = AbPolynomial::letter('a') - AbPolynomial::letter('b');
    table[k] = std::make_unique<AbPolynomial>(k == 0 ? AbPolynomial::one() : a_minus_b_power(k - 1) * base);
  });
  return *table[k];
}

// ---------------------------------------------------------------------------
// Text form

namespace {

template <class Alphabet>
std::string render_word(const Word<Alphabet>& w) {
  const std::string& s = w.letters();
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t run = 1;
    if (Alphabet::compress_powers) {
      while (i + run < s.size() && s[i + run] == s[i]) ++run;
    }
    if (!out.empty()) out += '*';
    out += s[i];
    if (run > 1) out += '^' + std::to_string(run);
    i += run;
  }
  return out;
}

template <class Alphabet>
std::string render(const Polynomial<Alphabet>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += render_word(w);
    }
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  template <class Alphabet>
  Polynomial<Alphabet> parse() {
    Polynomial<Alphabet> out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term<Alphabet>(out, sign);
      skip_space();
    }
    return out;
  }

 private:
  template <class Alphabet>
  void parse_term(Polynomial<Alphabet>& out, int sign) {
    Integer coeff = 1;
    bool have_number = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_integer();
      have_number = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || !is_letter<Alphabet>(peek())) fail("expected a letter after '*'");
      }
    }
    std::string letters;
    while (!at_end() && is_letter<Alphabet>(peek())) {
      char ch = peek();
      ++pos_;
      skip_space();
      std::size_t count = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        Integer e = read_integer();
        if (e > 4096) fail("exponent too large");
        count = e.get_ui();
        skip_space();
      }
      letters.append(count, ch);
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || !is_letter<Alphabet>(peek())) fail("expected a letter after '*'");
      }
    }
    if (!have_number && letters.empty()) fail("expected a term");
    out.add_term(Word<Alphabet>(std::move(letters)), sign < 0 ? Integer(-coeff) : coeff);
  }

  template <class Alphabet>
  static bool is_letter(char ch) {
    return ch == Alphabet::low || ch == Alphabet::high;
  }

  Integer read_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why + " in \"" +
                     std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const AbPolynomial& p) { return render(p); }
std::string to_string(const CdPolynomial& p) { return render(p); }

std::string to_string(const TensorAbPolynomial& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "(" + (key.first.empty() ? std::string("1") : render_word(key.first)) + " | " +
           (key.second.empty() ? std::string("1") : render_word(key.second)) + ")";
  }
  return out;
}

AbPolynomial parse_ab(std::string_view text) { return PolyParser(text).parse<AbAlphabet>(); }
CdPolynomial parse_cd(std::string_view text) { return PolyParser(text).parse<CdAlphabet>(); }

std::ostream& operator<<(std::ostream& out, const AbPolynomial& p) { return out << to_string(p); }
std::ostream& operator<<(std::ostream& out, const CdPolynomial& p) { return out << to_string(p); }
std::ostream& operator<<(std::ostream& out, const TensorAbPolynomial& t) { return out << to_string(t); }

}  // namespace arrcd
