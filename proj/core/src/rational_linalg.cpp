#include "arrcd/rational_linalg.hpp"

#include <utility>

namespace arrcd {

Echelon row_reduce(RationalMatrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const Rational inverse = 1 / m(row, col);
    for (std::size_t k = col; k < m.cols(); ++k) m(row, k) *= inverse;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = -m(i, col);
      m.add_row_multiple(i, row, factor);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::optional<std::vector<Rational>> particular_solution(const RationalMatrix& a, const std::vector<Rational>& b) {
  RationalMatrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, j) = a(i, j);
    augmented(i, a.cols()) = b[i];
  }
  Echelon e = row_reduce(std::move(augmented));
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& x) {
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

std::vector<Rational> multiply(const IntegerMatrix& a, const std::vector<Rational>& x) {
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += Rational(a(i, j)) * x[j];
  }
  return out;
}

namespace {

// Transform-tracking wrapper: every operation on the working matrix is
// mirrored on left (row operations) or on right and right_inverse (column
// operations), keeping left * input * right = working.
class SmithWorker {
 public:
  explicit SmithWorker(const IntegerMatrix& input)
      : d_(input),
        left_(IntegerMatrix::identity(input.rows())),
        right_(IntegerMatrix::identity(input.cols())),
        right_inverse_(IntegerMatrix::identity(input.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    d_.swap_rows(i, j);
    left_.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    d_.swap_cols(i, j);
    right_.swap_cols(i, j);
    right_inverse_.swap_rows(i, j);
  }
  /// row i += f * row j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    d_.add_row_multiple(i, j, f);
    left_.add_row_multiple(i, j, f);
  }
  /// col i += f * col j; the inverse picks up row j -= f * row i.
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    d_.add_col_multiple(i, j, f);
    right_.add_col_multiple(i, j, f);
    right_inverse_.add_row_multiple(j, i, Integer(-f));
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < d_.cols(); ++k) d_(i, k) = -d_(i, k);
    for (std::size_t k = 0; k < left_.cols(); ++k) left_(i, k) = -left_(i, k);
  }

  SmithForm run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    std::size_t t = 0;
    for (; t < m && t < n; ++t) {
      if (!move_smallest_to(t, t, m, n)) break;
      for (;;) {
        bool clear = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (d_(i, t) == 0) continue;
          Integer q = d_(i, t) / d_(t, t);
          add_row(i, t, -q);
          clear = clear && d_(i, t) == 0;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d_(t, j) == 0) continue;
          Integer q = d_(t, j) / d_(t, t);
          add_col(j, t, -q);
          clear = clear && d_(t, j) == 0;
        }
        if (!clear) {
          move_smallest_in_cross(t);
          continue;
        }
        std::optional<std::size_t> offending_row;
        for (std::size_t i = t + 1; i < m && !offending_row; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
              offending_row = i;
              break;
            }
          }
        }
        if (!offending_row) break;
        add_row(t, *offending_row, 1);
      }
      if (d_(t, t) < 0) negate_row(t);
    }
    return SmithForm{std::move(d_), std::move(left_), std::move(right_), std::move(right_inverse_), t};
  }

 private:
  bool move_smallest_to(std::size_t t, std::size_t, std::size_t m, std::size_t n) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (d_(i, j) == 0) continue;
        if (!best || abs(d_(i, j)) < abs(d_(best->first, best->second))) best = {i, j};
      }
    }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void move_smallest_in_cross(std::size_t t) {
    std::size_t best_i = t;
    std::size_t best_j = t;
    for (std::size_t i = t; i < d_.rows(); ++i) {
      if (d_(i, t) != 0 && (d_(best_i, best_j) == 0 || abs(d_(i, t)) < abs(d_(best_i, best_j)))) {
        best_i = i;
        best_j = t;
      }
    }
    for (std::size_t j = t; j < d_.cols(); ++j) {
      if (d_(t, j) != 0 && (d_(best_i, best_j) == 0 || abs(d_(t, j)) < abs(d_(best_i, best_j)))) {
        best_i = t;
        best_j = j;
      }
    }
    swap_rows(t, best_i);
    swap_cols(t, best_j);
  }

  IntegerMatrix d_;
  IntegerMatrix left_;
  IntegerMatrix right_;
  IntegerMatrix right_inverse_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) { return SmithWorker(input).run(); }

IntegerMatrix hermite_normal_form(IntegerMatrix m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Euclid on the column below row until one nonzero entry remains.
    for (;;) {
      std::optional<std::size_t> smallest;
      for (std::size_t i = row; i < m.rows(); ++i) {
        if (m(i, col) != 0 && (!smallest || abs(m(i, col)) < abs(m(*smallest, col)))) smallest = i;
      }
      if (!smallest) break;
      m.swap_rows(row, *smallest);
      bool done = true;
      for (std::size_t i = row + 1; i < m.rows(); ++i) {
        if (m(i, col) == 0) continue;
        Integer q = m(i, col) / m(row, col);
        m.add_row_multiple(i, row, Integer(-q));
        done = done && m(i, col) == 0;
      }
      if (done) break;
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0) {
      for (std::size_t k = 0; k < m.cols(); ++k) m(row, k) = -m(row, k);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(row, col).get_mpz_t());
      if (q != 0) m.add_row_multiple(i, row, Integer(-q));
    }
    ++row;
  }
  return m.top_rows(row);
}

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m(i, j) * scale;
      out(i, j) = scaled.get_num();
    }
  }
  return out;
}

IntegerMatrix saturated_row_basis(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  return hermite_normal_form(s.right_inverse.top_rows(s.rank));
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

Rational fractional_part(const Rational& q) {
  Integer floor;
  mpz_fdiv_q(floor.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational out = q - floor;
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto valid_integer = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational number: \"" + text + "\"");
  }
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  Rational out(Integer(num[0] == '+' ? num.substr(1) : num), d);
  out.canonicalize();
  return out;
}

}  // namespace arrcd
