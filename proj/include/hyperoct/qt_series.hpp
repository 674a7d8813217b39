#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hyperoct/rational.hpp"

namespace hyperoct {

// Truncated power series in q,t with exact rational coefficients. Terms with an exponent
// above the truncation order N are discarded; no zero coefficient is ever stored.
class QTSeries {
 public:
  using Key = std::pair<int, int>;  // (q-exponent, t-exponent)
  using TermMap = std::map<Key, Rational>;

  explicit QTSeries(int truncation = 0);

  static QTSeries constant(const Rational& c, int truncation);
  static QTSeries monomial(int qe, int te, const Rational& c, int truncation);
  // 1 / (1 - c q^a t^b)
  static QTSeries geometric(int a, int b, int truncation, const Rational& c = 1);

  int truncation() const noexcept { return truncation_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coeff(int qe, int te) const;
  void add_term(int qe, int te, const Rational& c);

  QTSeries& operator+=(const QTSeries& o);
  QTSeries& operator-=(const QTSeries& o);
  QTSeries& operator*=(const Rational& c);
  QTSeries& operator*=(const QTSeries& o);
  friend QTSeries operator+(QTSeries a, const QTSeries& b) { return a += b; }
  friend QTSeries operator-(QTSeries a, const QTSeries& b) { return a -= b; }
  friend QTSeries operator*(QTSeries a, const Rational& c) { return a *= c; }
  friend QTSeries operator*(const Rational& c, QTSeries a) { return a *= c; }
  friend QTSeries operator*(const QTSeries& a, const QTSeries& b);
  QTSeries operator-() const;

  // coefficient equality; truncation orders are not compared
  friend bool operator==(const QTSeries& a, const QTSeries& b) { return a.terms_ == b.terms_; }

  QTSeries truncated(int n) const;
  // reinterpret with truncation order n (meaningful for polynomials when raising the order)
  QTSeries with_truncation(int n) const;
  int q_degree() const;  // -1 for the zero series
  int t_degree() const;
  bool vanishes_above(int q_bound, int t_bound) const;
  bool has_nonnegative_integer_coefficients() const;
  Rational at_one() const;
  QTSeries at_t_zero() const;
  // q^degree * p(1/q); requires q_degree() <= degree
  QTSeries reversed_q(int degree) const;
  // multiplicative inverse; requires nonzero constant term
  QTSeries inverse() const;

  // "1 + q*t + 3/2*q^2*t^4"
  std::string to_string() const;

 private:
  int truncation_;
  TermMap terms_;
};

struct CoefficientMismatch {
  int q_exp = 0;
  int t_exp = 0;
  Rational lhs, rhs;
};

// smallest exponent pair where the coefficients differ
std::optional<CoefficientMismatch> first_difference(const QTSeries& lhs, const QTSeries& rhs);

// exact quotient num/den of two polynomials; throws DivisionInexact when den does not divide num
QTSeries divide_exact(const QTSeries& num, const QTSeries& den);

}  // namespace hyperoct
