#pragma once

#include "hyperoct/partition.hpp"
#include "hyperoct/qt_series.hpp"

namespace hyperoct {

// A formal sum of monomials q^a t^b with nonnegative multiplicities.
class Alphabet {
 public:
  explicit Alphabet(QTSeries series);

  const QTSeries& series() const noexcept { return series_; }
  int truncation() const noexcept { return series_.truncation(); }

 private:
  QTSeries series_;
};

// p_k[A]: every monomial raised to its k-th power
Alphabet alphabet_power(const Alphabet& a, int k);

// p_mu[A] = prod_i p_{mu_i}[A]
QTSeries power_sum(const Partition& mu, const Alphabet& a);

QTSeries h_of_alphabet(int n, const Alphabet& a);
QTSeries e_of_alphabet(int n, const Alphabet& a);
QTSeries schur_of_alphabet(const Partition& lambda, const Alphabet& a);
// sum_n h_n[A]; A must have no constant term
QTSeries omega(const Alphabet& a);

// 1/(1-q^2)
Alphabet even_q_alphabet(int truncation);
// q/(1-q^2)
Alphabet odd_q_alphabet(int truncation);
// (1+qt)/((1-q^2)(1-t^2))
Alphabet diagonal_alphabet(int truncation);
// (q+t)/((1-q^2)(1-t^2))
Alphabet skew_diagonal_alphabet(int truncation);

}  // namespace hyperoct
