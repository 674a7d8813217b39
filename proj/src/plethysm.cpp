#include "hyperoct/plethysm.hpp"

#include <vector>

#include "hyperoct/characters.hpp"
#include "hyperoct/error.hpp"

namespace hyperoct {

Alphabet::Alphabet(QTSeries series) : series_(std::move(series)) {
  for (const auto& [k, c] : series_.terms())
    if (sgn(c) < 0)
      throw Error(ErrorCode::NegativeCoefficient,
                  "alphabet coefficient at q^" + std::to_string(k.first) + " t^" +
                      std::to_string(k.second) + " is negative");
}

Alphabet alphabet_power(const Alphabet& a, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "plethystic power must be positive");
  QTSeries s(a.truncation());
  for (const auto& [key, c] : a.series().terms()) s.add_term(k * key.first, k * key.second, c);
  return Alphabet(std::move(s));
}

namespace {

std::vector<QTSeries> power_images(const Alphabet& a, int upto) {
  std::vector<QTSeries> p;
  p.reserve(upto + 1);
  p.emplace_back(QTSeries::constant(1, a.truncation()));
  for (int k = 1; k <= upto; ++k) p.push_back(alphabet_power(a, k).series());
  return p;
}

QTSeries product_of(const Partition& mu, const std::vector<QTSeries>& p, int truncation) {
  QTSeries r = QTSeries::constant(1, truncation);
  for (int part : mu.parts()) r = r * p[part];
  return r;
}

// sum_mu weight(mu)/z_mu p_mu[A]
template <class Weight>
QTSeries class_sum(int n, const Alphabet& a, Weight weight) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  const auto p = power_images(a, n);
  QTSeries r(a.truncation());
  for (const Partition& mu : partitions_of(n)) {
    Rational w(Integer(weight(mu)), z_mu_exact(mu));
    if (sgn(w) == 0) continue;
    w.canonicalize();
    r += product_of(mu, p, a.truncation()) * w;
  }
  return r;
}

}  // namespace

QTSeries power_sum(const Partition& mu, const Alphabet& a) {
  return product_of(mu, power_images(a, mu.largest()), a.truncation());
}

QTSeries h_of_alphabet(int n, const Alphabet& a) {
  return class_sum(n, a, [](const Partition&) { return 1L; });
}

QTSeries e_of_alphabet(int n, const Alphabet& a) {
  return class_sum(n, a, [n](const Partition& mu) { return (n - mu.length()) % 2 ? -1L : 1L; });
}

QTSeries schur_of_alphabet(const Partition& lambda, const Alphabet& a) {
  return class_sum(lambda.size(), a,
                   [&](const Partition& mu) { return static_cast<long>(mn_character(lambda, mu)); });
}

QTSeries omega(const Alphabet& a) {
  if (sgn(a.series().coeff(0, 0)) != 0)
    throw Error(ErrorCode::InvalidArgument, "omega needs an alphabet without constant term");
  const int n = a.truncation();
  // Newton: m h_m = sum_k p_k h_{m-k}
  std::vector<QTSeries> h{QTSeries::constant(1, n)};
  std::vector<QTSeries> p{QTSeries(n)};
  QTSeries total = h[0];
  for (int m = 1; m <= 2 * n; ++m) {
    p.push_back(alphabet_power(a, m).series());
    QTSeries hm(n);
    for (int k = 1; k <= m; ++k) hm += p[k] * h[m - k];
    hm *= Rational(1, m);
    total += hm;
    h.push_back(std::move(hm));
  }
  return total;
}

Alphabet even_q_alphabet(int truncation) {
  return Alphabet(QTSeries::geometric(2, 0, truncation));
}

Alphabet odd_q_alphabet(int truncation) {
  return Alphabet(QTSeries::monomial(1, 0, 1, truncation) * QTSeries::geometric(2, 0, truncation));
}

Alphabet diagonal_alphabet(int truncation) {
  QTSeries num = QTSeries::constant(1, truncation) + QTSeries::monomial(1, 1, 1, truncation);
  return Alphabet(num * QTSeries::geometric(2, 0, truncation) *
                  QTSeries::geometric(0, 2, truncation));
}

Alphabet skew_diagonal_alphabet(int truncation) {
  QTSeries num = QTSeries::monomial(1, 0, 1, truncation) + QTSeries::monomial(0, 1, 1, truncation);
  return Alphabet(num * QTSeries::geometric(2, 0, truncation) *
                  QTSeries::geometric(0, 2, truncation));
}

}  // namespace hyperoct
