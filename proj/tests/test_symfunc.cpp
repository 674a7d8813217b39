#include "printers.hpp"

#include "hyperoct/characters.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/plethysm.hpp"
#include "hyperoct/qt_series.hpp"
#include "hyperoct/sym_expansion.hpp"

using namespace hyperoct;

namespace {

constexpr int N = 12;

QTSeries geometric_q(int step, int coeff_exp = 0) {
  QTSeries s(N);
  for (int e = coeff_exp; e <= N; e += step) s.add_term(e, 0, 1);
  return s;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const QTSeries g = QTSeries::geometric(1, 0, N);
  CHECK(g == geometric_q(1));
  const QTSeries one_minus_q = QTSeries::constant(1, N) - QTSeries::monomial(1, 0, 1, N);
  CHECK(g * one_minus_q == QTSeries::constant(1, N));
  CHECK(one_minus_q.inverse() == g);
  CHECK(divide_exact(QTSeries::constant(1, N) - QTSeries::monomial(2, 0, 1, N), one_minus_q) ==
        QTSeries::constant(1, N) + QTSeries::monomial(1, 0, 1, N));
  CHECK_THROWS_AS(divide_exact(QTSeries::monomial(1, 0, 1, 4), QTSeries::monomial(2, 0, 1, 4)),
                  Error);
  QTSeries a(N), b(N);
  a.add_term(2, 3, 5);
  b.add_term(2, 3, 4);
  const auto d = first_difference(a, b);
  REQUIRE(d);
  CHECK(d->q_exp == 2);
  CHECK(d->t_exp == 3);
  CHECK_FALSE(first_difference(a, a));
  CHECK(QTSeries::monomial(N + 1, 0, 1, N).is_zero());
  QTSeries p(N);
  p.add_term(0, 0, 1);
  p.add_term(3, 1, 2);
  CHECK(p.reversed_q(3).coeff(0, 1) == 2);
  CHECK(p.reversed_q(3).coeff(3, 0) == 1);
  CHECK(p.at_one() == 3);
}

TEST_CASE("alphabet powers") {
  const Alphabet a(QTSeries::geometric(1, 0, N));
  CHECK(alphabet_power(a, 2).series() == QTSeries::geometric(2, 0, N));
  const Alphabet d = diagonal_alphabet(N);
  CHECK(alphabet_power(d, 1).series() == d.series());
  const Alphabet odd = odd_q_alphabet(N);
  CHECK(alphabet_power(odd, 3).series() == QTSeries::geometric(6, 0, N) *
                                               QTSeries::monomial(3, 0, 1, N));
  QTSeries neg(N);
  neg.add_term(1, 0, -1);
  CHECK_THROWS_AS(Alphabet{neg}, Error);
}

TEST_CASE("h_2 of the principal alphabet counts pairs") {
  const QTSeries h2 = h_of_alphabet(2, Alphabet(QTSeries::geometric(1, 0, N)));
  for (int d = 0; d <= N; ++d) {
    int pairs = 0;
    for (int i = 0; 2 * i <= d; ++i) ++pairs;
    CHECK(h2.coeff(d, 0) == pairs);
  }
}

TEST_CASE("finite alphabets against monomial counts") {
  QTSeries two(N);
  two.add_term(1, 0, 1);
  two.add_term(2, 0, 1);
  const Alphabet x(two);
  QTSeries h2(N), e2(N), s21(N);
  h2.add_term(2, 0, 1);
  h2.add_term(3, 0, 1);
  h2.add_term(4, 0, 1);
  e2.add_term(3, 0, 1);
  CHECK(h_of_alphabet(2, x) == h2);
  CHECK(e_of_alphabet(2, x) == e2);
  CHECK(e_of_alphabet(3, x).is_zero());
  s21.add_term(4, 0, 1);
  s21.add_term(5, 0, 1);
  CHECK(schur_of_alphabet(Partition{2, 1}, x) == s21);
  CHECK(e_of_alphabet(2, Alphabet(QTSeries::monomial(2, 1, 1, N))).is_zero());
}

TEST_CASE("addition formula") {
  const Alphabet a = even_q_alphabet(N);
  const Alphabet b = odd_q_alphabet(N);
  const Alphabet ab(a.series() + b.series());
  for (int n = 0; n <= 4; ++n) {
    QTSeries rhs(N);
    for (int k = 0; k <= n; ++k) rhs += h_of_alphabet(k, a) * h_of_alphabet(n - k, b);
    CHECK(h_of_alphabet(n, ab) == rhs);
  }
}

TEST_CASE("Cauchy identity") {
  const Alphabet a = diagonal_alphabet(N);
  const Alphabet b = odd_q_alphabet(N);
  const Alphabet prod(a.series() * b.series());
  for (int n = 1; n <= 4; ++n) {
    QTSeries rhs(N);
    for (const Partition& lam : partitions_of(n))
      rhs += schur_of_alphabet(lam, a) * schur_of_alphabet(lam, b);
    CHECK(h_of_alphabet(n, prod) == rhs);
  }
}

TEST_CASE("Omega") {
  CHECK(omega(Alphabet(QTSeries::monomial(1, 0, 1, N))) == QTSeries::geometric(1, 0, N));
  const Alphabet a = odd_q_alphabet(N);
  const Alphabet b = skew_diagonal_alphabet(N);
  CHECK(omega(Alphabet(a.series() + b.series())) == omega(a) * omega(b));
  QTSeries h_sum = QTSeries::constant(1, N);
  for (int n = 1; n <= 2 * N; ++n) h_sum += h_of_alphabet(n, b);
  CHECK(omega(b) == h_sum);
}

TEST_CASE("symmetric group characters") {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const Partition& lam : parts) {
      CHECK(mn_character(lam, Partition(std::vector<int>(n, 1))) == hook_dimension(lam));
      for (const Partition& nu : parts) {
        Rational inner = 0;
        for (const Partition& mu : parts)
          inner += Rational(mn_character(lam, mu) * mn_character(nu, mu)) /
                   Rational(static_cast<long>(z_mu(mu)));
        CHECK(inner == (lam == nu ? 1 : 0));
      }
    }
    for (const Partition& mu : parts) CHECK(mn_character(Partition{n}, mu) == 1);
  }
  CHECK(mn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), Error);
}

TEST_CASE("expansions in the power-sum basis") {
  const SymExpansion p = SymExpansion::power_sum(Partition{1}, Partition{}, N);
  const SymExpansion q = SymExpansion::power_sum(Partition{}, Partition{1}, N);
  const SymExpansion pq = p * q;
  CHECK(pq.level() == 2);
  CHECK(pq.coefficient(Partition{1}, Partition{1}) == QTSeries::constant(1, N));
  const SymExpansion unit = SymExpansion::internal_unit(2, N);
  CHECK(internal_product(unit, pq) == pq);
  SymExpansion wrong(1, N);
  CHECK_THROWS_AS(wrong += pq, Error);
}
