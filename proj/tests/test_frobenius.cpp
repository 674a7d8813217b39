#include "printers.hpp"

#include <functional>

#include <map>

#include "hyperoct/error.hpp"
#include "hyperoct/frobenius.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/verify.hpp"

using namespace hyperoct;

namespace {

BClassType type_of(const SignedPermutation& b) {
  const auto [pos, neg] = signed_cycle_type(b);
  return {pos, neg};
}

std::int64_t group_order(int n) { return (std::int64_t{1} << n) * factorial(n); }

// trace of beta on the degree-d monomials of C[x_1..x_n]
std::int64_t monomial_trace(const SignedPermutation& b, int degree) {
  const int n = b.size();
  std::int64_t total = 0;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      bool fixed = true;
      int s = 1;
      for (int k = 1; k <= n; ++k) {
        if (e[b.sigma(k) - 1] != e[k - 1]) fixed = false;
        if (b(k) < 0 && e[k - 1] % 2) s = -s;
      }
      if (fixed) total += s;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, degree);
  return total;
}

QTSeries q_poly(std::initializer_list<int> exps, int trunc) {
  QTSeries s(trunc);
  for (int e : exps) s.add_term(e, 0, 1);
  return s;
}

}  // namespace

TEST_CASE("class sizes against enumeration") {
  for (int n = 1; n <= 4; ++n) {
    std::map<BClassType, std::int64_t> counts;
    for (const auto& b : enumerate_signed_permutations(n)) ++counts[type_of(b)];
    CHECK(counts.size() == class_types(n).size());
    for (const BClassType& c : class_types(n)) CHECK(class_size(c) == counts[c]);
  }
  for (int n = 5; n <= 7; ++n) {
    std::int64_t sum = 0;
    for (const BClassType& c : class_types(n)) sum += class_size(c);
    CHECK(sum == group_order(n));
  }
}

TEST_CASE("labels and dimensions") {
  CHECK(irreducible_labels(2).size() == 5);
  CHECK(irreducible_labels(3).size() == 10);
  for (int n = 1; n <= 5; ++n) {
    std::int64_t squares = 0;
    for (const IrrLabel& L : irreducible_labels(n))
      squares += irreducible_dimension(L) * irreducible_dimension(L);
    CHECK(squares == group_order(n));
  }
  CHECK(IrrLabel{Partition{2}, Partition{1}}.to_string() == "(2)|(1)");
}

TEST_CASE("one-dimensional and reflection characters") {
  for (int n = 1; n <= 4; ++n) {
    const IrrLabel trivial{Partition{n}, {}};
    const IrrLabel alternating{{}, Partition(std::vector<int>(n, 1))};
    const IrrLabel reflection{n > 1 ? Partition{n - 1} : Partition{}, Partition{1}};
    for (const auto& b : enumerate_signed_permutations(n)) {
      const BClassType c = type_of(b);
      CHECK(character_value(trivial, c) == 1);
      CHECK(character_value(alternating, c) == sign(b));
      int trace = 0;
      for (int i = 1; i <= n; ++i)
        if (b.sigma(i) == i) trace += b(i) > 0 ? 1 : -1;
      CHECK(character_value(reflection, c) == trace);
    }
  }
}

TEST_CASE("orthogonality of characters") {
  for (int n = 1; n <= 4; ++n) {
    const auto labels = irreducible_labels(n);
    for (const IrrLabel& L : labels)
      for (const IrrLabel& M : labels) {
        std::int64_t sum = 0;
        for (const BClassType& c : class_types(n))
          sum += class_size(c) * character_value(L, c) * character_value(M, c);
        CHECK(sum == (L == M ? group_order(n) : 0));
      }
  }
}

TEST_CASE("regular representation") {
  CHECK(multiplicity(frob_regular(1), IrrLabel{Partition{1}, {}}) == QTSeries::constant(1, 2));
  CHECK(multiplicity(frob_regular(1), IrrLabel{{}, Partition{1}}) == QTSeries::constant(1, 2));
  CHECK(multiplicity(frob_regular(3), IrrLabel{Partition{2, 1}, {}}) == QTSeries::constant(2, 18));
  for (int n = 1; n <= 4; ++n) CHECK(verify_regular(n).pass);
}

TEST_CASE("graded characters of the polynomial ring") {
  const int N = 10;
  CHECK(graded_char_Q({Partition{1}, {}}, N) == QTSeries::geometric(1, 0, N));
  CHECK(graded_char_Q({{}, Partition{1}}, N) == QTSeries::geometric(1, 0, N, -1));
  const QTSeries two = graded_char_Q({Partition{1, 1}, {}}, N);
  for (int d = 0; d <= N; ++d) CHECK(two.coeff(d, 0) == d + 1);
  for (int n = 2; n <= 3; ++n)
    for (const auto& b : enumerate_signed_permutations(n)) {
      const QTSeries g = graded_char_Q(type_of(b), 8);
      for (int d = 0; d <= 8; ++d) CHECK(g.coeff(d, 0) == monomial_trace(b, d));
    }
}

TEST_CASE("graded multiplicities by summing over the group") {
  for (int n = 1; n <= 3; ++n) {
    const int N = default_truncation(n);
    const QTSeries coinv = invariant_degree_product(n, N, Variable::Q);
    for (const IrrLabel& L : irreducible_labels(n)) {
      QTSeries sum(N);
      for (const auto& b : enumerate_signed_permutations(n)) {
        QTSeries series(N);
        for (int d = 0; d <= N; ++d) series.add_term(d, 0, monomial_trace(b, d));
        sum += series * Rational(character_value(L, type_of(b)));
      }
      sum *= Rational(1, static_cast<unsigned long>(group_order(n)));
      CHECK(mult_graded(L, N) == (sum * coinv).truncated(N));
      CHECK(multiplicity(graded_frobenius(n, N, Variable::Q), L) == mult_graded(L, N));
    }
  }
}

TEST_CASE("graded multiplicity examples") {
  CHECK(mult_graded({Partition{3}, {}}, 18) == q_poly({0}, 18));
  CHECK(mult_graded({{}, Partition{3}}, 18) == q_poly({3}, 18));
  CHECK(mult_graded({Partition{1, 1}, Partition{1}}, 18) == q_poly({3, 5, 7}, 18));
  CHECK(verify_table3().pass);
  CHECK_THROWS_AS(mult_graded({Partition{2}, {}}, 3), Error);
}

TEST_CASE("bigraded multiplicities") {
  QTSeries triv(2), alt(2);
  triv.add_term(0, 0, 1);
  triv.add_term(1, 1, 1);
  alt.add_term(1, 0, 1);
  alt.add_term(0, 1, 1);
  CHECK(mult_bigraded({Partition{1}, {}}, 2) == triv);
  CHECK(mult_bigraded({{}, Partition{1}}, 2) == alt);
  CHECK(trivial_hilbert(1, 2) == triv);
  CHECK(alt_hilbert(1, 2) == alt);
  for (int n = 2; n <= 4; ++n) {
    const int N = default_truncation(n);
    CHECK(trivial_hilbert(n, N) == fmaj_bigenerating(n, N));
    CHECK(alt_hilbert(n, N) == fmaj_alternating_bigenerating(n, N));
  }
  CHECK(fmaj_alternating_bigenerating(2, 8).term_count() <= 8);
  CHECK(fmaj_alternating_bigenerating(2, 8).at_one() == 8);
  CHECK(fmaj_alternating_bigenerating(3, 18).at_one() == 48);
}

TEST_CASE("flip symmetry") {
  for (int n = 1; n <= 4; ++n) CHECK(verify_flip_symmetry(n).pass);
}

TEST_CASE("Psi polynomials") {
  QTSeries one(2);
  one.add_term(0, 0, 1);
  CHECK(psi_polynomial({Partition{1}, {}}) == mult_bigraded({Partition{1}, {}}, 2));
  for (int n = 1; n <= 3; ++n)
    for (const IrrLabel& L : irreducible_labels(n)) {
      const QTSeries p = psi_polynomial(L);
      CHECK(p.has_nonnegative_integer_coefficients());
      CHECK(p * q_binomial_squared(n, L.lam.size(), default_truncation(n), Variable::Q) *
                q_binomial_squared(n, L.rho.size(), default_truncation(n), Variable::T) ==
            mult_bigraded(L, default_truncation(n)));
    }
  CHECK_THROWS_AS(verify_psi_positivity(Partition{1}, {}, 2), Error);
  CHECK(verify_psi_all(2).pass);
}

TEST_CASE("verify suites") {
  const auto reports = verify_all(2, default_truncation(2));
  CHECK(reports.size() == 7);
  for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.identity);
  CHECK(verify_genfunction(1, 2).pass);
  CHECK_THROWS_AS(verify_genfunction(6, 72), Error);
  CHECK_THROWS_AS(verify_genfunction(2, 3), Error);
}

TEST_CASE("setting t=0 recovers the graded multiplicities") {
  for (int n = 1; n <= 3; ++n)
    for (const IrrLabel& L : irreducible_labels(n)) {
      const int N = default_truncation(n);
      CHECK_MESSAGE(mult_bigraded(L, N).at_t_zero() == mult_graded(L, N), L.to_string());
    }
}
