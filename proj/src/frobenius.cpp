#include "hyperoct/frobenius.hpp"

#include "hyperoct/characters.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/plethysm.hpp"

namespace hyperoct {

std::string IrrLabel::to_string() const { return lam.to_string() + "|" + rho.to_string(); }

std::vector<BClassType> class_types(int n) {
  std::vector<BClassType> out;
  for (int k = n; k >= 0; --k)
    for (const Partition& mu : partitions_of(k))
      for (const Partition& nu : partitions_of(n - k)) out.push_back({mu, nu});
  return out;
}

std::vector<IrrLabel> irreducible_labels(int n) {
  std::vector<IrrLabel> out;
  for (int k = n; k >= 0; --k)
    for (const Partition& lam : partitions_of(k))
      for (const Partition& rho : partitions_of(n - k)) out.push_back({lam, rho});
  return out;
}

std::int64_t class_size(const BClassType& c) {
  const int n = c.level();
  std::int64_t order = (std::int64_t{1} << n) * factorial(n);
  std::int64_t centralizer = z_mu(c.positive) * z_mu(c.negative)
                             << (c.positive.length() + c.negative.length());
  return order / centralizer;
}

std::int64_t irreducible_dimension(const IrrLabel& label) {
  return binomial(label.level(), label.lam.size()) * hook_dimension(label.lam) *
         hook_dimension(label.rho);
}

namespace {

Rational inverse_z(const Partition& mu) {
  return Rational(Integer(1), Integer(static_cast<long>(z_mu(mu))));
}

// s_lambda[z + sign*z̄] in the p_{mu,nu} basis
SymExpansion schur_in_pair(const Partition& lambda, int sign, int truncation) {
  SymExpansion out(lambda.size(), truncation);
  for (const Partition& alpha : partitions_of(lambda.size())) {
    const std::int64_t chi = mn_character(lambda, alpha);
    if (chi == 0) continue;
    SymExpansion term = SymExpansion::power_sum({}, {}, truncation);
    for (int k : alpha.parts()) {
      SymExpansion factor = SymExpansion::power_sum(Partition{k}, {}, truncation);
      SymExpansion bar = SymExpansion::power_sum({}, Partition{k}, truncation);
      if (sign > 0) factor += bar;
      else factor -= bar;
      term = term * factor;
    }
    term *= Rational(Integer(static_cast<long>(chi))) * inverse_z(alpha);
    out += term;
  }
  return out;
}

void certify_polynomial(const QTSeries& s, int n, const std::string& what) {
  if (s.truncation() < n * n)
    throw Error(ErrorCode::InvalidArgument,
                what + ": truncation " + std::to_string(s.truncation()) + " below n^2");
  if (!s.vanishes_above(n * n, n * n))
    throw Error(ErrorCode::IdentityFailed, what + " has terms beyond degree n^2");
}

QTSeries variable_monomial(Variable v, int e, const Rational& c, int truncation) {
  return v == Variable::Q ? QTSeries::monomial(e, 0, c, truncation)
                          : QTSeries::monomial(0, e, c, truncation);
}

}  // namespace

SymExpansion irreducible_expansion(const IrrLabel& label, int truncation) {
  return schur_in_pair(label.lam, +1, truncation) * schur_in_pair(label.rho, -1, truncation);
}

std::int64_t character_value(const IrrLabel& label, const BClassType& c) {
  if (label.level() != c.level())
    throw Error(ErrorCode::LevelMismatch, "label and class of different levels");
  Rational v = irreducible_expansion(label).coefficient(c.positive, c.negative).coeff(0, 0);
  v *= Rational(Integer(static_cast<long>(z_mu(c.positive) * z_mu(c.negative))));
  if (v.get_den() != 1) throw Error(ErrorCode::IdentityFailed, "non-integral character value");
  return v.get_num().get_si();
}

SymExpansion frob_regular(int n, int truncation) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  SymExpansion r = SymExpansion::power_sum({}, {}, truncation);
  SymExpansion two_p1 = SymExpansion::power_sum(Partition{1}, {}, truncation);
  two_p1 *= Rational(2);
  for (int i = 0; i < n; ++i) r = r * two_p1;
  return r;
}

QTSeries multiplicity(const SymExpansion& f, const IrrLabel& label) {
  if (f.level() != label.level())
    throw Error(ErrorCode::LevelMismatch, "multiplicity of " + label.to_string() + " at level " +
                                              std::to_string(f.level()));
  const SymExpansion irr = irreducible_expansion(label);
  QTSeries out(f.truncation());
  for (const auto& [k, coef] : f.terms()) {
    Rational value = irr.coefficient(k.first, k.second).coeff(0, 0);
    value *= Rational(Integer(static_cast<long>(z_mu(k.first) * z_mu(k.second))));
    const long chi = value.get_num().get_si();
    if (chi == 0) continue;
    Rational w(Integer(chi),
               Integer(1) << static_cast<unsigned>(k.first.length() + k.second.length()));
    w.canonicalize();
    out += coef * w;
  }
  return out;
}

QTSeries graded_char_Q(const BClassType& c, int truncation, Variable v) {
  QTSeries r = QTSeries::constant(1, truncation);
  for (int m : c.positive.parts())
    r *= v == Variable::Q ? QTSeries::geometric(m, 0, truncation)
                          : QTSeries::geometric(0, m, truncation);
  for (int m : c.negative.parts())
    r *= v == Variable::Q ? QTSeries::geometric(m, 0, truncation, -1)
                          : QTSeries::geometric(0, m, truncation, -1);
  return r;
}

QTSeries invariant_degree_product(int n, int truncation, Variable v) {
  QTSeries r = QTSeries::constant(1, truncation);
  for (int i = 1; i <= n; ++i)
    r *= QTSeries::constant(1, truncation) + variable_monomial(v, 2 * i, -1, truncation);
  return r;
}

QTSeries q_binomial_squared(int n, int k, int truncation, Variable v) {
  const QTSeries num = invariant_degree_product(n, truncation, v);
  const QTSeries den =
      invariant_degree_product(k, truncation, v) * invariant_degree_product(n - k, truncation, v);
  return divide_exact(num, den);
}

SymExpansion graded_frobenius(int n, int truncation, Variable v) {
  SymExpansion f(n, truncation);
  const QTSeries inv = invariant_degree_product(n, truncation, v);
  for (const BClassType& c : class_types(n)) {
    QTSeries coef = graded_char_Q(c, truncation, v) * inv;
    coef *= inverse_z(c.positive) * inverse_z(c.negative);
    f.add(c.positive, c.negative, coef);
  }
  return f;
}

QTSeries mult_graded(const IrrLabel& label, int truncation) {
  const int n = label.level();
  QTSeries r = schur_of_alphabet(label.lam, even_q_alphabet(truncation)) *
               schur_of_alphabet(label.rho, odd_q_alphabet(truncation)) *
               invariant_degree_product(n, truncation, Variable::Q);
  certify_polynomial(r, n, "graded multiplicity of " + label.to_string());
  return r;
}

QTSeries mult_bigraded(const IrrLabel& label, int truncation) {
  const int n = label.level();
  QTSeries r = schur_of_alphabet(label.lam, diagonal_alphabet(truncation)) *
               schur_of_alphabet(label.rho, skew_diagonal_alphabet(truncation)) *
               invariant_degree_product(n, truncation, Variable::Q) *
               invariant_degree_product(n, truncation, Variable::T);
  certify_polynomial(r, n, "bigraded multiplicity of " + label.to_string());
  return r;
}

QTSeries trivial_hilbert(int n, int truncation) {
  QTSeries r = h_of_alphabet(n, diagonal_alphabet(truncation)) *
               invariant_degree_product(n, truncation, Variable::Q) *
               invariant_degree_product(n, truncation, Variable::T);
  certify_polynomial(r, n, "trivial component");
  return r;
}

QTSeries alt_hilbert(int n, int truncation) {
  QTSeries r = e_of_alphabet(n, skew_diagonal_alphabet(truncation)) *
               invariant_degree_product(n, truncation, Variable::Q) *
               invariant_degree_product(n, truncation, Variable::T);
  certify_polynomial(r, n, "alternating component");
  return r;
}

QTSeries psi_polynomial(const IrrLabel& label) {
  const int n = label.level();
  const int trunc = default_truncation(n);
  const QTSeries m = mult_bigraded(label, trunc);
  const QTSeries den = q_binomial_squared(n, label.lam.size(), trunc, Variable::Q) *
                       q_binomial_squared(n, label.rho.size(), trunc, Variable::T);
  QTSeries psi = divide_exact(m, den);
  if (!psi.has_nonnegative_integer_coefficients())
    throw Error(ErrorCode::NegativeCoefficient, "Psi for " + label.to_string() + " = " +
                                                    psi.to_string());
  return psi;
}

}  // namespace hyperoct
