#include "hyperoct/verify.hpp"

#include <algorithm>

#include "hyperoct/error.hpp"
#include "hyperoct/odiagram.hpp"
#include "hyperoct/plethysm.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

namespace {

void check_range(int n, int cap, const std::string& suite) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, suite + " needs n >= 1");
  if (n > cap)
    throw Error(ErrorCode::CapExceeded,
                suite + " is limited to n <= " + std::to_string(cap));
}

void check_truncation(int n, int truncation) {
  if (truncation < n * n)
    throw Error(ErrorCode::InvalidArgument, "truncation " + std::to_string(truncation) +
                                                " is below n^2 = " + std::to_string(n * n));
}

// record the first mismatch (if any) of lhs against rhs
bool compare_into(VerifyReport& r, const QTSeries& lhs, const QTSeries& rhs,
                  const std::string& label = {}) {
  ++r.checks;
  const auto diff = first_difference(lhs, rhs);
  if (!diff) return true;
  if (r.pass) {
    r.pass = false;
    r.first_discrepancy =
        Discrepancy{diff->q_exp, diff->t_exp, diff->lhs.get_str(), diff->rhs.get_str(), label};
  }
  return false;
}

QTSeries inverse_invariant_degrees(int n, int truncation) {
  QTSeries r = QTSeries::constant(1, truncation);
  for (int i = 1; i <= n; ++i)
    r = r * QTSeries::geometric(2 * i, 0, truncation) * QTSeries::geometric(0, 2 * i, truncation);
  return r;
}

QTSeries from_exponents(const std::vector<int>& exps, int truncation) {
  QTSeries s(truncation);
  for (int e : exps) s.add_term(e, 0, 1);
  return s;
}

}  // namespace

QTSeries fmaj_bigenerating(int n, int truncation) {
  QTSeries s(truncation);
  for (const SignedPermutation& b : enumerate_signed_permutations(n, std::max(n, kDefaultGroupCap)))
    s.add_term(fmaj(b), fmaj(inverse(b)), 1);
  return s;
}

QTSeries fmaj_alternating_bigenerating(int n, int truncation) {
  QTSeries s(truncation);
  for (const SignedPermutation& b : enumerate_signed_permutations(n, std::max(n, kDefaultGroupCap)))
    s.add_term(fmaj(b), n * n - fmaj(inverse(b)), 1);
  return s;
}

VerifyReport verify_genfunction(int n, int truncation) {
  check_range(n, kGenfunctionCap, "genfunction");
  check_truncation(n, truncation);
  VerifyReport r;
  r.identity = "genfunction";
  r.n = n;
  const QTSeries lhs = h_of_alphabet(n, diagonal_alphabet(truncation));
  const QTSeries rhs = fmaj_bigenerating(n, truncation) * inverse_invariant_degrees(n, truncation);
  compare_into(r, lhs, rhs);
  return r;
}

VerifyReport verify_ogenfunction(int n, int truncation) {
  check_range(n, kGenfunctionCap, "ogenfunction");
  check_truncation(n, truncation);
  VerifyReport r;
  r.identity = "ogenfunction";
  r.n = n;
  const QTSeries lhs = e_of_alphabet(n, skew_diagonal_alphabet(truncation));
  const QTSeries rhs =
      fmaj_alternating_bigenerating(n, truncation) * inverse_invariant_degrees(n, truncation);
  compare_into(r, lhs, rhs);
  return r;
}

VerifyReport verify_flip_symmetry(int n) {
  check_range(n, kFlipCap, "flip");
  VerifyReport r;
  r.identity = "flip";
  r.n = n;
  const int trunc = default_truncation(n);
  for (const IrrLabel& label : irreducible_labels(n)) {
    const IrrLabel flipped{label.rho.conjugate(), label.lam.conjugate()};
    compare_into(r, mult_graded(flipped, trunc), mult_graded(label, trunc).reversed_q(n * n),
                 label.to_string());
  }
  return r;
}

VerifyReport verify_corollary(int n) {
  check_range(n, kCorollaryCap, "corollary");
  VerifyReport r;
  r.identity = "corollary";
  r.n = n;
  const int trunc = n * n;
  QTSeries lhs(trunc);
  for (const SignedPermutation& b : enumerate_signed_permutations(n, std::max(n, kDefaultGroupCap))) {
    const auto [wa, wb] = compact_o_of_perm(b).weight();
    lhs.add_term(wa, wb, 1);
  }
  compare_into(r, lhs, fmaj_alternating_bigenerating(n, trunc));
  return r;
}

const std::vector<ReferenceRow>& reference_table3() {
  static const std::vector<ReferenceRow> rows = {
      {{Partition{3}, {}}, {0}},
      {{Partition{2, 1}, {}}, {2, 4}},
      {{Partition{1, 1, 1}, {}}, {6}},
      {{Partition{2}, Partition{1}}, {1, 3, 5}},
      {{Partition{1, 1}, Partition{1}}, {3, 5, 7}},
      {{Partition{1}, Partition{2}}, {2, 4, 6}},
      {{Partition{1}, Partition{1, 1}}, {4, 6, 8}},
      {{{}, Partition{3}}, {3}},
      {{{}, Partition{2, 1}}, {5, 7}},
      {{{}, Partition{1, 1, 1}}, {9}},
  };
  return rows;
}

VerifyReport verify_table3() {
  VerifyReport r;
  r.identity = "table3";
  r.n = 3;
  const int trunc = default_truncation(3);
  for (const ReferenceRow& row : reference_table3())
    compare_into(r, mult_graded(row.label, trunc), from_exponents(row.exponents, trunc),
                 row.label.to_string());
  return r;
}

VerifyReport verify_regular(int n) {
  check_range(n, kRegularCap, "regular");
  VerifyReport r;
  r.identity = "regular";
  r.n = n;
  const int trunc = default_truncation(n);
  const SymExpansion regular = frob_regular(n);
  const std::int64_t order = (std::int64_t{1} << n) * factorial(n);
  for (const IrrLabel& label : irreducible_labels(n)) {
    const Rational dim(Integer(static_cast<long>(irreducible_dimension(label))));
    const std::string name = label.to_string();
    compare_into(r, multiplicity(regular, label), QTSeries::constant(dim, 0), name);
    compare_into(r, QTSeries::constant(mult_graded(label, trunc).at_one(), 0),
                 QTSeries::constant(dim, 0), name);
    compare_into(r, QTSeries::constant(mult_bigraded(label, trunc).at_one(), 0),
                 QTSeries::constant(dim * Rational(Integer(static_cast<long>(order))), 0), name);
  }
  return r;
}

VerifyReport verify_psi_positivity(const Partition& lam, const Partition& mu, int n) {
  const IrrLabel label{lam, mu};
  if (label.level() != n)
    throw Error(ErrorCode::LevelMismatch, label.to_string() + " is not at level " +
                                              std::to_string(n));
  VerifyReport r;
  r.identity = "psi";
  r.n = n;
  r.checks = 1;
  try {
    (void)psi_polynomial(label);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DivisionInexact && e.code() != ErrorCode::NegativeCoefficient)
      throw;
    r.pass = false;
    r.first_discrepancy = Discrepancy{0, 0, e.what(), "nonnegative integer polynomial",
                                      label.to_string()};
  }
  return r;
}

VerifyReport verify_psi_all(int n) {
  if (n < 0 || n > kPsiCap)
    throw Error(ErrorCode::CapExceeded, "psi is limited to n <= " + std::to_string(kPsiCap));
  VerifyReport r;
  r.identity = "psi";
  r.n = n;
  for (const IrrLabel& label : irreducible_labels(n)) {
    VerifyReport one = verify_psi_positivity(label.lam, label.rho, n);
    ++r.checks;
    if (!one.pass && r.pass) {
      r.pass = false;
      r.first_discrepancy = one.first_discrepancy;
    }
  }
  return r;
}

std::vector<VerifyReport> verify_all(int n, int truncation) {
  std::vector<VerifyReport> out;
  out.push_back(verify_corollary(n));
  out.push_back(verify_flip_symmetry(n));
  if (n <= kGenfunctionCap) {
    out.push_back(verify_genfunction(n, truncation));
    out.push_back(verify_ogenfunction(n, truncation));
  }
  if (n <= kPsiCap) out.push_back(verify_psi_all(n));
  out.push_back(verify_regular(n));
  out.push_back(verify_table3());
  return out;
}

void require_pass(const VerifyReport& r) {
  if (r.pass) return;
  std::string detail = r.identity + " at n=" + std::to_string(r.n);
  if (r.first_discrepancy) {
    const Discrepancy& d = *r.first_discrepancy;
    if (!d.label.empty()) detail += " for " + d.label;
    detail += ": q^" + std::to_string(d.q_exp) + " t^" + std::to_string(d.t_exp) + " " + d.lhs +
              " != " + d.rhs;
  }
  throw Error(ErrorCode::IdentityFailed, detail);
}

}  // namespace hyperoct
