#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperoct/frobenius.hpp"
#include "hyperoct/qt_series.hpp"

namespace hyperoct {

struct Discrepancy {
  int q_exp = 0;
  int t_exp = 0;
  std::string lhs;
  std::string rhs;
  std::string label;  // empty unless the identity is indexed by an irreducible
};

struct VerifyReport {
  std::string identity;
  int n = 0;
  bool pass = true;
  std::optional<Discrepancy> first_discrepancy;
  std::size_t checks = 0;  // number of series or labels compared
};

// per-suite limits on n
inline constexpr int kGenfunctionCap = 5;
inline constexpr int kPsiCap = 3;
inline constexpr int kCorollaryCap = 6;
inline constexpr int kFlipCap = 5;
inline constexpr int kRegularCap = 5;

// sum over B_n of q^{fmaj b} t^{fmaj b^-1}
QTSeries fmaj_bigenerating(int n, int truncation);
// sum over B_n of q^{fmaj b} t^{n^2 - fmaj b^-1}
QTSeries fmaj_alternating_bigenerating(int n, int truncation);

VerifyReport verify_genfunction(int n, int truncation);
VerifyReport verify_ogenfunction(int n, int truncation);
VerifyReport verify_flip_symmetry(int n);
VerifyReport verify_corollary(int n);
VerifyReport verify_table3();
VerifyReport verify_regular(int n);
VerifyReport verify_psi_positivity(const Partition& lam, const Partition& mu, int n);
VerifyReport verify_psi_all(int n);

// the suites behind `verify all` at level n
std::vector<VerifyReport> verify_all(int n, int truncation);

// reference graded multiplicities for n = 3, as exponent lists of q
struct ReferenceRow {
  IrrLabel label;
  std::vector<int> exponents;
};
const std::vector<ReferenceRow>& reference_table3();

// throws IdentityFailed when the report failed
void require_pass(const VerifyReport& r);

}  // namespace hyperoct
