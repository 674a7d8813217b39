#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperoct/partition.hpp"
#include "hyperoct/qt_series.hpp"
#include "hyperoct/sym_expansion.hpp"

namespace hyperoct {

// conjugacy class of B_n: cycle lengths of positive and negative cycles
struct BClassType {
  Partition positive;
  Partition negative;
  int level() const noexcept { return positive.size() + negative.size(); }
  friend auto operator<=>(const BClassType&, const BClassType&) = default;
};

// irreducible B_n-module indexed by s_lam[z+z̄] s_rho[z-z̄]
struct IrrLabel {
  Partition lam;
  Partition rho;
  int level() const noexcept { return lam.size() + rho.size(); }
  std::string to_string() const;
  friend auto operator<=>(const IrrLabel&, const IrrLabel&) = default;
};

enum class Variable { Q, T };

inline int default_truncation(int n) { return 2 * n * n; }

std::vector<BClassType> class_types(int n);
// ordered by |lam| decreasing, then partitions in decreasing lexicographic order
std::vector<IrrLabel> irreducible_labels(int n);
std::int64_t class_size(const BClassType& c);
std::int64_t irreducible_dimension(const IrrLabel& label);

SymExpansion irreducible_expansion(const IrrLabel& label, int truncation = 0);
std::int64_t character_value(const IrrLabel& label, const BClassType& c);
SymExpansion frob_regular(int n, int truncation = 0);

// multiplicity of the irreducible `label` in the (graded) module with characteristic `f`
QTSeries multiplicity(const SymExpansion& f, const IrrLabel& label);

QTSeries graded_char_Q(const BClassType& c, int truncation, Variable v = Variable::Q);
// prod_{i=1..n} (1 - v^{2i})
QTSeries invariant_degree_product(int n, int truncation, Variable v);
// [n choose k] in the variable v^2
QTSeries q_binomial_squared(int n, int k, int truncation, Variable v);
// Frobenius characteristic of the harmonics of B_n, graded in the variable v
SymExpansion graded_frobenius(int n, int truncation, Variable v);

QTSeries mult_graded(const IrrLabel& label, int truncation);
QTSeries mult_bigraded(const IrrLabel& label, int truncation);
QTSeries trivial_hilbert(int n, int truncation);
QTSeries alt_hilbert(int n, int truncation);

// mult_bigraded / ([n,|lam|]_{q^2} [n,|rho|]_{t^2}); throws DivisionInexact or NegativeCoefficient
QTSeries psi_polynomial(const IrrLabel& label);

}  // namespace hyperoct
