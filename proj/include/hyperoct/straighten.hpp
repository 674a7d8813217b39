#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hyperoct/diag_poly.hpp"
#include "hyperoct/ediagram.hpp"
#include "hyperoct/partition.hpp"
#include "hyperoct/rational.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// coeff * m_lam(x^2) m_mu(y^2) M_beta
struct StraightenedTerm {
  Partition lam;
  Partition mu;
  SignedPermutation beta;
  Rational coeff;
  friend bool operator==(const StraightenedTerm&, const StraightenedTerm&) = default;
};

struct StraightenedForm {
  int n = 0;
  std::vector<StraightenedTerm> terms;  // sorted by (lam, mu, beta)
  friend bool operator==(const StraightenedForm&, const StraightenedForm&) = default;
};

// Processing order of the straightening recursion: a-values sorted decreasingly, then b-values
// sorted decreasingly, then the cells from the last one in reading order backwards. A diagram
// is the strict maximum of the expansion of its own leading product.
struct StraightenOrderLess {
  bool operator()(const EDiagram& x, const EDiagram& y) const;
};

// m_lam(x^2) m_mu(y^2) M(c) as a combination of monomial invariants
std::map<EDiagram, Rational> monomial_product(const Partition& lam, const Partition& mu,
                                              const EDiagram& c);

// number of e-diagrams with n cells and weight (x_weight, y_weight)
std::uint64_t count_ediagrams_of_bidegree(int n, int x_weight, int y_weight);

struct StraightenOptions {
  // when set, pending diagrams are processed in random order instead of largest first
  std::mt19937_64* rng = nullptr;
};

StraightenedForm straighten(const EDiagram& d, const StraightenOptions& options = {});
StraightenedForm straighten(const std::vector<int>& a, const std::vector<int>& b);
DiagPoly expand_straightened(const StraightenedForm& s);

}  // namespace hyperoct
