#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperoct/ediagram.hpp"
#include "hyperoct/odiagram.hpp"
#include "hyperoct/partition.hpp"
#include "hyperoct/rational.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// exponent vector laid out as (x1, y1, x2, y2, ..., xn, yn)
using Exponent = std::vector<int>;

// Monomial order: compare the pair (x_n, y_n) first, then (x_{n-1}, y_{n-1}), ..., x before y.
// Under it the leading monomial of M(a,b) is x^a y^b for (a,b) in reading order.
struct MonomialLess {
  bool operator()(const Exponent& u, const Exponent& v) const;
};

class DiagPoly {
 public:
  using TermMap = std::map<Exponent, Rational, MonomialLess>;

  explicit DiagPoly(int n = 0);
  static DiagPoly constant(int n, const Rational& c);
  static DiagPoly monomial(const Exponent& e, const Rational& c = 1);
  // x_i (which = 0) or y_i (which = 1), 1-based i
  static DiagPoly variable(int n, int i, int which);

  int nvars() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  std::optional<Exponent> leading_exponent() const;
  // (x-degree, y-degree) when bihomogeneous
  std::optional<std::pair<int, int>> bidegree() const;

  DiagPoly& operator+=(const DiagPoly& o);
  DiagPoly& operator-=(const DiagPoly& o);
  DiagPoly& operator*=(const Rational& c);
  friend DiagPoly operator+(DiagPoly a, const DiagPoly& b) { return a += b; }
  friend DiagPoly operator-(DiagPoly a, const DiagPoly& b) { return a -= b; }
  friend DiagPoly operator*(DiagPoly a, const Rational& c) { return a *= c; }
  friend DiagPoly operator*(const DiagPoly& a, const DiagPoly& b);
  friend bool operator==(const DiagPoly& a, const DiagPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // "x1*y1^3*x2^3*y2 + ..." with terms from the leading monomial down
  std::string to_string() const;

 private:
  void check(const Exponent& e) const;
  int n_;
  TermMap terms_;
};

// beta . p: x_i -> sign x_{sigma(i)}, y_i -> sign y_{sigma(i)}
DiagPoly act(const SignedPermutation& beta, const DiagPoly& p);
// sum of the distinct monomials obtained by permuting the cells of D among the variable pairs
DiagPoly monomial_invariant(const EDiagram& d);
DiagPoly monomial_invariant(const std::vector<int>& a, const std::vector<int>& b);

enum class VariableSet { X, Y };
// m_lambda evaluated at the squares of the chosen variables
DiagPoly monomial_sym_squares(const Partition& lambda, VariableSet which, int n);
// x1...xn prod_{i<j} (x_i^2 - x_j^2)
DiagPoly jacobian_delta(int n);
// det(x_i^{a_j} y_i^{b_j})
DiagPoly alternant(const ODiagram& d);

// number of orderings of the multiset of cells (n! / prod mult!)
std::int64_t orbit_size(const std::vector<Cell>& sorted_cells);

}  // namespace hyperoct
