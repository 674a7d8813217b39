#pragma once

#include <map>
#include <utility>

#include "hyperoct/partition.hpp"
#include "hyperoct/qt_series.hpp"

namespace hyperoct {

using PartitionPair = std::pair<Partition, Partition>;

// Element of the ring of symmetric functions in two alphabets z, z̄, expanded in the
// power sums p_{mu,nu} = p_mu(z) p_nu(z̄), with q,t-series coefficients.
class SymExpansion {
 public:
  SymExpansion(int level, int truncation);

  // the single basis element p_{mu,nu}
  static SymExpansion power_sum(const Partition& mu, const Partition& nu, int truncation);
  // sum over |mu|+|nu| = n of p_{mu,nu}/(z_mu z_nu), neutral for the internal product
  static SymExpansion internal_unit(int level, int truncation);

  int level() const noexcept { return level_; }
  int truncation() const noexcept { return truncation_; }
  const std::map<PartitionPair, QTSeries>& terms() const noexcept { return terms_; }
  QTSeries coefficient(const Partition& mu, const Partition& nu) const;
  void add(const Partition& mu, const Partition& nu, const QTSeries& c);

  SymExpansion& operator+=(const SymExpansion& o);
  SymExpansion& operator-=(const SymExpansion& o);
  SymExpansion& operator*=(const QTSeries& c);
  SymExpansion& operator*=(const Rational& c);
  friend SymExpansion operator+(SymExpansion a, const SymExpansion& b) { return a += b; }
  friend SymExpansion operator-(SymExpansion a, const SymExpansion& b) { return a -= b; }
  // ordinary product; levels add
  friend SymExpansion operator*(const SymExpansion& a, const SymExpansion& b);
  friend bool operator==(const SymExpansion& a, const SymExpansion& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

 private:
  int level_;
  int truncation_;
  std::map<PartitionPair, QTSeries> terms_;
};

SymExpansion internal_product(const SymExpansion& u, const SymExpansion& v);

}  // namespace hyperoct
