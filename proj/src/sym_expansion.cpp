#include "hyperoct/sym_expansion.hpp"

#include <algorithm>

#include "hyperoct/error.hpp"

namespace hyperoct {

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

void check_level(int level, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != level)
    throw Error(ErrorCode::LevelMismatch, "p_{" + mu.to_string() + "," + nu.to_string() +
                                              "} at level " + std::to_string(level));
}

}  // namespace

SymExpansion::SymExpansion(int level, int truncation) : level_(level), truncation_(truncation) {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
}

SymExpansion SymExpansion::power_sum(const Partition& mu, const Partition& nu, int truncation) {
  SymExpansion e(mu.size() + nu.size(), truncation);
  e.add(mu, nu, QTSeries::constant(1, truncation));
  return e;
}

SymExpansion SymExpansion::internal_unit(int level, int truncation) {
  SymExpansion e(level, truncation);
  for (int k = 0; k <= level; ++k)
    for (const Partition& mu : partitions_of(k))
      for (const Partition& nu : partitions_of(level - k)) {
        Rational c(1, static_cast<unsigned long>(z_mu(mu) * z_mu(nu)));
        e.add(mu, nu, QTSeries::constant(c, truncation));
      }
  return e;
}

QTSeries SymExpansion::coefficient(const Partition& mu, const Partition& nu) const {
  auto it = terms_.find({mu, nu});
  return it == terms_.end() ? QTSeries(truncation_) : it->second;
}

void SymExpansion::add(const Partition& mu, const Partition& nu, const QTSeries& c) {
  check_level(level_, mu, nu);
  auto it = terms_.find({mu, nu});
  if (it == terms_.end()) {
    QTSeries v = c.truncated(truncation_);
    if (!v.is_zero()) terms_.emplace(PartitionPair{mu, nu}, std::move(v));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymExpansion& SymExpansion::operator+=(const SymExpansion& o) {
  if (o.level_ != level_) throw Error(ErrorCode::LevelMismatch, "sum of different levels");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

SymExpansion& SymExpansion::operator-=(const SymExpansion& o) {
  if (o.level_ != level_) throw Error(ErrorCode::LevelMismatch, "difference of different levels");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

SymExpansion& SymExpansion::operator*=(const QTSeries& c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

SymExpansion& SymExpansion::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

SymExpansion operator*(const SymExpansion& a, const SymExpansion& b) {
  SymExpansion r(a.level_ + b.level_, std::min(a.truncation_, b.truncation_));
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add(merge(ka.first, kb.first), merge(ka.second, kb.second), ca * cb);
  return r;
}

SymExpansion internal_product(const SymExpansion& u, const SymExpansion& v) {
  if (u.level() != v.level())
    throw Error(ErrorCode::LevelMismatch, "internal product of levels " +
                                              std::to_string(u.level()) + " and " +
                                              std::to_string(v.level()));
  SymExpansion r(u.level(), std::min(u.truncation(), v.truncation()));
  for (const auto& [k, cu] : u.terms()) {
    auto it = v.terms().find(k);
    if (it == v.terms().end()) continue;
    Rational zz(static_cast<unsigned long>(z_mu(k.first) * z_mu(k.second)));
    r.add(k.first, k.second, cu * it->second * zz);
  }
  return r;
}

}  // namespace hyperoct
