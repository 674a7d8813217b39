#include "hyperoct/qt_series.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "hyperoct/error.hpp"

namespace hyperoct {

QTSeries::QTSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation order");
}

QTSeries QTSeries::constant(const Rational& c, int truncation) {
  return monomial(0, 0, c, truncation);
}

QTSeries QTSeries::monomial(int qe, int te, const Rational& c, int truncation) {
  QTSeries s(truncation);
  s.add_term(qe, te, c);
  return s;
}

QTSeries QTSeries::geometric(int a, int b, int truncation, const Rational& c) {
  if (a < 0 || b < 0 || (a == 0 && b == 0))
    throw Error(ErrorCode::InvalidArgument, "geometric series needs a positive step");
  QTSeries s(truncation);
  Rational power = 1;
  for (int k = 0; k * a <= truncation && k * b <= truncation; ++k) {
    s.add_term(k * a, k * b, power);
    power *= c;
  }
  return s;
}

Rational QTSeries::coeff(int qe, int te) const {
  auto it = terms_.find({qe, te});
  return it == terms_.end() ? Rational(0) : it->second;
}

void QTSeries::add_term(int qe, int te, const Rational& c) {
  if (qe < 0 || te < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  if (qe > truncation_ || te > truncation_ || sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({qe, te}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

QTSeries& QTSeries::operator+=(const QTSeries& o) {
  truncation_ = std::min(truncation_, o.truncation_);
  std::erase_if(terms_, [&](const auto& kv) {
    return kv.first.first > truncation_ || kv.first.second > truncation_;
  });
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

QTSeries& QTSeries::operator-=(const QTSeries& o) { return *this += -o; }

QTSeries QTSeries::operator-() const {
  QTSeries r(*this);
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

QTSeries& QTSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

QTSeries& QTSeries::operator*=(const QTSeries& o) { return *this = *this * o; }

QTSeries operator*(const QTSeries& a, const QTSeries& b) {
  const int n = std::min(a.truncation_, b.truncation_);
  QTSeries r(n);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  const bool dense = a.terms_.size() * b.terms_.size() > side * side / 2;
  if (!dense) {
    for (const auto& [ka, ca] : a.terms_) {
      if (ka.first > n || ka.second > n) continue;
      for (const auto& [kb, cb] : b.terms_) {
        int qe = ka.first + kb.first, te = ka.second + kb.second;
        if (qe > n || te > n) continue;
        r.add_term(qe, te, ca * cb);
      }
    }
    return r;
  }
  std::vector<Rational> acc(side * side);
  std::vector<char> touched(side * side, 0);
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    if (ka.first > n || ka.second > n) continue;
    for (const auto& [kb, cb] : b.terms_) {
      int qe = ka.first + kb.first, te = ka.second + kb.second;
      if (qe > n || te > n) continue;
      std::size_t idx = static_cast<std::size_t>(qe) * side + te;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      acc[idx] += prod;
      touched[idx] = 1;
    }
  }
  for (std::size_t idx = 0; idx < acc.size(); ++idx)
    if (touched[idx] && sgn(acc[idx]) != 0)
      r.terms_.emplace_hint(r.terms_.end(), QTSeries::Key{int(idx / side), int(idx % side)},
                            std::move(acc[idx]));
  return r;
}

QTSeries QTSeries::truncated(int n) const { return with_truncation(std::min(n, truncation_)); }

QTSeries QTSeries::with_truncation(int n) const {
  QTSeries r(n);
  for (const auto& [k, c] : terms_)
    if (k.first <= n && k.second <= n) r.terms_.emplace_hint(r.terms_.end(), k, c);
  return r;
}

int QTSeries::q_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.first;
}

int QTSeries::t_degree() const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, kv.first.second);
  return d;
}

bool QTSeries::vanishes_above(int q_bound, int t_bound) const {
  return q_degree() <= q_bound && t_degree() <= t_bound;
}

bool QTSeries::has_nonnegative_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return sgn(kv.second) >= 0 && kv.second.get_den() == 1;
  });
}

Rational QTSeries::at_one() const {
  Rational s = 0;
  for (const auto& kv : terms_) s += kv.second;
  return s;
}

QTSeries QTSeries::at_t_zero() const {
  QTSeries r(truncation_);
  for (const auto& [k, c] : terms_)
    if (k.second == 0) r.add_term(k.first, 0, c);
  return r;
}

QTSeries QTSeries::reversed_q(int degree) const {
  if (q_degree() > degree)
    throw Error(ErrorCode::InvalidArgument, "reversal degree below the q-degree");
  QTSeries r(std::max(truncation_, degree));
  for (const auto& [k, c] : terms_) r.add_term(degree - k.first, k.second, c);
  return r;
}

QTSeries QTSeries::inverse() const {
  const Rational c0 = coeff(0, 0);
  if (sgn(c0) == 0) throw Error(ErrorCode::InvalidArgument, "series without constant term");
  const int n = truncation_;
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  std::vector<Rational> r(side * side);
  std::vector<std::pair<Key, Rational>> rest;
  for (const auto& kv : terms_)
    if (kv.first != Key{0, 0}) rest.push_back(kv);
  const Rational inv0 = 1 / c0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Rational s = (i == 0 && j == 0) ? Rational(1) : Rational(0);
      for (const auto& [k, c] : rest) {
        if (k.first > i || k.second > j) continue;
        const Rational& prev = r[static_cast<std::size_t>(i - k.first) * side + (j - k.second)];
        if (sgn(prev) != 0) s -= c * prev;
      }
      r[static_cast<std::size_t>(i) * side + j] = s * inv0;
    }
  }
  QTSeries out(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) out.add_term(i, j, r[static_cast<std::size_t>(i) * side + j]);
  return out;
}

namespace {

void append_power(std::ostringstream& os, const char* var, int e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  os << var;
  if (e > 1) os << '^' << e;
  first_factor = false;
}

}  // namespace

std::string QTSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool first_factor = true;
    if (mag != 1 || (k.first == 0 && k.second == 0)) {
      os << mag.get_str();
      first_factor = false;
    }
    append_power(os, "q", k.first, first_factor);
    append_power(os, "t", k.second, first_factor);
  }
  return os.str();
}

std::optional<CoefficientMismatch> first_difference(const QTSeries& lhs, const QTSeries& rhs) {
  auto a = lhs.terms().begin(), ae = lhs.terms().end();
  auto b = rhs.terms().begin(), be = rhs.terms().end();
  while (a != ae || b != be) {
    QTSeries::Key key;
    if (b == be || (a != ae && a->first < b->first)) key = a->first;
    else key = b->first;
    Rational l = (a != ae && a->first == key) ? a->second : Rational(0);
    Rational r = (b != be && b->first == key) ? b->second : Rational(0);
    if (l != r) return CoefficientMismatch{key.first, key.second, l, r};
    if (a != ae && a->first == key) ++a;
    if (b != be && b->first == key) ++b;
  }
  return std::nullopt;
}

QTSeries divide_exact(const QTSeries& num, const QTSeries& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionInexact, "division by zero");
  const int work = std::max({num.q_degree(), num.t_degree(), 0});
  const QTSeries quotient = num.truncated(work) * den.truncated(work).inverse();
  const int check = work + std::max({den.q_degree(), den.t_degree(), 0});
  const QTSeries back = quotient.with_truncation(check) * den.with_truncation(check);
  if (back != num)
    throw Error(ErrorCode::DivisionInexact, "(" + den.to_string() + ") does not divide (" +
                                                num.to_string() + ")");
  return quotient;
}

}  // namespace hyperoct
