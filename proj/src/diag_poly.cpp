#include "hyperoct/diag_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hyperoct/error.hpp"

namespace hyperoct {

bool MonomialLess::operator()(const Exponent& u, const Exponent& v) const {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = u.size(); i >= 2; i -= 2) {
    if (u[i - 2] != v[i - 2]) return u[i - 2] < v[i - 2];
    if (u[i - 1] != v[i - 1]) return u[i - 1] < v[i - 1];
  }
  return false;
}

DiagPoly::DiagPoly(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative number of variables");
}

DiagPoly DiagPoly::constant(int n, const Rational& c) {
  DiagPoly p(n);
  p.add_term(Exponent(2 * n, 0), c);
  return p;
}

DiagPoly DiagPoly::monomial(const Exponent& e, const Rational& c) {
  if (e.size() % 2) throw Error(ErrorCode::InvalidArgument, "odd exponent vector length");
  DiagPoly p(static_cast<int>(e.size() / 2));
  p.add_term(e, c);
  return p;
}

DiagPoly DiagPoly::variable(int n, int i, int which) {
  Exponent e(2 * n, 0);
  e.at(2 * (i - 1) + which) = 1;
  return monomial(e);
}

void DiagPoly::check(const Exponent& e) const {
  if (static_cast<int>(e.size()) != 2 * n_)
    throw Error(ErrorCode::SizeMismatch, "exponent vector of length " + std::to_string(e.size()) +
                                             " for n=" + std::to_string(n_));
  for (int v : e)
    if (v < 0) throw Error(ErrorCode::NegativeEntry, "negative exponent");
}

Rational DiagPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiagPoly::add_term(const Exponent& e, const Rational& c) {
  check(e);
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<Exponent> DiagPoly::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<std::pair<int, int>> DiagPoly::bidegree() const {
  std::optional<std::pair<int, int>> deg;
  for (const auto& kv : terms_) {
    std::pair<int, int> d{0, 0};
    for (int i = 0; i < n_; ++i) {
      d.first += kv.first[2 * i];
      d.second += kv.first[2 * i + 1];
    }
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

DiagPoly& DiagPoly::operator+=(const DiagPoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::SizeMismatch, "polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

DiagPoly& DiagPoly::operator-=(const DiagPoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::SizeMismatch, "polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

DiagPoly& DiagPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

DiagPoly operator*(const DiagPoly& a, const DiagPoly& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::SizeMismatch, "polynomials in different rings");
  DiagPoly r(a.n_);
  Exponent e(2 * a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string DiagPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    bool any = false;
    if (mag != 1) {
      os << mag.get_str();
      any = true;
    }
    for (int i = 0; i < n_; ++i)
      for (int w = 0; w < 2; ++w) {
        const int e = it->first[2 * i + w];
        if (e == 0) continue;
        if (any) os << '*';
        os << (w ? 'y' : 'x') << i + 1;
        if (e > 1) os << '^' << e;
        any = true;
      }
    if (!any) os << '1';
  }
  return os.str();
}

DiagPoly act(const SignedPermutation& beta, const DiagPoly& p) {
  const int n = p.nvars();
  if (beta.size() != n)
    throw Error(ErrorCode::SizeMismatch, "B_" + std::to_string(beta.size()) +
                                             " acting on polynomials in " + std::to_string(n) +
                                             " variable pairs");
  DiagPoly r(n);
  Exponent e(2 * n);
  for (const auto& [src, c] : p.terms()) {
    int flips = 0;
    for (int i = 1; i <= n; ++i) {
      const int j = beta.sigma(i);
      e[2 * (j - 1)] = src[2 * (i - 1)];
      e[2 * (j - 1) + 1] = src[2 * (i - 1) + 1];
      if (beta.negative_at(i)) flips += src[2 * (i - 1)] + src[2 * (i - 1) + 1];
    }
    r.add_term(e, flips % 2 ? Rational(-c) : c);
  }
  return r;
}

DiagPoly monomial_invariant(const EDiagram& d) {
  const int n = d.size();
  DiagPoly r(n);
  std::vector<Cell> arr = d.cells();
  Exponent e(2 * n);
  do {
    for (int i = 0; i < n; ++i) {
      e[2 * i] = arr[i].a;
      e[2 * i + 1] = arr[i].b;
    }
    r.add_term(e, 1);
  } while (std::next_permutation(arr.begin(), arr.end()));
  return r;
}

DiagPoly monomial_invariant(const std::vector<int>& a, const std::vector<int>& b) {
  EDiagram d;
  try {
    d = EDiagram::from_rows(a, b);
  } catch (const Error& err) {
    throw Error(ErrorCode::NotEDiagram, err.what());
  }
  std::vector<Cell> given;
  for (std::size_t i = 0; i < a.size(); ++i) given.push_back({a[i], b[i]});
  if (given != d.cells()) throw Error(ErrorCode::NotEDiagram, "cells not in reading order");
  return monomial_invariant(d);
}

DiagPoly monomial_sym_squares(const Partition& lambda, VariableSet which, int n) {
  if (lambda.length() > n)
    throw Error(ErrorCode::TooManyParts, lambda.to_string() + " in " + std::to_string(n) +
                                             " variables");
  std::vector<int> parts(n, 0);
  for (int i = 0; i < lambda.length(); ++i) parts[i] = lambda[i];
  std::sort(parts.begin(), parts.end());
  DiagPoly r(n);
  Exponent e(2 * n, 0);
  const int offset = which == VariableSet::X ? 0 : 1;
  do {
    for (int i = 0; i < n; ++i) e[2 * i + offset] = 2 * parts[i];
    r.add_term(e, 1);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return r;
}

DiagPoly jacobian_delta(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  DiagPoly r = DiagPoly::constant(n, 1);
  for (int i = 1; i <= n; ++i) r = r * DiagPoly::variable(n, i, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const DiagPoly xi = DiagPoly::variable(n, i, 0), xj = DiagPoly::variable(n, j, 0);
      r = r * (xi * xi - xj * xj);
    }
  return r;
}

DiagPoly alternant(const ODiagram& d) {
  const int n = d.size();
  DiagPoly r(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Exponent e(2 * n);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    for (int i = 0; i < n; ++i) {
      e[2 * i] = d[perm[i]].a;
      e[2 * i + 1] = d[perm[i]].b;
    }
    r.add_term(e, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

std::int64_t orbit_size(const std::vector<Cell>& sorted_cells) {
  std::int64_t r = factorial(static_cast<int>(sorted_cells.size()));
  std::size_t i = 0;
  while (i < sorted_cells.size()) {
    std::size_t j = i;
    while (j < sorted_cells.size() && sorted_cells[j] == sorted_cells[i]) ++j;
    r /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

}  // namespace hyperoct
