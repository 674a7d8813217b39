#include "hyperoct/straighten.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <tuple>

#include "hyperoct/error.hpp"

namespace hyperoct {

namespace {

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<int> padded_ascending(const Partition& p, int n) {
  std::vector<int> v(n, 0);
  for (int i = 0; i < p.length(); ++i) v[i] = p[i];
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool StraightenOrderLess::operator()(const EDiagram& x, const EDiagram& y) const {
  const auto xa = sorted_desc(x.top()), ya = sorted_desc(y.top());
  if (xa != ya) return xa < ya;
  const auto xb = sorted_desc(x.bottom()), yb = sorted_desc(y.bottom());
  if (xb != yb) return xb < yb;
  return std::lexicographical_compare(x.cells().rbegin(), x.cells().rend(), y.cells().rbegin(),
                                      y.cells().rend());
}

std::map<EDiagram, Rational> monomial_product(const Partition& lam, const Partition& mu,
                                              const EDiagram& c) {
  const int n = c.size();
  if (lam.length() > n || mu.length() > n)
    throw Error(ErrorCode::TooManyParts, "monomial product with more parts than variables");
  std::map<EDiagram, long> counts;
  std::vector<int> u = padded_ascending(lam, n);
  const std::vector<int> v0 = padded_ascending(mu, n);
  do {
    std::vector<int> v = v0;
    do {
      std::vector<Cell> cells(n);
      for (int i = 0; i < n; ++i) cells[i] = {c[i].a + 2 * u[i], c[i].b + 2 * v[i]};
      ++counts[EDiagram::normalize(std::move(cells))];
    } while (std::next_permutation(v.begin(), v.end()));
  } while (std::next_permutation(u.begin(), u.end()));
  const std::int64_t oc = orbit_size(c.cells());
  std::map<EDiagram, Rational> out;
  for (const auto& [e, k] : counts) {
    Rational coef(Integer(oc) * Integer(k), Integer(static_cast<long>(orbit_size(e.cells()))));
    coef.canonicalize();
    out.emplace(e, coef);
  }
  return out;
}

std::uint64_t count_ediagrams_of_bidegree(int n, int x_weight, int y_weight) {
  if (n < 0 || x_weight < 0 || y_weight < 0) return 0;
  const int X = x_weight, Y = y_weight;
  auto at = [&](int k, int x, int y) { return (static_cast<std::size_t>(k) * (X + 1) + x) * (Y + 1) + y; };
  std::vector<std::uint64_t> dp(static_cast<std::size_t>(n + 1) * (X + 1) * (Y + 1), 0);
  dp[at(0, 0, 0)] = 1;
  for (int a = 0; a <= X; ++a)
    for (int b = 0; b <= Y; ++b) {
      if ((a + b) % 2) continue;
      for (int k = 1; k <= n; ++k)
        for (int x = a; x <= X; ++x)
          for (int y = b; y <= Y; ++y) dp[at(k, x, y)] += dp[at(k - 1, x - a, y - b)];
    }
  return dp[at(n, X, Y)];
}

StraightenedForm straighten(const EDiagram& d, const StraightenOptions& options) {
  const auto [wx, wy] = d.weight();
  const std::uint64_t diagrams = count_ediagrams_of_bidegree(d.size(), wx, wy);
  const std::uint64_t cap = options.rng ? diagrams * diagrams + 1 : diagrams;

  std::map<EDiagram, Rational, StraightenOrderLess> pending;
  pending.emplace(d, Rational(1));
  std::map<std::tuple<Partition, Partition, SignedPermutation>, Rational> found;
  std::uint64_t steps = 0;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    if (options.rng) {
      const auto pick = std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(*options.rng);
      it = std::next(pending.begin(), static_cast<std::ptrdiff_t>(pick));
    }
    const EDiagram e = it->first;
    const Rational c = it->second;
    pending.erase(it);
    if (sgn(c) == 0) continue;
    if (++steps > cap)
      throw Error(ErrorCode::NonTermination, "straightening exceeded " + std::to_string(cap) +
                                                 " steps");
    const PhiResult r = phi(e);
    const Partition lam = r.lam.conjugate(), mu = r.mu.conjugate();
    const std::map<EDiagram, Rational> product = monomial_product(lam, mu, r.compact);
    const auto self = product.find(e);
    if (self == product.end() || self->second != 1)
      throw Error(ErrorCode::NonTermination, "diagram missing from its own leading product");
    for (const auto& [f, v] : product) {
      if (f == e) continue;
      if (!StraightenOrderLess{}(f, e))
        throw Error(ErrorCode::NonTermination, "remainder not below the processed diagram");
      pending[f] -= c * v;
    }
    found[{lam, mu, classifying_perm(r.compact)}] += c;
  }
  StraightenedForm out;
  out.n = d.size();
  for (auto& [k, v] : found)
    if (sgn(v) != 0)
      out.terms.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
  return out;
}

StraightenedForm straighten(const std::vector<int>& a, const std::vector<int>& b) {
  EDiagram d;
  try {
    d = EDiagram::from_rows(a, b);
  } catch (const Error& err) {
    throw Error(ErrorCode::NotEDiagram, err.what());
  }
  return straighten(d);
}

DiagPoly expand_straightened(const StraightenedForm& s) {
  DiagPoly total(s.n);
  for (const StraightenedTerm& t : s.terms) {
    DiagPoly p = monomial_sym_squares(t.lam, VariableSet::X, s.n) *
                 monomial_sym_squares(t.mu, VariableSet::Y, s.n) *
                 monomial_invariant(compact_of_perm(t.beta));
    total += p * t.coeff;
  }
  return total;
}

}  // namespace hyperoct
