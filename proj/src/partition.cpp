#include "hyperoct/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hyperoct/error.hpp"

namespace hyperoct {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw Error(ErrorCode::InvalidArgument, "negative partition part");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) size_ += p;
}

Partition Partition::conjugate() const {
  std::vector<int> c(largest(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(largest() + 1, 0);
  for (int p : parts_) ++m[p];
  return m;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size() || v < 0) throw std::invalid_argument(token);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad partition part '" + token + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ',' || ch == ' ' || ch == '\t') flush();
    else token.push_back(ch);
  }
  flush();
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw Error(ErrorCode::OutOfRange, "64-bit overflow in a combinatorial count");
  return r;
}

}  // namespace

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t z_mu(const Partition& mu) {
  std::int64_t z = 1;
  auto m = mu.multiplicities();
  for (int k = 1; k < static_cast<int>(m.size()); ++k)
    for (int j = 1; j <= m[k]; ++j) z = checked_mul(z, static_cast<std::int64_t>(k) * j);
  return z;
}

Integer z_mu_exact(const Partition& mu) {
  Integer z = 1;
  auto m = mu.multiplicities();
  for (int k = 1; k < static_cast<int>(m.size()); ++k)
    for (int j = 1; j <= m[k]; ++j) z *= k * j;
  return z;
}

std::int64_t hook_dimension(const Partition& lambda) {
  Partition c = lambda.conjugate();
  std::int64_t hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks = checked_mul(hooks, (lambda[i] - j - 1) + (c[j] - i - 1) + 1);
  return factorial(lambda.size()) / hooks;
}

}  // namespace hyperoct
