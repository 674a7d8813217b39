#include "hyperoct/signed_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hyperoct/error.hpp"

namespace hyperoct {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : window_) {
    if (v == 0) throw Error(ErrorCode::ZeroEntry, "entry 0 in signed permutation");
    int a = v < 0 ? -v : v;
    if (a > n)
      throw Error(ErrorCode::OutOfRange,
                  "entry " + std::to_string(v) + " exceeds n=" + std::to_string(n));
    if (seen[a]) throw Error(ErrorCode::DuplicateAbs, "|entry| " + std::to_string(a) + " repeated");
    seen[a] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::vector<int> w;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || used == 0) throw Error(ErrorCode::Parse, "bad token '" + tok + "'");
    w.push_back(v);
  }
  if (w.empty()) throw Error(ErrorCode::Parse, "empty signed permutation");
  return SignedPermutation(std::move(w));
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < window_.size(); ++i) os << (i ? " " : "") << window_[i];
  return os.str();
}

std::string SignedPermutation::to_overline_string() const {
  std::string s;
  for (int v : window_) {
    s += std::to_string(v < 0 ? -v : v);
    if (v < 0) s += "̄";
  }
  return s;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::SizeMismatch, "compose of B_" + std::to_string(a.size()) + " and B_" +
                                             std::to_string(b.size()));
  std::vector<int> w(b.size());
  for (int i = 1; i <= b.size(); ++i) {
    int v = a(b.sigma(i));
    w[i - 1] = b.negative_at(i) ? -v : v;
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation inverse(const SignedPermutation& beta) {
  std::vector<int> w(beta.size());
  for (int i = 1; i <= beta.size(); ++i) w[beta.sigma(i) - 1] = beta.negative_at(i) ? -i : i;
  return SignedPermutation(std::move(w));
}

bool entry_precedes(int x, int y) noexcept {
  if ((x < 0) != (y < 0)) return x < 0;
  return x < 0 ? -x < -y : x < y;
}

StatRecord stats(const SignedPermutation& beta) {
  StatRecord r;
  const int n = beta.size();
  for (int i = 1; i < n; ++i) {
    if (entry_precedes(beta(i + 1), beta(i))) {
      r.des.push_back(i);
      r.maj += i;
    } else {
      r.ris.push_back(i);
    }
  }
  for (int i = 1; i <= n; ++i) r.neg += beta.negative_at(i);
  r.fmaj = 2 * r.maj + r.neg;
  return r;
}

int fmaj(const SignedPermutation& beta) { return stats(beta).fmaj; }

LocalVectors local_vectors(const SignedPermutation& beta) {
  const int n = beta.size();
  const StatRecord st = stats(beta);
  const StatRecord st_inv = stats(inverse(beta));
  LocalVectors lv;
  lv.d.resize(n);
  lv.eps.resize(n);
  lv.f.resize(n);
  lv.delta.resize(n);
  lv.eta.resize(n);
  lv.g.resize(n);
  lv.mu.resize(n);
  for (int i = 1; i <= n; ++i) {
    int ge = 0, lt = 0, rises = 0;
    for (int j : st.des) (j >= i ? ge : lt)++;
    for (int k : st_inv.ris) rises += k < i;
    lv.d[i - 1] = ge;
    lv.delta[i - 1] = lt;
    lv.eps[i - 1] = beta.negative_at(i) ? 1 : 0;
    lv.eta[i - 1] = 1 - lv.eps[i - 1];
    lv.f[i - 1] = 2 * ge + lv.eps[i - 1];
    lv.g[i - 1] = 2 * lt + lv.eta[i - 1];
    lv.mu[i - 1] = rises;
  }
  return lv;
}

std::vector<int> g_vector(const SignedPermutation& beta) { return local_vectors(beta).g; }

std::vector<int> g_tilde_vector(const SignedPermutation& beta) {
  const std::vector<int> gi = g_vector(inverse(beta));
  std::vector<int> out(beta.size());
  for (int i = 1; i <= beta.size(); ++i) out[i - 1] = gi[beta.sigma(i) - 1];
  return out;
}

std::vector<int> g_hat_vector(const SignedPermutation& beta) {
  const LocalVectors lv = local_vectors(beta);
  std::vector<int> out(beta.size());
  for (int i = 1; i <= beta.size(); ++i) out[i - 1] = 2 * lv.mu[beta.sigma(i) - 1] + lv.eps[i - 1];
  return out;
}

SignedPermutation circ_involution(const SignedPermutation& beta) {
  const int n = beta.size();
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) {
    int v = beta(n + 1 - i);
    int m = n + 1 - (v < 0 ? -v : v);
    w[i - 1] = v < 0 ? m : -m;
  }
  return SignedPermutation(std::move(w));
}

std::pair<Partition, Partition> signed_cycle_type(const SignedPermutation& beta) {
  const int n = beta.size();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> pos, neg;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    int len = 0, negs = 0;
    for (int i = start; !seen[i]; i = beta.sigma(i)) {
      seen[i] = 1;
      ++len;
      negs += beta.negative_at(i);
    }
    (negs % 2 ? neg : pos).push_back(len);
  }
  return {Partition(pos), Partition(neg)};
}

int sign(const SignedPermutation& beta) {
  const int n = beta.size();
  int s = 1;
  std::vector<char> seen(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int i = start; !seen[i]; i = beta.sigma(i)) {
      seen[i] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  for (int i = 1; i <= n; ++i)
    if (beta.negative_at(i)) s = -s;
  return s;
}

std::vector<int> descent_basis_exponents(const SignedPermutation& beta) {
  const LocalVectors lv = local_vectors(beta);
  std::vector<int> e(beta.size(), 0);
  for (int i = 1; i <= beta.size(); ++i) e[beta.sigma(i) - 1] = lv.f[i - 1];
  return e;
}

SignedPermutationEnumerator::SignedPermutationEnumerator(int n, int cap) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n > cap)
    throw Error(ErrorCode::CapExceeded,
                "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  reset();
}

void SignedPermutationEnumerator::reset() {
  perm_.resize(n_);
  std::iota(perm_.begin(), perm_.end(), 1);
  mask_ = 0;
  started_ = false;
  done_ = false;
}

std::uint64_t SignedPermutationEnumerator::count() const {
  return (std::uint64_t{1} << n_) * static_cast<std::uint64_t>(factorial(n_));
}

bool SignedPermutationEnumerator::next(SignedPermutation& out) {
  if (done_) return false;
  if (started_) {
    if (++mask_ == (1u << n_)) {
      mask_ = 0;
      if (!std::next_permutation(perm_.begin(), perm_.end())) {
        done_ = true;
        return false;
      }
    }
  }
  started_ = true;
  std::vector<int> w(perm_);
  for (int i = 0; i < n_; ++i)
    if (mask_ & (1u << (n_ - 1 - i))) w[i] = -w[i];
  out = SignedPermutation(std::move(w));
  return true;
}

std::vector<SignedPermutation> enumerate_signed_permutations(int n, int cap) {
  SignedPermutationEnumerator en(n, cap);
  std::vector<SignedPermutation> out;
  out.reserve(en.count());
  SignedPermutation b;
  while (en.next(b)) out.push_back(std::move(b));
  return out;
}

}  // namespace hyperoct
