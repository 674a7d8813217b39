#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperoct/partition.hpp"

namespace hyperoct {

inline constexpr int kDefaultGroupCap = 7;

// An element of B_n in one-line notation: window[i-1] = beta(i).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  // whitespace separated nonzero integers, negatives written with '-'
  static SignedPermutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const noexcept { return window_; }
  // 1-based
  int operator()(int i) const { return window_[i - 1]; }
  int sigma(int i) const { return window_[i - 1] < 0 ? -window_[i - 1] : window_[i - 1]; }
  bool negative_at(int i) const { return window_[i - 1] < 0; }

  std::string to_string() const;
  // compact form with overlines, e.g. "2̄1̄5̄43"
  std::string to_overline_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    return a.window_ <=> b.window_;
  }

 private:
  std::vector<int> window_;
};

// (a o b)(i): apply b, then a.
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& beta);

// the total order 1̄ ≺ 2̄ ≺ ... ≺ 0 ≺ 1 ≺ 2 ≺ ...
bool entry_precedes(int x, int y) noexcept;

struct StatRecord {
  std::vector<int> des;
  std::vector<int> ris;
  int maj = 0;
  int neg = 0;
  int fmaj = 0;
};

StatRecord stats(const SignedPermutation& beta);
int fmaj(const SignedPermutation& beta);

struct LocalVectors {
  std::vector<int> d, eps, f;
  std::vector<int> delta, eta, g;
  std::vector<int> mu;
};

LocalVectors local_vectors(const SignedPermutation& beta);
std::vector<int> g_vector(const SignedPermutation& beta);
// g~_i = g_{sigma(i)}(beta^{-1})
std::vector<int> g_tilde_vector(const SignedPermutation& beta);
// g^_i = 2 mu_{sigma(i)} + eps_i
std::vector<int> g_hat_vector(const SignedPermutation& beta);

SignedPermutation circ_involution(const SignedPermutation& beta);

// (positive cycle lengths, negative cycle lengths)
std::pair<Partition, Partition> signed_cycle_type(const SignedPermutation& beta);

int sign(const SignedPermutation& beta);

std::vector<int> descent_basis_exponents(const SignedPermutation& beta);

// Lexicographic on (underlying permutation, sign mask); the mask reads position 1 as its
// most significant bit.
class SignedPermutationEnumerator {
 public:
  explicit SignedPermutationEnumerator(int n, int cap = kDefaultGroupCap);
  bool next(SignedPermutation& out);
  void reset();
  std::uint64_t count() const;

 private:
  int n_;
  std::vector<int> perm_;
  std::uint32_t mask_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<SignedPermutation> enumerate_signed_permutations(int n, int cap = kDefaultGroupCap);

}  // namespace hyperoct
