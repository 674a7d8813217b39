#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hyperoct/rational.hpp"

namespace hyperoct {

// Weakly decreasing sequence of positive parts. Construction sorts and drops zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](int i) const noexcept { return i < length() ? parts_[i] : 0; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  // multiplicities m[k] of part k, index 0 unused
  std::vector<int> multiplicities() const;

  // "(2,1,1)", empty partition prints as "()"
  std::string to_string() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// all partitions of n, in decreasing lexicographic order: (n), (n-1,1), ..., (1^n)
std::vector<Partition> partitions_of(int n);

std::int64_t z_mu(const Partition& mu);
Integer z_mu_exact(const Partition& mu);
std::int64_t factorial(int n);
std::int64_t binomial(int n, int k);
// number of standard Young tableaux of shape lambda (hook length formula)
std::int64_t hook_dimension(const Partition& lambda);

}  // namespace hyperoct
