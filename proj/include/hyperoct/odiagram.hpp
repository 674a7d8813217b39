#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperoct/cell.hpp"
#include "hyperoct/ediagram.hpp"
#include "hyperoct/partition.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// n distinct cells with a+b odd, sorted in reading order
class ODiagram {
 public:
  ODiagram() = default;

  static ODiagram normalize(std::vector<Cell> cells, int n);
  static ODiagram normalize(std::vector<Cell> cells);
  static ODiagram from_rows(const std::vector<int>& top, const std::vector<int>& bottom);

  int size() const noexcept { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const Cell& operator[](int i) const { return cells_[i]; }
  std::vector<int> top() const;
  std::vector<int> bottom() const;
  std::pair<int, int> weight() const;
  std::string to_text() const { return cells_to_text(cells_); }

  friend bool operator==(const ODiagram&, const ODiagram&) = default;
  friend auto operator<=>(const ODiagram& x, const ODiagram& y) { return x.cells_ <=> y.cells_; }

 private:
  std::vector<Cell> cells_;
};

SignedPermutation colabel_classifying_perm(const ODiagram& d);
// (g(beta), g^(beta))
ODiagram compact_o_of_perm(const SignedPermutation& beta);
bool is_compact(const ODiagram& d);
// (g, g~) -> (g, c - g~) with c_i = 2 sigma(i) - 1; D must be compact
ODiagram psi(const EDiagram& d);
ODiagram compactify_o(const ODiagram& d);

struct PhiOResult {
  ODiagram compact;
  Partition lam;
  Partition mu;
  friend bool operator==(const PhiOResult&, const PhiOResult&) = default;
  friend auto operator<=>(const PhiOResult&, const PhiOResult&) = default;
};

PhiOResult phi_o(const ODiagram& d);
ODiagram phi_o_inverse(const PhiOResult& r);

std::vector<ODiagram> enumerate_odiagrams(int n, int max_entry,
                                          std::uint64_t cap = kDefaultDiagramCap);
std::vector<Cell> odd_cells(int max_entry);

}  // namespace hyperoct
