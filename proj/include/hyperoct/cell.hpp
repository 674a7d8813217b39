#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// (a, b): exponent of x and exponent of y. The defaulted ordering is the reading order.
struct Cell {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline Cell transpose(Cell c) { return {c.b, c.a}; }

// reading order: a first
bool lex_less(const Cell& x, const Cell& y) noexcept;
// labelling order: b first
bool op_less(const Cell& x, const Cell& y) noexcept;
// colabelling order: b increasing, then a decreasing
bool col_less(const Cell& x, const Cell& y) noexcept;

using CellOrder = bool (*)(const Cell&, const Cell&) noexcept;

// Signed permutation read off cells listed in reading order: labels come from `label_order`,
// equal cells receive increasing labels left to right, and the sign is + exactly when a is odd.
SignedPermutation classify_cells(const std::vector<Cell>& reading, CellOrder label_order);

// top row a_1..a_n, bottom row b_1..b_n
std::string cells_to_text(const std::vector<Cell>& cells);

// entrywise comparison of two equally long sorted cell lists
bool entrywise_leq(const std::vector<Cell>& x, const std::vector<Cell>& y);

}  // namespace hyperoct
