#include "hyperoct/cell.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperoct {

bool lex_less(const Cell& x, const Cell& y) noexcept {
  return x.a != y.a ? x.a < y.a : x.b < y.b;
}

bool op_less(const Cell& x, const Cell& y) noexcept {
  return x.b != y.b ? x.b < y.b : x.a < y.a;
}

bool col_less(const Cell& x, const Cell& y) noexcept {
  return x.b != y.b ? x.b < y.b : x.a > y.a;
}

SignedPermutation classify_cells(const std::vector<Cell>& reading, CellOrder label_order) {
  const int n = static_cast<int>(reading.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return label_order(reading[i], reading[j]); });
  std::vector<int> w(n);
  for (int label = 1; label <= n; ++label) {
    const int i = idx[label - 1];
    w[i] = reading[i].a % 2 ? label : -label;
  }
  return SignedPermutation(std::move(w));
}

std::string cells_to_text(const std::vector<Cell>& cells) {
  std::ostringstream top, bottom;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string a = std::to_string(cells[i].a), b = std::to_string(cells[i].b);
    const std::size_t w = std::max(a.size(), b.size());
    if (i) {
      top << ' ';
      bottom << ' ';
    }
    top << std::string(w - a.size(), ' ') << a;
    bottom << std::string(w - b.size(), ' ') << b;
  }
  return top.str() + "\n" + bottom.str() + "\n";
}

bool entrywise_leq(const std::vector<Cell>& x, const std::vector<Cell>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].a > y[i].a || x[i].b > y[i].b) return false;
  return true;
}

}  // namespace hyperoct
