#include "hyperoct/odiagram.hpp"

#include <algorithm>

#include "combinations.hpp"
#include "hyperoct/error.hpp"

namespace hyperoct {

namespace {

std::string cell_str(const Cell& c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

}  // namespace

ODiagram ODiagram::normalize(std::vector<Cell> cells, int n) {
  if (static_cast<int>(cells.size()) != n)
    throw Error(ErrorCode::WrongCount, "expected " + std::to_string(n) + " cells, got " +
                                           std::to_string(cells.size()));
  return normalize(std::move(cells));
}

ODiagram ODiagram::normalize(std::vector<Cell> cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (c.a < 0 || c.b < 0)
      throw Error(ErrorCode::NegativeEntry, "cell " + std::to_string(i + 1) + " " + cell_str(c));
    if ((c.a + c.b) % 2 == 0)
      throw Error(ErrorCode::EvenParityCell, "cell " + std::to_string(i + 1) + " " + cell_str(c));
  }
  std::sort(cells.begin(), cells.end());
  auto dup = std::adjacent_find(cells.begin(), cells.end());
  if (dup != cells.end()) throw Error(ErrorCode::DuplicateCell, cell_str(*dup));
  ODiagram d;
  d.cells_ = std::move(cells);
  return d;
}

ODiagram ODiagram::from_rows(const std::vector<int>& top, const std::vector<int>& bottom) {
  if (top.size() != bottom.size())
    throw Error(ErrorCode::SizeMismatch, "rows of different lengths");
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < top.size(); ++i) cells.push_back({top[i], bottom[i]});
  return normalize(std::move(cells));
}

std::vector<int> ODiagram::top() const {
  std::vector<int> r;
  for (const Cell& c : cells_) r.push_back(c.a);
  return r;
}

std::vector<int> ODiagram::bottom() const {
  std::vector<int> r;
  for (const Cell& c : cells_) r.push_back(c.b);
  return r;
}

std::pair<int, int> ODiagram::weight() const {
  std::pair<int, int> w{0, 0};
  for (const Cell& c : cells_) {
    w.first += c.a;
    w.second += c.b;
  }
  return w;
}

SignedPermutation colabel_classifying_perm(const ODiagram& d) {
  return classify_cells(d.cells(), col_less);
}

ODiagram compact_o_of_perm(const SignedPermutation& beta) {
  const std::vector<int> g = g_vector(beta);
  const std::vector<int> gh = g_hat_vector(beta);
  std::vector<Cell> cells;
  for (int i = 0; i < beta.size(); ++i) cells.push_back({g[i], gh[i]});
  return ODiagram::normalize(std::move(cells));
}

bool is_compact(const ODiagram& d) {
  return compact_o_of_perm(colabel_classifying_perm(d)) == d;
}

ODiagram psi(const EDiagram& d) {
  const SignedPermutation beta = classifying_perm(d);
  if (compact_of_perm(beta) != d) throw Error(ErrorCode::NotCompact, "\n" + d.to_text());
  const std::vector<int> g = g_vector(beta);
  const std::vector<int> gt = g_tilde_vector(beta);
  std::vector<Cell> cells;
  for (int i = 1; i <= beta.size(); ++i) {
    const int b = 2 * beta.sigma(i) - 1 - gt[i - 1];
    if (b < 0)
      throw Error(ErrorCode::NegativeEntry, "column " + std::to_string(i) + " of the image");
    cells.push_back({g[i - 1], b});
  }
  return ODiagram::normalize(std::move(cells));
}

ODiagram compactify_o(const ODiagram& d) {
  return compact_o_of_perm(colabel_classifying_perm(d));
}

PhiOResult phi_o(const ODiagram& d) {
  PhiOResult r;
  r.compact = compactify_o(d);
  r.lam = paired_difference(marginal(d.top()), marginal(r.compact.top()));
  r.mu = paired_difference(marginal(d.bottom()), marginal(r.compact.bottom()));
  return r;
}

ODiagram phi_o_inverse(const PhiOResult& r) {
  if (!is_compact(r.compact)) throw Error(ErrorCode::NotCompact, "\n" + r.compact.to_text());
  const int n = r.compact.size();
  if (r.lam.largest() > n || r.mu.largest() > n)
    throw Error(ErrorCode::PartTooLarge, "parts of " + r.lam.to_string() + ", " +
                                             r.mu.to_string() + " exceed n=" + std::to_string(n));
  std::vector<Cell> cells = r.compact.cells();
  for (int k : r.lam.parts()) {
    std::sort(cells.begin(), cells.end());
    for (int i = n - k; i < n; ++i) cells[i].a += 2;
  }
  for (int k : r.mu.parts()) {
    std::sort(cells.begin(), cells.end(), col_less);
    for (int i = n - k; i < n; ++i) cells[i].b += 2;
  }
  return ODiagram::normalize(std::move(cells));
}

std::vector<Cell> odd_cells(int max_entry) {
  std::vector<Cell> pool;
  for (int a = 0; a <= max_entry; ++a)
    for (int b = 0; b <= max_entry; ++b)
      if ((a + b) % 2) pool.push_back({a, b});
  return pool;
}

std::vector<ODiagram> enumerate_odiagrams(int n, int max_entry, std::uint64_t cap) {
  if (n < 1 || max_entry < 0) throw Error(ErrorCode::InvalidArgument, "bad enumeration bounds");
  std::vector<ODiagram> out;
  detail::for_each_selection(odd_cells(max_entry), n, false, cap, [&](const std::vector<Cell>& c) {
    out.push_back(ODiagram::normalize(c));
  });
  return out;
}

}  // namespace hyperoct
