#include "hyperoct/ediagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "combinations.hpp"
#include "hyperoct/error.hpp"

namespace hyperoct {

namespace {

std::string cell_str(const Cell& c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

std::vector<Cell> transposed_sorted(const std::vector<Cell>& cells) {
  std::vector<Cell> t;
  t.reserve(cells.size());
  for (const Cell& c : cells) t.push_back(transpose(c));
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

EDiagram EDiagram::normalize(std::vector<Cell> cells, int n) {
  if (static_cast<int>(cells.size()) != n)
    throw Error(ErrorCode::WrongCount, "expected " + std::to_string(n) + " cells, got " +
                                           std::to_string(cells.size()));
  return normalize(std::move(cells));
}

EDiagram EDiagram::normalize(std::vector<Cell> cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (c.a < 0 || c.b < 0)
      throw Error(ErrorCode::NegativeEntry, "cell " + std::to_string(i + 1) + " " + cell_str(c));
    if ((c.a + c.b) % 2)
      throw Error(ErrorCode::OddParityCell, "cell " + std::to_string(i + 1) + " " + cell_str(c));
  }
  std::sort(cells.begin(), cells.end());
  EDiagram d;
  d.cells_ = std::move(cells);
  return d;
}

EDiagram EDiagram::from_rows(const std::vector<int>& top, const std::vector<int>& bottom) {
  if (top.size() != bottom.size())
    throw Error(ErrorCode::SizeMismatch, "rows of different lengths");
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < top.size(); ++i) cells.push_back({top[i], bottom[i]});
  return normalize(std::move(cells));
}

std::vector<std::pair<Cell, int>> EDiagram::multiplicities() const {
  std::vector<std::pair<Cell, int>> out;
  for (const Cell& c : cells_) {
    if (!out.empty() && out.back().first == c) ++out.back().second;
    else out.emplace_back(c, 1);
  }
  return out;
}

std::vector<int> EDiagram::top() const {
  std::vector<int> r;
  for (const Cell& c : cells_) r.push_back(c.a);
  return r;
}

std::vector<int> EDiagram::bottom() const {
  std::vector<int> r;
  for (const Cell& c : cells_) r.push_back(c.b);
  return r;
}

std::pair<int, int> EDiagram::weight() const {
  std::pair<int, int> w{0, 0};
  for (const Cell& c : cells_) {
    w.first += c.a;
    w.second += c.b;
  }
  return w;
}

EDiagram EDiagram::transposed() const {
  EDiagram d;
  d.cells_ = transposed_sorted(cells_);
  return d;
}

DesSch des_sch(const EDiagram& d) {
  DesSch r;
  const auto& c = d.cells();
  const int n = d.size();
  if (n > 0 && c[0].a % 2) r.sch.push_back(0);
  for (int k = 1; k < n; ++k) {
    const bool same = (c[k - 1].a - c[k].a) % 2 == 0;
    if (!same) r.sch.push_back(k);
    else if (c[k - 1].b > c[k].b) r.des.push_back(k);
  }
  return r;
}

std::vector<int> g_vector(const EDiagram& d) {
  const DesSch ds = des_sch(d);
  std::vector<int> g(d.size());
  for (int i = 1; i <= d.size(); ++i) {
    const auto delta = std::count_if(ds.des.begin(), ds.des.end(), [i](int k) { return k < i; });
    const auto s = std::count_if(ds.sch.begin(), ds.sch.end(), [i](int k) { return k < i; });
    g[i - 1] = static_cast<int>(2 * delta + s);
  }
  return g;
}

SignedPermutation classifying_perm(const EDiagram& d) { return classify_cells(d.cells(), op_less); }

EDiagram compact_of_perm(const SignedPermutation& beta) {
  const std::vector<int> g = g_vector(beta);
  const std::vector<int> gt = g_tilde_vector(beta);
  std::vector<Cell> cells;
  for (int i = 0; i < beta.size(); ++i) cells.push_back({g[i], gt[i]});
  return EDiagram::normalize(std::move(cells));
}

bool is_compact(const EDiagram& d) { return compact_of_perm(classifying_perm(d)) == d; }

std::vector<Cell> vert_constraint(const Cell& c, const EDiagram& d) {
  const Cell lo{c.a - 2, c.b};
  std::vector<Cell> out;
  for (const Cell& x : d.cells())
    if (lo < x && x < c) out.push_back(x);
  return out;
}

std::vector<Cell> horiz_constraint(const Cell& c, const EDiagram& d) {
  std::vector<Cell> out;
  for (const Cell& x : vert_constraint(transpose(c), d.transposed())) out.push_back(transpose(x));
  return out;
}

MoveResult try_move(const EDiagram& d, int index, Direction dir) {
  if (index < 0 || index >= d.size())
    throw Error(ErrorCode::InvalidArgument, "no cell at index " + std::to_string(index));
  const Cell c = d[index];
  const bool left = dir == Direction::Left;
  if ((left ? c.a : c.b) < 2)
    throw Error(ErrorCode::ExponentTooSmall,
                std::string(left ? "left" : "down") + " move of " + cell_str(c));
  const std::vector<Cell> blockers = left ? vert_constraint(c, d) : horiz_constraint(c, d);
  if (!blockers.empty()) {
    std::string reason = std::string(left ? "Vert" : "Horiz") + " of " + cell_str(c) + " holds";
    for (const Cell& x : blockers) reason += " " + cell_str(x);
    return Blocked{reason};
  }
  std::vector<Cell> cells = d.cells();
  cells[index] = left ? Cell{c.a - 2, c.b} : Cell{c.a, c.b - 2};
  return EDiagram::normalize(std::move(cells));
}

std::vector<Move> allowed_moves(const EDiagram& d) {
  std::vector<Move> out;
  for (int i = 0; i < d.size(); ++i) {
    if (i > 0 && d[i] == d[i - 1]) continue;
    for (Direction dir : {Direction::Left, Direction::Down}) {
      if ((dir == Direction::Left ? d[i].a : d[i].b) < 2) continue;
      if (std::holds_alternative<EDiagram>(try_move(d, i, dir))) out.push_back({i, dir});
    }
  }
  return out;
}

EDiagram compactify(const EDiagram& d) {
  const SignedPermutation beta = classifying_perm(d);
  const std::vector<int> g = g_vector(d);
  const std::vector<int> g_star = g_vector(d.transposed());
  std::vector<Cell> cells;
  for (int i = 1; i <= d.size(); ++i) cells.push_back({g[i - 1], g_star[beta.sigma(i) - 1]});
  return EDiagram::normalize(std::move(cells));
}

EDiagram compactify_by_moves(const EDiagram& d, std::mt19937_64* rng) {
  EDiagram cur = d;
  while (true) {
    const std::vector<Move> moves = allowed_moves(cur);
    if (moves.empty()) return cur;
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(*rng);
    cur = std::get<EDiagram>(try_move(cur, moves[pick].index, moves[pick].dir));
  }
}

EDiagram big_move(const EDiagram& d, int start_index, Direction dir) {
  const MoveResult first = try_move(d, start_index, dir);
  if (const auto* b = std::get_if<Blocked>(&first)) throw Error(ErrorCode::Blocked, b->reason);
  const bool left = dir == Direction::Left;
  const Cell c = d[start_index];
  std::vector<Cell> cells = left ? d.cells() : transposed_sorted(d.cells());
  const Cell key = left ? c : transpose(c);
  const auto from = std::lower_bound(cells.begin(), cells.end(), key);
  for (auto it = from; it != cells.end(); ++it) it->a -= 2;
  if (!left) cells = transposed_sorted(cells);
  return EDiagram::normalize(std::move(cells));
}

std::vector<int> marginal(const std::vector<int>& values) {
  const int top = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
  std::vector<int> out;
  for (int i = 0; i < top; ++i) {
    const auto k = std::count_if(values.begin(), values.end(), [i](int v) { return v > i; });
    if (k > 0) out.push_back(static_cast<int>(k));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Partition paired_difference(const std::vector<int>& larger, const std::vector<int>& smaller) {
  std::vector<int> diff;
  std::vector<int> rest(smaller);
  for (int v : larger) {
    auto it = std::find(rest.begin(), rest.end(), v);
    if (it != rest.end()) rest.erase(it);
    else diff.push_back(v);
  }
  if (!rest.empty())
    throw Error(ErrorCode::PairingViolation, "marginal multiset is not contained in the larger one");
  std::sort(diff.begin(), diff.end(), std::greater<>());
  if (diff.size() % 2)
    throw Error(ErrorCode::PairingViolation, "odd number of marginal differences");
  std::vector<int> parts;
  for (std::size_t i = 0; i < diff.size(); i += 2) {
    if (diff[i] != diff[i + 1])
      throw Error(ErrorCode::PairingViolation, "unpaired marginal difference " +
                                                   std::to_string(diff[i]));
    parts.push_back(diff[i]);
  }
  return Partition(std::move(parts));
}

PhiResult phi(const EDiagram& d) {
  PhiResult r;
  r.compact = compact_of_perm(classifying_perm(d));
  r.lam = paired_difference(marginal(d.top()), marginal(r.compact.top()));
  r.mu = paired_difference(marginal(d.bottom()), marginal(r.compact.bottom()));
  return r;
}

EDiagram phi_inverse(const PhiResult& r) {
  if (!is_compact(r.compact))
    throw Error(ErrorCode::NotCompact, "\n" + r.compact.to_text());
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
    std::sort(cells.begin(), cells.end(), op_less);
    for (int i = n - k; i < n; ++i) cells[i].b += 2;
  }
  return EDiagram::normalize(std::move(cells));
}

std::vector<Cell> even_cells(int max_entry) {
  std::vector<Cell> pool;
  for (int a = 0; a <= max_entry; ++a)
    for (int b = 0; b <= max_entry; ++b)
      if ((a + b) % 2 == 0) pool.push_back({a, b});
  return pool;
}

std::vector<EDiagram> enumerate_ediagrams(int n, int max_entry, std::uint64_t cap) {
  if (n < 1 || max_entry < 0) throw Error(ErrorCode::InvalidArgument, "bad enumeration bounds");
  std::vector<EDiagram> out;
  detail::for_each_selection(even_cells(max_entry), n, true, cap, [&](const std::vector<Cell>& c) {
    out.push_back(EDiagram::normalize(c));
  });
  return out;
}

}  // namespace hyperoct
