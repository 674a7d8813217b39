#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperoct/cell.hpp"
#include "hyperoct/partition.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

inline constexpr std::uint64_t kDefaultDiagramCap = 5'000'000;

// n cells with a+b even, kept sorted in reading order (repeated cells allowed)
class EDiagram {
 public:
  EDiagram() = default;

  static EDiagram normalize(std::vector<Cell> cells, int n);
  static EDiagram normalize(std::vector<Cell> cells);
  static EDiagram from_rows(const std::vector<int>& top, const std::vector<int>& bottom);

  int size() const noexcept { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const Cell& operator[](int i) const { return cells_[i]; }
  std::vector<std::pair<Cell, int>> multiplicities() const;
  std::vector<int> top() const;
  std::vector<int> bottom() const;
  // (|a|, |b|)
  std::pair<int, int> weight() const;
  // D*: coordinates swapped, re-sorted
  EDiagram transposed() const;

  std::string to_text() const { return cells_to_text(cells_); }

  friend bool operator==(const EDiagram&, const EDiagram&) = default;
  friend auto operator<=>(const EDiagram& x, const EDiagram& y) { return x.cells_ <=> y.cells_; }

 private:
  std::vector<Cell> cells_;
};

struct DesSch {
  std::vector<int> des;
  std::vector<int> sch;
};

DesSch des_sch(const EDiagram& d);
// g_i(D) = 2 delta_i(D) + s_i(D)
std::vector<int> g_vector(const EDiagram& d);
SignedPermutation classifying_perm(const EDiagram& d);
EDiagram compact_of_perm(const SignedPermutation& beta);
bool is_compact(const EDiagram& d);

enum class Direction { Left, Down };

struct Blocked {
  std::string reason;
};

using MoveResult = std::variant<EDiagram, Blocked>;

// cells c' of D strictly between (a-2,b) and c=(a,b) in reading order
std::vector<Cell> vert_constraint(const Cell& c, const EDiagram& d);
// Vert(c*, D*)*
std::vector<Cell> horiz_constraint(const Cell& c, const EDiagram& d);

MoveResult try_move(const EDiagram& d, int index, Direction dir);

struct Move {
  int index;
  Direction dir;
};
// one entry per distinct cell and direction that can move
std::vector<Move> allowed_moves(const EDiagram& d);

// (g(D), g~(D))
EDiagram compactify(const EDiagram& d);
// elementary moves until none applies; the first allowed move, or a random one when rng is given
EDiagram compactify_by_moves(const EDiagram& d, std::mt19937_64* rng = nullptr);

// moves the cell at start_index (first copy) and every later cell in the reading order of D
// (Left) or of D* (Down) by 2
EDiagram big_move(const EDiagram& d, int start_index, Direction dir);

struct PhiResult {
  EDiagram compact;
  Partition lam;
  Partition mu;
  friend bool operator==(const PhiResult&, const PhiResult&) = default;
  friend auto operator<=>(const PhiResult&, const PhiResult&) = default;
};

PhiResult phi(const EDiagram& d);
EDiagram phi_inverse(const PhiResult& r);

// multiset {#{values > i} : i >= 0}, zero counts dropped, sorted decreasing
std::vector<int> marginal(const std::vector<int>& values);
// multiset difference, halved by pairing; throws PairingViolation
Partition paired_difference(const std::vector<int>& larger, const std::vector<int>& smaller);

std::vector<EDiagram> enumerate_ediagrams(int n, int max_entry,
                                          std::uint64_t cap = kDefaultDiagramCap);
std::vector<Cell> even_cells(int max_entry);

}  // namespace hyperoct
