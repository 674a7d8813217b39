#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperoct/cell.hpp"
#include "hyperoct/error.hpp"

namespace hyperoct::detail {

inline std::uint64_t choose_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// n-element sub(multi)sets of `pool`, in lexicographic order of index sequences
template <class Emit>
void for_each_selection(const std::vector<Cell>& pool, int n, bool repeat, std::uint64_t cap,
                        Emit emit) {
  const std::uint64_t m = pool.size();
  const std::uint64_t total =
      repeat ? choose_capped(m + n - 1, n, cap) : choose_capped(m, n, cap);
  if (total > cap)
    throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " diagrams");
  if (n < 0 || (n > 0 && m == 0) || total == 0) return;
  std::vector<std::size_t> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = repeat ? 0 : i;
  std::vector<Cell> cur(n);
  while (true) {
    for (int i = 0; i < n; ++i) cur[i] = pool[idx[i]];
    emit(cur);
    int i = n - 1;
    while (i >= 0 && idx[i] == (repeat ? m - 1 : m - n + i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = repeat ? idx[i] : idx[j - 1] + 1;
  }
}

}  // namespace hyperoct::detail
