#include "hyperoct/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "hyperoct/error.hpp"

namespace hyperoct {

namespace {

std::shared_mutex cache_mutex;
std::map<std::pair<Partition, Partition>, std::int64_t> cache;

// remove a rim hook of length k from every admissible position, via beta numbers
std::int64_t compute(const Partition& lambda, const Partition& mu) {
  if (lambda.size() == 0) return 1;
  const int k = mu.largest();
  const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  const int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + len - 1 - i;
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int moved = beta[i] - k;
    if (moved < 0 || std::find(beta.begin(), beta.end(), moved) != beta.end()) continue;
    int crossed = 0;
    for (int x : beta) crossed += (x > moved && x < beta[i]);
    std::vector<int> nb(beta);
    nb[i] = moved;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts(len);
    for (int j = 0; j < len; ++j) parts[j] = nb[j] - (len - 1 - j);
    const std::int64_t sub = mn_character(Partition(parts), rest);
    total += crossed % 2 ? -sub : sub;
  }
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::SizeMismatch, "character of " + lambda.to_string() + " at class " +
                                             mu.to_string());
  const auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const std::int64_t value = compute(lambda, mu);
  std::unique_lock lock(cache_mutex);
  cache.emplace(key, value);
  return value;
}

}  // namespace hyperoct
