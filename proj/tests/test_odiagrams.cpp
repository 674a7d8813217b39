#include "printers.hpp"

#include <functional>

#include <algorithm>
#include <random>
#include <set>

#include "hyperoct/ediagram.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/odiagram.hpp"

using namespace hyperoct;

namespace {

SignedPermutation perm(const char* s) { return SignedPermutation::parse(s); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

ODiagram random_odiagram(std::mt19937_64& rng, int n, int max_entry) {
  std::vector<Cell> pool = odd_cells(max_entry);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(n);
  return ODiagram::normalize(pool);
}

}  // namespace

TEST_CASE("normalization") {
  CHECK(ODiagram::normalize({{3, 0}, {1, 0}}).cells() == std::vector<Cell>{{1, 0}, {3, 0}});
  CHECK(code_of([] { ODiagram::normalize({{1, 1}}); }) == ErrorCode::EvenParityCell);
  CHECK(code_of([] { ODiagram::normalize({{1, 0}, {1, 0}}); }) == ErrorCode::DuplicateCell);
  CHECK(code_of([] { ODiagram::normalize({{1, 0}}, 2); }) == ErrorCode::WrongCount);
}

TEST_CASE("classifying permutation by colabels") {
  const ODiagram o =
      ODiagram::from_rows({0, 0, 1, 2, 2, 4, 6, 7, 7}, {1, 3, 6, 9, 11, 5, 5, 8, 12});
  CHECK(colabel_classifying_perm(o) == perm("-1 -2 5 -7 -8 -4 -3 6 9"));
  CHECK(colabel_classifying_perm(ODiagram::from_rows({1, 3}, {0, 0})) == perm("2 1"));
  CHECK(colabel_classifying_perm(ODiagram::from_rows({0}, {1})) == perm("-1"));
}

TEST_CASE("compact o-diagrams") {
  CHECK(compact_o_of_perm(perm("2 1")) == ODiagram::from_rows({1, 3}, {0, 0}));
  CHECK(compact_o_of_perm(perm("-1 2")) == ODiagram::from_rows({0, 1}, {1, 2}));
  CHECK(compact_o_of_perm(perm("1 2")) == ODiagram::from_rows({1, 1}, {0, 2}));
  CHECK(compact_o_of_perm(perm("1 -2")) == ODiagram::from_rows({1, 2}, {0, 1}));
  CHECK(compact_o_of_perm(perm("-1 -2")) == ODiagram::from_rows({0, 0}, {1, 3}));
  CHECK(compact_o_of_perm(perm("-2 1")) == ODiagram::from_rows({0, 1}, {1, 0}));
  CHECK(compact_o_of_perm(perm("2 -1")) == ODiagram::from_rows({1, 2}, {2, 1}));
  CHECK(compact_o_of_perm(perm("-2 -1")) == ODiagram::from_rows({0, 2}, {1, 1}));
  for (int n = 1; n <= 4; ++n) {
    std::set<ODiagram> seen;
    for (const auto& b : enumerate_signed_permutations(n)) {
      const ODiagram o = compact_o_of_perm(b);
      CHECK(colabel_classifying_perm(o) == b);
      CHECK(is_compact(o));
      seen.insert(o);
    }
    CHECK(seen.size() == enumerate_signed_permutations(n).size());
  }
}

TEST_CASE("psi carries compact e-diagrams to compact o-diagrams") {
  const EDiagram compact =
      EDiagram::from_rows({0, 0, 1, 2, 2, 4, 6, 7, 7}, {0, 0, 3, 4, 4, 2, 0, 3, 5});
  CHECK(psi(compact).bottom() == std::vector<int>{1, 3, 6, 9, 11, 5, 5, 8, 12});
  CHECK(psi(compact_of_perm(perm("2 1"))) == ODiagram::from_rows({1, 3}, {0, 0}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& b : enumerate_signed_permutations(n))
      CHECK(psi(compact_of_perm(b)) == compact_o_of_perm(b));
  CHECK(code_of([] { psi(EDiagram::from_rows({0, 2}, {0, 2})); }) == ErrorCode::NotCompact);
}

TEST_CASE("compactification") {
  const ODiagram d = ODiagram::from_rows({1, 3}, {0, 4});
  CHECK(compactify_o(d) == compact_o_of_perm(colabel_classifying_perm(d)));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const ODiagram o = random_odiagram(rng, 3, 9);
    const ODiagram c = compactify_o(o);
    CHECK(entrywise_leq(c.cells(), o.cells()));
    CHECK(colabel_classifying_perm(c) == colabel_classifying_perm(o));
  }
}

TEST_CASE("phi_o") {
  const ODiagram c = compact_o_of_perm(perm("2 -1"));
  const PhiOResult r = phi_o(c);
  CHECK(r.compact == c);
  CHECK(r.lam.empty());
  CHECK(r.mu.empty());
  for (const ODiagram& o : enumerate_odiagrams(2, 5)) {
    const PhiOResult p = phi_o(o);
    CHECK(phi_o_inverse(p) == o);
    const auto [wa, wb] = o.weight();
    const auto [ca, cb] = p.compact.weight();
    CHECK(wa == ca + 2 * p.lam.size());
    CHECK(wb == cb + 2 * p.mu.size());
  }
  CHECK(code_of([] { phi_o_inverse({ODiagram::from_rows({1, 3}, {2, 4}), {}, {}}); }) ==
        ErrorCode::NotCompact);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_odiagrams(1, 1).size() == 2);
  CHECK(enumerate_odiagrams(2, 1).size() == 1);
  CHECK(odd_cells(1).size() == 2);
}
