#include "printers.hpp"

#include <functional>

#include <algorithm>
#include <map>
#include <set>

#include "hyperoct/error.hpp"
#include "hyperoct/signed_permutation.hpp"

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

// signed permutation matrix acting on coordinates: e_i -> sign * e_|beta(i)|
std::vector<std::vector<int>> matrix_of(const SignedPermutation& b) {
  const int n = b.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) m[b.sigma(i) - 1][i - 1] = b(i) < 0 ? -1 : 1;
  return m;
}

std::vector<std::vector<int>> matmul(const std::vector<std::vector<int>>& x,
                                     const std::vector<std::vector<int>>& y) {
  const std::size_t n = x.size();
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

}  // namespace

TEST_CASE("parsing windows") {
  const SignedPermutation b = perm("-2 -1 -5 4 3");
  CHECK(b.size() == 5);
  CHECK(b.window() == std::vector<int>{-2, -1, -5, 4, 3});
  CHECK(b(1) == -2);
  CHECK(b(5) == 3);
  CHECK(perm("1 2 3") == SignedPermutation::identity(3));
  CHECK(code_of([] { perm("2 2 1"); }) == ErrorCode::DuplicateAbs);
  CHECK(code_of([] { perm("1 0"); }) == ErrorCode::ZeroEntry);
  CHECK(code_of([] { perm("1 3"); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { perm("1 x"); }) == ErrorCode::Parse);
  CHECK(perm("-2 1").to_string() == "-2 1");
}

TEST_CASE("composition matches signed permutation matrices") {
  const auto all = enumerate_signed_permutations(3);
  for (const auto& a : all)
    for (const auto& b : all)
      CHECK(matrix_of(compose(a, b)) == matmul(matrix_of(a), matrix_of(b)));
}

TEST_CASE("group axioms") {
  const SignedPermutation b = perm("-2 -1 -5 4 3");
  const SignedPermutation id = SignedPermutation::identity(5);
  CHECK(compose(id, b) == b);
  CHECK(compose(b, id) == b);
  CHECK(compose(b, inverse(b)) == id);
  CHECK(compose(inverse(b), b) == id);
  CHECK(inverse(perm("-1 2")) == perm("-1 2"));
  CHECK(inverse(perm("2 1")) == perm("2 1"));
  CHECK(code_of([] { compose(perm("1 2"), perm("1")); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("descent statistics") {
  const StatRecord s = stats(perm("-2 -1 -5 4 3"));
  CHECK(s.des == std::vector<int>{1, 4});
  CHECK(s.maj == 5);
  CHECK(s.neg == 3);
  CHECK(s.fmaj == 2 * s.maj + s.neg);
  CHECK(s.fmaj == 13);
  const StatRecord id = stats(SignedPermutation::identity(4));
  CHECK(id.des.empty());
  CHECK(id.fmaj == 0);
}

TEST_CASE("entry order puts negatives first") {
  CHECK(entry_precedes(-1, -2));
  CHECK(entry_precedes(-5, 1));
  CHECK(entry_precedes(1, 2));
  CHECK_FALSE(entry_precedes(2, -1));
  CHECK_FALSE(entry_precedes(-2, -1));
}

TEST_CASE("localized vectors") {
  CHECK(g_vector(perm("2 1")) == std::vector<int>{1, 3});
  CHECK(g_vector(perm("-1 2")) == std::vector<int>{0, 1});
  CHECK(g_vector(perm("-1 -2")) == std::vector<int>{0, 0});
  CHECK(local_vectors(perm("-1 2")).mu == std::vector<int>{0, 1});
  for (int n = 1; n <= 5; ++n)
    for (const auto& b : enumerate_signed_permutations(n)) {
      const LocalVectors v = local_vectors(b);
      int total = 0;
      for (int gi : v.g) total += gi;
      CHECK(total == fmaj(circ_involution(b)));
      for (int i = 0; i < n; ++i) CHECK(v.g[i] == 2 * v.delta[i] + v.eta[i]);
      for (int i = 0; i < n; ++i) CHECK(v.f[i] == 2 * v.d[i] + v.eps[i]);
      const std::vector<int> g = v.g;
      CHECK(std::is_sorted(g.begin(), g.end()));
    }
}

TEST_CASE("circ involution") {
  CHECK(circ_involution(SignedPermutation::identity(2)) == perm("-1 -2"));
  for (const auto& b : enumerate_signed_permutations(4))
    CHECK(circ_involution(circ_involution(b)) == b);
}

TEST_CASE("cycle types") {
  CHECK(signed_cycle_type(SignedPermutation::identity(3)) ==
        std::pair{Partition{1, 1, 1}, Partition{}});
  CHECK(signed_cycle_type(perm("-1")) == std::pair{Partition{}, Partition{1}});
  CHECK(signed_cycle_type(perm("-2 1")) == std::pair{Partition{}, Partition{2}});
  CHECK(signed_cycle_type(perm("-2 -1")) == std::pair{Partition{2}, Partition{}});
  for (int n = 1; n <= 4; ++n)
    for (const auto& b : enumerate_signed_permutations(n)) {
      const auto [pos, neg] = signed_cycle_type(b);
      CHECK(pos.size() + neg.size() == n);
      for (const auto& c : enumerate_signed_permutations(n)) {
        const SignedPermutation conj = compose(compose(c, b), inverse(c));
        CHECK(signed_cycle_type(conj) == std::pair{pos, neg});
      }
    }
}

TEST_CASE("sign is the determinant") {
  CHECK(sign(SignedPermutation::identity(3)) == 1);
  CHECK(sign(perm("-1")) == -1);
  for (const auto& a : enumerate_signed_permutations(3))
    for (const auto& b : enumerate_signed_permutations(3))
      CHECK(sign(compose(a, b)) == sign(a) * sign(b));
  CHECK(sign(perm("2 1")) == -1);
  CHECK(sign(perm("-2 -1")) == -1);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_signed_permutations(1) == std::vector{perm("1"), perm("-1")});
  CHECK(enumerate_signed_permutations(2).size() == 8);
  const auto b4 = enumerate_signed_permutations(4);
  CHECK(b4.size() == 384);
  CHECK(std::set<std::vector<int>>(
            [&] {
              std::set<std::vector<int>> s;
              for (const auto& b : b4) s.insert(b.window());
              return s;
            }())
            .size() == 384);
  SignedPermutationEnumerator e(3);
  CHECK(e.count() == 48);
  SignedPermutation x;
  int k = 0;
  while (e.next(x)) ++k;
  CHECK(k == 48);
  CHECK(code_of([] { SignedPermutationEnumerator(8); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { SignedPermutationEnumerator(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("fmaj distribution") {
  std::map<int, int> dist;
  for (const auto& b : enumerate_signed_permutations(2)) ++dist[fmaj(b)];
  CHECK(dist == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}});
}

TEST_CASE("descent basis exponents") {
  CHECK(descent_basis_exponents(SignedPermutation::identity(3)) == std::vector<int>{0, 0, 0});
  const auto e = descent_basis_exponents(perm("-2 -1 -5 4 3"));
  int total = 0;
  for (int v : e) total += v;
  CHECK(total == 13);
}

TEST_CASE("partitions") {
  CHECK(Partition{2, 1, 0}.parts() == std::vector<int>{2, 1});
  CHECK(Partition{1, 3}.parts() == std::vector<int>{3, 1});
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0).size() == 1);
  CHECK(z_mu(Partition{1, 1, 1}) == 6);
  CHECK(z_mu(Partition{2, 1}) == 2);
  CHECK(hook_dimension(Partition{2, 1}) == 2);
  CHECK(hook_dimension(Partition{3, 2}) == 5);
  CHECK(Partition::parse("(2,1)") == Partition{2, 1});
  CHECK(Partition{}.to_string() == "()");
  for (int n = 1; n <= 7; ++n) {
    std::int64_t sum = 0;
    for (const Partition& p : partitions_of(n)) sum += factorial(n) / z_mu(p);
    CHECK(sum == factorial(n));
  }
}
