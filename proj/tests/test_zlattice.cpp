#include "qe2/zlattice.hpp"

#include "qe2/catalog.hpp"

#include "catch2/catch_amalgamated.hpp"

#include <random>

using namespace qe2;

namespace {

void check_snf(const IntMatrix& m) {
  SnfResult r = snf(m);
  CHECK(r.u * m * r.v == r.s);
  Int du = r.u.det(), dv = r.v.det();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  // diagonal with divisibility chain
  for (int i = 0; i < r.s.rows(); ++i)
    for (int j = 0; j < r.s.cols(); ++j)
      if (i != j) CHECK(r.s.at(i, j) == 0);
  for (int t = 0; t + 1 < std::min(r.s.rows(), r.s.cols()); ++t) {
    if (r.s.at(t + 1, t + 1) == 0) continue;
    REQUIRE(r.s.at(t, t) != 0);
    CHECK(r.s.at(t + 1, t + 1) % r.s.at(t, t) == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
  SnfResult r = snf(m);
  check_snf(m);
  CHECK(r.s.at(0, 0) == 1);
  CHECK(r.s.at(1, 1) == 6);
  CHECK(r.rank == 2);

  IntMatrix z(3, 2);
  SnfResult rz = snf(z);
  CHECK(rz.rank == 0);
  CHECK(rz.u == IntMatrix::identity(3));
  CHECK(rz.v == IntMatrix::identity(2));
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 60; ++t) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rng() % 15) - 7;
    check_snf(m);
    // kernel completeness: rank + #basis = cols, and every vector annihilates
    SnfResult r = snf(m);
    auto basis = kernel(m);
    CHECK(r.rank + static_cast<int>(basis.size()) == cols);
    for (const auto& v : basis)
      for (int i = 0; i < rows; ++i) {
        Int s = 0;
        for (int j = 0; j < cols; ++j) s += m.at(i, j) * v[static_cast<size_t>(j)];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("kernels of the catalog exponent matrices") {
  const Catalog& cat = Catalog::get();
  // full 6x6 matrix has trivial kernel, so the localized double has trivial centre
  CHECK(kernel(cat.builtin_matrix("D")).empty());
  CHECK(snf(cat.builtin_matrix("D")).rank == 6);
  // zero 2x2 has the full plane as kernel
  CHECK(kernel(IntMatrix(2, 2)).size() == 2);
}

TEST_CASE("torus centres") {
  const Catalog& cat = Catalog::get();
  CHECK(torus_center(cat.builtin_matrix("D")).trivial());
  CHECK(torus_center(cat.builtin_matrix("D56")).trivial());
  CHECK(torus_center(cat.builtin_matrix("UqE")).trivial());
  // the localized K-centralizer: centre is exactly the K axis
  TorusCenter tc = torus_center(cat.builtin_matrix("CX"));
  REQUIRE(tc.kernel_rank == 1);
  std::vector<Int> expect = {1, 0, 0, 0, 0};
  std::vector<Int> got = tc.basis[0];
  if (got[0] == -1)
    for (auto& v : got) v = -v;
  CHECK(got == expect);
  // the inner 4x4 block alone is nondegenerate
  CHECK(torus_center(cat.builtin_matrix("CX4")).trivial());
  // 1x1 zero matrix: the whole torus is central
  TorusCenter one = torus_center(IntMatrix(1, 1));
  CHECK(one.kernel_rank == 1);
  // non-antisymmetric input is rejected
  CHECK_THROWS_AS(torus_center(IntMatrix::from_rows({{0, 1}, {1, 0}})), Error);
}
