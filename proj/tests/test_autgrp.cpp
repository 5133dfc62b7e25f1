#include "qe2/autgrp.hpp"

#include "catch2/catch_amalgamated.hpp"

#include <random>

using namespace qe2;
using namespace qe2::autgrp;

namespace {

const RingPtr& R() { return Catalog::get().ring(); }

Scalar rnd_scalar(std::mt19937_64& rng) {
  long v = static_cast<long>(rng() % 9) - 4;
  if (v == 0) v = 3;
  return Scalar::integer(R(), v) * Scalar::qpow(R(), static_cast<long>(rng() % 5) - 2);
}

// all matrices in SL2(Z) with entries in [-3, 3]
std::vector<std::array<long, 4>> sl2_window() {
  std::vector<std::array<long, 4>> out;
  for (long i = -3; i <= 3; ++i)
    for (long j = -3; j <= 3; ++j)
      for (long m = -3; m <= 3; ++m)
        for (long n = -3; n <= 3; ++n)
          if (i * n - j * m == 1) out.push_back({i, j, m, n});
  return out;
}

RhoParams rnd_rho(std::mt19937_64& rng, const std::vector<std::array<long, 4>>& mats) {
  RhoParams p;
  auto m = mats[rng() % mats.size()];
  p.i = m[0];
  p.j = m[1];
  p.m = m[2];
  p.n = m[3];
  p.lambda = rnd_scalar(rng);
  p.mu = rnd_scalar(rng);
  p.gamma = rnd_scalar(rng);
  p.nu = rnd_scalar(rng);
  return p;
}

}  // namespace

TEST_CASE("coordinate-algebra automorphism families verify") {
  CHECK(oq_tau().check().ok);
  CHECK(compose(oq_tau(), oq_tau()).check().ok);
  CHECK(same_morphism(compose(oq_tau(), oq_tau()), identity_morphism(Catalog::get().algebra("Oq"))));
  std::mt19937_64 rng(101);
  for (int t = 0; t < 10; ++t) {
    long i = static_cast<long>(rng() % 7) - 3;
    CHECK(oq_xi(i).check().ok);
    CHECK(oq_eta(rnd_scalar(rng), rnd_scalar(rng), rnd_scalar(rng)).check().ok);
  }
  // xi_i . xi_j = xi_{i+j}
  CHECK(same_morphism(compose(oq_xi(2), oq_xi(-5)), oq_xi(-3)));
  // eta composes componentwise
  Scalar a1 = Scalar::integer(R(), 2), b1 = Scalar::qpow(R(), 1), c1 = Scalar::integer(R(), -1);
  Scalar a2 = Scalar::integer(R(), 3), b2 = Scalar::integer(R(), 5), c2 = Scalar::qpow(R(), -2);
  CHECK(same_morphism(compose(oq_eta(a1, b1, c1), oq_eta(a2, b2, c2)),
                      oq_eta(a1 * a2, b1 * b2, c1 * c2)));
  CHECK_THROWS_AS(oq_eta(Scalar::integer(R(), 0), b1, c1), Error);
}

TEST_CASE("enveloping-algebra automorphism families verify") {
  CHECK(uq_sigma().check().ok);
  CHECK(same_morphism(compose(uq_sigma(), uq_sigma()),
                      identity_morphism(Catalog::get().algebra("Uq"))));
  std::mt19937_64 rng(103);
  for (int t = 0; t < 10; ++t) {
    long i = static_cast<long>(rng() % 7) - 3;
    CHECK(uq_xi(i).check().ok);
    CHECK(uq_eta(rnd_scalar(rng), rnd_scalar(rng), rnd_scalar(rng)).check().ok);
  }
  CHECK(same_morphism(compose(uq_xi(1), uq_xi(2)), uq_xi(3)));
  // sigma is its own inverse inside the family
  CHECK(same_morphism(compose(uq_sigma(), uq_sigma()),
                      identity_morphism(Catalog::get().algebra("Uq"))));
}

TEST_CASE("rho: identity parameters give the identity map") {
  RhoParams p;
  Scalar one = Scalar::integer(R(), 1);
  p.lambda = p.mu = p.gamma = p.nu = one;
  RhoBuild rb = dq_rho(p);
  CHECK(same_morphism(rb.rho, identity_morphism(Catalog::get().algebra("Dq"))));
  CHECK(!rb.b_corrected);
  CHECK(!rb.c_corrected);
}

TEST_CASE("rho: determinant condition is enforced") {
  RhoParams p;
  Scalar one = Scalar::integer(R(), 1);
  p.lambda = p.mu = p.gamma = p.nu = one;
  p.i = 1;
  p.j = 1;
  p.m = 1;
  p.n = 1;
  CHECK_THROWS_AS(dq_rho(p), Error);
}

TEST_CASE("rho family members verify; solved scalars match the closed forms") {
  std::mt19937_64 rng(107);
  auto mats = sl2_window();
  for (int t = 0; t < 20; ++t) {
    RhoParams p = rnd_rho(rng, mats);
    RhoBuild rb = dq_rho(p);
    INFO("matrix (" << p.i << " " << p.j << "; " << p.m << " " << p.n << ")");
    CHECK(rb.rho.check().ok);
    CHECK(!rb.b_corrected);
    CHECK(!rb.c_corrected);
  }
  // the rotation matrix case from the family table
  RhoParams rot;
  Scalar one = Scalar::integer(R(), 1);
  rot.lambda = rot.mu = rot.gamma = rot.nu = one;
  rot.i = 0;
  rot.j = 1;
  rot.m = -1;
  rot.n = 0;
  CHECK(dq_rho(rot).rho.check().ok);
}

TEST_CASE("rho composition classifies with the product matrix") {
  std::mt19937_64 rng(109);
  auto mats = sl2_window();
  for (int t = 0; t < 20; ++t) {
    RhoParams p = rnd_rho(rng, mats);
    RhoParams r = rnd_rho(rng, mats);
    MorphismSpec comp = compose(dq_rho(p).rho, dq_rho(r).rho);
    auto cls = classify_rho(comp);
    REQUIRE(cls.has_value());
    // matrix of the composite is the product of the matrices
    CHECK(cls->i == p.i * r.i + p.m * r.j);
    CHECK(cls->j == p.j * r.i + p.n * r.j);
    CHECK(cls->m == p.i * r.m + p.m * r.n);
    CHECK(cls->n == p.j * r.m + p.n * r.n);
  }
  // composing with the identity changes nothing
  RhoParams id;
  Scalar one = Scalar::integer(R(), 1);
  id.lambda = id.mu = id.gamma = id.nu = one;
  std::mt19937_64 rng2(211);
  RhoParams p = rnd_rho(rng2, mats);
  CHECK(same_morphism(compose(dq_rho(p).rho, dq_rho(id).rho), dq_rho(p).rho));
}

TEST_CASE("classification rejects maps outside the family") {
  const Catalog& cat = Catalog::get();
  CHECK(!classify_rho(cat.morphism("invol")).has_value());
}

TEST_CASE("rho inversion") {
  std::mt19937_64 rng(113);
  auto mats = sl2_window();
  for (int t = 0; t < 10; ++t) {
    RhoParams p = rnd_rho(rng, mats);
    RhoBuild inv = invert_rho(p);
    CHECK(inv.rho.check().ok);
    MorphismSpec comp = compose(dq_rho(p).rho, inv.rho);
    CHECK(same_morphism(comp, identity_morphism(Catalog::get().algebra("Dq"))));
    // the inverse matrix
    auto cls = classify_rho(inv.rho);
    REQUIRE(cls.has_value());
    CHECK(cls->i == p.n);
    CHECK(cls->j == -p.j);
    CHECK(cls->m == -p.m);
    CHECK(cls->n == p.i);
  }
}

TEST_CASE("action on the normal elements follows the exponent law") {
  std::mt19937_64 rng(127);
  auto mats = sl2_window();
  // identity parameters: rho(phi) = phi
  RhoParams id;
  Scalar one = Scalar::integer(R(), 1);
  id.lambda = id.mu = id.gamma = id.nu = one;
  auto rep0 = action_on_normals(id);
  CHECK(rep0.shape_ok);
  CHECK(rep0.s_phi == 0);
  CHECK(rep0.t_phi == 0);
  CHECK(rep0.phi_scalar == one);
  // the rotation matrix: (s, t) = (m, n-1) = (-1, -1)
  RhoParams rot = id;
  rot.i = 0;
  rot.j = 1;
  rot.m = -1;
  rot.n = 0;
  auto rep1 = action_on_normals(rot);
  CHECK(rep1.shape_ok);
  CHECK(rep1.s_phi == -1);
  CHECK(rep1.t_phi == -1);
  CHECK(rep1.exponent_law);
  for (int t = 0; t < 10; ++t) {
    RhoParams p = rnd_rho(rng, mats);
    auto rep = action_on_normals(p);
    CHECK(rep.shape_ok);
    CHECK(rep.exponent_law);
  }
}

TEST_CASE("the centralizer isomorphism and its inverse verify") {
  const Catalog& cat = Catalog::get();
  const MorphismSpec& phi = cat.morphism("Phi");
  const MorphismSpec& phiinv = cat.morphism("PhiInv");
  CHECK(phi.check().ok);
  CHECK(phiinv.check().ok);
  CHECK(same_morphism(compose(phi, phiinv), identity_morphism(cat.algebra("C"))));
  CHECK(same_morphism(compose(phiinv, phi), identity_morphism(cat.algebra("A"))));
  CHECK(cat.morphism("tau_a").check().ok);
  CHECK(cat.morphism("tau_K").check().ok);
}
