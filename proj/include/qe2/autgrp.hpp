#ifndef QE2_AUTGRP_HPP
#define QE2_AUTGRP_HPP

#include "qe2/catalog.hpp"

#include <optional>
#include <string>

namespace qe2 {
namespace autgrp {

// Automorphisms of the coordinate algebra: the flip, the unit-twists and the
// torus family.
MorphismSpec oq_tau();
MorphismSpec oq_xi(long i);
MorphismSpec oq_eta(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

// Automorphisms of the enveloping algebra.
MorphismSpec uq_sigma();
MorphismSpec uq_xi(long i);
MorphismSpec uq_eta(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

/// Parameters of an automorphism of the double: four scalars and an integer
/// matrix (i j; m n) of determinant one acting on the unit lattice.
struct RhoParams {
  Scalar lambda, mu, gamma, nu;
  long i = 1, j = 0, m = 0, n = 1;

  long det() const { return i * n - j * m; }
};

struct RhoBuild {
  MorphismSpec rho;
  // scalar of the images of b and c, solved from the defining relations
  Scalar b_scalar, c_scalar;
  // true when the solved scalar disagrees with the tabulated closed form
  bool b_corrected = false;
  bool c_corrected = false;
  Scalar b_printed, c_printed;
};

/// Builds rho_{lambda,mu,gamma,nu,i,j,m,n}; rejects det != 1. The q-exponents
/// of the b- and c-images are solved from the relations F b = q^-1 b F + a and
/// E c = c E + a^-1 K and compared against the tabulated expressions.
RhoBuild dq_rho(const RhoParams& p);

/// Recovers the family parameters of an automorphism of the double; nullopt
/// when the map is not of that shape.
std::optional<RhoParams> classify_rho(const MorphismSpec& f);

/// Inverse inside the family: matrix inverse plus scalars solved so that the
/// composite is the identity on generators.
RhoBuild invert_rho(const RhoParams& p);

struct NormalActionReport {
  bool shape_ok = false;    // both images are unit monomials times the element
  long s_phi = 0, t_phi = 0;  // rho(phi) = phi_scalar * K^s a^t * phi
  long s_psi = 0, t_psi = 0;
  Scalar phi_scalar, psi_scalar;
  bool exponent_law = false;  // (s,t) = (m, n-1) and (i-m-1, j-n+1)
};

NormalActionReport action_on_normals(const RhoParams& p);

}  // namespace autgrp
}  // namespace qe2

#endif
