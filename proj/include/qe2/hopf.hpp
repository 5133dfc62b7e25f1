#ifndef QE2_HOPF_HPP
#define QE2_HOPF_HPP

#include "qe2/catalog.hpp"

#include <string>

namespace qe2 {
namespace hopf {

/// Comultiplication as a morphism into the tensor square ("Oq" or "Uq").
const MorphismSpec& coproduct_morphism(const std::string& which);
Element coproduct(const Element& x, const std::string& which);

/// Antipode as an anti-morphism of the algebra itself.
const MorphismSpec& antipode_morphism(const std::string& which);

/// Counit: 1 on the grouplike invertible generator, 0 on the rest.
Scalar counit(const Element& x);

/// Splits each tensor monomial, applies f to one leg, multiplies out.
Element contract_left(const MorphismSpec& f, const Element& t);
Element contract_right(const MorphismSpec& f, const Element& t);
/// (counit x id) and (id x counit) against a tensor-square element.
Element counit_left(const Element& t, const AlgebraPtr& base);
Element counit_right(const Element& t, const AlgebraPtr& base);

/// Renders a tensor-square element as a sum of "left (x) right" pairs.
std::string tensor_str(const Element& t, const AlgebraPtr& base);

struct AxiomReport {
  bool ok = true;
  long checked = 0;
  std::vector<std::pair<std::string, std::string>> failures;
};

/// Coassociativity, counit and both antipode axioms on every generator.
AxiomReport check_hopf_axioms(const std::string& which);

/// Dual pairing on generators and inverses; zero outside the stored entries.
Scalar pairing(const std::string& ugen, const std::string& ogen);

/// Module-algebra action of a U-side generator ("K", "Kinv", "E", "F") on an
/// element of the coordinate algebra.
Element act(const std::string& ugen, const Element& x);

struct CrossCheck {
  Element smash;  // straightening computed from the Hopf action
  Element rule;   // normal form of u*x via the double's own rule table
  bool match = false;
};

/// The smash-product straightening u*x = sum (u_(1).x) u_(2) in the double,
/// compared against the double's rule table.
CrossCheck cross_relation(const std::string& ugen, const std::string& ogen);

struct DeltaPowerResult {
  Element direct;
  Element closed;
  bool equal = false;
};

/// Coproduct of x^m y^n on the quantum plane: direct expansion against the
/// q-binomial double sum.
DeltaPowerResult delta_power(long m, long n, long cap = 8);

}  // namespace hopf
}  // namespace qe2

#endif
