#ifndef QE2_GWA_HPP
#define QE2_GWA_HPP

#include "qe2/catalog.hpp"

#include <optional>
#include <string>

namespace qe2 {
namespace gwa {

/// Data of a generalized Weyl algebra in the extended sense (two endomorphisms):
/// base ring R, endomorphisms sigma/tau of R, and the element a of R with
///   tau(sigma(a)) = a,  a r = tau(sigma(r)) a,  sigma(a) r = sigma(tau(r)) sigma(a).
struct GgwaData {
  std::string name;
  AlgebraPtr base;
  MorphismSpec sigma;
  MorphismSpec tau;
  Element a_elem;
  std::string xname = "x";
  std::string yname = "y";
};

struct ConditionReport {
  bool ok = true;
  long checked = 0;
  std::vector<std::pair<std::string, std::string>> failures;
};

/// Verifies the three clauses of the GGWA condition inside the base ring.
ConditionReport ggwa_check(const GgwaData& d);

/// Inverse of a morphism whose generator images are scalar multiples of
/// single generators; nullopt otherwise.
std::optional<MorphismSpec> diagonal_inverse(const MorphismSpec& f);

struct ClassicalComparison {
  bool tau_is_sigma_inverse = false;
  bool a_central = false;  // meaningful when tau == sigma^{-1}
  bool ggwa_ok = false;
  bool agree = false;  // the two criteria coincide on this data
};

/// When tau = sigma^{-1} the GGWA condition degenerates to centrality of a;
/// compares the two code paths.
ClassicalComparison classical_compare(const GgwaData& d);

/// Builds the presentation: generators base + {x, y}, rules
/// x r = sigma(r) x, y r = tau(r) y, y x = a, x y = sigma(a).
AlgebraPtr ggwa_build(const GgwaData& d);

struct CentralReport {
  bool ok = true;
  long checked = 0;
  std::vector<std::pair<std::string, std::string>> failures;
};

CentralReport central_element_check(const AlgebraPtr& spec, const Element& z);

/// The four prime-factor presentations of the double (1..4) with their data.
/// `value` overrides the formal alpha/beta parameter of cases 3 and 4
/// (e.g. zero, under which the generators of case 3 become units).
GgwaData dq_factor_data(int which, const std::optional<Scalar>& value = std::nullopt);
/// The four prime-factor presentations of the centralizer at K = chi (1..4).
GgwaData cchi_factor_data(int which, const std::optional<Scalar>& value = std::nullopt);

/// Central elements of the built factor presentations.
Element dq_factor_central(int which, const AlgebraPtr& spec);    // 1: Theta, 2: Omega
Element cchi_factor_central(int which, const AlgebraPtr& spec);  // 1: theta, 2: omega

/// Named factor presentations of the centralizer at K = chi.
/// Tags: u-quotient, v-quotient, u-theta (formal alpha), u-theta0 (torus),
/// v-omega (formal beta).
AlgebraPtr cchi_factor(const std::string& tag);

/// Quantum GWA over Laurent polynomials in h:
///   x h = Q h x, y h = Q^-1 h y, y x = a(h), x y = a(Q h),  Q = q^qexp,
/// where a(h) = mu h^hexp, or mu h^hexp (h - zeta) when has_root.
struct QgwaData {
  Scalar mu;
  long hexp = 0;
  bool has_root = false;
  Scalar zeta;
  long qexp = 1;
};

/// Builds the 3-generator presentation (h invertible, x, y); when a(h) is a
/// unit the result is the 2-generator quantum torus instead.
AlgebraPtr qgwa_build(const QgwaData& d);

/// a(h) as an element of a built presentation (substituting v for h).
Element qgwa_a_elem(const QgwaData& d, const AlgebraPtr& spec, const Element& h);
/// a evaluated at a scalar point.
Scalar qgwa_a_at(const QgwaData& d, const Scalar& value);

/// Generator list and straightening rules as a JSON document.
std::string presentation_json(const AlgebraPtr& spec);

}  // namespace gwa
}  // namespace qe2

#endif
