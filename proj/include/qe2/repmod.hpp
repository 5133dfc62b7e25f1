#ifndef QE2_REPMOD_HPP
#define QE2_REPMOD_HPP

#include "qe2/catalog.hpp"
#include "qe2/gwa.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qe2 {
namespace repmod {

/// Basis index: a short integer tuple, one slot per basis coordinate.
using Index = std::vector<long>;
/// Vector: finite combination of basis indices, no zero coefficients stored.
using ModVector = std::map<Index, Scalar>;

struct ModTerm {
  Index idx;
  Scalar c;
};

/// Basis-indexed module: a rule per generator maps a basis index to a finite
/// combination of basis indices. Rules of invertible generators carry an
/// explicit inverse rule.
class ModuleSpec {
 public:
  using Action = std::function<std::vector<ModTerm>(const Index&)>;

  ModuleSpec(std::string name, AlgebraPtr alg, int rank, std::vector<bool> nonneg);

  const std::string& name() const { return name_; }
  const AlgebraPtr& alg() const { return alg_; }
  int rank() const { return rank_; }

  void set_action(int g, Action a) { act_.at(static_cast<size_t>(g)) = std::move(a); }
  void set_inverse_action(int g, Action a) { inv_.at(static_cast<size_t>(g)) = std::move(a); }
  bool has_inverse_action(int g) const { return static_cast<bool>(inv_[static_cast<size_t>(g)]); }

  ModVector basis_vector(const Index& idx) const;
  ModVector apply_gen(int g, long exp, const ModVector& v) const;
  ModVector act_element(const Element& e, const ModVector& v) const;

  /// All basis indices with coordinates bounded by `bound` in absolute value
  /// (nonnegative coordinates range over [0, bound]).
  std::vector<Index> window(long bound) const;

 private:
  std::string name_;
  AlgebraPtr alg_;
  int rank_;
  std::vector<bool> nonneg_;
  std::vector<Action> act_, inv_;
};

void add_scaled(ModVector& dst, const ModVector& src, const Scalar& c);

struct AuditFailure {
  std::string rule;
  Index index;
  std::string residue;
  std::string str() const;
};

struct AuditReport {
  bool ok = true;
  long checked = 0;
  std::vector<AuditFailure> failures;
};

/// (L - R) v = 0 for every defining rule of the algebra and every basis
/// vector in the window; also checks g g^-1 = id for invertible generators.
AuditReport relation_audit(const ModuleSpec& m, long window);

/// {module, rule_id, index, residue} rows for the failing checks.
std::string audit_json(const ModuleSpec& m, const AuditReport& rep);

struct ConnectivityReport {
  bool strongly_connected = false;
  long vertices = 0;
  long edges = 0;
};

/// Necessary signal of simplicity only: strong connectivity of the
/// generator-action graph restricted to the window.
ConnectivityReport connectivity_probe(const ModuleSpec& m, long window);

// -- QGWA modules ------------------------------------------------------------

/// Torsion simple modules over a built QGWA presentation.
/// Kinds: "Wgamma" (basis Z, h-eigenvalue Q^-k gamma), "W" (basis N, kills x),
/// "Wprime" (basis N, kills y).
ModuleSpec qgwa_torsion_module(const std::string& kind, const gwa::QgwaData& d,
                               const AlgebraPtr& spec);

/// Torsionfree simple quotients by (x - gamma) resp. (y - gamma): both reduce
/// to the h-power lattice (basis Z) with x resp. y acting diagonally.
ModuleSpec qgwa_torsionfree_module(const std::string& kind, const gwa::QgwaData& d,
                                   const AlgebraPtr& spec);

/// Deliberately broken probe: the lowering coefficients are identically zero.
ModuleSpec qgwa_zero_action_module(const gwa::QgwaData& d, const AlgebraPtr& spec);

// -- centralizer modules -----------------------------------------------------

/// The four simple faithful modules over the centralizer at K = chi, realized
/// over the presentation with K acting by the formal parameter chi.
/// Kinds: "H" (kills x1, y2), "L" (kills y1, x2), "M" (kills x1, x2),
/// "N" (kills y1, y2). Basis N^2.
ModuleSpec cchi_module(const std::string& kind);

/// Module twisted by a diagonal endomorphism tau of the same algebra:
/// r . m = tau(r) m.
ModuleSpec twist(const ModuleSpec& m, const MorphismSpec& tau);

/// Transport along a diagonal isomorphism f: A -> B of a B-module to an
/// A-module (g . m = f(g) m).
ModuleSpec transport(const ModuleSpec& m, const MorphismSpec& f);

/// Induction from the centralizer of K to the double: strata indexed by
/// powers of a; index layout [stratum, inner...].
ModuleSpec induce_from_k_centralizer(const ModuleSpec& m);

/// Induction from the centralizer of a to the double: strata indexed by
/// powers of K.
ModuleSpec induce_from_a_centralizer(const ModuleSpec& m);

}  // namespace repmod
}  // namespace qe2

#endif
