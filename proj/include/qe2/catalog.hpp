#ifndef QE2_CATALOG_HPP
#define QE2_CATALOG_HPP

#include "qe2/pbw.hpp"
#include "qe2/zlattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace qe2 {

/// n-fold tensor power of a presentation: one generator block per copy,
/// cross-copy generators commute exactly. Generator i of copy c sits at
/// index c * ngens + i.
std::shared_ptr<AlgebraSpec> tensor_power(const AlgebraPtr& a, int n);

/// Injects an element into copy `copy` of a tensor power of its algebra.
Element embed_in_copy(const Element& x, const AlgebraPtr& tensor, int copy);

struct IdentityEntry {
  enum class Kind { Expr, CrossRelation };
  std::string id;
  std::string algebra;
  Kind kind = Kind::Expr;
  std::string lhs;  // expression, or the U-generator name for cross relations
  std::string rhs;  // expression, or the O-generator name for cross relations
  std::string anchor;
};

/// Built-in presentations, distinguished elements, embeddings, exponent
/// matrices and the identity registry. Built once; immutable afterwards.
class Catalog {
 public:
  static const Catalog& get();

  AlgebraPtr algebra(const std::string& id) const;
  std::vector<std::string> algebra_ids() const;

  const Element& named(const std::string& name, const std::string& algebra_id) const;
  const std::map<std::string, Element>& named_in(const std::string& algebra_id) const;

  const MorphismSpec& morphism(const std::string& name) const;
  const MorphismSpec& embedding(const std::string& sub, const std::string& super) const;

  const IntMatrix& builtin_matrix(const std::string& name) const;
  std::vector<std::string> matrix_ids() const;

  const std::vector<IdentityEntry>& identity_suite() const { return suite_; }

  const RingPtr& ring() const { return ring_; }

 private:
  Catalog();
  void build_algebras();
  void build_named();
  void build_morphisms();
  void build_matrices();
  void build_suite();

  RingPtr ring_;
  std::map<std::string, AlgebraPtr> algebras_;
  std::map<std::string, std::map<std::string, Element>> named_;
  std::map<std::string, MorphismSpec> morphisms_;
  std::map<std::string, IntMatrix> matrices_;
  std::vector<IdentityEntry> suite_;
};

}  // namespace qe2

#endif
