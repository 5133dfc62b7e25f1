#ifndef QE2_PBW_HPP
#define QE2_PBW_HPP

#include "qe2/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qe2 {

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// PBW monomial: one exponent per generator, negative only on invertible ones.
struct Monomial {
  Expvec e;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }  // lex
};

class Element;

/// Straightening rule for an out-of-order product X_j * X_i (j > i):
///   X_j X_i = q^dexp * X_i X_j + corr            (has_swap)
///   X_j X_i = corr                               (!has_swap, e.g. yx = a(h))
struct PairRule {
  bool has_swap = true;
  long dexp = 0;
  std::shared_ptr<const Element> corr;  // null means zero
};

struct GenInfo {
  std::string name;
  bool invertible = false;
};

/// Presentation of an algebra with a PBW basis in a fixed generator order.
/// Immutable once built by the catalog; safe to share across threads.
class AlgebraSpec : public std::enable_shared_from_this<AlgebraSpec> {
 public:
  static std::shared_ptr<AlgebraSpec> create(std::string id, RingPtr ring,
                                             std::vector<GenInfo> gens);

  const std::string& id() const { return id_; }
  const RingPtr& ring() const { return ring_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  const GenInfo& gen(int i) const { return gens_.at(i); }
  int gen_index(std::string_view name) const;  // -1 when absent

  // Rule installation, used while a spec is being assembled.
  void set_rule(int j, int i, long dexp, const Element& corr);
  void set_rule(int j, int i, long dexp);
  void set_rule_collapse(int j, int i, const Element& corr);  // X_j X_i = corr
  void set_inorder(int i, int j, const Element& corr);        // X_i X_j = corr, i < j

  const PairRule& rule(int j, int i) const;
  const Element* inorder(int i, int j) const;  // null when none
  const std::map<std::pair<int, int>, std::shared_ptr<const Element>>& inorder_rules() const {
    return inorder_;
  }

  bool monomial_valid(const Monomial& m) const;
  /// total degree of the non-invertible part (grading used for leading terms)
  long poly_degree(const Monomial& m) const;

 private:
  AlgebraSpec() = default;
  std::string id_;
  RingPtr ring_;
  std::vector<GenInfo> gens_;
  std::vector<PairRule> rules_;  // indexed j*(j-1)/2 + i for j > i
  std::map<std::pair<int, int>, std::shared_ptr<const Element>> inorder_;
};

/// Word: product of generator powers in the order written.
using Word = std::vector<std::pair<int, long>>;

/// Finite formal sum of PBW monomials with ScalarFraction coefficients.
class Element {
 public:
  Element() = default;

  static Element zero(AlgebraPtr a);
  static Element one(AlgebraPtr a);
  static Element scalar(AlgebraPtr a, const Scalar& c);
  static Element generator(AlgebraPtr a, int idx, long exp = 1);
  static Element generator(AlgebraPtr a, std::string_view name, long exp = 1);
  /// Normal form of an arbitrary word with coefficient.
  static Element from_word(AlgebraPtr a, const Word& w, const Scalar& c);

  const AlgebraPtr& alg() const { return alg_; }
  const std::map<Monomial, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int nterms() const { return static_cast<int>(t_.size()); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;  // engine multiply, normalized
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }

  Element scaled(const Scalar& c) const;
  Element pow(long e) const;  // e < 0 requires a unit

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  /// Coefficient of a monomial (zero scalar when absent).
  Scalar coeff(const Monomial& m) const;

  /// Lex-maximal monomial within the top non-invertible degree stratum.
  Monomial leading() const;

  std::string str() const;

  // engine-trusted insertion of an already-normal monomial
  void add_term(const Monomial& m, const Scalar& c);

 private:
  AlgebraPtr alg_;
  std::map<Monomial, Scalar> t_;
};

Word monomial_word(const Monomial& m);

/// x*y - c*y*x in normal form.
Element commutator_q(const Element& x, const Element& y, const Scalar& c);

/// Inverse of a unit (single term, all generators invertible); nullopt otherwise.
std::optional<Element> invert_unit(const Element& x);

/// Generator-image data for an algebra map or anti-map.
class MorphismSpec {
 public:
  MorphismSpec(std::string name, AlgebraPtr src, AlgebraPtr dst,
               std::vector<Element> images, bool anti = false);

  const std::string& name() const { return name_; }
  const AlgebraPtr& source() const { return src_; }
  const AlgebraPtr& target() const { return dst_; }
  bool anti() const { return anti_; }
  const Element& image(int i) const { return images_.at(i); }
  const Element& inverse_image(int i) const;

  Element apply(const Element& x) const;

  struct Report {
    bool ok = true;
    long checked = 0;
    std::vector<std::pair<std::string, std::string>> failures;  // relation, residue
  };
  Report check() const;

 private:
  std::string name_;
  AlgebraPtr src_, dst_;
  bool anti_;
  std::vector<Element> images_;
  std::vector<Element> inv_images_;  // valid where source generator invertible
};

MorphismSpec identity_morphism(const AlgebraPtr& a);
/// Pointwise composition f(g(x)); requires g.target == f.source.
MorphismSpec compose(const MorphismSpec& f, const MorphismSpec& g);
bool same_morphism(const MorphismSpec& f, const MorphismSpec& g);

struct DiamondReport {
  bool ok = true;
  long checked = 0;
  std::vector<std::string> failures;
};

/// Associativity probe: all ordered generator triples plus seeded random
/// monomial triples of bounded degree.
DiamondReport diamond_check(const AlgebraPtr& a, int degree_cap = 3, int nrandom = 0,
                            std::uint64_t seed = 0);

}  // namespace qe2

#endif
