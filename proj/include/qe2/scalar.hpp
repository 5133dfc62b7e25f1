#ifndef QE2_SCALAR_HPP
#define QE2_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qe2 {

using Int = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered list of formal parameter names. Index 0 is always "q"; every
/// parameter is treated as a nonzero transcendental, so all of them are
/// invertible in the coefficient field.
class ParamRing {
 public:
  explicit ParamRing(std::vector<std::string> names);

  static std::shared_ptr<const ParamRing> make(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int index(std::string_view n) const;  // -1 when absent
  bool same(const ParamRing& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const ParamRing>;

/// Exponent vector of a monomial in the parameters; entries are >= 0.
using Expvec = std::vector<int>;

/// Multivariate polynomial in the ring parameters with cpp_int coefficients.
/// Terms are kept in lexicographic order on exponent vectors.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr r) : ring_(std::move(r)) {}

  static Poly constant(RingPtr r, Int c);
  static Poly variable(RingPtr r, int idx, int exp = 1);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  int nterms() const { return static_cast<int>(t_.size()); }
  const std::map<Expvec, Int>& terms() const { return t_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return t_ == o.t_; }

  void add_term(const Expvec& e, const Int& c);

  /// gcd of all coefficients (positive), 0 for the zero polynomial.
  Int content() const;
  /// componentwise minimum of all exponent vectors (zero vector when empty).
  Expvec min_exponents() const;
  void divide_coeffs(const Int& g);
  void shift_down(const Expvec& e);  // divide by the monomial x^e

  /// True when only the variable `idx` occurs.
  bool univariate_in(int idx) const;
  int degree_in(int idx) const;

  /// Exact multivariate division; nullopt when the division is not exact.
  std::optional<Poly> divide_exact(const Poly& d) const;

  /// Sign of the lexicographically largest term (0 for zero polynomial).
  int leading_sign() const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::map<Expvec, Int> t_;
};

/// gcd of two univariate (in variable idx) polynomials, primitive and with
/// positive leading coefficient.
Poly gcd_univariate(const Poly& a, const Poly& b, int idx);

/// Element of the field of rational functions in the ring parameters.
/// Invariants: den != 0; num == 0 implies den == 1; integer content and
/// common monomial factors removed; denominator has positive leading sign;
/// fully reduced when numerator and denominator involve q alone.
class Scalar {
 public:
  Scalar() = default;

  static Scalar integer(RingPtr r, long v) { return integer(std::move(r), Int(v)); }
  static Scalar integer(RingPtr r, const Int& v);
  static Scalar param(RingPtr r, int idx, int exp = 1);
  static Scalar param(RingPtr r, std::string_view name, int exp = 1);
  static Scalar qpow(RingPtr r, long e) { return param(std::move(r), 0, static_cast<int>(e)); }
  static Scalar fraction(Poly n, Poly d);

  const RingPtr& ring() const { return num_.ring(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Mathematical equality by cross multiplication.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Scalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  void normalize();

  Poly num_;
  Poly den_;
};

/// Gaussian binomial coefficient at base Q = q^base_exp, 0 <= m <= n.
Scalar qbinom(const RingPtr& r, long n, long m, long base_exp);

/// The default parameter ring shared by the whole catalog.
RingPtr default_ring();

}  // namespace qe2

#endif
