#include "qe2/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qe2 {

ParamRing::ParamRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || names_[0] != "q") throw Error("ParamRing: q must be the first parameter");
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("ParamRing: duplicate parameter " + names_[i]);
}

std::shared_ptr<const ParamRing> ParamRing::make(std::vector<std::string> names) {
  return std::make_shared<const ParamRing>(std::move(names));
}

int ParamRing::index(std::string_view n) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return static_cast<int>(i);
  return -1;
}

RingPtr default_ring() {
  static RingPtr r = ParamRing::make(
      {"q", "chi", "alpha", "beta", "gamma", "zeta", "mu", "lambda", "nu", "eta"});
  return r;
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(RingPtr r, Int c) {
  Poly p(std::move(r));
  if (c != 0) p.t_[Expvec(p.ring_->size(), 0)] = std::move(c);
  return p;
}

Poly Poly::variable(RingPtr r, int idx, int exp) {
  if (exp < 0) throw Error("Poly::variable: negative exponent");
  Poly p(std::move(r));
  Expvec e(p.ring_->size(), 0);
  e.at(idx) = exp;
  p.t_[e] = 1;
  return p;
}

bool Poly::is_one() const {
  return t_.size() == 1 && t_.begin()->second == 1 &&
         std::all_of(t_.begin()->first.begin(), t_.begin()->first.end(),
                     [](int x) { return x == 0; });
}

bool Poly::is_constant() const {
  if (t_.empty()) return true;
  return t_.size() == 1 && std::all_of(t_.begin()->first.begin(), t_.begin()->first.end(),
                                       [](int x) { return x == 0; });
}

void Poly::add_term(const Expvec& e, const Int& c) {
  if (c == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  if (!r.ring_) r.ring_ = o.ring_;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, -c);
  if (!r.ring_) r.ring_ = o.ring_;
  return r;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(ring_ ? ring_ : o.ring_);
  Expvec e(static_cast<size_t>(r.ring_ ? r.ring_->size() : 0), 0);
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

Int Poly::content() const {
  Int g = 0;
  for (const auto& [e, c] : t_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  if (g < 0) g = -g;
  return g;
}

Expvec Poly::min_exponents() const {
  if (t_.empty()) return Expvec(ring_ ? ring_->size() : 0, 0);
  Expvec m = t_.begin()->first;
  for (const auto& [e, c] : t_)
    for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
  return m;
}

void Poly::divide_coeffs(const Int& g) {
  if (g == 0 || g == 1) return;
  std::map<Expvec, Int> nt;
  for (const auto& [e, c] : t_) nt[e] = c / g;
  t_ = std::move(nt);
}

void Poly::shift_down(const Expvec& e) {
  bool all0 = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  if (all0) return;
  std::map<Expvec, Int> nt;
  for (const auto& [ee, c] : t_) {
    Expvec ne = ee;
    for (size_t k = 0; k < ne.size(); ++k) ne[k] -= e[k];
    nt[ne] = c;
  }
  t_ = std::move(nt);
}

bool Poly::univariate_in(int idx) const {
  for (const auto& [e, c] : t_)
    for (size_t k = 0; k < e.size(); ++k)
      if (static_cast<int>(k) != idx && e[k] != 0) return false;
  return true;
}

int Poly::degree_in(int idx) const {
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<size_t>(idx)]);
  return d;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw Error("Poly::divide_exact: division by zero");
  Poly rem = *this;
  Poly quot(ring_);
  const auto& dlt = *d.t_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlt = *rem.t_.rbegin();
    Expvec qe = rlt.first;
    for (size_t k = 0; k < qe.size(); ++k) {
      qe[k] -= dlt.first[k];
      if (qe[k] < 0) return std::nullopt;
    }
    if (rlt.second % dlt.second != 0) return std::nullopt;
    Int qc = rlt.second / dlt.second;
    quot.add_term(qe, qc);
    Poly t(ring_);
    t.t_[qe] = qc;
    rem = rem - t * d;
  }
  return quot;
}

int Poly::leading_sign() const {
  if (t_.empty()) return 0;
  return t_.rbegin()->second > 0 ? 1 : -1;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ring_->name(static_cast<int>(k));
      if (e[k] != 1) vars += "^" + std::to_string(e[k]);
    }
    if (vars.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << vars;
    }
  }
  return os.str();
}

namespace {

// Pseudo-remainder of univariate polynomials in variable idx.
Poly pseudo_rem(Poly a, const Poly& b, int idx) {
  int db = b.degree_in(idx);
  const auto ring = b.ring();
  // leading coefficient of b (constant, since univariate)
  Int lb = 0;
  for (const auto& [e, c] : b.terms())
    if (e[static_cast<size_t>(idx)] == db) lb = c;
  while (!a.is_zero() && a.degree_in(idx) >= db) {
    int da = a.degree_in(idx);
    Int la = 0;
    for (const auto& [e, c] : a.terms())
      if (e[static_cast<size_t>(idx)] == da) la = c;
    Poly t(ring);
    Expvec e(static_cast<size_t>(ring->size()), 0);
    e[static_cast<size_t>(idx)] = da - db;
    t.add_term(e, la);
    Poly la_b = t * b;
    Poly lb_a = Poly::constant(ring, lb) * a;
    a = lb_a - la_b;
  }
  return a;
}

Poly make_primitive(Poly p) {
  Int g = p.content();
  if (g > 1) p.divide_coeffs(g);
  p.shift_down(p.min_exponents());
  if (p.leading_sign() < 0) p = -p;
  return p;
}

}  // namespace

Poly gcd_univariate(const Poly& a0, const Poly& b0, int idx) {
  Poly a = make_primitive(a0), b = make_primitive(b0);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree_in(idx) < b.degree_in(idx)) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = make_primitive(pseudo_rem(a, b, idx));
    a = std::move(b);
    b = std::move(r);
  }
  return make_primitive(a);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::integer(RingPtr r, const Int& v) {
  return Scalar(Poly::constant(r, v), Poly::constant(r, 1));
}

Scalar Scalar::param(RingPtr r, int idx, int exp) {
  if (exp >= 0) return Scalar(Poly::variable(r, idx, exp), Poly::constant(r, 1));
  return Scalar(Poly::constant(r, 1), Poly::variable(r, idx, -exp));
}

Scalar Scalar::param(RingPtr r, std::string_view name, int exp) {
  int idx = r->index(name);
  if (idx < 0) throw Error("unknown parameter: " + std::string(name));
  return param(std::move(r), idx, exp);
}

Scalar Scalar::fraction(Poly n, Poly d) { return Scalar(std::move(n), std::move(d)); }

void Scalar::normalize() {
  if (den_.is_zero()) throw Error("Scalar: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ring() ? num_.ring() : den_.ring(), 1);
    return;
  }
  // common monomial factor
  Expvec mn = num_.min_exponents(), md = den_.min_exponents();
  Expvec common(mn.size());
  for (size_t k = 0; k < mn.size(); ++k) common[k] = std::min(mn[k], md[k]);
  num_.shift_down(common);
  Expvec cd = common;  // reuse as the denominator shift
  den_.shift_down(cd);
  // integer content
  Int g = boost::multiprecision::gcd(num_.content(), den_.content());
  if (g > 1) {
    num_.divide_coeffs(g);
    den_.divide_coeffs(g);
  }
  if (den_.leading_sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_.is_one()) return;
  // exact division covers the frequent "ratio is a polynomial" case
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Poly::constant(num_.ring(), 1);
    return;
  }
  // complete reduction when everything lives in q alone
  if (num_.univariate_in(0) && den_.univariate_in(0)) {
    Poly g2 = gcd_univariate(num_, den_, 0);
    if (!g2.is_one()) {
      auto qn = num_.divide_exact(g2);
      auto qd = den_.divide_exact(g2);
      if (qn && qd) {
        num_ = std::move(*qn);
        den_ = std::move(*qd);
        if (den_.leading_sign() < 0) {
          num_ = -num_;
          den_ = -den_;
        }
      }
    }
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (den_ == o.den_) return Scalar(num_ - o.num_, den_);
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error("Scalar: division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("Scalar: inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = integer(ring(), 1);
  Scalar b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return (num_ * o.den_) == (o.num_ * den_);
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Scalar qbinom(const RingPtr& r, long n, long m, long base_exp) {
  if (m < 0 || m > n) throw Error("qbinom: need 0 <= m <= n");
  Scalar one = Scalar::integer(r, 1);
  Scalar res = one;
  for (long i = 1; i <= m; ++i) {
    Scalar a = one - Scalar::qpow(r, base_exp * (n - m + i));
    Scalar b = one - Scalar::qpow(r, base_exp * i);
    res = res * (a / b);
  }
  return res;
}

}  // namespace qe2
