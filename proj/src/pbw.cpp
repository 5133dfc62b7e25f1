#include "qe2/pbw.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qe2 {

namespace {
constexpr std::size_t kStepCap = 1000000;
}

// ---------------------------------------------------------------------------
// AlgebraSpec

std::shared_ptr<AlgebraSpec> AlgebraSpec::create(std::string id, RingPtr ring,
                                                 std::vector<GenInfo> gens) {
  auto a = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
  a->id_ = std::move(id);
  a->ring_ = std::move(ring);
  a->gens_ = std::move(gens);
  int n = a->ngens();
  a->rules_.resize(static_cast<size_t>(n) * (n - 1) / 2);  // default: commuting
  return a;
}

int AlgebraSpec::gen_index(std::string_view name) const {
  for (int i = 0; i < ngens(); ++i)
    if (gens_[static_cast<size_t>(i)].name == name) return i;
  return -1;
}

namespace {
inline size_t pair_slot(int j, int i) {
  return static_cast<size_t>(j) * (static_cast<size_t>(j) - 1) / 2 + static_cast<size_t>(i);
}
}  // namespace

void AlgebraSpec::set_rule(int j, int i, long dexp, const Element& corr) {
  if (!(j > i && i >= 0)) throw Error("set_rule: need j > i");
  if (!corr.is_zero() && (gens_[static_cast<size_t>(j)].invertible ||
                          gens_[static_cast<size_t>(i)].invertible))
    throw Error("set_rule: corrections are only supported between non-invertible generators");
  rules_[pair_slot(j, i)] = PairRule{true, dexp, std::make_shared<const Element>(corr)};
}

void AlgebraSpec::set_rule(int j, int i, long dexp) {
  if (!(j > i && i >= 0)) throw Error("set_rule: need j > i");
  rules_[pair_slot(j, i)] = PairRule{true, dexp, nullptr};
}

void AlgebraSpec::set_rule_collapse(int j, int i, const Element& corr) {
  if (!(j > i && i >= 0)) throw Error("set_rule_collapse: need j > i");
  if (gens_[static_cast<size_t>(j)].invertible || gens_[static_cast<size_t>(i)].invertible)
    throw Error("set_rule_collapse: generators must be non-invertible");
  rules_[pair_slot(j, i)] = PairRule{false, 0, std::make_shared<const Element>(corr)};
}

void AlgebraSpec::set_inorder(int i, int j, const Element& corr) {
  if (!(i < j)) throw Error("set_inorder: need i < j");
  if (gens_[static_cast<size_t>(j)].invertible || gens_[static_cast<size_t>(i)].invertible)
    throw Error("set_inorder: generators must be non-invertible");
  inorder_[{i, j}] = std::make_shared<const Element>(corr);
}

const PairRule& AlgebraSpec::rule(int j, int i) const { return rules_.at(pair_slot(j, i)); }

const Element* AlgebraSpec::inorder(int i, int j) const {
  auto it = inorder_.find({i, j});
  return it == inorder_.end() ? nullptr : it->second.get();
}

bool AlgebraSpec::monomial_valid(const Monomial& m) const {
  for (int i = 0; i < ngens(); ++i)
    if (m.e[static_cast<size_t>(i)] < 0 && !gens_[static_cast<size_t>(i)].invertible) return false;
  for (const auto& [key, corr] : inorder_) {
    if (m.e[static_cast<size_t>(key.first)] > 0 && m.e[static_cast<size_t>(key.second)] > 0)
      return false;
  }
  return true;
}

long AlgebraSpec::poly_degree(const Monomial& m) const {
  long d = 0;
  for (int i = 0; i < ngens(); ++i)
    if (!gens_[static_cast<size_t>(i)].invertible) d += m.e[static_cast<size_t>(i)];
  return d;
}

// ---------------------------------------------------------------------------
// Engine

Word monomial_word(const Monomial& m) {
  Word w;
  for (size_t i = 0; i < m.e.size(); ++i)
    if (m.e[i] != 0) w.emplace_back(static_cast<int>(i), m.e[i]);
  return w;
}

namespace {

struct WorkItem {
  Word w;
  Scalar c;
};

void cleanup_word(Word& w) {
  size_t out = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].second == 0) continue;
    if (out > 0 && w[out - 1].first == w[i].first) {
      w[out - 1].second += w[i].second;
      if (w[out - 1].second == 0) --out;
    } else {
      w[out++] = w[i];
    }
  }
  w.resize(out);
}

Element normal_form(const AlgebraPtr& alg, std::vector<WorkItem> stack) {
  Element result = Element::zero(alg);
  const RingPtr& ring = alg->ring();
  std::size_t steps = 0;
  while (!stack.empty()) {
    WorkItem it = std::move(stack.back());
    stack.pop_back();
    if (it.c.is_zero()) continue;
    if (++steps > kStepCap)
      throw Error("normal_form: iteration cap exceeded in " + alg->id() +
                  " (non-terminating rule set?)");
    cleanup_word(it.w);
    Word& w = it.w;
    int pos = -1, kind = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      int g1 = w[i].first, g2 = w[i + 1].first;
      if (g1 > g2) {
        pos = static_cast<int>(i);
        kind = 1;
        break;
      }
      if (g1 < g2 && w[i].second > 0 && w[i + 1].second > 0 && alg->inorder(g1, g2) != nullptr) {
        pos = static_cast<int>(i);
        kind = 2;
        break;
      }
    }
    if (pos < 0) {
      Monomial m{Expvec(static_cast<size_t>(alg->ngens()), 0)};
      for (const auto& [g, e] : w) {
        if (e < 0 && !alg->gen(g).invertible)
          throw Error("normal_form: inversion of non-invertible generator " + alg->gen(g).name);
        m.e[static_cast<size_t>(g)] = static_cast<int>(e);
      }
      result.add_term(m, it.c);
      continue;
    }
    const size_t p = static_cast<size_t>(pos);
    const int g1 = w[p].first;
    const long e1 = w[p].second;
    const int g2 = w[p + 1].first;
    const long e2 = w[p + 1].second;
    if (kind == 1) {
      const PairRule& R = alg->rule(g1, g2);
      const bool pure = R.has_swap && (R.corr == nullptr || R.corr->is_zero());
      if (pure) {
        std::swap(w[p], w[p + 1]);
        if (R.dexp != 0) it.c = it.c * Scalar::qpow(ring, R.dexp * e1 * e2);
        stack.push_back(std::move(it));
        continue;
      }
      if (e1 < 0 || e2 < 0)
        throw Error("normal_form: negative power against a rule with correction");
      Word prefix(w.begin(), w.begin() + static_cast<long>(p));
      Word suffix(w.begin() + static_cast<long>(p) + 2, w.end());
      prefix.emplace_back(g1, e1 - 1);
      suffix.insert(suffix.begin(), {g2, e2 - 1});
      if (R.has_swap) {
        WorkItem swapped;
        swapped.w = prefix;
        swapped.w.emplace_back(g2, 1);
        swapped.w.emplace_back(g1, 1);
        swapped.w.insert(swapped.w.end(), suffix.begin(), suffix.end());
        swapped.c = R.dexp != 0 ? it.c * Scalar::qpow(ring, R.dexp) : it.c;
        stack.push_back(std::move(swapped));
      }
      if (R.corr != nullptr) {
        for (const auto& [cm, cc] : R.corr->terms()) {
          WorkItem corr;
          corr.w = prefix;
          Word cw = monomial_word(cm);
          corr.w.insert(corr.w.end(), cw.begin(), cw.end());
          corr.w.insert(corr.w.end(), suffix.begin(), suffix.end());
          corr.c = it.c * cc;
          stack.push_back(std::move(corr));
        }
      }
    } else {
      const Element& C = *alg->inorder(g1, g2);
      Word prefix(w.begin(), w.begin() + static_cast<long>(p));
      Word suffix(w.begin() + static_cast<long>(p) + 2, w.end());
      prefix.emplace_back(g1, e1 - 1);
      suffix.insert(suffix.begin(), {g2, e2 - 1});
      for (const auto& [cm, cc] : C.terms()) {
        WorkItem corr;
        corr.w = prefix;
        Word cw = monomial_word(cm);
        corr.w.insert(corr.w.end(), cw.begin(), cw.end());
        corr.w.insert(corr.w.end(), suffix.begin(), suffix.end());
        corr.c = it.c * cc;
        stack.push_back(std::move(corr));
      }
    }
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

Element Element::zero(AlgebraPtr a) {
  Element x;
  x.alg_ = std::move(a);
  return x;
}

Element Element::one(AlgebraPtr a) {
  Scalar c = Scalar::integer(a->ring(), 1);
  return scalar(std::move(a), c);
}

Element Element::scalar(AlgebraPtr a, const Scalar& c) {
  Element x = zero(std::move(a));
  Monomial m{Expvec(static_cast<size_t>(x.alg_->ngens()), 0)};
  x.add_term(m, c);
  return x;
}

Element Element::generator(AlgebraPtr a, int idx, long exp) {
  if (idx < 0 || idx >= a->ngens()) throw Error("generator: index out of range");
  return from_word(a, Word{{idx, exp}}, Scalar::integer(a->ring(), 1));
}

Element Element::generator(AlgebraPtr a, std::string_view name, long exp) {
  int idx = a->gen_index(name);
  if (idx < 0) throw Error("unknown generator " + std::string(name) + " in " + a->id());
  return generator(std::move(a), idx, exp);
}

Element Element::from_word(AlgebraPtr a, const Word& w, const Scalar& c) {
  std::vector<WorkItem> items;
  items.push_back(WorkItem{w, c});
  return normal_form(a, std::move(items));
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero())
      t_.erase(it);
    else
      it->second = std::move(s);
  }
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  if (!r.alg_) r.alg_ = o.alg_;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  if (!r.alg_) r.alg_ = o.alg_;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

Element Element::operator-() const {
  Element r = zero(alg_);
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r = zero(alg_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : t_) {
    Scalar s = cc * c;
    if (!s.is_zero()) r.t_.emplace(m, std::move(s));
  }
  return r;
}

Element Element::operator*(const Element& o) const {
  if (alg_.get() != o.alg_.get()) throw Error("Element::mul: different algebras");
  std::vector<WorkItem> items;
  items.reserve(t_.size() * o.t_.size());
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) {
      Word w = monomial_word(ma);
      Word wb = monomial_word(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      items.push_back(WorkItem{std::move(w), ca * cb});
    }
  return normal_form(alg_, std::move(items));
}

Element Element::pow(long e) const {
  if (e < 0) {
    auto inv = invert_unit(*this);
    if (!inv) throw Error("Element::pow: negative power of a non-unit");
    return inv->pow(-e);
  }
  Element r = one(alg_);
  Element b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

bool Element::operator==(const Element& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = t_.begin();
  auto jt = o.t_.begin();
  for (; it != t_.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (it->second != jt->second) return false;
  }
  return true;
}

Scalar Element::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  if (it == t_.end()) return Scalar::integer(alg_->ring(), 0);
  return it->second;
}

Monomial Element::leading() const {
  if (t_.empty()) throw Error("leading: zero element");
  auto best = t_.begin();
  long bdeg = alg_->poly_degree(best->first);
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it) {
    long d = alg_->poly_degree(it->first);
    if (d > bdeg || (d == bdeg && best->first < it->first)) {
      best = it;
      bdeg = d;
    }
  }
  return best->first;
}

std::string Element::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      os << "*" << alg_->gen(static_cast<int>(i)).name;
      if (m.e[i] != 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

Element commutator_q(const Element& x, const Element& y, const Scalar& c) {
  return x * y - (y * x).scaled(c);
}

std::optional<Element> invert_unit(const Element& x) {
  if (x.nterms() != 1) return std::nullopt;
  const auto& [m, c] = *x.terms().begin();
  const auto& alg = x.alg();
  for (size_t i = 0; i < m.e.size(); ++i)
    if (m.e[i] != 0 && !alg->gen(static_cast<int>(i)).invertible) return std::nullopt;
  Word w;
  for (size_t i = m.e.size(); i-- > 0;)
    if (m.e[i] != 0) w.emplace_back(static_cast<int>(i), -m.e[i]);
  return Element::from_word(alg, w, c.inverse());
}

// ---------------------------------------------------------------------------
// MorphismSpec

MorphismSpec::MorphismSpec(std::string name, AlgebraPtr src, AlgebraPtr dst,
                           std::vector<Element> images, bool anti)
    : name_(std::move(name)),
      src_(std::move(src)),
      dst_(std::move(dst)),
      anti_(anti),
      images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src_->ngens())
    throw Error("MorphismSpec: one image per source generator required");
  inv_images_.resize(images_.size());
  for (int i = 0; i < src_->ngens(); ++i) {
    if (!src_->gen(i).invertible) continue;
    auto inv = invert_unit(images_[static_cast<size_t>(i)]);
    if (!inv)
      throw Error("MorphismSpec " + name_ + ": image of invertible generator " +
                  src_->gen(i).name + " is not a unit");
    inv_images_[static_cast<size_t>(i)] = std::move(*inv);
  }
}

const Element& MorphismSpec::inverse_image(int i) const {
  if (!src_->gen(i).invertible) throw Error("inverse_image: generator not invertible");
  return inv_images_.at(static_cast<size_t>(i));
}

Element MorphismSpec::apply(const Element& x) const {
  if (x.alg().get() != src_.get()) throw Error("MorphismSpec::apply: element not over source");
  Element result = Element::zero(dst_);
  for (const auto& [m, c] : x.terms()) {
    Element acc = Element::one(dst_);
    auto mul_factor = [&](int i) {
      int e = m.e[static_cast<size_t>(i)];
      if (e == 0) return;
      if (e > 0)
        acc = acc * images_[static_cast<size_t>(i)].pow(e);
      else
        acc = acc * inv_images_[static_cast<size_t>(i)].pow(-e);
    };
    if (!anti_) {
      for (int i = 0; i < src_->ngens(); ++i) mul_factor(i);
    } else {
      for (int i = src_->ngens() - 1; i >= 0; --i) mul_factor(i);
    }
    result += acc.scaled(c);
  }
  return result;
}

MorphismSpec::Report MorphismSpec::check() const {
  Report rep;
  auto record = [&](const std::string& rel, const Element& residue) {
    ++rep.checked;
    if (!residue.is_zero()) {
      rep.ok = false;
      rep.failures.emplace_back(rel, residue.str());
    }
  };
  const RingPtr& ring = dst_->ring();
  for (int j = 1; j < src_->ngens(); ++j) {
    for (int i = 0; i < j; ++i) {
      const PairRule& R = src_->rule(j, i);
      const Element& fj = images_[static_cast<size_t>(j)];
      const Element& fi = images_[static_cast<size_t>(i)];
      Element lhs = anti_ ? fi * fj : fj * fi;
      Element rhs = Element::zero(dst_);
      if (R.has_swap) rhs += (anti_ ? fj * fi : fi * fj).scaled(Scalar::qpow(ring, R.dexp));
      if (R.corr != nullptr && !R.corr->is_zero()) rhs += apply(*R.corr);
      record(src_->gen(j).name + "*" + src_->gen(i).name, lhs - rhs);
    }
  }
  for (const auto& [key, corr] : src_->inorder_rules()) {
    const Element& fi = images_[static_cast<size_t>(key.first)];
    const Element& fj = images_[static_cast<size_t>(key.second)];
    Element lhs = anti_ ? fj * fi : fi * fj;
    record(src_->gen(key.first).name + "*" + src_->gen(key.second).name, lhs - apply(*corr));
  }
  for (int i = 0; i < src_->ngens(); ++i) {
    if (!src_->gen(i).invertible) continue;
    Element prod = images_[static_cast<size_t>(i)] * inv_images_[static_cast<size_t>(i)];
    record(src_->gen(i).name + "*" + src_->gen(i).name + "^-1", prod - Element::one(dst_));
  }
  return rep;
}

MorphismSpec identity_morphism(const AlgebraPtr& a) {
  std::vector<Element> images;
  for (int i = 0; i < a->ngens(); ++i) images.push_back(Element::generator(a, i));
  return MorphismSpec("id", a, a, std::move(images), false);
}

MorphismSpec compose(const MorphismSpec& f, const MorphismSpec& g) {
  if (g.target().get() != f.source().get()) throw Error("compose: type mismatch");
  std::vector<Element> images;
  for (int i = 0; i < g.source()->ngens(); ++i) images.push_back(f.apply(g.image(i)));
  return MorphismSpec(f.name() + "." + g.name(), g.source(), f.target(), std::move(images),
                      f.anti() != g.anti());
}

bool same_morphism(const MorphismSpec& f, const MorphismSpec& g) {
  if (f.source().get() != g.source().get() || f.target().get() != g.target().get()) return false;
  if (f.anti() != g.anti()) return false;
  for (int i = 0; i < f.source()->ngens(); ++i)
    if (f.image(i) != g.image(i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Diamond check

DiamondReport diamond_check(const AlgebraPtr& a, int degree_cap, int nrandom,
                            std::uint64_t seed) {
  DiamondReport rep;
  const int n = a->ngens();
  auto probe = [&](const Element& x, const Element& y, const Element& z,
                   const std::string& what) {
    ++rep.checked;
    Element lhs = (x * y) * z;
    Element rhs = x * (y * z);
    if (!(lhs == rhs)) {
      rep.ok = false;
      rep.failures.push_back(what + ": [" + (lhs - rhs).str() + "]");
    }
  };
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        probe(Element::generator(a, k), Element::generator(a, j), Element::generator(a, i),
              a->gen(k).name + "," + a->gen(j).name + "," + a->gen(i).name);
  if (nrandom > 0) {
    std::mt19937_64 rng(seed);
    auto rand_monomial = [&]() {
      Word w;
      for (int i = 0; i < n; ++i) {
        long lo = a->gen(i).invertible ? -degree_cap : 0;
        long e = lo + static_cast<long>(rng() % static_cast<unsigned long>(degree_cap - lo + 1));
        if (e != 0) w.emplace_back(i, e);
      }
      return Element::from_word(a, w, Scalar::integer(a->ring(), 1));
    };
    for (int t = 0; t < nrandom; ++t)
      probe(rand_monomial(), rand_monomial(), rand_monomial(), "random triple " + std::to_string(t));
  }
  return rep;
}

}  // namespace qe2
