#include "qe2/gwa.hpp"

#include <json.hpp>

namespace qe2 {
namespace gwa {

namespace {

Element gen(const AlgebraPtr& a, const char* n, long e = 1) {
  return Element::generator(a, n, e);
}

/// Lifts an element of the base into a spec whose first generators are the
/// base generators in the same order.
Element lift(const Element& x, const AlgebraPtr& target) {
  Element r = Element::zero(target);
  for (const auto& [m, c] : x.terms()) {
    Monomial nm{Expvec(static_cast<size_t>(target->ngens()), 0)};
    for (size_t i = 0; i < m.e.size(); ++i) nm.e[i] = m.e[i];
    r.add_term(nm, c);
  }
  return r;
}

std::optional<std::pair<int, Scalar>> diagonal_image(const Element& img) {
  if (img.nterms() != 1) return std::nullopt;
  const auto& [m, c] = *img.terms().begin();
  int which = -1;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (m.e[i] != 1 || which >= 0) return std::nullopt;
    which = static_cast<int>(i);
  }
  if (which < 0) return std::nullopt;
  return std::make_pair(which, c);
}

std::optional<long> as_qpower(const Scalar& s) {
  if (s.is_zero()) return std::nullopt;
  const Poly &n = s.num(), &d = s.den();
  if (n.nterms() != 1 || d.nterms() != 1) return std::nullopt;
  const auto& [ne, nc] = *n.terms().begin();
  const auto& [de, dc] = *d.terms().begin();
  if (nc != 1 || dc != 1) return std::nullopt;
  long exp = 0;
  for (size_t i = 0; i < ne.size(); ++i) {
    int diff = ne[i] - de[i];
    if (diff == 0) continue;
    if (i != 0) return std::nullopt;
    exp = diff;
  }
  return exp;
}

}  // namespace

ConditionReport ggwa_check(const GgwaData& d) {
  ConditionReport rep;
  auto record = [&](const std::string& what, const Element& residue) {
    ++rep.checked;
    if (!residue.is_zero()) {
      rep.ok = false;
      rep.failures.emplace_back(what, residue.str());
    }
  };
  auto srep = d.sigma.check();
  ++rep.checked;
  if (!srep.ok) {
    rep.ok = false;
    rep.failures.emplace_back("sigma is not an algebra map", srep.failures.front().first);
  }
  auto trep = d.tau.check();
  ++rep.checked;
  if (!trep.ok) {
    rep.ok = false;
    rep.failures.emplace_back("tau is not an algebra map", trep.failures.front().first);
  }
  Element sa = d.sigma.apply(d.a_elem);
  record("tau(sigma(a)) = a", d.tau.apply(sa) - d.a_elem);
  for (int i = 0; i < d.base->ngens(); ++i) {
    Element r = gen(d.base, d.base->gen(i).name.c_str());
    Element ts = d.tau.apply(d.sigma.apply(r));
    record("a*" + d.base->gen(i).name + " = tau(sigma(" + d.base->gen(i).name + "))*a",
           d.a_elem * r - ts * d.a_elem);
    Element st = d.sigma.apply(d.tau.apply(r));
    record("sigma(a)*" + d.base->gen(i).name + " = sigma(tau(" + d.base->gen(i).name +
               "))*sigma(a)",
           sa * r - st * sa);
  }
  return rep;
}

std::optional<MorphismSpec> diagonal_inverse(const MorphismSpec& f) {
  if (f.source().get() != f.target().get() || f.anti()) return std::nullopt;
  const AlgebraPtr& a = f.source();
  std::vector<Element> inv(static_cast<size_t>(a->ngens()));
  for (int i = 0; i < a->ngens(); ++i) {
    auto d = diagonal_image(f.image(i));
    if (!d || d->first != i) return std::nullopt;
    inv[static_cast<size_t>(i)] = Element::generator(a, i).scaled(d->second.inverse());
  }
  return MorphismSpec(f.name() + "^-1", a, a, std::move(inv));
}

ClassicalComparison classical_compare(const GgwaData& d) {
  ClassicalComparison out;
  auto sinv = diagonal_inverse(d.sigma);
  out.tau_is_sigma_inverse = sinv && same_morphism(*sinv, d.tau);
  out.a_central = true;
  for (int i = 0; i < d.base->ngens(); ++i) {
    Element r = gen(d.base, d.base->gen(i).name.c_str());
    if (!(d.a_elem * r - r * d.a_elem).is_zero()) out.a_central = false;
  }
  out.ggwa_ok = ggwa_check(d).ok;
  out.agree = !out.tau_is_sigma_inverse || (out.a_central == out.ggwa_ok);
  return out;
}

AlgebraPtr ggwa_build(const GgwaData& d) {
  ConditionReport cond = ggwa_check(d);
  if (!cond.ok)
    throw Error("ggwa_build(" + d.name + "): condition fails on " +
                cond.failures.front().first);
  const int nb = d.base->ngens();
  std::vector<GenInfo> gens;
  for (int i = 0; i < nb; ++i) gens.push_back(d.base->gen(i));
  gens.push_back({d.xname, false});
  gens.push_back({d.yname, false});
  auto spec = AlgebraSpec::create(d.name, d.base->ring(), std::move(gens));
  for (int j = 1; j < nb; ++j)
    for (int i = 0; i < j; ++i) {
      const PairRule& r = d.base->rule(j, i);
      if (r.corr != nullptr && !r.corr->is_zero())
        throw Error("ggwa_build: base must be a quantum polynomial algebra");
      spec->set_rule(j, i, r.dexp);
    }
  const int xi = nb, yi = nb + 1;
  for (int i = 0; i < nb; ++i) {
    auto sd = diagonal_image(d.sigma.image(i));
    auto td = diagonal_image(d.tau.image(i));
    if (!sd || !td || sd->first != i || td->first != i)
      throw Error("ggwa_build: sigma/tau must be diagonal on generators");
    auto se = as_qpower(sd->second);
    auto te = as_qpower(td->second);
    if (!se || !te) throw Error("ggwa_build: sigma/tau scalars must be powers of q");
    spec->set_rule(xi, i, *se);
    spec->set_rule(yi, i, *te);
  }
  spec->set_rule_collapse(yi, xi, lift(d.a_elem, spec));
  spec->set_inorder(xi, yi, lift(d.sigma.apply(d.a_elem), spec));
  return spec;
}

CentralReport central_element_check(const AlgebraPtr& spec, const Element& z) {
  CentralReport rep;
  for (int i = 0; i < spec->ngens(); ++i) {
    Element g = Element::generator(spec, i);
    Element res = z * g - g * z;
    ++rep.checked;
    if (!res.is_zero()) {
      rep.ok = false;
      rep.failures.emplace_back(spec->gen(i).name, res.str());
    }
  }
  return rep;
}

namespace {

MorphismSpec diag_morphism(const std::string& name, const AlgebraPtr& a,
                           const std::vector<Scalar>& scale) {
  std::vector<Element> img;
  for (int i = 0; i < a->ngens(); ++i)
    img.push_back(Element::generator(a, i).scaled(scale[static_cast<size_t>(i)]));
  return MorphismSpec(name, a, a, std::move(img));
}

}  // namespace

GgwaData dq_factor_data(int which, const std::optional<Scalar>& value) {
  const RingPtr R = Catalog::get().ring();
  Scalar one = Scalar::integer(R, 1);
  auto qp = [&](long e) { return Scalar::qpow(R, e); };
  switch (which) {
    case 1: {  // double modulo phi: base on (a, b, K, psi)
      auto base = AlgebraSpec::create(
          "DqPhiBase", R, {{"a", true}, {"b", true}, {"K", true}, {"psi", false}});
      base->set_rule(1, 0, -1);  // b a
      base->set_rule(2, 0, -1);  // K a
      base->set_rule(2, 1, 1);   // K b
      base->set_rule(3, 0, -1);  // psi a
      base->set_rule(3, 1, 0);   // psi b
      base->set_rule(3, 2, -1);  // psi K
      Element a_el = (gen(base, "psi") - gen(base, "a", -1) * gen(base, "K"))
                         .scaled((one - qp(-2)).inverse());
      MorphismSpec sigma = diag_morphism("sigma", base, {one, one, qp(-2), one});
      MorphismSpec tau = diag_morphism("tau", base, {qp(-1), one, qp(1), one});
      return GgwaData{"DqModPhi", base, sigma, tau, a_el, "E", "c"};
    }
    case 2: {  // double modulo psi: base on (a, c, K, phi)
      auto base = AlgebraSpec::create(
          "DqPsiBase", R, {{"a", true}, {"c", true}, {"K", true}, {"phi", false}});
      base->set_rule(1, 0, -1);  // c a
      base->set_rule(2, 0, -1);  // K a
      base->set_rule(2, 1, -1);  // K c
      base->set_rule(3, 0, 0);   // phi a
      base->set_rule(3, 1, 1);   // phi c
      base->set_rule(3, 2, 1);   // phi K
      Element a_el = (gen(base, "phi") - gen(base, "a")).scaled((qp(-1) - qp(1)).inverse());
      MorphismSpec sigma = diag_morphism("sigma", base, {qp(1), qp(1), qp(2), qp(-1)});
      MorphismSpec tau = diag_morphism("tau", base, {qp(-1), one, qp(-1), qp(1)});
      return GgwaData{"DqModPsi", base, sigma, tau, a_el, "F", "b"};
    }
    case 3: {  // double modulo (phi, psi - alpha*b): base torus (a, b, K)
      auto base =
          AlgebraSpec::create("DqMaxBaseB", R, {{"a", true}, {"b", true}, {"K", true}});
      base->set_rule(1, 0, -1);
      base->set_rule(2, 0, -1);
      base->set_rule(2, 1, 1);
      Scalar alpha = value ? *value : Scalar::param(R, "alpha");
      Element a_el = (gen(base, "b").scaled(alpha) - gen(base, "a", -1) * gen(base, "K"))
                         .scaled((one - qp(-2)).inverse());
      MorphismSpec sigma = diag_morphism("sigma", base, {one, one, qp(-2)});
      MorphismSpec tau = diag_morphism("tau", base, {qp(-1), one, qp(1)});
      return GgwaData{"DqModPhiPsiAlphaB", base, sigma, tau, a_el, "E", "c"};
    }
    case 4: {  // double modulo (phi - beta*c*K^-1, psi): base torus (a, c, K)
      auto base =
          AlgebraSpec::create("DqMaxBaseC", R, {{"a", true}, {"c", true}, {"K", true}});
      base->set_rule(1, 0, -1);
      base->set_rule(2, 0, -1);
      base->set_rule(2, 1, -1);
      Scalar beta = value ? *value : Scalar::param(R, "beta");
      Element a_el =
          ((gen(base, "c") * gen(base, "K", -1)).scaled(beta) - gen(base, "a"))
              .scaled((qp(-1) - qp(1)).inverse());
      MorphismSpec sigma = diag_morphism("sigma", base, {qp(1), qp(1), qp(2)});
      MorphismSpec tau = diag_morphism("tau", base, {qp(-1), one, qp(-1)});
      return GgwaData{"DqModPhiBetaPsi", base, sigma, tau, a_el, "F", "b"};
    }
    default:
      throw Error("dq_factor_data: which must be 1..4");
  }
}

Element dq_factor_central(int which, const AlgebraPtr& spec) {
  if (which == 1) return gen(spec, "psi") * gen(spec, "b", -1);
  if (which == 2) return gen(spec, "phi") * gen(spec, "K") * gen(spec, "c", -1);
  throw Error("dq_factor_central: only the height-one factors carry a centre generator");
}

GgwaData cchi_factor_data(int which, const std::optional<Scalar>& value) {
  const RingPtr R = Catalog::get().ring();
  Scalar one = Scalar::integer(R, 1);
  Scalar chi = Scalar::param(R, "chi");
  auto qp = [&](long e) { return Scalar::qpow(R, e); };
  switch (which) {
    case 1: {  // centralizer(chi) modulo u: base k[v, x1^(+-1)]
      auto base = AlgebraSpec::create("CchiUBase", R, {{"x1", true}, {"v", false}});
      base->set_rule(1, 0, 0);  // v and x1 commute
      Element a_el = (gen(base, "v") - Element::one(base)).scaled((qp(-3) - qp(-1)).inverse());
      MorphismSpec sigma = diag_morphism("sigma", base, {qp(2), qp(-2)});
      MorphismSpec tau = diag_morphism("tau", base, {qp(-2), qp(2)});
      return GgwaData{"CchiModU", base, sigma, tau, a_el, "x2", "y2"};
    }
    case 2: {  // centralizer(chi) modulo v: base k[u, x2^(+-1)]
      auto base = AlgebraSpec::create("CchiVBase", R, {{"x2", true}, {"u", false}});
      base->set_rule(1, 0, 0);
      Element a_el =
          (gen(base, "u") - Element::scalar(base, chi)).scaled((qp(2) - one).inverse());
      MorphismSpec sigma = diag_morphism("sigma", base, {qp(-2), qp(2)});
      MorphismSpec tau = diag_morphism("tau", base, {qp(2), qp(-2)});
      return GgwaData{"CchiModV", base, sigma, tau, a_el, "x1", "y1"};
    }
    case 3: {  // centralizer(chi) modulo (u, theta - alpha): base k[x1^(+-1)]
      auto base = AlgebraSpec::create("CchiUThetaBase", R, {{"x1", true}});
      Scalar alpha = value ? *value : Scalar::param(R, "alpha");
      Element a_el = (gen(base, "x1", -1).scaled(alpha) - Element::one(base))
                         .scaled((qp(-3) - qp(-1)).inverse());
      MorphismSpec sigma = diag_morphism("sigma", base, {qp(2)});
      MorphismSpec tau = diag_morphism("tau", base, {qp(-2)});
      return GgwaData{"CchiModUTheta", base, sigma, tau, a_el, "x2", "y2"};
    }
    case 4: {  // centralizer(chi) modulo (v, omega - beta): base k[x2^(+-1)]
      auto base = AlgebraSpec::create("CchiVOmegaBase", R, {{"x2", true}});
      Scalar beta = value ? *value : Scalar::param(R, "beta");
      Element a_el = (gen(base, "x2", -1).scaled(beta) - Element::scalar(base, chi))
                         .scaled((qp(2) - one).inverse());
      MorphismSpec sigma = diag_morphism("sigma", base, {qp(-2)});
      MorphismSpec tau = diag_morphism("tau", base, {qp(2)});
      return GgwaData{"CchiModVOmega", base, sigma, tau, a_el, "x1", "y1"};
    }
    default:
      throw Error("cchi_factor_data: which must be 1..4");
  }
}

Element cchi_factor_central(int which, const AlgebraPtr& spec) {
  if (which == 1) return gen(spec, "v") * gen(spec, "x1");
  if (which == 2) return gen(spec, "u") * gen(spec, "x2");
  throw Error("cchi_factor_central: only the height-one factors carry a centre generator");
}

AlgebraPtr cchi_factor(const std::string& tag) {
  if (tag == "u-quotient") return ggwa_build(cchi_factor_data(1));
  if (tag == "v-quotient") return ggwa_build(cchi_factor_data(2));
  if (tag == "u-theta") return ggwa_build(cchi_factor_data(3));
  if (tag == "v-omega") return ggwa_build(cchi_factor_data(4));
  if (tag == "u-theta0") {
    // at alpha = 0 both GWA generators become units and the factor is the
    // quantum torus with x1 x2 = q^-2 x2 x1
    const RingPtr R = Catalog::get().ring();
    auto t = AlgebraSpec::create("CchiTorus", R, {{"x1", true}, {"x2", true}});
    t->set_rule(1, 0, 2);
    return t;
  }
  throw Error("cchi_factor: unknown tag " + tag);
}

AlgebraPtr qgwa_build(const QgwaData& d) {
  const RingPtr R = Catalog::get().ring();
  if (d.mu.is_zero()) throw Error("qgwa_build: mu must be nonzero");
  if (d.has_root && d.zeta.is_zero()) throw Error("qgwa_build: the root must be nonzero");
  if (!d.has_root) {
    // a(h) is a unit: the algebra is the quantum torus k_Q[x^(+-1), h^(+-1)]
    auto t = AlgebraSpec::create("QgwaTorus", R, {{"h", true}, {"x", true}});
    t->set_rule(1, 0, d.qexp);
    return t;
  }
  auto spec = AlgebraSpec::create("Qgwa", R, {{"h", true}, {"x", false}, {"y", false}});
  spec->set_rule(1, 0, d.qexp);   // x h = Q h x
  spec->set_rule(2, 0, -d.qexp);  // y h = Q^-1 h y
  Element h = gen(spec, "h");
  spec->set_rule_collapse(2, 1, qgwa_a_elem(d, spec, h));
  Element qh = h.scaled(Scalar::qpow(R, d.qexp));
  spec->set_inorder(1, 2, qgwa_a_elem(d, spec, qh));
  return spec;
}

Element qgwa_a_elem(const QgwaData& d, const AlgebraPtr& spec, const Element& h) {
  Element p = h.pow(d.hexp).scaled(d.mu);
  if (!d.has_root) return p;
  return p * (h - Element::scalar(spec, d.zeta));
}

Scalar qgwa_a_at(const QgwaData& d, const Scalar& value) {
  Scalar p = d.mu * value.pow(d.hexp);
  if (!d.has_root) return p;
  return p * (value - d.zeta);
}

std::string presentation_json(const AlgebraPtr& spec) {
  nlohmann::json j;
  j["id"] = spec->id();
  j["generators"] = nlohmann::json::array();
  for (int i = 0; i < spec->ngens(); ++i)
    j["generators"].push_back(
        {{"name", spec->gen(i).name}, {"invertible", spec->gen(i).invertible}});
  j["rules"] = nlohmann::json::array();
  for (int jj = 1; jj < spec->ngens(); ++jj)
    for (int i = 0; i < jj; ++i) {
      const PairRule& r = spec->rule(jj, i);
      nlohmann::json row = {{"lhs", spec->gen(jj).name + "*" + spec->gen(i).name},
                            {"swap", r.has_swap},
                            {"q_exponent", r.dexp}};
      row["correction"] = (r.corr != nullptr && !r.corr->is_zero()) ? r.corr->str() : "0";
      j["rules"].push_back(row);
    }
  for (const auto& [key, corr] : spec->inorder_rules())
    j["rules"].push_back(
        {{"lhs", spec->gen(key.first).name + "*" + spec->gen(key.second).name},
         {"swap", false},
         {"q_exponent", 0},
         {"correction", corr->str()}});
  return j.dump(2);
}

}  // namespace gwa
}  // namespace qe2
