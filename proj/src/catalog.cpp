#include "qe2/catalog.hpp"

#include <algorithm>

namespace qe2 {

std::shared_ptr<AlgebraSpec> tensor_power(const AlgebraPtr& a, int n) {
  const int g = a->ngens();
  std::vector<GenInfo> gens;
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < g; ++i)
      gens.push_back({a->gen(i).name + "@" + std::to_string(c), a->gen(i).invertible});
  auto t = AlgebraSpec::create(a->id() + "^" + std::to_string(n), a->ring(), std::move(gens));
  for (int cj = 0; cj < n; ++cj)
    for (int j = 0; j < g; ++j)
      for (int ci = 0; ci <= cj; ++ci)
        for (int i = 0; i < g; ++i) {
          int J = cj * g + j, I = ci * g + i;
          if (J <= I) continue;
          if (ci != cj) {
            t->set_rule(J, I, 0);  // copies commute
            continue;
          }
          const PairRule& r = a->rule(j, i);
          if (r.corr != nullptr && !r.corr->is_zero()) {
            Element corr = embed_in_copy(*r.corr, t, cj);
            if (r.has_swap)
              t->set_rule(J, I, r.dexp, corr);
            else
              t->set_rule_collapse(J, I, corr);
          } else {
            t->set_rule(J, I, r.dexp);
          }
        }
  for (const auto& [key, corr] : a->inorder_rules())
    for (int c = 0; c < n; ++c)
      t->set_inorder(c * g + key.first, c * g + key.second, embed_in_copy(*corr, t, c));
  return t;
}

Element embed_in_copy(const Element& x, const AlgebraPtr& tensor, int copy) {
  const int g = x.alg()->ngens();
  Element r = Element::zero(tensor);
  for (const auto& [m, c] : x.terms()) {
    Monomial nm{Expvec(static_cast<size_t>(tensor->ngens()), 0)};
    for (int i = 0; i < g; ++i) nm.e[static_cast<size_t>(copy * g + i)] = m.e[static_cast<size_t>(i)];
    r.add_term(nm, c);
  }
  return r;
}

const Catalog& Catalog::get() {
  static Catalog c;
  return c;
}

Catalog::Catalog() : ring_(default_ring()) {
  build_algebras();
  build_named();
  build_morphisms();
  build_matrices();
  build_suite();
}

AlgebraPtr Catalog::algebra(const std::string& id) const {
  auto it = algebras_.find(id);
  if (it == algebras_.end()) throw Error("unknown algebra id: " + id);
  return it->second;
}

std::vector<std::string> Catalog::algebra_ids() const {
  std::vector<std::string> ids;
  for (const auto& [k, v] : algebras_) ids.push_back(k);
  return ids;
}

const Element& Catalog::named(const std::string& name, const std::string& algebra_id) const {
  const auto& table = named_in(algebra_id);
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown named element " + name + " in " + algebra_id);
  return it->second;
}

const std::map<std::string, Element>& Catalog::named_in(const std::string& algebra_id) const {
  static const std::map<std::string, Element> empty;
  auto it = named_.find(algebra_id);
  return it == named_.end() ? empty : it->second;
}

const MorphismSpec& Catalog::morphism(const std::string& name) const {
  auto it = morphisms_.find(name);
  if (it == morphisms_.end()) throw Error("unknown morphism: " + name);
  return it->second;
}

const MorphismSpec& Catalog::embedding(const std::string& sub, const std::string& super) const {
  return morphism("emb:" + sub + ":" + super);
}

const IntMatrix& Catalog::builtin_matrix(const std::string& name) const {
  auto it = matrices_.find(name);
  if (it == matrices_.end()) throw Error("unknown builtin matrix: " + name);
  return it->second;
}

std::vector<std::string> Catalog::matrix_ids() const {
  std::vector<std::string> ids;
  for (const auto& [k, v] : matrices_) ids.push_back(k);
  return ids;
}

namespace {

Element gen(const AlgebraPtr& a, const char* n, long e = 1) {
  return Element::generator(a, n, e);
}

}  // namespace

void Catalog::build_algebras() {
  const RingPtr& R = ring_;

  {  // quantum Euclidean group: a b = q b a, a c = q c a, b c = c b
    auto oq = AlgebraSpec::create("Oq", R, {{"a", true}, {"b", false}, {"c", false}});
    oq->set_rule(1, 0, -1);
    oq->set_rule(2, 0, -1);
    oq->set_rule(2, 1, 0);
    algebras_["Oq"] = oq;
  }
  {  // quantized enveloping algebra: K E = q^2 E K, K F = q^-2 F K, E F = F E
    auto uq = AlgebraSpec::create("Uq", R, {{"K", true}, {"E", false}, {"F", false}});
    uq->set_rule(1, 0, -2);
    uq->set_rule(2, 0, 2);
    uq->set_rule(2, 1, 0);
    algebras_["Uq"] = uq;
  }
  {  // Heisenberg double, PBW order (K, a, E, c, F, b)
    auto dq = AlgebraSpec::create(
        "Dq", R,
        {{"K", true}, {"a", true}, {"E", false}, {"c", false}, {"F", false}, {"b", false}});
    dq->set_rule(1, 0, 1);    // a K = q K a
    dq->set_rule(2, 0, -2);   // E K = q^-2 K E
    dq->set_rule(2, 1, 0);    // E a = a E
    dq->set_rule(3, 0, 1);    // c K = q K c
    dq->set_rule(3, 1, -1);   // c a = q^-1 a c
    {                         // c E = E c - a^-1 K
      Element corr = (gen(dq, "a", -1) * gen(dq, "K")).scaled(Scalar::integer(R, -1));
      dq->set_rule(3, 2, 0, corr);
    }
    dq->set_rule(4, 0, 2);   // F K = q^2 K F
    dq->set_rule(4, 1, 1);   // F a = q a F
    dq->set_rule(4, 2, 0);   // F E = E F
    dq->set_rule(4, 3, 1);   // F c = q c F
    dq->set_rule(5, 0, -1);  // b K = q^-1 K b
    dq->set_rule(5, 1, -1);  // b a = q^-1 a b
    dq->set_rule(5, 2, 0);   // b E = E b
    dq->set_rule(5, 3, 0);   // b c = c b
    {                        // b F = q F b - q a
      Element corr = gen(dq, "a").scaled(-Scalar::qpow(R, 1));
      dq->set_rule(5, 4, 1, corr);
    }
    algebras_["Dq"] = dq;
  }
  {  // quantum plane x y = q^2 y x
    auto pi = AlgebraSpec::create("Pi", R, {{"x", false}, {"y", false}});
    pi->set_rule(1, 0, -2);
    algebras_["Pi"] = pi;
  }
  {  // centralizer of K, PBW order (K, x1, y1, x2, y2)
    auto c = AlgebraSpec::create(
        "C", R, {{"K", true}, {"x1", false}, {"y1", false}, {"x2", false}, {"y2", false}});
    c->set_rule(1, 0, 0);
    c->set_rule(2, 0, 0);
    c->set_rule(2, 1, -2, gen(c, "K").scaled(-Scalar::qpow(R, -2)));  // y1 x1
    c->set_rule(3, 0, 0);
    c->set_rule(3, 1, 2);   // x2 x1 = q^2 x1 x2
    c->set_rule(3, 2, -2);  // x2 y1 = q^-2 y1 x2
    c->set_rule(4, 0, 0);
    c->set_rule(4, 1, -2);  // y2 x1 = q^-2 x1 y2
    c->set_rule(4, 2, 2);   // y2 y1 = q^2 y1 y2
    c->set_rule(4, 3, 2, Element::scalar(c, -Scalar::qpow(R, 3)));  // y2 x2
    algebras_["C"] = c;
  }
  {  // centralizer at K = chi
    auto c = AlgebraSpec::create(
        "Cchi", R, {{"x1", false}, {"y1", false}, {"x2", false}, {"y2", false}});
    Scalar chi = Scalar::param(R, "chi");
    c->set_rule(1, 0, -2, Element::scalar(c, -Scalar::qpow(R, -2) * chi));
    c->set_rule(2, 0, 2);
    c->set_rule(2, 1, -2);
    c->set_rule(3, 0, -2);
    c->set_rule(3, 1, 2);
    c->set_rule(3, 2, 2, Element::scalar(c, -Scalar::qpow(R, 3)));
    algebras_["Cchi"] = c;
  }
  {  // centralizer of a, PBW order (a, E, w, t1, t2)
    auto a = AlgebraSpec::create(
        "A", R, {{"a", true}, {"E", false}, {"w", false}, {"t1", false}, {"t2", false}});
    a->set_rule(1, 0, 0);
    a->set_rule(2, 0, 0);
    a->set_rule(2, 1, -2, gen(a, "a").scaled(-Scalar::qpow(R, -2)));  // w E
    a->set_rule(3, 0, 0);
    a->set_rule(3, 1, 2);   // t1 E = q^2 E t1
    a->set_rule(3, 2, -2);  // t1 w = q^-2 w t1
    a->set_rule(4, 0, 0);
    a->set_rule(4, 1, -2);  // t2 E = q^-2 E t2
    a->set_rule(4, 2, 2);   // t2 w = q^2 w t2
    a->set_rule(4, 3, 2, Element::scalar(a, -Scalar::qpow(R, 3)));  // t2 t1
    algebras_["A"] = a;
  }
  {  // centralizer of a at a = chi
    auto a = AlgebraSpec::create(
        "Achi", R, {{"E", false}, {"w", false}, {"t1", false}, {"t2", false}});
    Scalar chi = Scalar::param(R, "chi");
    a->set_rule(1, 0, -2, Element::scalar(a, -Scalar::qpow(R, -2) * chi));
    a->set_rule(2, 0, 2);
    a->set_rule(2, 1, -2);
    a->set_rule(3, 0, -2);
    a->set_rule(3, 1, 2);
    a->set_rule(3, 2, 2, Element::scalar(a, -Scalar::qpow(R, 3)));
    algebras_["Achi"] = a;
  }
  {  // simple quantum torus on (a, b, c, K)
    auto t = AlgebraSpec::create(
        "T", R, {{"a", true}, {"b", true}, {"c", true}, {"K", true}});
    t->set_rule(1, 0, -1);
    t->set_rule(2, 0, -1);
    t->set_rule(2, 1, 0);
    t->set_rule(3, 0, -1);
    t->set_rule(3, 1, 1);
    t->set_rule(3, 2, -1);
    algebras_["T"] = t;
  }
  algebras_["Oq2"] = tensor_power(algebras_["Oq"], 2);
  algebras_["Oq3"] = tensor_power(algebras_["Oq"], 3);
  algebras_["Uq2"] = tensor_power(algebras_["Uq"], 2);
  algebras_["Uq3"] = tensor_power(algebras_["Uq"], 3);
}

void Catalog::build_named() {
  const RingPtr& R = ring_;
  auto one = Scalar::integer(R, 1);
  auto dq = algebras_.at("Dq");
  auto reg = [&](const std::string& alg, const std::string& name, Element v) {
    AlgebraPtr a = algebras_.at(alg);
    if (a->gen_index(name) >= 0) throw Error("named element collides with generator: " + name);
    if (R->index(name) >= 0) throw Error("named element collides with parameter: " + name);
    if (!named_[alg].emplace(name, std::move(v)).second)
      throw Error("duplicate named element: " + name);
  };

  Element phi = (gen(dq, "F") * gen(dq, "b")).scaled(one - Scalar::qpow(R, 2)) +
                gen(dq, "a").scaled(Scalar::qpow(R, 2));
  Element psi = (gen(dq, "E") * gen(dq, "c")).scaled(one - Scalar::qpow(R, -2)) +
                (gen(dq, "a", -1) * gen(dq, "K")).scaled(Scalar::qpow(R, -2));
  reg("Dq", "phi", phi);
  reg("Dq", "psi", psi);

  Element x1 = gen(dq, "a", 2) * gen(dq, "E");
  Element y1 = gen(dq, "a", -1) * gen(dq, "c");
  Element x2 = gen(dq, "a", -2) * gen(dq, "F");
  Element y2 = gen(dq, "a") * gen(dq, "b");
  reg("Dq", "x1", x1);
  reg("Dq", "y1", y1);
  reg("Dq", "x2", x2);
  reg("Dq", "y2", y2);
  reg("Dq", "u", gen(dq, "a") * psi);
  reg("Dq", "v", gen(dq, "a", -1) * phi);
  reg("Dq", "w", (gen(dq, "a", 2) * gen(dq, "K", -1) * gen(dq, "c")).scaled(Scalar::qpow(R, -1)));
  reg("Dq", "t1", gen(dq, "K") * gen(dq, "F"));
  reg("Dq", "t2",
      (gen(dq, "a", -1) * gen(dq, "K", -1) * gen(dq, "b")).scaled(Scalar::qpow(R, 3)));
  // theta = v*x1 and omega = u*x2, written out inside the double; the first
  // collapses to a*phi*E on the nose, the second picks up a factor q^2
  reg("Dq", "theta", (gen(dq, "a", -1) * phi) * (gen(dq, "a", 2) * gen(dq, "E")));
  reg("Dq", "omega", (gen(dq, "a") * psi) * (gen(dq, "a", -2) * gen(dq, "F")));

  auto uq = algebras_.at("Uq");
  reg("Uq", "C", gen(uq, "E") * gen(uq, "F"));

  auto oq = algebras_.at("Oq");
  reg("Oq", "x", gen(oq, "a") * gen(oq, "b"));
  reg("Oq", "y", gen(oq, "c") * gen(oq, "a", -1));

  auto c = algebras_.at("C");
  Element u_c = (gen(c, "y1") * gen(c, "x1")).scaled(Scalar::qpow(R, 2) - one) + gen(c, "K");
  Element v_c = (gen(c, "y2") * gen(c, "x2")).scaled(Scalar::qpow(R, -3) - Scalar::qpow(R, -1)) +
                Element::one(c);
  reg("C", "u", u_c);
  reg("C", "v", v_c);
  reg("C", "theta", v_c * gen(c, "x1"));
  reg("C", "omega", u_c * gen(c, "x2"));

  auto cchi = algebras_.at("Cchi");
  Scalar chi = Scalar::param(R, "chi");
  Element u_cc = (gen(cchi, "y1") * gen(cchi, "x1")).scaled(Scalar::qpow(R, 2) - one) +
                 Element::scalar(cchi, chi);
  Element v_cc = (gen(cchi, "y2") * gen(cchi, "x2"))
                     .scaled(Scalar::qpow(R, -3) - Scalar::qpow(R, -1)) +
                 Element::one(cchi);
  reg("Cchi", "u", u_cc);
  reg("Cchi", "v", v_cc);
  reg("Cchi", "theta", v_cc * gen(cchi, "x1"));
  reg("Cchi", "omega", u_cc * gen(cchi, "x2"));

  auto aa = algebras_.at("A");
  Element u_a = (gen(aa, "w") * gen(aa, "E")).scaled(Scalar::qpow(R, 2) - one) + gen(aa, "a");
  Element v_a = (gen(aa, "t2") * gen(aa, "t1")).scaled(Scalar::qpow(R, -3) - Scalar::qpow(R, -1)) +
                Element::one(aa);
  reg("A", "u", u_a);
  reg("A", "v", v_a);
}

void Catalog::build_morphisms() {
  const RingPtr& R = ring_;
  auto dq = algebras_.at("Dq");
  auto reg = [&](MorphismSpec m) { morphisms_.emplace(m.name(), std::move(m)); };

  {  // involution * on the Heisenberg double (anti-automorphism of order 2)
    std::vector<Element> img(6);
    img[static_cast<size_t>(dq->gen_index("K"))] = gen(dq, "K");
    img[static_cast<size_t>(dq->gen_index("a"))] = gen(dq, "a", -1);
    img[static_cast<size_t>(dq->gen_index("E"))] =
        (gen(dq, "K") * gen(dq, "F")).scaled(Scalar::qpow(R, 1));
    img[static_cast<size_t>(dq->gen_index("c"))] = gen(dq, "b").scaled(-Scalar::qpow(R, -1));
    img[static_cast<size_t>(dq->gen_index("F"))] =
        (gen(dq, "K", -1) * gen(dq, "E")).scaled(Scalar::qpow(R, 1));
    img[static_cast<size_t>(dq->gen_index("b"))] = gen(dq, "c").scaled(-Scalar::qpow(R, 1));
    reg(MorphismSpec("invol", dq, dq, std::move(img), true));
  }
  {  // quantum plane inside the coordinate algebra
    auto pi = algebras_.at("Pi");
    auto oq = algebras_.at("Oq");
    std::vector<Element> img = {gen(oq, "a") * gen(oq, "b"), gen(oq, "c") * gen(oq, "a", -1)};
    reg(MorphismSpec("emb:Pi:Oq", pi, oq, std::move(img)));
  }
  {  // centralizer of K inside the double
    auto c = algebras_.at("C");
    std::vector<Element> img(5);
    img[0] = gen(dq, "K");
    img[1] = named("x1", "Dq");
    img[2] = named("y1", "Dq");
    img[3] = named("x2", "Dq");
    img[4] = named("y2", "Dq");
    reg(MorphismSpec("emb:C:Dq", c, dq, std::move(img)));
  }
  {  // centralizer of a inside the double
    auto a = algebras_.at("A");
    std::vector<Element> img(5);
    img[0] = gen(dq, "a");
    img[1] = gen(dq, "E");
    img[2] = named("w", "Dq");
    img[3] = named("t1", "Dq");
    img[4] = named("t2", "Dq");
    reg(MorphismSpec("emb:A:Dq", a, dq, std::move(img)));
  }
  {  // the isomorphism between the two centralizers, and its inverse
    auto a = algebras_.at("A");
    auto c = algebras_.at("C");
    std::vector<Element> img = {gen(c, "K"), gen(c, "x1"), gen(c, "y1"), gen(c, "x2"),
                                gen(c, "y2")};
    reg(MorphismSpec("Phi", a, c, std::move(img)));
    std::vector<Element> inv = {gen(a, "a"), gen(a, "E"), gen(a, "w"), gen(a, "t1"),
                                gen(a, "t2")};
    reg(MorphismSpec("PhiInv", c, a, std::move(inv)));
  }
  {  // conjugation by a on the centralizer of K
    auto c = algebras_.at("C");
    std::vector<Element> img = {gen(c, "K").scaled(Scalar::qpow(R, -1)), gen(c, "x1"),
                                gen(c, "y1").scaled(Scalar::qpow(R, -1)),
                                gen(c, "x2").scaled(Scalar::qpow(R, 1)),
                                gen(c, "y2").scaled(Scalar::qpow(R, -1))};
    reg(MorphismSpec("tau_a", c, c, std::move(img)));
  }
  {  // conjugation by K on the centralizer of a
    auto a = algebras_.at("A");
    std::vector<Element> img = {gen(a, "a").scaled(Scalar::qpow(R, 1)),
                                gen(a, "E").scaled(Scalar::qpow(R, -2)),
                                gen(a, "w").scaled(Scalar::qpow(R, 3)),
                                gen(a, "t1").scaled(Scalar::qpow(R, 2)),
                                gen(a, "t2").scaled(Scalar::qpow(R, -2))};
    reg(MorphismSpec("tau_K", a, a, std::move(img)));
  }
  const MorphismSpec& star = morphisms_.at("invol");
  named_["Dq"].emplace("phistar", star.apply(named("phi", "Dq")));
  named_["Dq"].emplace("psistar", star.apply(named("psi", "Dq")));
}

void Catalog::build_matrices() {
  // skew exponents of the localized double in the order (a, b, c, K, psi, phi)
  const std::vector<std::vector<long>> D = {
      {0, 1, 1, 1, 1, 0},   {-1, 0, 0, -1, 0, 1},  {-1, 0, 0, 1, 0, -1},
      {-1, 1, -1, 0, 1, -1}, {-1, 0, 0, -1, 0, -1}, {0, -1, 1, 1, 1, 0}};
  auto submatrix = [&](const std::vector<int>& keep) {
    std::vector<std::vector<long>> rows;
    for (int i : keep) {
      std::vector<long> row;
      for (int j : keep) row.push_back(D[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows);
  };
  matrices_["D"] = IntMatrix::from_rows(D);
  matrices_["D36"] = submatrix({0, 1, 3, 4});     // (a, b, K, psi)
  matrices_["D25"] = submatrix({0, 2, 3, 5});     // (a, c, K, phi)
  matrices_["D56"] = submatrix({0, 1, 2, 3});     // (a, b, c, K)
  matrices_["D356"] = submatrix({0, 1, 3});       // (a, b, K)
  matrices_["D256"] = submatrix({0, 2, 3});       // (a, c, K)
  // localized centralizer torus in the order (K, x1, x2, u, v)
  matrices_["CX"] = IntMatrix::from_rows({{0, 0, 0, 0, 0},
                                          {0, 0, -2, 2, 0},
                                          {0, 2, 0, 0, -2},
                                          {0, -2, 0, 0, 0},
                                          {0, 0, 2, 0, 0}});
  matrices_["CX4"] = IntMatrix::from_rows({{0, -2, 2, 0}, {2, 0, 0, -2}, {-2, 0, 0, 0},
                                           {0, 2, 0, 0}});
  matrices_["UqE"] = IntMatrix::from_rows({{0, 2}, {-2, 0}});
}

void Catalog::build_suite() {
  auto add = [&](std::string id, std::string alg, std::string lhs, std::string anchor) {
    suite_.push_back(IdentityEntry{std::move(id), std::move(alg), IdentityEntry::Kind::Expr,
                                   std::move(lhs), "0", std::move(anchor)});
  };
  auto num = [](long v) { return std::to_string(v); };

  add("sanity.one", "Dq", "1*1 - 1", "registry sanity row");

  for (const char* u : {"K", "E", "F"})
    for (const char* x : {"a", "b", "c"})
      suite_.push_back(IdentityEntry{std::string("cross.") + u + "." + x, "Dq",
                                     IdentityEntry::Kind::CrossRelation, u, x,
                                     "heisenberg-double cross relation"});

  for (int i = 1; i <= 6; ++i) {
    std::string coef = "((1 - q^-" + num(2 * i) + ")/(1 - q^-2))";
    add("straighten.Fb.i" + num(i), "Dq",
        "F*b^" + num(i) + " - q^-" + num(i) + "*b^" + num(i) + "*F - " + coef + "*a*b^" +
            num(i - 1),
        "straightening of F past powers of b");
    add("straighten.Ec.i" + num(i), "Dq",
        "E*c^" + num(i) + " - c^" + num(i) + "*E - " + coef + "*c^" + num(i - 1) + "*a^-1*K",
        "straightening of E past powers of c");
  }

  const char* table[][3] = {
      {"phi", "K", "q"},  {"phi", "a", "1"},    {"phi", "E", "1"},  {"phi", "b", "q^-1"},
      {"phi", "F", "q"},  {"phi", "c", "q"},    {"psi", "K", "q^-1"}, {"psi", "a", "q^-1"},
      {"psi", "E", "1"},  {"psi", "b", "1"},    {"psi", "F", "q^-1"}, {"psi", "c", "1"}};
  for (const auto& row : table)
    add(std::string("normal.") + row[0] + "." + row[1], "Dq",
        std::string(row[0]) + "*" + row[1] + " - " + row[2] + "*" + row[1] + "*" + row[0],
        "normal-element commutation table");

  add("normal.phipsi", "Dq", "phi*psi - q*psi*phi", "normal-element q-commutation");
  add("invol.psi", "Dq", "psi - q^-3*K*phistar", "involution expression for psi");
  add("invol.phi", "Dq", "phi - q^2*K^-1*psistar", "involution expression for phi");

  for (const char* g : {"K", "E", "F"})
    add(std::string("center.Uq.C.") + g, "Uq", std::string("C*") + g + " - " + g + "*C",
        "centrality of C = E*F");

  const char* uv[][3] = {{"x1", "u", "q^2"}, {"x2", "u", "1"},    {"y1", "u", "q^-2"},
                         {"y2", "u", "1"},   {"x1", "v", "1"},    {"x2", "v", "q^-2"},
                         {"y1", "v", "1"},   {"y2", "v", "q^2"}};
  for (const auto& row : uv)
    add(std::string("uvnorm.") + row[0] + row[1], "C",
        std::string(row[0]) + "*" + row[1] + " - " + row[2] + "*" + row[1] + "*" + row[0],
        "normality of u and v in the centralizer");

  for (int i = 1; i <= 6; ++i) {
    std::string coef = "((1 - q^" + num(2 * i) + ")/(1 - q^2))";
    add("straighten.x1y1.i" + num(i), "C",
        "x1^" + num(i) + "*y1 - q^" + num(2 * i) + "*y1*x1^" + num(i) + " - " + coef +
            "*K*x1^" + num(i - 1),
        "centralizer straightening of x1 powers");
    add("straighten.y2x2.j" + num(i), "C",
        "y2*x2^" + num(i) + " - q^" + num(2 * i) + "*x2^" + num(i) + "*y2 + q^3*" + coef +
            "*x2^" + num(i - 1),
        "centralizer straightening of x2 powers");
  }

  add("embed.u", "Dq", "(q^2 - 1)*y1*x1 + K - a*psi", "u equals a*psi inside the double");
  add("embed.v", "Dq", "(q^-3 - q^-1)*y2*x2 + 1 - a^-1*phi",
      "v equals a^-1*phi inside the double");
  add("embed.theta", "Dq", "v*x1 - a*phi*E", "theta equals a*phi*E inside the double");
  add("embed.omega", "Dq", "u*x2 - q^2*a^-1*psi*F",
      "omega equals q^2*a^-1*psi*F inside the double");

  const char* arel[][2] = {{"arel.Ew", "E*w - q^2*w*E - a"},
                           {"arel.t1t2", "t1*t2 - q^-2*t2*t1 - q"},
                           {"arel.t1E", "t1*E - q^2*E*t1"},
                           {"arel.t2E", "t2*E - q^-2*E*t2"},
                           {"arel.t1w", "t1*w - q^-2*w*t1"},
                           {"arel.t2w", "t2*w - q^2*w*t2"}};
  for (const auto& row : arel)
    add(row[0], "A", row[1], "defining relations of the centralizer of a");
}

}  // namespace qe2
