#include "qe2/hopf.hpp"

namespace qe2 {
namespace hopf {

namespace {

const Catalog& cat() { return Catalog::get(); }

Element gen(const AlgebraPtr& a, const char* n, long e = 1) {
  return Element::generator(a, n, e);
}

/// Remaps an element of A^m into A^n, sending copy k to copy copy_map[k].
Element remap_copies(const Element& x, int ngens_base, const AlgebraPtr& target,
                     const std::vector<int>& copy_map) {
  Element r = Element::zero(target);
  for (const auto& [m, c] : x.terms()) {
    Monomial nm{Expvec(static_cast<size_t>(target->ngens()), 0)};
    for (size_t k = 0; k < copy_map.size(); ++k)
      for (int i = 0; i < ngens_base; ++i)
        nm.e[static_cast<size_t>(copy_map[k] * ngens_base + i)] =
            m.e[k * static_cast<size_t>(ngens_base) + static_cast<size_t>(i)];
    r.add_term(nm, c);
  }
  return r;
}

MorphismSpec make_coproduct(const std::string& which) {
  auto base = cat().algebra(which);
  auto t2 = cat().algebra(which + "2");
  const int g = base->ngens();
  auto lift = [&](const char* name, int copy) {
    return embed_in_copy(gen(base, name), t2, copy);
  };
  std::vector<Element> img(static_cast<size_t>(g));
  if (which == "Oq") {
    img[0] = lift("a", 0) * lift("a", 1);
    img[1] = lift("b", 0) * embed_in_copy(gen(base, "a", -1), t2, 1) + lift("a", 0) * lift("b", 1);
    img[2] = lift("c", 0) * lift("a", 1) + embed_in_copy(gen(base, "a", -1), t2, 0) * lift("c", 1);
  } else if (which == "Uq") {
    img[0] = lift("K", 0) * lift("K", 1);
    img[1] = lift("E", 0) * lift("K", 1) + lift("E", 1);
    img[2] = lift("F", 0) + embed_in_copy(gen(base, "K", -1), t2, 0) * lift("F", 1);
  } else {
    throw Error("coproduct: unknown Hopf algebra " + which);
  }
  return MorphismSpec("Delta:" + which, base, t2, std::move(img));
}

MorphismSpec make_antipode(const std::string& which) {
  auto base = cat().algebra(which);
  const RingPtr& R = base->ring();
  std::vector<Element> img(static_cast<size_t>(base->ngens()));
  if (which == "Oq") {
    img[0] = gen(base, "a", -1);
    img[1] = gen(base, "b").scaled(-Scalar::qpow(R, -1));
    img[2] = gen(base, "c").scaled(-Scalar::qpow(R, 1));
  } else if (which == "Uq") {
    img[0] = gen(base, "K", -1);
    img[1] = (gen(base, "E") * gen(base, "K", -1)).scaled(Scalar::integer(R, -1));
    img[2] = (gen(base, "K") * gen(base, "F")).scaled(Scalar::integer(R, -1));
  } else {
    throw Error("antipode: unknown Hopf algebra " + which);
  }
  return MorphismSpec("S:" + which, base, base, std::move(img), true);
}

}  // namespace

const MorphismSpec& coproduct_morphism(const std::string& which) {
  static const MorphismSpec oq = make_coproduct("Oq");
  static const MorphismSpec uq = make_coproduct("Uq");
  if (which == "Oq") return oq;
  if (which == "Uq") return uq;
  throw Error("coproduct: unknown Hopf algebra " + which);
}

Element coproduct(const Element& x, const std::string& which) {
  return coproduct_morphism(which).apply(x);
}

const MorphismSpec& antipode_morphism(const std::string& which) {
  static const MorphismSpec oq = make_antipode("Oq");
  static const MorphismSpec uq = make_antipode("Uq");
  if (which == "Oq") return oq;
  if (which == "Uq") return uq;
  throw Error("antipode: unknown Hopf algebra " + which);
}

Scalar counit(const Element& x) {
  const auto& alg = x.alg();
  Scalar r = Scalar::integer(alg->ring(), 0);
  for (const auto& [m, c] : x.terms()) {
    bool live = true;
    for (int i = 0; i < alg->ngens() && live; ++i)
      if (m.e[static_cast<size_t>(i)] != 0 && !alg->gen(i).invertible) live = false;
    if (live) r += c;
  }
  return r;
}

namespace {

std::pair<Element, Element> split_tensor(const Monomial& m, const AlgebraPtr& base) {
  const int g = base->ngens();
  Monomial l{Expvec(static_cast<size_t>(g), 0)}, r{Expvec(static_cast<size_t>(g), 0)};
  for (int i = 0; i < g; ++i) {
    l.e[static_cast<size_t>(i)] = m.e[static_cast<size_t>(i)];
    r.e[static_cast<size_t>(i)] = m.e[static_cast<size_t>(g + i)];
  }
  Element le = Element::zero(base), re = Element::zero(base);
  Scalar one = Scalar::integer(base->ring(), 1);
  le.add_term(l, one);
  re.add_term(r, one);
  return {le, re};
}

}  // namespace

Element contract_left(const MorphismSpec& f, const Element& t) {
  const AlgebraPtr base = f.source();
  Element out = Element::zero(f.target());
  for (const auto& [m, c] : t.terms()) {
    auto [l, r] = split_tensor(m, base);
    out += (f.apply(l) * r).scaled(c);
  }
  return out;
}

Element contract_right(const MorphismSpec& f, const Element& t) {
  const AlgebraPtr base = f.source();
  Element out = Element::zero(f.target());
  for (const auto& [m, c] : t.terms()) {
    auto [l, r] = split_tensor(m, base);
    out += (l * f.apply(r)).scaled(c);
  }
  return out;
}

Element counit_left(const Element& t, const AlgebraPtr& base) {
  Element out = Element::zero(base);
  for (const auto& [m, c] : t.terms()) {
    auto [l, r] = split_tensor(m, base);
    out += r.scaled(c * counit(l));
  }
  return out;
}

Element counit_right(const Element& t, const AlgebraPtr& base) {
  Element out = Element::zero(base);
  for (const auto& [m, c] : t.terms()) {
    auto [l, r] = split_tensor(m, base);
    out += l.scaled(c * counit(r));
  }
  return out;
}

std::string tensor_str(const Element& t, const AlgebraPtr& base) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : t.terms()) {
    if (!out.empty()) out += " + ";
    auto [l, r] = split_tensor(m, base);
    out += "(" + c.str() + ")*" + l.str() + " (x) " + r.str();
  }
  return out;
}

AxiomReport check_hopf_axioms(const std::string& which) {
  AxiomReport rep;
  auto base = cat().algebra(which);
  auto t2 = cat().algebra(which + "2");
  auto t3 = cat().algebra(which + "3");
  const MorphismSpec& delta = coproduct_morphism(which);
  const MorphismSpec& S = antipode_morphism(which);
  const int g = base->ngens();

  auto record = [&](const std::string& what, const Element& residue) {
    ++rep.checked;
    if (!residue.is_zero()) {
      rep.ok = false;
      rep.failures.emplace_back(what, residue.str());
    }
  };

  {  // the structure maps themselves respect the defining relations
    auto drep = delta.check();
    ++rep.checked;
    if (!drep.ok) {
      rep.ok = false;
      rep.failures.emplace_back("Delta morphism check", drep.failures.front().second);
    }
    auto srep = S.check();
    ++rep.checked;
    if (!srep.ok) {
      rep.ok = false;
      rep.failures.emplace_back("antipode morphism check", srep.failures.front().second);
    }
  }

  // (Delta x id) and (id x Delta) out of the tensor square
  std::vector<Element> dl(static_cast<size_t>(t2->ngens())), dr(static_cast<size_t>(t2->ngens()));
  for (int i = 0; i < g; ++i) {
    dl[static_cast<size_t>(i)] = remap_copies(delta.image(i), g, t3, {0, 1});
    dl[static_cast<size_t>(g + i)] = embed_in_copy(gen(base, base->gen(i).name.c_str()), t3, 2);
    dr[static_cast<size_t>(i)] = embed_in_copy(gen(base, base->gen(i).name.c_str()), t3, 0);
    dr[static_cast<size_t>(g + i)] = remap_copies(delta.image(i), g, t3, {1, 2});
  }
  MorphismSpec delta_left("DxI:" + which, t2, t3, std::move(dl));
  MorphismSpec delta_right("IxD:" + which, t2, t3, std::move(dr));

  for (int i = 0; i < g; ++i) {
    Element ge = gen(base, base->gen(i).name.c_str());
    Element dg = delta.apply(ge);
    record("coassociativity on " + base->gen(i).name,
           delta_left.apply(dg) - delta_right.apply(dg));
    record("counit (eps x id) on " + base->gen(i).name, counit_left(dg, base) - ge);
    record("counit (id x eps) on " + base->gen(i).name, counit_right(dg, base) - ge);
    Element target = Element::scalar(base, counit(ge));
    record("antipode m(S x id) on " + base->gen(i).name, contract_left(S, dg) - target);
    record("antipode m(id x S) on " + base->gen(i).name, contract_right(S, dg) - target);
  }
  return rep;
}

Scalar pairing(const std::string& ugen, const std::string& ogen) {
  const RingPtr& R = cat().ring();
  if (ugen == "K" && ogen == "a") return Scalar::qpow(R, -1);
  if (ugen == "K" && ogen == "a^-1") return Scalar::qpow(R, 1);
  if (ugen == "K^-1" && ogen == "a") return Scalar::qpow(R, 1);
  if (ugen == "K^-1" && ogen == "a^-1") return Scalar::qpow(R, -1);
  if (ugen == "E" && ogen == "c") return Scalar::integer(R, 1);
  if (ugen == "F" && ogen == "b") return Scalar::integer(R, 1);
  return Scalar::integer(R, 0);
}

namespace {

// Action of a U-side generator on a single coordinate generator power step.
// Steps are a, a^-1, b, c. The table lists the nonzero values only.
Element act_on_letter(const std::string& u, int letter_gen, int letter_exp,
                      const AlgebraPtr& oq) {
  const RingPtr& R = oq->ring();
  const std::string n = oq->gen(letter_gen).name;
  Element letter = Element::generator(oq, letter_gen, letter_exp);
  if (u == "K" || u == "K^-1") {
    long s = 0;
    if (n == "a") s = -letter_exp;
    if (n == "b") s = 1;
    if (n == "c") s = -1;
    if (u == "K^-1") s = -s;
    return letter.scaled(Scalar::qpow(R, s));
  }
  if (u == "E") {
    if (n == "c") return Element::generator(oq, "a", -1);
    return Element::zero(oq);
  }
  if (u == "F") {
    if (n == "b") return Element::generator(oq, "a");
    return Element::zero(oq);
  }
  throw Error("act: unknown U-side generator " + u);
}

// Recursive module-algebra action on a word of single letters.
Element act_word(const std::string& u, const std::vector<std::pair<int, int>>& letters,
                 size_t pos, const AlgebraPtr& oq) {
  if (pos == letters.size()) {
    // action on 1 is the counit of u
    if (u == "E" || u == "F") return Element::zero(oq);
    return Element::one(oq);
  }
  auto [g, e] = letters[pos];
  if (u == "K" || u == "K^-1") {
    return act_on_letter(u, g, e, oq) * act_word(u, letters, pos + 1, oq);
  }
  Element head = Element::generator(oq, g, e);
  if (u == "E") {
    // E.(x w) = (E.x)(K.w) + x (E.w)
    Element t1 = act_on_letter("E", g, e, oq) * act_word("K", letters, pos + 1, oq);
    Element t2 = head * act_word("E", letters, pos + 1, oq);
    return t1 + t2;
  }
  if (u == "F") {
    // F.(x w) = (F.x) w + (K^-1.x)(F.w)
    Element rest = Element::one(oq);
    for (size_t k = pos + 1; k < letters.size(); ++k)
      rest = rest * Element::generator(oq, letters[k].first, letters[k].second);
    Element t1 = act_on_letter("F", g, e, oq) * rest;
    Element t2 = act_on_letter("K^-1", g, e, oq) * act_word("F", letters, pos + 1, oq);
    return t1 + t2;
  }
  throw Error("act: unknown U-side generator " + u);
}

}  // namespace

Element act(const std::string& ugen, const Element& x) {
  auto oq = cat().algebra("Oq");
  if (x.alg().get() != oq.get()) throw Error("act: element must live in the coordinate algebra");
  Element out = Element::zero(oq);
  for (const auto& [m, c] : x.terms()) {
    std::vector<std::pair<int, int>> letters;  // single steps, a split into +/-1
    for (int i = 0; i < oq->ngens(); ++i) {
      int e = m.e[static_cast<size_t>(i)];
      int step = e > 0 ? 1 : -1;
      for (int k = 0; k < std::abs(e); ++k) letters.emplace_back(i, step);
    }
    out += act_word(ugen, letters, 0, oq).scaled(c);
  }
  return out;
}

CrossCheck cross_relation(const std::string& ugen, const std::string& ogen) {
  auto oq = cat().algebra("Oq");
  auto dq = cat().algebra("Dq");
  // inclusion of the coordinate algebra into the double
  static const MorphismSpec incl("incl:Oq:Dq", oq, dq,
                                 {gen(dq, "a"), gen(dq, "b"), gen(dq, "c")});
  Element x = Element::generator(oq, ogen);
  CrossCheck out;
  if (ugen == "K") {
    out.smash = incl.apply(act("K", x)) * gen(dq, "K");
  } else if (ugen == "E") {
    out.smash = incl.apply(act("E", x)) * gen(dq, "K") + incl.apply(x) * gen(dq, "E");
  } else if (ugen == "F") {
    out.smash = incl.apply(act("F", x)) + incl.apply(act("K^-1", x)) * gen(dq, "F");
  } else {
    throw Error("cross_relation: unknown U-side generator " + ugen);
  }
  out.rule = Element::generator(dq, ugen) * Element::generator(dq, ogen);
  out.match = out.smash == out.rule;
  return out;
}

DeltaPowerResult delta_power(long m, long n, long cap) {
  if (m < 0 || n < 0 || m > cap || n > cap) throw Error("delta_power: index outside the cap");
  auto oq = cat().algebra("Oq");
  auto t2 = cat().algebra("Oq2");
  const RingPtr& R = oq->ring();
  const Element& x = cat().named("x", "Oq");
  const Element& y = cat().named("y", "Oq");
  DeltaPowerResult res;
  res.direct = coproduct(x, "Oq").pow(m) * coproduct(y, "Oq").pow(n);
  res.closed = Element::zero(t2);
  for (long i = 0; i <= m; ++i)
    for (long j = 0; j <= n; ++j) {
      Scalar coef = qbinom(R, m, i, 2) * qbinom(R, n, j, 2);
      Element left = x.pow(i) * gen(oq, "a", 2 * m - 2 * (i + j)) * y.pow(n - j);
      Element right = x.pow(m - i) * y.pow(j);
      res.closed += (embed_in_copy(left, t2, 0) * embed_in_copy(right, t2, 1)).scaled(coef);
    }
  res.equal = res.direct == res.closed;
  return res;
}

}  // namespace hopf
}  // namespace qe2
