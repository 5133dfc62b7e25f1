#include "qe2/repmod.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace qe2 {
namespace repmod {

ModuleSpec::ModuleSpec(std::string name, AlgebraPtr alg, int rank, std::vector<bool> nonneg)
    : name_(std::move(name)),
      alg_(std::move(alg)),
      rank_(rank),
      nonneg_(std::move(nonneg)),
      act_(static_cast<size_t>(alg_->ngens())),
      inv_(static_cast<size_t>(alg_->ngens())) {
  if (static_cast<int>(nonneg_.size()) != rank_) throw Error("ModuleSpec: rank mismatch");
}

ModVector ModuleSpec::basis_vector(const Index& idx) const {
  ModVector v;
  v[idx] = Scalar::integer(alg_->ring(), 1);
  return v;
}

void add_scaled(ModVector& dst, const ModVector& src, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, s] : src) {
    auto it = dst.find(i);
    if (it == dst.end()) {
      Scalar t = s * c;
      if (!t.is_zero()) dst.emplace(i, std::move(t));
    } else {
      it->second += s * c;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

ModVector ModuleSpec::apply_gen(int g, long exp, const ModVector& v) const {
  const Action* act = nullptr;
  if (exp >= 0) {
    act = &act_.at(static_cast<size_t>(g));
  } else {
    act = &inv_.at(static_cast<size_t>(g));
    if (!*act)
      throw Error("module " + name_ + ": no inverse action for " + alg_->gen(g).name);
  }
  if (!*act) throw Error("module " + name_ + ": no action for " + alg_->gen(g).name);
  ModVector cur = v;
  for (long k = 0; k < std::abs(exp); ++k) {
    ModVector next;
    for (const auto& [idx, c] : cur)
      for (const auto& t : (*act)(idx)) {
        if (t.c.is_zero()) continue;
        auto it = next.find(t.idx);
        if (it == next.end()) {
          Scalar s = t.c * c;
          if (!s.is_zero()) next.emplace(t.idx, std::move(s));
        } else {
          it->second += t.c * c;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    cur = std::move(next);
  }
  return cur;
}

ModVector ModuleSpec::act_element(const Element& e, const ModVector& v) const {
  ModVector out;
  for (const auto& [m, c] : e.terms()) {
    ModVector cur = v;
    for (int g = alg_->ngens() - 1; g >= 0; --g) {
      long exp = m.e[static_cast<size_t>(g)];
      if (exp != 0) cur = apply_gen(g, exp, cur);
    }
    add_scaled(out, cur, c);
  }
  return out;
}

std::vector<Index> ModuleSpec::window(long bound) const {
  std::vector<Index> out;
  Index idx(static_cast<size_t>(rank_), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == rank_) {
      out.push_back(idx);
      return;
    }
    long lo = nonneg_[static_cast<size_t>(pos)] ? 0 : -bound;
    for (long v = lo; v <= bound; ++v) {
      idx[static_cast<size_t>(pos)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

std::string vec_str(const ModVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*e[";
    for (size_t k = 0; k < i.size(); ++k) s += (k ? "," : "") + std::to_string(i[k]);
    s += "]";
  }
  return s;
}

std::string idx_str(const Index& i) {
  std::string s = "[";
  for (size_t k = 0; k < i.size(); ++k) s += (k ? "," : "") + std::to_string(i[k]);
  return s + "]";
}

}  // namespace

std::string AuditFailure::str() const { return rule + " at " + idx_str(index) + ": " + residue; }

AuditReport relation_audit(const ModuleSpec& m, long window) {
  AuditReport rep;
  const AlgebraPtr& a = m.alg();
  std::vector<Index> pts = m.window(window);
  auto record = [&](const std::string& what, const Index& at, const ModVector& residue) {
    ++rep.checked;
    if (!residue.empty()) {
      rep.ok = false;
      if (rep.failures.size() < 16)
        rep.failures.push_back(AuditFailure{what, at, vec_str(residue)});
    }
  };
  Scalar minus_one = Scalar::integer(a->ring(), -1);
  for (int j = 1; j < a->ngens(); ++j)
    for (int i = 0; i < j; ++i) {
      const PairRule& r = a->rule(j, i);
      for (const Index& p : pts) {
        ModVector v = m.basis_vector(p);
        ModVector lhs = m.apply_gen(j, 1, m.apply_gen(i, 1, v));
        ModVector rhs;
        if (r.has_swap)
          add_scaled(rhs, m.apply_gen(i, 1, m.apply_gen(j, 1, v)),
                     Scalar::qpow(a->ring(), r.dexp));
        if (r.corr != nullptr && !r.corr->is_zero())
          add_scaled(rhs, m.act_element(*r.corr, v), Scalar::integer(a->ring(), 1));
        add_scaled(lhs, rhs, minus_one);
        record(a->gen(j).name + "*" + a->gen(i).name, p, lhs);
      }
    }
  for (const auto& [key, corr] : a->inorder_rules())
    for (const Index& p : pts) {
      ModVector v = m.basis_vector(p);
      ModVector lhs = m.apply_gen(key.first, 1, m.apply_gen(key.second, 1, v));
      add_scaled(lhs, m.act_element(*corr, v), minus_one);
      record(a->gen(key.first).name + "*" + a->gen(key.second).name, p, lhs);
    }
  for (int g = 0; g < a->ngens(); ++g) {
    if (!a->gen(g).invertible) continue;
    for (const Index& p : pts) {
      ModVector v = m.basis_vector(p);
      ModVector r1 = m.apply_gen(g, 1, m.apply_gen(g, -1, v));
      add_scaled(r1, v, minus_one);
      record(a->gen(g).name + "*" + a->gen(g).name + "^-1", p, r1);
      ModVector r2 = m.apply_gen(g, -1, m.apply_gen(g, 1, v));
      add_scaled(r2, v, minus_one);
      record(a->gen(g).name + "^-1*" + a->gen(g).name, p, r2);
    }
  }
  return rep;
}

std::string audit_json(const ModuleSpec& m, const AuditReport& rep) {
  nlohmann::json j;
  j["module"] = m.name();
  j["checked"] = rep.checked;
  j["ok"] = rep.ok;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : rep.failures)
    j["failures"].push_back(
        {{"module", m.name()}, {"rule_id", f.rule}, {"index", f.index}, {"residue", f.residue}});
  return j.dump(2);
}

ConnectivityReport connectivity_probe(const ModuleSpec& m, long window) {
  ConnectivityReport rep;
  std::vector<Index> pts = m.window(window);
  std::map<Index, int> id;
  for (const Index& p : pts) id.emplace(p, static_cast<int>(id.size()));
  rep.vertices = static_cast<long>(pts.size());
  std::vector<std::vector<int>> fwd(pts.size()), bwd(pts.size());
  for (size_t k = 0; k < pts.size(); ++k) {
    ModVector v = m.basis_vector(pts[k]);
    for (int g = 0; g < m.alg()->ngens(); ++g) {
      for (int dir : {1, -1}) {
        if (dir < 0 && !m.has_inverse_action(g)) continue;
        for (const auto& [idx, c] : m.apply_gen(g, dir, v)) {
          auto it = id.find(idx);
          if (it == id.end() || it->second == static_cast<int>(k)) continue;
          fwd[k].push_back(it->second);
          bwd[static_cast<size_t>(it->second)].push_back(static_cast<int>(k));
          ++rep.edges;
        }
      }
    }
  }
  auto reach = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(pts.size(), false);
    std::deque<int> work{0};
    seen[0] = true;
    while (!work.empty()) {
      int v = work.front();
      work.pop_front();
      for (int w : adj[static_cast<size_t>(v)])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          work.push_back(w);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  rep.strongly_connected = !pts.empty() && reach(fwd) && reach(bwd);
  return rep;
}

// ---------------------------------------------------------------------------
// QGWA modules

namespace {

std::vector<ModTerm> one_term(Index idx, Scalar c) {
  if (c.is_zero()) return {};
  return {ModTerm{std::move(idx), std::move(c)}};
}

}  // namespace

ModuleSpec qgwa_torsion_module(const std::string& kind, const gwa::QgwaData& d,
                               const AlgebraPtr& spec) {
  const RingPtr R = spec->ring();
  if (spec->gen_index("y") < 0)
    throw Error("qgwa_torsion_module: expected the 3-generator presentation");
  const int H = spec->gen_index("h"), X = spec->gen_index("x"), Y = spec->gen_index("y");
  auto qp = [R](long e) { return Scalar::qpow(R, e); };
  const long Q = d.qexp;

  if (kind == "Wgamma") {
    Scalar gamma = Scalar::param(R, "gamma");
    ModuleSpec m("Wgamma", spec, 1, {false});
    m.set_action(H, [R, Q, gamma](const Index& i) {
      return one_term(i, Scalar::qpow(R, -Q * i[0]) * gamma);
    });
    m.set_inverse_action(H, [R, Q, gamma](const Index& i) {
      return one_term(i, (Scalar::qpow(R, -Q * i[0]) * gamma).inverse());
    });
    m.set_action(X, [R, Q, gamma, d](const Index& i) {
      Index j{i[0] + 1};
      if (i[0] >= 0) return one_term(j, Scalar::integer(R, 1));
      return one_term(j, gwa::qgwa_a_at(d, Scalar::qpow(R, -Q * i[0]) * gamma));
    });
    m.set_action(Y, [R, Q, gamma, d](const Index& i) {
      Index j{i[0] - 1};
      if (i[0] <= 0) return one_term(j, Scalar::integer(R, 1));
      return one_term(j, gwa::qgwa_a_at(d, Scalar::qpow(R, Q * (1 - i[0])) * gamma));
    });
    return m;
  }
  if (kind == "W") {
    if (!d.has_root) throw Error("qgwa_torsion_module: W needs a root of a(h)");
    Scalar zeta = d.zeta;
    ModuleSpec m("W", spec, 1, {true});
    m.set_action(H, [R, Q, zeta](const Index& i) {
      return one_term(i, Scalar::qpow(R, Q * i[0]) * zeta);
    });
    m.set_inverse_action(H, [R, Q, zeta](const Index& i) {
      return one_term(i, (Scalar::qpow(R, Q * i[0]) * zeta).inverse());
    });
    m.set_action(Y, [R](const Index& i) { return one_term(Index{i[0] + 1}, Scalar::integer(R, 1)); });
    m.set_action(X, [R, Q, zeta, d](const Index& i) {
      if (i[0] == 0) return std::vector<ModTerm>{};
      return one_term(Index{i[0] - 1}, gwa::qgwa_a_at(d, Scalar::qpow(R, Q * i[0]) * zeta));
    });
    return m;
  }
  if (kind == "Wprime") {
    if (!d.has_root) throw Error("qgwa_torsion_module: Wprime needs a root of a(h)");
    Scalar zeta = d.zeta;
    ModuleSpec m("Wprime", spec, 1, {true});
    m.set_action(H, [R, Q, zeta](const Index& i) {
      return one_term(i, Scalar::qpow(R, -Q * (i[0] + 1)) * zeta);
    });
    m.set_inverse_action(H, [R, Q, zeta](const Index& i) {
      return one_term(i, (Scalar::qpow(R, -Q * (i[0] + 1)) * zeta).inverse());
    });
    m.set_action(X, [R](const Index& i) { return one_term(Index{i[0] + 1}, Scalar::integer(R, 1)); });
    m.set_action(Y, [R, Q, zeta, d](const Index& i) {
      if (i[0] == 0) return std::vector<ModTerm>{};
      return one_term(Index{i[0] - 1}, gwa::qgwa_a_at(d, Scalar::qpow(R, -Q * i[0]) * zeta));
    });
    return m;
  }
  throw Error("qgwa_torsion_module: unknown kind " + kind);
}

namespace {

// Laurent coefficients of a(h) as (exponent, coefficient) pairs.
std::vector<std::pair<long, Scalar>> a_coeffs(const gwa::QgwaData& d, const RingPtr& R) {
  std::vector<std::pair<long, Scalar>> out;
  if (!d.has_root) {
    out.emplace_back(d.hexp, d.mu);
  } else {
    out.emplace_back(d.hexp + 1, d.mu);
    out.emplace_back(d.hexp, -(d.mu * d.zeta));
  }
  (void)R;
  return out;
}

}  // namespace

ModuleSpec qgwa_torsionfree_module(const std::string& kind, const gwa::QgwaData& d,
                                   const AlgebraPtr& spec) {
  const RingPtr R = spec->ring();
  const int H = spec->gen_index("h"), X = spec->gen_index("x"), Y = spec->gen_index("y");
  if (Y < 0) throw Error("qgwa_torsionfree_module: expected the 3-generator presentation");
  Scalar gamma = Scalar::param(R, "gamma");
  const long Q = d.qexp;
  auto coeffs = a_coeffs(d, R);

  // Both quotients collapse onto the h-power lattice k[h^(+-1)]; the killed
  // generator acts diagonally there and the opposite one multiplies by a.
  if (kind == "X") {
    ModuleSpec m("Xgamma", spec, 1, {false});
    m.set_action(H, [R](const Index& j) { return one_term(Index{j[0] + 1}, Scalar::integer(R, 1)); });
    m.set_inverse_action(
        H, [R](const Index& j) { return one_term(Index{j[0] - 1}, Scalar::integer(R, 1)); });
    m.set_action(X, [R, Q, gamma](const Index& j) {
      return one_term(j, gamma * Scalar::qpow(R, Q * j[0]));
    });
    m.set_action(Y, [R, Q, gamma, coeffs](const Index& j) {
      std::vector<ModTerm> out;
      Scalar base = gamma.inverse() * Scalar::qpow(R, -Q * j[0]);
      for (const auto& [s, c] : coeffs) out.push_back(ModTerm{Index{j[0] + s}, base * c});
      return out;
    });
    return m;
  }
  if (kind == "Y") {
    ModuleSpec m("Ygamma", spec, 1, {false});
    m.set_action(H, [R](const Index& j) { return one_term(Index{j[0] + 1}, Scalar::integer(R, 1)); });
    m.set_inverse_action(
        H, [R](const Index& j) { return one_term(Index{j[0] - 1}, Scalar::integer(R, 1)); });
    m.set_action(Y, [R, Q, gamma](const Index& j) {
      return one_term(j, gamma * Scalar::qpow(R, -Q * j[0]));
    });
    m.set_action(X, [R, Q, gamma, coeffs](const Index& j) {
      std::vector<ModTerm> out;
      Scalar base = gamma.inverse() * Scalar::qpow(R, Q * j[0]);
      for (const auto& [s, c] : coeffs)
        out.push_back(ModTerm{Index{j[0] + s}, base * c * Scalar::qpow(R, Q * s)});
      return out;
    });
    return m;
  }
  throw Error("qgwa_torsionfree_module: unknown kind " + kind);
}

ModuleSpec qgwa_zero_action_module(const gwa::QgwaData& d, const AlgebraPtr& spec) {
  const RingPtr R = spec->ring();
  const int H = spec->gen_index("h"), X = spec->gen_index("x"), Y = spec->gen_index("y");
  Scalar zeta = d.zeta;
  const long Q = d.qexp;
  ModuleSpec m("ZeroAction", spec, 1, {true});
  m.set_action(H, [R, Q, zeta](const Index& i) {
    return one_term(i, Scalar::qpow(R, Q * i[0]) * zeta);
  });
  m.set_inverse_action(H, [R, Q, zeta](const Index& i) {
    return one_term(i, (Scalar::qpow(R, Q * i[0]) * zeta).inverse());
  });
  m.set_action(Y, [R](const Index& i) { return one_term(Index{i[0] + 1}, Scalar::integer(R, 1)); });
  m.set_action(X, [](const Index&) { return std::vector<ModTerm>{}; });
  return m;
}

// ---------------------------------------------------------------------------
// centralizer modules

ModuleSpec cchi_module(const std::string& kind) {
  const Catalog& cat = Catalog::get();
  AlgebraPtr c = cat.algebra("C");
  const RingPtr R = c->ring();
  Scalar chi = Scalar::param(R, "chi");
  Scalar one = Scalar::integer(R, 1);
  const int K = c->gen_index("K"), X1 = c->gen_index("x1"), Y1 = c->gen_index("y1"),
            X2 = c->gen_index("x2"), Y2 = c->gen_index("y2");
  ModuleSpec m("cchi." + kind, c, 2, {true, true});
  m.set_action(K, [chi](const Index& i) { return one_term(i, chi); });
  m.set_inverse_action(K, [chi](const Index& i) { return one_term(i, chi.inverse()); });
  auto qp = [R](long e) { return Scalar::qpow(R, e); };
  // (1 - q^(2k)) / (1 - q^2), the q-integer coefficient of the straightenings
  auto qint = [R, one](long k) {
    return (one - Scalar::qpow(R, 2 * k)) / (one - Scalar::qpow(R, 2));
  };
  auto raise_i = [R](const Index& i) {
    return one_term(Index{i[0] + 1, i[1]}, Scalar::integer(R, 1));
  };
  auto raise_j_pow = [qp](long e) {
    return [qp, e](const Index& i) { return one_term(Index{i[0], i[1] + 1}, qp(e * i[0])); };
  };

  if (kind == "H") {  // basis y1^i x2^j; kills x1, y2
    m.set_action(Y1, raise_i);
    m.set_action(X2, raise_j_pow(-2));
    m.set_action(X1, [chi, qint](const Index& i) {
      return one_term(Index{i[0] - 1, i[1]}, chi * qint(i[0]));
    });
    m.set_action(Y2, [qp, qint](const Index& i) {
      return one_term(Index{i[0], i[1] - 1}, -(qp(2 * i[0] + 3) * qint(i[1])));
    });
    return m;
  }
  if (kind == "L") {  // basis x1^i y2^j; kills y1, x2
    m.set_action(X1, raise_i);
    m.set_action(Y2, raise_j_pow(-2));
    m.set_action(Y1, [chi, qp, qint](const Index& i) {
      return one_term(Index{i[0] - 1, i[1]}, -(qp(-2 * i[0]) * chi * qint(i[0])));
    });
    // x2 y2^j = q^-2j y2^j x2 + q (1 - q^-2j)/(1 - q^-2) y2^(j-1)
    m.set_action(X2, [R, qp](const Index& i) {
      Scalar one_ = Scalar::integer(R, 1);
      Scalar coef = qp(1) * (one_ - qp(-2 * i[1])) / (one_ - qp(-2));
      return one_term(Index{i[0], i[1] - 1}, qp(2 * i[0]) * coef);
    });
    return m;
  }
  if (kind == "M") {  // basis y1^i y2^j; kills x1, x2
    m.set_action(Y1, raise_i);
    m.set_action(Y2, raise_j_pow(2));
    m.set_action(X1, [chi, qint](const Index& i) {
      return one_term(Index{i[0] - 1, i[1]}, chi * qint(i[0]));
    });
    m.set_action(X2, [R, qp](const Index& i) {
      Scalar one_ = Scalar::integer(R, 1);
      Scalar coef = qp(1) * (one_ - qp(-2 * i[1])) / (one_ - qp(-2));
      return one_term(Index{i[0], i[1] - 1}, qp(-2 * i[0]) * coef);
    });
    return m;
  }
  if (kind == "N") {  // basis x1^i x2^j; kills y1, y2
    m.set_action(X1, raise_i);
    m.set_action(X2, raise_j_pow(2));
    m.set_action(Y1, [chi, qp, qint](const Index& i) {
      return one_term(Index{i[0] - 1, i[1]}, -(qp(-2 * i[0]) * chi * qint(i[0])));
    });
    m.set_action(Y2, [qp, qint](const Index& i) {
      return one_term(Index{i[0], i[1] - 1}, -(qp(-2 * i[0] + 3) * qint(i[1])));
    });
    return m;
  }
  throw Error("cchi_module: unknown kind " + kind);
}

namespace {

std::vector<std::pair<int, Scalar>> diagonal_images(const MorphismSpec& f) {
  std::vector<std::pair<int, Scalar>> out;
  for (int i = 0; i < f.source()->ngens(); ++i) {
    const Element& img = f.image(i);
    if (img.nterms() != 1) throw Error("module transport: morphism is not diagonal");
    const auto& [m, c] = *img.terms().begin();
    int which = -1;
    for (size_t k = 0; k < m.e.size(); ++k) {
      if (m.e[k] == 0) continue;
      if (m.e[k] != 1 || which >= 0) throw Error("module transport: morphism is not diagonal");
      which = static_cast<int>(k);
    }
    if (which < 0) throw Error("module transport: morphism is not diagonal");
    out.emplace_back(which, c);
  }
  return out;
}

}  // namespace

ModuleSpec twist(const ModuleSpec& m, const MorphismSpec& tau) {
  if (tau.source().get() != m.alg().get() || tau.target().get() != m.alg().get())
    throw Error("twist: endomorphism of the module's algebra required");
  return transport(m, tau);
}

namespace {

std::vector<bool> nonneg_flags(const ModuleSpec& m) {
  std::vector<bool> out;
  std::vector<Index> w1 = m.window(1);
  for (int k = 0; k < m.rank(); ++k) {
    bool has_neg = false;
    for (const Index& idx : w1)
      if (idx[static_cast<size_t>(k)] < 0) has_neg = true;
    out.push_back(!has_neg);
  }
  return out;
}

}  // namespace

ModuleSpec transport(const ModuleSpec& m, const MorphismSpec& f) {
  if (f.target().get() != m.alg().get()) throw Error("transport: target mismatch");
  auto diag = diagonal_images(f);
  ModuleSpec out(m.name() + "^" + f.name(), f.source(), m.rank(), nonneg_flags(m));
  auto keep = std::make_shared<const ModuleSpec>(m);
  for (int g = 0; g < f.source()->ngens(); ++g) {
    auto [tgt, c] = diag[static_cast<size_t>(g)];
    out.set_action(g, [keep, tgt, c](const Index& i) {
      std::vector<ModTerm> terms;
      for (const auto& [idx, s] : keep->apply_gen(tgt, 1, keep->basis_vector(i)))
        terms.push_back(ModTerm{idx, s * c});
      return terms;
    });
    if (f.source()->gen(g).invertible) {
      Scalar cinv = c.inverse();
      out.set_inverse_action(g, [keep, tgt, cinv](const Index& i) {
        std::vector<ModTerm> terms;
        for (const auto& [idx, s] : keep->apply_gen(tgt, -1, keep->basis_vector(i)))
          terms.push_back(ModTerm{idx, s * cinv});
        return terms;
      });
    }
  }
  return out;
}

namespace {

struct InnerHandle {
  std::shared_ptr<const ModuleSpec> m;

  std::vector<ModTerm> shifted(int gen, const Index& full, long dstratum, const Scalar& scale,
                               long exp = 1) const {
    Index inner(full.begin() + 1, full.end());
    std::vector<ModTerm> out;
    for (const auto& [idx, c] : m->apply_gen(gen, exp, m->basis_vector(inner))) {
      Index nidx;
      nidx.reserve(full.size());
      nidx.push_back(full[0] + dstratum);
      nidx.insert(nidx.end(), idx.begin(), idx.end());
      out.push_back(ModTerm{std::move(nidx), c * scale});
    }
    return out;
  }

  std::vector<ModTerm> shift_only(const Index& full, long dstratum, const Scalar& scale) const {
    Index nidx = full;
    nidx[0] += dstratum;
    return {ModTerm{std::move(nidx), scale}};
  }
};

}  // namespace

ModuleSpec induce_from_k_centralizer(const ModuleSpec& m) {
  const Catalog& cat = Catalog::get();
  AlgebraPtr c = cat.algebra("C");
  AlgebraPtr dq = cat.algebra("Dq");
  if (m.alg().get() != c.get())
    throw Error("induce_from_k_centralizer: module must live over the centralizer of K");
  const RingPtr R = dq->ring();
  std::vector<bool> nonneg{false};
  for (bool f : nonneg_flags(m)) nonneg.push_back(f);
  ModuleSpec out("ind." + m.name(), dq, m.rank() + 1, nonneg);
  InnerHandle h{std::make_shared<const ModuleSpec>(m)};
  const int K = c->gen_index("K"), X1 = c->gen_index("x1"), Y1 = c->gen_index("y1"),
            X2 = c->gen_index("x2"), Y2 = c->gen_index("y2");
  const int dK = dq->gen_index("K"), dA = dq->gen_index("a"), dE = dq->gen_index("E"),
            dC = dq->gen_index("c"), dF = dq->gen_index("F"), dB = dq->gen_index("b");
  // g = a^d t with t in the centralizer: E = a^-2 x1, c = a y1, F = a^2 x2,
  // b = a^-1 y2; acting on stratum s twists t by conjugation with a^s
  out.set_action(dK, [h, R, K](const Index& i) {
    return h.shifted(K, i, 0, Scalar::qpow(R, -i[0]));
  });
  out.set_inverse_action(dK, [h, R, K](const Index& i) {
    return h.shifted(K, i, 0, Scalar::qpow(R, i[0]), -1);
  });
  out.set_action(dA, [h, R](const Index& i) { return h.shift_only(i, 1, Scalar::integer(R, 1)); });
  out.set_inverse_action(
      dA, [h, R](const Index& i) { return h.shift_only(i, -1, Scalar::integer(R, 1)); });
  out.set_action(dE, [h, R, X1](const Index& i) {
    return h.shifted(X1, i, -2, Scalar::integer(R, 1));
  });
  out.set_action(dC, [h, R, Y1](const Index& i) {
    return h.shifted(Y1, i, 1, Scalar::qpow(R, -i[0]));
  });
  out.set_action(dF, [h, R, X2](const Index& i) {
    return h.shifted(X2, i, 2, Scalar::qpow(R, i[0]));
  });
  out.set_action(dB, [h, R, Y2](const Index& i) {
    return h.shifted(Y2, i, -1, Scalar::qpow(R, -i[0]));
  });
  return out;
}

ModuleSpec induce_from_a_centralizer(const ModuleSpec& m) {
  const Catalog& cat = Catalog::get();
  AlgebraPtr a = cat.algebra("A");
  AlgebraPtr dq = cat.algebra("Dq");
  if (m.alg().get() != a.get())
    throw Error("induce_from_a_centralizer: module must live over the centralizer of a");
  const RingPtr R = dq->ring();
  std::vector<bool> nonneg{false};
  for (bool f : nonneg_flags(m)) nonneg.push_back(f);
  ModuleSpec out("inda." + m.name(), dq, m.rank() + 1, nonneg);
  InnerHandle h{std::make_shared<const ModuleSpec>(m)};
  const int gA = a->gen_index("a"), gE = a->gen_index("E"), gW = a->gen_index("w"),
            gT1 = a->gen_index("t1"), gT2 = a->gen_index("t2");
  const int dK = dq->gen_index("K"), dA = dq->gen_index("a"), dE = dq->gen_index("E"),
            dC = dq->gen_index("c"), dF = dq->gen_index("F"), dB = dq->gen_index("b");
  // g = K^d t with t in the centralizer of a: c = q K a^-2 w, F = K^-1 t1,
  // b = q^-3 K a t2; the stratum twist is conjugation by K^s
  out.set_action(dK, [h, R](const Index& i) { return h.shift_only(i, 1, Scalar::integer(R, 1)); });
  out.set_inverse_action(
      dK, [h, R](const Index& i) { return h.shift_only(i, -1, Scalar::integer(R, 1)); });
  out.set_action(dA, [h, R, gA](const Index& i) {
    return h.shifted(gA, i, 0, Scalar::qpow(R, i[0]));
  });
  out.set_inverse_action(dA, [h, R, gA](const Index& i) {
    return h.shifted(gA, i, 0, Scalar::qpow(R, -i[0]), -1);
  });
  out.set_action(dE, [h, R, gE](const Index& i) {
    return h.shifted(gE, i, 0, Scalar::qpow(R, -2 * i[0]));
  });
  out.set_action(dC, [h, R, gW, gA](const Index& i) {
    // c = q K a^-2 w: apply w, then a^-1 twice, then shift the K-stratum
    Index inner(i.begin() + 1, i.end());
    std::vector<ModTerm> out2;
    ModVector v = h.m->apply_gen(gA, -2, h.m->apply_gen(gW, 1, h.m->basis_vector(inner)));
    for (const auto& [idx, c] : v) {
      Index nidx;
      nidx.push_back(i[0] + 1);
      nidx.insert(nidx.end(), idx.begin(), idx.end());
      out2.push_back(ModTerm{std::move(nidx), c * Scalar::qpow(R, 1 + i[0])});
    }
    return out2;
  });
  out.set_action(dF, [h, R, gT1](const Index& i) {
    return h.shifted(gT1, i, -1, Scalar::qpow(R, 2 * i[0]));
  });
  out.set_action(dB, [h, R, gT2, gA](const Index& i) {
    // b = q^-3 K a t2
    Index inner(i.begin() + 1, i.end());
    std::vector<ModTerm> out2;
    ModVector v = h.m->apply_gen(gA, 1, h.m->apply_gen(gT2, 1, h.m->basis_vector(inner)));
    for (const auto& [idx, c] : v) {
      Index nidx;
      nidx.push_back(i[0] + 1);
      nidx.insert(nidx.end(), idx.begin(), idx.end());
      out2.push_back(ModTerm{std::move(nidx), c * Scalar::qpow(R, -3 - i[0])});
    }
    return out2;
  });
  return out;
}

}  // namespace repmod
}  // namespace qe2
