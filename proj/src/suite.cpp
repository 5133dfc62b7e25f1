#include "qe2/suite.hpp"

#include "qe2/hopf.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>

namespace qe2 {

NamedResolver catalog_resolver(const std::string& algebra_id) {
  return [algebra_id](const std::string& name) -> std::optional<Element> {
    const auto& table = Catalog::get().named_in(algebra_id);
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
}

namespace {

SuiteEntryResult evaluate(const IdentityEntry& e) {
  SuiteEntryResult r;
  r.id = e.id;
  r.algebra = e.algebra;
  r.anchor = e.anchor;
  auto t0 = std::chrono::steady_clock::now();
  Element residue;
  if (e.kind == IdentityEntry::Kind::CrossRelation) {
    auto cc = hopf::cross_relation(e.lhs, e.rhs);
    residue = cc.smash - cc.rule;
  } else {
    AlgebraPtr alg = Catalog::get().algebra(e.algebra);
    NamedResolver res = catalog_resolver(e.algebra);
    residue = parse_element(e.lhs, alg, res) - parse_element(e.rhs, alg, res);
  }
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.pass = residue.is_zero();
  r.residue = r.pass ? "0" : residue.str();
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& filter_prefix) {
  SuiteReport rep;
  for (const IdentityEntry& e : Catalog::get().identity_suite()) {
    if (!filter_prefix.empty() && e.id.rfind(filter_prefix, 0) != 0) continue;
    SuiteEntryResult r = evaluate(e);
    rep.all_pass = rep.all_pass && r.pass;
    rep.entries.push_back(std::move(r));
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const SuiteEntryResult& a, const SuiteEntryResult& b) { return a.id < b.id; });
  return rep;
}

SuiteReport run_phi_transport() {
  SuiteReport rep;
  const Catalog& cat = Catalog::get();
  AlgebraPtr a = cat.algebra("A");
  const MorphismSpec& phi = cat.morphism("Phi");
  NamedResolver res = catalog_resolver("A");
  for (const IdentityEntry& e : cat.identity_suite()) {
    if (e.algebra != "A" || e.kind != IdentityEntry::Kind::Expr) continue;
    SuiteEntryResult r;
    r.id = "transport." + e.id;
    r.algebra = "C";
    r.anchor = e.anchor;
    auto t0 = std::chrono::steady_clock::now();
    Element residue = phi.apply(parse_element(e.lhs, a, res));
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.pass = residue.is_zero();
    r.residue = r.pass ? "0" : residue.str();
    rep.all_pass = rep.all_pass && r.pass;
    rep.entries.push_back(std::move(r));
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const SuiteEntryResult& x, const SuiteEntryResult& y) { return x.id < y.id; });
  return rep;
}

std::string registry_json() {
  nlohmann::json j = nlohmann::json::array();
  for (const IdentityEntry& e : Catalog::get().identity_suite())
    j.push_back({{"id", e.id},
                 {"algebra", e.algebra},
                 {"kind", e.kind == IdentityEntry::Kind::CrossRelation ? "cross" : "expr"},
                 {"lhs", e.lhs},
                 {"rhs", e.rhs},
                 {"anchor", e.anchor}});
  return j.dump(2);
}

std::string suite_json(const SuiteReport& rep) {
  nlohmann::json j;
  j["version"] = 1;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : rep.entries) {
    j["entries"].push_back({{"id", e.id},
                            {"anchor", e.anchor},
                            {"status", e.pass ? "pass" : "fail"},
                            {"residue", e.residue},
                            {"elapsed_ms", e.elapsed_ms}});
  }
  return j.dump(2);
}

}  // namespace qe2
