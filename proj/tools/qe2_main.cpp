#include "qe2/autgrp.hpp"
#include "qe2/gwa.hpp"
#include "qe2/hopf.hpp"
#include "qe2/parser.hpp"
#include "qe2/repmod.hpp"
#include "qe2/suite.hpp"
#include "qe2/zlattice.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace qe2;

std::uint64_t env_seed() {
  const char* s = std::getenv("QE2_SEED");
  if (s == nullptr) return 0;
  return std::strtoull(s, nullptr, 10);
}

Scalar parse_scalar(const std::string& text) {
  AlgebraPtr dq = Catalog::get().algebra("Dq");
  Element e = parse_element(text, dq, nullptr);
  if (e.is_zero()) return Scalar::integer(dq->ring(), 0);
  if (e.nterms() != 1) throw Error("expected a scalar: " + text);
  const auto& [m, c] = *e.terms().begin();
  for (int v : m.e)
    if (v != 0) throw Error("expected a scalar: " + text);
  return c;
}

// the quantum GWA used by the module commands: a(h) = (q^-1 - q^-3)^-1 h^-1 (h - alpha),
// base q^2
gwa::QgwaData default_qgwa() {
  const RingPtr& R = Catalog::get().ring();
  Scalar one = Scalar::integer(R, 1);
  gwa::QgwaData d;
  d.mu = (Scalar::qpow(R, -1) - Scalar::qpow(R, -3)).inverse();
  d.hexp = -1;
  d.has_root = true;
  d.zeta = Scalar::param(R, "alpha");
  d.qexp = 2;
  (void)one;
  return d;
}

repmod::ModuleSpec module_by_tag(const std::string& tag) {
  using namespace repmod;
  if (tag == "H" || tag == "L" || tag == "M" || tag == "N") return cchi_module(tag);
  if (tag.rfind("ind:", 0) == 0)
    return induce_from_k_centralizer(cchi_module(tag.substr(4)));
  if (tag.rfind("inda:", 0) == 0) {
    const Catalog& cat = Catalog::get();
    return induce_from_a_centralizer(
        transport(cchi_module(tag.substr(5)), cat.morphism("Phi")));
  }
  gwa::QgwaData d = default_qgwa();
  AlgebraPtr spec = gwa::qgwa_build(d);
  if (tag == "Wgamma" || tag == "W" || tag == "Wprime") return qgwa_torsion_module(tag, d, spec);
  if (tag == "X" || tag == "Y") return qgwa_torsionfree_module(tag, d, spec);
  throw Error("unknown module tag: " + tag +
              " (expected W|Wgamma|Wprime|X|Y|H|L|M|N|ind:<HLMN>|inda:<HLMN>)");
}

int report_failures(const std::vector<std::string>& failures) {
  for (const auto& f : failures) std::cout << "  FAIL " << f << "\n";
  return failures.empty() ? 0 : 1;
}

int report_failures(const std::vector<repmod::AuditFailure>& failures) {
  std::vector<std::string> strs;
  for (const auto& f : failures) strs.push_back(f.str());
  return report_failures(strs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for the quantum Euclidean group, its Heisenberg double, "
               "and their module constructions"};
  app.require_subcommand(1);

  std::string algebra_id = "Dq";
  std::string expr_text, expr2_text, factor_text = "1";
  std::string family, matrix_arg, module_tag, json_path, filter;
  long window = 8;
  long xi_index = 1;
  long mi = 1, mj = 0, mm = 0, mn = 1;
  std::string s_lambda = "1", s_mu = "1", s_gamma = "1", s_nu = "1";
  std::string s_alpha = "1", s_beta = "1";
  long random_triples = 0;
  long degree_cap = 3;

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("--algebra", algebra_id, "algebra id")->required();
  nf->add_option("expr", expr_text, "expression")->required();

  auto* comm = app.add_subcommand("comm", "q-commutator x*y - factor*y*x");
  comm->add_option("--algebra", algebra_id, "algebra id")->required();
  comm->add_option("--factor", factor_text, "scalar factor");
  comm->add_option("expr1", expr_text)->required();
  comm->add_option("expr2", expr2_text)->required();

  auto* check = app.add_subcommand("check-map", "verify a morphism family member");
  check->add_option("--family", family,
                    "invol|Phi|PhiInv|tau_a|tau_K|emb:Pi:Oq|emb:C:Dq|emb:A:Dq|Oq.tau|Oq.xi|"
                    "Oq.eta|Uq.sigma|Uq.xi|Uq.eta|Dq.rho")
      ->required();
  check->add_option("--index", xi_index, "index of the unit-twist families");
  check->add_option("--i", mi);
  check->add_option("--j", mj);
  check->add_option("--m", mm);
  check->add_option("--n", mn);
  check->add_option("--lambda", s_lambda);
  check->add_option("--mu", s_mu);
  check->add_option("--gamma", s_gamma);
  check->add_option("--nu", s_nu);
  check->add_option("--alpha", s_alpha);
  check->add_option("--beta", s_beta);

  auto* suite = app.add_subcommand("suite", "run the registered identity suite");
  suite->add_option("--filter", filter, "id prefix filter");
  suite->add_option("--json", json_path, "write the JSON report here");

  auto* center = app.add_subcommand("center", "quantum-torus centre from a skew matrix");
  center->add_option("--matrix", matrix_arg, "builtin:<name> or a JSON file of integer rows")
      ->required();

  auto* audit = app.add_subcommand("module-audit", "relation audit of a module");
  audit->add_option("--module", module_tag, "module tag")->required();
  audit->add_option("--window", window, "basis window bound");
  audit->add_option("--json", json_path, "write the JSON report here");

  bool dump_registry = false;
  auto* exp = app.add_subcommand("export", "JSON export of presentations and matrices");
  exp->add_option("--algebra", algebra_id, "catalog algebra id, or factor:dq:<1-4>, "
                                           "factor:cchi:<1-4>, qgwa");
  exp->add_option("--matrix", matrix_arg, "builtin matrix name");
  exp->add_flag("--registry", dump_registry, "dump the identity registry");

  auto* induce = app.add_subcommand("induce", "induce a centralizer module to the double");
  induce->add_option("--module", module_tag, "H|L|M|N")->required();
  induce->add_option("--window", window, "audit window bound");

  auto* diamond = app.add_subcommand("diamond", "associativity probe for a catalog algebra");
  diamond->add_option("--algebra", algebra_id, "algebra id")->required();
  diamond->add_option("--random", random_triples, "number of random monomial triples");
  diamond->add_option("--cap", degree_cap, "degree cap for random monomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Catalog& cat = Catalog::get();
    if (nf->parsed()) {
      AlgebraPtr a = cat.algebra(algebra_id);
      Element e = parse_element(expr_text, a, catalog_resolver(algebra_id));
      std::cout << e.str() << "\n";
      return 0;
    }
    if (comm->parsed()) {
      AlgebraPtr a = cat.algebra(algebra_id);
      NamedResolver res = catalog_resolver(algebra_id);
      Element x = parse_element(expr_text, a, res);
      Element y = parse_element(expr2_text, a, res);
      Element r = commutator_q(x, y, parse_scalar(factor_text));
      std::cout << r.str() << "\n";
      return r.is_zero() ? 0 : 1;
    }
    if (check->parsed()) {
      std::optional<MorphismSpec> f;
      if (family == "Oq.tau") f = autgrp::oq_tau();
      else if (family == "Oq.xi") f = autgrp::oq_xi(xi_index);
      else if (family == "Oq.eta")
        f = autgrp::oq_eta(parse_scalar(s_alpha), parse_scalar(s_beta), parse_scalar(s_gamma));
      else if (family == "Uq.sigma") f = autgrp::uq_sigma();
      else if (family == "Uq.xi") f = autgrp::uq_xi(xi_index);
      else if (family == "Uq.eta")
        f = autgrp::uq_eta(parse_scalar(s_alpha), parse_scalar(s_beta), parse_scalar(s_gamma));
      else if (family == "Dq.rho") {
        autgrp::RhoParams p;
        p.lambda = parse_scalar(s_lambda);
        p.mu = parse_scalar(s_mu);
        p.gamma = parse_scalar(s_gamma);
        p.nu = parse_scalar(s_nu);
        p.i = mi;
        p.j = mj;
        p.m = mm;
        p.n = mn;
        autgrp::RhoBuild rb = autgrp::dq_rho(p);
        if (rb.b_corrected || rb.c_corrected)
          std::cout << "note: solved scalar disagrees with the tabulated closed form\n";
        f = rb.rho;
      } else {
        f = cat.morphism(family);
      }
      auto rep = f->check();
      std::cout << (rep.ok ? "PASS" : "FAIL") << " " << f->name() << " (" << rep.checked
                << " relations)\n";
      for (const auto& [rel, res] : rep.failures)
        std::cout << "  relation " << rel << " residue " << res << "\n";
      return rep.ok ? 0 : 1;
    }
    if (suite->parsed()) {
      SuiteReport rep = run_suite(filter);
      for (const auto& e : rep.entries)
        std::cout << (e.pass ? "PASS" : "FAIL") << " " << e.id << " [" << e.anchor << "] ("
                  << e.elapsed_ms << " ms)" << (e.pass ? "" : " residue " + e.residue) << "\n";
      std::cout << rep.entries.size() << " identities, "
                << (rep.all_pass ? "all pass" : "FAILURES above") << "\n";
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << suite_json(rep) << "\n";
      }
      return rep.all_pass ? 0 : 1;
    }
    if (center->parsed()) {
      IntMatrix m;
      if (matrix_arg.rfind("builtin:", 0) == 0) {
        m = cat.builtin_matrix(matrix_arg.substr(8));
      } else {
        std::ifstream in(matrix_arg);
        if (!in) throw Error("cannot open " + matrix_arg);
        nlohmann::json j;
        in >> j;
        std::vector<std::vector<long>> rows;
        for (const auto& row : j) rows.push_back(row.get<std::vector<long>>());
        m = IntMatrix::from_rows(rows);
      }
      TorusCenter tc = torus_center(m);
      std::cout << "kernel rank " << tc.kernel_rank << "; center "
                << (tc.trivial() ? "trivial" : "nontrivial") << "\n";
      for (const auto& v : tc.basis) {
        std::cout << "  basis vector [";
        for (size_t k = 0; k < v.size(); ++k) std::cout << (k ? " " : "") << v[k];
        std::cout << "]\n";
      }
      return 0;
    }
    if (audit->parsed()) {
      repmod::ModuleSpec m = module_by_tag(module_tag);
      auto rep = repmod::relation_audit(m, window);
      std::cout << (rep.ok ? "PASS" : "FAIL") << " " << m.name() << " window " << window << " ("
                << rep.checked << " checks)\n";
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << repmod::audit_json(m, rep) << "\n";
      }
      return report_failures(rep.failures);
    }
    if (exp->parsed()) {
      if (dump_registry) {
        std::cout << registry_json() << "\n";
        return 0;
      }
      if (exp->count("--matrix") > 0) {
        const IntMatrix& m = cat.builtin_matrix(matrix_arg);
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.rows(); ++i) {
          nlohmann::json row = nlohmann::json::array();
          for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).convert_to<long long>());
          rows.push_back(row);
        }
        std::cout << rows.dump() << "\n";
        return 0;
      }
      if (exp->count("--algebra") > 0) {
        AlgebraPtr spec;
        if (algebra_id.rfind("factor:dq:", 0) == 0)
          spec = gwa::ggwa_build(gwa::dq_factor_data(std::stoi(algebra_id.substr(10))));
        else if (algebra_id.rfind("factor:cchi:", 0) == 0)
          spec = gwa::ggwa_build(gwa::cchi_factor_data(std::stoi(algebra_id.substr(12))));
        else if (algebra_id == "qgwa")
          spec = gwa::qgwa_build(default_qgwa());
        else
          spec = cat.algebra(algebra_id);
        std::cout << gwa::presentation_json(spec) << "\n";
        return 0;
      }
      std::cerr << "export: nothing selected\n";
      return 2;
    }
    if (induce->parsed()) {
      repmod::ModuleSpec ind = module_by_tag("ind:" + module_tag);
      auto rep = repmod::relation_audit(ind, std::min<long>(window, 4));
      std::cout << (rep.ok ? "PASS" : "FAIL") << " " << ind.name()
                << ": K acts on stratum s by q^-s * chi; a shifts strata by one\n";
      return report_failures(rep.failures);
    }
    if (diamond->parsed()) {
      auto rep = diamond_check(cat.algebra(algebra_id), static_cast<int>(degree_cap),
                               static_cast<int>(random_triples), env_seed());
      std::cout << (rep.ok ? "PASS" : "FAIL") << " diamond " << algebra_id << " ("
                << rep.checked << " triples)\n";
      return report_failures(rep.failures);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
