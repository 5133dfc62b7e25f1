#ifndef QE2_SUITE_HPP
#define QE2_SUITE_HPP

#include "qe2/catalog.hpp"
#include "qe2/parser.hpp"

#include <string>
#include <vector>

namespace qe2 {

struct SuiteEntryResult {
  std::string id;
  std::string algebra;
  std::string anchor;
  bool pass = false;
  std::string residue;  // rendering of the nonzero residue, "0" on pass
  double elapsed_ms = 0.0;
};

struct SuiteReport {
  std::vector<SuiteEntryResult> entries;  // sorted by id
  bool all_pass = true;
};

/// Resolver for the catalog's named elements of one algebra.
NamedResolver catalog_resolver(const std::string& algebra_id);

/// Evaluates every registered identity whose id starts with the filter.
SuiteReport run_suite(const std::string& filter_prefix = "");

/// Transports the registered identities of the centralizer of a through the
/// isomorphism onto the centralizer of K and normalizes there.
SuiteReport run_phi_transport();

std::string suite_json(const SuiteReport& rep);

/// The registry itself: {id, algebra, lhs, rhs, anchor} per entry.
std::string registry_json();

}  // namespace qe2

#endif
