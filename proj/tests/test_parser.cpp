#include "qe2/parser.hpp"

#include "qe2/catalog.hpp"
#include "qe2/suite.hpp"

#include "catch2/catch_amalgamated.hpp"

#include <random>

using namespace qe2;

namespace {

AlgebraPtr dq() { return Catalog::get().algebra("Dq"); }

}  // namespace

TEST_CASE("grammar accepts the documented forms") {
  auto d = dq();
  NamedResolver res = catalog_resolver("Dq");
  Element e1 = parse_element("E*c^3 - c^3*E", d, res);
  CHECK(!e1.is_zero());
  Element e2 = parse_element("(1-q^2)^-1 * (psi - a^-1*K)", d, res);
  CHECK(!e2.is_zero());
  // whitespace is insignificant
  CHECK(parse_element("  E *c^3-c^3* E ", d, res) == e1);
  // unary minus and integer literals
  CHECK(parse_element("-3 + 3", d, res).is_zero());
  // division by a unit monomial
  CHECK(parse_element("(K*a)/(K*a)", d, res) == Element::one(d));
}

TEST_CASE("positioned errors") {
  auto d = dq();
  try {
    parse_element("b^q", d, nullptr);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 3);
    CHECK(std::string(e.what()).find("integer literal") != std::string::npos);
  }
  try {
    parse_element("E*(c + b", d, nullptr);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("')'") != std::string::npos);
  }
  try {
    parse_element("E*zz", d, nullptr);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unknown symbol") != std::string::npos);
    CHECK(e.col() == 3);
  }
  CHECK_THROWS_AS(parse_element("", d, nullptr), ParseError);
  CHECK_THROWS_AS(parse_element("E/b", d, nullptr), ParseError);
}

TEST_CASE("round trip through the canonical rendering") {
  auto d = dq();
  std::mt19937_64 rng(11);
  NamedResolver res = catalog_resolver("Dq");
  for (int t = 0; t < 50; ++t) {
    Element x = Element::zero(d);
    for (int k = 0; k < 3; ++k) {
      Word w;
      for (int i = 0; i < d->ngens(); ++i) {
        long lo = d->gen(i).invertible ? -2 : 0;
        long e = lo + static_cast<long>(rng() % static_cast<unsigned long>(2 - lo + 1));
        if (e != 0) w.emplace_back(i, e);
      }
      long c = static_cast<long>(rng() % 9) - 4;
      Scalar s = Scalar::integer(d->ring(), c) +
                 Scalar::qpow(d->ring(), static_cast<long>(rng() % 5) - 2);
      x += Element::from_word(d, w, s);
    }
    Element back = parse_element(x.str(), d, res);
    CHECK(back == x);
  }
}

TEST_CASE("ast shape is preserved") {
  AstPtr ast = parse_expr("q^2*K - 1");
  REQUIRE(ast->kind == ExprAst::Kind::Diff);
  CHECK(ast->kids[0]->kind == ExprAst::Kind::Product);
  CHECK(ast->kids[1]->kind == ExprAst::Kind::Integer);
  AstPtr sym = ast->kids[0]->kids[0];
  CHECK(sym->kind == ExprAst::Kind::Symbol);
  CHECK(sym->name == "q");
  CHECK(sym->exp == 2);
}

TEST_CASE("named elements resolve per algebra") {
  auto d = dq();
  NamedResolver res = catalog_resolver("Dq");
  Element phi = parse_element("phi", d, res);
  CHECK(phi == Catalog::get().named("phi", "Dq"));
  // the same name is unknown without a resolver
  CHECK_THROWS_AS(parse_element("phi", d, nullptr), ParseError);
}
