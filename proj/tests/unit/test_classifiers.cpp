#include <doctest.h>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "twb/classifiers.hpp"
#include "twb/text.hpp"

using namespace twb;
using twb::testing::Gen;

TEST_CASE("elementary formulas") {
  using namespace mk;
  CHECK(isElementary(1, *eqOmega(op(0), num(0))).isMember);
  auto bad = exists({Sort::type(1), 0}, mem(1, bt(1, 0), bt(2, 0)));
  auto r = isElementary(1, *bad);
  CHECK_FALSE(r.isMember);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->empty());  // the quantifier itself
  for (unsigned k = 1; k <= 4; ++k) {
    CHECK(isElementary(k + 1, *eqType(k, op(0), bt(k, 0))).isMember);
    CHECK_FALSE(isElementary(k, *eqType(k, op(0), bt(k, 0))).isMember);
  }
  CHECK_THROWS_AS(isElementary(1, *in(1, set(1, 0), num(0))), DomainError);
}

TEST_CASE("witness paths address the violating subterm") {
  using namespace mk;
  auto phi = conj(eqOmega(op(0), num(0)), forall({Sort::type(2), 1}, eqType(0, op(0), op(1))));
  auto r = isElementary(2, *phi);
  REQUIRE_FALSE(r.isMember);
  CHECK(*r.witness == ExprPath{1});
  const Expr& at = subtermAt(*phi, *r.witness);
  CHECK(at.kind == Kind::Forall);
}

TEST_CASE("elementary agrees with the definition") {
  Gen g(41);
  int members = 0;
  for (int i = 0; i < 1000; ++i) {
    auto phi = g.btFormula(5, 3, true);
    for (unsigned n = 0; n <= 4; ++n) {
      auto r = isElementary(n, *phi);
      REQUIRE_MESSAGE(r.isMember == testing::elementaryOracle(n, *phi), printExpr(*phi), " at ", n);
      CHECK(r.witness.has_value() == !r.isMember);
      members += r.isMember;
    }
  }
  CHECK(members > 100);
}

TEST_CASE("k-simple formulas") {
  using namespace mk;
  CHECK(isKSimple(1, *in(1, set(1, 0), numeral(5))).isMember);
  CHECK_FALSE(isKSimple(1, *exists({Sort::set(1), 0}, in(1, set(1, 0), numeral(5)))).isMember);
  CHECK_FALSE(isKSimple(1, *in(2, set(2, 0), numeral(5))).isMember);
  CHECK_THROWS_AS(isKSimple(1, *eqOmega(op(0), num(0))), DomainError);
}

TEST_CASE("k-simple agrees with the definition and is monotone") {
  Gen g(42);
  for (int i = 0; i < 1000; ++i) {
    auto phi = g.saFormula(5, 4, g.coin(0.3));
    for (unsigned k = 0; k <= 4; ++k) {
      bool here = isKSimple(k, *phi).isMember;
      CHECK(here == testing::kSimpleOracle(k, *phi));
      if (here) CHECK(isKSimple(k + 1, *phi).isMember);
    }
  }
}

TEST_CASE("fragments") {
  using namespace mk;
  CHECK(fragmentOf(*tr(2, num(0), num(1))) == 2);
  CHECK(fragmentOf(*eq(num(0), num(1))) == 0);
  CHECK(fragmentOf(*mem(1, bt(1, 0), bt(2, 0))) == 2);
  Gen g(43);
  for (Language lang : {Language::BT, Language::SA, Language::PATr}) {
    for (int i = 0; i < 300; ++i) {
      auto phi = g.formula(lang, 5);
      CHECK(fragmentOf(*phi) == testing::fragmentOracle(*phi));
    }
  }
}
