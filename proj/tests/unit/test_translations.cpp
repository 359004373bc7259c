#include <doctest.h>

#include <set>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "twb/classifiers.hpp"
#include "twb/coding.hpp"
#include "twb/text.hpp"
#include "twb/translations.hpp"

using namespace twb;
using twb::testing::Gen;

namespace {
Variable numVar(std::uint64_t i) { return {Sort::num(), i}; }

std::size_t countKind(const Expr& e, Kind k) {
  std::size_t c = e.kind == k;
  for (const auto& x : e.kids) c += countKind(*x, k);
  return c;
}
}  // namespace

TEST_CASE("hat renames set variables through pairing") {
  using namespace mk;
  auto got = hat(*in(1, set(1, 0), numeral(5)));
  CHECK(*got == *in(0, set(0, coding::pair(1, 0).get_ui()), numeral(5)));
  auto arith = eq(num(0), num(1));
  CHECK(*hat(*arith) == *arith);
  Variable x{Sort::set(2), 0};
  auto q = hat(*exists(x, in(2, var(x), num(0))));
  REQUIRE(q->kind == Kind::Exists);
  CHECK(q->var == Variable{Sort::set(0), coding::pair(2, 0).get_ui()});
}

TEST_CASE("hat is injective and keeps complexity") {
  Gen g(51);
  std::set<std::string> images, sources;
  for (int i = 0; i < 500; ++i) {
    auto phi = g.saFormula(4, 3, true);
    auto h = hat(*phi);
    CHECK(complexity(*h) == complexity(*phi));
    CHECK(isWellSorted(*h, Language::Ar));
    if (sources.insert(testing::nameless(*phi)).second) CHECK(images.insert(testing::nameless(*h)).second);
  }
}

TEST_CASE("tilde") {
  using namespace mk;
  auto arith = eq(num(0), num(1));
  CHECK(*tilde(*arith) == *arith);
  CHECK(*tilde(*tr(1, num(0), num(1))) == *in(1, definedG(1, num(0)), pair(num(0), num(1))));
  auto all = forall(numVar(0), tr(1, num(0), zero()));
  CHECK(*tilde(*all) == *forall(numVar(0), in(1, definedG(1, num(0)), pair(num(0), zero()))));
}

TEST_CASE("eliminating defined symbols") {
  using namespace mk;
  Gen g(52);
  for (int i = 0; i < 100; ++i) {
    auto phi = g.patrFormula(4, 0, {});
    CHECK(*eliminateDefined(*tilde(*phi)) == *phi);
  }
  ExprPtr atom = in(1, definedG(1, num(0)), pair(num(0), num(1)));
  auto got = eliminateDefined(*atom);
  REQUIRE(got->kind == Kind::Exists);
  Variable y = got->var;
  CHECK(y.sort == Sort::set(1));
  auto want = exists(y, conj(instantiateFTrset(1, num(0), {}, y), in(1, var(y), pair(num(0), num(1)))));
  CHECK(alphaEqual(*got, *want));
  // pairing stays as a definitional symbol; only g and a disappear
  bool definedLeft = false;
  std::vector<const Expr*> todo{got.get()};
  while (!todo.empty()) {
    const Expr* e = todo.back();
    todo.pop_back();
    definedLeft = definedLeft || e->kind == Kind::DefinedG || e->kind == Kind::DefinedA;
    for (const auto& k : e->kids) todo.push_back(k.get());
  }
  CHECK_FALSE(definedLeft);
}

TEST_CASE("truth set formulas") {
  for (unsigned k = 1; k <= 3; ++k) {
    CHECK(isWellSorted(*buildA(k), Language::SA));
    CHECK(isWellSorted(*buildFTrset(k), Language::SA));
    CHECK(isWellSorted(*buildTrset(k), Language::SA));
    CHECK(isKSimple(k, *buildA(k)).isMember);
  }
  CHECK_THROWS(instantiateTrset(2, {}, {Sort::set(3), 0}));
}

TEST_CASE("brace terms and M_k") {
  using namespace mk;
  auto n = et::var(numVar(0));
  CHECK(*braceTerm(n, 0) == *n);
  Variable z{Sort::type(0), 0};
  Natural code = coding::encodeAbstraction(z, {numVar(0)}, *eqOmega(var(z), num(0)));
  CHECK(braceIndex(1) == code);
  CHECK(*braceTerm(n, 1) == *et::app(et::constant(Constant::comp(code)), n));
  auto decoded = coding::decodeAbstraction(braceIndex(2));
  REQUIRE(decoded.has_value());
  CHECK(decoded->z.sort == Sort::type(1));

  Variable x{Sort::type(1), 0};
  auto m = buildM(1, x);
  Variable zz{Sort::type(0), 5}, nn = numVar(5);
  CHECK(alphaEqual(*m, *forall(zz, imp(mem(0, var(zz), var(x)), exists(nn, eqOmega(var(zz), var(nn)))))));
  CHECK_THROWS_AS(buildM(0, x), DomainError);
}

TEST_CASE("star") {
  using namespace mk;
  auto arith = eq(num(0), num(1));
  CHECK(*star(*arith) == *arith);
  Variable x{Sort::set(1), 0};
  auto psi = in(1, var(x), num(0));
  auto got = star(*forall(x, psi));
  REQUIRE(got->kind == Kind::Forall);
  Variable big{Sort::type(1), 0};
  CHECK(got->var == big);
  REQUIRE(got->kids[0]->kind == Kind::Imp);
  CHECK(alphaEqual(*got->kids[0]->kids[0], *buildM(1, big)));
  CHECK(alphaEqual(*got->kids[0]->kids[1], *star(*psi)));
  CHECK_THROWS_AS(star(*tilde(*tr(1, num(0), num(1)))), SortError);
}

TEST_CASE("star maps k-simple to k-elementary") {
  Gen g(53);
  for (int i = 0; i < 300; ++i) {
    unsigned k = 1 + static_cast<unsigned>(g.below(4));
    auto phi = g.saFormula(4, k, false);
    REQUIRE(isKSimple(k, *phi).isMember);
    auto s = star(*phi);
    CHECK(isWellSorted(*s, Language::BT));
    CHECK_MESSAGE(isElementary(k, *s).isMember, printExpr(*phi));
  }
}

TEST_CASE("minus") {
  using namespace mk;
  CHECK(*minus(*bot()) == *bot());
  auto a = eqType(0, op(0), op(1)), b = eqOmega(op(0), num(0));
  CHECK(*minus(*disj(a, b)) == *negneg(disj(negneg(a), negneg(b))));
  CHECK(minusConst(Constant::comp(5)) == Constant::of(ConstKind::Zero));
  CHECK(minusConst(Constant::of(ConstKind::K)) == Constant::of(ConstKind::K));

  // comprehension constants are mapped through their bodies
  Variable z{Sort::type(0), 0};
  auto body = disj(eqType(0, var(z), op(1)), bot());
  Natural n = coding::encodeAbstraction(z, {}, *body);
  auto expected = coding::encodeAbstraction(z, {}, *minus(*body));
  CHECK(minusConst(Constant::comp(n)) == Constant::comp(expected));
  auto t = et::app(et::constant(Constant::comp(n)), et::of(ConstKind::K));
  CHECK(*minusTerm(t) == *et::app(et::constant(Constant::comp(expected)), et::of(ConstKind::K)));
}

TEST_CASE("minus lands in the negative grammar") {
  Gen g(54);
  for (int i = 0; i < 500; ++i) {
    auto phi = g.btFormula(5, 2, true);
    auto m = minus(*phi);
    CHECK(isNegative(*m));
    CHECK(testing::negativeOracle(*m));
    CHECK(countKind(*m, Kind::Or) == countKind(*phi, Kind::Or));
  }
}
