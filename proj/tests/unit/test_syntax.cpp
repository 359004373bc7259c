#include <doctest.h>

#include <algorithm>
#include <set>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "twb/eterm.hpp"
#include "twb/syntax.hpp"
#include "twb/text.hpp"

using namespace twb;
using twb::testing::Gen;

namespace {
Variable n(std::uint64_t i) { return {Sort::num(), i}; }
ExprPtr nv(std::uint64_t i) { return mk::num(i); }

std::size_t countExists(const Expr& e) {
  std::size_t c = e.kind == Kind::Exists;
  for (const auto& k : e.kids) c += countExists(*k);
  return c;
}
}  // namespace

TEST_CASE("parse builds the constructor image") {
  auto e = parseExpr("(in 1 (set 1 0) (n 5))", Language::SA);
  CHECK(e->kind == Kind::In);
  CHECK(e->level == 1);
  CHECK(e->kids[0]->var == Variable{Sort::set(1), 0});
  CHECK(arithmeticNumeralValue(*e->kids[1]) == 5u);

  auto ap = parseExpr("(ap f x y)", Language::BT);
  REQUIRE(ap->kind == Kind::Ap);
  for (const auto& k : ap->kids) CHECK(k->var.sort == Sort::type(0));
  CHECK(ap->kids[0]->var != ap->kids[1]->var);

  auto all = parseExpr("(forall (num 0) (eq (v 0) (v 0)))", Language::PATr);
  CHECK(*all == *mk::forall(n(0), mk::eq(nv(0), nv(0))));
}

TEST_CASE("parse rejects ill-sorted input and reports positions") {
  CHECK_THROWS_AS(parseExpr("(in 2 (set 1 0) (n 5))", Language::SA), SortError);
  CHECK_THROWS_AS(parseExpr("(tr 1 (v 0) (v 1))", Language::SA), SortError);
  CHECK_THROWS_AS(parseExpr("(ap f x", Language::BT), SyntaxError);
  try {
    parseExpr("(eq (v 0)\n  (frob 1))", Language::PATr);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("print then parse is the identity on generated expressions") {
  Gen g(11);
  for (Language lang : {Language::BT, Language::SA, Language::Ar, Language::PATr}) {
    for (int i = 0; i < 1000; ++i) {
      auto e = g.formula(lang, 5);
      REQUIRE(isWellSorted(*e, lang));
      auto back = parseExpr(printExpr(*e), lang);
      REQUIRE_MESSAGE(*back == *e, printExpr(*e));
    }
  }
}

TEST_CASE("substituteNum") {
  using namespace mk;
  CHECK(*substituteNum(eq(nv(0), nv(1)), n(0), plus(one(), one())) == *eq(plus(one(), one()), nv(1)));
  auto bound = forall(n(0), eq(nv(0), nv(1)));
  CHECK(*substituteNum(bound, n(0), one()) == *bound);

  // the binder n1 must move out of the way of the incoming n1
  auto r = substituteNum(exists(n(1), eq(nv(1), nv(0))), n(0), nv(1));
  CHECK(testing::nameless(*r) == testing::nameless(*exists(n(2), eq(nv(2), nv(1)))));
  CHECK(r->var != n(1));

  CHECK_THROWS_AS(substituteNum(eq(nv(0), nv(0)), n(0), mk::set(1, 0)), SortError);
}

TEST_CASE("substituteNum properties on generated formulas") {
  Gen g(12);
  for (int i = 0; i < 500; ++i) {
    auto phi = g.patrFormula(5, 2, {});
    for (std::uint64_t x = 1; x <= 3; ++x) {
      CHECK(testing::nameless(*substituteNum(phi, n(x), nv(x))) == testing::nameless(*phi));
      auto t = g.numTerm(2, {n(1), n(4)});
      auto out = substituteNum(phi, n(x), t);
      auto before = testing::freeNumberIndices(*phi);
      if (std::find(before.begin(), before.end(), x) == before.end()) continue;
      std::set<std::uint64_t> expected(before.begin(), before.end());
      expected.erase(x);
      for (auto j : testing::freeNumberIndices(*t)) expected.insert(j);
      auto got = testing::freeNumberIndices(*out);
      CHECK(std::set<std::uint64_t>(got.begin(), got.end()) == expected);
    }
  }
}

TEST_CASE("universalClosure") {
  using namespace mk;
  CHECK(*universalClosure(eq(nv(0), nv(1))) == *forall(n(0), forall(n(1), eq(nv(0), nv(1)))));
  auto closed = forall(n(0), eq(nv(0), nv(0)));
  CHECK(*universalClosure(closed) == *closed);
  Variable x{Sort::set(1), 0};
  CHECK(*universalClosure(in(1, var(x), numeral(5))) == *forall(x, in(1, var(x), numeral(5))));

  Gen g(13);
  for (int i = 0; i < 300; ++i) CHECK(freeVariables(*universalClosure(g.formula(Language::SA, 5))).empty());
}

TEST_CASE("complexity counts connectives and quantifiers") {
  using namespace mk;
  auto a = eq(nv(0), nv(1));
  CHECK(complexity(*a) == 0);
  CHECK(complexity(*disj(a, a)) == 1);
  CHECK(complexity(*forall(n(0), neg(a))) == 2);
}

TEST_CASE("unfolding external relations") {
  using namespace mk;
  Variable x{Sort::type(0), 0}, f{Sort::type(0), 1}, a{Sort::type(0), 2};
  {
    FreshSupply fresh;
    fresh.reserve(x);
    CHECK(*unfoldEvalTo(*et::of(ConstKind::K), x, fresh) == *eqType(0, var(x), constant(Constant::of(ConstKind::K))));
  }
  {
    FreshSupply fresh;
    for (auto v : {x, f, a}) fresh.reserve(v);
    auto got = unfoldEvalTo(*et::app(et::var(f), et::var(a)), x, fresh);
    Variable y{Sort::type(0), 10}, z{Sort::type(0), 11};
    auto want = exists(y, exists(z, conj(conj(eqType(0, var(y), var(f)), eqType(0, var(z), var(a))),
                                         ap(var(y), var(z), var(x)))));
    CHECK(alphaEqual(*got, *want));
  }
  {
    FreshSupply fresh;
    auto got = unfoldDefined(*et::of(ConstKind::K), fresh);
    REQUIRE(got->kind == Kind::Exists);
    CHECK(*got->kids[0] == *eqType(0, var(got->var), constant(Constant::of(ConstKind::K))));
  }
}

TEST_CASE("t ~ x carries two existentials per application") {
  Gen g(14);
  Variable x{Sort::type(0), 0};
  for (int i = 0; i < 300; ++i) {
    auto t = g.closedTerm(4);
    std::size_t apps = 0;
    std::vector<const ETerm*> todo{t.get()};
    while (!todo.empty()) {
      const ETerm* u = todo.back();
      todo.pop_back();
      if (u->kind == EKind::App) {
        ++apps;
        todo.push_back(u->fun.get());
        todo.push_back(u->arg.get());
      }
    }
    FreshSupply fresh;
    fresh.reserve(x);
    CHECK(countExists(*unfoldEvalTo(*t, x, fresh)) == 2 * apps);
  }
}

TEST_CASE("tuples") {
  auto a = et::var({Sort::type(0), 0}), b = et::var({Sort::type(0), 1}), c = et::var({Sort::type(0), 2});
  auto p = et::of(ConstKind::P);
  CHECK(*et::tuple({a}) == *a);
  CHECK(*et::tuple({a, b}) == *et::app(et::app(p, a), b));
  CHECK(*et::tuple({a, b, c}) == *et::app(et::app(p, et::app(et::app(p, a), b)), c));
  CHECK_THROWS_AS(et::tuple({}), DomainError);
}
