#include <doctest.h>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "twb/combinators.hpp"

using namespace twb;
using twb::testing::Gen;

namespace {
ETermPtr c(ConstKind k) { return et::of(k); }
ETermPtr op(std::uint64_t i) { return et::var({Sort::type(0), i}); }
ETermPtr nf(const ETermPtr& t, std::uint64_t budget = 10000) {
  auto r = reduce(t, budget);
  return r.normalForm;
}
bool sameNf(const ETermPtr& a, const ETermPtr& b) { return a && b && *a == *b; }
}  // namespace

TEST_CASE("basic laws") {
  auto a = op(0), b = op(1);
  CHECK(*nf(et::apps(c(ConstKind::K), {a, b})) == *a);
  CHECK(*nf(et::app(c(ConstKind::P1), et::apps(c(ConstKind::P), {a, b}))) == *a);
  CHECK(*nf(et::app(c(ConstKind::P2), et::apps(c(ConstKind::P), {a, b}))) == *b);
  CHECK(*nf(et::apps(c(ConstKind::D), {a, b, et::numeral(3), et::numeral(3)})) == *a);
  CHECK(*nf(et::apps(c(ConstKind::D), {a, b, et::numeral(3), et::numeral(4)})) == *b);
  CHECK(*reduce(parseETerm("(k a b)"), 100).normalForm == *parseETerm("a"));
}

TEST_CASE("d fires once its numeric arguments normalise") {
  auto a = op(0), b = op(1);
  auto three = nf(et::app(compileSuccessor(), et::numeral(2)));
  REQUIRE(three);
  auto lazy = et::app(compileSuccessor(), et::numeral(2));
  CHECK(*nf(et::apps(c(ConstKind::D), {a, b, lazy, et::numeral(3)})) == *a);
  CHECK(*nf(et::apps(c(ConstKind::D), {a, b, lazy, et::numeral(2)})) == *b);
}

TEST_CASE("s law on random closed terms") {
  Gen g(31);
  int compared = 0;
  for (int i = 0; i < 500; ++i) {
    auto a = g.closedTerm(3), b = g.closedTerm(3), x = g.closedTerm(3);
    auto lhs = nf(et::apps(c(ConstKind::S), {a, b, x}));
    auto rhs = nf(et::app(et::app(a, x), et::app(b, x)));
    if (!lhs || !rhs) continue;
    ++compared;
    CHECK(*lhs == *rhs);
  }
  CHECK(compared > 300);
}

TEST_CASE("reduction is deterministic") {
  Gen g(32);
  for (int i = 0; i < 200; ++i) {
    auto t = g.closedTerm(5);
    auto r1 = reduce(t, 2000), r2 = reduce(t, 2000);
    CHECK(r1.steps == r2.steps);
    CHECK(*r1.last == *r2.last);
  }
}

TEST_CASE("budget exhaustion is a value") {
  // s i i (s i i) with i = s k k loops
  auto i = et::apps(c(ConstKind::S), {c(ConstKind::K), c(ConstKind::K)});
  auto w = et::apps(c(ConstKind::S), {i, i});
  auto r = reduce(et::app(w, w), 500);
  CHECK(r.exhausted());
  CHECK(r.steps == 500);
  CHECK(r.last);
}

TEST_CASE("numerals") {
  CHECK(*et::numeral(0) == *c(ConstKind::Zero));
  auto p = c(ConstKind::P), z = c(ConstKind::Zero);
  CHECK(*et::numeral(2) == *et::app(et::app(p, et::app(et::app(p, z), z)), z));
  CHECK(numeralOf(*et::app(et::app(p, z), z)) == 1u);
  for (std::uint64_t m = 0; m <= 200; ++m) CHECK(numeralOf(*et::numeral(m)) == m);
  CHECK_FALSE(numeralOf(*c(ConstKind::K)).has_value());
}

TEST_CASE("bracket abstraction") {
  Variable x{Sort::type(0), 0};
  auto y = op(1);
  CHECK(*lambdaAbstract(x, et::var(x)) == *et::apps(c(ConstKind::S), {c(ConstKind::K), c(ConstKind::K)}));
  CHECK(*lambdaAbstract(x, y) == *et::app(c(ConstKind::K), y));
  auto pab = et::apps(c(ConstKind::P), {op(2), op(3)});
  auto lhs = nf(et::app(lambdaAbstract(x, et::app(c(ConstKind::P1), et::var(x))), pab));
  CHECK(sameNf(lhs, nf(et::app(c(ConstKind::P1), pab))));
  CHECK_THROWS_AS(lambdaAbstract({Sort::num(), 0}, y), DomainError);
}

TEST_CASE("closing terms") {
  CHECK(*closeTerm(op(0)) == *c(ConstKind::K));
  CHECK(*closeTerm(et::var({Sort::num(), 0})) == *c(ConstKind::Zero));
  CHECK(*closeTerm(c(ConstKind::K)) == *c(ConstKind::K));
  auto set = closeTerm(et::var({Sort::type(2), 0}));
  REQUIRE(set->kind == EKind::Const);
  CHECK(set->constant == Constant::comp(emptySetIndex(2)));
}

TEST_CASE("extracting the selected disjunct") {
  auto u = op(5);
  CHECK(extractDisjunct(testing::taggedRealizer(0, u), 1000).side == Disjunct::Left);
  CHECK(extractDisjunct(testing::taggedRealizer(1, u), 1000).side == Disjunct::Right);
  CHECK(extractDisjunct(c(ConstKind::S), 1000).side == Disjunct::Unknown);

  // parameters in the unselected component do not matter
  Gen g(33);
  std::vector<Variable> vars{{Sort::type(0), 0}, {Sort::type(0), 1}};
  for (int i = 0; i < 100; ++i) {
    std::uint64_t tag = g.below(3);
    auto closed = g.closedTerm(3);
    auto open = et::app(closed, g.openTerm(3, vars));
    CHECK(extractDisjunct(testing::taggedRealizer(tag, closed), 1000).side ==
          extractDisjunct(testing::taggedRealizer(tag, open), 1000).side);
  }
}

TEST_CASE("successor and constant functions") {
  CHECK(*nf(et::app(compileSuccessor(), et::numeral(0))) == *et::numeral(1));
  CHECK(*nf(et::app(compileSuccessor(), et::numeral(4))) == *et::numeral(5));
  CHECK(*nf(et::app(compileConstFn(7), op(0))) == *et::numeral(7));
}
