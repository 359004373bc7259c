#include <doctest.h>

#include "../support/generators.hpp"
#include "twb/classifiers.hpp"
#include "twb/coding.hpp"
#include "twb/proofs.hpp"
#include "twb/text.hpp"
#include "twb/translations.hpp"

using namespace twb;
using twb::testing::Gen;

namespace {
TheoryId theory(const char* s) { return parseTheoryId(s); }
Variable numVar(std::uint64_t i) { return {Sort::num(), i}; }
Variable opVar(std::uint64_t i) { return {Sort::type(0), i}; }

ExprPtr kleene(const ETermPtr& t, const ETermPtr& tau) {
  FreshSupply fresh = supplyFor({t.get(), tau.get()});
  return unfoldKleene(*t, *tau, fresh);
}

// operands are variables or operator constants; numerals and zero are not
ETermPtr randomOperand(Gen& g) {
  static const ConstKind kinds[] = {ConstKind::K, ConstKind::S, ConstKind::P, ConstKind::P1, ConstKind::P2, ConstKind::D};
  if (g.coin(0.3)) return et::of(kinds[g.below(std::size(kinds))]);
  return et::var(opVar(g.below(6)));
}
}  // namespace

TEST_CASE("theory ids") {
  auto t = theory("BTcl:1:r");
  CHECK(t.base == TheoryBase::BTcl);
  CHECK(t.level == 1u);
  CHECK(t.restrictedInduction);
  CHECK(theoryName(t) == "BTcl:1:r");
  CHECK(theory("PATr:1").language() == Language::PATr);
  CHECK_THROWS_AS(theory("ZF"), DomainError);
  CHECK_THROWS_AS(theory("Ar:2"), DomainError);
  CHECK(theory("SA").classical());
  CHECK_FALSE(theory("BT").classical());
}

TEST_CASE("identity derivation and perturbation") {
  auto a = mk::eqType(0, mk::op(0), mk::op(1));
  ProofBuilder pb;
  pb.identity(a);
  Proof p = pb.finish();
  CHECK(checkProof(theory("BT"), p).accepted);

  for (std::size_t line = 0; line < p.lines.size(); ++line) {
    Proof q = p;
    q.lines[line].formula = mk::conj(q.lines[line].formula, a);
    auto v = checkProof(theory("BT"), q);
    CHECK_FALSE(v.accepted);
    CHECK(v.line <= line + 1);
  }
}

TEST_CASE("proof text round trip") {
  ProofBuilder pb;
  std::size_t l = pb.axiom("PA3", mk::eq(mk::plus(mk::num(0), mk::zero()), mk::num(0)));
  pb.gen(l, numVar(0));
  Proof p = pb.finish();
  Proof back = parseProof(printProof(p), Language::SA);
  CHECK(printProof(back) == printProof(p));
  CHECK(checkProof(theory("SA"), back).accepted);
  CHECK_THROWS_AS(parseProof("(((formula bot) (by (frob 1))))", Language::SA), SyntaxError);
}

TEST_CASE("BT axiom recognition") {
  auto t = theory("BT");
  auto x = mk::op(0);
  CHECK(isBTAxiom(t, *mk::eqType(0, x, x)) == std::string("BT2.1"));
  auto k = et::apps(et::of(ConstKind::K), {et::var(opVar(0)), et::var(opVar(1))});
  CHECK(isBTAxiom(t, *kleene(k, et::var(opVar(0)))) == std::string("BT3.2"));

  Variable z = opVar(0), u{Sort::type(1), 0};
  auto comp = [&](const Natural& n) {
    auto link = kleene(et::constant(Constant::comp(n)), et::var(u));
    return mk::exists(u, mk::conj(link, mk::forall(z, mk::iff(mk::mem(0, mk::var(z), mk::var(u)), mk::bot()))));
  };
  Natural good = coding::encodeAbstraction(z, {}, *mk::bot());
  CHECK(isBTAxiom(t, *comp(good)) == std::string("BT-comp"));
  CHECK_FALSE(isBTAxiom(t, *comp(good + 1)).has_value());
  CHECK_FALSE(isBTAxiom(theory("BT:0"), *comp(good)).has_value());
  CHECK_FALSE(isBTAxiom(theory("SA"), *mk::eqType(0, x, x)).has_value());
}

TEST_CASE("arithmetic axiom recognition") {
  using namespace mk;
  auto sa = theory("SA");
  CHECK(isSAAxiom(sa, *neg(eq(plus(num(0), one()), zero()))) == std::string("PA1"));
  Variable z{Sort::set(1), 0};
  auto compr = exists(z, forall(numVar(0), iff(in(1, var(z), num(0)), eq(num(0), num(0)))));
  CHECK(isSAAxiom(sa, *compr) == std::string("SA-comp"));
  // body mentioning z is not an instance
  auto self = exists(z, forall(numVar(0), iff(in(1, var(z), num(0)), in(1, var(z), num(0)))));
  CHECK_FALSE(isSAAxiom(sa, *self).has_value());

  // induction over a set-quantified body
  Variable x{Sort::set(1), 1};
  auto body = [&](ExprPtr t) { return exists(x, in(1, var(x), t)); };
  Variable n = numVar(0);
  auto ind = imp(conj(body(zero()), forall(n, imp(body(var(n)), body(plus(var(n), one()))))), forall(n, body(var(n))));
  CHECK(isSAAxiom(sa, *ind) == std::string("IND"));
  CHECK_FALSE(isSAAxiom(theory("SA:r"), *ind).has_value());

  CHECK(isArAxiom(theory("Ar"), *eq(times(num(0), zero()), zero())) == std::string("PA5"));
  CHECK(isPATrAxiom(theory("PATr"), *neg(tr(2, zero(), num(1)))) == std::string("Tr4"));
  ProofBuilder pb;
  pb.axiom("Tr4", neg(tr(2, zero(), num(1))));
  CHECK(checkProof(theory("PATr:2"), pb.finish()).accepted);
  CHECK_FALSE(checkProof(theory("PATr:1"), pb.finish()).accepted);
}

TEST_CASE("generated instances are recognised with the right id") {
  using namespace mk;
  Gen g(71);
  auto sa = theory("SA"), bt = theory("BT"), patr = theory("PATr");
  std::vector<Variable> nums{numVar(0), numVar(1), numVar(2)};
  for (int i = 0; i < 500; ++i) {
    auto t = g.numTerm(3, nums), u = g.numTerm(3, nums);
    CHECK(isSAAxiom(sa, *neg(eq(plus(t, one()), zero()))) == std::string("PA1"));
    CHECK(isSAAxiom(sa, *imp(eq(plus(t, one()), plus(u, one())), eq(t, u))) == std::string("PA2"));
    CHECK(isSAAxiom(sa, *eq(plus(t, zero()), t)) == std::string("PA3"));
    CHECK(isSAAxiom(sa, *eq(plus(t, plus(u, one())), plus(plus(t, u), one()))) == std::string("PA4"));
    CHECK(isSAAxiom(sa, *eq(times(t, plus(u, one())), plus(times(t, u), t))) == std::string("PA6"));

    unsigned k = 1 + static_cast<unsigned>(g.below(3));
    CHECK(isPATrAxiom(patr, *neg(tr(k, zero(), t))) == std::string("Tr4"));

    auto phi = g.saFormula(3, 2, false);
    Variable z{Sort::set(k), 9};
    auto compr = exists(z, forall(numVar(0), iff(in(k, var(z), num(0)), phi)));
    bool simple = isKSimple(k, *phi).isMember;
    CHECK(isSAAxiom(sa, *compr).has_value() == simple);

    auto a = randomOperand(g), b = randomOperand(g);
    CHECK(isBTAxiom(bt, *kleene(et::apps(et::of(ConstKind::K), {a, b}), a)) == std::string("BT3.2"));
    auto pab = et::apps(et::of(ConstKind::P), {a, b});
    CHECK(isBTAxiom(bt, *kleene(et::app(et::of(ConstKind::P1), pab), a)).has_value());
  }
}

TEST_CASE("classical and intuitionistic separation") {
  auto a = mk::eqType(0, mk::op(0), mk::op(1));
  auto dne = mk::imp(mk::negneg(a), a);
  CHECK(isLogicalInstance(theory("BTcl"), "DNE", *dne));
  CHECK_FALSE(isLogicalInstance(theory("BT"), "DNE", *dne));
  CHECK(recognizeLogical(theory("BT"), *dne) != std::string("DNE"));
}

TEST_CASE("fragment gate") {
  using namespace mk;
  Variable z{Sort::type(1), 0}, u{Sort::type(2), 0};
  Natural code = coding::encodeAbstraction(z, {}, *bot());
  auto link = kleene(et::constant(Constant::comp(code)), et::var(u));
  auto inst = exists(u, conj(link, forall(z, iff(mem(1, var(z), var(u)), bot()))));
  ProofBuilder pb;
  pb.axiom("BT-comp", inst);
  Proof p = pb.finish();
  CHECK(checkProof(theory("BT:2"), p).accepted);
  auto v = checkProof(theory("BT:1"), p);
  CHECK_FALSE(v.accepted);
  CHECK(v.line == 1);
}

TEST_CASE("modus ponens and generalization are exact") {
  using namespace mk;
  ProofBuilder pb;
  std::size_t a = pb.logical("E1", eq(num(0), num(0)));
  pb.gen(a, numVar(0));
  Proof p = pb.finish();
  CHECK(checkProof(theory("PATr"), p).accepted);
  p.lines[1].by.var = numVar(1);
  CHECK_FALSE(checkProof(theory("PATr"), p).accepted);
  Proof q = pb.finish();
  q.lines[1].by.first = 2;
  CHECK_FALSE(checkProof(theory("PATr"), q).accepted);
}
