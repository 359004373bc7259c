// mkcorpus: writes the sample proof corpus and checks every proof on the way.
//
//   mkcorpus <outdir>
//
// Each file is <outdir>/<stem>.proof and starts with a "; theory: ID" line.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "twb/coding.hpp"
#include "twb/eterm.hpp"
#include "twb/proofs.hpp"
#include "twb/syntax.hpp"
#include "twb/text.hpp"

using namespace twb;
namespace fs = std::filesystem;

namespace {

struct Entry {
  std::string stem;
  std::string theory;
  Proof proof;
};

Variable numv(std::uint64_t i) { return {Sort::num(), i}; }
Variable opv(std::uint64_t i) { return {Sort::type(0), i}; }

// ---------------------------------------------------------------- language-neutral proofs

Proof identityProof(const ExprPtr& a) {
  ProofBuilder b;
  b.identity(a);
  return b.finish();
}

/// (A and B) -> (B and A)
Proof commuteProof(const ExprPtr& a, const ExprPtr& b) {
  using namespace mk;
  ProofBuilder pb;
  ExprPtr ab = conj(a, b), ba = conj(b, a);
  std::size_t left = pb.logical("L3", imp(ab, a));
  std::size_t right = pb.logical("L4", imp(ab, b));
  std::size_t pairUp = pb.logical("L5", imp(b, imp(a, ba)));
  std::size_t viaB = pb.chain(right, pairUp);
  std::size_t dist = pb.logical("L2", imp(imp(ab, imp(a, ba)), imp(imp(ab, a), imp(ab, ba))));
  std::size_t half = pb.mp(viaB, dist);
  pb.mp(left, half);
  return pb.finish();
}

/// forall x (bot -> A(x))
Proof exFalsoProof(const ExprPtr& a, const Variable& x) {
  ProofBuilder pb;
  std::size_t l = pb.logical("L9", mk::imp(mk::bot(), a));
  pb.gen(l, x);
  return pb.finish();
}

/// A -> (A or B), generalised over x.
Proof disjunctionProof(const ExprPtr& a, const ExprPtr& b, const Variable& x) {
  ProofBuilder pb;
  std::size_t l = pb.logical("L6", mk::imp(a, mk::disj(a, b)));
  pb.gen(l, x);
  return pb.finish();
}

/// not not A -> A, closed over x.
Proof dneProof(const ExprPtr& a, const Variable& x) {
  ProofBuilder pb;
  std::size_t l = pb.logical("DNE", mk::imp(mk::negneg(a), a));
  pb.gen(l, x);
  return pb.finish();
}

/// forall n (A(n) -> exists n' A(n')) style: A(t) -> exists x A(x).
Proof witnessProof(const ExprPtr& instance, const Variable& x, const ExprPtr& body) {
  ProofBuilder pb;
  pb.logical("Q2", mk::imp(instance, mk::exists(x, body)));
  return pb.finish();
}

/// An axiom closed by generalisation over the listed variables.
Proof closedAxiom(const std::string& id, const ExprPtr& ax, const std::vector<Variable>& vars) {
  ProofBuilder pb;
  std::size_t l = pb.axiom(id, ax);
  for (const auto& v : vars) l = pb.gen(l, v);
  return pb.finish();
}

// ---------------------------------------------------------------- arithmetic

/// forall n (n = n) by the induction schema.
Proof reflexivityByInduction() {
  using namespace mk;
  ProofBuilder pb;
  Variable n = numv(0);
  ExprPtr nn = eq(var(n), var(n));
  ExprPtr succ = plus(var(n), one());
  std::size_t base = pb.logical("E1", eq(zero(), zero()));
  std::size_t next = pb.logical("E1", eq(succ, succ));
  std::size_t step = pb.weaken(next, nn);
  std::size_t stepAll = pb.gen(step, n);
  std::size_t both = pb.conjoin(base, stepAll);
  std::size_t ind = pb.axiom("IND", imp(pb.formula(both), forall(n, nn)));
  pb.mp(both, ind);
  return pb.finish();
}

/// forall n forall m (n + 1 = m + 1 -> n = m)
Proof injectivity() {
  using namespace mk;
  ExprPtr n = num(0), m = num(1);
  return closedAxiom("PA2", imp(eq(plus(n, one()), plus(m, one())), eq(n, m)), {numv(1), numv(0)});
}

/// n + 0 = n and n * 0 = 0, conjoined and closed.
Proof zeroLaws() {
  using namespace mk;
  ProofBuilder pb;
  ExprPtr n = num(0);
  std::size_t a = pb.axiom("PA3", eq(plus(n, zero()), n));
  std::size_t b = pb.axiom("PA5", eq(times(n, zero()), zero()));
  std::size_t c = pb.conjoin(a, b);
  pb.gen(c, numv(0));
  return pb.finish();
}

/// forall n (n in_k x iff n in_k x)
Proof setReflexivity(unsigned k, const ExprPtr& x) {
  using namespace mk;
  ProofBuilder pb;
  ExprPtr a = in(k, x, num(0));
  std::size_t i1 = pb.identity(a);
  std::size_t i2 = pb.identity(a);
  std::size_t both = pb.conjoin(i1, i2);
  pb.gen(both, numv(0));
  return pb.finish();
}

/// exists z forall n (n in_k z iff body)
ExprPtr comprehension(unsigned k, const ExprPtr& body) {
  Variable z = {Sort::set(k), 7};
  Variable n = numv(0);
  return mk::exists(z, mk::forall(n, mk::iff(mk::in(k, mk::var(z), mk::var(n)), body)));
}

/// Choice instance with phi(n, x) = forall m (m in x iff m = n); sets of
/// sort k for x and sort k+1 for y, or all sort 0 when ar is set.
ExprPtr choice(unsigned k, bool ar) {
  using namespace mk;
  const unsigned memberLevel = ar ? 0 : k;
  const unsigned pairLevel = ar ? 0 : k + 1;
  Variable n = numv(0), m = numv(1), j = numv(2);
  Variable x = {Sort::set(ar ? 0 : k), 1}, z = {Sort::set(ar ? 0 : k), 2};
  Variable y = {Sort::set(ar ? 0 : k + 1), 3};
  auto phiOf = [&](const Variable& s) {
    return forall(j, iff(in(memberLevel, var(s), var(j)), eq(var(j), var(n))));
  };
  ExprPtr same = forall(m, iff(in(memberLevel, var(x), var(m)), in(memberLevel, var(z), var(m))));
  ExprPtr unique = exists(x, conj(phiOf(x), forall(z, imp(phiOf(z), same))));
  ExprPtr slice = forall(m, iff(in(memberLevel, var(x), var(m)), in(pairLevel, var(y), pair(var(n), var(m)))));
  return imp(forall(n, unique), exists(y, forall(n, exists(x, conj(phiOf(x), slice)))));
}

// ---------------------------------------------------------------- BT

ExprPtr kleene(const ETermPtr& t, const ETermPtr& tau, std::initializer_list<Variable> avoid) {
  FreshSupply fresh;
  for (const auto& v : avoid) fresh.reserve(v);
  return unfoldKleene(*t, *tau, fresh);
}

/// forall x forall y (k x y ~ x)
Proof btConstant() {
  Variable x = opv(0), y = opv(1);
  auto ax = kleene(et::apps(et::of(ConstKind::K), {et::var(x), et::var(y)}), et::var(x), {x, y});
  return closedAxiom("BT3.2", ax, {y, x});
}

/// forall n exists x (x =_{0 omega} n)
Proof btNumerals() {
  using namespace mk;
  Variable x = opv(0);
  return closedAxiom("BT3.13", exists(x, eqOmega(var(x), num(0))), {numv(0)});
}

/// exists U^1 (c_e ~ U and forall Z^0 (Z in_0 U iff bot)), e the code of Z.bot
Proof btEmptySet() {
  using namespace mk;
  Variable z = opv(0), u = {Sort::type(1), 0};
  Natural code = coding::encodeAbstraction(z, {}, *bot());
  auto link = kleene(et::constant(Constant::comp(code)), et::var(u), {z, u});
  ProofBuilder pb;
  pb.axiom("BT-comp", exists(u, conj(link, forall(z, iff(mem(0, var(z), var(u)), bot())))));
  return pb.finish();
}

/// exists x (x =_{0 omega} n) by the induction rule.
Proof btInduction() {
  using namespace mk;
  Variable x = opv(0), n = numv(0), m = numv(1);
  auto phiAt = [&](ExprPtr t) { return exists(x, eqOmega(var(x), std::move(t))); };
  ExprPtr link = kleene(et::apps(et::of(ConstKind::P), {et::var(n), et::of(ConstKind::Zero)}), et::var(m), {x, n, m});
  ExprPtr both = conj(link, phiAt(var(m)));
  ExprPtr some = exists(m, both);

  ProofBuilder pb;
  std::size_t base = pb.axiom("BT3.13", phiAt(zero()));
  std::size_t atM = pb.axiom("BT3.13", phiAt(var(m)));
  std::size_t pairUp = pb.logical("L5", imp(link, imp(phiAt(var(m)), both)));
  std::size_t lifted = pb.weaken(atM, link);
  std::size_t dist = pb.logical("L2", imp(pb.formula(pairUp), imp(pb.formula(lifted), imp(link, both))));
  std::size_t half = pb.mp(pairUp, dist);
  std::size_t linkBoth = pb.mp(lifted, half);
  std::size_t intro = pb.logical("Q2", imp(both, some));
  std::size_t linkSome = pb.chain(linkBoth, intro);
  std::size_t all = pb.gen(linkSome, m);
  std::size_t q4 = pb.logical("Q4", imp(pb.formula(all), imp(exists(m, link), some)));
  std::size_t step1 = pb.mp(all, q4);
  std::size_t succ = pb.axiom("BT3.9", exists(m, link));
  std::size_t got = pb.mp(succ, step1);
  std::size_t step = pb.weaken(got, phiAt(var(n)));
  pb.ind(base, step, phiAt(var(n)));
  return pb.finish();
}

/// forall x forall y (x =_{00} y -> x =_{00} y) restricted to the equality atom.
ExprPtr btAtom(std::uint64_t a, std::uint64_t b) { return mk::eqType(0, mk::op(a), mk::op(b)); }

// ---------------------------------------------------------------- PATr

Proof truthOfZero(unsigned k) {
  using namespace mk;
  return closedAxiom("Tr4", neg(tr(k, zero(), num(1))), {numv(1)});
}

Proof truthFormulas(unsigned k) {
  using namespace mk;
  ExprPtr M = num(0), L = num(1);
  return closedAxiom("Tr1", imp(tr(k, M, L), conj(form(numeral(k - 1), M), ev(M, L))), {numv(1), numv(0)});
}

std::vector<Entry> buildCorpus() {
  using namespace mk;
  std::vector<Entry> out;
  auto add = [&](std::string stem, std::string theory, Proof p) {
    out.push_back({std::move(stem), std::move(theory), std::move(p)});
  };

  // BT
  {
    ExprPtr a = btAtom(0, 1), b = btAtom(1, 0);
    add("bt-identity", "BT:0", identityProof(a));
    add("bt-commute", "BT:0", commuteProof(a, b));
    add("bt-exfalso", "BT:0", exFalsoProof(a, opv(0)));
    add("bt-constant", "BT:0", btConstant());
    add("bt-numerals", "BT:0", btNumerals());
    add("bt-empty-set", "BT:1", btEmptySet());
    add("bt-induction", "BT:0", btInduction());
  }
  // BTcl
  {
    ExprPtr a = btAtom(0, 1), b = btAtom(2, 3);
    add("btcl-dne", "BTcl:0", dneProof(a, opv(0)));
    add("btcl-identity", "BTcl", identityProof(neg(a)));
    add("btcl-commute", "BTcl:0", commuteProof(a, b));
    add("btcl-disjunction", "BTcl:0", disjunctionProof(a, b, opv(1)));
    add("btcl-numerals", "BTcl:0", btNumerals());
    add("btcl-empty-set", "BTcl:1", btEmptySet());
  }
  // SA
  {
    ExprPtr a = in(1, set(1, 0), num(0)), b = eq(num(0), num(1));
    add("sa-reflexivity", "SA", reflexivityByInduction());
    add("sa-set-reflexivity", "SA:1", setReflexivity(1, set(1, 0)));
    add("sa-commute", "SA:1", commuteProof(a, b));
    add("sa-comprehension", "SA:1", closedAxiom("SA-comp", comprehension(1, eq(num(0), num(0))), {}));
    add("sa-choice", "SA:2", closedAxiom("SA-choice", choice(1, false), {}));
    add("sa-zero-laws", "SA:0", zeroLaws());
    add("sa-dne", "SA:1", dneProof(a, numv(0)));
  }
  // Ar
  {
    ExprPtr a = in(0, set(0, 0), num(0)), b = eq(num(0), num(1));
    add("ar-reflexivity", "Ar", reflexivityByInduction());
    add("ar-set-reflexivity", "Ar", setReflexivity(0, set(0, 0)));
    add("ar-commute", "Ar", commuteProof(a, b));
    add("ar-comprehension", "Ar", closedAxiom("Ar-comp", comprehension(0, in(0, set(0, 3), num(0))), {{Sort::set(0), 3}}));
    add("ar-injectivity", "Ar", injectivity());
    add("ar-witness", "Ar", witnessProof(eq(zero(), zero()), numv(0), eq(num(0), num(0))));
  }
  // Ar + AC!
  {
    ExprPtr a = in(0, set(0, 0), num(0));
    add("aracb-choice", "ArACBang", closedAxiom("AC!", choice(0, true), {}));
    add("aracb-reflexivity", "ArACBang", reflexivityByInduction());
    add("aracb-identity", "ArACBang", identityProof(a));
    add("aracb-zero-laws", "ArACBang", zeroLaws());
    add("aracb-dne", "ArACBang", dneProof(a, numv(0)));
  }
  // Ar + Delta-1-1 comprehension
  {
    ExprPtr a = in(0, set(0, 0), num(0));
    Variable v = {Sort::set(0), 4}, u = {Sort::set(0), 5};
    ExprPtr pi = forall(v, in(0, var(v), num(0)));
    ExprPtr sigma = exists(u, in(0, var(u), num(0)));
    ExprPtr hyp = forall(numv(0), iff(pi, sigma));
    ExprPtr delta = imp(hyp, comprehension(0, sigma));
    add("ard-comprehension", "ArDelta11C", closedAxiom("D11C", delta, {}));
    add("ard-reflexivity", "ArDelta11C", reflexivityByInduction());
    add("ard-commute", "ArDelta11C", commuteProof(a, eq(num(1), num(0))));
    add("ard-exfalso", "ArDelta11C", exFalsoProof(a, numv(0)));
    add("ard-injectivity", "ArDelta11C", injectivity());
  }
  // PATr
  {
    ExprPtr a = tr(1, num(0), num(1)), b = eq(num(0), num(1));
    add("patr-zero-false", "PATr:1", truthOfZero(1));
    add("patr-formulas", "PATr:2", truthFormulas(2));
    add("patr-reflexivity", "PATr:0", reflexivityByInduction());
    add("patr-commute", "PATr:1", commuteProof(a, b));
    add("patr-dne", "PATr:1", dneProof(a, numv(0)));
    add("patr-zero-laws", "PATr:0", zeroLaws());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: mkcorpus <outdir>\n";
    return 2;
  }
  fs::path dir = argv[1];
  fs::create_directories(dir);
  int bad = 0;
  for (const auto& e : buildCorpus()) {
    TheoryId id = parseTheoryId(e.theory);
    std::string text = printProof(e.proof);
    Verdict v = checkProof(id, parseProof(text, id.language()));
    if (!v.accepted) {
      std::cerr << e.stem << ": rejected at line " << v.line << ": " << v.reason << "\n";
      ++bad;
      continue;
    }
    std::ofstream f(dir / (e.stem + ".proof"));
    f << "; theory: " << e.theory << "\n" << text;
  }
  return bad == 0 ? 0 : 1;
}
