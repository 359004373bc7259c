#include <doctest.h>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "twb/coding.hpp"
#include "twb/evaluator.hpp"
#include "twb/text.hpp"

using namespace twb;
using twb::testing::Gen;

namespace {
ExprPtr pa(const char* s) { return parseExpr(s, Language::PATr); }
Natural seq(std::initializer_list<Natural> xs) { return coding::seqCode(std::vector<Natural>(xs)); }
}  // namespace

TEST_CASE("closed term values") {
  CHECK(evalClosedTerm(*pa("(plus (plus 1 1) 1)"), 0) == 3);
  CHECK(evalClosedTerm(*pa("(times (v 1) (plus (v 1) 1))"), seq({4})) == 20);
  CHECK_THROWS_AS(evalClosedTerm(*pa("(v 2)"), seq({4})), DomainError);
}

TEST_CASE("term values agree with the code evaluator and the oracle") {
  Gen g(61);
  std::vector<Variable> vars{{Sort::num(), 1}, {Sort::num(), 2}, {Sort::num(), 3}};
  for (int i = 0; i < 500; ++i) {
    auto t = g.numTerm(4, vars);
    std::vector<std::uint64_t> env{g.below(20), g.below(20), g.below(20)};
    std::vector<Natural> envN(env.begin(), env.end());
    Natural l = coding::seqCode(envN);
    Natural v = evalClosedTerm(*t, l);
    CHECK(v == coding::evalTermCode(coding::encode(*t), l));
    auto o = testing::termOracle(*t, env);
    REQUIRE(o.has_value());
    CHECK(v == Natural(static_cast<unsigned long>(*o)));
  }
}

TEST_CASE("bounded arithmetic truth") {
  CHECK(evalArithmetic(*pa("(eq (plus 1 1) (times 1 (plus 1 1)))"), 0, 10).value == Truth::True);
  auto none = evalArithmetic(*pa("(exists (v 1) (eq (plus (v 1) 1) 0))"), 0, 100);
  CHECK(none.value == Truth::Unknown);
  CHECK(none.reason == OpenReason::Bound);
  for (std::uint64_t b : {0, 5, 50}) CHECK(evalArithmetic(*pa("(forall (v 1) (eq (v 1) (v 1)))"), 0, b).value == Truth::Unknown);
  auto w = evalArithmetic(*pa("(exists (v 1) (eq (times (v 1) (v 1)) (n 9)))"), 0, 10);
  CHECK(w.value == Truth::True);
  CHECK(w.witness == 3);
  auto c = evalArithmetic(*pa("(forall (v 1) (eq (times (v 1) 0) (v 1)))"), 0, 10);
  CHECK(c.value == Truth::False);
  CHECK(c.witness == 1);
}

TEST_CASE("quantifier-free formulas always decide") {
  Gen g(62);
  for (int i = 0; i < 300; ++i) {
    auto phi = g.patrFormula(4, 0, {});
    bool qf = true;
    std::vector<const Expr*> todo{phi.get()};
    while (!todo.empty()) {
      auto e = todo.back();
      todo.pop_back();
      qf = qf && !e->isQuantifier();
      for (const auto& k : e->kids) todo.push_back(k.get());
    }
    if (!qf) continue;
    CHECK(evalArithmetic(*phi, seq({1, 2, 3}), 5).decided());
  }
}

TEST_CASE("truth evaluation clauses") {
  CHECK(trEval(1, coding::encode(*mk::bot()), 0, 10).value == Truth::False);
  CHECK(trEval(1, coding::encode(*pa("(eq (v 1) (v 1))")), seq({7}), 10).value == Truth::True);
  Natural inner = coding::encode(*pa("(eq (v 1) (v 1))"));
  Natural l = seq({inner, seq({5})});
  CHECK(trEval(2, coding::encode(*pa("(tr 1 (v 1) (v 2))")), l, 10).value == Truth::True);
  CHECK(trEval(1, coding::encode(*pa("(tr 1 (v 1) (v 2))")), l, 10).value == Truth::False);  // not in PATr_0
  CHECK(trEval(1, coding::encode(*pa("(eq (v 2) (v 2))")), seq({7}), 10).value == Truth::False);  // Ev fails
  CHECK(trEval(1, 12345, 0, 10).value == Truth::False);
}

TEST_CASE("level one agrees with plain arithmetic") {
  Gen g(63);
  int decided = 0;
  for (int i = 0; i < 300; ++i) {
    auto phi = g.patrFormula(4, 0, {});
    Natural l = seq({g.below(5), g.below(5), g.below(5)});
    auto a = evalArithmetic(*phi, l, 8);
    auto t = trEval(1, coding::encode(*phi), l, 8);
    if (a.decided() && t.decided()) {
      ++decided;
      CHECK(a.value == t.value);
    }
  }
  CHECK(decided > 100);
}
