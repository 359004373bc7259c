#include <doctest.h>

#include <algorithm>
#include <set>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "twb/coding.hpp"
#include "twb/syntax.hpp"
#include "twb/text.hpp"

using namespace twb;
using namespace twb::coding;
using twb::testing::Gen;

namespace {
std::vector<Natural> nats(std::initializer_list<unsigned> xs) {
  std::vector<Natural> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}
ExprPtr parsePATr(const char* s) { return parseExpr(s, Language::PATr); }
}  // namespace

TEST_CASE("sequence codes") {
  CHECK(seqCode({}) == 0);
  CHECK(lh(seqCode(nats({7, 7, 7}))) == 3);
  CHECK(elem(seqCode(nats({4, 9})), 2) == 9);
  CHECK(elem(seqCode(nats({4, 9})), 1) == 4);
  CHECK_THROWS_AS(elem(seqCode(nats({4, 9})), 3), DomainError);
  CHECK_THROWS_AS(elem(seqCode(nats({4, 9})), 0), DomainError);
  for (unsigned c = 0; c < 2000; ++c) CHECK(seqCode(seqDecode(c)) == c);
}

TEST_CASE("pairing follows the diagonal enumeration") {
  CHECK(pair(0, 0) == 0);
  CHECK(pair(1, 0) == 1);
  CHECK(pair(0, 1) == 2);
  std::set<std::uint64_t> seen;
  for (unsigned m = 0; m <= 100; ++m) {
    for (unsigned n = 0; n <= 100; ++n) {
      Natural z = pair(m, n);
      CHECK(z == Natural(static_cast<unsigned long>(testing::diagonalIndex(m, n))));
      auto [a, b] = unpair(z);
      CHECK(a == m);
      CHECK(b == n);
      seen.insert(z.get_ui());
    }
  }
  CHECK(seen.size() == 101u * 101u);
  for (std::uint64_t v = 0; v <= 5150; ++v) CHECK(seen.count(v) == 1);
}

TEST_CASE("encode and decode round trip") {
  CHECK(*decode(encode(*mk::bot()), Language::PATr) == *mk::bot());
  Gen g(21);
  g.setTermDepth(1);
  for (Language lang : {Language::BT, Language::SA, Language::Ar, Language::PATr}) {
    for (int i = 0; i < 1000; ++i) {
      // BT atoms nest deeper, so a smaller depth keeps codes in the megabyte range
      auto e = g.formula(lang, lang == Language::BT ? 2 : 3);
      auto back = decode(encode(*e), lang);
      REQUIRE_MESSAGE(*back == *e, printExpr(*e));
    }
  }
  // a code that is not well sorted in the language
  CHECK_THROWS_AS(decode(encode(*parseExpr("(in 1 (set 1 0) (n 1))", Language::SA)), Language::PATr), DecodeError);
  CHECK_FALSE(tryDecode(5, Language::PATr).has_value());
}

TEST_CASE("external terms round trip") {
  Gen g(22);
  std::vector<Variable> vars{{Sort::type(0), 0}, {Sort::type(0), 1}};
  for (int i = 0; i < 500; ++i) {
    auto t = g.openTerm(3, vars);
    CHECK(*decodeTerm(encode(*t)) == *t);
  }
}

TEST_CASE("FormP and EvP") {
  CHECK(formP(0, encode(*parsePATr("(eq (v 0) (v 0))"))));
  CHECK_FALSE(formP(0, encode(*parsePATr("(tr 1 (v 0) (v 1))"))));
  CHECK(formP(1, encode(*parsePATr("(tr 1 (v 0) (v 1))"))));
  CHECK_FALSE(evP(encode(*parsePATr("(eq (v 2) (v 2))")), seqCode(nats({5}))));
  CHECK(evP(encode(*parsePATr("(eq (v 1) (v 1))")), seqCode(nats({5}))));
  CHECK_FALSE(formP(3, encode(*parseExpr("(in 1 (set 1 0) (n 1))", Language::SA))));
}

TEST_CASE("SubformP and ParamP agree with traversal") {
  Gen g(23);
  g.setTermDepth(1);
  for (int i = 0; i < 1000; ++i) {
    auto e = g.patrFormula(3, 2, {});
    Natural m = encode(*e);
    auto subs = testing::subformulaList(*e);
    for (const Expr* s : subs) CHECK(subformP(m, encode(*s)));
    // a formula from elsewhere is a subformula only if it occurs
    auto other = g.patrFormula(2, 2, {});
    bool occurs = std::any_of(subs.begin(), subs.end(), [&](const Expr* s) { return *s == *other; });
    CHECK(subformP(m, encode(*other)) == occurs);

    auto params = testing::freeNumberIndices(*e);
    for (std::uint64_t j = 0; j <= 5; ++j) {
      bool want = std::find(params.begin(), params.end(), j) != params.end();
      CHECK(paramP(m, j) == want);
    }
    // EvP holds exactly when every nonzero parameter index is covered
    std::uint64_t top = params.empty() ? 0 : params.back();
    std::vector<Natural> l(top, Natural(3));
    CHECK(evP(m, seqCode(l)));
    if (top > 0) {
      l.pop_back();
      CHECK_FALSE(evP(m, seqCode(l)));
    }
  }
}

TEST_CASE("term evaluation") {
  CHECK(evalTermCode(encode(*parsePATr("(plus 1 1)")), 0) == 2);
  CHECK(evalTermCode(encode(*parsePATr("(times (v 1) (v 1))")), seqCode(nats({3}))) == 9);
  CHECK_THROWS_AS(evalTermCode(encode(*parsePATr("(v 2)")), seqCode(nats({3}))), DomainError);
  CHECK(evalTotal(encode(*parsePATr("(v 2)")), seqCode(nats({3}))) == 0);
  CHECK(substEval(seqCode(nats({3, 4})), 1, 8) == seqCode(nats({8, 4})));
  CHECK(substEval(seqCode(nats({3, 4})), 4, 8) == seqCode(nats({3, 4, 0, 8})));
  CHECK(substEval(seqCode(nats({3, 4})), 0, 8) == seqCode(nats({3, 4})));

  Gen g(24);
  for (int i = 0; i < 500; ++i) {
    std::vector<Natural> l(1 + g.below(4));
    for (auto& x : l) x = g.below(50);
    std::size_t len = l.size();
    std::uint64_t at = g.below(7);
    Natural code = substEval(seqCode(l), at, 9);
    CHECK(lh(code) == std::max<std::size_t>(len, at));
  }
}
