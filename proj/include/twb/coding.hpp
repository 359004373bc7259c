#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twb/eterm.hpp"
#include "twb/expr.hpp"
#include "twb/natural.hpp"

namespace twb::coding {

/// Cantor pairing (m+n)(m+n+1)/2 + n.
Natural pair(const Natural& m, const Natural& n);
std::pair<Natural, Natural> unpair(const Natural& z);

/// seq([]) = 0, seq(a :: rest) = pair(a, seq(rest)) + 1. Every natural is
/// the code of exactly one sequence.
Natural seqCode(const std::vector<Natural>& elems);
std::vector<Natural> seqDecode(const Natural& code);
std::size_t lh(const Natural& code);
/// 1-based; throws DomainError unless 1 <= i <= lh(code).
Natural elem(const Natural& code, std::size_t i);

enum Tag : unsigned {
  kBot = 0,
  kVar = 1,
  kZero = 2,
  kOne = 3,
  kPlus = 4,
  kTimes = 5,
  kK = 6,
  kS = 7,
  kD = 8,
  kP = 9,
  kP1 = 10,
  kP2 = 11,
  kComp = 12,
  kEq = 13,
  kIn = 14,
  kTr = 15,
  kAp = 16,
  kEqOmega = 17,
  kEqType = 18,
  kMem = 19,
  kAnd = 20,
  kOr = 21,
  kImp = 22,
  kForall = 23,
  kExists = 24,
  kApp = 25,
  kAbstraction = 26,
  kPair = 27,
  kEval = 28,
  kSubst = 29,
  kForm = 30,
  kSubform = 31,
  kEv = 32,
  kDefinedG = 33,
  kDefinedA = 34,
  kProof = 35,
  kLine = 36,
  kTagCount = 37,
};

struct TagInfo {
  unsigned tag;
  const char* name;
  const char* children;
};

const std::vector<TagInfo>& tagTable();
/// Tags admitted by the language's decoder, one "tag name children" line each.
std::string tagTableText(Language lang);

/// Numeric code of a variable's sort: 0 for numbers, level + 1 otherwise.
unsigned sortCode(const Sort& s);
Natural encodeVariable(const Variable& v);

Natural encode(const Expr& e);
Natural encode(const ETerm& t);
/// Code of the comprehension abstraction Z.X1...Xn.phi.
Natural encodeAbstraction(const Variable& z, const std::vector<Variable>& params, const Expr& body);

class DecodeError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct DecodeOptions {
  bool allowDefined = false;
};

/// Throws DecodeError on a code that is not a well-sorted expression of the
/// language.
ExprPtr decode(const Natural& code, Language lang, DecodeOptions opts = {});
std::optional<ExprPtr> tryDecode(const Natural& code, Language lang, DecodeOptions opts = {});
ETermPtr decodeTerm(const Natural& code);

struct Abstraction {
  Variable z;
  std::vector<Variable> params;
  ExprPtr body;
};
/// Shape check only: a BT variable, a BT formula and a list of BT variables.
std::optional<Abstraction> decodeAbstraction(const Natural& code);

// ---------------------------------------------------------------- predicates

/// m codes a pure formula of PATr whose Tr indices are all <= k.
bool formP(const Natural& k, const Natural& m);
/// m codes a PATr formula and r codes one of its subformulas (m itself included).
bool subformP(const Natural& m, const Natural& r);
/// n_i is a parameter of the PATr expression coded by m.
bool paramP(const Natural& m, const Natural& i);
/// (forall i <= m)[paramP(m, i) -> lh(l) >= i].
bool evP(const Natural& m, const Natural& l);

/// Value of a numeric term under a variable lookup; pair/eval/subst evaluate
/// through the functions below.
Natural termValue(const Expr& t, const std::function<Natural(const Variable&)>& lookup);
/// Lookup reading n_i as the i-th element (1-based) of l, 0 when absent.
std::function<Natural(const Variable&)> evaluationLookup(const Natural& l);

/// Throws DomainError when i is not a pure PATr term code or Ev(i, l) fails.
Natural evalTermCode(const Natural& i, const Natural& l);
/// The total function eval: 0 on a non-term code; missing registers read 0.
Natural evalTotal(const Natural& i, const Natural& l);
/// l with its i-th element set to n, padded with zeros; subst(l, 0, n) = l.
Natural substEval(const Natural& l, const Natural& i, const Natural& n);

/// Largest Tr index of an expression, 0 without Tr atoms.
unsigned maxTrIndex(const Expr& e);

}  // namespace twb::coding
