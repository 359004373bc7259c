#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twb/eterm.hpp"
#include "twb/expr.hpp"
#include "twb/syntax.hpp"

namespace twb::testing {

/// Seeded random generator for terms and formulas of all four languages.
/// Every generated formula is well sorted in its language.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n);
  bool coin(double p = 0.5);
  std::mt19937_64& rng() { return rng_; }

  // combinator terms
  ETermPtr combinatorConstant();
  ETermPtr closedTerm(unsigned depth);
  /// Terms over the given type-0 variables and constants.
  ETermPtr openTerm(unsigned depth, const std::vector<Variable>& vars);

  // arithmetic
  ExprPtr numTerm(unsigned depth, const std::vector<Variable>& vars);
  /// PATr formula with Tr indices <= maxTr, free numbers among vars.
  ExprPtr patrFormula(unsigned depth, unsigned maxTr, const std::vector<Variable>& vars);

  // second-order arithmetic
  /// SA formula with set sorts in [1, maxSort]; set quantifiers optional.
  ExprPtr saFormula(unsigned depth, unsigned maxSort, bool setQuantifiers);
  ExprPtr arFormula(unsigned depth, bool setQuantifiers);

  // BT
  ExprPtr btFormula(unsigned depth, unsigned maxType, bool constants);

  ExprPtr formula(Language lang, unsigned depth);

  /// Depth of numeric terms inside atoms; codes grow fast with it.
  void setTermDepth(unsigned d) { termDepth_ = d; }

 private:
  struct Scope {
    std::vector<Variable> nums;
    std::vector<Variable> sets;  // SA/Ar set variables, or BT variables of type >= 1
    std::vector<Variable> ops;   // BT type-0 variables
  };
  template <class F>
  ExprPtr connective(unsigned depth, F&& sub);
  ExprPtr saAtom(Scope& s, unsigned maxSort, bool ar);
  ExprPtr saRec(unsigned depth, Scope& s, unsigned maxSort, bool setQ, bool ar);
  ExprPtr btAtom(Scope& s, unsigned maxType, bool constants);
  ExprPtr btRec(unsigned depth, Scope& s, unsigned maxType, bool constants);
  ExprPtr patrRec(unsigned depth, Scope& s, unsigned maxTr);
  ExprPtr btConstantExpr();
  Variable pick(const std::vector<Variable>& vs);

  std::mt19937_64 rng_;
  std::uint64_t nextBound_ = 20;
  unsigned termDepth_ = 2;
};

/// Realizer <numeral(tag), u> for extraction tests.
ETermPtr taggedRealizer(std::uint64_t tag, const ETermPtr& u);

}  // namespace twb::testing
