#pragma once

#include <optional>
#include <vector>

#include "twb/eterm.hpp"
#include "twb/expr.hpp"
#include "twb/syntax.hpp"

namespace twb {

// ---------------------------------------------------------------- SA -> Ar

/// Set variable x_i of sort k becomes the Ar set variable x_{pair(k,i)}.
ExprPtr hat(const Expr& phi);

// ---------------------------------------------------------------- truth sets

/// Free-variable interface of the truth-set formulas. Numbers: r = n0,
/// l = n1, m = n2. The truth-set parameter x_q (1 <= q < k) is the set
/// variable of sort q+1 and index q; y is sort k index 0; z is sort k+1
/// index 0.
namespace truthvars {
Variable r();
Variable l();
Variable m();
Variable x(unsigned q);
Variable y(unsigned k);
Variable z(unsigned k);
}  // namespace truthvars

/// A_k(r, l, x1..x{k-1}, y). The body under the two leading existentials is
/// a left-nested disjunction of k+2 conjunctive groups: the equation group,
/// one group per Tr_q (q < k), the connective group and the quantifier group.
ExprPtr buildA(unsigned k);
/// FTrset_k(m, x1..x{k-1}, y).
ExprPtr buildFTrset(unsigned k);
/// Trset_k(x1..x{k-1}, z).
ExprPtr buildTrset(unsigned k);

/// Instances with the interface variables replaced.
ExprPtr instantiateFTrset(unsigned k, const ExprPtr& m, const std::vector<Variable>& xs, const Variable& y);
ExprPtr instantiateTrset(unsigned k, const std::vector<Variable>& xs, const Variable& z);

/// Object-level pairing term (t, u) as the pair symbol.
ExprPtr pairTerm(const ExprPtr& t, const ExprPtr& u);

// ---------------------------------------------------------------- PATr -> SA

/// Tr_k(t, u) becomes (t, u) in_k g_k(t); everything else is kept.
ExprPtr tilde(const Expr& phi);
/// Removes g_k and a_k, giving a pure SA formula.
ExprPtr eliminateDefined(const Expr& phi);

// ---------------------------------------------------------------- SA -> BT

/// Code of the singleton abstraction used at brace level j >= 1.
Natural braceIndex(unsigned j);
/// {t}^k for an external term t standing for a number.
ETermPtr braceTerm(const ETermPtr& t, unsigned k);
/// M_k(X) for a variable X of type k >= 1. Fresh bound variables come from
/// the supply, seeded by the caller.
ExprPtr buildM(unsigned k, const Variable& x, FreshSupply& fresh);
ExprPtr buildM(unsigned k, const Variable& x);
ExprPtr star(const Expr& phi);

// ---------------------------------------------------------------- BTcl -> BT

ExprPtr minus(const Expr& phi);
/// n^- when n codes a comprehension abstraction.
std::optional<Natural> minusIndex(const Natural& n);
/// a^- for a constant: c_n^- = c_{n^-}, or 0 when n is not an abstraction.
Constant minusConst(const Constant& c);
ETermPtr minusTerm(const ETermPtr& t);

/// N ::= bot | not not A | N and N | N -> N | forall x N
///     | not not (N or N) | not not exists x N      (A atomic)
bool isNegative(const Expr& phi);

}  // namespace twb
