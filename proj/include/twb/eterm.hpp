#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twb/expr.hpp"
#include "twb/syntax.hpp"
#include "twb/text.hpp"

namespace twb {

enum class EKind : std::uint8_t { Const, Var, App, Arith };

struct ETerm;
using ETermPtr = std::shared_ptr<const ETerm>;

/// Applicative term over BT constants and variables. Arith leaves carry a
/// compound numeric term (1, t+u, t*u) so that arithmetic can flow into
/// external notation; they are never redexes.
///
/// Size, spine head, argument count, the absence of redexes and the
/// numeral value are computed once at construction.
struct ETerm {
  EKind kind = EKind::Const;
  Constant constant;
  Variable var;
  ETermPtr fun;
  ETermPtr arg;
  ExprPtr arith;

  std::size_t size = 1;
  const ETerm* head = this;
  std::size_t nargs = 0;
  bool normal = true;
  std::optional<std::uint64_t> numeral;

  bool isConst(ConstKind k) const { return kind == EKind::Const && constant.kind == k; }
  /// The i-th argument (0-based) of the application spine.
  const ETermPtr& spineArg(std::size_t i) const;
};

bool operator==(const ETerm& a, const ETerm& b);
bool sameTerm(const ETermPtr& a, const ETermPtr& b);

namespace et {

ETermPtr constant(Constant c);
ETermPtr of(ConstKind k);
ETermPtr var(Variable v);
ETermPtr app(ETermPtr f, ETermPtr a);
ETermPtr apps(ETermPtr f, const std::vector<ETermPtr>& args);
/// Numeric term leaf. Variables and 0 become Var/Const leaves.
ETermPtr arith(ExprPtr numericTerm);
/// The BT numeral: numeral(0) = 0, numeral(m+1) = p numeral(m) 0.
ETermPtr numeral(std::uint64_t m);
/// <t> = t, <t1..tn+1> = p <t1..tn> tn+1. Throws DomainError on empty input.
ETermPtr tuple(const std::vector<ETermPtr>& ts);

}  // namespace et

std::optional<std::uint64_t> numeralOf(const ETerm& t);

VarSet freeVariables(const ETerm& t);
bool occursIn(const ETerm& t, const Variable& v);
ETermPtr substituteTerm(const ETermPtr& t, const Variable& x, const ETermPtr& replacement);

/// Application nodes of the tree.
std::size_t applicationCount(const ETerm& t);

ETermPtr etermFromSexp(const Sexp& s);
ETermPtr parseETerm(std::string_view text);
/// Canonical S-expression: application chains flattened, numerals >= 1 as (n m).
std::string printETerm(const ETerm& t);
std::string prettyETerm(const ETerm& t);

/// Expr image of a leaf (constant or variable) for use in atoms.
ExprPtr leafExpr(const ETerm& t);
/// Sort of a leaf as a BT type; constants are type 0 except 0 (omega).
Sort leafSort(const ETerm& t);

// ---------------------------------------------------------------- unfolding

/// Fresh bound variables for unfolding are drawn from `fresh`; callers seed
/// it with every variable of the surrounding formula.
///
/// t ~ x for a type-0 variable x.
ExprPtr unfoldEvalTo(const ETerm& t, const Variable& x, FreshSupply& fresh);
/// t ~ V for a variable V of any sort: the direct form when V has type 0,
/// otherwise exists y (t ~ y and y =_0s V).
ExprPtr unfoldEvalToVar(const ETerm& t, const Variable& v, FreshSupply& fresh);
/// t defined: exists x (t ~ x).
ExprPtr unfoldDefined(const ETerm& t, FreshSupply& fresh);
/// t ~ tau: exists x (t ~ x and tau ~ x).
ExprPtr unfoldKleene(const ETerm& t, const ETerm& tau, FreshSupply& fresh);
/// t == tau: forall x (t ~ x iff tau ~ x).
ExprPtr unfoldStrong(const ETerm& t, const ETerm& tau, FreshSupply& fresh);
/// phi(t) with `slot` the distinguished variable of phi:
/// exists W (t ~ W and phi[slot := W]), W of the slot's sort.
ExprPtr unfoldInstance(const ExprPtr& phi, const Variable& slot, const ETerm& t, FreshSupply& fresh);

/// Seeds a supply with every variable of the terms and expressions given.
FreshSupply supplyFor(std::initializer_list<const ETerm*> terms, std::initializer_list<const Expr*> exprs = {});

}  // namespace twb
