#pragma once

#include <set>
#include <vector>

#include "twb/expr.hpp"

namespace twb {

using VarSet = std::set<Variable>;

VarSet freeVariables(const Expr& e);
/// Every variable occurring anywhere, bound or free (binder positions included).
VarSet allVariables(const Expr& e);
bool occursFree(const Expr& e, const Variable& v);
bool occursAnywhere(const Expr& e, const Variable& v);

/// Free variables of a list of expressions.
VarSet freeVariables(const std::vector<ExprPtr>& es);

/// Hands out variables with the smallest index of a sort not yet used.
/// Every variable handed out is marked used.
class FreshSupply {
 public:
  FreshSupply() = default;
  explicit FreshSupply(VarSet used) : used_(std::move(used)) {}

  void reserve(const Variable& v) { used_.insert(v); }
  void reserve(const Expr& e);
  Variable next(Sort s);

 private:
  VarSet used_;
};

/// Capture-avoiding substitution of `replacement` for the free occurrences of
/// `x`. Binders that would capture a free variable of `replacement` are renamed
/// to the smallest unused index of their sort.
ExprPtr substitute(const ExprPtr& e, const Variable& x, const ExprPtr& replacement);

/// Simultaneous capture-avoiding substitution.
ExprPtr substituteAll(const ExprPtr& e, const std::vector<std::pair<Variable, ExprPtr>>& subs);

/// substitute() restricted to a numeric x and a numeric term t.
/// Throws SortError on a sort mismatch.
ExprPtr substituteNum(const ExprPtr& phi, const Variable& x, const ExprPtr& t);

/// Sort of a term expression (throws SortError when it is not a term).
Sort termSort(const Expr& t);

/// Prefixes forall over every free variable, ascending (sort, index), the
/// smallest variable outermost.
ExprPtr universalClosure(const ExprPtr& phi);

/// Number of occurrences of and, or, implies, forall, exists.
std::size_t complexity(const Expr& phi);

/// Equality up to renaming of bound variables.
bool alphaEqual(const Expr& a, const Expr& b);

/// True when the expression contains a quantifier over a set variable
/// (SA/Ar sets or BT types >= 1).
bool hasSetQuantifier(const Expr& e);

struct SortCheckOptions {
  /// Admit the defined symbols g_k / a_k of extended SA formulas.
  bool allowDefined = false;
};

/// Throws SortError describing the first violation of the language's
/// sorting discipline.
void checkWellSorted(const Expr& e, Language lang, SortCheckOptions opts = {});
bool isWellSorted(const Expr& e, Language lang, SortCheckOptions opts = {});

/// Whether the expression uses only the pure symbols of the language (no
/// primitive-recursive extension symbols and no defined g/a symbols).
bool isPureLanguage(const Expr& e, Language lang);

namespace walk {

/// Rebuilds `e` bottom-up, applying `f` to each node after its children
/// have been rebuilt.
template <typename F>
ExprPtr mapBottomUp(const ExprPtr& e, F&& f) {
  if (e->kids.empty()) return f(e);
  std::vector<ExprPtr> kids;
  kids.reserve(e->kids.size());
  bool changed = false;
  for (const auto& k : e->kids) {
    kids.push_back(mapBottomUp(k, f));
    changed = changed || kids.back() != k;
  }
  return f(changed ? mk::withKids(*e, std::move(kids)) : e);
}

}  // namespace walk

}  // namespace twb
