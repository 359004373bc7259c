#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twb/natural.hpp"

namespace twb {

/// The four object languages.
enum class Language : std::uint8_t { BT, SA, Ar, PATr };

std::string_view languageName(Language lang);
std::optional<Language> languageFromName(std::string_view name);

enum class SortKind : std::uint8_t { Num, Type, Set };

/// Sort of a variable. BT uses Num (type omega) and Type k (k >= 0, type 0
/// being operations); SA uses Num and Set k (k >= 1); Ar uses Num and
/// Set 0 (its single set sort); PATr uses Num only.
struct Sort {
  SortKind kind = SortKind::Num;
  unsigned level = 0;

  static constexpr Sort num() { return {SortKind::Num, 0}; }
  static constexpr Sort type(unsigned k) { return {SortKind::Type, k}; }
  static constexpr Sort set(unsigned k) { return {SortKind::Set, k}; }

  constexpr bool isNum() const { return kind == SortKind::Num; }
  constexpr bool isOperation() const { return kind == SortKind::Type && level == 0; }
  constexpr bool isSetLike() const {
    return kind == SortKind::Set || (kind == SortKind::Type && level > 0);
  }

  friend constexpr auto operator<=>(const Sort&, const Sort&) = default;
};

/// A variable is its sort plus an index; ordering is (sort, index).
struct Variable {
  Sort sort;
  std::uint64_t index = 0;

  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;
};

enum class ConstKind : std::uint8_t { Zero, One, K, S, D, P, P1, P2, Comp };

/// Constant symbol. `index` is meaningful for Comp (the comprehension
/// constant c_n) only.
struct Constant {
  ConstKind kind = ConstKind::Zero;
  Natural index = 0;

  static Constant of(ConstKind k) { return Constant{k, 0}; }
  static Constant comp(Natural n) { return Constant{ConstKind::Comp, std::move(n)}; }

  bool isOperation() const { return kind != ConstKind::Zero && kind != ConstKind::One; }
  friend bool operator==(const Constant& a, const Constant& b) {
    return a.kind == b.kind && (a.kind != ConstKind::Comp || a.index == b.index);
  }
};

enum class Kind : std::uint8_t {
  // terms
  Var,
  Const,
  Plus,
  Times,
  Pair,      // Cantor pairing function symbol
  Eval,      // eval(i, l)
  Subst,     // subst(l, i, n)
  DefinedG,  // g_k(t), sort-k set term (extended SA only)
  DefinedA,  // a_k, sort-(k+1) set constant (extended SA only)
  // atoms
  Eq,       // t = u
  In,       // level k; kids {container, member}
  Tr,       // level k; kids {t, u}
  Ap,       // kids {f, x, y}
  EqOmega,  // kids {x, m}: x =_{0 omega} m
  EqType,   // level k; kids {x, Y}: x =_{0k} Y
  Mem,      // level k; kids {X, Y}: X in_k Y
  Form,     // Form(k, m)
  Subform,  // Subform(m, r)
  Ev,       // Ev(m, l)
  // logic
  Bot,
  And,
  Or,
  Imp,
  Forall,
  Exists,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST node shared by terms and formulas of all four languages.
/// Negation is not a constructor: not A is stored as A -> bot.
struct Expr {
  Kind kind = Kind::Bot;
  unsigned level = 0;                 // In, Tr, EqType, Mem, DefinedG, DefinedA
  Variable var;                       // Var, Forall, Exists
  std::optional<Constant> constant;   // Const
  std::vector<ExprPtr> kids;

  const ExprPtr& kid(std::size_t i) const { return kids.at(i); }
  bool isTerm() const { return kind <= Kind::DefinedA; }
  bool isAtom() const { return kind >= Kind::Eq && kind <= Kind::Ev; }
  bool isFormula() const { return !isTerm(); }
  bool isQuantifier() const { return kind == Kind::Forall || kind == Kind::Exists; }
  bool isBinaryConnective() const {
    return kind == Kind::And || kind == Kind::Or || kind == Kind::Imp;
  }
};

/// Structural (syntactic) equality; bound variable names matter.
bool operator==(const Expr& a, const Expr& b);
bool sameExpr(const ExprPtr& a, const ExprPtr& b);

/// Number of nodes.
std::size_t exprSize(const Expr& e);

/// Error in the concrete syntax, with a 1-based line/column.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Ill-sorted or language-violating expression.
class SortError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation applied to the wrong language or violating a precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace mk {

ExprPtr var(Variable v);
ExprPtr num(std::uint64_t index);
ExprPtr op(std::uint64_t index);
ExprPtr bt(unsigned type, std::uint64_t index);
ExprPtr set(unsigned sort, std::uint64_t index);
ExprPtr constant(Constant c);
ExprPtr zero();
ExprPtr one();
ExprPtr plus(ExprPtr a, ExprPtr b);
ExprPtr times(ExprPtr a, ExprPtr b);
ExprPtr pair(ExprPtr a, ExprPtr b);
ExprPtr eval(ExprPtr i, ExprPtr l);
ExprPtr subst(ExprPtr l, ExprPtr i, ExprPtr n);
ExprPtr definedG(unsigned k, ExprPtr t);
ExprPtr definedA(unsigned k);
/// The arithmetic numeral 1+1+...+1 (left nested); 0 and 1 are constants.
ExprPtr numeral(std::uint64_t n);

ExprPtr eq(ExprPtr a, ExprPtr b);
ExprPtr in(unsigned k, ExprPtr container, ExprPtr member);
ExprPtr tr(unsigned k, ExprPtr a, ExprPtr b);
ExprPtr ap(ExprPtr f, ExprPtr x, ExprPtr y);
ExprPtr eqOmega(ExprPtr x, ExprPtr m);
ExprPtr eqType(unsigned k, ExprPtr x, ExprPtr y);
ExprPtr mem(unsigned k, ExprPtr x, ExprPtr y);
ExprPtr form(ExprPtr k, ExprPtr m);
ExprPtr subform(ExprPtr m, ExprPtr r);
ExprPtr ev(ExprPtr m, ExprPtr l);

ExprPtr bot();
ExprPtr conj(ExprPtr a, ExprPtr b);
ExprPtr disj(ExprPtr a, ExprPtr b);
ExprPtr imp(ExprPtr a, ExprPtr b);
ExprPtr neg(ExprPtr a);
ExprPtr negneg(ExprPtr a);
ExprPtr iff(ExprPtr a, ExprPtr b);
ExprPtr forall(Variable v, ExprPtr body);
ExprPtr exists(Variable v, ExprPtr body);

/// Left-nested conjunction of a non-empty list.
ExprPtr conjAll(const std::vector<ExprPtr>& parts);
/// Left-nested disjunction of a non-empty list.
ExprPtr disjAll(const std::vector<ExprPtr>& parts);

/// Generic rebuild used by traversals: same head, new children.
ExprPtr withKids(const Expr& e, std::vector<ExprPtr> kids);
ExprPtr withVar(const Expr& e, Variable v, ExprPtr body);

}  // namespace mk

/// Matches A -> bot and returns A.
const Expr* negated(const Expr& e);
/// Matches (A -> B) & (B -> A) and returns {A, B}.
std::optional<std::pair<ExprPtr, ExprPtr>> asIff(const Expr& e);

}  // namespace twb
