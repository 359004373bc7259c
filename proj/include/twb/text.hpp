#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twb/expr.hpp"
#include "twb/syntax.hpp"

namespace twb {

/// Raw S-expression: an atom or a list, with the 1-based source position of
/// its first character.
struct Sexp {
  bool isList = false;
  std::string atom;
  std::vector<Sexp> items;
  std::size_t line = 1;
  std::size_t column = 1;

  bool isAtom(std::string_view s) const { return !isList && atom == s; }
  /// Head symbol of a list, empty when absent or not an atom.
  std::string_view head() const {
    if (!isList || items.empty() || items[0].isList) return {};
    return items[0].atom;
  }
};

/// Reads every top-level S-expression. ';' starts a comment to end of line.
std::vector<Sexp> readSexps(std::string_view text);
/// Reads exactly one S-expression.
Sexp readSexp(std::string_view text);
std::string printSexp(const Sexp& s);

[[noreturn]] void syntaxError(const Sexp& at, const std::string& what);
/// Decimal natural atom.
Natural expectNatural(const Sexp& s);
unsigned expectLevel(const Sexp& s);
std::uint64_t expectIndex(const Sexp& s);

// Named operation variables: a bare identifier is a type-0 variable whose
// index is kNamedBase plus a bijective base-37 code of the name.
inline constexpr std::uint64_t kNamedBase = std::uint64_t{1} << 32;
bool isReservedWord(std::string_view s);
std::optional<std::uint64_t> nameIndex(std::string_view name);
std::optional<std::string> indexName(std::uint64_t index);

/// (v i) (num i) (op i) (bt k i) (set k i) (set i), or a bare name.
std::optional<Variable> variableFromSexp(const Sexp& s);

/// Builds an expression from an S-expression without sort checking.
ExprPtr exprFromSexp(const Sexp& s, Language lang);
/// Parses and sort checks.
ExprPtr parseExpr(std::string_view text, Language lang, SortCheckOptions opts = {});

/// Canonical S-expression.
std::string printExpr(const Expr& e);
inline std::string printExpr(const ExprPtr& e) { return printExpr(*e); }
std::string printVariable(const Variable& v);
std::string printConstant(const Constant& c);

/// Human-oriented rendering in logical notation.
std::string prettyExpr(const Expr& e);

/// Value m when the term is exactly the numeral 0, 1, or 1+1+...+1.
std::optional<std::uint64_t> arithmeticNumeralValue(const Expr& t);

}  // namespace twb
