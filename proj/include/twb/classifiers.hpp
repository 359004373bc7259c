#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twb/expr.hpp"

namespace twb {

/// Child-index path from the root; a quantifier's body is child 0.
using ExprPath = std::vector<std::size_t>;

struct ClassReport {
  bool isMember = true;
  /// Set iff isMember is false: the first offending node in preorder.
  std::optional<ExprPath> witness;
  std::string reason;
};

const Expr& subtermAt(const Expr& e, const ExprPath& path);
std::string pathString(const ExprPath& path);

/// BT: types <= n only, no quantifier over type n, no =_{0n}. Numbers
/// (type omega) sit below every type. Throws DomainError on an expression
/// using sets of SA or Ar.
ClassReport isElementary(unsigned n, const Expr& phi);

/// SA (and Ar): no set quantifiers and no sorts above k.
ClassReport isKSimple(unsigned k, const Expr& phi);

/// Smallest s with phi in the s-th fragment: the largest BT type, SA sort
/// (defined symbols included) or Tr index occurring; 0 when none.
unsigned fragmentOf(const Expr& phi);

}  // namespace twb
