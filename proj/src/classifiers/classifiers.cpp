#include "twb/classifiers.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace twb {

const Expr& subtermAt(const Expr& e, const ExprPath& path) {
  const Expr* cur = &e;
  for (std::size_t i : path) {
    if (i >= cur->kids.size()) throw DomainError("path leaves the expression");
    cur = cur->kids[i].get();
  }
  return *cur;
}

std::string pathString(const ExprPath& path) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? " " : "") << path[i];
  os << ']';
  return os.str();
}

namespace {

template <typename Check>
ClassReport firstViolation(const Expr& root, Check&& check) {
  ExprPath path;
  ClassReport report;
  std::function<bool(const Expr&)> go = [&](const Expr& e) {
    if (auto why = check(e)) {
      report.isMember = false;
      report.witness = path;
      report.reason = *why;
      return true;
    }
    for (std::size_t i = 0; i < e.kids.size(); ++i) {
      path.push_back(i);
      if (go(*e.kids[i])) return true;
      path.pop_back();
    }
    return false;
  };
  go(root);
  return report;
}

bool hasForeignSets(const Expr& e) {
  if ((e.kind == Kind::Var || e.isQuantifier()) && e.var.sort.kind == SortKind::Set) return true;
  if (e.kind == Kind::In || e.kind == Kind::Tr || e.kind == Kind::DefinedG || e.kind == Kind::DefinedA) return true;
  for (const auto& k : e.kids)
    if (hasForeignSets(*k)) return true;
  return false;
}

bool hasBTSymbols(const Expr& e) {
  if ((e.kind == Kind::Var || e.isQuantifier()) && e.var.sort.kind == SortKind::Type) return true;
  switch (e.kind) {
    case Kind::Ap: case Kind::EqOmega: case Kind::EqType: case Kind::Mem: case Kind::Tr: return true;
    case Kind::Const: if (e.constant->isOperation()) return true; break;
    default: break;
  }
  for (const auto& k : e.kids)
    if (hasBTSymbols(*k)) return true;
  return false;
}

}  // namespace

ClassReport isElementary(unsigned n, const Expr& phi) {
  if (hasForeignSets(phi)) throw DomainError("elementarity is defined for BT formulas");
  return firstViolation(phi, [n](const Expr& e) -> std::optional<std::string> {
    if (e.kind == Kind::Var && e.var.sort.kind == SortKind::Type && e.var.sort.level > n)
      return "variable of type " + std::to_string(e.var.sort.level) + " above " + std::to_string(n);
    if (e.isQuantifier() && e.var.sort.kind == SortKind::Type) {
      if (e.var.sort.level > n) return "quantifier over type " + std::to_string(e.var.sort.level);
      if (e.var.sort.level == n) return "quantifier over type " + std::to_string(n);
    }
    if (e.kind == Kind::EqType && e.level == n) return "predicate =_0" + std::to_string(n);
    return std::nullopt;
  });
}

ClassReport isKSimple(unsigned k, const Expr& phi) {
  if (hasBTSymbols(phi)) throw DomainError("simplicity is defined for SA formulas");
  return firstViolation(phi, [k](const Expr& e) -> std::optional<std::string> {
    if (e.isQuantifier() && e.var.sort.kind == SortKind::Set) return "quantifier over a set variable";
    if (e.kind == Kind::Var && e.var.sort.kind == SortKind::Set && e.var.sort.level > k)
      return "variable of sort " + std::to_string(e.var.sort.level) + " above " + std::to_string(k);
    if (e.kind == Kind::DefinedG && e.level > k) return "g of sort " + std::to_string(e.level);
    if (e.kind == Kind::DefinedA && e.level + 1 > k) return "a of sort " + std::to_string(e.level + 1);
    return std::nullopt;
  });
}

unsigned fragmentOf(const Expr& phi) {
  unsigned m = 0;
  if (phi.kind == Kind::Var || phi.isQuantifier()) {
    if (phi.var.sort.kind != SortKind::Num) m = phi.var.sort.level;
  }
  switch (phi.kind) {
    case Kind::Tr: case Kind::In: case Kind::DefinedG: case Kind::EqType: m = std::max(m, phi.level); break;
    case Kind::DefinedA: case Kind::Mem: m = std::max(m, phi.level + 1); break;
    default: break;
  }
  for (const auto& k : phi.kids) m = std::max(m, fragmentOf(*k));
  return m;
}

}  // namespace twb
