#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace twb::testing {

std::uint64_t diagonalIndex(std::uint64_t m, std::uint64_t n) {
  std::uint64_t index = 0;
  for (std::uint64_t d = 0;; ++d) {
    // diagonal d lists (d,0) (d-1,1) ... (0,d)
    for (std::uint64_t b = 0; b <= d; ++b, ++index)
      if (d - b == m && b == n) return index;
  }
}

namespace {

bool typeOk(const Variable& v, unsigned n) { return v.sort.kind != SortKind::Type || v.sort.level <= n; }

}  // namespace

bool elementaryOracle(unsigned n, const Expr& phi) {
  switch (phi.kind) {
    case Kind::Var: return typeOk(phi.var, n);
    case Kind::EqType:
      if (phi.level >= n) return false;
      break;
    case Kind::Mem:
      if (phi.level + 1 > n) return false;
      break;
    case Kind::Forall:
    case Kind::Exists:
      if (phi.var.sort.kind == SortKind::Type && phi.var.sort.level >= n) return false;
      break;
    default: break;
  }
  return std::all_of(phi.kids.begin(), phi.kids.end(), [n](const ExprPtr& k) { return elementaryOracle(n, *k); });
}

bool kSimpleOracle(unsigned k, const Expr& phi) {
  if (phi.isQuantifier() && phi.var.sort.kind == SortKind::Set) return false;
  if (phi.kind == Kind::Var && phi.var.sort.kind == SortKind::Set && phi.var.sort.level > k) return false;
  if (phi.kind == Kind::In && phi.level > k) return false;
  return std::all_of(phi.kids.begin(), phi.kids.end(), [k](const ExprPtr& c) { return kSimpleOracle(k, *c); });
}

unsigned fragmentOracle(const Expr& phi) {
  unsigned best = 0;
  std::vector<const Expr*> todo{&phi};
  while (!todo.empty()) {
    const Expr* e = todo.back();
    todo.pop_back();
    if ((e->kind == Kind::Var || e->isQuantifier()) && !e->var.sort.isNum()) best = std::max(best, e->var.sort.level);
    if (e->kind == Kind::Tr) best = std::max(best, e->level);
    for (const auto& k : e->kids) todo.push_back(k.get());
  }
  return best;
}

std::vector<const Expr*> subformulaList(const Expr& phi) {
  std::vector<const Expr*> out;
  if (!phi.isFormula()) return out;
  out.push_back(&phi);
  if (phi.isAtom()) return out;
  for (const auto& k : phi.kids) {
    auto sub = subformulaList(*k);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<std::uint64_t> freeNumberIndices(const Expr& e) {
  std::set<std::uint64_t> found;
  std::vector<Variable> binders;
  auto walk = [&](auto&& self, const Expr& x) -> void {
    if (x.kind == Kind::Var && x.var.sort.isNum() &&
        std::find(binders.begin(), binders.end(), x.var) == binders.end())
      found.insert(x.var.index);
    if (x.isQuantifier()) binders.push_back(x.var);
    for (const auto& k : x.kids) self(self, *k);
    if (x.isQuantifier()) binders.pop_back();
  };
  walk(walk, e);
  return {found.begin(), found.end()};
}

std::string nameless(const Expr& e) {
  std::vector<Variable> binders;
  std::ostringstream os;
  auto walk = [&](auto&& self, const Expr& x) -> void {
    os << '(' << static_cast<int>(x.kind) << ':' << x.level;
    if (x.kind == Kind::Const) os << ":c" << static_cast<int>(x.constant->kind) << '.' << x.constant->index.get_str();
    if (x.kind == Kind::Var) {
      auto it = std::find(binders.rbegin(), binders.rend(), x.var);
      if (it == binders.rend())
        os << ":f" << static_cast<int>(x.var.sort.kind) << '.' << x.var.sort.level << '.' << x.var.index;
      else
        os << ":b" << (it - binders.rbegin());
    }
    if (x.isQuantifier()) {
      os << ":s" << static_cast<int>(x.var.sort.kind) << '.' << x.var.sort.level;
      binders.push_back(x.var);
    }
    for (const auto& k : x.kids) self(self, *k);
    if (x.isQuantifier()) binders.pop_back();
    os << ')';
  };
  walk(walk, e);
  return os.str();
}

ETermPtr substituteOracle(const ETermPtr& t, const Variable& x, const ETermPtr& a) {
  switch (t->kind) {
    case EKind::Var: return t->var == x ? a : t;
    case EKind::App: return et::app(substituteOracle(t->fun, x, a), substituteOracle(t->arg, x, a));
    default: return t;
  }
}

namespace {

const Expr* negationOf(const Expr& e) {
  if (e.kind == Kind::Imp && e.kids[1]->kind == Kind::Bot) return e.kids[0].get();
  return nullptr;
}

}  // namespace

bool negativeOracle(const Expr& phi) {
  if (phi.kind == Kind::Bot) return true;
  if (const Expr* a = negationOf(phi)) {
    if (const Expr* b = negationOf(*a)) {
      if (b->isAtom()) return true;
      if (b->kind == Kind::Or) return negativeOracle(*b->kids[0]) && negativeOracle(*b->kids[1]);
      if (b->kind == Kind::Exists) return negativeOracle(*b->kids[0]);
    }
  }
  switch (phi.kind) {
    case Kind::And:
    case Kind::Imp: return negativeOracle(*phi.kids[0]) && negativeOracle(*phi.kids[1]);
    case Kind::Forall: return negativeOracle(*phi.kids[0]);
    default: return false;
  }
}

Truth kAnd(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::True && b == Truth::True) return Truth::True;
  return Truth::Unknown;
}

Truth kOr(Truth a, Truth b) {
  if (a == Truth::True || b == Truth::True) return Truth::True;
  if (a == Truth::False && b == Truth::False) return Truth::False;
  return Truth::Unknown;
}

Truth kNot(Truth a) {
  if (a == Truth::Unknown) return a;
  return a == Truth::True ? Truth::False : Truth::True;
}

Truth kImp(Truth a, Truth b) { return kOr(kNot(a), b); }

std::optional<std::uint64_t> termOracle(const Expr& t, const std::vector<std::uint64_t>& env) {
  switch (t.kind) {
    case Kind::Const: return t.constant->kind == ConstKind::One ? 1 : 0;
    case Kind::Var:
      if (t.var.index == 0) return 0;
      if (t.var.index > env.size()) return std::nullopt;
      return env[t.var.index - 1];
    case Kind::Plus:
    case Kind::Times: {
      auto a = termOracle(*t.kids[0], env), b = termOracle(*t.kids[1], env);
      if (!a || !b) return std::nullopt;
      return t.kind == Kind::Plus ? *a + *b : *a * *b;
    }
    default: return std::nullopt;
  }
}

}  // namespace twb::testing
