#include "twb/syntax.hpp"

#include <sstream>

#include "twb/text.hpp"

namespace twb {
namespace {

void collectFree(const Expr& e, std::vector<Variable>& bound, VarSet& out) {
  switch (e.kind) {
    case Kind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == e.var) return;
      out.insert(e.var);
      return;
    }
    case Kind::Forall:
    case Kind::Exists:
      bound.push_back(e.var);
      collectFree(*e.kids[0], bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& k : e.kids) collectFree(*k, bound, out);
  }
}

void collectAll(const Expr& e, VarSet& out) {
  if (e.kind == Kind::Var || e.isQuantifier()) out.insert(e.var);
  for (const auto& k : e.kids) collectAll(*k, out);
}

ExprPtr substImpl(const ExprPtr& e, const Variable& x, const ExprPtr& r, const VarSet& rFree) {
  switch (e->kind) {
    case Kind::Var:
      return e->var == x ? r : e;
    case Kind::Forall:
    case Kind::Exists: {
      if (e->var == x || !occursFree(*e->kids[0], x)) return e;
      Variable y = e->var;
      ExprPtr body = e->kids[0];
      if (rFree.count(y)) {
        VarSet used = allVariables(*body);
        used.insert(rFree.begin(), rFree.end());
        used.insert(x);
        FreshSupply fresh(std::move(used));
        Variable z = fresh.next(y.sort);
        body = substImpl(body, y, mk::var(z), {z});
        y = z;
      }
      return mk::withVar(*e, y, substImpl(body, x, r, rFree));
    }
    default: {
      if (e->kids.empty()) return e;
      std::vector<ExprPtr> kids;
      kids.reserve(e->kids.size());
      bool changed = false;
      for (const auto& k : e->kids) {
        kids.push_back(substImpl(k, x, r, rFree));
        changed = changed || kids.back() != k;
      }
      return changed ? mk::withKids(*e, std::move(kids)) : e;
    }
  }
}

bool alphaImpl(const Expr& a, const Expr& b, std::vector<Variable>& sa, std::vector<Variable>& sb) {
  if (a.kind != b.kind || a.level != b.level || a.kids.size() != b.kids.size()) return false;
  switch (a.kind) {
    case Kind::Var: {
      auto depth = [](const std::vector<Variable>& s, const Variable& v) -> std::ptrdiff_t {
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(s.size()) - 1; i >= 0; --i)
          if (s[static_cast<std::size_t>(i)] == v) return i;
        return -1;
      };
      auto da = depth(sa, a.var);
      auto db = depth(sb, b.var);
      if (da < 0 && db < 0) return a.var == b.var;
      return da == db;
    }
    case Kind::Forall:
    case Kind::Exists: {
      if (a.var.sort != b.var.sort) return false;
      sa.push_back(a.var);
      sb.push_back(b.var);
      bool ok = alphaImpl(*a.kids[0], *b.kids[0], sa, sb);
      sa.pop_back();
      sb.pop_back();
      return ok;
    }
    case Kind::Const:
      return *a.constant == *b.constant;
    default:
      for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!alphaImpl(*a.kids[i], *b.kids[i], sa, sb)) return false;
      return true;
  }
}

// ---- sort checking ----

struct SortChecker {
  Language lang;
  SortCheckOptions opts;

  [[noreturn]] void fail(const Expr& e, const std::string& why) const {
    std::ostringstream os;
    os << languageName(lang) << ": " << why << " in " << printExpr(e);
    throw SortError(os.str());
  }

  void variable(const Expr& e, const Variable& v) const {
    const Sort s = v.sort;
    bool ok = s.isNum();
    switch (lang) {
      case Language::BT: ok = ok || s.kind == SortKind::Type; break;
      case Language::SA: ok = ok || (s.kind == SortKind::Set && s.level >= 1); break;
      case Language::Ar: ok = ok || (s.kind == SortKind::Set && s.level == 0); break;
      case Language::PATr: break;
    }
    if (!ok) fail(e, "variable of a foreign sort");
  }

  bool arithmetic() const { return lang != Language::BT; }

  void numTerm(const Expr& e) const {
    switch (e.kind) {
      case Kind::Var:
        variable(e, e.var);
        if (!e.var.sort.isNum()) fail(e, "expected a numeric term");
        return;
      case Kind::Const:
        if (e.constant->kind != ConstKind::Zero && e.constant->kind != ConstKind::One)
          fail(e, "expected a numeric constant");
        return;
      case Kind::Plus:
      case Kind::Times:
        numTerm(*e.kids[0]);
        numTerm(*e.kids[1]);
        return;
      case Kind::Pair:
      case Kind::Eval:
      case Kind::Subst:
        if (!arithmetic()) fail(e, "primitive recursive symbol outside arithmetic");
        for (const auto& k : e.kids) numTerm(*k);
        return;
      default:
        fail(e, "expected a numeric term");
    }
  }

  // type-0 slot of a BT atom: operation variable or constant (0 admitted)
  void opArg(const Expr& e) const {
    if (e.kind == Kind::Const) {
      if (e.constant->kind == ConstKind::One) fail(e, "1 is not an operation");
      return;
    }
    if (e.kind == Kind::Var) {
      variable(e, e.var);
      if (e.var.sort.isOperation()) return;
    }
    fail(e, "expected an operation variable or constant");
  }

  void typedVar(const Expr& e, unsigned k) const {
    if (k == 0) return opArg(e);
    if (e.kind == Kind::Var && e.var.sort == Sort::type(k)) return variable(e, e.var);
    fail(e, "expected a variable of type " + std::to_string(k));
  }

  void container(const Expr& e, unsigned k) const {
    if (lang == Language::Ar) {
      if (k != 0) fail(e, "Ar membership carries no sort");
      if (e.kind == Kind::Var && e.var.sort == Sort::set(0)) return;
      fail(e, "expected a set variable");
    }
    if (k == 0) fail(e, "set sorts start at 1");
    if (e.kind == Kind::Var) {
      if (e.var.sort != Sort::set(k)) fail(e, "membership subscript does not match the set sort");
      return variable(e, e.var);
    }
    if (opts.allowDefined && e.kind == Kind::DefinedG && e.level == k) return numTerm(*e.kids[0]);
    if (opts.allowDefined && e.kind == Kind::DefinedA && e.level >= 1 && e.level + 1 == k) return;
    fail(e, "expected a set of sort " + std::to_string(k));
  }

  void formula(const Expr& e) const {
    switch (e.kind) {
      case Kind::Bot:
        return;
      case Kind::And:
      case Kind::Or:
      case Kind::Imp:
        formula(*e.kids[0]);
        formula(*e.kids[1]);
        return;
      case Kind::Forall:
      case Kind::Exists:
        variable(e, e.var);
        formula(*e.kids[0]);
        return;
      case Kind::Eq:
        numTerm(*e.kids[0]);
        numTerm(*e.kids[1]);
        return;
      case Kind::Form:
      case Kind::Subform:
      case Kind::Ev:
        if (!arithmetic()) fail(e, "primitive recursive predicate outside arithmetic");
        numTerm(*e.kids[0]);
        numTerm(*e.kids[1]);
        return;
      case Kind::In:
        if (lang != Language::SA && lang != Language::Ar) fail(e, "membership atom t in x");
        container(*e.kids[0], e.level);
        numTerm(*e.kids[1]);
        return;
      case Kind::Tr:
        if (lang != Language::PATr) fail(e, "truth predicate");
        if (e.level == 0) fail(e, "Tr index starts at 1");
        numTerm(*e.kids[0]);
        numTerm(*e.kids[1]);
        return;
      case Kind::Ap:
        if (lang != Language::BT) fail(e, "Ap atom");
        for (const auto& k : e.kids) opArg(*k);
        return;
      case Kind::EqOmega: {
        if (lang != Language::BT) fail(e, "=_{0w} atom");
        opArg(*e.kids[0]);
        const Expr& m = *e.kids[1];
        if (m.kind == Kind::Const && m.constant->kind == ConstKind::Zero) return;
        if (m.kind == Kind::Var && m.var.sort.isNum()) return;
        fail(e, "=_{0w} needs a numeric variable or 0 on the right");
      }
      case Kind::EqType:
        if (lang != Language::BT) fail(e, "=_{0k} atom");
        opArg(*e.kids[0]);
        typedVar(*e.kids[1], e.level);
        return;
      case Kind::Mem:
        if (lang != Language::BT) fail(e, "in_k atom");
        typedVar(*e.kids[0], e.level);
        typedVar(*e.kids[1], e.level + 1);
        return;
      default:
        fail(e, "expected a formula");
    }
  }
};

}  // namespace

VarSet freeVariables(const Expr& e) {
  VarSet out;
  std::vector<Variable> bound;
  collectFree(e, bound, out);
  return out;
}

VarSet freeVariables(const std::vector<ExprPtr>& es) {
  VarSet out;
  for (const auto& e : es) {
    auto f = freeVariables(*e);
    out.insert(f.begin(), f.end());
  }
  return out;
}

VarSet allVariables(const Expr& e) {
  VarSet out;
  collectAll(e, out);
  return out;
}

bool occursFree(const Expr& e, const Variable& v) {
  switch (e.kind) {
    case Kind::Var: return e.var == v;
    case Kind::Forall:
    case Kind::Exists: return e.var != v && occursFree(*e.kids[0], v);
    default:
      for (const auto& k : e.kids)
        if (occursFree(*k, v)) return true;
      return false;
  }
}

bool occursAnywhere(const Expr& e, const Variable& v) {
  if ((e.kind == Kind::Var || e.isQuantifier()) && e.var == v) return true;
  for (const auto& k : e.kids)
    if (occursAnywhere(*k, v)) return true;
  return false;
}

void FreshSupply::reserve(const Expr& e) {
  auto all = allVariables(e);
  used_.insert(all.begin(), all.end());
}

Variable FreshSupply::next(Sort s) {
  Variable v{s, 0};
  auto it = used_.lower_bound(v);
  while (it != used_.end() && it->sort == s && it->index == v.index) {
    ++v.index;
    ++it;
  }
  used_.insert(v);
  return v;
}

ExprPtr substitute(const ExprPtr& e, const Variable& x, const ExprPtr& replacement) {
  return substImpl(e, x, replacement, freeVariables(*replacement));
}

ExprPtr substituteAll(const ExprPtr& e, const std::vector<std::pair<Variable, ExprPtr>>& subs) {
  FreshSupply fresh(allVariables(*e));
  for (const auto& [x, r] : subs) {
    fresh.reserve(x);
    fresh.reserve(*r);
  }
  std::vector<Variable> temps;
  ExprPtr out = e;
  for (const auto& [x, r] : subs) {
    temps.push_back(fresh.next(x.sort));
    out = substitute(out, x, mk::var(temps.back()));
  }
  for (std::size_t i = 0; i < subs.size(); ++i) out = substitute(out, temps[i], subs[i].second);
  return out;
}

Sort termSort(const Expr& t) {
  switch (t.kind) {
    case Kind::Var: return t.var.sort;
    case Kind::Const:
      return t.constant->isOperation() ? Sort::type(0) : Sort::num();
    case Kind::Plus:
    case Kind::Times:
    case Kind::Pair:
    case Kind::Eval:
    case Kind::Subst: return Sort::num();
    case Kind::DefinedG: return Sort::set(t.level);
    case Kind::DefinedA: return Sort::set(t.level + 1);
    default: throw SortError("not a term: " + printExpr(t));
  }
}

ExprPtr substituteNum(const ExprPtr& phi, const Variable& x, const ExprPtr& t) {
  if (!x.sort.isNum()) throw SortError("substituteNum: variable is not numeric");
  if (!t->isTerm() || !termSort(*t).isNum())
    throw SortError("substituteNum: replacement is not a numeric term: " + printExpr(*t));
  return substitute(phi, x, t);
}

ExprPtr universalClosure(const ExprPtr& phi) {
  auto fv = freeVariables(*phi);
  ExprPtr r = phi;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) r = mk::forall(*it, r);
  return r;
}

std::size_t complexity(const Expr& phi) {
  std::size_t n = 0;
  switch (phi.kind) {
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
    case Kind::Forall:
    case Kind::Exists: n = 1; break;
    default: break;
  }
  for (const auto& k : phi.kids) n += complexity(*k);
  return n;
}

bool alphaEqual(const Expr& a, const Expr& b) {
  std::vector<Variable> sa, sb;
  return alphaImpl(a, b, sa, sb);
}

bool hasSetQuantifier(const Expr& e) {
  if (e.isQuantifier() && e.var.sort.isSetLike()) return true;
  for (const auto& k : e.kids)
    if (hasSetQuantifier(*k)) return true;
  return false;
}

void checkWellSorted(const Expr& e, Language lang, SortCheckOptions opts) {
  SortChecker c{lang, opts};
  if (e.isFormula()) {
    c.formula(e);
    return;
  }
  // a bare term: numeric, or a set/type variable
  if (e.kind == Kind::Var) return c.variable(e, e.var);
  if (lang == Language::BT && e.kind == Kind::Const) return c.opArg(e);
  c.numTerm(e);
}

bool isWellSorted(const Expr& e, Language lang, SortCheckOptions opts) {
  try {
    checkWellSorted(e, lang, opts);
    return true;
  } catch (const SortError&) {
    return false;
  }
}

bool isPureLanguage(const Expr& e, Language lang) {
  switch (e.kind) {
    case Kind::Pair:
    case Kind::Eval:
    case Kind::Subst:
    case Kind::Form:
    case Kind::Subform:
    case Kind::Ev:
    case Kind::DefinedG:
    case Kind::DefinedA: return false;
    default: break;
  }
  for (const auto& k : e.kids)
    if (!isPureLanguage(*k, lang)) return false;
  return true;
}

}  // namespace twb
