#include "twb/eterm.hpp"

#include <limits>

namespace twb {
namespace {

std::size_t addSat(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

// Redex whose spine prefix ends exactly at this node.
bool exactRedex(const ETerm& t) {
  if (t.kind != EKind::App || t.head->kind != EKind::Const) return false;
  switch (t.head->constant.kind) {
    case ConstKind::K: return t.nargs == 2;
    case ConstKind::S: return t.nargs == 3;
    case ConstKind::P1:
    case ConstKind::P2:
      return t.nargs == 1 && t.arg->head->isConst(ConstKind::P) && t.arg->nargs == 2;
    case ConstKind::D:
      return t.nargs == 4 && t.arg->numeral && t.fun->arg->numeral;
    default: return false;
  }
}

void collectVars(const ETerm& t, VarSet& out) {
  switch (t.kind) {
    case EKind::Var: out.insert(t.var); return;
    case EKind::Arith: {
      auto f = freeVariables(*t.arith);
      out.insert(f.begin(), f.end());
      return;
    }
    case EKind::App:
      collectVars(*t.fun, out);
      collectVars(*t.arg, out);
      return;
    case EKind::Const: return;
  }
}

}  // namespace

const ETermPtr& ETerm::spineArg(std::size_t i) const {
  if (i >= nargs) throw DomainError("spine argument out of range");
  const ETerm* cur = this;
  for (std::size_t k = nargs - 1; k > i; --k) cur = cur->fun.get();
  return cur->arg;
}

bool operator==(const ETerm& a, const ETerm& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.size != b.size || a.nargs != b.nargs) return false;
  switch (a.kind) {
    case EKind::Const: return a.constant == b.constant;
    case EKind::Var: return a.var == b.var;
    case EKind::Arith: return *a.arith == *b.arith;
    case EKind::App: return *a.fun == *b.fun && *a.arg == *b.arg;
  }
  return false;
}

bool sameTerm(const ETermPtr& a, const ETermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace et {

ETermPtr constant(Constant c) {
  auto t = std::make_shared<ETerm>();
  t->kind = EKind::Const;
  t->constant = std::move(c);
  t->head = t.get();
  if (t->constant.kind == ConstKind::Zero) t->numeral = 0;
  if (t->constant.kind == ConstKind::One) throw DomainError("1 is a numeric term; use an arithmetic leaf");
  return t;
}

ETermPtr of(ConstKind k) {
  static const ETermPtr table[] = {
      constant(Constant::of(ConstKind::Zero)), nullptr, constant(Constant::of(ConstKind::K)),
      constant(Constant::of(ConstKind::S)),    constant(Constant::of(ConstKind::D)),
      constant(Constant::of(ConstKind::P)),    constant(Constant::of(ConstKind::P1)),
      constant(Constant::of(ConstKind::P2))};
  auto i = static_cast<std::size_t>(k);
  if (i >= std::size(table) || !table[i]) throw DomainError("no plain constant of that kind");
  return table[i];
}

ETermPtr var(Variable v) {
  auto t = std::make_shared<ETerm>();
  t->kind = EKind::Var;
  t->var = v;
  t->head = t.get();
  return t;
}

ETermPtr app(ETermPtr f, ETermPtr a) {
  auto t = std::make_shared<ETerm>();
  t->kind = EKind::App;
  t->size = addSat(addSat(f->size, a->size), 1);
  t->head = f->head;
  t->nargs = f->nargs + 1;
  t->fun = std::move(f);
  t->arg = std::move(a);
  t->normal = t->fun->normal && t->arg->normal && !exactRedex(*t);
  if (t->nargs == 2 && t->head->isConst(ConstKind::P) && t->arg->isConst(ConstKind::Zero) && t->fun->arg->numeral &&
      *t->fun->arg->numeral < std::numeric_limits<std::uint64_t>::max())
    t->numeral = *t->fun->arg->numeral + 1;
  return t;
}

ETermPtr apps(ETermPtr f, const std::vector<ETermPtr>& args) {
  for (const auto& a : args) f = app(std::move(f), a);
  return f;
}

ETermPtr arith(ExprPtr numericTerm) {
  if (numericTerm->kind == Kind::Var) return var(numericTerm->var);
  if (numericTerm->kind == Kind::Const && numericTerm->constant->kind == ConstKind::Zero) return of(ConstKind::Zero);
  auto t = std::make_shared<ETerm>();
  t->kind = EKind::Arith;
  t->arith = std::move(numericTerm);
  t->head = t.get();
  return t;
}

ETermPtr numeral(std::uint64_t m) {
  ETermPtr t = of(ConstKind::Zero);
  for (std::uint64_t i = 0; i < m; ++i) t = app(app(of(ConstKind::P), t), of(ConstKind::Zero));
  return t;
}

ETermPtr tuple(const std::vector<ETermPtr>& ts) {
  if (ts.empty()) throw DomainError("tuple of an empty list");
  ETermPtr t = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) t = app(app(of(ConstKind::P), t), ts[i]);
  return t;
}

}  // namespace et

std::optional<std::uint64_t> numeralOf(const ETerm& t) { return t.numeral; }

VarSet freeVariables(const ETerm& t) {
  VarSet out;
  collectVars(t, out);
  return out;
}

bool occursIn(const ETerm& t, const Variable& v) {
  switch (t.kind) {
    case EKind::Var: return t.var == v;
    case EKind::Arith: return occursFree(*t.arith, v);
    case EKind::App: return occursIn(*t.fun, v) || occursIn(*t.arg, v);
    case EKind::Const: return false;
  }
  return false;
}

ETermPtr substituteTerm(const ETermPtr& t, const Variable& x, const ETermPtr& replacement) {
  switch (t->kind) {
    case EKind::Var: return t->var == x ? replacement : t;
    case EKind::Const: return t;
    case EKind::Arith: {
      if (!occursFree(*t->arith, x)) return t;
      // only numeric leaves may enter an arithmetic term
      ExprPtr r;
      if (replacement->kind == EKind::Arith) r = replacement->arith;
      else if (replacement->kind == EKind::Var && replacement->var.sort.isNum()) r = mk::var(replacement->var);
      else if (replacement->isConst(ConstKind::Zero)) r = mk::zero();
      else throw SortError("an operation cannot replace a numeric variable inside arithmetic");
      return et::arith(substitute(t->arith, x, r));
    }
    case EKind::App: {
      auto f = substituteTerm(t->fun, x, replacement);
      auto a = substituteTerm(t->arg, x, replacement);
      if (f == t->fun && a == t->arg) return t;
      return et::app(f, a);
    }
  }
  return t;
}

std::size_t applicationCount(const ETerm& t) {
  if (t.kind != EKind::App) return 0;
  return 1 + applicationCount(*t.fun) + applicationCount(*t.arg);
}

// ---------------------------------------------------------------- text

ETermPtr etermFromSexp(const Sexp& s) {
  if (!s.isList) {
    if (s.atom == "one" || s.atom == "1") return et::arith(mk::one());
    if (s.atom == "zero" || s.atom == "0") return et::of(ConstKind::Zero);
    if (auto v = variableFromSexp(s)) return et::var(*v);
    auto e = exprFromSexp(s, Language::BT);
    if (e->kind == Kind::Const) return et::constant(*e->constant);
    syntaxError(s, "not an external term: " + s.atom);
  }
  if (s.items.empty()) syntaxError(s, "empty list");
  auto h = s.head();
  if (h == "v" || h == "num" || h == "op" || h == "bt" || h == "set") return et::var(*variableFromSexp(s));
  if (h == "comp") return et::constant(*exprFromSexp(s, Language::BT)->constant);
  if (h == "n") {
    if (s.items.size() != 2) syntaxError(s, "'n' takes 1 argument");
    auto m = toU64(expectNatural(s.items[1]));
    if (!m || *m > 100000) syntaxError(s.items[1], "numeral too large");
    return et::numeral(*m);
  }
  if (h == "plus" || h == "times") return et::arith(exprFromSexp(s, Language::BT));
  std::size_t first = h == "app" ? 1 : 0;
  if (s.items.size() <= first) syntaxError(s, "application needs a function");
  ETermPtr t = etermFromSexp(s.items[first]);
  for (std::size_t i = first + 1; i < s.items.size(); ++i) t = et::app(t, etermFromSexp(s.items[i]));
  return t;
}

ETermPtr parseETerm(std::string_view text) { return etermFromSexp(readSexp(text)); }

namespace {

void printTerm(const ETerm& t, std::string& out) {
  switch (t.kind) {
    case EKind::Const: out += printConstant(t.constant); return;
    case EKind::Var: out += printVariable(t.var); return;
    case EKind::Arith: out += printExpr(*t.arith); return;
    case EKind::App: break;
  }
  if (t.numeral) {
    out += "(n " + std::to_string(*t.numeral) + ")";
    return;
  }
  std::vector<const ETerm*> args;
  const ETerm* cur = &t;
  while (cur->kind == EKind::App && !cur->numeral) {
    args.push_back(cur->arg.get());
    cur = cur->fun.get();
  }
  out += '(';
  printTerm(*cur, out);
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    out += ' ';
    printTerm(**it, out);
  }
  out += ')';
}

void prettyTerm(const ETerm& t, std::string& out, bool argPos) {
  switch (t.kind) {
    case EKind::Const:
    case EKind::Var: out += prettyExpr(*leafExpr(t)); return;
    case EKind::Arith: out += "[" + prettyExpr(*t.arith) + "]"; return;
    case EKind::App: break;
  }
  if (t.numeral) {
    out += std::to_string(*t.numeral) + "̄";
    return;
  }
  if (argPos) out += '(';
  prettyTerm(*t.fun, out, false);
  out += ' ';
  prettyTerm(*t.arg, out, true);
  if (argPos) out += ')';
}

}  // namespace

std::string printETerm(const ETerm& t) {
  std::string out;
  printTerm(t, out);
  return out;
}

std::string prettyETerm(const ETerm& t) {
  std::string out;
  prettyTerm(t, out, false);
  return out;
}

ExprPtr leafExpr(const ETerm& t) {
  if (t.kind == EKind::Const) return mk::constant(t.constant);
  if (t.kind == EKind::Var) return mk::var(t.var);
  if (t.kind == EKind::Arith) return t.arith;
  throw DomainError("not a leaf");
}

Sort leafSort(const ETerm& t) {
  if (t.kind == EKind::Var) return t.var.sort;
  if (t.kind == EKind::Arith || t.isConst(ConstKind::Zero)) return Sort::num();
  if (t.kind == EKind::Const) return Sort::type(0);
  throw DomainError("not a leaf");
}

// ---------------------------------------------------------------- unfolding

namespace {

ExprPtr leafEquation(const ExprPtr& x, const ETerm& leaf) {
  Sort s = leafSort(leaf);
  if (s.isNum()) return mk::eqOmega(x, leafExpr(leaf));
  if (s.kind == SortKind::Type) return mk::eqType(s.level, x, leafExpr(leaf));
  throw SortError("external terms range over BT types only");
}

}  // namespace

ExprPtr unfoldEvalTo(const ETerm& t, const Variable& x, FreshSupply& fresh) {
  if (!x.sort.isOperation()) throw SortError("t ~ x needs a type-0 variable x");
  ExprPtr xv = mk::var(x);
  switch (t.kind) {
    case EKind::Const:
    case EKind::Var: return leafEquation(xv, t);
    case EKind::Arith: {
      Variable m = fresh.next(Sort::num());
      return mk::exists(m, mk::conj(mk::eq(mk::var(m), t.arith), mk::eqOmega(xv, mk::var(m))));
    }
    case EKind::App: {
      Variable y = fresh.next(Sort::type(0));
      Variable z = fresh.next(Sort::type(0));
      auto left = unfoldEvalTo(*t.fun, y, fresh);
      auto right = unfoldEvalTo(*t.arg, z, fresh);
      return mk::exists(y, mk::exists(z, mk::conj(mk::conj(left, right), mk::ap(mk::var(y), mk::var(z), xv))));
    }
  }
  throw DomainError("bad external term");
}

ExprPtr unfoldEvalToVar(const ETerm& t, const Variable& v, FreshSupply& fresh) {
  if (v.sort.isOperation()) return unfoldEvalTo(t, v, fresh);
  Variable y = fresh.next(Sort::type(0));
  auto body = unfoldEvalTo(t, y, fresh);
  ExprPtr link = v.sort.isNum() ? mk::eqOmega(mk::var(y), mk::var(v))
                                : mk::eqType(v.sort.level, mk::var(y), mk::var(v));
  if (v.sort.kind == SortKind::Set) throw SortError("external terms range over BT types only");
  return mk::exists(y, mk::conj(body, link));
}

ExprPtr unfoldDefined(const ETerm& t, FreshSupply& fresh) {
  Variable x = fresh.next(Sort::type(0));
  return mk::exists(x, unfoldEvalTo(t, x, fresh));
}

ExprPtr unfoldKleene(const ETerm& t, const ETerm& tau, FreshSupply& fresh) {
  Variable x = fresh.next(Sort::type(0));
  auto a = unfoldEvalTo(t, x, fresh);
  auto b = unfoldEvalTo(tau, x, fresh);
  return mk::exists(x, mk::conj(a, b));
}

ExprPtr unfoldStrong(const ETerm& t, const ETerm& tau, FreshSupply& fresh) {
  Variable x = fresh.next(Sort::type(0));
  auto a = unfoldEvalTo(t, x, fresh);
  auto b = unfoldEvalTo(tau, x, fresh);
  return mk::forall(x, mk::iff(a, b));
}

ExprPtr unfoldInstance(const ExprPtr& phi, const Variable& slot, const ETerm& t, FreshSupply& fresh) {
  fresh.reserve(*phi);
  fresh.reserve(slot);
  Variable w = fresh.next(slot.sort);
  auto link = unfoldEvalToVar(t, w, fresh);
  return mk::exists(w, mk::conj(link, substitute(phi, slot, mk::var(w))));
}

FreshSupply supplyFor(std::initializer_list<const ETerm*> terms, std::initializer_list<const Expr*> exprs) {
  FreshSupply s;
  for (const ETerm* t : terms)
    for (const auto& v : freeVariables(*t)) s.reserve(v);
  for (const Expr* e : exprs) s.reserve(*e);
  return s;
}

}  // namespace twb
