#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "twb/classifiers.hpp"
#include "twb/coding.hpp"
#include "twb/eterm.hpp"
#include "twb/proofs.hpp"
#include "twb/syntax.hpp"

namespace twb {

namespace {

bool is(const Expr& e, Kind k) { return e.kind == k; }
const Expr& kid(const Expr& e, std::size_t i) { return *e.kids[i]; }
bool same(const Expr& a, const Expr& b) { return a == b; }

/// e[x := t] without renaming; nullopt when a binder would capture t.
std::optional<ExprPtr> substituteFreeFor(const ExprPtr& e, const Variable& x, const ExprPtr& t, const VarSet& tvars) {
  if (e->kind == Kind::Var) return e->var == x ? t : e;
  if (e->isQuantifier()) {
    if (e->var == x || !occursFree(*e->kids[0], x)) return e;
    if (tvars.count(e->var)) return std::nullopt;
    auto body = substituteFreeFor(e->kids[0], x, t, tvars);
    if (!body) return std::nullopt;
    return mk::withVar(*e, e->var, *body);
  }
  if (e->kids.empty()) return e;
  std::vector<ExprPtr> kids;
  for (const auto& k : e->kids) {
    auto r = substituteFreeFor(k, x, t, tvars);
    if (!r) return std::nullopt;
    kids.push_back(*r);
  }
  return mk::withKids(*e, std::move(kids));
}

std::optional<ExprPtr> substituteFreeFor(const ExprPtr& e, const Variable& x, const ExprPtr& t) {
  return substituteFreeFor(e, x, t, freeVariables(*t));
}

/// The term standing at the first free occurrence of x in a, read off b.
const Expr* findReplacement(const Expr& a, const Expr& b, const Variable& x) {
  if (a.kind == Kind::Var && a.var == x) return &b;
  if (a.kind != b.kind || a.kids.size() != b.kids.size()) return nullptr;
  if (a.isQuantifier() && a.var == x) return nullptr;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (auto r = findReplacement(*a.kids[i], *b.kids[i], x)) return r;
  return nullptr;
}

bool isTermOfSort(const Expr& t, const Sort& s) {
  if (!t.isTerm()) return false;
  try {
    return termSort(t) == s;
  } catch (const SortError&) {
    return false;
  }
}

/// b is a[x := t] for some term t free for x in a.
bool isInstantiation(const ExprPtr& a, const Variable& x, const Expr& b) {
  const Expr* t = findReplacement(*a, b, x);
  if (!t) return same(*a, b);
  if (!isTermOfSort(*t, x.sort)) return false;
  auto r = substituteFreeFor(a, x, std::make_shared<Expr>(*t));
  return r && same(**r, b);
}

/// b arises from a by replacing some occurrences of s by t.
bool replacesSome(const Expr& a, const Expr& b, const Expr& s, const Expr& t) {
  if (same(a, b)) return true;
  if (same(a, s) && same(b, t)) return true;
  if (a.kind != b.kind || a.level != b.level || a.kids.size() != b.kids.size()) return false;
  if (a.kind == Kind::Var && a.var != b.var) return false;
  if (a.kind == Kind::Const && !(*a.constant == *b.constant)) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!replacesSome(*a.kids[i], *b.kids[i], s, t)) return false;
  return true;
}

// ---------------------------------------------------------------- templates

/// First-order matching against a template whose free variables are
/// metavariables standing for terms of their sort. Bound variables match up
/// to consistent renaming; a binding may not capture formula binders.
class Matcher {
 public:
  explicit Matcher(VarSet metas) : metas_(std::move(metas)) {}

  bool match(const Expr& t, const Expr& f) {
    if (t.kind == Kind::Var) return matchVar(t.var, f);
    if (t.kind != f.kind || t.level != f.level || t.kids.size() != f.kids.size()) return false;
    if (t.kind == Kind::Const) return *t.constant == *f.constant;
    if (t.isQuantifier()) {
      if (t.var.sort != f.var.sort) return false;
      stack_.emplace_back(t.var, f.var);
      bool ok = match(*t.kids[0], *f.kids[0]);
      stack_.pop_back();
      return ok;
    }
    for (std::size_t i = 0; i < t.kids.size(); ++i)
      if (!match(*t.kids[i], *f.kids[i])) return false;
    return true;
  }

 private:
  bool matchVar(const Variable& v, const Expr& f) {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (it->first == v) {
        if (f.kind != Kind::Var || f.var != it->second) return false;
        for (auto jt = stack_.rbegin(); jt != it; ++jt)
          if (jt->second == f.var) return false;
        return true;
      }
    }
    if (!metas_.count(v)) return f.kind == Kind::Var && f.var == v && !boundInFormula(v);
    if (!isTermOfSort(f, v.sort)) return false;
    for (const auto& w : freeVariables(f))
      if (boundInFormula(w)) return false;
    auto [it, fresh] = bound_.emplace(v, &f);
    return fresh || same(*it->second, f);
  }

  bool boundInFormula(const Variable& v) const {
    for (const auto& [a, b] : stack_)
      if (b == v) return true;
    return false;
  }

  VarSet metas_;
  std::vector<std::pair<Variable, Variable>> stack_;
  std::map<Variable, const Expr*> bound_;
};

bool matchesTemplate(const ExprPtr& tmpl, const Expr& phi) {
  Matcher m(freeVariables(*tmpl));
  return m.match(*tmpl, phi);
}

Variable opv(std::uint64_t i) { return {Sort::type(0), i}; }
Variable btv(unsigned k, std::uint64_t i) { return {Sort::type(k), i}; }
Variable numv(std::uint64_t i) { return {Sort::num(), i}; }
ETermPtr ev(const Variable& v) { return et::var(v); }
ETermPtr ec(ConstKind k) { return et::of(k); }

FreshSupply reserving(std::initializer_list<Variable> vs) {
  FreshSupply s;
  for (const auto& v : vs) s.reserve(v);
  return s;
}

/// A family of templates indexed by up to two levels.
struct TemplateFamily {
  std::string id;
  unsigned arity = 0;
  std::function<std::vector<ExprPtr>(unsigned, unsigned)> build;
};

ExprPtr pairOf(unsigned tag, const std::vector<ExprPtr>& kids) {
  ExprPtr c = mk::zero();
  for (auto it = kids.rbegin(); it != kids.rend(); ++it) c = mk::plus(mk::pair(*it, c), mk::one());
  return mk::pair(mk::numeral(tag), c);
}

std::vector<TemplateFamily> btFamilies() {
  using namespace mk;
  std::vector<TemplateFamily> f;
  auto one = [](ExprPtr e) { return std::vector<ExprPtr>{std::move(e)}; };
  Variable x = opv(0), y = opv(1), z = opv(2), u = opv(3), v = opv(4), g = opv(5), fv = opv(6);
  Variable n = numv(0), m = numv(1);

  f.push_back({"BT2.1", 0, [=](unsigned, unsigned) { return one(eqType(0, var(x), var(x))); }});
  f.push_back({"BT2.2", 2, [=](unsigned k, unsigned j) {
                 Variable X = btv(k, 10), Y = btv(j, 11);
                 return one(imp(conjAll({eqType(k, var(u), var(X)), eqType(k, var(v), var(X)), eqType(j, var(u), var(Y))}),
                                eqType(j, var(v), var(Y))));
               }});
  f.push_back({"BT2.3", 0, [=](unsigned, unsigned) {
                 return one(imp(conj(eqOmega(var(u), var(m)), eqOmega(var(v), var(m))), eqType(0, var(u), var(v))));
               }});
  f.push_back({"BT2.4", 0, [=](unsigned, unsigned) {
                 return one(imp(conj(eqOmega(var(u), var(m)), eqType(0, var(u), var(v))), eqOmega(var(v), var(m))));
               }});
  f.push_back({"BT2.5", 0, [=](unsigned, unsigned) {
                 return one(imp(conjAll({ap(var(fv), var(x), var(y)), eqType(0, var(fv), var(g)), eqType(0, var(x), var(u)),
                                         eqType(0, var(y), var(v))}),
                                ap(var(g), var(u), var(v))));
               }});
  f.push_back({"BT2.6", 1, [=](unsigned k, unsigned) {
                 Variable X = btv(k, 10), U = btv(k, 11), Y = btv(k + 1, 12), Z = btv(k + 1, 13);
                 FreshSupply fresh = reserving({X, U, Y, Z});
                 return one(imp(conjAll({mem(k, var(X), var(Y)), btSetEquality(k, X, U, fresh),
                                         btSetEquality(k + 1, Y, Z, fresh)}),
                                mem(k, var(U), var(Z))));
               }});
  f.push_back({"BT3.1", 0, [=](unsigned, unsigned) {
                 return one(imp(conj(ap(var(fv), var(x), var(y)), ap(var(fv), var(x), var(z))), eqType(0, var(y), var(z))));
               }});
  f.push_back({"BT3.2", 0, [=](unsigned, unsigned) {
                 FreshSupply fresh = reserving({x, y});
                 return one(unfoldKleene(*et::apps(ec(ConstKind::K), {ev(x), ev(y)}), *ev(x), fresh));
               }});
  f.push_back({"BT3.3", 0, [=](unsigned, unsigned) {
                 FreshSupply fresh = reserving({x, y});
                 return one(unfoldDefined(*et::apps(ec(ConstKind::S), {ev(x), ev(y)}), fresh));
               }});
  f.push_back({"BT3.4", 0, [=](unsigned, unsigned) {
                 FreshSupply fresh = reserving({x, y, z});
                 auto lhs = et::apps(ec(ConstKind::S), {ev(x), ev(y), ev(z)});
                 auto rhs = et::app(et::app(ev(x), ev(z)), et::app(ev(y), ev(z)));
                 return one(unfoldStrong(*lhs, *rhs, fresh));
               }});
  f.push_back({"BT3.5", 0, [=](unsigned, unsigned) {
                 FreshSupply fresh = reserving({x, y});
                 return one(unfoldDefined(*et::apps(ec(ConstKind::P), {ev(x), ev(y)}), fresh));
               }});
  f.push_back({"BT3.6", 0, [=](unsigned, unsigned) {
                 FreshSupply fresh = reserving({x, y});
                 return one(neg(unfoldKleene(*et::apps(ec(ConstKind::P), {ev(x), ev(y)}), *ec(ConstKind::Zero), fresh)));
               }});
  f.push_back({"BT3.7", 0, [=](unsigned, unsigned) {
                 std::vector<ExprPtr> out;
                 for (auto pk : {ConstKind::P1, ConstKind::P2}) {
                   FreshSupply fresh = reserving({x});
                   out.push_back(unfoldDefined(*et::app(ec(pk), ev(x)), fresh));
                 }
                 return out;
               }});
  f.push_back({"BT3.8", 0, [=](unsigned, unsigned) {
                 std::vector<ExprPtr> out;
                 for (auto pk : {ConstKind::P1, ConstKind::P2}) {
                   FreshSupply fresh = reserving({x, y});
                   auto lhs = et::app(ec(pk), et::apps(ec(ConstKind::P), {ev(x), ev(y)}));
                   out.push_back(unfoldKleene(*lhs, *ev(pk == ConstKind::P1 ? x : y), fresh));
                 }
                 return out;
               }});
  f.push_back({"BT3.9", 0, [=](unsigned, unsigned) {
                 FreshSupply fresh = reserving({n, m});
                 auto lhs = et::apps(ec(ConstKind::P), {ev(n), ec(ConstKind::Zero)});
                 return one(exists(m, unfoldKleene(*lhs, *ev(m), fresh)));
               }});
  f.push_back({"BT3.10", 1, [=](unsigned k, unsigned) {
                 Variable Y = btv(k, 10), Z = btv(k, 11);
                 FreshSupply fresh = reserving({x, Y, Z});
                 return one(exists(Z, unfoldKleene(*et::apps(ec(ConstKind::P), {ev(x), ev(Y)}), *ev(Z), fresh)));
               }});
  f.push_back({"BT3.11", 0, [=](unsigned, unsigned) {
                 FreshSupply fresh = reserving({x, y, n, m});
                 auto lhs = et::apps(ec(ConstKind::D), {ev(x), ev(y), ev(n), ev(m)});
                 return one(imp(eq(var(n), var(m)), unfoldKleene(*lhs, *ev(x), fresh)));
               }});
  f.push_back({"BT3.12", 0, [=](unsigned, unsigned) {
                 FreshSupply fresh = reserving({x, y, n, m});
                 auto lhs = et::apps(ec(ConstKind::D), {ev(x), ev(y), ev(n), ev(m)});
                 return one(imp(neg(eq(var(n), var(m))), unfoldKleene(*lhs, *ev(y), fresh)));
               }});
  f.push_back({"BT3.13", 0, [=](unsigned, unsigned) { return one(exists(x, eqOmega(var(x), var(n)))); }});
  f.push_back({"BT3.14", 1, [=](unsigned k, unsigned) {
                 Variable Y = btv(k, 10);
                 return one(exists(x, eqType(k, var(x), var(Y))));
               }});
  return f;
}

std::vector<TemplateFamily> peanoFamilies() {
  using namespace mk;
  auto one = [](ExprPtr e) { return std::vector<ExprPtr>{std::move(e)}; };
  ExprPtr n = mk::num(0), m = mk::num(1);
  std::vector<TemplateFamily> f;
  f.push_back({"PA1", 0, [=](unsigned, unsigned) { return one(neg(eq(plus(n, mk::one()), zero()))); }});
  f.push_back({"PA2", 0, [=](unsigned, unsigned) {
                 return one(imp(eq(plus(n, mk::one()), plus(m, mk::one())), eq(n, m)));
               }});
  f.push_back({"PA3", 0, [=](unsigned, unsigned) { return one(eq(plus(n, zero()), n)); }});
  f.push_back({"PA4", 0, [=](unsigned, unsigned) {
                 return one(eq(plus(n, plus(m, mk::one())), plus(plus(n, m), mk::one())));
               }});
  f.push_back({"PA5", 0, [=](unsigned, unsigned) { return one(eq(times(n, zero()), zero())); }});
  f.push_back({"PA6", 0, [=](unsigned, unsigned) {
                 return one(eq(times(n, plus(m, mk::one())), plus(times(n, m), n)));
               }});
  return f;
}

std::vector<TemplateFamily> truthFamilies() {
  using namespace mk;
  ExprPtr M = mk::num(0), L = mk::num(1), I = mk::num(2), J = mk::num(3);
  Variable n = numv(4);
  auto form = [=](unsigned level) { return mk::form(numeral(level), M); };
  auto evML = [=] { return mk::ev(M, L); };
  auto evalI = [=] { return mk::eval(I, L); };
  auto evalJ = [=] { return mk::eval(J, L); };
  auto guarded = [=](unsigned level, ExprPtr shape, ExprPtr body) {
    return imp(conj(evML(), conj(form(level), eq(M, std::move(shape)))), std::move(body));
  };
  std::vector<TemplateFamily> f;
  f.push_back({"Tr1", 1, [=](unsigned k, unsigned) {
                 if (k == 0) return std::vector<ExprPtr>{};
                 return std::vector<ExprPtr>{imp(tr(k, M, L), conj(form(k - 1), evML()))};
               }});
  f.push_back({"Tr2", 1, [=](unsigned k, unsigned) {
                 if (k == 0) return std::vector<ExprPtr>{};
                 return std::vector<ExprPtr>{
                     guarded(k - 1, pairOf(coding::kEq, {I, J}), iff(tr(k, M, L), eq(evalI(), evalJ())))};
               }});
  f.push_back({"Tr3", 1, [=](unsigned k, unsigned) {
                 if (k == 0) return std::vector<ExprPtr>{};
                 return std::vector<ExprPtr>{guarded(k, pairOf(coding::kTr, {numeral(k), I, J}),
                                                     iff(tr(k + 1, M, L), tr(k, evalI(), evalJ())))};
               }});
  f.push_back({"Tr4", 1, [=](unsigned k, unsigned) {
                 if (k == 0) return std::vector<ExprPtr>{};
                 return std::vector<ExprPtr>{neg(tr(k, zero(), L))};
               }});
  f.push_back({"Tr5", 1, [=](unsigned k, unsigned) {
                 std::vector<ExprPtr> out;
                 if (k == 0) return out;
                 ExprPtr a = tr(k, I, L), b = tr(k, J, L);
                 out.push_back(guarded(k - 1, pairOf(coding::kAnd, {I, J}), iff(tr(k, M, L), conj(a, b))));
                 out.push_back(guarded(k - 1, pairOf(coding::kOr, {I, J}), iff(tr(k, M, L), disj(a, b))));
                 out.push_back(guarded(k - 1, pairOf(coding::kImp, {I, J}), iff(tr(k, M, L), imp(a, b))));
                 return out;
               }});
  f.push_back({"Tr6", 1, [=](unsigned k, unsigned) {
                 std::vector<ExprPtr> out;
                 if (k == 0) return out;
                 ExprPtr varCode = pairOf(coding::kVar, {zero(), I});
                 ExprPtr step = tr(k, J, subst(L, I, var(n)));
                 out.push_back(guarded(k - 1, pairOf(coding::kForall, {varCode, J}), iff(tr(k, M, L), forall(n, step))));
                 out.push_back(guarded(k - 1, pairOf(coding::kExists, {varCode, J}), iff(tr(k, M, L), exists(n, step))));
                 return out;
               }});
  return f;
}

/// Levels worth trying for a level-indexed family.
std::set<unsigned> candidateLevels(const Expr& e) {
  std::set<unsigned> out{0};
  std::function<void(const Expr&)> go = [&](const Expr& x) {
    switch (x.kind) {
      case Kind::EqType:
      case Kind::Tr:
        out.insert(x.level);
        if (x.level > 0) out.insert(x.level - 1);
        break;
      case Kind::Mem:
        out.insert(x.level);
        out.insert(x.level + 1);
        break;
      default: break;
    }
    if (x.kind == Kind::Var || x.isQuantifier()) {
      out.insert(x.var.sort.level);
      if (x.var.sort.level > 0) out.insert(x.var.sort.level - 1);
    }
    for (const auto& k : x.kids) go(*k);
  };
  go(e);
  return out;
}

class TemplateLibrary {
 public:
  static TemplateLibrary& instance() {
    static TemplateLibrary lib;
    return lib;
  }

  const std::vector<TemplateFamily>& families(Language lang) const {
    if (lang == Language::BT) return bt_;
    if (lang == Language::PATr) return patr_;
    return peano_;
  }

  bool matches(const TemplateFamily& fam, const Expr& phi) {
    if (fam.arity == 0) return anyMatch(fam, 0, 0, phi);
    auto levels = candidateLevels(phi);
    for (unsigned k : levels) {
      if (fam.arity == 1) {
        if (anyMatch(fam, k, 0, phi)) return true;
        continue;
      }
      for (unsigned j : levels)
        if (anyMatch(fam, k, j, phi)) return true;
    }
    return false;
  }

 private:
  TemplateLibrary() : bt_(btFamilies()), peano_(peanoFamilies()), patr_(peanoFamilies()) {
    for (auto& t : truthFamilies()) patr_.push_back(std::move(t));
  }

  bool anyMatch(const TemplateFamily& fam, unsigned k, unsigned j, const Expr& phi) {
    for (const auto& t : get(fam, k, j))
      if (matchesTemplate(t, phi)) return true;
    return false;
  }

  std::vector<ExprPtr> get(const TemplateFamily& fam, unsigned k, unsigned j) {
    auto key = std::make_tuple(fam.id, k, j);
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto built = fam.build(k, j);
    std::lock_guard lock(mu_);
    return cache_.emplace(key, std::move(built)).first->second;
  }

  std::vector<TemplateFamily> bt_, peano_, patr_;
  std::mutex mu_;
  std::map<std::tuple<std::string, unsigned, unsigned>, std::vector<ExprPtr>> cache_;
};

// ---------------------------------------------------------------- schemas with formula parameters

bool inductionInstance(const TheoryId& theory, const Expr& phi) {
  if (!is(phi, Kind::Imp) || !is(kid(phi, 0), Kind::And) || !is(kid(phi, 1), Kind::Forall)) return false;
  const Expr& premises = kid(phi, 0);
  const Expr& concl = kid(phi, 1);
  const Expr& step = kid(premises, 1);
  if (!is(step, Kind::Forall) || !is(kid(step, 0), Kind::Imp)) return false;
  Variable n = concl.var, n2 = step.var;
  if (!n.sort.isNum() || !n2.sort.isNum()) return false;
  const ExprPtr& body = concl.kids[0];
  if (theory.restrictedInduction && hasSetQuantifier(*body)) return false;
  auto base = substituteFreeFor(body, n, mk::zero());
  auto here = substituteFreeFor(body, n, mk::var(n2));
  auto next = substituteFreeFor(body, n, mk::plus(mk::var(n2), mk::one()));
  return base && here && next && same(**base, kid(premises, 0)) && same(**here, kid(kid(step, 0), 0)) &&
         same(**next, kid(kid(step, 0), 1));
}

/// exists z forall n (n in_k z iff body) with z of the given sort.
struct ComprehensionShape {
  Variable z, n;
  ExprPtr body;
};
std::optional<ComprehensionShape> comprehensionShape(const Expr& phi, unsigned k) {
  if (!is(phi, Kind::Exists) || !is(kid(phi, 0), Kind::Forall)) return std::nullopt;
  Variable z = phi.var, n = kid(phi, 0).var;
  if (z.sort != Sort::set(k) || !n.sort.isNum()) return std::nullopt;
  auto parts = asIff(kid(kid(phi, 0), 0));
  if (!parts) return std::nullopt;
  const Expr& lhs = *parts->first;
  if (!is(lhs, Kind::In) || lhs.level != k || !same(kid(lhs, 0), *mk::var(z)) || !same(kid(lhs, 1), *mk::var(n)))
    return std::nullopt;
  return ComprehensionShape{z, n, parts->second};
}

bool saComprehension(const TheoryId& theory, const Expr& phi) {
  if (!is(phi, Kind::Exists) || phi.var.sort.kind != SortKind::Set) return false;
  unsigned k = phi.var.sort.level;
  if (theory.level && k > *theory.level) return false;
  auto c = comprehensionShape(phi, k);
  return c && isKSimple(k, *c->body).isMember && !occursAnywhere(*c->body, c->z);
}

bool arComprehension(const Expr& phi) {
  auto c = comprehensionShape(phi, 0);
  return c && !hasSetQuantifier(*c->body) && !occursAnywhere(*c->body, c->z);
}

/// forall n exists! x phi -> exists y forall n exists x [phi and forall m (m in x iff (n,m) in y)]
/// with x of sort k and y of sort k+1 (k = 0 for Ar, where both are sets).
bool choiceInstance(const Expr& phi, unsigned k, bool arLike, const std::function<bool(const Expr&)>& bodyOk) {
  if (!is(phi, Kind::Imp)) return false;
  const Expr& concl = kid(phi, 1);
  if (!is(concl, Kind::Exists)) return false;
  Variable y = concl.var;
  const unsigned ySort = arLike ? 0 : k + 1;
  if (y.sort != Sort::set(ySort)) return false;
  const Expr& all = kid(concl, 0);
  if (!is(all, Kind::Forall) || !all.var.sort.isNum()) return false;
  Variable n = all.var;
  const Expr& ex = kid(all, 0);
  if (!is(ex, Kind::Exists) || ex.var.sort != Sort::set(k)) return false;
  Variable x = ex.var;
  if (!is(kid(ex, 0), Kind::And)) return false;
  const ExprPtr& body = kid(ex, 0).kids[0];
  const Expr& slice = kid(kid(ex, 0), 1);
  if (!is(slice, Kind::Forall) || !slice.var.sort.isNum()) return false;
  Variable m = slice.var;
  if (m == n) return false;
  auto parts = asIff(kid(slice, 0));
  if (!parts) return false;
  const unsigned memberLevel = arLike ? 0 : k;
  const unsigned pairLevel = arLike ? 0 : k + 1;
  if (!same(*parts->first, *mk::in(memberLevel, mk::var(x), mk::var(m)))) return false;
  if (!same(*parts->second, *mk::in(pairLevel, mk::var(y), mk::pair(mk::var(n), mk::var(m))))) return false;
  if (!bodyOk(*body) || occursAnywhere(*body, y)) return false;

  FreshSupply fresh(allVariables(phi));
  Variable z = fresh.next(Sort::set(k));
  auto other = substituteFreeFor(body, x, mk::var(z));
  if (!other) return false;
  ExprPtr unique = mk::exists(x, mk::conj(body, mk::forall(z, mk::imp(*other, setEquality(memberLevel, x, z, fresh)))));
  return alphaEqual(kid(phi, 0), *mk::forall(n, unique));
}

bool saChoice(const TheoryId& theory, const Expr& phi) {
  if (!is(phi, Kind::Imp) || !is(kid(phi, 1), Kind::Exists)) return false;
  const Variable& y = kid(phi, 1).var;
  if (y.sort.kind != SortKind::Set || y.sort.level < 2) return false;
  unsigned k = y.sort.level - 1;
  if (theory.level && k + 1 > *theory.level) return false;
  return choiceInstance(phi, k, false, [k](const Expr& b) { return isKSimple(k, b).isMember; });
}

bool arUniqueChoice(const Expr& phi) {
  return choiceInstance(phi, 0, true, [](const Expr& b) { return !hasSetQuantifier(b); });
}

/// forall n [forall v phi iff exists u psi] -> exists z forall n [n in z iff exists u psi]
bool deltaComprehension(const Expr& phi) {
  if (!is(phi, Kind::Imp)) return false;
  const Expr& hyp = kid(phi, 0);
  if (!is(hyp, Kind::Forall) || !hyp.var.sort.isNum()) return false;
  Variable n = hyp.var;
  auto sides = asIff(kid(hyp, 0));
  if (!sides) return false;
  const Expr& pi = *sides->first;
  const Expr& sigma = *sides->second;
  if (!is(pi, Kind::Forall) || !is(sigma, Kind::Exists)) return false;
  if (pi.var.sort != Sort::set(0) || sigma.var.sort != Sort::set(0)) return false;
  if (hasSetQuantifier(kid(pi, 0)) || hasSetQuantifier(kid(sigma, 0))) return false;
  auto c = comprehensionShape(kid(phi, 1), 0);
  if (!c) return false;
  if (occursAnywhere(pi, c->z) || occursAnywhere(sigma, c->z)) return false;
  ExprPtr expected = mk::exists(
      c->z, mk::forall(n, mk::iff(mk::in(0, mk::var(c->z), mk::var(n)), sides->second)));
  return alphaEqual(kid(phi, 1), *expected);
}

std::optional<ETermPtr> tupleOf(const std::vector<Variable>& xs) {
  if (xs.empty()) return std::nullopt;
  std::vector<ETermPtr> ts;
  for (const auto& v : xs) ts.push_back(et::var(v));
  return et::tuple(ts);
}

/// exists U^{k+1} [c_n(X..) ~ U and forall Z^k (Z in_k U iff body)], n the
/// code of Z.X...body.
bool btComprehension(const TheoryId& theory, const Expr& phi) {
  if (!is(phi, Kind::Exists) || phi.var.sort.kind != SortKind::Type || phi.var.sort.level == 0) return false;
  Variable U = phi.var;
  const unsigned k = U.sort.level - 1;
  if (theory.level && k + 1 > *theory.level) return false;
  if (!is(kid(phi, 0), Kind::And)) return false;
  const Expr& link = kid(kid(phi, 0), 0);
  const Expr& all = kid(kid(phi, 0), 1);
  if (!is(all, Kind::Forall) || all.var.sort != Sort::type(k)) return false;
  Variable Z = all.var;
  auto sides = asIff(kid(all, 0));
  if (!sides || !same(*sides->first, *mk::mem(k, mk::var(Z), mk::var(U)))) return false;
  const ExprPtr& body = sides->second;

  std::optional<Natural> index;
  std::function<void(const Expr&)> find = [&](const Expr& e) {
    if (e.kind == Kind::Const && e.constant->kind == ConstKind::Comp && !index) index = e.constant->index;
    for (const auto& c : e.kids) find(*c);
  };
  find(link);
  if (!index) return false;
  auto abs = coding::decodeAbstraction(*index);
  if (!abs || abs->z != Z || !same(*abs->body, *body)) return false;
  for (const auto& x : abs->params) {
    if (x == Z || x == U) return false;
    if (x.sort.kind == SortKind::Type && x.sort.level > k + 1) return false;
  }
  if (!isElementary(k + 1, *body).isMember) return false;
  VarSet allowed(abs->params.begin(), abs->params.end());
  allowed.insert(Z);
  for (const auto& v : freeVariables(*body))
    if (!allowed.count(v)) return false;

  ETermPtr head = et::constant(Constant::comp(*index));
  if (auto tup = tupleOf(abs->params)) head = et::app(head, *tup);
  FreshSupply fresh(allVariables(phi));
  ExprPtr expected = unfoldKleene(*head, *et::var(U), fresh);
  return alphaEqual(link, *expected);
}

// ---------------------------------------------------------------- tables

bool isArBase(TheoryBase b) {
  return b == TheoryBase::Ar || b == TheoryBase::ArACBang || b == TheoryBase::ArDelta11C;
}

using SchemaFn = std::function<bool(const TheoryId&, const Expr&)>;

std::vector<std::pair<std::string, SchemaFn>> specialSchemas(TheoryBase base) {
  std::vector<std::pair<std::string, SchemaFn>> out;
  switch (base) {
    case TheoryBase::BT:
    case TheoryBase::BTcl: out.emplace_back("BT-comp", btComprehension); break;
    case TheoryBase::SA:
      out.emplace_back("IND", inductionInstance);
      out.emplace_back("SA-comp", saComprehension);
      out.emplace_back("SA-choice", saChoice);
      break;
    case TheoryBase::PATr: out.emplace_back("IND", inductionInstance); break;
    case TheoryBase::Ar:
    case TheoryBase::ArACBang:
    case TheoryBase::ArDelta11C:
      out.emplace_back("IND", inductionInstance);
      out.emplace_back("Ar-comp", [](const TheoryId&, const Expr& e) { return arComprehension(e); });
      if (base == TheoryBase::ArACBang)
        out.emplace_back("AC!", [](const TheoryId&, const Expr& e) { return arUniqueChoice(e); });
      if (base == TheoryBase::ArDelta11C)
        out.emplace_back("D11C", [](const TheoryId&, const Expr& e) { return deltaComprehension(e); });
      break;
  }
  return out;
}

bool logicalShape(std::string_view id, const Expr& e, bool classical) {
  auto imp = [](const Expr& x) { return is(x, Kind::Imp); };
  if (id == "L1") return imp(e) && imp(kid(e, 1)) && same(kid(e, 0), kid(kid(e, 1), 1));
  if (id == "L2") {
    if (!imp(e) || !imp(kid(e, 0)) || !imp(kid(e, 1))) return false;
    const Expr& abc = kid(e, 0);
    const Expr& rhs = kid(e, 1);
    if (!imp(kid(abc, 1)) || !imp(kid(rhs, 0)) || !imp(kid(rhs, 1))) return false;
    const Expr& a = kid(abc, 0);
    const Expr& b = kid(kid(abc, 1), 0);
    const Expr& c = kid(kid(abc, 1), 1);
    return same(kid(kid(rhs, 0), 0), a) && same(kid(kid(rhs, 0), 1), b) && same(kid(kid(rhs, 1), 0), a) &&
           same(kid(kid(rhs, 1), 1), c);
  }
  if (id == "L3" || id == "L4")
    return imp(e) && is(kid(e, 0), Kind::And) && same(kid(kid(e, 0), id == "L3" ? 0 : 1), kid(e, 1));
  if (id == "L5")
    return imp(e) && imp(kid(e, 1)) && is(kid(kid(e, 1), 1), Kind::And) &&
           same(kid(kid(kid(e, 1), 1), 0), kid(e, 0)) && same(kid(kid(kid(e, 1), 1), 1), kid(kid(e, 1), 0));
  if (id == "L6" || id == "L7")
    return imp(e) && is(kid(e, 1), Kind::Or) && same(kid(kid(e, 1), id == "L6" ? 0 : 1), kid(e, 0));
  if (id == "L8") {
    if (!imp(e) || !imp(kid(e, 0)) || !imp(kid(e, 1))) return false;
    const Expr& ac = kid(e, 0);
    const Expr& rest = kid(e, 1);
    if (!imp(kid(rest, 0)) || !imp(kid(rest, 1)) || !is(kid(kid(rest, 1), 0), Kind::Or)) return false;
    const Expr& a = kid(ac, 0);
    const Expr& c = kid(ac, 1);
    const Expr& bc = kid(rest, 0);
    const Expr& orAB = kid(kid(rest, 1), 0);
    return same(kid(bc, 1), c) && same(kid(orAB, 0), a) && same(kid(orAB, 1), kid(bc, 0)) &&
           same(kid(kid(rest, 1), 1), c);
  }
  if (id == "L9") return imp(e) && is(kid(e, 0), Kind::Bot);
  if (id == "Q1") return imp(e) && is(kid(e, 0), Kind::Forall) && isInstantiation(kid(e, 0).kids[0], kid(e, 0).var, kid(e, 1));
  if (id == "Q2") return imp(e) && is(kid(e, 1), Kind::Exists) && isInstantiation(kid(e, 1).kids[0], kid(e, 1).var, kid(e, 0));
  if (id == "Q3") {
    if (!imp(e) || !is(kid(e, 0), Kind::Forall) || !imp(kid(kid(e, 0), 0)) || !imp(kid(e, 1))) return false;
    const Expr& all = kid(e, 0);
    const Expr& b = kid(kid(all, 0), 0);
    const Expr& a = kid(kid(all, 0), 1);
    const Expr& rhs = kid(e, 1);
    return same(kid(rhs, 0), b) && is(kid(rhs, 1), Kind::Forall) && kid(rhs, 1).var == all.var &&
           same(kid(kid(rhs, 1), 0), a) && !occursFree(b, all.var);
  }
  if (id == "Q4") {
    if (!imp(e) || !is(kid(e, 0), Kind::Forall) || !imp(kid(kid(e, 0), 0)) || !imp(kid(e, 1))) return false;
    const Expr& all = kid(e, 0);
    const Expr& a = kid(kid(all, 0), 0);
    const Expr& b = kid(kid(all, 0), 1);
    const Expr& rhs = kid(e, 1);
    return is(kid(rhs, 0), Kind::Exists) && kid(rhs, 0).var == all.var && same(kid(kid(rhs, 0), 0), a) &&
           same(kid(rhs, 1), b) && !occursFree(b, all.var);
  }
  if (id == "E1") return is(e, Kind::Eq) && same(kid(e, 0), kid(e, 1));
  if (id == "E2") {
    if (!imp(e) || !is(kid(e, 0), Kind::Eq) || !imp(kid(e, 1))) return false;
    const Expr& a = kid(kid(e, 1), 0);
    const Expr& b = kid(kid(e, 1), 1);
    return a.isAtom() && b.isAtom() && replacesSome(a, b, kid(kid(e, 0), 0), kid(kid(e, 0), 1));
  }
  if (id == "DNE") {
    if (!classical || !imp(e)) return false;
    const Expr* inner = negated(kid(e, 0));
    if (!inner) return false;
    const Expr* core = negated(*inner);
    return core && same(*core, kid(e, 1));
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- public

ExprPtr btSetEquality(unsigned k, const Variable& x, const Variable& u, FreshSupply& fresh) {
  if (k == 0) return mk::eqType(0, mk::var(x), mk::var(u));
  fresh.reserve(x);
  fresh.reserve(u);
  Variable w = fresh.next(Sort::type(k - 1));
  return mk::forall(w, mk::iff(mk::mem(k - 1, mk::var(w), mk::var(x)), mk::mem(k - 1, mk::var(w), mk::var(u))));
}

ExprPtr setEquality(unsigned k, const Variable& x, const Variable& z, FreshSupply& fresh) {
  fresh.reserve(x);
  fresh.reserve(z);
  Variable n = fresh.next(Sort::num());
  return mk::forall(n, mk::iff(mk::in(k, mk::var(x), mk::var(n)), mk::in(k, mk::var(z), mk::var(n))));
}

ExprPtr btInductionStep(const ExprPtr& phi, const Variable& n, const Variable& m) {
  FreshSupply fresh(allVariables(*phi));
  fresh.reserve(n);
  fresh.reserve(m);
  auto succ = et::apps(et::of(ConstKind::P), {et::var(n), et::of(ConstKind::Zero)});
  ExprPtr link = unfoldKleene(*succ, *et::var(m), fresh);
  auto moved = substituteFreeFor(phi, n, mk::var(m));
  if (!moved) throw DomainError("the induction variable is not free for m");
  return mk::imp(phi, mk::exists(m, mk::conj(link, *moved)));
}

const std::vector<std::string>& logicalSchemaNames() {
  static const std::vector<std::string> names = {"L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8",
                                                 "L9", "Q1", "Q2", "Q3", "Q4", "E1", "E2", "DNE"};
  return names;
}

std::vector<std::string> axiomSchemaNames(TheoryBase base) {
  TheoryId t;
  t.base = base;
  std::vector<std::string> out;
  for (const auto& f : TemplateLibrary::instance().families(t.language())) out.push_back(f.id);
  for (const auto& [id, fn] : specialSchemas(base)) out.push_back(id);
  return out;
}

bool isLogicalInstance(const TheoryId& theory, std::string_view id, const Expr& phi) {
  return logicalShape(id, phi, theory.classical());
}

bool isAxiomInstance(const TheoryId& theory, std::string_view id, const Expr& phi) {
  auto& lib = TemplateLibrary::instance();
  for (const auto& f : lib.families(theory.language()))
    if (f.id == id) return lib.matches(f, phi);
  for (const auto& [name, fn] : specialSchemas(theory.base))
    if (name == id) return fn(theory, phi);
  return false;
}

std::optional<std::string> recognizeLogical(const TheoryId& theory, const Expr& phi) {
  for (const auto& id : logicalSchemaNames())
    if (isLogicalInstance(theory, id, phi)) return id;
  return std::nullopt;
}

std::optional<std::string> recognizeAxiom(const TheoryId& theory, const Expr& phi) {
  for (const auto& id : axiomSchemaNames(theory.base))
    if (isAxiomInstance(theory, id, phi)) return id;
  return std::nullopt;
}

std::optional<std::string> isBTAxiom(const TheoryId& theory, const Expr& phi) {
  if (theory.language() != Language::BT) return std::nullopt;
  return recognizeAxiom(theory, phi);
}
std::optional<std::string> isSAAxiom(const TheoryId& theory, const Expr& phi) {
  if (theory.base != TheoryBase::SA) return std::nullopt;
  return recognizeAxiom(theory, phi);
}
std::optional<std::string> isArAxiom(const TheoryId& theory, const Expr& phi) {
  if (!isArBase(theory.base)) return std::nullopt;
  return recognizeAxiom(theory, phi);
}
std::optional<std::string> isPATrAxiom(const TheoryId& theory, const Expr& phi) {
  if (theory.base != TheoryBase::PATr) return std::nullopt;
  return recognizeAxiom(theory, phi);
}

}  // namespace twb
