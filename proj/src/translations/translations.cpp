#include "twb/translations.hpp"

#include <map>
#include <mutex>

#include "twb/coding.hpp"
#include "twb/text.hpp"

namespace twb {

namespace {

Variable setVar(unsigned sort, std::uint64_t index) { return {Sort::set(sort), index}; }
Variable numVar(std::uint64_t index) { return {Sort::num(), index}; }

template <typename F>
ExprPtr rebuildKids(const Expr& e, F&& f) {
  std::vector<ExprPtr> kids;
  kids.reserve(e.kids.size());
  for (const auto& k : e.kids) kids.push_back(f(*k));
  return mk::withKids(e, std::move(kids));
}

/// Renames variables through `f`, setting In levels with `inLevel`.
template <typename F>
ExprPtr renameVars(const Expr& e, F&& f) {
  if (e.kind == Kind::Var) return mk::var(f(e.var));
  if (e.isQuantifier()) return mk::withVar(e, f(e.var), renameVars(*e.kids[0], f));
  if (e.kids.empty()) return mk::withKids(e, {});
  return rebuildKids(e, [&](const Expr& k) { return renameVars(k, f); });
}

bool hasExtensionSymbols(const Expr& e) { return !isPureLanguage(e, Language::SA); }

}  // namespace

// ---------------------------------------------------------------- hat

ExprPtr hat(const Expr& phi) {
  checkWellSorted(phi, Language::SA);
  auto rename = [](const Variable& v) {
    if (v.sort.kind != SortKind::Set) return v;
    auto idx = toU64(coding::pair(v.sort.level, fromU64(v.index)));
    if (!idx) throw DomainError("set variable index too large for the pairing");
    return setVar(0, *idx);
  };
  std::function<ExprPtr(const Expr&)> go = [&](const Expr& e) -> ExprPtr {
    if (e.kind == Kind::In) return mk::in(0, go(*e.kids[0]), go(*e.kids[1]));
    if (e.kind == Kind::Var) return mk::var(rename(e.var));
    if (e.isQuantifier()) return mk::withVar(e, rename(e.var), go(*e.kids[0]));
    if (e.kids.empty()) return mk::withKids(e, {});
    return rebuildKids(e, go);
  };
  return go(phi);
}

// ---------------------------------------------------------------- truth sets

namespace truthvars {
Variable r() { return numVar(0); }
Variable l() { return numVar(1); }
Variable m() { return numVar(2); }
Variable x(unsigned q) { return setVar(q + 1, q); }
Variable y(unsigned k) { return setVar(k, 0); }
Variable z(unsigned k) { return setVar(k + 1, 0); }
}  // namespace truthvars

ExprPtr pairTerm(const ExprPtr& t, const ExprPtr& u) { return mk::pair(t, u); }

namespace {

ExprPtr seqPoly(const std::vector<ExprPtr>& xs) {
  ExprPtr c = mk::zero();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) c = mk::plus(mk::pair(*it, c), mk::one());
  return c;
}

ExprPtr codePoly(unsigned tag, const std::vector<ExprPtr>& kids) { return mk::pair(mk::numeral(tag), seqPoly(kids)); }

FreshSupply interfaceSupply(unsigned k) {
  FreshSupply s;
  s.reserve(truthvars::r());
  s.reserve(truthvars::l());
  s.reserve(truthvars::m());
  for (unsigned q = 1; q < k; ++q) s.reserve(truthvars::x(q));
  s.reserve(truthvars::y(k));
  s.reserve(truthvars::z(k));
  return s;
}

template <typename Build>
ExprPtr memo(std::map<unsigned, ExprPtr>& cache, std::mutex& mu, unsigned k, Build&& build) {
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  ExprPtr e = build();
  std::lock_guard lock(mu);
  return cache.emplace(k, e).first->second;
}

ExprPtr makeA(unsigned k) {
  using namespace truthvars;
  FreshSupply fresh = interfaceSupply(k);
  Variable i = fresh.next(Sort::num()), j = fresh.next(Sort::num()), n = fresh.next(Sort::num());
  ExprPtr R = mk::var(r()), L = mk::var(l()), I = mk::var(i), J = mk::var(j), Y = mk::var(y(k));
  ExprPtr evalI = mk::eval(I, L), evalJ = mk::eval(J, L);
  std::vector<ExprPtr> groups;

  groups.push_back(mk::conj(mk::eq(R, codePoly(coding::kEq, {I, J})), mk::eq(evalI, evalJ)));

  for (unsigned q = 1; q < k; ++q) {
    groups.push_back(mk::conj(mk::eq(R, codePoly(coding::kTr, {mk::numeral(q), I, J})),
                              mk::in(q + 1, mk::var(x(q)), mk::pair(evalI, mk::pair(evalI, evalJ)))));
  }

  auto inY = [&](const ExprPtr& a) { return mk::in(k, Y, mk::pair(a, L)); };
  ExprPtr isAnd = mk::eq(R, codePoly(coding::kAnd, {I, J}));
  ExprPtr isOr = mk::eq(R, codePoly(coding::kOr, {I, J}));
  ExprPtr isImp = mk::eq(R, codePoly(coding::kImp, {I, J}));
  groups.push_back(mk::conj(mk::disjAll({isAnd, isOr, isImp}),
                            mk::conjAll({mk::imp(isAnd, mk::conj(inY(I), inY(J))),
                                         mk::imp(isOr, mk::disj(inY(I), inY(J))),
                                         mk::imp(isImp, mk::imp(inY(I), inY(J)))})));

  ExprPtr varCode = codePoly(coding::kVar, {mk::zero(), I});
  ExprPtr isAll = mk::eq(R, codePoly(coding::kForall, {varCode, J}));
  ExprPtr isEx = mk::eq(R, codePoly(coding::kExists, {varCode, J}));
  ExprPtr step = mk::in(k, Y, mk::pair(J, mk::subst(L, I, mk::var(n))));
  groups.push_back(mk::conj(mk::disj(isAll, isEx),
                            mk::conj(mk::imp(isAll, mk::forall(n, step)), mk::imp(isEx, mk::exists(n, step)))));

  return mk::exists(i, mk::exists(j, mk::disjAll(groups)));
}

ExprPtr makeFTrset(unsigned k) {
  using namespace truthvars;
  ExprPtr a = buildA(k);
  FreshSupply fresh = interfaceSupply(k);
  fresh.reserve(*a);
  Variable p = fresh.next(Sort::num());
  ExprPtr P = mk::var(p), R = mk::var(r()), L = mk::var(l()), M = mk::var(m());
  ExprPtr witness = mk::exists(r(), mk::exists(l(), mk::conjAll({mk::eq(P, mk::pair(R, L)), mk::subform(M, R),
                                                                 mk::ev(R, L), a})));
  return mk::conj(mk::form(mk::numeral(k - 1), M),
                  mk::forall(p, mk::iff(mk::in(k, mk::var(y(k)), P), witness)));
}

ExprPtr makeTrset(unsigned k) {
  using namespace truthvars;
  ExprPtr f = buildFTrset(k);
  FreshSupply fresh = interfaceSupply(k);
  fresh.reserve(*f);
  Variable p = fresh.next(Sort::num()), m2 = fresh.next(Sort::num()), q = fresh.next(Sort::num()),
           n = fresh.next(Sort::num());
  ExprPtr Z = mk::var(z(k)), M = mk::var(m());
  ExprPtr formK = mk::form(mk::numeral(k - 1), M);
  ExprPtr part1 = mk::forall(
      p, mk::imp(mk::in(k + 1, Z, mk::var(p)),
                 mk::exists(m2, mk::exists(q, mk::conj(mk::eq(mk::var(p), mk::pair(mk::var(m2), mk::var(q))),
                                                       mk::form(mk::numeral(k - 1), mk::var(m2)))))));
  ExprPtr slice = mk::forall(n, mk::iff(mk::in(k, mk::var(y(k)), mk::var(n)), mk::in(k + 1, Z, mk::pair(M, mk::var(n)))));
  ExprPtr part2 = mk::forall(m(), mk::imp(formK, mk::exists(y(k), mk::conj(f, slice))));
  return mk::conj(part1, part2);
}

}  // namespace

ExprPtr buildA(unsigned k) {
  if (k == 0) throw DomainError("A_k needs k >= 1");
  static std::map<unsigned, ExprPtr> cache;
  static std::mutex mu;
  return memo(cache, mu, k, [k] { return makeA(k); });
}

ExprPtr buildFTrset(unsigned k) {
  if (k == 0) throw DomainError("FTrset_k needs k >= 1");
  static std::map<unsigned, ExprPtr> cache;
  static std::mutex mu;
  return memo(cache, mu, k, [k] { return makeFTrset(k); });
}

ExprPtr buildTrset(unsigned k) {
  if (k == 0) throw DomainError("Trset_k needs k >= 1");
  static std::map<unsigned, ExprPtr> cache;
  static std::mutex mu;
  return memo(cache, mu, k, [k] { return makeTrset(k); });
}

ExprPtr instantiateFTrset(unsigned k, const ExprPtr& m, const std::vector<Variable>& xs, const Variable& y) {
  if (xs.size() + 1 != k) throw DomainError("FTrset_k takes k-1 truth-set parameters");
  std::vector<std::pair<Variable, ExprPtr>> subs{{truthvars::m(), m}, {truthvars::y(k), mk::var(y)}};
  for (unsigned q = 1; q < k; ++q) subs.emplace_back(truthvars::x(q), mk::var(xs[q - 1]));
  return substituteAll(buildFTrset(k), subs);
}

ExprPtr instantiateTrset(unsigned k, const std::vector<Variable>& xs, const Variable& z) {
  if (xs.size() + 1 != k) throw DomainError("Trset_k takes k-1 truth-set parameters");
  std::vector<std::pair<Variable, ExprPtr>> subs{{truthvars::z(k), mk::var(z)}};
  for (unsigned q = 1; q < k; ++q) subs.emplace_back(truthvars::x(q), mk::var(xs[q - 1]));
  return substituteAll(buildTrset(k), subs);
}

// ---------------------------------------------------------------- tilde

ExprPtr tilde(const Expr& phi) {
  checkWellSorted(phi, Language::PATr);
  std::function<ExprPtr(const Expr&)> go = [&](const Expr& e) -> ExprPtr {
    if (e.kind == Kind::Tr)
      return mk::in(e.level, mk::definedG(e.level, e.kids[0]), pairTerm(e.kids[0], e.kids[1]));
    if (e.isAtom() || e.isTerm() || e.kind == Kind::Bot) return std::make_shared<Expr>(e);
    if (e.isQuantifier()) return mk::withVar(e, e.var, go(*e.kids[0]));
    return rebuildKids(e, go);
  };
  return go(phi);
}

ExprPtr eliminateDefined(const Expr& phi) {
  checkWellSorted(phi, Language::SA, SortCheckOptions{true});
  FreshSupply fresh(allVariables(phi));
  // exists z1 [Trset_1(z1) and exists z2 [Trset_2(z1, z2) and ... inner(z1..zj)]]
  auto chain = [&](unsigned j, const std::function<ExprPtr(const std::vector<Variable>&)>& inner) {
    std::vector<Variable> zs;
    for (unsigned q = 1; q <= j; ++q) zs.push_back(fresh.next(Sort::set(q + 1)));
    ExprPtr body = inner(zs);
    for (unsigned q = j; q >= 1; --q) {
      std::vector<Variable> lower(zs.begin(), zs.begin() + (q - 1));
      body = mk::exists(zs[q - 1], mk::conj(instantiateTrset(q, lower, zs[q - 1]), body));
    }
    return body;
  };
  std::function<ExprPtr(const Expr&)> go = [&](const Expr& e) -> ExprPtr {
    if (e.kind == Kind::In && e.kids[0]->kind == Kind::DefinedG) {
      unsigned k = e.level;
      ExprPtr u = e.kids[0]->kids[0];
      ExprPtr t = e.kids[1];
      return chain(k - 1, [&](const std::vector<Variable>& zs) {
        Variable y = fresh.next(Sort::set(k));
        return mk::exists(y, mk::conj(instantiateFTrset(k, u, zs, y), mk::in(k, mk::var(y), t)));
      });
    }
    if (e.kind == Kind::In && e.kids[0]->kind == Kind::DefinedA) {
      unsigned j = e.kids[0]->level;
      ExprPtr t = e.kids[1];
      return chain(j, [&](const std::vector<Variable>& zs) { return mk::in(j + 1, mk::var(zs.back()), t); });
    }
    if (e.isAtom() || e.isTerm() || e.kind == Kind::Bot) return std::make_shared<Expr>(e);
    if (e.isQuantifier()) return mk::withVar(e, e.var, go(*e.kids[0]));
    return rebuildKids(e, go);
  };
  return go(phi);
}

// ---------------------------------------------------------------- star

Natural braceIndex(unsigned j) {
  if (j == 0) throw DomainError("brace level starts at 1");
  if (j == 1) {
    Variable z{Sort::type(0), 0}, n = numVar(0);
    return coding::encodeAbstraction(z, {n}, *mk::eqOmega(mk::var(z), mk::var(n)));
  }
  Variable z{Sort::type(j - 1), 0}, u{Sort::type(j - 1), 1}, w{Sort::type(0), 0};
  ExprPtr body = mk::exists(w, mk::conj(mk::eqType(j - 1, mk::var(w), mk::var(z)), mk::eqType(j - 1, mk::var(w), mk::var(u))));
  return coding::encodeAbstraction(z, {u}, *body);
}

ETermPtr braceTerm(const ETermPtr& t, unsigned k) {
  ETermPtr r = t;
  for (unsigned j = 1; j <= k; ++j) r = et::app(et::constant(Constant::comp(braceIndex(j))), r);
  return r;
}

ExprPtr buildM(unsigned k, const Variable& x, FreshSupply& fresh) {
  if (k == 0) throw DomainError("M_k needs k >= 1");
  if (x.sort != Sort::type(k)) throw SortError("M_k takes a variable of type k");
  fresh.reserve(x);
  Variable z = fresh.next(Sort::type(k - 1));
  Variable n = fresh.next(Sort::num());
  ExprPtr hit = unfoldEvalToVar(*braceTerm(et::var(n), k - 1), z, fresh);
  return mk::forall(z, mk::imp(mk::mem(k - 1, mk::var(z), mk::var(x)), mk::exists(n, hit)));
}

ExprPtr buildM(unsigned k, const Variable& x) {
  FreshSupply fresh;
  return buildM(k, x, fresh);
}

ExprPtr star(const Expr& phi) {
  checkWellSorted(phi, Language::SA);
  if (hasExtensionSymbols(phi)) throw DomainError("star takes formulas of the pure SA language");
  auto image = [](const Variable& v) {
    return v.sort.kind == SortKind::Set ? Variable{Sort::type(v.sort.level), v.index} : v;
  };
  FreshSupply fresh;
  for (const auto& v : allVariables(phi)) fresh.reserve(image(v));
  std::function<ExprPtr(const Expr&)> go = [&](const Expr& e) -> ExprPtr {
    switch (e.kind) {
      case Kind::In: {
        unsigned k = e.level;
        Variable x = image(e.kids[0]->var);
        Variable w = fresh.next(Sort::type(k - 1));
        ExprPtr link = unfoldEvalToVar(*braceTerm(et::arith(e.kids[1]), k - 1), w, fresh);
        return mk::exists(w, mk::conj(link, mk::mem(k - 1, mk::var(w), mk::var(x))));
      }
      case Kind::Forall:
      case Kind::Exists: {
        if (e.var.sort.kind != SortKind::Set) return mk::withVar(e, e.var, go(*e.kids[0]));
        Variable x = image(e.var);
        ExprPtr guard = buildM(x.sort.level, x, fresh);
        ExprPtr body = go(*e.kids[0]);
        return e.kind == Kind::Forall ? mk::forall(x, mk::imp(guard, body)) : mk::exists(x, mk::conj(guard, body));
      }
      case Kind::And:
      case Kind::Or:
      case Kind::Imp: return rebuildKids(e, go);
      default: return std::make_shared<Expr>(e);
    }
  };
  return go(phi);
}

// ---------------------------------------------------------------- minus

namespace {

std::mutex minusMu;
std::map<Natural, std::optional<Natural>> minusCache;

ExprPtr mapConstants(const Expr& e) {
  if (e.kind == Kind::Const) return mk::constant(minusConst(*e.constant));
  if (e.kids.empty()) return std::make_shared<Expr>(e);
  return rebuildKids(e, mapConstants);
}

}  // namespace

std::optional<Natural> minusIndex(const Natural& n) {
  {
    std::lock_guard lock(minusMu);
    if (auto it = minusCache.find(n); it != minusCache.end()) return it->second;
  }
  std::optional<Natural> out;
  if (auto a = coding::decodeAbstraction(n)) out = coding::encodeAbstraction(a->z, a->params, *minus(*a->body));
  std::lock_guard lock(minusMu);
  return minusCache.emplace(n, out).first->second;
}

Constant minusConst(const Constant& c) {
  if (c.kind != ConstKind::Comp) return c;
  if (auto m = minusIndex(c.index)) return Constant::comp(*m);
  return Constant::of(ConstKind::Zero);
}

ETermPtr minusTerm(const ETermPtr& t) {
  switch (t->kind) {
    case EKind::Const: return t->constant.kind == ConstKind::Comp ? et::constant(minusConst(t->constant)) : t;
    case EKind::App: return et::app(minusTerm(t->fun), minusTerm(t->arg));
    default: return t;
  }
}

ExprPtr minus(const Expr& phi) {
  if (phi.isTerm()) throw DomainError("minus takes a formula");
  switch (phi.kind) {
    case Kind::Bot: return mk::bot();
    case Kind::And: return mk::conj(minus(*phi.kids[0]), minus(*phi.kids[1]));
    case Kind::Imp: return mk::imp(minus(*phi.kids[0]), minus(*phi.kids[1]));
    case Kind::Or: return mk::negneg(mk::disj(minus(*phi.kids[0]), minus(*phi.kids[1])));
    case Kind::Forall: return mk::forall(phi.var, minus(*phi.kids[0]));
    case Kind::Exists: return mk::negneg(mk::exists(phi.var, minus(*phi.kids[0])));
    default: return mk::negneg(mapConstants(phi));
  }
}

bool isNegative(const Expr& phi) {
  switch (phi.kind) {
    case Kind::Bot: return true;
    case Kind::And: return isNegative(*phi.kids[0]) && isNegative(*phi.kids[1]);
    case Kind::Forall: return isNegative(*phi.kids[0]);
    case Kind::Imp: {
      if (const Expr* inner = negated(phi)) {
        if (const Expr* core = negated(*inner)) {
          if (core->isAtom()) return true;
          if (core->kind == Kind::Or) return isNegative(*core->kids[0]) && isNegative(*core->kids[1]);
          if (core->kind == Kind::Exists) return isNegative(*core->kids[0]);
        }
      }
      return isNegative(*phi.kids[0]) && isNegative(*phi.kids[1]);
    }
    default: return false;
  }
}

}  // namespace twb
