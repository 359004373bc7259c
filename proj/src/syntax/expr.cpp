#include "twb/expr.hpp"

#include <sstream>

namespace twb {

std::string_view languageName(Language lang) {
  switch (lang) {
    case Language::BT: return "BT";
    case Language::SA: return "SA";
    case Language::Ar: return "Ar";
    case Language::PATr: return "PATr";
  }
  return "?";
}

std::optional<Language> languageFromName(std::string_view name) {
  if (name == "BT" || name == "BTcl") return Language::BT;
  if (name == "SA") return Language::SA;
  if (name == "Ar") return Language::Ar;
  if (name == "PATr" || name == "PA") return Language::PATr;
  return std::nullopt;
}

std::optional<Natural> parseDecimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text)
    if (c < '0' || c > '9') return std::nullopt;
  return Natural(std::string(text), 10);
}

std::optional<std::uint64_t> toU64(const Natural& n) {
  if (n < 0 || bitLength(n) > 64) return std::nullopt;
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
  return v;
}

bool operator==(const Expr& a, const Expr& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.level != b.level || a.kids.size() != b.kids.size()) return false;
  switch (a.kind) {
    case Kind::Var:
    case Kind::Forall:
    case Kind::Exists:
      if (a.var != b.var) return false;
      break;
    case Kind::Const:
      if (!(*a.constant == *b.constant)) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!(*a.kids[i] == *b.kids[i])) return false;
  return true;
}

bool sameExpr(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::size_t exprSize(const Expr& e) {
  std::size_t n = 1;
  for (const auto& k : e.kids) n += exprSize(*k);
  return n;
}

SyntaxError::SyntaxError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << line << ":" << column << ": " << what;
        return os.str();
      }()),
      line_(line),
      column_(column) {}

namespace mk {
namespace {

ExprPtr node(Kind kind, std::vector<ExprPtr> kids, unsigned level = 0) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->level = level;
  e->kids = std::move(kids);
  return e;
}

}  // namespace

ExprPtr var(Variable v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Var;
  e->var = v;
  return e;
}
ExprPtr num(std::uint64_t index) { return var({Sort::num(), index}); }
ExprPtr op(std::uint64_t index) { return var({Sort::type(0), index}); }
ExprPtr bt(unsigned type, std::uint64_t index) { return var({Sort::type(type), index}); }
ExprPtr set(unsigned sort, std::uint64_t index) { return var({Sort::set(sort), index}); }

ExprPtr constant(Constant c) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Const;
  e->constant = std::move(c);
  return e;
}

ExprPtr zero() {
  static const ExprPtr z = constant(Constant::of(ConstKind::Zero));
  return z;
}
ExprPtr one() {
  static const ExprPtr o = constant(Constant::of(ConstKind::One));
  return o;
}

ExprPtr plus(ExprPtr a, ExprPtr b) { return node(Kind::Plus, {std::move(a), std::move(b)}); }
ExprPtr times(ExprPtr a, ExprPtr b) { return node(Kind::Times, {std::move(a), std::move(b)}); }
ExprPtr pair(ExprPtr a, ExprPtr b) { return node(Kind::Pair, {std::move(a), std::move(b)}); }
ExprPtr eval(ExprPtr i, ExprPtr l) { return node(Kind::Eval, {std::move(i), std::move(l)}); }
ExprPtr subst(ExprPtr l, ExprPtr i, ExprPtr n) {
  return node(Kind::Subst, {std::move(l), std::move(i), std::move(n)});
}
ExprPtr definedG(unsigned k, ExprPtr t) { return node(Kind::DefinedG, {std::move(t)}, k); }
ExprPtr definedA(unsigned k) { return node(Kind::DefinedA, {}, k); }

ExprPtr numeral(std::uint64_t n) {
  if (n == 0) return zero();
  ExprPtr t = one();
  for (std::uint64_t i = 1; i < n; ++i) t = plus(t, one());
  return t;
}

ExprPtr eq(ExprPtr a, ExprPtr b) { return node(Kind::Eq, {std::move(a), std::move(b)}); }
ExprPtr in(unsigned k, ExprPtr container, ExprPtr member) {
  return node(Kind::In, {std::move(container), std::move(member)}, k);
}
ExprPtr tr(unsigned k, ExprPtr a, ExprPtr b) { return node(Kind::Tr, {std::move(a), std::move(b)}, k); }
ExprPtr ap(ExprPtr f, ExprPtr x, ExprPtr y) {
  return node(Kind::Ap, {std::move(f), std::move(x), std::move(y)});
}
ExprPtr eqOmega(ExprPtr x, ExprPtr m) { return node(Kind::EqOmega, {std::move(x), std::move(m)}); }
ExprPtr eqType(unsigned k, ExprPtr x, ExprPtr y) {
  return node(Kind::EqType, {std::move(x), std::move(y)}, k);
}
ExprPtr mem(unsigned k, ExprPtr x, ExprPtr y) { return node(Kind::Mem, {std::move(x), std::move(y)}, k); }
ExprPtr form(ExprPtr k, ExprPtr m) { return node(Kind::Form, {std::move(k), std::move(m)}); }
ExprPtr subform(ExprPtr m, ExprPtr r) { return node(Kind::Subform, {std::move(m), std::move(r)}); }
ExprPtr ev(ExprPtr m, ExprPtr l) { return node(Kind::Ev, {std::move(m), std::move(l)}); }

ExprPtr bot() {
  static const ExprPtr b = node(Kind::Bot, {});
  return b;
}
ExprPtr conj(ExprPtr a, ExprPtr b) { return node(Kind::And, {std::move(a), std::move(b)}); }
ExprPtr disj(ExprPtr a, ExprPtr b) { return node(Kind::Or, {std::move(a), std::move(b)}); }
ExprPtr imp(ExprPtr a, ExprPtr b) { return node(Kind::Imp, {std::move(a), std::move(b)}); }
ExprPtr neg(ExprPtr a) { return imp(std::move(a), bot()); }
ExprPtr negneg(ExprPtr a) { return neg(neg(std::move(a))); }
ExprPtr iff(ExprPtr a, ExprPtr b) { return conj(imp(a, b), imp(b, a)); }

ExprPtr forall(Variable v, ExprPtr body) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Forall;
  e->var = v;
  e->kids = {std::move(body)};
  return e;
}
ExprPtr exists(Variable v, ExprPtr body) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Exists;
  e->var = v;
  e->kids = {std::move(body)};
  return e;
}

ExprPtr conjAll(const std::vector<ExprPtr>& parts) {
  if (parts.empty()) throw DomainError("empty conjunction");
  ExprPtr r = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) r = conj(r, parts[i]);
  return r;
}

ExprPtr disjAll(const std::vector<ExprPtr>& parts) {
  if (parts.empty()) throw DomainError("empty disjunction");
  ExprPtr r = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) r = disj(r, parts[i]);
  return r;
}

ExprPtr withKids(const Expr& e, std::vector<ExprPtr> kids) {
  auto n = std::make_shared<Expr>(e);
  n->kids = std::move(kids);
  return n;
}

ExprPtr withVar(const Expr& e, Variable v, ExprPtr body) {
  auto n = std::make_shared<Expr>(e);
  n->var = v;
  n->kids = {std::move(body)};
  return n;
}

}  // namespace mk

const Expr* negated(const Expr& e) {
  if (e.kind == Kind::Imp && e.kids[1]->kind == Kind::Bot) return e.kids[0].get();
  return nullptr;
}

std::optional<std::pair<ExprPtr, ExprPtr>> asIff(const Expr& e) {
  if (e.kind != Kind::And) return std::nullopt;
  const auto& l = e.kids[0];
  const auto& r = e.kids[1];
  if (l->kind != Kind::Imp || r->kind != Kind::Imp) return std::nullopt;
  if (!sameExpr(l->kids[0], r->kids[1]) || !sameExpr(l->kids[1], r->kids[0])) return std::nullopt;
  return std::make_pair(l->kids[0], l->kids[1]);
}

}  // namespace twb
