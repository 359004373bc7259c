#include "twb/combinators.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "twb/coding.hpp"

namespace twb {

std::uint64_t defaultBudget() {
  if (const char* env = std::getenv("THEORY_WORKBENCH_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

namespace {

ETermPtr rebuild(ETermPtr head, const std::vector<ETermPtr>& args, std::size_t from) {
  for (std::size_t i = from; i < args.size(); ++i) head = et::app(std::move(head), args[i]);
  return head;
}

ETermPtr contract(const ETermPtr& t) {
  std::vector<ETermPtr> args;
  ETermPtr cur = t;
  while (cur->kind == EKind::App) {
    args.push_back(cur->arg);
    cur = cur->fun;
  }
  std::reverse(args.begin(), args.end());
  const std::size_t n = args.size();

  if (cur->kind == EKind::Const) {
    switch (cur->constant.kind) {
      case ConstKind::K:
        if (n >= 2) return rebuild(args[0], args, 2);
        break;
      case ConstKind::S:
        if (n >= 3) return rebuild(et::app(et::app(args[0], args[2]), et::app(args[1], args[2])), args, 3);
        break;
      case ConstKind::P1:
      case ConstKind::P2:
        if (n >= 1 && args[0]->head->isConst(ConstKind::P) && args[0]->nargs == 2) {
          const auto& pr = args[0];
          return rebuild(cur->constant.kind == ConstKind::P1 ? pr->fun->arg : pr->arg, args, 1);
        }
        break;
      case ConstKind::D:
        if (n >= 4) {
          if (args[2]->numeral && args[3]->numeral)
            return rebuild(*args[2]->numeral == *args[3]->numeral ? args[0] : args[1], args, 4);
          for (std::size_t i : {std::size_t{2}, std::size_t{3}}) {
            if (!args[i]->numeral && !args[i]->normal) {
              args[i] = contract(args[i]);
              return rebuild(cur, args, 0);
            }
          }
        }
        break;
      default: break;
    }
  }
  for (auto& a : args) {
    if (!a->normal) {
      a = contract(a);
      return rebuild(cur, args, 0);
    }
  }
  throw DomainError("contract called on a normal form");
}

}  // namespace

std::optional<ETermPtr> reduceStep(const ETermPtr& t) {
  if (t->normal) return std::nullopt;
  return contract(t);
}

ReductionResult reduce(const ETermPtr& t, std::uint64_t budget, const TraceFn& trace) {
  ReductionResult r;
  r.last = t;
  if (trace) trace(*t);
  while (!r.last->normal) {
    if (r.steps >= budget || r.last->size > kMaxTermSize) return r;
    r.last = contract(r.last);
    ++r.steps;
    if (trace) trace(*r.last);
  }
  r.normalForm = r.last;
  return r;
}

ETermPtr lambdaAbstract(const Variable& x, const ETermPtr& t) {
  if (!x.sort.isOperation()) throw DomainError("lambda abstraction needs a type-0 variable");
  if (!occursIn(*t, x)) return et::app(et::of(ConstKind::K), t);
  if (t->kind == EKind::Var) return et::apps(et::of(ConstKind::S), {et::of(ConstKind::K), et::of(ConstKind::K)});
  if (t->kind == EKind::App)
    return et::apps(et::of(ConstKind::S), {lambdaAbstract(x, t->fun), lambdaAbstract(x, t->arg)});
  throw DomainError("cannot abstract an operation variable out of an arithmetic term");
}

Natural emptySetIndex(unsigned j) {
  if (j == 0) throw DomainError("empty-set constant needs a type >= 1");
  return coding::encodeAbstraction(Variable{Sort::type(j - 1), 0}, {}, *mk::bot());
}

ETermPtr closeTerm(const ETermPtr& t) {
  ETermPtr r = t;
  for (const auto& v : freeVariables(*t)) {
    ETermPtr c;
    if (v.sort.isNum()) c = et::of(ConstKind::Zero);
    else if (v.sort.isOperation()) c = et::of(ConstKind::K);
    else if (v.sort.kind == SortKind::Type) c = et::constant(Constant::comp(emptySetIndex(v.sort.level)));
    else throw DomainError("set variable of a foreign language in an external term");
    r = substituteTerm(r, v, c);
  }
  return r;
}

const char* disjunctName(Disjunct d) {
  switch (d) {
    case Disjunct::Left: return "left";
    case Disjunct::Right: return "right";
    case Disjunct::Unknown: return "unknown";
  }
  return "unknown";
}

Extraction extractDisjunct(const ETermPtr& realizer, std::uint64_t budget) {
  Extraction x;
  x.selector = et::app(et::of(ConstKind::P1), closeTerm(realizer));
  x.reduction = reduce(x.selector, budget);
  if (x.reduction.normalForm) {
    if (auto m = x.reduction.normalForm->numeral) x.side = *m == 0 ? Disjunct::Left : Disjunct::Right;
  }
  return x;
}

ETermPtr compileSuccessor() {
  Variable x{Sort::type(0), 0};
  return lambdaAbstract(x, et::apps(et::of(ConstKind::P), {et::var(x), et::of(ConstKind::Zero)}));
}

ETermPtr compileConstFn(std::uint64_t m) { return et::app(et::of(ConstKind::K), et::numeral(m)); }

}  // namespace twb
