#include "twb/evaluator.hpp"

#include <map>

#include "twb/coding.hpp"
#include "twb/syntax.hpp"

namespace twb {

const char* truthName(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

const char* openReasonName(OpenReason r) {
  switch (r) {
    case OpenReason::None: return "none";
    case OpenReason::Bound: return "bound";
    case OpenReason::Budget: return "budget";
  }
  return "none";
}

namespace {

struct BudgetExceeded {};

Truth notT(Truth a) {
  if (a == Truth::Unknown) return a;
  return a == Truth::True ? Truth::False : Truth::True;
}
Truth andT(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::True && b == Truth::True) return Truth::True;
  return Truth::Unknown;
}
Truth orT(Truth a, Truth b) { return notT(andT(notT(a), notT(b))); }

/// Kleene evaluation shared by both front ends. `Env` supplies term values,
/// quantifier rebinding and non-equational atoms.
template <typename Env>
class Kleene {
 public:
  Kleene(std::uint64_t bound, std::uint64_t work) : bound_(bound), work_(work) {}

  Truth eval(const Expr& e, const Env& env, std::optional<Natural>* witness = nullptr) {
    if (++used_ > work_) throw BudgetExceeded{};
    switch (e.kind) {
      case Kind::Bot: return Truth::False;
      case Kind::Eq: return env.value(*e.kids[0]) == env.value(*e.kids[1]) ? Truth::True : Truth::False;
      case Kind::And: {
        Truth a = eval(*e.kids[0], env);
        if (a == Truth::False) return a;
        return andT(a, eval(*e.kids[1], env));
      }
      case Kind::Or: {
        Truth a = eval(*e.kids[0], env);
        if (a == Truth::True) return a;
        return orT(a, eval(*e.kids[1], env));
      }
      case Kind::Imp: {
        Truth a = eval(*e.kids[0], env);
        if (a == Truth::False) return Truth::True;
        return orT(notT(a), eval(*e.kids[1], env));
      }
      case Kind::Forall:
      case Kind::Exists: {
        if (!e.var.sort.isNum()) throw DomainError("set quantifier in an arithmetic formula");
        const bool universal = e.kind == Kind::Forall;
        const Truth decisive = universal ? Truth::False : Truth::True;
        for (std::uint64_t n = 0; n <= bound_; ++n) {
          if (eval(*e.kids[0], env.bind(e.var, n)) == decisive) {
            if (witness) *witness = Natural(static_cast<unsigned long>(n));
            return decisive;
          }
        }
        return Truth::Unknown;
      }
      default: return env.atom(e, *this);
    }
  }

  TruthVerdict run(const Expr& e, const Env& env) {
    TruthVerdict v;
    try {
      v.value = eval(e, env, &v.witness);
      if (v.value == Truth::Unknown) v.reason = OpenReason::Bound;
    } catch (const BudgetExceeded&) {
      v = TruthVerdict{Truth::Unknown, OpenReason::Budget, std::nullopt};
    }
    return v;
  }

  std::uint64_t bound() const { return bound_; }

 private:
  std::uint64_t bound_;
  std::uint64_t work_;
  std::uint64_t used_ = 0;
};

// ---------------------------------------------------------------- arithmetic

class ArithEnv {
 public:
  explicit ArithEnv(const Natural& l) : base_(coding::evaluationLookup(l)) {}

  Natural value(const Expr& t) const {
    return coding::termValue(t, [this](const Variable& v) {
      if (auto it = bound_.find(v); it != bound_.end()) return it->second;
      return base_(v);
    });
  }
  ArithEnv bind(const Variable& v, std::uint64_t n) const {
    ArithEnv out = *this;
    out.bound_[v] = Natural(static_cast<unsigned long>(n));
    return out;
  }
  Truth atom(const Expr& e, Kleene<ArithEnv>&) const {
    throw DomainError(e.kind == Kind::Tr ? "Tr atom in an arithmetic formula" : "not an arithmetic formula");
  }

 private:
  std::function<Natural(const Variable&)> base_;
  std::map<Variable, Natural> bound_;
};

// ---------------------------------------------------------------- truth

class TrEnv;

/// Decoded PATr formulas by code, kept per thread across calls since the
/// quantifier clauses revisit the same codes under many evaluations.
/// Null marks a code that is not a pure PATr formula.
ExprPtr decodeFormula(const Natural& m) {
  thread_local std::map<Natural, ExprPtr> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  if (cache.size() >= 512) cache.clear();
  ExprPtr e;
  if (auto d = coding::tryDecode(m, Language::PATr); d && (*d)->isFormula() && isPureLanguage(**d, Language::PATr))
    e = *d;
  return cache.emplace(m, e).first->second;
}

/// The Tr1 gate, read off the decoded tree: Form(k-1, m) and Ev(m, l).
ExprPtr admitted(unsigned k, const Natural& m, const Natural& l) {
  ExprPtr e = decodeFormula(m);
  if (!e || coding::maxTrIndex(*e) > k - 1) return nullptr;
  std::size_t len = coding::lh(l);
  for (const auto& v : freeVariables(*e))
    if (v.sort.isNum() && v.index > len) return nullptr;
  return e;
}

/// Budget shared by the nested truth evaluations of one trEval call.
struct TrContext {
  std::uint64_t bound;
  std::uint64_t work;

  Truth tr(unsigned k, const Natural& m, const Natural& l);
};

class TrEnv {
 public:
  TrEnv(TrContext& ctx, Natural l) : ctx_(&ctx), l_(std::move(l)), lookup_(coding::evaluationLookup(l_)) {}

  Natural value(const Expr& t) const { return coding::termValue(t, lookup_); }
  TrEnv bind(const Variable& v, std::uint64_t n) const {
    return TrEnv(*ctx_, coding::substEval(l_, Natural(static_cast<unsigned long>(v.index)),
                                          Natural(static_cast<unsigned long>(n))));
  }
  /// Tr_q(t_i, t_j) at a lower level: Tr_q(eval(i, l), eval(j, l)).
  Truth atom(const Expr& e, Kleene<TrEnv>&) const {
    if (e.kind != Kind::Tr) throw DomainError("unexpected atom in a PATr formula");
    return ctx_->tr(e.level, value(*e.kids[0]), value(*e.kids[1]));
  }

 private:
  TrContext* ctx_;
  Natural l_;
  std::function<Natural(const Variable&)> lookup_;
};

Truth TrContext::tr(unsigned k, const Natural& m, const Natural& l) {
  ExprPtr phi = admitted(k, m, l);
  if (!phi) return Truth::False;
  Kleene<TrEnv> engine(bound, work);
  TruthVerdict v = engine.run(*phi, TrEnv(*this, l));
  if (v.reason == OpenReason::Budget) throw BudgetExceeded{};
  return v.value;
}

}  // namespace

Natural evalClosedTerm(const Expr& t, const Natural& l) {
  if (!t.isTerm()) throw DomainError("not a term");
  const std::size_t len = coding::lh(l);
  for (const auto& v : freeVariables(t)) {
    if (!v.sort.isNum()) throw DomainError("set variable in a numeric term");
    if (v.index > len) throw DomainError("parameter n" + std::to_string(v.index) + " is not covered by the evaluation");
  }
  return coding::termValue(t, coding::evaluationLookup(l));
}

TruthVerdict evalArithmetic(const Expr& phi, const Natural& l, std::uint64_t bound, std::uint64_t work) {
  if (!phi.isFormula()) throw DomainError("not a formula");
  Kleene<ArithEnv> engine(bound, work);
  return engine.run(phi, ArithEnv(l));
}

TruthVerdict trEval(unsigned k, const Natural& m, const Natural& l, std::uint64_t bound, std::uint64_t work) {
  if (k == 0) throw DomainError("Tr_k needs k >= 1");
  TrContext ctx{bound, work};
  ExprPtr phi = admitted(k, m, l);
  if (!phi) return TruthVerdict{Truth::False, OpenReason::None, std::nullopt};
  Kleene<TrEnv> engine(bound, work);
  try {
    return engine.run(*phi, TrEnv(ctx, l));
  } catch (const BudgetExceeded&) {
    return TruthVerdict{Truth::Unknown, OpenReason::Budget, std::nullopt};
  }
}

}  // namespace twb
