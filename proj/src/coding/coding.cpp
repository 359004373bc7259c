#include "twb/coding.hpp"

#include <sstream>

#include "twb/syntax.hpp"

namespace twb::coding {

Natural pair(const Natural& m, const Natural& n) {
  Natural s = m + n;
  Natural t = s * (s + 1);
  mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);
  return t + n;
}

std::pair<Natural, Natural> unpair(const Natural& z) {
  if (z < 0) throw DomainError("unpair of a negative number");
  Natural r = 8 * z + 1;
  mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
  Natural w = (r - 1) / 2;
  Natural t = w * (w + 1) / 2;
  Natural n = z - t;
  return {w - n, n};
}

Natural seqCode(const std::vector<Natural>& elems) {
  Natural c = 0;
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) c = pair(*it, c) + 1;
  return c;
}

std::vector<Natural> seqDecode(const Natural& code) {
  std::vector<Natural> out;
  Natural c = code;
  while (c > 0) {
    auto [a, rest] = unpair(c - 1);
    out.push_back(std::move(a));
    c = std::move(rest);
  }
  return out;
}

std::size_t lh(const Natural& code) {
  std::size_t n = 0;
  Natural c = code;
  while (c > 0) {
    c = unpair(c - 1).second;
    ++n;
  }
  return n;
}

Natural elem(const Natural& code, std::size_t i) {
  Natural c = code;
  for (std::size_t k = 1; c > 0; ++k) {
    auto [a, rest] = unpair(c - 1);
    if (k == i) return a;
    c = std::move(rest);
  }
  throw DomainError("sequence element " + std::to_string(i) + " out of range");
}

const std::vector<TagInfo>& tagTable() {
  static const std::vector<TagInfo> table = {
      {kBot, "bot", ""},
      {kVar, "var", "sortcode index"},
      {kZero, "zero", ""},
      {kOne, "one", ""},
      {kPlus, "plus", "t u"},
      {kTimes, "times", "t u"},
      {kK, "kc", ""},
      {kS, "sc", ""},
      {kD, "dc", ""},
      {kP, "pc", ""},
      {kP1, "p1c", ""},
      {kP2, "p2c", ""},
      {kComp, "comp", "n"},
      {kEq, "eq", "t u"},
      {kIn, "in", "k container member"},
      {kTr, "tr", "k t u"},
      {kAp, "ap", "f x y"},
      {kEqOmega, "eqow", "x m"},
      {kEqType, "eqok", "k x Y"},
      {kMem, "mem", "k X Y"},
      {kAnd, "and", "A B"},
      {kOr, "or", "A B"},
      {kImp, "imp", "A B"},
      {kForall, "forall", "var A"},
      {kExists, "exists", "var A"},
      {kApp, "app", "t u"},
      {kAbstraction, "abstraction", "Z A X1 ... Xn"},
      {kPair, "pair", "t u"},
      {kEval, "eval", "i l"},
      {kSubst, "subst", "l i n"},
      {kForm, "form", "k m"},
      {kSubform, "subform", "m r"},
      {kEv, "ev", "m l"},
      {kDefinedG, "g", "k t"},
      {kDefinedA, "a", "k"},
      {kProof, "proof", "line1 ... linen"},
      {kLine, "line", "A justification"},
  };
  return table;
}

namespace {

bool tagAllowed(unsigned tag, Language lang, bool allowDefined) {
  switch (tag) {
    case kBot: case kVar: case kZero: case kOne: case kPlus: case kTimes: case kEq:
    case kAnd: case kOr: case kImp: case kForall: case kExists:
      return true;
    case kK: case kS: case kD: case kP: case kP1: case kP2: case kComp:
    case kAp: case kEqOmega: case kEqType: case kMem:
      return lang == Language::BT;
    case kIn: return lang == Language::SA || lang == Language::Ar;
    case kTr: return lang == Language::PATr;
    case kPair: case kEval: case kSubst: case kForm: case kSubform: case kEv:
      return lang != Language::BT;
    case kDefinedG: case kDefinedA: return lang == Language::SA && allowDefined;
    default: return false;
  }
}

}  // namespace

std::string tagTableText(Language lang) {
  std::ostringstream os;
  for (const auto& t : tagTable()) {
    bool shown = tagAllowed(t.tag, lang, true) || (lang == Language::BT && (t.tag == kApp || t.tag == kAbstraction)) ||
                 t.tag == kProof || t.tag == kLine;
    if (!shown) continue;
    os << t.tag << ' ' << t.name;
    if (*t.children) os << ' ' << t.children;
    os << '\n';
  }
  return os.str();
}

unsigned sortCode(const Sort& s) { return s.isNum() ? 0 : s.level + 1; }

Natural encodeVariable(const Variable& v) {
  return pair(kVar, seqCode({Natural(sortCode(v.sort)), fromU64(v.index)}));
}

namespace {

unsigned constTag(const Constant& c) {
  switch (c.kind) {
    case ConstKind::Zero: return kZero;
    case ConstKind::One: return kOne;
    case ConstKind::K: return kK;
    case ConstKind::S: return kS;
    case ConstKind::D: return kD;
    case ConstKind::P: return kP;
    case ConstKind::P1: return kP1;
    case ConstKind::P2: return kP2;
    case ConstKind::Comp: return kComp;
  }
  return kZero;
}

Natural node(unsigned tag, const std::vector<Natural>& kids) { return pair(tag, seqCode(kids)); }

}  // namespace

Natural encode(const Expr& e) {
  auto k = [&](std::size_t i) { return encode(*e.kids[i]); };
  const Natural lv = e.level;
  switch (e.kind) {
    case Kind::Var: return encodeVariable(e.var);
    case Kind::Const:
      if (e.constant->kind == ConstKind::Comp) return node(kComp, {e.constant->index});
      return node(constTag(*e.constant), {});
    case Kind::Plus: return node(kPlus, {k(0), k(1)});
    case Kind::Times: return node(kTimes, {k(0), k(1)});
    case Kind::Pair: return node(kPair, {k(0), k(1)});
    case Kind::Eval: return node(kEval, {k(0), k(1)});
    case Kind::Subst: return node(kSubst, {k(0), k(1), k(2)});
    case Kind::DefinedG: return node(kDefinedG, {lv, k(0)});
    case Kind::DefinedA: return node(kDefinedA, {lv});
    case Kind::Eq: return node(kEq, {k(0), k(1)});
    case Kind::In: return node(kIn, {lv, k(0), k(1)});
    case Kind::Tr: return node(kTr, {lv, k(0), k(1)});
    case Kind::Ap: return node(kAp, {k(0), k(1), k(2)});
    case Kind::EqOmega: return node(kEqOmega, {k(0), k(1)});
    case Kind::EqType: return node(kEqType, {lv, k(0), k(1)});
    case Kind::Mem: return node(kMem, {lv, k(0), k(1)});
    case Kind::Form: return node(kForm, {k(0), k(1)});
    case Kind::Subform: return node(kSubform, {k(0), k(1)});
    case Kind::Ev: return node(kEv, {k(0), k(1)});
    case Kind::Bot: return node(kBot, {});
    case Kind::And: return node(kAnd, {k(0), k(1)});
    case Kind::Or: return node(kOr, {k(0), k(1)});
    case Kind::Imp: return node(kImp, {k(0), k(1)});
    case Kind::Forall: return node(kForall, {encodeVariable(e.var), k(0)});
    case Kind::Exists: return node(kExists, {encodeVariable(e.var), k(0)});
  }
  throw DomainError("unencodable expression");
}

Natural encode(const ETerm& t) {
  switch (t.kind) {
    case EKind::Const:
      if (t.constant.kind == ConstKind::Comp) return node(kComp, {t.constant.index});
      return node(constTag(t.constant), {});
    case EKind::Var: return encodeVariable(t.var);
    case EKind::Arith: return encode(*t.arith);
    case EKind::App: return node(kApp, {encode(*t.fun), encode(*t.arg)});
  }
  throw DomainError("unencodable term");
}

Natural encodeAbstraction(const Variable& z, const std::vector<Variable>& params, const Expr& body) {
  std::vector<Natural> kids{encodeVariable(z), encode(body)};
  for (const auto& p : params) kids.push_back(encodeVariable(p));
  return node(kAbstraction, kids);
}

// ---------------------------------------------------------------- decoding

namespace {

struct Decoder {
  Language lang;
  DecodeOptions opts;

  [[noreturn]] static void fail(const std::string& why) { throw DecodeError(why); }

  static std::vector<Natural> kids(const Natural& s, std::size_t n) {
    auto v = seqDecode(s);
    if (v.size() != n) fail("wrong number of children");
    return v;
  }

  static unsigned level(const Natural& n) {
    if (n > 4096) fail("level out of range");
    return static_cast<unsigned>(n.get_ui());
  }

  Variable variable(const Natural& code) const {
    auto [tag, s] = unpair(code);
    if (tag != kVar) fail("expected a variable code");
    auto v = kids(s, 2);
    auto idx = toU64(v[1]);
    if (!idx) fail("variable index out of range");
    if (v[0] > 4097) fail("sort code out of range");
    unsigned sc = static_cast<unsigned>(v[0].get_ui());
    if (sc == 0) return {Sort::num(), *idx};
    switch (lang) {
      case Language::BT: return {Sort::type(sc - 1), *idx};
      case Language::SA:
        if (sc < 2) fail("no set sort 0 in SA");
        return {Sort::set(sc - 1), *idx};
      case Language::Ar:
        if (sc != 1) fail("Ar has a single set sort");
        return {Sort::set(0), *idx};
      case Language::PATr: fail("PATr has numeric variables only");
    }
    fail("bad sort");
  }

  ExprPtr expr(const Natural& code) const {
    auto [tagN, s] = unpair(code);
    if (tagN >= kTagCount) fail("unknown tag");
    unsigned tag = static_cast<unsigned>(tagN.get_ui());
    if (!tagAllowed(tag, lang, opts.allowDefined)) fail("tag not in the language");
    auto sub = [&](const Natural& c) { return expr(c); };
    switch (tag) {
      case kBot: kids(s, 0); return mk::bot();
      case kVar: return mk::var(variable(code));
      case kZero: kids(s, 0); return mk::zero();
      case kOne: kids(s, 0); return mk::one();
      case kK: case kS: case kD: case kP: case kP1: case kP2: {
        kids(s, 0);
        static const ConstKind ks[] = {ConstKind::K, ConstKind::S, ConstKind::D,
                                       ConstKind::P, ConstKind::P1, ConstKind::P2};
        return mk::constant(Constant::of(ks[tag - kK]));
      }
      case kComp: return mk::constant(Constant::comp(kids(s, 1)[0]));
      case kPlus: { auto v = kids(s, 2); return mk::plus(sub(v[0]), sub(v[1])); }
      case kTimes: { auto v = kids(s, 2); return mk::times(sub(v[0]), sub(v[1])); }
      case kPair: { auto v = kids(s, 2); return mk::pair(sub(v[0]), sub(v[1])); }
      case kEval: { auto v = kids(s, 2); return mk::eval(sub(v[0]), sub(v[1])); }
      case kSubst: { auto v = kids(s, 3); return mk::subst(sub(v[0]), sub(v[1]), sub(v[2])); }
      case kDefinedG: { auto v = kids(s, 2); return mk::definedG(level(v[0]), sub(v[1])); }
      case kDefinedA: { auto v = kids(s, 1); return mk::definedA(level(v[0])); }
      case kEq: { auto v = kids(s, 2); return mk::eq(sub(v[0]), sub(v[1])); }
      case kIn: { auto v = kids(s, 3); return mk::in(level(v[0]), sub(v[1]), sub(v[2])); }
      case kTr: { auto v = kids(s, 3); return mk::tr(level(v[0]), sub(v[1]), sub(v[2])); }
      case kAp: { auto v = kids(s, 3); return mk::ap(sub(v[0]), sub(v[1]), sub(v[2])); }
      case kEqOmega: { auto v = kids(s, 2); return mk::eqOmega(sub(v[0]), sub(v[1])); }
      case kEqType: { auto v = kids(s, 3); return mk::eqType(level(v[0]), sub(v[1]), sub(v[2])); }
      case kMem: { auto v = kids(s, 3); return mk::mem(level(v[0]), sub(v[1]), sub(v[2])); }
      case kForm: { auto v = kids(s, 2); return mk::form(sub(v[0]), sub(v[1])); }
      case kSubform: { auto v = kids(s, 2); return mk::subform(sub(v[0]), sub(v[1])); }
      case kEv: { auto v = kids(s, 2); return mk::ev(sub(v[0]), sub(v[1])); }
      case kAnd: { auto v = kids(s, 2); return mk::conj(sub(v[0]), sub(v[1])); }
      case kOr: { auto v = kids(s, 2); return mk::disj(sub(v[0]), sub(v[1])); }
      case kImp: { auto v = kids(s, 2); return mk::imp(sub(v[0]), sub(v[1])); }
      case kForall: { auto v = kids(s, 2); return mk::forall(variable(v[0]), sub(v[1])); }
      case kExists: { auto v = kids(s, 2); return mk::exists(variable(v[0]), sub(v[1])); }
      default: fail("tag not decodable as an expression");
    }
  }

  ETermPtr term(const Natural& code) const {
    auto [tagN, s] = unpair(code);
    if (tagN == kApp) {
      auto v = kids(s, 2);
      return et::app(term(v[0]), term(v[1]));
    }
    auto e = expr(code);
    if (e->kind == Kind::Var) {
      if (e->var.sort.kind != SortKind::Type && !e->var.sort.isNum()) fail("not a BT variable");
      return et::var(e->var);
    }
    if (e->kind == Kind::Const && e->constant->kind != ConstKind::One) return et::constant(*e->constant);
    if (e->isTerm() && isWellSorted(*e, Language::BT)) return et::arith(e);
    fail("not an external term code");
  }
};

}  // namespace

ExprPtr decode(const Natural& code, Language lang, DecodeOptions opts) {
  if (code < 0) throw DecodeError("negative code");
  Decoder d{lang, opts};
  ExprPtr e = d.expr(code);
  try {
    checkWellSorted(*e, lang, SortCheckOptions{opts.allowDefined});
  } catch (const SortError& err) {
    throw DecodeError(std::string("ill-sorted: ") + err.what());
  }
  return e;
}

std::optional<ExprPtr> tryDecode(const Natural& code, Language lang, DecodeOptions opts) {
  try {
    return decode(code, lang, opts);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

ETermPtr decodeTerm(const Natural& code) {
  Decoder d{Language::BT, {}};
  return d.term(code);
}

std::optional<Abstraction> decodeAbstraction(const Natural& code) {
  try {
    auto [tag, s] = unpair(code);
    if (tag != kAbstraction) return std::nullopt;
    auto v = seqDecode(s);
    if (v.size() < 2) return std::nullopt;
    Decoder d{Language::BT, {}};
    Abstraction a;
    a.z = d.variable(v[0]);
    a.body = decode(v[1], Language::BT);
    if (!a.body->isFormula()) return std::nullopt;
    for (std::size_t i = 2; i < v.size(); ++i) a.params.push_back(d.variable(v[i]));
    return a;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------- predicates

unsigned maxTrIndex(const Expr& e) {
  unsigned m = e.kind == Kind::Tr ? e.level : 0;
  for (const auto& k : e.kids) m = std::max(m, maxTrIndex(*k));
  return m;
}

bool formP(const Natural& k, const Natural& m) {
  auto e = tryDecode(m, Language::PATr);
  if (!e || !(*e)->isFormula() || !isPureLanguage(**e, Language::PATr)) return false;
  return Natural(maxTrIndex(**e)) <= k;
}

namespace {

bool scanSubformulas(const Natural& m, const Natural& r) {
  if (m == r) return true;
  auto [tag, s] = unpair(m);
  if (tag == kAnd || tag == kOr || tag == kImp) {
    auto v = seqDecode(s);
    return scanSubformulas(v[0], r) || scanSubformulas(v[1], r);
  }
  if (tag == kForall || tag == kExists) return scanSubformulas(seqDecode(s)[1], r);
  return false;
}

std::optional<std::uint64_t> maxParam(const Expr& e) {
  std::optional<std::uint64_t> best;
  for (const auto& v : freeVariables(e))
    if (v.sort.isNum()) best = best ? std::max(*best, v.index) : v.index;
  return best;
}

}  // namespace

bool subformP(const Natural& m, const Natural& r) {
  auto e = tryDecode(m, Language::PATr);
  if (!e || !(*e)->isFormula()) return false;
  return scanSubformulas(m, r);
}

bool paramP(const Natural& m, const Natural& i) {
  auto e = tryDecode(m, Language::PATr);
  if (!e) return false;
  auto idx = toU64(i);
  return idx && occursFree(**e, Variable{Sort::num(), *idx});
}

bool evP(const Natural& m, const Natural& l) {
  auto e = tryDecode(m, Language::PATr);
  if (!e) return true;
  auto top = maxParam(**e);
  // every parameter index is below its own variable code, hence <= m
  return !top || lh(l) >= *top;
}

std::function<Natural(const Variable&)> evaluationLookup(const Natural& l) {
  auto values = std::make_shared<std::vector<Natural>>(seqDecode(l));
  return [values](const Variable& v) -> Natural {
    if (!v.sort.isNum()) throw DomainError("set variable in a numeric term");
    if (v.index == 0 || v.index > values->size()) return 0;
    return (*values)[v.index - 1];
  };
}

Natural termValue(const Expr& t, const std::function<Natural(const Variable&)>& lookup) {
  switch (t.kind) {
    case Kind::Var: return lookup(t.var);
    case Kind::Const:
      if (t.constant->kind == ConstKind::Zero) return 0;
      if (t.constant->kind == ConstKind::One) return 1;
      throw DomainError("operation constant in a numeric term");
    case Kind::Plus: return termValue(*t.kids[0], lookup) + termValue(*t.kids[1], lookup);
    case Kind::Times: return termValue(*t.kids[0], lookup) * termValue(*t.kids[1], lookup);
    case Kind::Pair: return pair(termValue(*t.kids[0], lookup), termValue(*t.kids[1], lookup));
    case Kind::Eval: return evalTotal(termValue(*t.kids[0], lookup), termValue(*t.kids[1], lookup));
    case Kind::Subst:
      return substEval(termValue(*t.kids[0], lookup), termValue(*t.kids[1], lookup), termValue(*t.kids[2], lookup));
    default: throw DomainError("not a numeric term");
  }
}

Natural evalTermCode(const Natural& i, const Natural& l) {
  auto e = tryDecode(i, Language::PATr);
  if (!e || !(*e)->isTerm() || !isPureLanguage(**e, Language::PATr))
    throw DomainError("not the code of a term: " + toDecimal(i));
  if (!evP(i, l)) throw DomainError("the evaluation does not cover the term's parameters");
  return termValue(**e, evaluationLookup(l));
}

Natural evalTotal(const Natural& i, const Natural& l) {
  auto e = tryDecode(i, Language::PATr);
  if (!e || !(*e)->isTerm() || !isPureLanguage(**e, Language::PATr)) return 0;
  return termValue(**e, evaluationLookup(l));
}

Natural substEval(const Natural& l, const Natural& i, const Natural& n) {
  if (i == 0) return l;
  if (i > 1000000) throw DomainError("evaluation index too large");
  auto v = seqDecode(l);
  std::size_t idx = i.get_ui();
  if (v.size() < idx) v.resize(idx, Natural(0));
  v[idx - 1] = n;
  return seqCode(v);
}

}  // namespace twb::coding
