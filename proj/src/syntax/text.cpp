#include "twb/text.hpp"

#include <array>
#include <sstream>

namespace twb {

// ---------------------------------------------------------------- reader

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool atEnd() {
    skipSpace();
    return pos_ >= text_.size();
  }

  Sexp read() {
    skipSpace();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", line_, col_);
    Sexp s;
    s.line = line_;
    s.column = col_;
    char c = text_[pos_];
    if (c == ')') throw SyntaxError("unexpected ')'", line_, col_);
    if (c == '(') {
      advance();
      s.isList = true;
      for (;;) {
        skipSpace();
        if (pos_ >= text_.size()) throw SyntaxError("unclosed '('", s.line, s.column);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        s.items.push_back(read());
      }
      return s;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !isDelimiter(text_[pos_])) advance();
    s.atom = std::string(text_.substr(start, pos_ - start));
    return s;
  }

 private:
  static bool isDelimiter(char c) {
    return c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::vector<Sexp> readSexps(std::string_view text) {
  Reader r(text);
  std::vector<Sexp> out;
  while (!r.atEnd()) out.push_back(r.read());
  return out;
}

Sexp readSexp(std::string_view text) {
  Reader r(text);
  if (r.atEnd()) throw SyntaxError("empty input", 1, 1);
  Sexp s = r.read();
  if (!r.atEnd()) {
    Sexp extra = r.read();
    throw SyntaxError("trailing input after expression", extra.line, extra.column);
  }
  return s;
}

std::string printSexp(const Sexp& s) {
  if (!s.isList) return s.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i) out += ' ';
    out += printSexp(s.items[i]);
  }
  return out + ")";
}

void syntaxError(const Sexp& at, const std::string& what) {
  throw SyntaxError(what, at.line, at.column);
}

Natural expectNatural(const Sexp& s) {
  if (s.isList) syntaxError(s, "expected a natural number");
  auto n = parseDecimal(s.atom);
  if (!n) syntaxError(s, "expected a natural number, got '" + s.atom + "'");
  return *n;
}

std::uint64_t expectIndex(const Sexp& s) {
  auto v = toU64(expectNatural(s));
  if (!v) syntaxError(s, "index out of range");
  return *v;
}

unsigned expectLevel(const Sexp& s) {
  auto v = expectIndex(s);
  if (v > 4096) syntaxError(s, "level out of range");
  return static_cast<unsigned>(v);
}

// ---------------------------------------------------------------- names

namespace {

constexpr std::array<std::string_view, 18> kReserved = {
    "k", "s", "d", "p", "p1", "p2", "kc", "sc", "dc", "pc", "p1c", "p2c", "zero", "one", "bot", "0", "1", "n"};

int digitOf(char c) {
  if (c >= 'a' && c <= 'z') return c - 'a' + 1;
  if (c >= '0' && c <= '9') return c - '0' + 27;
  return -1;
}

char charOf(int d) { return d <= 26 ? static_cast<char>('a' + d - 1) : static_cast<char>('0' + d - 27); }

}  // namespace

bool isReservedWord(std::string_view s) {
  for (auto r : kReserved)
    if (r == s) return true;
  return false;
}

std::optional<std::uint64_t> nameIndex(std::string_view name) {
  if (name.empty() || name.size() > 8 || name[0] < 'a' || name[0] > 'z') return std::nullopt;
  if (isReservedWord(name)) return std::nullopt;
  std::uint64_t code = 0;
  for (char c : name) {
    int d = digitOf(c);
    if (d < 0) return std::nullopt;
    code = code * 37 + static_cast<std::uint64_t>(d);
  }
  return kNamedBase + code;
}

std::optional<std::string> indexName(std::uint64_t index) {
  if (index < kNamedBase) return std::nullopt;
  std::uint64_t code = index - kNamedBase;
  std::string s;
  while (code > 0) {
    auto d = static_cast<int>(code % 37);
    if (d == 0) return std::nullopt;
    s.insert(s.begin(), charOf(d));
    code /= 37;
  }
  if (nameIndex(s) != index) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------- parser

namespace {

std::optional<Constant> constantFromAtom(std::string_view a) {
  if (a == "zero" || a == "0") return Constant::of(ConstKind::Zero);
  if (a == "one" || a == "1") return Constant::of(ConstKind::One);
  if (a == "kc" || a == "k") return Constant::of(ConstKind::K);
  if (a == "sc" || a == "s") return Constant::of(ConstKind::S);
  if (a == "dc" || a == "d") return Constant::of(ConstKind::D);
  if (a == "pc" || a == "p") return Constant::of(ConstKind::P);
  if (a == "p1c" || a == "p1") return Constant::of(ConstKind::P1);
  if (a == "p2c" || a == "p2") return Constant::of(ConstKind::P2);
  return std::nullopt;
}

void arity(const Sexp& s, std::size_t n) {
  if (s.items.size() != n + 1) {
    std::ostringstream os;
    os << "'" << s.head() << "' takes " << n << " argument" << (n == 1 ? "" : "s");
    syntaxError(s, os.str());
  }
}

ExprPtr numeralTerm(const Sexp& s) {
  arity(s, 1);
  auto m = toU64(expectNatural(s.items[1]));
  if (!m || *m > 1000000) syntaxError(s.items[1], "numeral too large");
  return mk::numeral(*m);
}

}  // namespace

std::optional<Variable> variableFromSexp(const Sexp& s) {
  if (!s.isList) {
    if (auto idx = nameIndex(s.atom)) return Variable{Sort::type(0), *idx};
    return std::nullopt;
  }
  auto h = s.head();
  if (h == "v" || h == "num") {
    arity(s, 1);
    return Variable{Sort::num(), expectIndex(s.items[1])};
  }
  if (h == "op") {
    arity(s, 1);
    return Variable{Sort::type(0), expectIndex(s.items[1])};
  }
  if (h == "bt") {
    arity(s, 2);
    return Variable{Sort::type(expectLevel(s.items[1])), expectIndex(s.items[2])};
  }
  if (h == "set") {
    if (s.items.size() == 2) return Variable{Sort::set(0), expectIndex(s.items[1])};
    arity(s, 2);
    return Variable{Sort::set(expectLevel(s.items[1])), expectIndex(s.items[2])};
  }
  return std::nullopt;
}

ExprPtr exprFromSexp(const Sexp& s, Language lang) {
  if (auto v = variableFromSexp(s)) return mk::var(*v);
  if (!s.isList) {
    if (auto c = constantFromAtom(s.atom)) return mk::constant(*c);
    syntaxError(s, "unknown symbol '" + s.atom + "'");
  }
  if (s.items.empty()) syntaxError(s, "empty list");
  auto h = s.head();
  if (h.empty()) syntaxError(s, "expected a keyword at the head of the list");
  auto kid = [&](std::size_t i) { return exprFromSexp(s.items[i], lang); };
  auto binary = [&](auto f) {
    arity(s, 2);
    return f(kid(1), kid(2));
  };

  if (h == "comp") {
    arity(s, 1);
    return mk::constant(Constant::comp(expectNatural(s.items[1])));
  }
  if (h == "n") return numeralTerm(s);
  if (h == "plus") return binary(mk::plus);
  if (h == "times") return binary(mk::times);
  if (h == "pair") return binary(mk::pair);
  if (h == "eval") return binary(mk::eval);
  if (h == "subst") {
    arity(s, 3);
    return mk::subst(kid(1), kid(2), kid(3));
  }
  if (h == "g") {
    arity(s, 2);
    return mk::definedG(expectLevel(s.items[1]), kid(2));
  }
  if (h == "a") {
    arity(s, 1);
    return mk::definedA(expectLevel(s.items[1]));
  }

  if (h == "bot") {
    arity(s, 0);
    return mk::bot();
  }
  if (h == "and") return binary(mk::conj);
  if (h == "or") return binary(mk::disj);
  if (h == "imp") return binary(mk::imp);
  if (h == "iff") return binary(mk::iff);
  if (h == "not") {
    arity(s, 1);
    return mk::neg(kid(1));
  }
  if (h == "forall" || h == "exists") {
    arity(s, 2);
    auto v = variableFromSexp(s.items[1]);
    if (!v) syntaxError(s.items[1], "expected a variable after the quantifier");
    return h == "forall" ? mk::forall(*v, kid(2)) : mk::exists(*v, kid(2));
  }

  if (h == "eq") return binary(mk::eq);
  if (h == "in") {
    if (s.items.size() == 3) return mk::in(0, kid(1), kid(2));
    arity(s, 3);
    return mk::in(expectLevel(s.items[1]), kid(2), kid(3));
  }
  if (h == "tr") {
    arity(s, 3);
    return mk::tr(expectLevel(s.items[1]), kid(2), kid(3));
  }
  if (h == "ap") {
    arity(s, 3);
    return mk::ap(kid(1), kid(2), kid(3));
  }
  if (h == "eqow") return binary(mk::eqOmega);
  if (h == "eqok") {
    arity(s, 3);
    return mk::eqType(expectLevel(s.items[1]), kid(2), kid(3));
  }
  if (h == "mem") {
    arity(s, 3);
    return mk::mem(expectLevel(s.items[1]), kid(2), kid(3));
  }
  if (h == "form") return binary(mk::form);
  if (h == "subform") return binary(mk::subform);
  if (h == "ev") return binary(mk::ev);
  syntaxError(s, "unknown keyword '" + std::string(h) + "'");
}

ExprPtr parseExpr(std::string_view text, Language lang, SortCheckOptions opts) {
  auto e = exprFromSexp(readSexp(text), lang);
  checkWellSorted(*e, lang, opts);
  return e;
}

// ---------------------------------------------------------------- printer

std::optional<std::uint64_t> arithmeticNumeralValue(const Expr& t) {
  std::uint64_t n = 0;
  const Expr* cur = &t;
  while (cur->kind == Kind::Plus) {
    const Expr& r = *cur->kids[1];
    if (r.kind != Kind::Const || r.constant->kind != ConstKind::One) return std::nullopt;
    ++n;
    cur = cur->kids[0].get();
  }
  if (cur->kind != Kind::Const) return std::nullopt;
  if (cur->constant->kind == ConstKind::One) return n + 1;
  if (cur->constant->kind == ConstKind::Zero && n == 0) return 0;
  return std::nullopt;
}

std::string printVariable(const Variable& v) {
  std::ostringstream os;
  switch (v.sort.kind) {
    case SortKind::Num: os << "(v " << v.index << ")"; break;
    case SortKind::Type:
      if (v.sort.level == 0) {
        if (auto name = indexName(v.index)) return *name;
        os << "(op " << v.index << ")";
      } else {
        os << "(bt " << v.sort.level << " " << v.index << ")";
      }
      break;
    case SortKind::Set:
      if (v.sort.level == 0)
        os << "(set " << v.index << ")";
      else
        os << "(set " << v.sort.level << " " << v.index << ")";
      break;
  }
  return os.str();
}

std::string printConstant(const Constant& c) {
  switch (c.kind) {
    case ConstKind::Zero: return "zero";
    case ConstKind::One: return "one";
    case ConstKind::K: return "kc";
    case ConstKind::S: return "sc";
    case ConstKind::D: return "dc";
    case ConstKind::P: return "pc";
    case ConstKind::P1: return "p1c";
    case ConstKind::P2: return "p2c";
    case ConstKind::Comp: return "(comp " + toDecimal(c.index) + ")";
  }
  return "?";
}

namespace {

const char* keyword(Kind k) {
  switch (k) {
    case Kind::Plus: return "plus";
    case Kind::Times: return "times";
    case Kind::Pair: return "pair";
    case Kind::Eval: return "eval";
    case Kind::Subst: return "subst";
    case Kind::DefinedG: return "g";
    case Kind::DefinedA: return "a";
    case Kind::Eq: return "eq";
    case Kind::In: return "in";
    case Kind::Tr: return "tr";
    case Kind::Ap: return "ap";
    case Kind::EqOmega: return "eqow";
    case Kind::EqType: return "eqok";
    case Kind::Mem: return "mem";
    case Kind::Form: return "form";
    case Kind::Subform: return "subform";
    case Kind::Ev: return "ev";
    case Kind::Bot: return "bot";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Imp: return "imp";
    case Kind::Forall: return "forall";
    case Kind::Exists: return "exists";
    default: return "?";
  }
}

bool hasLevel(const Expr& e) {
  switch (e.kind) {
    case Kind::Tr:
    case Kind::EqType:
    case Kind::Mem:
    case Kind::DefinedG:
    case Kind::DefinedA: return true;
    case Kind::In: return e.level != 0;
    default: return false;
  }
}

void print(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Kind::Var: out += printVariable(e.var); return;
    case Kind::Const: out += printConstant(*e.constant); return;
    case Kind::Forall:
    case Kind::Exists:
      out += '(';
      out += keyword(e.kind);
      out += ' ';
      out += printVariable(e.var);
      out += ' ';
      print(*e.kids[0], out);
      out += ')';
      return;
    case Kind::Plus:
      if (auto n = arithmeticNumeralValue(e)) {
        out += "(n " + std::to_string(*n) + ")";
        return;
      }
      break;
    default: break;
  }
  out += '(';
  out += keyword(e.kind);
  if (hasLevel(e)) out += " " + std::to_string(e.level);
  for (const auto& k : e.kids) {
    out += ' ';
    print(*k, out);
  }
  out += ')';
}

std::string subscript(std::uint64_t n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string d = std::to_string(n), out;
  for (char c : d) out += digits[c - '0'];
  return out;
}

std::string prettyVariable(const Variable& v) {
  switch (v.sort.kind) {
    case SortKind::Num: return "n" + subscript(v.index);
    case SortKind::Type:
      if (v.sort.level == 0) {
        if (auto name = indexName(v.index)) return *name;
        return "x" + subscript(v.index);
      }
      return "X" + subscript(v.index) + "^" + std::to_string(v.sort.level);
    case SortKind::Set:
      if (v.sort.level == 0) return "x" + subscript(v.index);
      return "x" + subscript(v.index) + "^(" + std::to_string(v.sort.level) + ")";
  }
  return "?";
}

std::string prettyConstant(const Constant& c) {
  switch (c.kind) {
    case ConstKind::Zero: return "0";
    case ConstKind::One: return "1";
    case ConstKind::K: return "k";
    case ConstKind::S: return "s";
    case ConstKind::D: return "d";
    case ConstKind::P: return "p";
    case ConstKind::P1: return "p₁";
    case ConstKind::P2: return "p₂";
    case ConstKind::Comp: return "c[" + toDecimal(c.index) + "]";
  }
  return "?";
}

void pretty(const Expr& e, std::string& out, bool top);

void prettyArgs(const Expr& e, std::string& out, const std::string& name) {
  out += name + "(";
  for (std::size_t i = 0; i < e.kids.size(); ++i) {
    if (i) out += ", ";
    pretty(*e.kids[i], out, true);
  }
  out += ")";
}

void infix(const Expr& a, const std::string& op, const Expr& b, std::string& out) {
  pretty(a, out, false);
  out += op;
  pretty(b, out, false);
}

void pretty(const Expr& e, std::string& out, bool top) {
  const std::string lv = std::to_string(e.level);
  switch (e.kind) {
    case Kind::Var: out += prettyVariable(e.var); return;
    case Kind::Const: out += prettyConstant(*e.constant); return;
    case Kind::Plus:
      if (auto n = arithmeticNumeralValue(e)) {
        out += std::to_string(*n) + "̄";
        return;
      }
      if (!top) out += "(";
      infix(*e.kids[0], "+", *e.kids[1], out);
      if (!top) out += ")";
      return;
    case Kind::Times:
      if (!top) out += "(";
      infix(*e.kids[0], "·", *e.kids[1], out);
      if (!top) out += ")";
      return;
    case Kind::Pair: prettyArgs(e, out, ""); return;
    case Kind::Eval: prettyArgs(e, out, "eval"); return;
    case Kind::Subst: prettyArgs(e, out, "subst"); return;
    case Kind::DefinedG: prettyArgs(e, out, "g_" + lv); return;
    case Kind::DefinedA: out += "a_" + lv; return;
    case Kind::Eq: infix(*e.kids[0], " = ", *e.kids[1], out); return;
    case Kind::In:
      pretty(*e.kids[1], out, false);
      out += e.level == 0 ? " ∈ " : " ∈_" + lv + " ";
      pretty(*e.kids[0], out, false);
      return;
    case Kind::Tr: prettyArgs(e, out, "Tr_" + lv); return;
    case Kind::Ap: prettyArgs(e, out, "Ap"); return;
    case Kind::EqOmega: infix(*e.kids[0], " =_0ω ", *e.kids[1], out); return;
    case Kind::EqType: infix(*e.kids[0], " =_0" + lv + " ", *e.kids[1], out); return;
    case Kind::Mem: infix(*e.kids[0], " ∈_" + lv + " ", *e.kids[1], out); return;
    case Kind::Form: prettyArgs(e, out, "Form"); return;
    case Kind::Subform: prettyArgs(e, out, "Subform"); return;
    case Kind::Ev: prettyArgs(e, out, "Ev"); return;
    case Kind::Bot: out += "⊥"; return;
    case Kind::Imp:
      if (const Expr* a = negated(e)) {
        out += "¬";
        pretty(*a, out, false);
        return;
      }
      [[fallthrough]];
    case Kind::And:
    case Kind::Or: {
      const char* op = e.kind == Kind::And ? " ∧ " : e.kind == Kind::Or ? " ∨ " : " ⊃ ";
      if (!top) out += "(";
      infix(*e.kids[0], op, *e.kids[1], out);
      if (!top) out += ")";
      return;
    }
    case Kind::Forall:
    case Kind::Exists:
      out += e.kind == Kind::Forall ? "∀" : "∃";
      out += prettyVariable(e.var);
      out += ' ';
      pretty(*e.kids[0], out, false);
      return;
  }
}

}  // namespace

std::string printExpr(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::string prettyExpr(const Expr& e) {
  std::string out;
  pretty(e, out, true);
  return out;
}

}  // namespace twb
