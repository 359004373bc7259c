#include <sstream>

#include "twb/classifiers.hpp"
#include "twb/eterm.hpp"
#include "twb/proofs.hpp"
#include "twb/syntax.hpp"

namespace twb {

namespace {

Verdict reject(std::size_t line, std::string why) { return Verdict{false, line, std::move(why)}; }

/// Whether phi follows by the BT induction rule from the two premises.
bool inductionRule(const TheoryId& theory, const ExprPtr& phi, const Expr& base, const Expr& step) {
  if (theory.restrictedInduction && hasSetQuantifier(*phi)) return false;
  if (step.kind != Kind::Imp || !(*step.kids[0] == *phi)) return false;
  const Expr& ex = *step.kids[1];
  if (ex.kind != Kind::Exists || !ex.var.sort.isNum()) return false;
  const Variable m = ex.var;
  VarSet candidates;
  for (const auto& v : allVariables(ex))
    if (v.sort.isNum() && v != m) candidates.insert(v);
  for (const auto& v : freeVariables(*phi))
    if (v.sort.isNum()) candidates.insert(v);
  for (const auto& n : candidates) {
    ExprPtr zeroCase;
    ExprPtr expected;
    try {
      expected = btInductionStep(phi, n, m);
    } catch (const DomainError&) {
      continue;
    }
    if (!alphaEqual(*expected, step)) continue;
    if (occursFree(*phi, n)) {
      zeroCase = substitute(phi, n, mk::zero());
      if (alphaEqual(*zeroCase, base)) return true;
    } else if (base == *phi) {
      return true;
    }
  }
  return false;
}

Justification justFromSexp(const Sexp& s) {
  if (!s.isList || s.head() != "by" || s.items.size() != 2 || !s.items[1].isList)
    syntaxError(s, "expected (by <justification>)");
  const Sexp& j = s.items[1];
  auto head = j.head();
  Justification out;
  auto arity = [&](std::size_t n) {
    if (j.items.size() != n + 1) syntaxError(j, "wrong number of arguments in justification");
  };
  auto lineRef = [&](const Sexp& a) {
    auto v = expectIndex(a);
    if (v == 0) syntaxError(a, "line numbers start at 1");
    return static_cast<std::size_t>(v);
  };
  if (head == "logical" || head == "axiom") {
    arity(1);
    if (j.items[1].isList) syntaxError(j.items[1], "expected a schema name");
    out.kind = head == "logical" ? JustKind::Logical : JustKind::Axiom;
    out.id = j.items[1].atom;
  } else if (head == "mp" || head == "ind") {
    arity(2);
    out.kind = head == "mp" ? JustKind::ModusPonens : JustKind::Induction;
    out.first = lineRef(j.items[1]);
    out.second = lineRef(j.items[2]);
  } else if (head == "gen") {
    arity(2);
    out.kind = JustKind::Generalization;
    out.first = lineRef(j.items[1]);
    auto v = variableFromSexp(j.items[2]);
    if (!v) syntaxError(j.items[2], "expected a variable");
    out.var = *v;
  } else {
    syntaxError(j, "unknown justification");
  }
  return out;
}

}  // namespace

Verdict checkProof(const TheoryId& theory, const Proof& proof) {
  const Language lang = theory.language();
  if (proof.lines.empty()) return reject(0, "empty proof");
  const auto& lines = proof.lines;
  auto cited = [&](std::size_t current, std::size_t ref) { return ref >= 1 && ref < current; };

  for (std::size_t i = 1; i <= lines.size(); ++i) {
    const ProofLine& ln = lines[i - 1];
    const Expr& phi = *ln.formula;
    if (!phi.isFormula()) return reject(i, "not a formula");
    try {
      checkWellSorted(phi, lang);
    } catch (const SortError& e) {
      return reject(i, std::string("outside the language: ") + e.what());
    }
    if (theory.level && fragmentOf(phi) > *theory.level)
      return reject(i, "outside the fragment: level " + std::to_string(fragmentOf(phi)));

    const Justification& by = ln.by;
    switch (by.kind) {
      case JustKind::Logical:
        if (!isLogicalInstance(theory, by.id, phi)) return reject(i, "not an instance of logical schema " + by.id);
        break;
      case JustKind::Axiom:
        if (!isAxiomInstance(theory, by.id, phi)) return reject(i, "not an instance of axiom " + by.id);
        break;
      case JustKind::ModusPonens: {
        if (!cited(i, by.first) || !cited(i, by.second)) return reject(i, "modus ponens cites a later line");
        const Expr& major = *lines[by.second - 1].formula;
        if (major.kind != Kind::Imp || !(*major.kids[0] == *lines[by.first - 1].formula) || !(*major.kids[1] == phi))
          return reject(i, "modus ponens does not apply");
        break;
      }
      case JustKind::Generalization:
        if (!cited(i, by.first)) return reject(i, "generalization cites a later line");
        if (phi.kind != Kind::Forall || phi.var != by.var || !(*phi.kids[0] == *lines[by.first - 1].formula))
          return reject(i, "generalization does not apply");
        break;
      case JustKind::Induction:
        if (lang != Language::BT) return reject(i, "the induction rule belongs to BT");
        if (!cited(i, by.first) || !cited(i, by.second)) return reject(i, "induction cites a later line");
        if (!inductionRule(theory, ln.formula, *lines[by.first - 1].formula, *lines[by.second - 1].formula))
          return reject(i, "induction rule does not apply");
        break;
    }
  }
  if (proof.theorem && !(*proof.theorem == *lines.back().formula))
    return reject(lines.size(), "last line differs from the stated theorem");
  return Verdict{};
}

Proof parseProof(std::string_view text, Language lang) {
  auto top = readSexps(text);
  if (top.size() != 1 || !top[0].isList) {
    Sexp at = top.empty() ? Sexp{} : top[0];
    syntaxError(at, "a proof is one list of lines");
  }
  Proof p;
  for (const auto& item : top[0].items) {
    if (item.isList && item.head() == "theorem") {
      if (p.theorem || !p.lines.empty() || item.items.size() != 2) syntaxError(item, "misplaced theorem");
      p.theorem = exprFromSexp(item.items[1], lang);
      continue;
    }
    if (!item.isList || item.items.size() != 2 || item.items[0].head() != "formula" || item.items[0].items.size() != 2)
      syntaxError(item, "expected ((formula <f>) (by <justification>))");
    ProofLine ln;
    ln.formula = exprFromSexp(item.items[0].items[1], lang);
    ln.by = justFromSexp(item.items[1]);
    p.lines.push_back(std::move(ln));
  }
  return p;
}

std::string printJustification(const Justification& j) {
  switch (j.kind) {
    case JustKind::Logical: return "(logical " + j.id + ")";
    case JustKind::Axiom: return "(axiom " + j.id + ")";
    case JustKind::ModusPonens: return "(mp " + std::to_string(j.first) + " " + std::to_string(j.second) + ")";
    case JustKind::Generalization: return "(gen " + std::to_string(j.first) + " " + printVariable(j.var) + ")";
    case JustKind::Induction: return "(ind " + std::to_string(j.first) + " " + std::to_string(j.second) + ")";
  }
  return "";
}

std::string printProof(const Proof& p) {
  std::ostringstream out;
  out << "(\n";
  if (p.theorem) out << " (theorem " << printExpr(*p.theorem) << ")\n";
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    out << " ((formula " << printExpr(*p.lines[i].formula) << ") (by " << printJustification(p.lines[i].by)
        << "))  ; " << (i + 1) << "\n";
  }
  out << ")\n";
  return out.str();
}

// ---------------------------------------------------------------- builder

std::size_t ProofBuilder::push(ExprPtr phi, Justification by) {
  proof_.lines.push_back(ProofLine{std::move(phi), std::move(by)});
  return proof_.lines.size();
}

std::size_t ProofBuilder::logical(std::string id, ExprPtr phi) {
  Justification j;
  j.kind = JustKind::Logical;
  j.id = std::move(id);
  return push(std::move(phi), std::move(j));
}

std::size_t ProofBuilder::axiom(std::string id, ExprPtr phi) {
  Justification j;
  j.kind = JustKind::Axiom;
  j.id = std::move(id);
  return push(std::move(phi), std::move(j));
}

std::size_t ProofBuilder::mp(std::size_t a, std::size_t ab) {
  const ExprPtr& major = formula(ab);
  if (major->kind != Kind::Imp || !(*major->kids[0] == *formula(a)))
    throw DomainError("modus ponens does not apply to lines " + std::to_string(a) + " and " + std::to_string(ab));
  Justification j;
  j.kind = JustKind::ModusPonens;
  j.first = a;
  j.second = ab;
  return push(major->kids[1], j);
}

std::size_t ProofBuilder::gen(std::size_t line, const Variable& x) {
  Justification j;
  j.kind = JustKind::Generalization;
  j.first = line;
  j.var = x;
  return push(mk::forall(x, formula(line)), j);
}

std::size_t ProofBuilder::ind(std::size_t base, std::size_t step, ExprPtr phi) {
  Justification j;
  j.kind = JustKind::Induction;
  j.first = base;
  j.second = step;
  return push(std::move(phi), j);
}

std::size_t ProofBuilder::identity(const ExprPtr& a) {
  using namespace mk;
  ExprPtr aa = imp(a, a);
  std::size_t l1 = logical("L1", imp(a, imp(aa, a)));
  std::size_t l2 = logical("L2", imp(imp(a, imp(aa, a)), imp(imp(a, aa), aa)));
  std::size_t l3 = mp(l1, l2);
  std::size_t l4 = logical("L1", imp(a, aa));
  return mp(l4, l3);
}

std::size_t ProofBuilder::weaken(std::size_t b, const ExprPtr& a) {
  ExprPtr bf = formula(b);
  std::size_t ax = logical("L1", mk::imp(bf, mk::imp(a, bf)));
  return mp(b, ax);
}

std::size_t ProofBuilder::chain(std::size_t ab, std::size_t bc) {
  using namespace mk;
  const ExprPtr& f1 = formula(ab);
  const ExprPtr& f2 = formula(bc);
  if (f1->kind != Kind::Imp || f2->kind != Kind::Imp || !(*f1->kids[1] == *f2->kids[0]))
    throw DomainError("chain needs A -> B and B -> C");
  ExprPtr a = f1->kids[0], b = f1->kids[1], c = f2->kids[1];
  std::size_t abc = weaken(bc, a);
  std::size_t dist = logical("L2", imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c))));
  std::size_t mid = mp(abc, dist);
  return mp(ab, mid);
}

std::size_t ProofBuilder::conjoin(std::size_t a, std::size_t b) {
  ExprPtr fa = formula(a), fb = formula(b);
  std::size_t ax = logical("L5", mk::imp(fa, mk::imp(fb, mk::conj(fa, fb))));
  std::size_t half = mp(a, ax);
  return mp(b, half);
}

Proof ProofBuilder::finish() {
  Proof p = proof_;
  if (!p.lines.empty()) p.theorem = p.lines.back().formula;
  return p;
}

}  // namespace twb
