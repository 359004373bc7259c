#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twb/expr.hpp"
#include "twb/text.hpp"

namespace twb {

// ---------------------------------------------------------------- theories

enum class TheoryBase { BT, BTcl, SA, Ar, ArACBang, ArDelta11C, PATr };

struct TheoryId {
  TheoryBase base = TheoryBase::BT;
  /// Fragment bound; nullopt means unbounded.
  std::optional<unsigned> level;
  bool restrictedInduction = false;

  Language language() const;
  bool classical() const;
};

/// "BT", "BT:2", "BTcl:1:r", "SA:r", "Ar", "ArACBang", "ArDelta11C", "PATr:1".
/// Throws DomainError on anything else.
TheoryId parseTheoryId(std::string_view text);
std::string theoryName(const TheoryId& t);

// ---------------------------------------------------------------- proofs

enum class JustKind { Logical, Axiom, ModusPonens, Generalization, Induction };

struct Justification {
  JustKind kind = JustKind::Logical;
  /// Schema name for Logical / Axiom.
  std::string id;
  /// 1-based line references: the two premises, or the one for Gen.
  std::size_t first = 0;
  std::size_t second = 0;
  /// The generalized variable.
  Variable var;
};

struct ProofLine {
  ExprPtr formula;
  Justification by;
};

struct Proof {
  /// Claimed conclusion; when set, the last line must equal it.
  ExprPtr theorem;
  std::vector<ProofLine> lines;
};

/// ( [(theorem <formula>)] ((formula <f>) (by <just>)) ... ) where <just> is
/// (logical ID) | (axiom ID) | (mp i j) | (gen i <var>) | (ind i j).
Proof parseProof(std::string_view text, Language lang);
std::string printProof(const Proof& p);
std::string printJustification(const Justification& j);

struct Verdict {
  bool accepted = true;
  /// 1-based line of the first failure; 0 for a whole-proof failure.
  std::size_t line = 0;
  std::string reason;
};

Verdict checkProof(const TheoryId& theory, const Proof& proof);

// ---------------------------------------------------------------- schemas

/// Logical schema names: L1..L9, Q1..Q4, E1, E2, DNE.
const std::vector<std::string>& logicalSchemaNames();
/// Theory axiom names of each base.
std::vector<std::string> axiomSchemaNames(TheoryBase base);

/// Whether phi is an instance of the named logical schema in the theory
/// (DNE only in classical theories; E1/E2 only where `=` exists).
bool isLogicalInstance(const TheoryId& theory, std::string_view id, const Expr& phi);
/// Whether phi is an instance of the named theory axiom.
bool isAxiomInstance(const TheoryId& theory, std::string_view id, const Expr& phi);

/// First logical schema or theory axiom matching phi.
std::optional<std::string> recognizeLogical(const TheoryId& theory, const Expr& phi);
std::optional<std::string> recognizeAxiom(const TheoryId& theory, const Expr& phi);

std::optional<std::string> isBTAxiom(const TheoryId& theory, const Expr& phi);
std::optional<std::string> isSAAxiom(const TheoryId& theory, const Expr& phi);
std::optional<std::string> isArAxiom(const TheoryId& theory, const Expr& phi);
std::optional<std::string> isPATrAxiom(const TheoryId& theory, const Expr& phi);

// ---------------------------------------------------------------- derived notation

/// X =_k U. For k = 0 this is X =_00 U, otherwise
/// forall W^{k-1} (W in_{k-1} X iff W in_{k-1} U).
ExprPtr btSetEquality(unsigned k, const Variable& x, const Variable& u, FreshSupply& fresh);
/// x =_k z in SA (k >= 1) or Ar (k = 0): forall n (n in x iff n in z).
ExprPtr setEquality(unsigned k, const Variable& x, const Variable& z, FreshSupply& fresh);
/// The conclusion of the BT induction step: phi -> exists m (p n 0 ~ m and phi[n/m]).
ExprPtr btInductionStep(const ExprPtr& phi, const Variable& n, const Variable& m);

// ---------------------------------------------------------------- building

/// Appends lines and hands back their 1-based numbers.
class ProofBuilder {
 public:
  std::size_t logical(std::string id, ExprPtr phi);
  std::size_t axiom(std::string id, ExprPtr phi);
  /// From A (line a) and A -> B (line ab) infers B.
  std::size_t mp(std::size_t a, std::size_t ab);
  std::size_t gen(std::size_t line, const Variable& x);
  std::size_t ind(std::size_t base, std::size_t step, ExprPtr phi);

  /// A -> A.
  std::size_t identity(const ExprPtr& a);
  /// From B (line b) infers A -> B.
  std::size_t weaken(std::size_t b, const ExprPtr& a);
  /// From A -> B and B -> C infers A -> C.
  std::size_t chain(std::size_t ab, std::size_t bc);
  /// From A and B infers A and B.
  std::size_t conjoin(std::size_t a, std::size_t b);

  const ExprPtr& formula(std::size_t line) const { return proof_.lines.at(line - 1).formula; }
  Proof finish();

 private:
  std::size_t push(ExprPtr phi, Justification by);

  Proof proof_;
};

}  // namespace twb
