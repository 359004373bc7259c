#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "twb/expr.hpp"

namespace twb {

enum class Truth { True, False, Unknown };
const char* truthName(Truth t);

/// Why a verdict stayed open.
enum class OpenReason { None, Bound, Budget };
const char* openReasonName(OpenReason r);

struct TruthVerdict {
  Truth value = Truth::Unknown;
  OpenReason reason = OpenReason::None;
  /// Value found for the outermost quantifier when it settled the verdict
  /// (a witness for exists, a counterexample for forall).
  std::optional<Natural> witness;

  bool decided() const { return value != Truth::Unknown; }
};

/// Upper limit on visited nodes per top-level evaluation.
inline constexpr std::uint64_t kDefaultWork = 20'000'000;

/// Value of a numeric term; n_i reads the i-th element of l. Throws
/// DomainError when some n_i with i >= 1 lies beyond lh(l).
Natural evalClosedTerm(const Expr& t, const Natural& l);

/// Kleene evaluation of an arithmetic formula (no Tr atoms). Quantifiers
/// range over 0..bound.
TruthVerdict evalArithmetic(const Expr& phi, const Natural& l, std::uint64_t bound,
                            std::uint64_t work = kDefaultWork);

/// Tr_k(m, l) by the Tarski clauses, quantifiers bounded as above.
TruthVerdict trEval(unsigned k, const Natural& m, const Natural& l, std::uint64_t bound,
                    std::uint64_t work = kDefaultWork);

}  // namespace twb
