#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "twb/eterm.hpp"

namespace twb {

inline constexpr std::uint64_t kDefaultBudget = 10000;
/// Terms growing past this many nodes count as exhausting the budget.
inline constexpr std::size_t kMaxTermSize = 1u << 20;

/// Budget from THEORY_WORKBENCH_BUDGET when set to a positive number,
/// else kDefaultBudget.
std::uint64_t defaultBudget();

struct ReductionResult {
  /// Set when a normal form was reached within the budget.
  ETermPtr normalForm;
  /// Last term reached (equals normalForm on success).
  ETermPtr last;
  std::uint64_t steps = 0;
  bool exhausted() const { return normalForm == nullptr; }
};

/// One leftmost-outermost contraction; nullopt on a normal form. On a d
/// spine whose third or fourth argument is not yet a numeral those
/// arguments are reduced first, so that d can fire.
std::optional<ETermPtr> reduceStep(const ETermPtr& t);

using TraceFn = std::function<void(const ETerm&)>;
ReductionResult reduce(const ETermPtr& t, std::uint64_t budget, const TraceFn& trace = {});

/// Bracket abstraction over a type-0 variable; throws DomainError otherwise.
ETermPtr lambdaAbstract(const Variable& x, const ETermPtr& t);

/// Replaces numeric parameters by 0, type-0 parameters by k and type-j
/// parameters (j >= 1) by the empty-set constant of type j.
ETermPtr closeTerm(const ETermPtr& t);
/// Code of the comprehension abstraction Z^{j-1}.bot, whose constant
/// denotes the empty set of type j.
Natural emptySetIndex(unsigned j);

enum class Disjunct { Left, Right, Unknown };
const char* disjunctName(Disjunct d);

struct Extraction {
  Disjunct side = Disjunct::Unknown;
  ETermPtr selector;   // p1 applied to the closed realizer
  ReductionResult reduction;
};
Extraction extractDisjunct(const ETermPtr& realizer, std::uint64_t budget);

/// lambda x. p x 0
ETermPtr compileSuccessor();
/// k applied to the numeral m.
ETermPtr compileConstFn(std::uint64_t m);

}  // namespace twb
