#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvegen/formal_object.hpp"

namespace curvegen {

enum class AssumptionKind { HomVanishes };

/// A user-supplied fact the numerical model cannot derive, e.g. that a
/// degree-one line bundle has no sections: hom(source, target) = 0.
struct Assumption {
  std::string source;
  std::string target;
  AssumptionKind kind = AssumptionKind::HomVanishes;

  friend bool operator==(const Assumption&, const Assumption&) = default;
};

enum class Decision { Yes, No, Unknown };

/// Verdict rules in the order they are tried.
enum class Rule {
  Semistable = 1,
  GenusZero = 2,
  GenusOne = 3,
  TorsionPlusBundle = 4,
  SufficientlyUnstable = 5,
  HnGap = 6,
  SimpleOrthogonal = 7,
  Undecided = 8,
};

int rule_number(Rule rule);
/// Stable identifier used in reports.
std::string_view rule_id(Rule rule);
/// The mathematical statement the rule applies.
std::string_view rule_citation(Rule rule);
std::string_view to_string(Decision decision);

struct Verdict {
  Decision decision;
  Rule rule;
  std::string citation;
  std::vector<Assumption> assumptions_used;
  /// Why the rule fired, or for Unknown why nothing did.
  std::string reason;
};

/// A generator (trivial right orthogonal) exactly when not semistable.
bool is_generator(const FormalObject& object, const Curve& curve);

enum class HomReason {
  Slope,           ///< mu(target) < mu(source) between semistable bundles
  StableDistinct,  ///< non-isomorphic stable bundles of equal slope
  Assumption,
};

std::string_view to_string(HomReason reason);

struct HomVanishing {
  bool vanishes = false;
  std::optional<HomReason> reason;
  std::optional<Assumption> assumption;  ///< set when reason is Assumption
};

/// Decides Hom(a, b) = 0 for two distinct positive-rank semistable pieces,
/// where possible. Unlabelled pieces count as pairwise non-isomorphic, so do
/// not pass the same piece twice.
HomVanishing hom_vanishes(const SemistablePiece& a, const SemistablePiece& b, std::span<const Assumption> assumptions);

/// Classical-generator verdict. The first rule that applies wins.
///
/// Throws Error(UnknownAssumptionTarget) when an assumption names an id not
/// present in the object, and Error(InconsistentAssumption) when Riemann-Roch
/// already forces the assumed Hom to be nonzero.
Verdict classical_status(const FormalObject& object, const Curve& curve, std::span<const Assumption> assumptions = {});

enum class Obstruction {
  NotSemistable,  ///< one side is not semistable
  SlopeOffset,    ///< mu(F) != mu(E) + g - 1
  EulerNonzero,   ///< chi(E, F) != 0
};

std::string_view to_string(Obstruction obstruction);

enum class Side { Left, Right };

struct SemiorthogonalityResult {
  bool possible = false;
  std::optional<Obstruction> witness;
  std::optional<Side> side;  ///< for NotSemistable
  std::int64_t euler_characteristic = 0;
};

/// Necessary conditions for Ext^*(e, f) = 0. `possible` means every
/// numerical obstruction is absent, not that the vanishing holds.
SemiorthogonalityResult semiorthogonality_check(const FormalObject& e, const FormalObject& f, const Curve& curve);

struct OrthogonalClass {
  bool skyscraper_off_support = false;
  std::optional<Rational> target_slope;
  std::optional<ChernPair> minimal_class;
  std::string description;
};

/// Numerical class of a nonzero object right-orthogonal to a semistable
/// object. Throws Error(NotSemistable) otherwise, since then none exists.
OrthogonalClass faltings_orthogonal_class(const FormalObject& e, const Curve& curve);

}  // namespace curvegen
