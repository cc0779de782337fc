#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvegen/decision.hpp"

namespace curvegen {

struct DerivationStep {
  std::string rule;
  std::string citation;
  std::int64_t value;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

enum class BoundStatus {
  Finite,
  Unbounded,          ///< not a classical generator, or undecided
  UnboundedWithNote,  ///< classical generator with no known bound
};

std::string_view to_string(BoundStatus status);

/// Upper bound on the generating time Theta(G), with the steps that
/// produced it.
struct GenTimeBound {
  BoundStatus status = BoundStatus::Unbounded;
  std::optional<std::int64_t> value;
  std::string note;
  std::vector<DerivationStep> derivation;
};

/// Theta(G) <= b * (Theta(F) + 1) - 1 whenever F is built from G in b steps
/// and Theta(F) <= a. Requires a >= 0, b >= 1.
std::int64_t compose_bound(std::int64_t a, std::int64_t b);

/// Theta(O_C + O_p) <= 48g + 1.
std::int64_t line_plus_skyscraper_bound(const Curve& curve);
/// Theta(T + E) <= 96g + 3 for nonzero torsion T and bundle E.
std::int64_t torsion_plus_bundle_bound(const Curve& curve);
/// Theta(F + G) <= 192g + 7 when mu_max(F) + 2g < mu_min(G).
std::int64_t sufficiently_unstable_bound(const Curve& curve);
/// Every classical generator on a genus-one curve.
inline constexpr std::int64_t kGenusOneBound = 4;
/// L^-1 + O + L + L^2 with deg L >= 8g generates in one step.
inline constexpr std::int64_t kFastGeneratorTime = 1;

/// Smallest bound from the known table that applies to the object.
///
/// `verdict` must be what classical_status returns for the object given the
/// verdict's own assumptions; otherwise Error(VerdictMismatch) is thrown.
GenTimeBound gentime_upper_bound(const FormalObject& object, const Curve& curve, const Verdict& verdict);

/// True when mu > 2g - 1, which makes a semistable bundle globally
/// generated with H^1 = 0. False only means this criterion is silent.
bool globally_generated_check(const SemistablePiece& piece, const Curve& curve);

}  // namespace curvegen
