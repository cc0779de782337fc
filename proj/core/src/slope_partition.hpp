#pragma once

#include <optional>
#include <vector>

#include "curvegen/formal_object.hpp"

namespace curvegen::detail {

/// A direct summand of a locally free object seen only through its
/// extreme slopes.
struct SlopeUnit {
  Rational mu_max;
  Rational mu_min;
};

/// A split of the units into F (low) and G (high) with
/// mu_max(F) + threshold < mu_min(G).
struct SlopePartition {
  Rational mu_max_low;
  Rational mu_min_high;
};

/// Units of a locally free object: each piece of a split sheaf on its own,
/// each HN-only sheaf as one block. With `split_hn_above` set, an HN-only
/// sheaf is first cut at every consecutive gap strictly above that value,
/// since such an HN filtration splits.
std::vector<SlopeUnit> slope_units(const FormalObject& object, const std::optional<Rational>& split_hn_above);

/// Finds a partition for a non-negative threshold. Because the threshold
/// is non-negative, a valid partition exists iff one exists that puts every
/// unit with mu_min at or above some cut into G.
std::optional<SlopePartition> find_partition(const std::vector<SlopeUnit>& units, const Rational& threshold);

/// Largest consecutive gap in the normalized slope sequence of an
/// HN-only sheaf, if it has at least two factors.
std::optional<Rational> widest_gap(const FormalSheaf& sheaf);

}  // namespace curvegen::detail
