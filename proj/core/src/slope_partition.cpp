#include "slope_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvegen::detail {

std::vector<SlopeUnit> slope_units(const FormalObject& object, const std::optional<Rational>& split_hn_above) {
  std::vector<SlopeUnit> units;
  for (const auto& [degree, sheaf] : object.graded()) {
    if (sheaf.has_torsion()) throw std::logic_error("slope units need a locally free object");
    if (sheaf.is_split()) {
      for (const auto& p : sheaf.pieces()) units.push_back({p.slope().value(), p.slope().value()});
      continue;
    }
    const FormalSheaf normalized = hn_normalize(sheaf);
    const auto& factors = normalized.pieces();
    // factors are strictly decreasing; open a new block after every wide gap
    Rational block_max = factors.front().slope().value();
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      const Rational here = factors[i].slope().value();
      const Rational next = factors[i + 1].slope().value();
      if (split_hn_above && here - next > *split_hn_above) {
        units.push_back({block_max, here});
        block_max = next;
      }
    }
    units.push_back({block_max, factors.back().slope().value()});
  }
  return units;
}

std::optional<SlopePartition> find_partition(const std::vector<SlopeUnit>& units, const Rational& threshold) {
  if (threshold < Rational(0)) throw std::invalid_argument("partition threshold must be non-negative");
  if (units.size() < 2) return std::nullopt;

  std::vector<Rational> cuts;
  for (const auto& u : units) cuts.push_back(u.mu_min);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // The smallest cut would leave F empty.
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    const Rational& cut = cuts[k];
    std::optional<Rational> low_max;
    for (const auto& u : units) {
      if (u.mu_min < cut && (!low_max || u.mu_max > *low_max)) low_max = u.mu_max;
    }
    if (low_max && *low_max + threshold < cut) return SlopePartition{*low_max, cut};
  }
  return std::nullopt;
}

std::optional<Rational> widest_gap(const FormalSheaf& sheaf) {
  const FormalSheaf normalized = hn_normalize(sheaf);
  const auto& factors = normalized.pieces();
  std::optional<Rational> widest;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (factors[i].is_torsion()) continue;
    const Rational gap = factors[i].slope().value() - factors[i + 1].slope().value();
    if (!widest || gap > *widest) widest = gap;
  }
  return widest;
}

}  // namespace curvegen::detail
