#include "curvegen/decision.hpp"

#include <algorithm>
#include <map>

#include "curvegen/error.hpp"
#include "slope_partition.hpp"

namespace curvegen {

int rule_number(Rule rule) { return static_cast<int>(rule); }

std::string_view rule_id(Rule rule) {
  switch (rule) {
    case Rule::Semistable: return "semistable";
    case Rule::GenusZero: return "genus-zero";
    case Rule::GenusOne: return "genus-one";
    case Rule::TorsionPlusBundle: return "torsion-plus-bundle";
    case Rule::SufficientlyUnstable: return "sufficiently-unstable";
    case Rule::HnGap: return "hn-gap";
    case Rule::SimpleOrthogonal: return "simple-orthogonal";
    case Rule::Undecided: return "undecided";
  }
  return "unknown";
}

std::string_view rule_citation(Rule rule) {
  switch (rule) {
    case Rule::Semistable:
      return "semistable objects of a fixed slope (and torsion objects) form a proper triangulated "
             "subcategory, so a semistable object is not a classical generator";
    case Rule::GenusZero:
      return "every bundle on the projective line is a sum of line bundles, so every generator of "
             "D^b(P^1) is a classical generator";
    case Rule::GenusOne:
      return "on a curve of genus one: not semistable <=> generator <=> classical generator";
    case Rule::TorsionPlusBundle:
      return "an object that is neither torsion nor locally free is a classical generator";
    case Rule::SufficientlyUnstable:
      return "bundles F, G with mu_max(F) + g - 1 < mu_min(G) make F + G a classical generator";
    case Rule::HnGap:
      return "an HN slope gap mu_i - mu_{i+1} > 2g - 2 splits the filtration and makes the bundle a "
             "classical generator";
    case Rule::SimpleOrthogonal:
      return "simple pairwise Hom-orthogonal objects classically generate only iterated extensions of "
             "themselves, and a skyscraper sheaf is not one";
    case Rule::Undecided:
      return "no known criterion decides classical generation for this object";
  }
  return "";
}

std::string_view to_string(Decision decision) {
  switch (decision) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(HomReason reason) {
  switch (reason) {
    case HomReason::Slope: return "slope";
    case HomReason::StableDistinct: return "stable_distinct";
    case HomReason::Assumption: return "assumption";
  }
  return "unknown";
}

std::string_view to_string(Obstruction obstruction) {
  switch (obstruction) {
    case Obstruction::NotSemistable: return "not_semistable";
    case Obstruction::SlopeOffset: return "slope_offset";
    case Obstruction::EulerNonzero: return "euler_nonzero";
  }
  return "unknown";
}

bool is_generator(const FormalObject& object, const Curve& /*curve*/) {
  return !classify(object).is_semistable();
}

HomVanishing hom_vanishes(const SemistablePiece& a, const SemistablePiece& b, std::span<const Assumption> assumptions) {
  if (a.is_torsion() || b.is_torsion()) {
    throw Error(ErrorCode::InvalidArgument, "hom_vanishes is defined for positive-rank pieces");
  }
  if (b.slope() < a.slope()) return {true, HomReason::Slope, std::nullopt};

  const bool distinct = !a.id() || !b.id() || *a.id() != *b.id();
  if (b.slope() == a.slope() && a.is_simple() && b.is_simple() && distinct) {
    return {true, HomReason::StableDistinct, std::nullopt};
  }
  if (a.id() && b.id()) {
    for (const auto& assumption : assumptions) {
      if (assumption.kind == AssumptionKind::HomVanishes && assumption.source == *a.id() &&
          assumption.target == *b.id()) {
        return {true, HomReason::Assumption, assumption};
      }
    }
  }
  return {};
}

namespace {

Verdict decided(Decision decision, Rule rule, std::string reason, std::vector<Assumption> used = {}) {
  return Verdict{decision, rule, std::string(rule_citation(rule)), std::move(used), std::move(reason)};
}

std::string describe(const FormalObject::PieceRef& ref) {
  if (ref.piece->id()) return *ref.piece->id();
  return "piece " + std::to_string(ref.index + 1) + " in degree " + std::to_string(ref.degree);
}

void validate_assumptions(const FormalObject& object, const Curve& curve, std::span<const Assumption> assumptions) {
  std::map<std::string, ChernPair> classes;
  for (const auto& ref : object.pieces()) {
    if (ref.piece->id()) classes.emplace(*ref.piece->id(), ref.piece->cls());
  }
  for (const auto& a : assumptions) {
    auto src = classes.find(a.source);
    auto dst = classes.find(a.target);
    if (src == classes.end() || dst == classes.end()) {
      const std::string& missing = src == classes.end() ? a.source : a.target;
      throw Error(ErrorCode::UnknownAssumptionTarget, "assumption refers to unknown piece '" + missing + "'");
    }
    if (a.source == a.target) {
      throw Error(ErrorCode::InconsistentAssumption, "hom(" + a.source + ", " + a.target + ") contains the identity");
    }
    if (src->second.is_torsion() || dst->second.is_torsion()) {
      throw Error(ErrorCode::InconsistentAssumption, "hom assumptions are only supported between bundles");
    }
    // hom >= chi, so a positive Euler characteristic rules the assumption out.
    if (euler_pairing(src->second, dst->second, curve) > 0) {
      throw Error(ErrorCode::InconsistentAssumption,
                  "hom(" + a.source + ", " + a.target + ") = 0 contradicts Riemann-Roch (chi > 0)");
    }
  }
}

}  // namespace

Verdict classical_status(const FormalObject& input, const Curve& curve, std::span<const Assumption> assumptions) {
  validate_assumptions(input, curve, assumptions);
  const FormalObject object = adapt_to_curve(input, curve);
  const Classification cls = classify(object);
  const std::int64_t g = curve.genus();

  if (cls.is_semistable()) {
    const auto& lambda = *cls.semistable_slope;
    return decided(Decision::No, Rule::Semistable,
                   lambda.is_infinite() ? "torsion object" : "semistable of slope " + lambda.to_string());
  }
  if (g == 0) return decided(Decision::Yes, Rule::GenusZero, "not semistable on the projective line");
  if (g == 1) return decided(Decision::Yes, Rule::GenusOne, "not semistable on a genus-one curve");
  if (cls.support == Support::Mixed) {
    return decided(Decision::Yes, Rule::TorsionPlusBundle, "has both torsion and positive-rank cohomology");
  }

  // From here on the object is locally free, not semistable and g >= 2.
  const Rational offset(g - 1);
  if (auto part = detail::find_partition(detail::slope_units(object, std::nullopt), offset)) {
    return decided(Decision::Yes, Rule::SufficientlyUnstable,
                   "mu_max(F) = " + part->mu_max_low.to_string() + ", mu_min(G) = " + part->mu_min_high.to_string() +
                       ", gap > g - 1 = " + offset.to_string());
  }
  const Rational wide(curve.canonical_degree());
  for (const auto& [degree, sheaf] : object.graded()) {
    if (sheaf.is_split()) continue;
    if (auto gap = detail::widest_gap(sheaf); gap && *gap > wide) {
      return decided(Decision::Yes, Rule::HnGap,
                     "HN gap " + gap->to_string() + " > 2g - 2 = " + wide.to_string() + " in degree " +
                         std::to_string(degree));
    }
  }

  const auto refs = object.pieces();
  for (const auto& ref : refs) {
    if (!ref.piece->is_simple()) {
      return decided(Decision::Unknown, Rule::Undecided,
                     describe(ref) + " is not known to be simple and no sufficient instability criterion applies");
    }
  }
  std::vector<Assumption> used;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    for (std::size_t j = 0; j < refs.size(); ++j) {
      if (i == j) continue;
      const auto& a = *refs[i].piece;
      const auto& b = *refs[j].piece;
      if (a.id() && b.id() && *a.id() == *b.id()) continue;  // same object
      const HomVanishing hv = hom_vanishes(a, b, assumptions);
      if (!hv.vanishes) {
        return decided(Decision::Unknown, Rule::Undecided,
                       "Hom(" + describe(refs[i]) + ", " + describe(refs[j]) +
                           ") is not known to vanish and no sufficient instability criterion applies");
      }
      if (hv.assumption && std::find(used.begin(), used.end(), *hv.assumption) == used.end()) {
        used.push_back(*hv.assumption);
      }
    }
  }
  return decided(Decision::No, Rule::SimpleOrthogonal, "all pieces simple and pairwise Hom-orthogonal",
                 std::move(used));
}

SemiorthogonalityResult semiorthogonality_check(const FormalObject& e, const FormalObject& f, const Curve& curve) {
  SemiorthogonalityResult out;
  out.euler_characteristic = euler_pairing(e, f, curve);

  const Classification ce = classify(e);
  const Classification cf = classify(f);
  if (!ce.is_semistable() || !cf.is_semistable()) {
    out.witness = Obstruction::NotSemistable;
    out.side = ce.is_semistable() ? Side::Right : Side::Left;
    return out;
  }
  const ExtendedSlope& le = *ce.semistable_slope;
  const ExtendedSlope& lf = *cf.semistable_slope;
  if (le.is_finite() && lf.is_finite() && lf.value() != le.value() + Rational(curve.genus() - 1)) {
    out.witness = Obstruction::SlopeOffset;
    return out;
  }
  if (out.euler_characteristic != 0) {
    out.witness = Obstruction::EulerNonzero;
    return out;
  }
  out.possible = true;
  return out;
}

OrthogonalClass faltings_orthogonal_class(const FormalObject& e, const Curve& curve) {
  const Classification cls = classify(e);
  if (!cls.is_semistable()) {
    throw Error(ErrorCode::NotSemistable, "object is not semistable, so it is a generator and has no orthogonal");
  }
  OrthogonalClass out;
  if (cls.semistable_slope->is_infinite()) {
    out.skyscraper_off_support = true;
    out.description = "skyscraper sheaf at any point outside the support";
    return out;
  }
  const Rational target = cls.semistable_slope->value() + Rational(curve.genus() - 1);
  out.target_slope = target;
  out.minimal_class = ChernPair(target.den(), target.num());
  out.description = "general semistable bundle of class " + out.minimal_class->to_string() + " (slope " +
                    target.to_string() + ")";
  return out;
}

}  // namespace curvegen
