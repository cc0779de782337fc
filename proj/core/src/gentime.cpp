#include "curvegen/gentime.hpp"

#include <algorithm>
#include <set>

#include "curvegen/error.hpp"
#include "slope_partition.hpp"

namespace curvegen {

std::string_view to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::Finite: return "finite";
    case BoundStatus::Unbounded: return "unbounded";
    case BoundStatus::UnboundedWithNote: return "unbounded_with_note";
  }
  return "unknown";
}

std::int64_t compose_bound(std::int64_t a, std::int64_t b) {
  if (a < 0) throw Error(ErrorCode::InvalidArgument, "compose_bound needs a >= 0");
  if (b < 1) throw Error(ErrorCode::InvalidArgument, "compose_bound needs b >= 1");
  return checked::sub(checked::mul(b, checked::add(a, 1)), 1);
}

std::int64_t line_plus_skyscraper_bound(const Curve& curve) {
  return checked::add(checked::mul(48, curve.genus()), 1);
}

std::int64_t torsion_plus_bundle_bound(const Curve& curve) {
  return checked::add(checked::mul(96, curve.genus()), 3);
}

std::int64_t sufficiently_unstable_bound(const Curve& curve) {
  return checked::add(checked::mul(192, curve.genus()), 7);
}

namespace {

using Trace = std::vector<DerivationStep>;

constexpr const char* kComposeCitation =
    "if F lies in <G>_b then Theta(G) <= b * (Theta(F) + 1) - 1 (octahedral axiom)";

Trace line_plus_skyscraper_trace(const Curve& curve) {
  const std::int64_t g = curve.genus();
  const std::int64_t steps = checked::add(checked::mul(24, g), 1);
  Trace t;
  t.push_back({"fast-generator",
               "L^-1 + O + L + L^2 with deg L >= 8g has generating time 1; take L = O(8g p) up to a twist",
               kFastGeneratorTime});
  t.push_back({"skyscraper-sequence",
               "0 -> O(-(m+1)p) -> O(-mp) -> O_p -> 0 puts O(-mp) in <O + O_p>_{m+1}, so the fast generator "
               "lies in <O + O_p>_{24g+1}",
               steps});
  t.push_back({"compose", kComposeCitation, compose_bound(kFastGeneratorTime, steps)});
  return t;
}

Trace torsion_plus_bundle_trace(const Curve& curve) {
  Trace t = line_plus_skyscraper_trace(curve);
  const std::int64_t base = t.back().value;
  t.push_back({"trace-splitting",
               "F is a summand of E (x) (E^v (x) F) in characteristic zero, so Theta(E + O_p) <= Theta(O + O_p)",
               base});
  t.push_back({"skyscraper-from-torsion", "O_p lies in <T>_2 for every point p in the support of T", 2});
  t.push_back({"compose", kComposeCitation, compose_bound(base, 2)});
  return t;
}

Trace sufficiently_unstable_trace(const Curve& curve) {
  Trace t = torsion_plus_bundle_trace(curve);
  const std::int64_t base = t.back().value;
  t.push_back({"torsion-cokernel",
               "F^v (x) G (x) O(-p) has HN slopes > 2g - 1, hence is globally generated; a map F^r -> G "
               "surjective at q and zero at p has a nonzero torsion cokernel T in <F + G>_2",
               2});
  t.push_back({"compose", kComposeCitation, compose_bound(base, 2)});
  return t;
}

// One rank-1 bundle and one skyscraper, up to multiplicity and shifts.
// Multiplicities and shifts do not change <G>_i.
std::optional<std::int64_t> line_plus_skyscraper_degree(const FormalObject& object) {
  std::set<std::string> labels;
  std::size_t bundles = 0;
  std::size_t torsions = 0;
  std::optional<std::int64_t> line_degree;
  for (const auto& ref : object.pieces()) {
    const auto& p = *ref.piece;
    if (p.id() && !labels.insert(*p.id()).second) continue;
    if (p.is_torsion()) {
      if (p.cls().length() != 1) return std::nullopt;
      ++torsions;
    } else {
      if (p.cls().rank() != 1) return std::nullopt;
      line_degree = p.cls().degree();
      ++bundles;
    }
  }
  if (bundles != 1 || torsions != 1) return std::nullopt;
  return line_degree;
}

}  // namespace

GenTimeBound gentime_upper_bound(const FormalObject& input, const Curve& curve, const Verdict& verdict) {
  const Verdict expected = classical_status(input, curve, verdict.assumptions_used);
  if (expected.decision != verdict.decision || expected.rule != verdict.rule) {
    throw Error(ErrorCode::VerdictMismatch, "verdict " + std::string(rule_id(verdict.rule)) +
                                                " does not match the object (expected " +
                                                std::string(rule_id(expected.rule)) + ")");
  }

  GenTimeBound out;
  if (verdict.decision != Decision::Yes) {
    out.status = BoundStatus::Unbounded;
    out.note = verdict.decision == Decision::No ? "not a classical generator" : "classical generation undecided";
    return out;
  }

  const FormalObject object = adapt_to_curve(input, curve);
  const Classification cls = classify(object);
  std::vector<Trace> candidates;

  if (curve.genus() == 1) {
    candidates.push_back({{"genus-one", "every classical generator on a genus-one curve has generating time at most 4",
                           kGenusOneBound}});
  }
  if (auto degree = line_plus_skyscraper_degree(object)) {
    Trace t = line_plus_skyscraper_trace(curve);
    if (*degree != 0) {
      t.push_back({"line-bundle-twist",
                   "twisting by a line bundle is an autoequivalence fixing O_p, so L + O_p has the generating time "
                   "of O + O_p",
                   t.back().value});
    }
    candidates.push_back(std::move(t));
  }
  if (cls.support == Support::Mixed) candidates.push_back(torsion_plus_bundle_trace(curve));
  if (cls.support == Support::LocallyFree) {
    const auto units = detail::slope_units(object, Rational(curve.canonical_degree()));
    if (detail::find_partition(units, Rational(2 * curve.genus()))) {
      candidates.push_back(sufficiently_unstable_trace(curve));
    }
  }

  if (candidates.empty()) {
    out.status = BoundStatus::UnboundedWithNote;
    out.note = "classical generator; no generating-time bound is known for this shape";
    return out;
  }
  auto best = std::min_element(candidates.begin(), candidates.end(),
                               [](const Trace& a, const Trace& b) { return a.back().value < b.back().value; });
  out.status = BoundStatus::Finite;
  out.value = best->back().value;
  out.derivation = std::move(*best);
  return out;
}

bool globally_generated_check(const SemistablePiece& piece, const Curve& curve) {
  if (piece.is_torsion()) throw Error(ErrorCode::InvalidArgument, "global generation check needs a bundle");
  return piece.slope().value() > Rational(2 * curve.genus() - 1);
}

}  // namespace curvegen
