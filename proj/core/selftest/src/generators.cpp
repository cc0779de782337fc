#include "curvegen/testing/generators.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace curvegen::testing {

std::int64_t Generator::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

bool Generator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

Curve Generator::curve(const GenOptions& opt) { return Curve(uniform(opt.min_genus, opt.max_genus)); }

ChernPair Generator::bundle_class(const GenOptions& opt) {
  return ChernPair(uniform(1, opt.max_rank), uniform(-opt.max_abs_degree, opt.max_abs_degree));
}

namespace {

std::int64_t plausible_h0(const ChernPair& c, const Curve& curve, std::int64_t extra) {
  const std::int64_t chi = c.degree() + c.rank() * (1 - curve.genus());
  // mu < 0 and mu > 2g - 2 pin h0 down; in between only h0 >= chi is forced.
  if (c.degree() < 0) return 0;
  if (c.degree() > c.rank() * curve.canonical_degree()) return chi;
  return std::max<std::int64_t>(chi, 0) + extra;
}

}  // namespace

FormalObject Generator::object(const Curve& curve, const GenOptions& opt) {
  const int count = static_cast<int>(uniform(1, opt.max_pieces));
  std::vector<ChernPair> classes;

  const auto mode = uniform(0, 99);
  if (mode < 30) {
    if (opt.torsion && chance(0.2)) {
      for (int i = 0; i < count; ++i) classes.push_back(ChernPair::torsion(uniform(1, 5)));
    } else {
      const std::int64_t r0 = uniform(1, std::min<std::int64_t>(4, opt.max_rank));
      const std::int64_t d0 = uniform(-opt.max_abs_degree / opt.max_rank, opt.max_abs_degree / opt.max_rank);
      for (int i = 0; i < count; ++i) {
        const std::int64_t k = uniform(1, std::max<std::int64_t>(1, opt.max_rank / r0));
        classes.emplace_back(k * r0, k * d0);
      }
    }
  } else {
    for (int i = 0; i < count; ++i) {
      if (opt.torsion && chance(0.15)) {
        classes.push_back(ChernPair::torsion(uniform(1, 5)));
      } else {
        classes.push_back(bundle_class(opt));
      }
    }
  }

  std::map<std::int64_t, std::vector<SemistablePiece>> by_degree;
  std::vector<SemistablePiece> made;
  for (const auto& c : classes) {
    const std::int64_t degree = -uniform(-opt.max_abs_shift, opt.max_abs_shift);
    if (opt.annotations && !made.empty() && chance(0.1)) {
      by_degree[degree].push_back(made[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(made.size()) - 1))]);
      continue;
    }
    PieceAnnotations ann;
    if (opt.annotations && !c.is_torsion()) {
      if (c.rank() > 1 && chance(0.3)) ann.stable = true;
      if (chance(0.5)) ann.id = "P" + std::to_string(next_label_++);
      if (chance(0.2)) {
        ann.h0 = plausible_h0(c, curve, uniform(0, 2));
        if (!h0_consistent(SemistablePiece(c, 1, ann), curve)) ann.h0.reset();
      }
    }
    SemistablePiece piece(c, chance(0.15) ? 2 : 1, ann);
    made.push_back(piece);
    by_degree[degree].push_back(std::move(piece));
  }

  std::map<std::int64_t, FormalSheaf> graded;
  for (auto& [degree, pieces] : by_degree) {
    const bool has_torsion = std::any_of(pieces.begin(), pieces.end(), [](const auto& p) { return p.is_torsion(); });
    const bool hn = opt.hn_only && !has_torsion && chance(0.2);
    graded.emplace(degree, FormalSheaf(std::move(pieces), hn ? Splitting::HNOnly : Splitting::Split));
  }
  return FormalObject(std::move(graded));
}

Sample Generator::sample(const GenOptions& opt) {
  const Curve c = curve(opt);
  FormalObject obj = object(c, opt);
  std::map<std::string, ChernPair> labelled;
  for (const auto& ref : obj.pieces()) {
    if (ref.piece->id() && !ref.piece->is_torsion()) labelled.emplace(*ref.piece->id(), ref.piece->cls());
  }
  std::vector<Assumption> assumptions;
  if (labelled.size() >= 2) {
    std::vector<std::pair<std::string, ChernPair>> list(labelled.begin(), labelled.end());
    const auto n = static_cast<std::int64_t>(list.size());
    const auto tries = uniform(0, 4);
    for (std::int64_t t = 0; t < tries; ++t) {
      const auto& a = list[static_cast<std::size_t>(uniform(0, n - 1))];
      const auto& b = list[static_cast<std::size_t>(uniform(0, n - 1))];
      if (a.first == b.first || euler_pairing(a.second, b.second, c) > 0) continue;
      Assumption as{a.first, b.first};
      if (std::find(assumptions.begin(), assumptions.end(), as) == assumptions.end()) assumptions.push_back(as);
    }
  }
  return Sample{c, std::move(obj), std::move(assumptions)};
}

bool oracle_semistable(const FormalObject& object) {
  const auto refs = object.pieces();
  const auto torsion = std::count_if(refs.begin(), refs.end(), [](const auto& r) { return r.piece->is_torsion(); });
  if (torsion == static_cast<std::ptrdiff_t>(refs.size())) return true;
  if (torsion > 0) return false;
  const ChernPair& first = refs.front().piece->cls();
  return std::all_of(refs.begin(), refs.end(), [&](const auto& r) {
    const ChernPair& c = r.piece->cls();
    __extension__ using Wide = __int128;
    return static_cast<Wide>(c.degree()) * first.rank() == static_cast<Wide>(first.degree()) * c.rank();
  });
}

FormalObject strip_annotations(const FormalObject& object) {
  std::map<std::int64_t, FormalSheaf> graded;
  for (const auto& [degree, sheaf] : object.graded()) {
    std::vector<SemistablePiece> pieces;
    for (const auto& p : sheaf.pieces()) pieces.emplace_back(p.cls(), p.multiplicity());
    graded.emplace(degree, FormalSheaf(std::move(pieces), sheaf.splitting()));
  }
  return FormalObject(std::move(graded));
}

}  // namespace curvegen::testing
