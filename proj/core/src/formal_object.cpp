#include "curvegen/formal_object.hpp"

#include <algorithm>
#include <functional>

#include "curvegen/error.hpp"

namespace curvegen {

SemistablePiece::SemistablePiece(ChernPair cls, std::int64_t multiplicity, PieceAnnotations annotations)
    : cls_(cls), multiplicity_(multiplicity), annotations_(std::move(annotations)) {
  if (multiplicity_ <= 0) throw Error(ErrorCode::InvalidArgument, "piece multiplicity must be positive");
  if (cls_.is_torsion() && annotations_.h0) {
    throw Error(ErrorCode::InvalidArgument, "h0 annotation on a torsion piece");
  }
  if (cls_.is_torsion() && annotations_.stable) {
    throw Error(ErrorCode::InvalidArgument, "stable flag on a torsion piece");
  }
  if (annotations_.h0 && *annotations_.h0 < 0) throw Error(ErrorCode::InvalidArgument, "negative h0 annotation");
}

SemistablePiece SemistablePiece::with_class(ChernPair cls) const {
  return SemistablePiece(cls, multiplicity_, annotations_);
}

SemistablePiece SemistablePiece::with_annotations(PieceAnnotations annotations) const {
  return SemistablePiece(cls_, multiplicity_, std::move(annotations));
}

FormalSheaf::FormalSheaf(std::vector<SemistablePiece> pieces, Splitting splitting)
    : pieces_(std::move(pieces)), splitting_(splitting) {
  if (pieces_.empty()) throw Error(ErrorCode::ZeroSheaf, "sheaf with no pieces");
}

bool FormalSheaf::has_torsion() const {
  return std::any_of(pieces_.begin(), pieces_.end(), [](const auto& p) { return p.is_torsion(); });
}

bool FormalSheaf::is_torsion() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const auto& p) { return p.is_torsion(); });
}

FormalObject::FormalObject(std::map<std::int64_t, FormalSheaf> graded) : graded_(std::move(graded)) {
  if (graded_.empty()) throw Error(ErrorCode::ZeroSheaf, "object with no cohomology");
  std::map<std::string, ChernPair> seen;
  for (const auto& ref : pieces()) {
    const auto& id = ref.piece->id();
    if (!id) continue;
    auto [it, inserted] = seen.emplace(*id, ref.piece->cls());
    if (!inserted && !(it->second == ref.piece->cls())) {
      throw Error(ErrorCode::InvalidArgument, "id '" + *id + "' labels pieces of different classes");
    }
  }
}

FormalObject FormalObject::sheaf(FormalSheaf sheaf, std::int64_t degree) {
  std::map<std::int64_t, FormalSheaf> graded;
  graded.emplace(degree, std::move(sheaf));
  return FormalObject(std::move(graded));
}

std::vector<FormalObject::PieceRef> FormalObject::pieces() const {
  std::vector<PieceRef> out;
  for (const auto& [degree, sheaf] : graded_) {
    for (std::size_t i = 0; i < sheaf.pieces().size(); ++i) out.push_back({degree, i, &sheaf.pieces()[i]});
  }
  return out;
}

bool FormalObject::has_annotations() const {
  for (const auto& ref : pieces()) {
    if (!ref.piece->annotations().empty()) return true;
  }
  return false;
}

FormalSheaf hn_normalize(const FormalSheaf& sheaf) {
  std::map<ExtendedSlope, std::vector<const SemistablePiece*>, std::greater<>> groups;
  for (const auto& p : sheaf.pieces()) groups[p.slope()].push_back(&p);

  std::vector<SemistablePiece> merged;
  merged.reserve(groups.size());
  for (const auto& [slope, group] : groups) {
    const SemistablePiece& first = *group.front();
    const bool identical = std::all_of(group.begin(), group.end(), [&](const SemistablePiece* p) {
      return p->cls() == first.cls() && p->annotations() == first.annotations();
    });
    if (identical) {
      std::int64_t mult = 0;
      for (const auto* p : group) mult = checked::add(mult, p->multiplicity());
      merged.emplace_back(first.cls(), mult, first.annotations());
      continue;
    }
    ChernPair total = group.front()->total();
    for (std::size_t i = 1; i < group.size(); ++i) total = total + group[i]->total();
    merged.emplace_back(total);
  }
  return FormalSheaf(std::move(merged), sheaf.splitting());
}

std::pair<ExtendedSlope, ExtendedSlope> mu_extremes(const FormalSheaf& sheaf) {
  ExtendedSlope hi = sheaf.pieces().front().slope();
  ExtendedSlope lo = hi;
  for (const auto& p : sheaf.pieces()) {
    const ExtendedSlope s = p.slope();
    if (s > hi) hi = s;
    if (s < lo) lo = s;
  }
  return {hi, lo};
}

std::pair<ExtendedSlope, ExtendedSlope> mu_extremes(const FormalObject& object) {
  auto it = object.graded().begin();
  auto [hi, lo] = mu_extremes(it->second);
  for (++it; it != object.graded().end(); ++it) {
    auto [h, l] = mu_extremes(it->second);
    if (h > hi) hi = h;
    if (l < lo) lo = l;
  }
  return {hi, lo};
}

Classification classify(const FormalObject& object) {
  bool any_torsion = false;
  bool any_bundle = false;
  for (const auto& ref : object.pieces()) {
    (ref.piece->is_torsion() ? any_torsion : any_bundle) = true;
  }
  Classification out{};
  out.support = !any_bundle ? Support::Torsion : (!any_torsion ? Support::LocallyFree : Support::Mixed);

  auto [hi, lo] = mu_extremes(object);
  if (hi == lo) out.semistable_slope = hi;
  return out;
}

std::string_view to_string(Support support) {
  switch (support) {
    case Support::Torsion: return "torsion";
    case Support::LocallyFree: return "locally_free";
    case Support::Mixed: return "mixed";
  }
  return "unknown";
}

FormalObject shift(const FormalObject& object, std::int64_t n) {
  std::map<std::int64_t, FormalSheaf> graded;
  for (const auto& [degree, sheaf] : object.graded()) graded.emplace(checked::sub(degree, n), sheaf);
  return FormalObject(std::move(graded));
}

namespace {

// Slopes move under these operations; section counts and identities do not.
PieceAnnotations transported(const SemistablePiece& piece) {
  PieceAnnotations out;
  out.stable = piece.annotations().stable;
  return out;
}

void require_locally_free_split(const FormalObject& object, const char* op) {
  for (const auto& [degree, sheaf] : object.graded()) {
    if (sheaf.has_torsion()) {
      throw Error(ErrorCode::NotLocallyFree, std::string(op) + " requires a locally free object");
    }
    if (!sheaf.is_split()) {
      throw Error(ErrorCode::NotSplit, std::string(op) + " requires split sheaves, got HN factors only");
    }
  }
}

}  // namespace

FormalObject twist(const FormalObject& object, std::int64_t t) {
  std::map<std::int64_t, FormalSheaf> graded;
  for (const auto& [degree, sheaf] : object.graded()) {
    std::vector<SemistablePiece> pieces;
    for (const auto& p : sheaf.pieces()) {
      const ChernPair& c = p.cls();
      const ChernPair moved =
          c.is_torsion() ? c : ChernPair(c.rank(), checked::add(c.degree(), checked::mul(c.rank(), t)));
      pieces.emplace_back(moved, p.multiplicity(), transported(p));
    }
    graded.emplace(degree, FormalSheaf(std::move(pieces), sheaf.splitting()));
  }
  return FormalObject(std::move(graded));
}

FormalObject dual(const FormalObject& object) {
  require_locally_free_split(object, "dual");
  std::map<std::int64_t, FormalSheaf> graded;
  for (const auto& [degree, sheaf] : object.graded()) {
    std::vector<SemistablePiece> pieces;
    for (const auto& p : sheaf.pieces()) {
      pieces.emplace_back(ChernPair(p.cls().rank(), -p.cls().degree()), p.multiplicity(), transported(p));
    }
    graded.emplace(-degree, FormalSheaf(std::move(pieces), Splitting::Split));
  }
  return FormalObject(std::move(graded));
}

FormalObject tensor(const FormalObject& a, const FormalObject& b) {
  require_locally_free_split(a, "tensor");
  require_locally_free_split(b, "tensor");
  std::map<std::int64_t, std::vector<SemistablePiece>> acc;
  for (const auto& [da, sa] : a.graded()) {
    for (const auto& [db, sb] : b.graded()) {
      auto& out = acc[checked::add(da, db)];
      for (const auto& pa : sa.pieces()) {
        for (const auto& pb : sb.pieces()) {
          const auto& ca = pa.cls();
          const auto& cb = pb.cls();
          const ChernPair c(checked::mul(ca.rank(), cb.rank()),
                            checked::add(checked::mul(ca.rank(), cb.degree()), checked::mul(cb.rank(), ca.degree())));
          // A line bundle twist keeps a stable bundle stable; nothing else is guaranteed.
          PieceAnnotations ann;
          ann.stable = pa.is_simple() && pb.is_simple() && (ca.rank() == 1 || cb.rank() == 1) && c.rank() > 1;
          out.emplace_back(c, checked::mul(pa.multiplicity(), pb.multiplicity()), ann);
        }
      }
    }
  }
  std::map<std::int64_t, FormalSheaf> graded;
  for (auto& [degree, pieces] : acc) graded.emplace(degree, FormalSheaf(std::move(pieces), Splitting::Split));
  return FormalObject(std::move(graded));
}

FormalObject coerce_split(const FormalObject& object) {
  std::map<std::int64_t, FormalSheaf> graded;
  for (const auto& [degree, sheaf] : object.graded()) graded.emplace(degree, sheaf.with_splitting(Splitting::Split));
  return FormalObject(std::move(graded));
}

FormalObject adapt_to_curve(const FormalObject& object, const Curve& curve) {
  return curve.genus() == 0 ? coerce_split(object) : object;
}

std::int64_t euler_pairing(const FormalObject& e, const FormalObject& f, const Curve& curve) {
  std::int64_t chi = 0;
  for (const auto& [i, se] : e.graded()) {
    for (const auto& [j, sf] : f.graded()) {
      const bool odd = ((j - i) % 2) != 0;
      for (const auto& pe : se.pieces()) {
        for (const auto& pf : sf.pieces()) {
          const std::int64_t term = euler_pairing(pe.total(), pf.total(), curve);
          chi = odd ? checked::sub(chi, term) : checked::add(chi, term);
        }
      }
    }
  }
  return chi;
}

bool h0_consistent(const SemistablePiece& piece, const Curve& curve) {
  const auto& h0 = piece.annotations().h0;
  if (!h0) return true;
  if (piece.is_torsion()) return false;
  const ChernPair& c = piece.cls();
  const std::int64_t chi = euler_pairing(ChernPair(1, 0), c, curve);
  const Rational mu = piece.slope().value();
  if (mu < Rational(0)) return *h0 == 0;
  if (mu > Rational(curve.canonical_degree())) return *h0 == chi;
  return *h0 >= chi;
}

}  // namespace curvegen
