#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvegen/numerics.hpp"

namespace curvegen {

/// Optional knowledge attached to a piece that numerical data cannot
/// supply on its own.
struct PieceAnnotations {
  std::optional<std::int64_t> h0;  ///< dim H^0 of one copy of the piece
  bool stable = false;             ///< stable, hence simple
  std::optional<std::string> id;   ///< identity label; equal labels mean isomorphic pieces

  bool empty() const noexcept { return !h0 && !stable && !id; }
  friend bool operator==(const PieceAnnotations&, const PieceAnnotations&) = default;
};

/// One semistable summand (or Harder-Narasimhan factor), repeated
/// `multiplicity` times.
class SemistablePiece {
 public:
  explicit SemistablePiece(ChernPair cls, std::int64_t multiplicity = 1, PieceAnnotations annotations = {});

  static SemistablePiece bundle(std::int64_t rank, std::int64_t degree, PieceAnnotations annotations = {}) {
    return SemistablePiece(ChernPair(rank, degree), 1, std::move(annotations));
  }
  static SemistablePiece torsion(std::int64_t length) { return SemistablePiece(ChernPair::torsion(length)); }

  const ChernPair& cls() const noexcept { return cls_; }
  std::int64_t multiplicity() const noexcept { return multiplicity_; }
  const PieceAnnotations& annotations() const noexcept { return annotations_; }
  const std::optional<std::string>& id() const noexcept { return annotations_.id; }

  bool is_torsion() const noexcept { return cls_.is_torsion(); }
  ExtendedSlope slope() const { return curvegen::slope(cls_); }
  /// Class of all copies together.
  ChernPair total() const { return cls_.scaled(multiplicity_); }
  /// Line bundles are stable; higher rank needs the flag.
  bool is_simple() const noexcept { return cls_.rank() == 1 || (cls_.rank() > 1 && annotations_.stable); }

  SemistablePiece with_class(ChernPair cls) const;
  SemistablePiece with_annotations(PieceAnnotations annotations) const;

  friend bool operator==(const SemistablePiece&, const SemistablePiece&) = default;

 private:
  ChernPair cls_;
  std::int64_t multiplicity_;
  PieceAnnotations annotations_;
};

enum class Splitting {
  Split,   ///< pieces are genuine direct summands
  HNOnly,  ///< pieces are only the Harder-Narasimhan factors
};

/// A coherent sheaf given by semistable pieces.
class FormalSheaf {
 public:
  FormalSheaf(std::vector<SemistablePiece> pieces, Splitting splitting = Splitting::Split);

  const std::vector<SemistablePiece>& pieces() const noexcept { return pieces_; }
  Splitting splitting() const noexcept { return splitting_; }
  bool is_split() const noexcept { return splitting_ == Splitting::Split; }

  bool has_torsion() const;
  bool is_torsion() const;

  FormalSheaf with_splitting(Splitting splitting) const { return FormalSheaf(pieces_, splitting); }

  friend bool operator==(const FormalSheaf&, const FormalSheaf&) = default;

 private:
  std::vector<SemistablePiece> pieces_;
  Splitting splitting_;
};

/// An object of D^b(C), i.e. the direct sum of its cohomology sheaves
/// placed in their degrees. Degree i holds H^i.
class FormalObject {
 public:
  /// Throws Error(ZeroSheaf) when empty, Error(InvalidArgument) when two
  /// pieces share an id label but not a class.
  explicit FormalObject(std::map<std::int64_t, FormalSheaf> graded);

  static FormalObject sheaf(FormalSheaf sheaf, std::int64_t degree = 0);

  const std::map<std::int64_t, FormalSheaf>& graded() const noexcept { return graded_; }

  struct PieceRef {
    std::int64_t degree;
    std::size_t index;
    const SemistablePiece* piece;
  };
  /// Every piece in increasing degree, then in stored order.
  std::vector<PieceRef> pieces() const;

  bool has_annotations() const;

  friend bool operator==(const FormalObject&, const FormalObject&) = default;

 private:
  std::map<std::int64_t, FormalSheaf> graded_;
};

/// Merge equal-slope pieces and sort by strictly decreasing slope.
///
/// Identical pieces (same class and annotations) merge by adding
/// multiplicities and keep their annotations. Otherwise the merged piece
/// carries the summed class with multiplicity one and no annotations.
FormalSheaf hn_normalize(const FormalSheaf& sheaf);

/// (mu_max, mu_min): slopes of the first and last HN factor.
std::pair<ExtendedSlope, ExtendedSlope> mu_extremes(const FormalSheaf& sheaf);
/// Extremes over every piece of every degree.
std::pair<ExtendedSlope, ExtendedSlope> mu_extremes(const FormalObject& object);

enum class Support { Torsion, LocallyFree, Mixed };

struct Classification {
  Support support;
  /// Common slope when the object is semistable.
  std::optional<ExtendedSlope> semistable_slope;

  bool is_semistable() const noexcept { return semistable_slope.has_value(); }
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const FormalObject& object);

std::string_view to_string(Support support);

/// E[n]: H^i(E[n]) = H^{i+n}(E), so degree i moves to i - n.
FormalObject shift(const FormalObject& object, std::int64_t n);
/// Tensor with a line bundle of degree t. Drops h0 and id annotations.
FormalObject twist(const FormalObject& object, std::int64_t t);
/// Derived dual. Requires locally free split input; throws
/// Error(NotLocallyFree) / Error(NotSplit).
FormalObject dual(const FormalObject& object);
/// Derived tensor product of two locally free split objects.
FormalObject tensor(const FormalObject& a, const FormalObject& b);

/// On the projective line every bundle splits, so HN data is a splitting.
FormalObject coerce_split(const FormalObject& object);
/// coerce_split at genus zero, identity otherwise.
FormalObject adapt_to_curve(const FormalObject& object, const Curve& curve);

/// Object-level Euler pairing, sum over degrees of (-1)^(j-i) chi(H^i(E), H^j(F)).
std::int64_t euler_pairing(const FormalObject& e, const FormalObject& f, const Curve& curve);

/// Checks an h0 annotation against what Riemann-Roch forces for a
/// semistable bundle: h0 >= chi(O, E), h0 = 0 for negative slope and
/// h0 = chi(O, E) once the slope exceeds 2g - 2.
bool h0_consistent(const SemistablePiece& piece, const Curve& curve);

}  // namespace curvegen
