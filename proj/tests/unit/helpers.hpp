#pragma once

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "curvegen/formal_object.hpp"

namespace curvegen::test {

inline SemistablePiece b(std::int64_t r, std::int64_t d, PieceAnnotations ann = {}) {
  return SemistablePiece::bundle(r, d, std::move(ann));
}

inline SemistablePiece t(std::int64_t len) { return SemistablePiece::torsion(len); }

inline PieceAnnotations labelled(std::string id) {
  PieceAnnotations ann;
  ann.id = std::move(id);
  return ann;
}

/// A sheaf in degree 0.
inline FormalObject sheaf(std::vector<SemistablePiece> pieces, Splitting s = Splitting::Split) {
  return FormalObject::sheaf(FormalSheaf(std::move(pieces), s));
}

inline FormalObject graded(std::initializer_list<std::pair<const std::int64_t, std::vector<SemistablePiece>>> parts) {
  std::map<std::int64_t, FormalSheaf> out;
  for (const auto& [degree, pieces] : parts) out.emplace(degree, FormalSheaf(pieces));
  return FormalObject(std::move(out));
}

/// chi(E, F) = rE rF (1 - g) + rE dF - rF dE, torsion included (rank 0,
/// degree = length). Written independently of the engine's slope form.
inline std::int64_t chi_oracle(const ChernPair& e, const ChernPair& f, std::int64_t genus) {
  return e.rank() * f.rank() * (1 - genus) + e.rank() * f.degree() - f.rank() * e.degree();
}

}  // namespace curvegen::test
