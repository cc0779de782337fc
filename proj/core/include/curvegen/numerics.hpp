#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "curvegen/rational.hpp"

namespace curvegen {

/// A slope in Q extended by a top element. Torsion sheaves have slope
/// infinity, which compares above every finite value.
class ExtendedSlope {
 public:
  ExtendedSlope(Rational finite) : value_(finite) {}  // NOLINT(google-explicit-constructor)

  static ExtendedSlope infinity() { return ExtendedSlope(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  friend bool operator==(const ExtendedSlope&, const ExtendedSlope&) = default;
  friend std::strong_ordering operator<=>(const ExtendedSlope& lhs, const ExtendedSlope& rhs);

  /// "inf" or the rational in p/q form.
  std::string to_string() const;

 private:
  ExtendedSlope() = default;
  std::optional<Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedSlope& slope);

/// Numerical class (rank, degree) of a coherent sheaf on a curve. Torsion
/// classes have rank 0 and degree equal to their length.
class ChernPair {
 public:
  /// Throws Error(ZeroSheaf) for (0, 0) and Error(InvalidArgument) for a
  /// negative rank or a torsion class of negative length.
  ChernPair(std::int64_t rank, std::int64_t degree);

  static ChernPair torsion(std::int64_t length) { return ChernPair(0, length); }

  std::int64_t rank() const noexcept { return rank_; }
  std::int64_t degree() const noexcept { return degree_; }
  bool is_torsion() const noexcept { return rank_ == 0; }
  std::int64_t length() const noexcept { return rank_ == 0 ? degree_ : 0; }

  /// n copies of this class; n must be positive.
  ChernPair scaled(std::int64_t n) const;

  friend ChernPair operator+(const ChernPair& a, const ChernPair& b);
  friend bool operator==(const ChernPair&, const ChernPair&) = default;

  std::string to_string() const;

 private:
  std::int64_t rank_;
  std::int64_t degree_;
};

std::ostream& operator<<(std::ostream& os, const ChernPair& c);

class Curve {
 public:
  explicit Curve(std::int64_t genus);

  std::int64_t genus() const noexcept { return genus_; }
  /// deg K_C = 2g - 2.
  std::int64_t canonical_degree() const noexcept { return 2 * genus_ - 2; }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  std::int64_t genus_;
};

ExtendedSlope slope(const ChernPair& c);

/// chi(E, F) = sum (-1)^i dim Ext^i(E, F).
///
/// For bundles this is rk(E) rk(F) (1 - g - mu(E) + mu(F)), evaluated in
/// exact rational arithmetic and checked to be integral. Torsion classes
/// extend it biadditively: chi(bundle, T) = rk * len, chi(T, bundle) =
/// -rk * len, chi(T, T') = 0.
std::int64_t euler_pairing(const ChernPair& e, const ChernPair& f, const Curve& curve);

/// Numerical effect of tensoring with the canonical bundle. Torsion
/// classes are unchanged.
ChernPair serre_twist(const ChernPair& e, const Curve& curve);

}  // namespace curvegen
