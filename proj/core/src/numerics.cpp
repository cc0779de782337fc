#include "curvegen/numerics.hpp"

#include <ostream>
#include <stdexcept>

#include "curvegen/error.hpp"

namespace curvegen {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroSheaf: return "ZeroSheaf";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotLocallyFree: return "NotLocallyFree";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotSemistable: return "NotSemistable";
    case ErrorCode::UnknownAssumptionTarget: return "UnknownAssumptionTarget";
    case ErrorCode::InconsistentAssumption: return "InconsistentAssumption";
    case ErrorCode::VerdictMismatch: return "VerdictMismatch";
  }
  return "Unknown";
}

const Rational& ExtendedSlope::value() const {
  if (!value_) throw std::logic_error("infinite slope has no finite value");
  return *value_;
}

std::strong_ordering operator<=>(const ExtendedSlope& lhs, const ExtendedSlope& rhs) {
  if (lhs.is_infinite() || rhs.is_infinite()) {
    return lhs.is_infinite() <=> rhs.is_infinite();
  }
  return *lhs.value_ <=> *rhs.value_;
}

std::string ExtendedSlope::to_string() const { return value_ ? value_->to_string() : "inf"; }

std::ostream& operator<<(std::ostream& os, const ExtendedSlope& slope) { return os << slope.to_string(); }

ChernPair::ChernPair(std::int64_t rank, std::int64_t degree) : rank_(rank), degree_(degree) {
  if (rank < 0) throw Error(ErrorCode::InvalidArgument, "negative rank " + std::to_string(rank));
  if (rank == 0 && degree == 0) throw Error(ErrorCode::ZeroSheaf, "zero class (rank 0, degree 0)");
  if (rank == 0 && degree < 0) {
    throw Error(ErrorCode::InvalidArgument, "torsion class of negative length " + std::to_string(degree));
  }
}

ChernPair ChernPair::scaled(std::int64_t n) const {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "multiplicity must be positive");
  return ChernPair(checked::mul(rank_, n), checked::mul(degree_, n));
}

ChernPair operator+(const ChernPair& a, const ChernPair& b) {
  return ChernPair(checked::add(a.rank_, b.rank_), checked::add(a.degree_, b.degree_));
}

std::string ChernPair::to_string() const {
  return "(" + std::to_string(rank_) + "," + std::to_string(degree_) + ")";
}

std::ostream& operator<<(std::ostream& os, const ChernPair& c) { return os << c.to_string(); }

Curve::Curve(std::int64_t genus) : genus_(genus) {
  if (genus < 0) throw Error(ErrorCode::InvalidArgument, "negative genus " + std::to_string(genus));
}

ExtendedSlope slope(const ChernPair& c) {
  if (c.is_torsion()) return ExtendedSlope::infinity();
  return Rational(c.degree(), c.rank());
}

std::int64_t euler_pairing(const ChernPair& e, const ChernPair& f, const Curve& curve) {
  if (e.is_torsion() && f.is_torsion()) return 0;
  if (f.is_torsion()) return checked::mul(e.rank(), f.length());
  if (e.is_torsion()) return -checked::mul(f.rank(), e.length());

  const Rational mu_e = slope(e).value();
  const Rational mu_f = slope(f).value();
  const Rational chi = Rational(checked::mul(e.rank(), f.rank())) * (Rational(1 - curve.genus()) - mu_e + mu_f);
  if (!chi.is_integer()) {
    throw std::logic_error("Riemann-Roch produced a non-integral Euler characteristic " + chi.to_string());
  }
  return chi.num();
}

ChernPair serre_twist(const ChernPair& e, const Curve& curve) {
  if (e.is_torsion()) return e;
  return ChernPair(e.rank(), checked::add(e.degree(), checked::mul(e.rank(), curve.canonical_degree())));
}

}  // namespace curvegen
