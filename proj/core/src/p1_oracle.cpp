#include "curvegen/p1_oracle.hpp"

#include "curvegen/error.hpp"

namespace curvegen::p1 {

P1Object::P1Object(std::vector<Summand> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw Error(ErrorCode::ZeroSheaf, "empty P^1 object");
  for (const auto& s : summands_) {
    if (s.multiplicity <= 0) throw Error(ErrorCode::InvalidArgument, "summand multiplicity must be positive");
  }
}

FormalObject P1Object::to_formal() const {
  std::map<std::int64_t, std::vector<SemistablePiece>> by_degree;
  for (const auto& s : summands_) {
    by_degree[-s.shift].emplace_back(ChernPair(1, s.twist), s.multiplicity);
  }
  std::map<std::int64_t, FormalSheaf> graded;
  for (auto& [degree, pieces] : by_degree) graded.emplace(degree, FormalSheaf(std::move(pieces)));
  return FormalObject(std::move(graded));
}

std::int64_t h0(std::int64_t n) {
  // x^i y^(n-i), i = 0..n
  std::int64_t count = 0;
  for (std::int64_t i = 0; i <= n; ++i) ++count;
  return count;
}

std::int64_t h1(std::int64_t n) { return h0(-2 - n); }

std::int64_t hom_dim(std::int64_t a, std::int64_t b) { return h0(b - a); }

std::int64_t ext1_dim(std::int64_t a, std::int64_t b) { return h1(b - a); }

std::map<std::int64_t, std::int64_t> ext_dims(const P1Object& e, const P1Object& f) {
  // Ext^k(O(a)[s], O(b)[t]) = Ext^{k+t-s}(O(a), O(b))
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& x : e.summands()) {
    for (const auto& y : f.summands()) {
      const std::int64_t copies = x.multiplicity * y.multiplicity;
      const std::int64_t base = x.shift - y.shift;
      if (auto h = hom_dim(x.twist, y.twist)) out[base] += copies * h;
      if (auto h = ext1_dim(x.twist, y.twist)) out[base + 1] += copies * h;
    }
  }
  return out;
}

EulerCrossCheck euler_cross_check(std::int64_t max_deg) {
  if (max_deg < 1) throw Error(ErrorCode::InvalidArgument, "max_deg must be positive");
  const Curve p1(0);
  EulerCrossCheck out;
  for (std::int64_t a = -max_deg; a <= max_deg; ++a) {
    for (std::int64_t b = -max_deg; b <= max_deg; ++b) {
      ++out.pairs;
      const std::int64_t oracle = hom_dim(a, b) - ext1_dim(a, b);
      if (oracle != euler_pairing(ChernPair(1, a), ChernPair(1, b), p1)) {
        ++out.failures;
        out.failing.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> semiorthogonal_pairs(std::int64_t max_deg) {
  if (max_deg < 1) throw Error(ErrorCode::InvalidArgument, "max_deg must be positive");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = -max_deg; a <= max_deg; ++a) {
    for (std::int64_t b = -max_deg; b <= max_deg; ++b) {
      if (hom_dim(a, b) == 0 && ext1_dim(a, b) == 0) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace curvegen::p1
