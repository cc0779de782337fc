#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "curvegen/formal_object.hpp"

namespace curvegen::p1 {

/// O(twist)[shift]^multiplicity on the projective line.
struct Summand {
  std::int64_t twist;
  std::int64_t shift = 0;
  std::int64_t multiplicity = 1;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// A direct sum of shifted line bundles on P^1. Every locally free object
/// of D^b(P^1) has this form.
class P1Object {
 public:
  explicit P1Object(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const noexcept { return summands_; }
  FormalObject to_formal() const;

 private:
  std::vector<Summand> summands_;
};

/// h^0(O(n)), by counting degree-n monomials in two variables.
std::int64_t h0(std::int64_t n);
/// h^1(O(n)) = h^0(O(-2 - n)) by Serre duality with K = O(-2).
std::int64_t h1(std::int64_t n);

/// dim Hom(O(a), O(b)) = h^0(O(b - a)).
std::int64_t hom_dim(std::int64_t a, std::int64_t b);
/// dim Ext^1(O(a), O(b)) = h^1(O(b - a)).
std::int64_t ext1_dim(std::int64_t a, std::int64_t b);

/// dim Ext^k(e, f) for every k with a nonzero space.
std::map<std::int64_t, std::int64_t> ext_dims(const P1Object& e, const P1Object& f);

struct EulerCrossCheck {
  std::int64_t pairs = 0;
  std::int64_t failures = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> failing;
};

/// Compares hom_dim - ext1_dim with the Riemann-Roch pairing at genus zero
/// for every (a, b) in [-max_deg, max_deg]^2.
EulerCrossCheck euler_cross_check(std::int64_t max_deg);

/// All (a, b) in range with Hom and Ext^1 both zero, in lexicographic order.
std::vector<std::pair<std::int64_t, std::int64_t>> semiorthogonal_pairs(std::int64_t max_deg);

}  // namespace curvegen::p1
