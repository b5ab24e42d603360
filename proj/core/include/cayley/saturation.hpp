#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/diophantine.hpp"
#include "cayley/geometry.hpp"

namespace cayley::saturation {

// A real target point [xi] on the surface, off the lines: all xi_i nonzero,
// all pair sums xi_k + xi_l nonzero, and F(xi) = 0 to relative tolerance
// 1e-12.  validated() throws domain_error naming the violated condition.
struct TargetPoint {
    std::array<double, 4> xi;

    static TargetPoint validated(const std::array<double, 4>& xi);
};

// Proportions and signs steering integral points toward the target:
//   eta_j = |c / xi_j|,  beta_j = sign(c / xi_j),  c = (xi1*xi2*xi3*xi4)^(1/3)
// (real cube root).  Satisfies sum beta_j * eta_j = 0 up to rounding.
struct TargetProfile {
    std::array<double, 4> eta;
    diophantine::SignVector beta;
};

TargetProfile profile(const TargetPoint& target);

// max_i |x_i / B - xi_i|.
double closeness(const geometry::Vec4& x, const TargetPoint& target, std::int64_t B);

// C such that every constructed point satisfies closeness <= C / log B:
// C = 2 * max_i sum_{j<k, j,k != i} eta_j * eta_k.
double closeness_constant(const TargetProfile& prof);

// Prime windows for the profile at height bound B.  Throws scale_error when
// B is too small for the construction (window shorter than 10 integers or
// reaching below 11).
diophantine::IntervalSpec intervals_for(const TargetProfile& prof, std::int64_t B);

struct ConstructedPoint {
    geometry::Vec4 x;                   // x_j = prod_{k != j} beta_k p_k
    std::array<std::int64_t, 4> p;      // the prime quadruple, p_j in I_j
    std::array<int, 4> beta;
    double closeness;
    int big_omega;                      // of |x1*x2*x3*x4|
    int little_omega;
};

// Points of U0 near the target at height bound B, from solutions of the
// prime equation with all four primes distinct.  Every returned point is
// verified exactly: on the surface, primitive, off the lines, 12 prime
// factors with multiplicity and 4 without, and closeness within
// closeness_constant(profile) / log B.
std::vector<ConstructedPoint> construct_points(const TargetPoint& target, std::int64_t B,
                                               std::optional<std::size_t> limit = std::nullopt);

// Same construction from an explicit window spec.  Closeness is computed
// relative to B_report; it is only asserted against the bound when
// assert_bound is set (synthetic small windows report it unchecked).
std::vector<ConstructedPoint> construct_from_spec(const TargetPoint& target,
                                                  const TargetProfile& prof,
                                                  const diophantine::IntervalSpec& spec,
                                                  std::int64_t B_report,
                                                  bool assert_bound,
                                                  std::optional<std::size_t> limit = std::nullopt);

// M(B, r): constructed points whose coordinate product has at most r prime
// factors with multiplicity.  r < 0 throws invalid_argument.
std::uint64_t count_M(const TargetPoint& target, std::int64_t B, int r);

} // namespace cayley::saturation
