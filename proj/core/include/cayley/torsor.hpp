#pragma once

#include <array>
#include <cstdint>

#include "cayley/geometry.hpp"

namespace cayley::torsor {

// z variables are indexed by coordinate pairs in lexicographic order:
// 0:(1,2) 1:(1,3) 2:(1,4) 3:(2,3) 4:(2,4) 5:(3,4).
inline constexpr std::array<std::pair<int, int>, 6> kPairs = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

// Index of the pair {i, j} (i != j, both in 0..3).
int pair_index(int i, int j);
// Index of the complementary pair {k, l} = {0,1,2,3} \ {i, j}.
int complement_index(int pair);

// Torsor variables: y_i nonzero integers, z_{ij} positive integers.
struct TorsorCoords {
    std::array<std::int64_t, 4> y;
    std::array<std::int64_t, 6> z;
};

// All torsor conditions: the stated coprimality relations
// (gcd(y_i, y_j) = 1, gcd(y_i, z_{ij}) = 1 for the two endpoints of each
// pair, gcd(z_{ij}, z_{kl}) = 1 for disjoint pairs), the torsor equation
//   z23*z24*z34*y1 + z13*z14*z34*y2 + z12*z14*z24*y3 + z12*z13*z23*y4 = 0,
// and nonvanishing of its three two-term partial sums.
// Domain violations (y_i = 0 or z_{ij} < 1) throw invalid_argument.
bool check_constraints(const TorsorCoords& t);

// x_i = (product of z over pairs containing i) * (product of y_j, j != i).
// Requires check_constraints(t); the image is a primitive point of U0
// (a failed postcondition throws consistency_error).
geometry::SurfacePoint lift(const TorsorCoords& t);

// v_{ij} = (z_ik*z_il*y_j + z_jk*z_jl*y_i) / z_ij, in pair order.
// Exactness of the division and the identities v_ij = -v_kl and
// v_1j*v_1k = z_1l^2*y_j*y_k - z_jk^2*y_1*y_l are verified on every call.
std::array<std::int64_t, 6> auxiliary_v(const TorsorCoords& t);

// Inverse of lift: the unique torsor representation of x, recovered from
// the valuation pattern of the coordinates prime by prime.
TorsorCoords descend(const geometry::SurfacePoint& x);

// N(B) via torsor enumeration: one representative per +-x pair is
// enumerated (y1 > 0) and the total is doubled.  B > 2000 is refused
// with scale_error.
std::uint64_t count_N_torsor(std::int64_t B);

} // namespace cayley::torsor
