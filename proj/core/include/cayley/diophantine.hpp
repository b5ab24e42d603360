#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace cayley::diophantine {

// Signs beta_j in {+1, -1} for the form beta1*p1 + beta2*p2 + beta3*p3 + beta4*p4.
struct SignVector {
    std::array<int, 4> beta;

    // Throws invalid_argument unless every entry is +-1, and domain_error
    // when all four signs are equal (the equation is then insoluble).
    static SignVector validated(const std::array<int, 4>& beta);
};

struct Interval {
    std::int64_t lo;
    std::int64_t hi;

    bool contains(std::int64_t n) const { return lo <= n && n <= hi; }
    bool empty() const { return hi < lo; }
    std::int64_t length() const { return empty() ? 0 : hi - lo + 1; }
};

// Four prime search windows.  Built either from explicit integer ranges or
// from proportions eta at height bound B, as
//   I_j = [eta_j*B^(1/3) - B^(1/3)/log B, eta_j*B^(1/3) + B^(1/3)/log B].
// Endpoints from eta are evaluated in double-double arithmetic, widened
// outward by one ulp, then rounded to the integer window; this keeps the
// integer windows stable across B and consistent between the prime solver
// and the integer count below.
struct IntervalSpec {
    std::array<Interval, 4> ranges;
    std::optional<std::array<double, 4>> eta;
    std::optional<std::int64_t> B;

    static IntervalSpec from_eta(const std::array<double, 4>& eta, std::int64_t B);
    static IntervalSpec from_ranges(const std::array<Interval, 4>& ranges);
};

// One solution of beta1*p1 + ... + beta4*p4 = 0 in primes p_j in I_j,
// weighted by log p1 * log p2 * log p3 * log p4.
struct PrimeSolution {
    std::array<std::int64_t, 4> p;
    double weight;
};

// All solutions, sorted lexicographically by (p1, p2, p3, p4); with limit,
// the first `limit` of that order.  Meet-in-the-middle over (p1, p2).
std::vector<PrimeSolution> solve_prime_equation(const SignVector& beta,
                                                const IntervalSpec& spec,
                                                std::optional<std::size_t> limit = std::nullopt);

// R = sum of weights, compensated summation in solver order.
double weighted_R(const std::vector<PrimeSolution>& solutions);

// J = #{(n1,n2,n3,n4) integral, n_j in I_j, beta1*n1 + ... + beta4*n4 = 0},
// exact, via convolution of interval overlap counts.
std::uint64_t count_J(const SignVector& beta, const IntervalSpec& spec);

struct JLowerBound {
    bool ok;            // J >= (2/3)^3 * (1/8) * B / (log B)^3
    std::uint64_t J;
    double bound;
    double ratio;       // J / bound
};

// Requires spec built from eta (from_eta) with sum beta_j * eta_j = 0;
// anything else is rejected with invalid_argument / domain_error.
JLowerBound lower_bound_check_J(const IntervalSpec& spec, const SignVector& beta);

} // namespace cayley::diophantine
