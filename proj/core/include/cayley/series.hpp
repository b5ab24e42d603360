#pragma once

#include <cstdint>

namespace cayley::series {

enum class Method { sum, product };

struct SeriesEstimate {
    double value;
    std::uint64_t cutoff;
    Method method;
    double tail_bound;  // rigorous bound on |limit - value|
};

// S = sum over squarefree q >= 1 of mu(q)^2 / phi(q)^3, truncated at q <= P.
// Tail bound: exact sum of 1/phi(q)^3 over P < q <= 10P plus an integral
// bound from phi(q) >= sqrt(q/2).  P > 10^7 is refused with scale_error.
SeriesEstimate singular_series_sum(std::uint64_t P);

// S = product over primes p <= cutoff of (1 + 1/(p-1)^3).
// cutoff > 10^9 is refused with scale_error.
SeriesEstimate singular_series_product(std::uint64_t prime_cutoff);

// Expected main term J * S for the weighted solution count R.
double main_term(std::uint64_t J, const SeriesEstimate& S);

} // namespace cayley::series
