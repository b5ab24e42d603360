#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cayley::primes {

// Smallest-prime-factor table for [0, limit].
class SieveTable {
public:
    explicit SieveTable(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    bool is_prime(std::uint64_t n) const;
    // Smallest prime factor of n (n >= 2, n <= limit).
    std::uint32_t smallest_factor(std::uint32_t n) const;
    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

// Process-wide table with limit 10^6, built once, immutable afterwards.
const SieveTable& shared_sieve();

// All primes p with lo <= p <= hi, ascending.  Real endpoints; the integer
// window is [ceil(lo), floor(hi)].  hi > 10^9 is refused with scale_error.
std::vector<std::int64_t> primes_in(double lo, double hi);
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

// Deterministic Miller-Rabin, exact for all 64-bit n.
bool is_prime64(std::uint64_t n);

// Full factorization of n >= 1, sorted by prime ((prime, exponent) pairs).
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Classical arithmetic functions; n = 0 throws domain_error.
int big_omega(std::uint64_t n);
int little_omega(std::uint64_t n);
int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

} // namespace cayley::primes
