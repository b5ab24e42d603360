#include "cayley/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/primes.hpp"

namespace cayley::series {

namespace {

using u64 = std::uint64_t;

struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Sum of 1/phi(q)^3 over lo_excl < q <= hi_incl, phi by segmented sieve.
double sum_inv_phi_cubed(u64 lo_excl, u64 hi_incl) {
    const auto& base = primes::shared_sieve().primes();
    Kahan acc;
    constexpr u64 kBlock = 1 << 17;
    std::vector<u64> rem(kBlock);
    std::vector<u64> ph(kBlock);
    for (u64 a = lo_excl + 1; a <= hi_incl; a += kBlock) {
        u64 b = std::min(hi_incl, a + kBlock - 1);
        std::size_t n = static_cast<std::size_t>(b - a + 1);
        for (std::size_t i = 0; i < n; ++i) {
            rem[i] = a + i;
            ph[i] = 1;
        }
        for (std::uint32_t p : base) {
            if (static_cast<u64>(p) * p > b) break;
            u64 start = (a + p - 1) / p * p;
            for (u64 m = start; m <= b; m += p) {
                auto i = static_cast<std::size_t>(m - a);
                u64 pk = 1;
                while (rem[i] % p == 0) {
                    rem[i] /= p;
                    pk *= p;
                }
                ph[i] *= pk / p * (p - 1);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            double phi = static_cast<double>(rem[i] > 1 ? ph[i] * (rem[i] - 1) : ph[i]);
            acc.add(1.0 / (phi * phi * phi));
        }
    }
    return acc.sum;
}

} // namespace

SeriesEstimate singular_series_sum(std::uint64_t P) {
    if (P < 1) throw std::invalid_argument("singular_series_sum: P must be >= 1");
    if (P > 10'000'000) {
        throw scale_error("singular_series_sum: P > 10^7 exceeds the sieve budget");
    }

    Kahan main;
    main.add(1.0);  // q = 1
    if (P >= 2) {
        // Linear sieve of phi and mu up to P; increasing q keeps the tiny
        // terms absorbed by the compensation.
        std::vector<std::uint32_t> phi(P + 1);
        std::vector<std::int8_t> mu(P + 1);
        std::vector<std::uint8_t> comp(P + 1, 0);
        std::vector<std::uint32_t> ps;
        phi[1] = 1;
        mu[1] = 1;
        for (u64 i = 2; i <= P; ++i) {
            if (!comp[i]) {
                ps.push_back(static_cast<std::uint32_t>(i));
                phi[i] = static_cast<std::uint32_t>(i - 1);
                mu[i] = -1;
            }
            for (std::uint32_t p : ps) {
                u64 ip = i * p;
                if (ip > P) break;
                comp[ip] = 1;
                if (i % p == 0) {
                    phi[ip] = phi[i] * p;
                    mu[ip] = 0;
                    break;
                }
                phi[ip] = phi[i] * (p - 1);
                mu[ip] = static_cast<std::int8_t>(-mu[i]);
            }
        }
        for (u64 q = 2; q <= P; ++q) {
            if (mu[q] == 0) continue;
            double d = phi[q];
            main.add(1.0 / (d * d * d));
        }
    }

    // Tail: exact window (P, 10P] plus the integral bound past 10P from
    // phi(q) >= sqrt(q/2).
    double window = sum_inv_phi_cubed(P, 10 * P);
    double past = 2.0 * std::pow(2.0, 1.5) / std::sqrt(static_cast<double>(10 * P));
    return SeriesEstimate{main.sum, P, Method::sum, window + past};
}

SeriesEstimate singular_series_product(std::uint64_t prime_cutoff) {
    if (prime_cutoff < 2) {
        throw std::invalid_argument("singular_series_product: cutoff must be >= 2");
    }
    if (prime_cutoff > 1'000'000'000) {
        throw scale_error("singular_series_product: cutoff > 10^9 exceeds the sieve range");
    }
    double value = 1.0;
    constexpr std::int64_t kChunk = 8'000'000;
    auto cutoff = static_cast<std::int64_t>(prime_cutoff);
    for (std::int64_t a = 2; a <= cutoff; a += kChunk) {
        std::int64_t b = std::min(cutoff, a + kChunk - 1);
        for (std::int64_t p : primes::primes_in_range(a, b)) {
            double d = static_cast<double>(p) - 1.0;
            value *= 1.0 + 1.0 / (d * d * d);
        }
    }
    // Sum over p > cutoff of (p-1)^-3 is at most the integral bound T;
    // the omitted factors multiply to at most exp(T).
    double c = static_cast<double>(prime_cutoff) - 1.0;
    double T = 0.5 / (c * c);
    return SeriesEstimate{value, prime_cutoff, Method::product, value * std::expm1(T)};
}

double main_term(std::uint64_t J, const SeriesEstimate& S) {
    return static_cast<double>(J) * S.value;
}

} // namespace cayley::series
