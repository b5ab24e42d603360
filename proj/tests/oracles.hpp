#pragma once

// Brute-force oracles for the test suites, written against the definitions
// directly and independent of the library implementations.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "cayley/torsor.hpp"

namespace oracles {

using Vec4 = std::array<std::int64_t, 4>;
using i128 = __int128;

inline i128 form(const Vec4& x) {
    i128 a = x[0], b = x[1], c = x[2], d = x[3];
    return b * c * d + a * c * d + a * b * d + a * b * c;
}

inline bool is_zero(const Vec4& x) { return !x[0] && !x[1] && !x[2] && !x[3]; }

inline bool on_line(const Vec4& x) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (x[i] == 0 && x[j] == 0) return true;
        }
    }
    return (x[0] + x[1] == 0 && x[2] + x[3] == 0) ||
           (x[0] + x[2] == 0 && x[1] + x[3] == 0) ||
           (x[0] + x[3] == 0 && x[1] + x[2] == 0);
}

inline bool primitive(const Vec4& x) {
    std::uint64_t g = 0;
    for (auto c : x) g = std::gcd(g, static_cast<std::uint64_t>(c < 0 ? -c : c));
    return g == 1;
}

// N(B) straight from the set definition, quadruple loop.
inline std::uint64_t naive_N(std::int64_t B) {
    std::uint64_t n = 0;
    Vec4 x;
    for (x[0] = -B; x[0] <= B; ++x[0])
        for (x[1] = -B; x[1] <= B; ++x[1])
            for (x[2] = -B; x[2] <= B; ++x[2])
                for (x[3] = -B; x[3] <= B; ++x[3]) {
                    if (is_zero(x)) continue;
                    if (form(x) != 0 || on_line(x) || !primitive(x)) continue;
                    ++n;
                }
    return n;
}

inline bool naive_is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::int64_t> naive_primes(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
        if (naive_is_prime(n)) out.push_back(n);
    }
    return out;
}

struct Range {
    std::int64_t lo, hi;
};

// All prime quadruples with sum beta_j p_j = 0, quadruple loop.
inline std::vector<Vec4> naive_prime_solutions(const std::array<int, 4>& beta,
                                               const std::array<Range, 4>& r) {
    std::array<std::vector<std::int64_t>, 4> P;
    for (int j = 0; j < 4; ++j) P[j] = naive_primes(r[j].lo, r[j].hi);
    std::vector<Vec4> out;
    for (auto p1 : P[0])
        for (auto p2 : P[1])
            for (auto p3 : P[2])
                for (auto p4 : P[3]) {
                    if (beta[0] * p1 + beta[1] * p2 + beta[2] * p3 + beta[3] * p4 == 0) {
                        out.push_back({p1, p2, p3, p4});
                    }
                }
    return out;
}

// Integer solution count, triple loop with membership test for the last slot.
inline std::uint64_t naive_J(const std::array<int, 4>& beta, const std::array<Range, 4>& r) {
    std::uint64_t n = 0;
    for (std::int64_t m1 = r[0].lo; m1 <= r[0].hi; ++m1)
        for (std::int64_t m2 = r[1].lo; m2 <= r[1].hi; ++m2)
            for (std::int64_t m3 = r[2].lo; m3 <= r[2].hi; ++m3) {
                // beta4 * m4 = -(b1 m1 + b2 m2 + b3 m3), beta4 = +-1
                std::int64_t m4 = -beta[3] * (beta[0] * m1 + beta[1] * m2 + beta[2] * m3);
                if (m4 >= r[3].lo && m4 <= r[3].hi) ++n;
            }
    return n;
}

// Random valid torsor coordinates: small y, z mostly 1 with occasional small
// values, last y solved from the equation; library check_constraints is the
// accept filter (the round-trip property is what the tests then exercise).
template <class URBG>
std::optional<cayley::torsor::TorsorCoords> try_random_coords(URBG& rng) {
    std::uniform_int_distribution<int> zroll(0, 9);
    std::uniform_int_distribution<std::int64_t> zval(2, 5);
    std::uniform_int_distribution<std::int64_t> yval(-9, 9);

    cayley::torsor::TorsorCoords t;
    for (auto& z : t.z) z = zroll(rng) < 7 ? 1 : zval(rng);
    for (int j = 0; j < 3; ++j) {
        std::int64_t y = 0;
        while (y == 0) y = yval(rng);
        t.y[static_cast<std::size_t>(j)] = y;
    }
    auto coeff = [&](int i) {
        std::int64_t c = 1;
        for (int idx = 0; idx < 6; ++idx) {
            auto [a, b] = cayley::torsor::kPairs[static_cast<std::size_t>(idx)];
            if (a != i && b != i) c *= t.z[static_cast<std::size_t>(idx)];
        }
        return c;
    };
    std::int64_t num = coeff(0) * t.y[0] + coeff(1) * t.y[1] + coeff(2) * t.y[2];
    std::int64_t c4 = coeff(3);
    if (num % c4 != 0) return std::nullopt;
    t.y[3] = -num / c4;
    if (t.y[3] == 0) return std::nullopt;
    try {
        if (!cayley::torsor::check_constraints(t)) return std::nullopt;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return t;
}

template <class URBG>
cayley::torsor::TorsorCoords random_coords(URBG& rng) {
    for (;;) {
        if (auto t = try_random_coords(rng)) return *t;
    }
}

} // namespace oracles
