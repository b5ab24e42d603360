#include "cayley/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cayley/errors.hpp"

namespace cayley::primes {

namespace {

constexpr std::int64_t kSieveRangeMax = 1'000'000'000;
constexpr std::uint32_t kSharedLimit = 1'000'000;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

SieveTable::SieveTable(std::uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
    if (limit < 2) throw std::invalid_argument("SieveTable: limit must be >= 2");
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = i;
            primes_.push_back(i);
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[i] || static_cast<u64>(p) * i > limit) break;
            spf_[p * i] = p;
        }
    }
}

bool SieveTable::is_prime(std::uint64_t n) const {
    if (n > limit_) throw std::invalid_argument("SieveTable::is_prime: n exceeds table limit");
    if (n < 2) return false;
    return spf_[static_cast<std::uint32_t>(n)] == n;
}

std::uint32_t SieveTable::smallest_factor(std::uint32_t n) const {
    if (n < 2 || n > limit_) throw std::invalid_argument("SieveTable::smallest_factor: n out of range");
    return spf_[n];
}

const SieveTable& shared_sieve() {
    static const SieveTable table(kSharedLimit);
    return table;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
    if (lo < 2) lo = 2;
    if (hi > kSieveRangeMax) {
        throw scale_error("primes_in: hi > 10^9 exceeds the segmented sieve range");
    }
    std::vector<std::int64_t> out;
    if (hi < lo) return out;

    const auto& base = shared_sieve().primes();
    constexpr std::int64_t kSegment = 1 << 18;
    std::vector<std::uint8_t> composite;
    for (std::int64_t a = lo; a <= hi; a += kSegment) {
        std::int64_t b = std::min(hi, a + kSegment - 1);
        composite.assign(static_cast<std::size_t>(b - a + 1), 0);
        for (std::uint32_t p : base) {
            std::int64_t pp = static_cast<std::int64_t>(p) * p;
            if (pp > b) break;
            std::int64_t start = std::max(pp, (a + p - 1) / p * p);
            for (std::int64_t m = start; m <= b; m += p) {
                composite[static_cast<std::size_t>(m - a)] = 1;
            }
        }
        for (std::int64_t n = a; n <= b; ++n) {
            if (!composite[static_cast<std::size_t>(n - a)]) out.push_back(n);
        }
    }
    return out;
}

std::vector<std::int64_t> primes_in(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("primes_in: endpoints must be finite");
    }
    if (hi > static_cast<double>(kSieveRangeMax)) {
        throw scale_error("primes_in: hi > 10^9 exceeds the segmented sieve range");
    }
    double lo_c = std::ceil(lo);
    double hi_f = std::floor(hi);
    if (hi_f < lo_c) return {};
    return primes_in_range(static_cast<std::int64_t>(lo_c), static_cast<std::int64_t>(hi_f));
}

bool is_prime64(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for all 64-bit n with this base set.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// Brent's variant of Pollard rho; n odd composite with no factor <= 1000.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        const u64 m = 128;
        u64 y = 2, r = 1, q = 1, x = 0, ys = 0, d = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                u64 batch = std::min(m, r - k);
                for (u64 i = 0; i < batch; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q == 0 ? n : q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // Redo the last batch one step at a time.
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                u64 diff = x > ys ? x - ys : ys - x;
                d = std::gcd(diff == 0 ? n : diff, n);
            } while (d == 1);
        }
        if (d != n) return d;  // else the cycle closed without a split; retry
    }
}

void factor_recursive(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_recursive(d, out);
    factor_recursive(n / d, out);
}

} // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    std::vector<std::pair<u64, int>> out;
    if (n == 1) return out;

    const auto& sieve = shared_sieve();
    if (n <= sieve.limit()) {
        auto m = static_cast<std::uint32_t>(n);
        while (m > 1) {
            std::uint32_t p = sieve.smallest_factor(m);
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        return out;
    }

    for (std::uint32_t p : sieve.primes()) {
        if (p > 1000 || static_cast<u64>(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        std::vector<u64> rest;
        factor_recursive(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            out.emplace_back(rest[i], static_cast<int>(j - i));
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int big_omega(std::uint64_t n) {
    if (n == 0) throw std::domain_error("big_omega: n must be >= 1");
    int total = 0;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        total += e;
    }
    return total;
}

int little_omega(std::uint64_t n) {
    if (n == 0) throw std::domain_error("little_omega: n must be >= 1");
    return static_cast<int>(factorize(n).size());
}

int mobius(std::uint64_t n) {
    if (n == 0) throw std::domain_error("mobius: n must be >= 1");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::domain_error("euler_phi: n must be >= 1");
    std::uint64_t result = n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        result -= result / p;
    }
    return result;
}

} // namespace cayley::primes
