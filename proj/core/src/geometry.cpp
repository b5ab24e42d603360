#include "cayley/geometry.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley::geometry {

namespace {

constexpr std::int64_t kNativeSafe = std::int64_t{1} << 20;
constexpr std::int64_t kDirectScanMax = 600;

bool all_small(const Vec4& x) {
    for (auto c : x) {
        if (c > kNativeSafe || c < -kNativeSafe) return false;
    }
    return true;
}

bool all_zero(const Vec4& x) {
    return x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0;
}

} // namespace

Int256 cubic_form(const Vec4& x) {
    if (all_small(x)) {
        // |x_i| <= 2^20 keeps every 3-fold product below 2^60 and the sum
        // below 2^62.
        std::int64_t f = x[1] * x[2] * x[3] + x[0] * x[2] * x[3] +
                         x[0] * x[1] * x[3] + x[0] * x[1] * x[2];
        return Int256(f);
    }
    Int256 a(x[0]), b(x[1]), c(x[2]), d(x[3]);
    return b * c * d + a * c * d + a * b * d + a * b * c;
}

bool on_line(const Vec4& x) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (x[i] == 0 && x[j] == 0) return true;
        }
    }
    return (x[0] + x[1] == 0 && x[2] + x[3] == 0) ||
           (x[0] + x[2] == 0 && x[1] + x[3] == 0) ||
           (x[0] + x[3] == 0 && x[1] + x[2] == 0);
}

bool is_primitive(const Vec4& x) {
    if (all_zero(x)) throw std::invalid_argument("is_primitive: zero vector");
    std::uint64_t g = 0;
    for (auto c : x) {
        std::uint64_t a = c < 0 ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        g = std::gcd(g, a);
    }
    return g == 1;
}

bool in_U0(const Vec4& x) {
    return !all_zero(x) && cubic_form(x) == 0 && !on_line(x);
}

SurfacePoint::SurfacePoint(const Vec4& x) : x_(x) {
    if (all_zero(x)) throw std::domain_error("SurfacePoint: zero vector");
    if (cubic_form(x) != 0) throw std::domain_error("SurfacePoint: not on the surface");
    if (on_line(x)) throw std::domain_error("SurfacePoint: on a line of the surface");
    if (!is_primitive(x)) throw std::domain_error("SurfacePoint: not primitive");
}

namespace {

// Scan a stride of the x1 range.  B <= kDirectScanMax keeps d and the
// triple product within int64.
std::uint64_t scan_x1_stride(std::int64_t B, std::int64_t first, std::int64_t step) {
    std::uint64_t count = 0;
    for (std::int64_t x1 = first; x1 <= B; x1 += step) {
        for (std::int64_t x2 = -B; x2 <= B; ++x2) {
            for (std::int64_t x3 = -B; x3 <= B; ++x3) {
                std::int64_t d = x2 * x3 + x1 * x3 + x1 * x2;
                std::int64_t n = x1 * x2 * x3;
                if (d != 0) {
                    if (n % d != 0) continue;
                    std::int64_t x4 = -(n / d);
                    if (x4 < -B || x4 > B) continue;
                    Vec4 x{x1, x2, x3, x4};
                    if (in_U0(x) && is_primitive(x)) ++count;
                } else if (n == 0) {
                    // d = 0 forces at least two zeros among x1..x3; every
                    // on-surface completion lies on a line, scanned anyway.
                    for (std::int64_t x4 = -B; x4 <= B; ++x4) {
                        Vec4 x{x1, x2, x3, x4};
                        if (in_U0(x) && is_primitive(x)) ++count;
                    }
                }
            }
        }
    }
    return count;
}

} // namespace

std::uint64_t count_N_direct(std::int64_t B, unsigned threads) {
    if (B <= 0) return 0;
    if (B > kDirectScanMax) {
        throw scale_error("count_N_direct: B > " + std::to_string(kDirectScanMax) +
                          " is beyond the supported exhaustive-scan range");
    }
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    std::int64_t span = 2 * B + 1;
    if (static_cast<std::int64_t>(threads) > span) threads = static_cast<unsigned>(span);

    if (threads == 1) return scan_x1_stride(B, -B, 1);

    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            partial[t] = scan_x1_stride(B, -B + static_cast<std::int64_t>(t),
                                        static_cast<std::int64_t>(threads));
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (auto c : partial) total += c;
    return total;
}

} // namespace cayley::geometry
