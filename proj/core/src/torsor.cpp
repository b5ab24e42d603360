#include "cayley/torsor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/primes.hpp"

namespace cayley::torsor {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(iabs(a), iabs(b));
}

// Coefficient of y_i in the torsor equation: product of z over the three
// pairs NOT containing i.
Int256 equation_coeff(const std::array<std::int64_t, 6>& z, int i) {
    Int256 c = 1;
    for (int idx = 0; idx < 6; ++idx) {
        if (kPairs[static_cast<std::size_t>(idx)].first != i &&
            kPairs[static_cast<std::size_t>(idx)].second != i) {
            c *= z[static_cast<std::size_t>(idx)];
        }
    }
    return c;
}

void require_domain(const TorsorCoords& t) {
    for (auto yi : t.y) {
        if (yi == 0) throw std::invalid_argument("TorsorCoords: y entries must be nonzero");
    }
    for (auto zij : t.z) {
        if (zij < 1) throw std::invalid_argument("TorsorCoords: z entries must be positive");
    }
}

} // namespace

int pair_index(int i, int j) {
    if (i == j || i < 0 || j < 0 || i > 3 || j > 3) {
        throw std::invalid_argument("pair_index: need distinct indices in 0..3");
    }
    if (i > j) std::swap(i, j);
    for (int idx = 0; idx < 6; ++idx) {
        if (kPairs[static_cast<std::size_t>(idx)] == std::pair<int, int>{i, j}) return idx;
    }
    return -1;  // unreachable
}

int complement_index(int pair) {
    if (pair < 0 || pair > 5) throw std::invalid_argument("complement_index: pair out of range");
    return 5 - pair;  // lexicographic order pairs complements symmetrically
}

bool check_constraints(const TorsorCoords& t) {
    require_domain(t);

    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (gcd64(t.y[static_cast<std::size_t>(i)], t.y[static_cast<std::size_t>(j)]) != 1) return false;
        }
    }
    for (int idx = 0; idx < 6; ++idx) {
        auto [i, j] = kPairs[static_cast<std::size_t>(idx)];
        std::int64_t zij = t.z[static_cast<std::size_t>(idx)];
        if (gcd64(t.y[static_cast<std::size_t>(i)], zij) != 1) return false;
        if (gcd64(t.y[static_cast<std::size_t>(j)], zij) != 1) return false;
    }
    for (int a = 0; a < 6; ++a) {
        for (int b = a + 1; b < 6; ++b) {
            if (gcd64(t.z[static_cast<std::size_t>(a)], t.z[static_cast<std::size_t>(b)]) != 1) return false;
        }
    }

    std::array<Int256, 4> term;
    Int256 total = 0;
    for (int i = 0; i < 4; ++i) {
        term[static_cast<std::size_t>(i)] = equation_coeff(t.z, i) * t.y[static_cast<std::size_t>(i)];
        total += term[static_cast<std::size_t>(i)];
    }
    if (total != 0) return false;
    for (int i = 1; i < 4; ++i) {
        if (term[0] + term[static_cast<std::size_t>(i)] == 0) return false;
    }
    return true;
}

geometry::SurfacePoint lift(const TorsorCoords& t) {
    if (!check_constraints(t)) {
        throw std::domain_error("lift: torsor constraints violated");
    }
    geometry::Vec4 x{};
    for (int i = 0; i < 4; ++i) {
        Int256 xi = 1;
        for (int idx = 0; idx < 6; ++idx) {
            auto [a, b] = kPairs[static_cast<std::size_t>(idx)];
            if (a == i || b == i) xi *= t.z[static_cast<std::size_t>(idx)];
        }
        for (int j = 0; j < 4; ++j) {
            if (j != i) xi *= t.y[static_cast<std::size_t>(j)];
        }
        if (!fits_int64(xi)) throw scale_error("lift: coordinates exceed 64 bits");
        x[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(xi);
    }
    try {
        return geometry::SurfacePoint(x);
    } catch (const std::domain_error& e) {
        throw consistency_error(std::string("lift: image fails surface validation: ") + e.what());
    }
}

std::array<std::int64_t, 6> auxiliary_v(const TorsorCoords& t) {
    if (!check_constraints(t)) {
        throw std::domain_error("auxiliary_v: torsor constraints violated");
    }
    std::array<std::int64_t, 6> v{};
    for (int idx = 0; idx < 6; ++idx) {
        auto [i, j] = kPairs[static_cast<std::size_t>(idx)];
        auto [k, l] = kPairs[static_cast<std::size_t>(complement_index(idx))];
        Int256 num = Int256(t.z[static_cast<std::size_t>(pair_index(i, k))]) *
                         t.z[static_cast<std::size_t>(pair_index(i, l))] *
                         t.y[static_cast<std::size_t>(j)] +
                     Int256(t.z[static_cast<std::size_t>(pair_index(j, k))]) *
                         t.z[static_cast<std::size_t>(pair_index(j, l))] *
                         t.y[static_cast<std::size_t>(i)];
        Int256 zij = t.z[static_cast<std::size_t>(idx)];
        if (num % zij != 0) {
            throw consistency_error("auxiliary_v: z_ij does not divide its numerator");
        }
        Int256 q = num / zij;
        if (!fits_int64(q)) throw scale_error("auxiliary_v: value exceeds 64 bits");
        v[static_cast<std::size_t>(idx)] = static_cast<std::int64_t>(q);
    }
    for (int idx = 0; idx < 3; ++idx) {
        if (v[static_cast<std::size_t>(idx)] != -v[static_cast<std::size_t>(complement_index(idx))]) {
            throw consistency_error("auxiliary_v: antisymmetry v_ij = -v_kl fails");
        }
    }
    // v_1j * v_1k = z_1l^2 * y_j * y_k - z_jk^2 * y_1 * y_l, indices 0-based.
    constexpr std::array<std::array<int, 3>, 3> jkl = {{{1, 2, 3}, {1, 3, 2}, {2, 3, 1}}};
    for (const auto& [j, k, l] : jkl) {
        Int256 lhs = Int256(v[static_cast<std::size_t>(pair_index(0, j))]) *
                     v[static_cast<std::size_t>(pair_index(0, k))];
        Int256 zl = t.z[static_cast<std::size_t>(pair_index(0, l))];
        Int256 zjk = t.z[static_cast<std::size_t>(pair_index(j, k))];
        Int256 rhs = zl * zl * t.y[static_cast<std::size_t>(j)] * t.y[static_cast<std::size_t>(k)] -
                     zjk * zjk * t.y[0] * t.y[static_cast<std::size_t>(l)];
        if (lhs != rhs) {
            throw consistency_error("auxiliary_v: quadratic relation fails");
        }
    }
    return v;
}

TorsorCoords descend(const geometry::SurfacePoint& x) {
    const auto& c = x.coords();
    // Valuation of every prime in each coordinate.
    std::map<std::uint64_t, std::array<int, 4>> val;
    for (int i = 0; i < 4; ++i) {
        auto a = static_cast<std::uint64_t>(iabs(c[static_cast<std::size_t>(i)]));
        for (const auto& [p, e] : primes::factorize(a)) {
            val[p][static_cast<std::size_t>(i)] = e;
        }
    }

    std::array<std::int64_t, 4> ymag{1, 1, 1, 1};
    std::array<std::int64_t, 6> z{1, 1, 1, 1, 1, 1};
    auto mul_pow = [](std::int64_t& target, std::uint64_t p, int e) {
        for (int t = 0; t < e; ++t) target *= static_cast<std::int64_t>(p);
    };

    for (const auto& [p, v] : val) {
        std::array<int, 4> support{};
        int count = 0;
        for (int i = 0; i < 4; ++i) {
            if (v[static_cast<std::size_t>(i)] > 0) support[static_cast<std::size_t>(count++)] = i;
        }
        if (count == 4) {
            throw consistency_error("descend: prime divides all coordinates of a primitive point");
        }
        if (count == 1) {
            throw consistency_error("descend: prime divides exactly one coordinate");
        }
        if (count == 2) {
            int i = support[0], j = support[1];
            if (v[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(j)]) {
                throw consistency_error("descend: unequal valuations on a two-coordinate prime");
            }
            mul_pow(z[static_cast<std::size_t>(pair_index(i, j))], p, v[static_cast<std::size_t>(i)]);
        } else {
            int m = 0 + 1 + 2 + 3;
            for (int t = 0; t < 3; ++t) m -= support[static_cast<std::size_t>(t)];
            int a = v[static_cast<std::size_t>(support[0])];
            for (int t = 1; t < 3; ++t) a = std::min(a, v[static_cast<std::size_t>(support[t])]);
            mul_pow(ymag[static_cast<std::size_t>(m)], p, a);
            int e1 = -1, e2 = -1, t1 = -1, t2 = -1;
            for (int t = 0; t < 3; ++t) {
                int excess = v[static_cast<std::size_t>(support[t])] - a;
                if (excess == 0) continue;
                if (t1 < 0) {
                    t1 = support[static_cast<std::size_t>(t)];
                    e1 = excess;
                } else if (t2 < 0) {
                    t2 = support[static_cast<std::size_t>(t)];
                    e2 = excess;
                } else {
                    throw consistency_error("descend: excess valuation on three coordinates");
                }
            }
            if (t1 >= 0) {
                if (t2 < 0 || e1 != e2) {
                    throw consistency_error("descend: unpaired excess valuation");
                }
                mul_pow(z[static_cast<std::size_t>(pair_index(t1, t2))], p, e1);
            }
        }
    }

    // sign(y_i) = sign(x_1 x_2 x_3 x_4) * sign(x_i): x_i carries every y_j
    // except y_i, so the product of all four coordinate signs is the product
    // of the y signs cubed.
    int sigma = 1;
    for (auto ci : c) sigma = ci < 0 ? -sigma : sigma;
    TorsorCoords t;
    t.z = z;
    for (int i = 0; i < 4; ++i) {
        int sign = (c[static_cast<std::size_t>(i)] < 0 ? -1 : 1) * sigma;
        t.y[static_cast<std::size_t>(i)] = sign * ymag[static_cast<std::size_t>(i)];
    }

    if (!check_constraints(t)) {
        throw consistency_error("descend: recovered coordinates violate the torsor constraints");
    }
    if (lift(t).coords() != c) {
        throw consistency_error("descend: round trip does not return the input point");
    }
    return t;
}

namespace {

using i128 = __int128;

struct Enumerator {
    std::int64_t B;
    std::vector<geometry::Vec4> found;

    void run() {
        std::array<std::int64_t, 6> z{};
        for (std::int64_t z12 = 1; z12 <= B; ++z12) {
            z[0] = z12;
            for (std::int64_t z13 = 1; z13 <= B / z12; ++z13) {
                if (gcd64(z13, z12) != 1) continue;
                z[1] = z13;
                for (std::int64_t z14 = 1; z14 <= B / (z12 * z13); ++z14) {
                    if (gcd64(z14, z12) != 1 || gcd64(z14, z13) != 1) continue;
                    z[2] = z14;
                    std::int64_t m1 = z12 * z13 * z14;
                    std::int64_t z23_max = std::min(B / z12, B / z13);
                    for (std::int64_t z23 = 1; z23 <= z23_max; ++z23) {
                        if (gcd64(z23, z12) != 1 || gcd64(z23, z13) != 1 || gcd64(z23, z14) != 1) continue;
                        z[3] = z23;
                        std::int64_t z24_max = std::min(B / (z12 * z23), B / z14);
                        for (std::int64_t z24 = 1; z24 <= z24_max; ++z24) {
                            if (gcd64(z24, z12) != 1 || gcd64(z24, z13) != 1 ||
                                gcd64(z24, z14) != 1 || gcd64(z24, z23) != 1) continue;
                            z[4] = z24;
                            std::int64_t m2 = z12 * z23 * z24;
                            std::int64_t z34_max = std::min(B / (z13 * z23), B / (z14 * z24));
                            for (std::int64_t z34 = 1; z34 <= z34_max; ++z34) {
                                if (gcd64(z34, z12) != 1 || gcd64(z34, z13) != 1 ||
                                    gcd64(z34, z14) != 1 || gcd64(z34, z23) != 1 ||
                                    gcd64(z34, z24) != 1) continue;
                                z[5] = z34;
                                scan_y(z, m1, m2, z13 * z23 * z34, z14 * z24 * z34);
                            }
                        }
                    }
                }
            }
        }
    }

    // m_i = product of z over pairs containing i, so |x_i| = m_i * |y_j y_k y_l|.
    void scan_y(const std::array<std::int64_t, 6>& z, std::int64_t m1, std::int64_t m2,
                std::int64_t m3, std::int64_t m4) {
        const std::int64_t c1 = z[3] * z[4] * z[5];
        const std::int64_t c2 = z[1] * z[2] * z[5];
        const std::int64_t c3 = z[0] * z[2] * z[4];
        const std::int64_t c4 = z[0] * z[1] * z[3];

        std::int64_t y1_max = std::min({B / m2, B / m3, B / m4});
        for (std::int64_t y1 = 1; y1 <= y1_max; ++y1) {
            if (gcd64(y1, z[0]) != 1 || gcd64(y1, z[1]) != 1 || gcd64(y1, z[2]) != 1) continue;
            std::int64_t a2_max = std::min({B / m1, B / m3 / y1, B / m4 / y1});
            for (std::int64_t a2 = 1; a2 <= a2_max; ++a2) {
                if (gcd64(a2, y1) != 1) continue;
                if (gcd64(a2, z[0]) != 1 || gcd64(a2, z[3]) != 1 || gcd64(a2, z[4]) != 1) continue;
                std::int64_t a3_max = std::min({B / m1 / a2, B / m2 / y1, B / m4 / y1 / a2});
                for (std::int64_t s2 = -1; s2 <= 1; s2 += 2) {
                    std::int64_t y2 = s2 * a2;
                    i128 head = static_cast<i128>(c1) * y1 + static_cast<i128>(c2) * y2;
                    if (head == 0) continue;  // partial-sum line condition
                    for (std::int64_t a3 = 1; a3 <= a3_max; ++a3) {
                        if (gcd64(a3, y1) != 1 || gcd64(a3, a2) != 1) continue;
                        if (gcd64(a3, z[1]) != 1 || gcd64(a3, z[3]) != 1 || gcd64(a3, z[5]) != 1) continue;
                        for (std::int64_t s3 = -1; s3 <= 1; s3 += 2) {
                            std::int64_t y3 = s3 * a3;
                            if (static_cast<i128>(c1) * y1 + static_cast<i128>(c3) * y3 == 0) continue;
                            i128 num = head + static_cast<i128>(c3) * y3;
                            if (num % c4 != 0) continue;
                            i128 y4w = -(num / c4);
                            if (y4w == 0 || y4w > B || y4w < -B) continue;
                            auto y4 = static_cast<std::int64_t>(y4w);
                            std::int64_t a4 = iabs(y4);
                            // Remaining height bounds involving |y4|.
                            if (a4 > B / m1 / a2 / a3) continue;
                            if (a4 > B / m2 / y1 / a3) continue;
                            if (a4 > B / m3 / y1 / a2) continue;
                            if (static_cast<i128>(c1) * y1 + static_cast<i128>(c4) * y4 == 0) continue;
                            if (gcd64(a4, y1) != 1 || gcd64(a4, a2) != 1 || gcd64(a4, a3) != 1) continue;
                            if (gcd64(a4, z[2]) != 1 || gcd64(a4, z[4]) != 1 || gcd64(a4, z[5]) != 1) continue;
                            TorsorCoords t{{y1, y2, y3, y4}, z};
                            found.push_back(lift(t).coords());
                        }
                    }
                }
            }
        }
    }
};

} // namespace

std::uint64_t count_N_torsor(std::int64_t B) {
    if (B <= 0) return 0;
    Enumerator e{B, {}};
    e.run();
    std::sort(e.found.begin(), e.found.end());
    if (std::adjacent_find(e.found.begin(), e.found.end()) != e.found.end()) {
        throw consistency_error("count_N_torsor: a point was enumerated twice");
    }
    return 2 * static_cast<std::uint64_t>(e.found.size());
}

} // namespace cayley::torsor
