#include "cayley/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cayley/errors.hpp"
#include "cayley/primes.hpp"

namespace cayley::diophantine {

namespace {

constexpr std::int64_t kEndpointMagnitudeMax = std::int64_t{1} << 60;
constexpr std::size_t kPairTableMax = 30'000'000;

// Double-double arithmetic (Dekker/Knuth error-free transforms).  Gives
// ~31 significant digits for the interval endpoints; the final one-ulp
// outward widening dominates every rounding error in the chain.
struct dd {
    double hi, lo;
};

dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

dd dd_sub(dd a, dd b) { return dd_add(a, {-b.hi, -b.lo}); }

dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

dd dd_mul_d(dd a, double b) {
    dd p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

dd dd_div(dd a, dd b) {
    double q0 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul_d(b, q0));
    double q1 = r.hi / b.hi;
    dd q = quick_two_sum(q0, q1);
    r = dd_sub(a, dd_mul(b, q));
    return dd_add(q, {r.hi / b.hi, 0.0});
}

dd dd_from_int(std::int64_t v) {
    double hi = static_cast<double>(v);
    return quick_two_sum(hi, static_cast<double>(v - static_cast<std::int64_t>(hi)));
}

dd dd_cbrt_int(std::int64_t n) {
    dd x = dd_from_int(n);
    double r0 = std::cbrt(x.hi);
    dd r{r0, 0.0};
    dd r3 = dd_mul(dd_mul(r, r), r);
    dd diff = dd_sub(r3, x);
    double corr = (diff.hi + diff.lo) / (3.0 * r0 * r0);
    return dd_sub(r, {corr, 0.0});
}

dd dd_log_int(std::int64_t n) {
    long double l = std::log(static_cast<long double>(n));
    double hi = static_cast<double>(l);
    return quick_two_sum(hi, static_cast<double>(l - static_cast<long double>(hi)));
}

void check_magnitude(const Interval& r) {
    if (r.lo < -kEndpointMagnitudeMax || r.lo > kEndpointMagnitudeMax ||
        r.hi < -kEndpointMagnitudeMax || r.hi > kEndpointMagnitudeMax) {
        throw scale_error("IntervalSpec: endpoint magnitude exceeds 2^60");
    }
}

void validate_pairing(const SignVector& beta, const std::array<double, 4>& eta) {
    double sum = 0, top = 0;
    for (int j = 0; j < 4; ++j) {
        sum += beta.beta[static_cast<std::size_t>(j)] * eta[static_cast<std::size_t>(j)];
        top = std::max(top, eta[static_cast<std::size_t>(j)]);
    }
    if (std::abs(sum) > 1e-11 * top) {
        throw std::domain_error("IntervalSpec: sum of beta_j * eta_j does not vanish");
    }
}

} // namespace

SignVector SignVector::validated(const std::array<int, 4>& beta) {
    for (int b : beta) {
        if (b != 1 && b != -1) {
            throw std::invalid_argument("SignVector: entries must be +1 or -1");
        }
    }
    if (beta[0] == beta[1] && beta[1] == beta[2] && beta[2] == beta[3]) {
        throw std::domain_error("SignVector: all signs equal makes the equation insoluble");
    }
    return SignVector{beta};
}

IntervalSpec IntervalSpec::from_eta(const std::array<double, 4>& eta, std::int64_t B) {
    for (double e : eta) {
        if (!(std::isfinite(e) && e > 0)) {
            throw std::invalid_argument("IntervalSpec: eta entries must be positive and finite");
        }
    }
    if (B < 2) throw std::invalid_argument("IntervalSpec: B must be >= 2");
    if (B > (std::int64_t{1} << 62)) throw scale_error("IntervalSpec: B exceeds 2^62");

    dd root = dd_cbrt_int(B);
    dd halfwidth = dd_div(root, dd_log_int(B));

    IntervalSpec s;
    s.eta = eta;
    s.B = B;
    for (int j = 0; j < 4; ++j) {
        dd center = dd_mul_d(root, eta[static_cast<std::size_t>(j)]);
        double lo_d = dd_sub(center, halfwidth).hi;
        double hi_d = dd_add(center, halfwidth).hi;
        // Widen one ulp outward: rounding can then only admit, never drop,
        // an integer sitting exactly on a boundary.
        lo_d = std::nextafter(lo_d, -std::numeric_limits<double>::infinity());
        hi_d = std::nextafter(hi_d, std::numeric_limits<double>::infinity());
        auto lo = static_cast<std::int64_t>(std::ceil(lo_d));
        auto hi = static_cast<std::int64_t>(std::floor(hi_d));
        if (lo < 2) {
            throw std::domain_error("IntervalSpec: window reaches below 2 (B too small for eta)");
        }
        if (hi < lo) {
            throw std::domain_error("IntervalSpec: empty window (B too small for eta)");
        }
        s.ranges[static_cast<std::size_t>(j)] = Interval{lo, hi};
        check_magnitude(s.ranges[static_cast<std::size_t>(j)]);
    }
    return s;
}

IntervalSpec IntervalSpec::from_ranges(const std::array<Interval, 4>& ranges) {
    IntervalSpec s;
    s.ranges = ranges;
    for (const auto& r : ranges) check_magnitude(r);
    return s;
}

std::vector<PrimeSolution> solve_prime_equation(const SignVector& beta,
                                                const IntervalSpec& spec,
                                                std::optional<std::size_t> limit) {
    for (const auto& r : spec.ranges) {
        if (r.empty()) return {};
    }
    for (const auto& r : spec.ranges) {
        if (r.lo < 2) {
            throw std::domain_error("solve_prime_equation: window reaches below 2");
        }
    }

    std::array<std::vector<std::int64_t>, 4> P;
    for (int j = 0; j < 4; ++j) {
        P[static_cast<std::size_t>(j)] =
            primes::primes_in_range(spec.ranges[static_cast<std::size_t>(j)].lo,
                                    spec.ranges[static_cast<std::size_t>(j)].hi);
        if (P[static_cast<std::size_t>(j)].empty()) return {};
    }
    if (P[0].size() * P[1].size() > kPairTableMax || P[2].size() * P[3].size() > kPairTableMax) {
        throw scale_error("solve_prime_equation: windows too wide for the pair enumeration");
    }

    const auto& b = beta.beta;
    struct Half {
        std::int64_t key, p1, p2;
    };
    std::vector<Half> table;
    table.reserve(P[0].size() * P[1].size());
    for (auto p1 : P[0]) {
        for (auto p2 : P[1]) {
            table.push_back({b[0] * p1 + b[1] * p2, p1, p2});
        }
    }
    std::sort(table.begin(), table.end(), [](const Half& u, const Half& v) {
        return std::tie(u.key, u.p1, u.p2) < std::tie(v.key, v.p1, v.p2);
    });

    std::vector<PrimeSolution> out;
    for (auto p3 : P[2]) {
        for (auto p4 : P[3]) {
            std::int64_t need = -(b[2] * p3 + b[3] * p4);
            auto it = std::lower_bound(table.begin(), table.end(), need,
                                       [](const Half& h, std::int64_t k) { return h.key < k; });
            for (; it != table.end() && it->key == need; ++it) {
                double w = std::log(static_cast<double>(it->p1)) *
                           std::log(static_cast<double>(it->p2)) *
                           std::log(static_cast<double>(p3)) *
                           std::log(static_cast<double>(p4));
                out.push_back(PrimeSolution{{it->p1, it->p2, p3, p4}, w});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PrimeSolution& u, const PrimeSolution& v) { return u.p < v.p; });
    if (limit && out.size() > *limit) out.resize(*limit);
    return out;
}

double weighted_R(const std::vector<PrimeSolution>& solutions) {
    double sum = 0.0, comp = 0.0;
    for (const auto& s : solutions) {
        double y = s.weight - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

namespace {

Interval signed_copy(const Interval& r, int sign) {
    return sign > 0 ? r : Interval{-r.hi, -r.lo};
}

// #{(u, v) in A x B : u + v = s}
std::int64_t overlap(const Interval& A, const Interval& B, std::int64_t s) {
    std::int64_t lo = std::max(A.lo, s - B.hi);
    std::int64_t hi = std::min(A.hi, s - B.lo);
    return hi < lo ? 0 : hi - lo + 1;
}

} // namespace

std::uint64_t count_J(const SignVector& beta, const IntervalSpec& spec) {
    for (const auto& r : spec.ranges) {
        if (r.empty()) return 0;
    }
    Interval s1 = signed_copy(spec.ranges[0], beta.beta[0]);
    Interval s2 = signed_copy(spec.ranges[1], beta.beta[1]);
    Interval s3 = signed_copy(spec.ranges[2], beta.beta[2]);
    Interval s4 = signed_copy(spec.ranges[3], beta.beta[3]);

    std::int64_t from = std::max(s1.lo + s2.lo, -(s3.hi + s4.hi));
    std::int64_t to = std::min(s1.hi + s2.hi, -(s3.lo + s4.lo));
    unsigned __int128 total = 0;
    for (std::int64_t s = from; s <= to; ++s) {
        std::int64_t r12 = overlap(s1, s2, s);
        if (r12 == 0) continue;
        std::int64_t r34 = overlap(s3, s4, -s);
        total += static_cast<unsigned __int128>(r12) * static_cast<unsigned __int128>(r34);
    }
    if (total > std::numeric_limits<std::uint64_t>::max()) {
        throw scale_error("count_J: count exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(total);
}

JLowerBound lower_bound_check_J(const IntervalSpec& spec, const SignVector& beta) {
    if (!spec.eta || !spec.B) {
        throw std::invalid_argument("lower_bound_check_J: spec must be built from eta and B");
    }
    validate_pairing(beta, *spec.eta);
    std::uint64_t J = count_J(beta, spec);
    double Bd = static_cast<double>(*spec.B);
    double logB = std::log(Bd);
    double bound = (8.0 / 27.0) * (1.0 / 8.0) * Bd / (logB * logB * logB);
    double ratio = static_cast<double>(J) / bound;
    return JLowerBound{static_cast<double>(J) >= bound, J, bound, ratio};
}

} // namespace cayley::diophantine
