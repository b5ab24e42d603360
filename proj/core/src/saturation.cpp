#include "cayley/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "cayley/errors.hpp"
#include "cayley/primes.hpp"
#include "cayley/torsor.hpp"

namespace cayley::saturation {

namespace {

long double real_form(const std::array<double, 4>& xi, long double& scale) {
    long double F = 0, S = 0;
    for (int i = 0; i < 4; ++i) {
        long double term = 1;
        for (int j = 0; j < 4; ++j) {
            if (j != i) term *= static_cast<long double>(xi[static_cast<std::size_t>(j)]);
        }
        F += term;
        S += std::abs(term);
    }
    scale = S;
    return F;
}

} // namespace

TargetPoint TargetPoint::validated(const std::array<double, 4>& xi) {
    for (double v : xi) {
        if (!std::isfinite(v)) throw std::domain_error("target has a non-finite coordinate");
        if (v == 0.0) throw std::domain_error("target has a zero coordinate");
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            double a = xi[static_cast<std::size_t>(i)], b = xi[static_cast<std::size_t>(j)];
            if (std::abs(a + b) <= 1e-12 * (std::abs(a) + std::abs(b))) {
                throw std::domain_error("target lies on a line (xi_" + std::to_string(i + 1) +
                                        " + xi_" + std::to_string(j + 1) + " = 0)");
            }
        }
    }
    long double scale = 0;
    long double F = real_form(xi, scale);
    if (std::abs(static_cast<double>(F)) > 1e-12 * static_cast<double>(scale)) {
        throw std::domain_error("target does not lie on the surface");
    }
    return TargetPoint{xi};
}

TargetProfile profile(const TargetPoint& target) {
    const auto& xi = target.xi;
    long double prod = 1;
    for (double v : xi) prod *= static_cast<long double>(v);
    long double c = std::cbrt(prod);

    std::array<double, 4> eta{};
    std::array<int, 4> signs{};
    for (int j = 0; j < 4; ++j) {
        long double q = c / static_cast<long double>(xi[static_cast<std::size_t>(j)]);
        eta[static_cast<std::size_t>(j)] = static_cast<double>(std::abs(q));
        signs[static_cast<std::size_t>(j)] = q > 0 ? 1 : -1;
    }
    auto beta = diophantine::SignVector::validated(signs);

    double sum = 0, top = 0;
    for (int j = 0; j < 4; ++j) {
        sum += signs[static_cast<std::size_t>(j)] * eta[static_cast<std::size_t>(j)];
        top = std::max(top, eta[static_cast<std::size_t>(j)]);
    }
    if (std::abs(sum) > 1e-11 * top) {
        throw consistency_error("profile: sum of beta_j * eta_j does not vanish");
    }
    return TargetProfile{eta, beta};
}

double closeness(const geometry::Vec4& x, const TargetPoint& target, std::int64_t B) {
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
        double d = std::abs(static_cast<double>(x[static_cast<std::size_t>(i)]) /
                                static_cast<double>(B) -
                            target.xi[static_cast<std::size_t>(i)]);
        worst = std::max(worst, d);
    }
    return worst;
}

double closeness_constant(const TargetProfile& prof) {
    const auto& eta = prof.eta;
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
        double sum = 0;
        for (int j = 0; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                if (j == i || k == i) continue;
                sum += eta[static_cast<std::size_t>(j)] * eta[static_cast<std::size_t>(k)];
            }
        }
        worst = std::max(worst, sum);
    }
    return 2.0 * worst;
}

diophantine::IntervalSpec intervals_for(const TargetProfile& prof, std::int64_t B) {
    diophantine::IntervalSpec spec;
    try {
        spec = diophantine::IntervalSpec::from_eta(prof.eta, B);
    } catch (const std::domain_error& e) {
        throw scale_error(std::string("B too small for the construction at this target: ") +
                          e.what());
    }
    for (const auto& r : spec.ranges) {
        if (r.length() < 10 || r.lo < 11) {
            throw scale_error("B too small for the construction at this target: window [" +
                              std::to_string(r.lo) + ", " + std::to_string(r.hi) +
                              "] is below the minimum (length >= 10, lo >= 11)");
        }
    }
    return spec;
}

std::vector<ConstructedPoint> construct_from_spec(const TargetPoint& target,
                                                  const TargetProfile& prof,
                                                  const diophantine::IntervalSpec& spec,
                                                  std::int64_t B_report,
                                                  bool assert_bound,
                                                  std::optional<std::size_t> limit) {
    if (B_report < 2) throw std::invalid_argument("construct: B must be >= 2");
    auto sols = diophantine::solve_prime_equation(prof.beta, spec);
    double bound = closeness_constant(prof) / std::log(static_cast<double>(B_report));

    std::vector<ConstructedPoint> pts;
    for (const auto& sol : sols) {
        const auto& p = sol.p;
        bool distinct = true;
        for (int i = 0; i < 4 && distinct; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (p[static_cast<std::size_t>(i)] == p[static_cast<std::size_t>(j)]) {
                    distinct = false;
                    break;
                }
            }
        }
        if (!distinct) continue;  // mu(p1 p2 p3 p4) = 0

        torsor::TorsorCoords t;
        t.z = {1, 1, 1, 1, 1, 1};
        for (int j = 0; j < 4; ++j) {
            t.y[static_cast<std::size_t>(j)] =
                prof.beta.beta[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
        }
        geometry::Vec4 x{};
        try {
            x = torsor::lift(t).coords();
        } catch (const std::domain_error& e) {
            throw consistency_error(std::string("construct: prime quadruple fails to lift: ") +
                                    e.what());
        }

        // Independent almost-prime verification by refactoring the
        // coordinates, not trusting the quadruple that built them.
        std::map<std::uint64_t, int> factors;
        for (auto xi : x) {
            auto a = static_cast<std::uint64_t>(xi < 0 ? -xi : xi);
            for (const auto& [q, e] : primes::factorize(a)) factors[q] += e;
        }
        int Omega = 0;
        for (const auto& [q, e] : factors) {
            (void)q;
            Omega += e;
        }
        auto omega = static_cast<int>(factors.size());
        if (Omega != 12 || omega != 4) {
            throw consistency_error("construct: coordinate product is not a (12, 4) almost prime");
        }

        double cls = closeness(x, target, B_report);
        if (assert_bound && !(cls <= bound)) {
            throw consistency_error("construct: closeness exceeds C(xi)/log B");
        }
        pts.push_back(ConstructedPoint{x, p, prof.beta.beta, cls, Omega, omega});
        if (limit && pts.size() >= *limit) break;
    }

    std::vector<geometry::Vec4> coords;
    coords.reserve(pts.size());
    for (const auto& pt : pts) coords.push_back(pt.x);
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
        throw consistency_error("construct: two prime quadruples produced the same point");
    }
    return pts;
}

std::vector<ConstructedPoint> construct_points(const TargetPoint& target, std::int64_t B,
                                               std::optional<std::size_t> limit) {
    auto prof = profile(target);
    auto spec = intervals_for(prof, B);
    return construct_from_spec(target, prof, spec, B, true, limit);
}

std::uint64_t count_M(const TargetPoint& target, std::int64_t B, int r) {
    if (r < 0) throw std::invalid_argument("count_M: r must be >= 0");
    auto pts = construct_points(target, B);
    std::uint64_t count = 0;
    for (const auto& pt : pts) {
        if (pt.big_omega <= r) ++count;
    }
    return count;
}

} // namespace cayley::saturation
