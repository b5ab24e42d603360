#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <cayley/diophantine.hpp>
#include <cayley/errors.hpp>

#include "oracles.hpp"

namespace dp = cayley::diophantine;

namespace {

dp::IntervalSpec spec_of(const std::array<oracles::Range, 4>& r) {
    std::array<dp::Interval, 4> ranges;
    for (int j = 0; j < 4; ++j) {
        ranges[static_cast<std::size_t>(j)] = {r[static_cast<std::size_t>(j)].lo,
                                               r[static_cast<std::size_t>(j)].hi};
    }
    return dp::IntervalSpec::from_ranges(ranges);
}

std::vector<std::array<std::int64_t, 4>> tuples_of(const std::vector<dp::PrimeSolution>& sols) {
    std::vector<std::array<std::int64_t, 4>> out;
    out.reserve(sols.size());
    for (const auto& s : sols) out.push_back(s.p);
    return out;
}

}  // namespace

TEST_CASE("SignVector validation") {
    const auto b = dp::SignVector::validated({1, -1, 1, -1});
    CHECK(b.beta == std::array<int, 4>{1, -1, 1, -1});
    CHECK_THROWS_AS((void)dp::SignVector::validated({1, 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)dp::SignVector::validated({2, 1, 1, -1}), std::invalid_argument);
    CHECK_THROWS_AS((void)dp::SignVector::validated({1, 1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS((void)dp::SignVector::validated({-1, -1, -1, -1}), std::domain_error);
}

TEST_CASE("Interval helpers") {
    const dp::Interval r{3, 7};
    CHECK(r.contains(3));
    CHECK(r.contains(7));
    CHECK_FALSE(r.contains(8));
    CHECK(r.length() == 5);
    const dp::Interval e{5, 4};
    CHECK(e.empty());
    CHECK(e.length() == 0);
}

TEST_CASE("from_eta frozen windows at B = 10^9 and 10^12") {
    const std::array<double, 4> eta{1.0, 1.0, 1.0, 3.0};

    const auto s9 = dp::IntervalSpec::from_eta(eta, 1000000000);
    for (int j = 0; j < 3; ++j) {
        CHECK(s9.ranges[static_cast<std::size_t>(j)].lo == 952);
        CHECK(s9.ranges[static_cast<std::size_t>(j)].hi == 1048);
    }
    CHECK(s9.ranges[3].lo == 2952);
    CHECK(s9.ranges[3].hi == 3048);
    REQUIRE(s9.eta.has_value());
    CHECK(s9.B == 1000000000);

    const auto s12 = dp::IntervalSpec::from_eta(eta, 1000000000000);
    for (int j = 0; j < 3; ++j) {
        CHECK(s12.ranges[static_cast<std::size_t>(j)].lo == 9639);
        CHECK(s12.ranges[static_cast<std::size_t>(j)].hi == 10361);
    }
    CHECK(s12.ranges[3].lo == 29639);
    CHECK(s12.ranges[3].hi == 30361);
}

TEST_CASE("from_eta frozen windows for an asymmetric profile") {
    const std::array<double, 4> eta{0.13353145150486626, 0.4005943545145988,
                                    1.3353145150486625, 1.8694403210681276};
    const auto s = dp::IntervalSpec::from_eta(eta, 1000000000000);
    CHECK(s.ranges[0].lo == 974);
    CHECK(s.ranges[0].hi == 1697);
    CHECK(s.ranges[1].lo == 3645);
    CHECK(s.ranges[1].hi == 4367);
    CHECK(s.ranges[2].lo == 12992);
    CHECK(s.ranges[2].hi == 13715);
    CHECK(s.ranges[3].lo == 18333);
    CHECK(s.ranges[3].hi == 19056);
}

TEST_CASE("from_eta input validation") {
    CHECK_THROWS_AS((void)dp::IntervalSpec::from_eta({1.0, 1.0, 1.0, 0.0}, 1000),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)dp::IntervalSpec::from_eta({1.0, 1.0, 1.0, -3.0}, 1000),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)dp::IntervalSpec::from_eta({1.0, 1.0, 1.0, 3.0}, 1),
                    std::invalid_argument);
    // window reaches below 2: B small enough that lo < 2
    CHECK_THROWS_AS((void)dp::IntervalSpec::from_eta({1.0, 1.0, 1.0, 3.0}, 4),
                    std::domain_error);
    CHECK_THROWS_AS((void)dp::IntervalSpec::from_eta({0.01, 1.0, 1.0, 1.0}, 1000000),
                    std::domain_error);
    CHECK_THROWS_AS((void)dp::IntervalSpec::from_eta({1.0, 1.0, 1.0, 3.0}, (1LL << 62) + 1),
                    cayley::scale_error);
}

TEST_CASE("solve_prime_equation hand examples") {
    const auto beta = dp::SignVector::validated({1, 1, 1, -1});

    auto sols = dp::solve_prime_equation(beta, spec_of({{{2, 20}, {2, 20}, {2, 20}, {2, 20}}}));
    CHECK(sols.size() == 39);
    const auto tuples = tuples_of(sols);
    CHECK(std::find(tuples.begin(), tuples.end(),
                    std::array<std::int64_t, 4>{3, 5, 11, 19}) != tuples.end());
    CHECK(std::is_sorted(tuples.begin(), tuples.end()));
    for (const auto& s : sols) {
        CHECK(s.p[0] + s.p[1] + s.p[2] - s.p[3] == 0);
        CHECK(s.weight ==
              doctest::Approx(std::log(static_cast<double>(s.p[0])) *
                              std::log(static_cast<double>(s.p[1])) *
                              std::log(static_cast<double>(s.p[2])) *
                              std::log(static_cast<double>(s.p[3])))
                  .epsilon(1e-14));
    }

    CHECK(dp::solve_prime_equation(beta, spec_of({{{2, 6}, {2, 6}, {2, 6}, {2, 6}}})).empty());

    const auto alt = dp::SignVector::validated({1, -1, 1, -1});
    auto sols2 = dp::solve_prime_equation(alt, spec_of({{{2, 10}, {2, 10}, {2, 10}, {2, 10}}}));
    CHECK(sols2.size() == 32);
    const auto tuples2 = tuples_of(sols2);
    CHECK(std::find(tuples2.begin(), tuples2.end(),
                    std::array<std::int64_t, 4>{3, 3, 5, 5}) != tuples2.end());
}

TEST_CASE("solve_prime_equation respects limit and handles empty or bad windows") {
    const auto beta = dp::SignVector::validated({1, 1, 1, -1});
    const auto full = dp::solve_prime_equation(beta, spec_of({{{2, 20}, {2, 20}, {2, 20}, {2, 20}}}));
    const auto head = dp::solve_prime_equation(beta, spec_of({{{2, 20}, {2, 20}, {2, 20}, {2, 20}}}), 5);
    REQUIRE(head.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(head[static_cast<std::size_t>(i)].p == full[static_cast<std::size_t>(i)].p);
    }
    // empty window: no solutions, reported before any domain check
    CHECK(dp::solve_prime_equation(beta, spec_of({{{2, 20}, {9, 3}, {2, 20}, {2, 20}}})).empty());
    CHECK(dp::solve_prime_equation(beta, spec_of({{{2, 20}, {24, 28}, {2, 20}, {2, 20}}})).empty());
    CHECK_THROWS_AS(
        (void)dp::solve_prime_equation(beta, spec_of({{{1, 20}, {2, 20}, {2, 20}, {2, 20}}})),
        std::domain_error);
}

TEST_CASE("solve_prime_equation agrees with the quadruple loop on random windows") {
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<std::int64_t> lo_dist(2, 220);
    std::uniform_int_distribution<std::int64_t> len_dist(0, 120);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int iter = 0; iter < 12; ++iter) {
        std::array<int, 4> b;
        do {
            for (auto& s : b) s = sign(rng) ? 1 : -1;
        } while (b == std::array<int, 4>{1, 1, 1, 1} || b == std::array<int, 4>{-1, -1, -1, -1});
        std::array<oracles::Range, 4> r;
        for (auto& w : r) {
            w.lo = lo_dist(rng);
            w.hi = w.lo + len_dist(rng);
        }
        const auto beta = dp::SignVector::validated(b);
        auto got = tuples_of(dp::solve_prime_equation(beta, spec_of(r)));
        auto want = oracles::naive_prime_solutions(b, r);
        std::sort(want.begin(), want.end());
        CAPTURE(iter);
        CHECK(got == want);
    }
}

TEST_CASE("weighted_R") {
    CHECK(dp::weighted_R({}) == 0.0);
    const auto beta = dp::SignVector::validated({1, 1, 1, -1});
    const auto one = dp::solve_prime_equation(
        beta, spec_of({{{3, 3}, {5, 5}, {11, 11}, {19, 19}}}));
    REQUIRE(one.size() == 1);
    CHECK(dp::weighted_R(one) ==
          doctest::Approx(std::log(3.0) * std::log(5.0) * std::log(11.0) * std::log(19.0))
              .epsilon(1e-15));
    const auto many = dp::solve_prime_equation(beta, spec_of({{{2, 20}, {2, 20}, {2, 20}, {2, 20}}}));
    double plain = 0;
    for (const auto& s : many) plain += s.weight;
    CHECK(dp::weighted_R(many) == doctest::Approx(plain).epsilon(1e-13));
}

TEST_CASE("count_J hand examples") {
    const auto b1 = dp::SignVector::validated({1, 1, 1, -1});
    CHECK(dp::count_J(b1, spec_of({{{10, 20}, {10, 20}, {10, 20}, {10, 20}}})) == 0);
    const auto b2 = dp::SignVector::validated({1, -1, 1, -1});
    CHECK(dp::count_J(b2, spec_of({{{1, 3}, {1, 3}, {1, 3}, {1, 3}}})) == 19);
    // empty window
    CHECK(dp::count_J(b1, spec_of({{{5, 4}, {10, 20}, {10, 20}, {10, 20}}})) == 0);
    // windows may reach below 2: the integer count has no primality in it
    CHECK(dp::count_J(b2, spec_of({{{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}}})) > 0);
}

TEST_CASE("count_J frozen values on the eta windows") {
    const auto beta = dp::SignVector::validated({1, 1, 1, -1});
    const std::array<double, 4> eta{1.0, 1.0, 1.0, 3.0};
    CHECK(dp::count_J(beta, dp::IntervalSpec::from_eta(eta, 1000000000)) == 608481);
    CHECK(dp::count_J(beta, dp::IntervalSpec::from_eta(eta, 1000000000000)) == 251955619);
}

TEST_CASE("count_J agrees with the triple loop on random windows") {
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<std::int64_t> lo_dist(-150, 150);
    std::uniform_int_distribution<std::int64_t> len_dist(0, 120);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int iter = 0; iter < 25; ++iter) {
        std::array<int, 4> b;
        do {
            for (auto& s : b) s = sign(rng) ? 1 : -1;
        } while (b == std::array<int, 4>{1, 1, 1, 1} || b == std::array<int, 4>{-1, -1, -1, -1});
        std::array<oracles::Range, 4> r;
        for (auto& w : r) {
            w.lo = lo_dist(rng);
            w.hi = w.lo + len_dist(rng);
        }
        CAPTURE(iter);
        CHECK(dp::count_J(dp::SignVector::validated(b), spec_of(r)) == oracles::naive_J(b, r));
    }
}

TEST_CASE("count_J is invariant under simultaneous permutation of slots") {
    const auto b = dp::SignVector::validated({1, -1, 1, -1});
    const std::array<oracles::Range, 4> r{{{2, 30}, {5, 25}, {3, 17}, {8, 40}}};
    const auto base = dp::count_J(b, spec_of(r));
    const std::array<int, 4> perm{2, 0, 3, 1};
    std::array<int, 4> pb;
    std::array<oracles::Range, 4> prr;
    for (int j = 0; j < 4; ++j) {
        pb[static_cast<std::size_t>(j)] = b.beta[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        prr[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
    }
    CHECK(dp::count_J(dp::SignVector::validated(pb), spec_of(prr)) == base);
}

TEST_CASE("lower_bound_check_J holds on the eta windows") {
    const auto beta = dp::SignVector::validated({1, 1, 1, -1});
    const std::array<double, 4> eta{1.0, 1.0, 1.0, 3.0};

    const auto c9 = dp::lower_bound_check_J(dp::IntervalSpec::from_eta(eta, 1000000000), beta);
    CHECK(c9.ok);
    CHECK(c9.J == 608481);
    CHECK(c9.ratio == doctest::Approx(146.2).epsilon(0.01));
    CHECK(c9.bound == doctest::Approx(static_cast<double>(c9.J) / c9.ratio).epsilon(1e-12));

    const auto c12 =
        dp::lower_bound_check_J(dp::IntervalSpec::from_eta(eta, 1000000000000), beta);
    CHECK(c12.ok);
    CHECK(c12.J == 251955619);
    CHECK(c12.ratio == doctest::Approx(143.5).epsilon(0.01));
}

TEST_CASE("lower_bound_check_J rejects bad input") {
    const auto beta = dp::SignVector::validated({1, 1, 1, -1});
    CHECK_THROWS_AS(
        (void)dp::lower_bound_check_J(spec_of({{{2, 20}, {2, 20}, {2, 20}, {2, 20}}}), beta),
        std::invalid_argument);
    // eta incompatible with the signs: sum beta_j eta_j != 0
    const std::array<double, 4> eta{1.0, 1.0, 1.0, 2.0};
    CHECK_THROWS_AS(
        (void)dp::lower_bound_check_J(dp::IntervalSpec::from_eta(eta, 1000000000), beta),
        std::domain_error);
}
