#include <doctest.h>

#include <set>

#include "revival/config.hpp"
#include "revival/evolution.hpp"
#include "revival/superposition.hpp"

using namespace revival;

namespace {
const double kA = 3.0 * kPi / 8.0;
const double kB = 5.0 * kPi / 8.0;
}

TEST_CASE("rational times reduce to lowest terms") {
    RationalTime t(2, 4);
    CHECK(t.p == 1);
    CHECK(t.q == 2);
    CHECK(t.seconds() == doctest::Approx(kPi));
    CHECK_THROWS_AS(RationalTime(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(RationalTime(1, 0), std::invalid_argument);
}

TEST_CASE("odd periodic extension") {
    auto f = GridFunction::sample(512, [](double x) { return Complex{std::sin(x), 0.0}; });
    CHECK(std::abs(odd_periodic_extension(f, -kPi / 2.0) - Complex{-1.0, 0.0}) < 1e-12);
    const double x0 = f.node(123);
    CHECK(std::abs(odd_periodic_extension(f, x0 + 2.0 * kPi) - f[123]) < 1e-12);

    auto chi = make_indicator(kA, kB, 512);
    CHECK(std::abs(odd_periodic_extension(chi, kPi / 2.0 - 2.0 * kPi) -
                   Complex{1.0, 0.0}) < 1e-12);
}

TEST_CASE("gauss indicator matches the closed form") {
    CHECK(gauss_indicator(3, 8, 5).value == 5);
    CHECK(gauss_indicator(0, 1, 5).value == 0);
    CHECK(gauss_indicator(7, 7, 1).value == 1);
    double worst = 0.0;
    for (std::int64_t q = 1; q <= 20; ++q)
        for (std::int64_t m = 0; m < q; ++m)
            for (std::int64_t j = 0; j < q; ++j) {
                auto g = gauss_indicator(m, j, q);
                CHECK(g.value == (((m - j) % q) == 0 ? q : 0));
                worst = std::max(worst, g.rounding_error);
            }
    CHECK(worst < 1e-9);
}

TEST_CASE("full period returns the datum exactly") {
    auto f = make_indicator(kA, kB, 256);
    auto rev = revival_superposition(f, RationalTime(1, 1), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(std::abs(rev[i] - f[i]) == 0.0);
    }
}

TEST_CASE("half period mirrors the odd extension") {
    auto f = make_indicator(kA, kB, 256);
    auto rev = revival_superposition(f, RationalTime(1, 2), Complex{0.0, 0.0});
    for (std::size_t i = 0; i <= 256; ++i) {
        const Complex ref = i == 256 ? f[0] : -f[256 - i];
        CHECK(std::abs(rev[i] - ref) < 1e-12);
    }
}

TEST_CASE("q = 5 produces a piecewise-constant field with few levels") {
    const std::size_t m = 320;
    auto f = make_indicator(kA, kB, m);
    RationalTime rt(1, 5);
    auto rev = revival_superposition(f, rt, Complex{0.0, 0.0});
    const auto jumps = [&] {
        std::vector<double> loc;
        for (double s : {kA, kB, 2.0 * kPi - kA, 2.0 * kPi - kB})
            for (int k = 0; k < 5; ++k) {
                double x = std::fmod(s + 2.0 * kPi * k / 5.0, 2.0 * kPi);
                if (x <= kPi) loc.push_back(x);
            }
        return loc;
    }();
    std::set<std::pair<long, long>> levels;
    for (std::size_t i = 0; i < rev.size(); ++i) {
        const double x = rev.node(i);
        bool at_jump = false;
        for (double s : jumps) at_jump = at_jump || std::abs(x - s) < 1e-9;
        if (at_jump) continue;   // the sampled one-sided values at the jumps
        if (std::abs(rev[i]) < 1e-12) continue;   // uncovered background
        levels.insert({std::lround(rev[i].real() * 1e9), std::lround(rev[i].imag() * 1e9)});
    }
    CHECK(levels.size() <= 5);   // q nonzero combination levels
}

TEST_CASE("superposition equals the free evolution on the grid lattice") {
    // unimodular symbol on the 2M-periodic lattice: the trapezoid
    // (lattice) L2 norm is preserved exactly
    for (auto [p, q] : {std::pair<int, int>{1, 5}, {2, 5}, {3, 7}}) {
        const std::size_t m = adjust_grid(300, q);
        auto f = make_indicator(kA, kB, m);
        auto rev = revival_superposition(f, RationalTime(p, q), Complex{0.0, 0.0});
        CHECK(std::abs(rev.l2_norm() - f.l2_norm()) < 1e-9);
    }
}

TEST_CASE("superposition converges to the truncated free series") {
    const std::size_t m = adjust_grid(2560, 5);
    auto f = make_indicator(kA, kB, m);
    RationalTime rt(1, 5);
    auto rev = revival_superposition(f, rt, Complex{0.0, 0.0});
    double last = 1e300;
    for (int n : {100, 200, 400}) {
        const double d = l2_distance(free_evolution(f, rt, n), rev);
        CHECK(d < last + 1e-9);
        last = d;
    }
    CHECK(last < 0.1);
}

TEST_CASE("the mean phase is an exact pointwise factor") {
    auto f = make_indicator(kA, kB, 320);
    RationalTime rt(2, 5);
    const Complex mu{0.4, -0.2};
    auto base = revival_superposition(f, rt, Complex{0.0, 0.0});
    auto phased = revival_superposition(f, rt, mu);
    const Complex phase = mean_phase(mu, rt);
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(phased[i] == phase * base[i]);   // bit-exact by construction
    }
    CHECK(mean_phase(Complex{0.0, 0.0}, rt) == Complex{1.0, 0.0});
}
