#include <doctest.h>

#include <random>

#include "revival/grid.hpp"

using namespace revival;

TEST_CASE("grid construction checks the interval count") {
    CHECK_THROWS_AS(GridFunction(3), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction(0), std::invalid_argument);
    CHECK_NOTHROW(GridFunction(64));
}

TEST_CASE("value_at is exact on nodes and linear in between") {
    auto f = GridFunction::sample(128, [](double x) { return Complex{x, -2.0 * x}; });
    CHECK(f.value_at(f.node(17)) == f[17]);
    const double x = 0.5 * (f.node(40) + f.node(41));
    CHECK(std::abs(f.value_at(x) - Complex{x, -2.0 * x}) < 1e-12);
    CHECK_THROWS_AS(f.value_at(-0.2), std::domain_error);
    CHECK_THROWS_AS(f.value_at(kPi + 0.2), std::domain_error);
}

TEST_CASE("Simpson inner products reproduce sine orthonormality") {
    const std::size_t m = 512;
    for (int j : {1, 3, 7}) {
        for (int k : {1, 3, 7}) {
            const Complex g = inner_product(sine_basis(j, m), sine_basis(k, m));
            const double expected = j == k ? 1.0 : 0.0;
            CHECK(std::abs(g - Complex{expected, 0.0}) < 1e-13);
        }
    }
}

TEST_CASE("l2_norm matches closed forms") {
    const std::size_t m = 1024;
    CHECK(sine_basis(4, m).l2_norm() == doctest::Approx(1.0).epsilon(1e-12));
    // ||x(pi-x)||_2^2 = pi^5/30
    CHECK(make_poly(m).l2_norm() ==
          doctest::Approx(std::sqrt(std::pow(kPi, 5) / 30.0)).epsilon(1e-10));
}

TEST_CASE("mismatched grids refuse to combine") {
    GridFunction a(64), b(128);
    CHECK_THROWS_AS(a += b, std::invalid_argument);
    CHECK_THROWS_AS(inner_product(a, b), std::invalid_argument);
    CHECK_THROWS_AS(l2_distance(a, b), std::invalid_argument);
}

TEST_CASE("indicator sampling and exact coefficients agree with quadrature") {
    const double a = 3.0 * kPi / 8.0, b = 5.0 * kPi / 8.0;
    const std::size_t m = 2048;
    auto f = make_indicator(a, b, m);
    CHECK(f[0] == Complex{0.0, 0.0});
    CHECK(f[m / 2] == Complex{1.0, 0.0});
    const auto exact = indicator_sine_coefficients(a, b, 8);
    for (int j = 1; j <= 8; ++j) {
        const Complex quad = inner_product(f, sine_basis(j, m));
        CHECK(std::abs(quad - exact[static_cast<std::size_t>(j - 1)]) < 2e-3);
    }
    CHECK_THROWS_AS(make_indicator(1.0, 0.5, m), std::invalid_argument);
}

TEST_CASE("adjacent jump scales exactly with the field") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GridFunction f(256);
    for (auto& v : f.values()) v = Complex{u(rng), u(rng)};
    const Complex s{2.5, -1.25};
    GridFunction g = s * f;
    CHECK(g.max_adjacent_jump() ==
          doctest::Approx(std::abs(s) * f.max_adjacent_jump()).epsilon(1e-14));
    CHECK(g.sup_norm() == doctest::Approx(std::abs(s) * f.sup_norm()).epsilon(1e-14));
}
