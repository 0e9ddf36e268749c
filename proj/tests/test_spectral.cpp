#include <doctest.h>

#include "revival/mathieu.hpp"
#include "revival/spectral.hpp"

using namespace revival;

TEST_CASE("shooting reproduces the free solution sin(sqrt(lambda) x)") {
    auto V = Potential::mathieu(Complex{0.0, 0.0});
    auto hit = shoot(V, Complex{4.0, 0.0}, 512);
    CHECK(std::abs(hit.endpoint) < 1e-9);           // sin(2 pi) = 0
    auto miss = shoot(V, Complex{2.25, 0.0}, 512);
    CHECK(std::abs(std::abs(miss.endpoint) - 1.0) < 1e-8);   // |sin(1.5 pi)|
    CHECK(hit.trajectory[0] == Complex{0.0, 0.0});
    // interior value sin(sqrt(lambda) x)
    const double x = hit.trajectory.node(100);
    CHECK(std::abs(hit.trajectory[100] - Complex{std::sin(2.0 * x), 0.0}) < 1e-10);
}

TEST_CASE("shooting overflow guard") {
    auto V = Potential::mathieu(Complex{0.0, 0.0});
    CHECK_THROWS_AS(shoot(V, Complex{-250000.0, 0.0}, 512), ShootError);
    CHECK_THROWS_AS(shoot(V, Complex{4.0, 0.0}, 32), std::invalid_argument);
}

TEST_CASE("free eigenvalues land on j^2") {
    auto V = Potential::mathieu(Complex{0.0, 0.0});
    auto p = find_eigenvalue(V, 5, 1024);
    CHECK(std::abs(p.lambda - Complex{25.0, 0.0}) < 1e-9);
    CHECK(std::abs(p.deviation) < 1e-7);
    CHECK(p.omega.real() > 0.0);
    CHECK(p.eigenfunction[0] == Complex{0.0, 0.0});
    CHECK(p.residual <= 1e-10);
    CHECK_THROWS_AS(find_eigenvalue(V, 0, 1024), std::invalid_argument);
}

TEST_CASE("shooting agrees with the Mathieu matrix oracle") {
    const Complex q{0.0, 0.25};
    auto V = Potential::mathieu(q);
    auto spectrum = characteristic_values(q, 4);
    auto p = find_eigenvalue(V, 2, 2048);
    CHECK(std::abs(p.lambda - spectrum.values[1]) < 1e-6);
}

TEST_CASE("decay law |w_j - j| j^3 stays bounded") {
    const Complex q{0.0, 0.25};
    auto V = Potential::mathieu(q);
    double worst = 0.0;
    for (int j = 10; j <= 40; j += 3) {
        auto p = find_eigenvalue(V, j, 2048);
        const double jd = static_cast<double>(j);
        worst = std::max(worst, std::abs(p.omega - Complex{jd, 0.0}) * jd * jd * jd);
    }
    CHECK(worst <= 10.0 * std::norm(q));
}

TEST_CASE("asymptotic eigenfunction") {
    auto free_pot = Potential::mathieu(Complex{0.0, 0.0});
    auto g = asymptotic_eigenfunction(free_pot, 3, 512);
    for (std::size_t i = 0; i <= 512; i += 64) {
        CHECK(std::abs(g[i] - Complex{std::sin(3.0 * g.node(i)), 0.0}) < 1e-14);
    }
    CHECK(g[0] == Complex{0.0, 0.0});

    // remainder decays like j^-2 against the shooting eigenfunction
    auto V = Potential::mathieu(Complex{0.0, 0.5});
    double c_min = 1e300, c_max = 0.0;
    for (int j : {20, 28, 36}) {
        auto p = find_eigenvalue(V, j, 2048);
        auto a = asymptotic_eigenfunction(V, j, 2048);
        const Complex scale =
            inner_product(a, p.eigenfunction) / inner_product(p.eigenfunction, p.eigenfunction);
        double sup = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            sup = std::max(sup, std::abs(scale * p.eigenfunction[i] - a[i]));
        c_min = std::min(c_min, sup * j * j);
        c_max = std::max(c_max, sup * j * j);
    }
    CHECK(c_max / c_min < 5.0);   // the scaled remainders share one constant
    CHECK(c_max < 1.0);
}

TEST_CASE("remainder of the two-term form vanishes as j grows") {
    auto V = Potential::mathieu(Complex{0.0, 0.5});
    auto p = find_eigenvalue(V, 30, 2048);
    auto a = asymptotic_eigenfunction(V, 30, 2048);
    const Complex scale =
        inner_product(a, p.eigenfunction) / inner_product(p.eigenfunction, p.eigenfunction);
    double sup = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sup = std::max(sup, std::abs(scale * p.eigenfunction[i] - a[i]));
    CHECK(sup < 1e-3);
}

TEST_CASE("eigen sweep: free case, neighbourhood bound, warning flag") {
    auto free_pot = Potential::mathieu(Complex{0.0, 0.0});
    auto sweep = eigen_sweep(free_pot, 20, 1024);
    CHECK_FALSE(sweep.norm_bound_warning);
    for (const auto& p : sweep.pairs) {
        const double jj = static_cast<double>(p.index) * p.index;
        CHECK(std::abs(p.lambda - Complex{jj, 0.0}) < 1e-8);
    }

    const Complex q{0.0, 0.25};
    auto sweep2 = eigen_sweep(Potential::mathieu(q), 30, 1024);
    for (const auto& p : sweep2.pairs) {
        const double jj = static_cast<double>(p.index) * p.index;
        CHECK(std::abs(p.lambda - Complex{jj, 0.0}) <= 2.0 * std::abs(q));
    }

    auto sweep3 = eigen_sweep(Potential::mathieu(Complex{0.0, 1.0}), 10, 1024);
    CHECK(sweep3.norm_bound_warning);   // ||V||_inf = 2 >= 3/2
}

TEST_CASE("conjugating the potential conjugates the spectrum") {
    auto V = Potential::mathieu(Complex{0.2, 0.3});
    auto p = find_eigenvalue(V, 5, 1024);
    auto pc = find_eigenvalue(V.conjugated(), 5, 1024);
    CHECK(std::abs(std::conj(p.lambda) - pc.lambda) < 1e-8);
}

TEST_CASE("real potentials have real spectra") {
    auto g = GridFunction::sample(
        1024, [](double x) { return Complex{x >= kPi / 2.0 ? 1.0 : 0.0, 0.0}; });
    auto sweep = eigen_sweep(Potential::samples(g), 12, 1024);
    for (const auto& p : sweep.pairs) CHECK(std::abs(p.lambda.imag()) < 1e-8);
}

TEST_CASE("an unreachable tolerance reports the last iterate") {
    auto V = Potential::mathieu(Complex{0.0, 0.25});
    try {
        find_eigenvalue(V, 3, 512, 1e-30);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.index == 3);
        CHECK(std::abs(e.last_lambda - Complex{9.0, 0.0}) < 1.0);
    }
}

TEST_CASE("eigenvalue crossing surfaces as a misindex error") {
    // for the real Mathieu coefficient q = 1.8 the lowest eigenvalue
    // drops below 0.5, nearer (j-1)^2 = 0 than 1
    auto V = Potential::mathieu(Complex{1.8, 0.0});
    CHECK_THROWS_AS(find_eigenvalue(V, 1, 1024), MisindexError);
}
