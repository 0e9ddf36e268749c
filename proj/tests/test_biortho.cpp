#include <doctest.h>

#include "revival/biortho.hpp"

using namespace revival;

TEST_CASE("free case gives the orthonormal sine basis") {
    auto sys = build_system(Potential::mathieu(Complex{0.0, 0.0}), 12, 512);
    CHECK(sys.gram_defect < 1e-9);
    for (const auto& pair : sys.pairs) {
        CHECK(std::abs(pair.gamma - Complex{1.0, 0.0}) < 1e-9);
        auto d = sine_basis(pair.index, 512);
        for (std::size_t i = 0; i < d.size(); i += 37) {
            CHECK(std::abs(pair.phi[i] - d[i]) < 1e-8);
            CHECK(std::abs(pair.phi_star[i] - d[i]) < 1e-8);
        }
    }
}

TEST_CASE("expansion coefficients pick out sine modes") {
    auto sys = build_system(Potential::mathieu(Complex{0.0, 0.0}), 8, 512);
    auto coeffs = expand(sys, sine_basis(3, 512));
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const double expected = n == 2 ? 1.0 : 0.0;
        CHECK(std::abs(coeffs[n] - Complex{expected, 0.0}) < 1e-10);
    }
    auto zeros = expand(sys, GridFunction(512));
    for (const auto& c : zeros) CHECK(std::abs(c) == 0.0);
    CHECK_THROWS_AS(expand(sys, GridFunction(256)), std::invalid_argument);
}

TEST_CASE("mathieu system is bi-orthogonal at quadrature accuracy") {
    auto sys = build_system(Potential::mathieu(Complex{0.0, 0.25}), 20, 1024);
    CHECK(sys.gram_defect < 1e-6);
    double worst = 0.0, worst_star = 0.0;
    for (const auto& pair : sys.pairs) {
        if (pair.index < 5) continue;
        worst = std::max(worst, std::abs(pair.gamma - Complex{1.0, 0.0}) * pair.index);
        worst_star = std::max(
            worst_star, std::abs(pair.phi_star.l2_norm() - 1.0) * pair.index);
    }
    CHECK(worst < 1.0);        // j |gamma_j - 1| bounded
    CHECK(worst_star < 1.0);   // j | ||phi*_j|| - 1 | bounded
}

TEST_CASE("default-tolerance gram defect at one hundred modes") {
    auto sys = build_system(Potential::mathieu(Complex{0.0, 0.25}), 100, 4096);
    CHECK(sys.gram_defect < 1e-6);
}

TEST_CASE("riesz distance to the sine basis decays like 1/j") {
    auto sys = build_system(Potential::mathieu(Complex{0.0, 0.5}), 24, 1024);
    double worst = 0.0;
    for (const auto& pair : sys.pairs) {
        if (pair.index < 8) continue;
        GridFunction unit = pair.phi;
        const double n = unit.l2_norm();
        for (auto& v : unit.values()) v /= n;
        const double dist = l2_distance(unit, sine_basis(pair.index, 1024));
        worst = std::max(worst, dist * dist * pair.index * pair.index);
    }
    CHECK(worst < 1.0);
}

TEST_CASE("indicator expansion converges in L2") {
    const std::size_t m = 1024;
    auto f = make_indicator(3.0 * kPi / 8.0, 5.0 * kPi / 8.0, m);
    auto sys = build_system(Potential::mathieu(Complex{0.0, 0.25}), 24, m);
    auto coeffs = expand(sys, f);
    double previous = 1e300;
    for (int n : {6, 12, 24}) {
        GridFunction partial(m);
        for (int k = 0; k < n; ++k)
            for (std::size_t i = 0; i < partial.size(); ++i)
                partial[i] += coeffs[static_cast<std::size_t>(k)] *
                              sys.pairs[static_cast<std::size_t>(k)].phi[i];
        const double dist = l2_distance(f, partial);
        CHECK(dist < previous + 1e-12);
        previous = dist;
    }
}

TEST_CASE("smooth data reconstruct to quadrature accuracy") {
    const std::size_t m = 2048;
    auto sys = build_system(Potential::mathieu(Complex{0.0, 0.25}), 40, m);
    auto f = GridFunction::sample(
        m, [](double x) { return Complex{x * (kPi - x) * std::sin(x), 0.0}; });
    auto coeffs = expand(sys, f);
    GridFunction rec(m);
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        for (std::size_t i = 0; i < rec.size(); ++i)
            rec[i] += coeffs[n] * sys.pairs[n].phi[i];
    CHECK(l2_distance(f, rec) < 1e-3);
}

TEST_CASE("degenerate pairings are rejected") {
    // fabricate sweeps whose direct and adjoint eigenfunctions are
    // orthogonal sine modes
    EigenSweep direct, adjoint;
    EigenPair p;
    p.index = 1;
    p.lambda = Complex{1.0, 0.0};
    p.omega = Complex{1.0, 0.0};
    p.eigenfunction = sine_basis(1, 128);
    direct.pairs.push_back(p);
    p.eigenfunction = sine_basis(2, 128);
    adjoint.pairs.push_back(p);
    CHECK_THROWS_AS(assemble_biorthogonal(direct, adjoint), DegeneracyError);
}
