#include <doctest.h>

#include <random>

#include "revival/potential.hpp"

using namespace revival;

TEST_CASE("mathieu evaluation") {
    auto V = Potential::mathieu(Complex{0.0, 0.25});
    CHECK(std::abs(V.evaluate(0.0) - Complex{0.0, 0.5}) < 1e-15);   // 2q cos 0
    auto W = Potential::mathieu(Complex{0.0, 0.5});
    CHECK(std::abs(W.evaluate(kPi / 4.0)) < 1e-15);                 // cos(pi/2) = 0
    CHECK_THROWS_AS(V.evaluate(-0.1), std::domain_error);
    CHECK_THROWS_AS(V.evaluate(kPi + 0.1), std::domain_error);
}

TEST_CASE("fourier kind reproduces the mathieu potential") {
    const Complex q{0.2, -0.4};
    auto mat = Potential::mathieu(q);
    auto fou = Potential::fourier({Complex{0, 0}, Complex{0, 0}, 2.0 * q});
    for (double x : {0.0, 0.3, 1.1, 2.2, kPi}) {
        CHECK(std::abs(mat.evaluate(x) - fou.evaluate(x)) < 1e-14);
    }
}

TEST_CASE("mean of the potential") {
    CHECK(Potential::mathieu(Complex{0.0, 1.0}).mean() == Complex{0.0, 0.0});
    const Complex c{0.7, -0.2};
    CHECK(std::abs(Potential::fourier({c}).mean() - c) < 1e-13);
    // V(x) = x tabulated on 4097 points: mean pi/2
    auto lin = GridFunction::sample(4096, [](double x) { return Complex{x, 0.0}; });
    CHECK(std::abs(Potential::samples(lin).mean() - Complex{kPi / 2.0, 0.0}) < 1e-8);
}

TEST_CASE("sup norm dominates the mean") {
    for (Complex q : {Complex{0.0, 0.25}, Complex{1.0, 0.5}, Complex{0.0, 2.0}}) {
        auto V = Potential::mathieu(q);
        CHECK(V.sup_norm() >= std::abs(V.mean()));
        CHECK(V.sup_norm() == doctest::Approx(2.0 * std::abs(q)).epsilon(1e-6));
    }
}

TEST_CASE("antiderivative against the closed form q sin(2x)") {
    const Complex q{0.3, -0.6};
    auto V = Potential::mathieu(q);
    CHECK(V.antiderivative(0.0) == Complex{0.0, 0.0});
    for (double x : {0.17, 0.9, 1.7, 2.6, kPi}) {
        CHECK(std::abs(V.antiderivative(x) - q * std::sin(2.0 * x)) < 1e-10);
    }
    auto one = Potential::fourier({Complex{1.0, 0.0}});
    CHECK(std::abs(one.antiderivative(kPi) - Complex{kPi, 0.0}) < 1e-12);
}

TEST_CASE("second-order term against symbolic integration") {
    const Complex q{0.0, 0.5};
    auto V = Potential::mathieu(q);
    CHECK(V.second_order_term(0.0) == Complex{0.0, 0.0});
    for (double x : {0.4, 1.2, 2.3, kPi}) {
        const Complex exact = q * q * (1.0 - std::cos(4.0 * x)) / 4.0 -
                              2.0 * q * std::cos(2.0 * x) + 2.0 * q;
        CHECK(std::abs(V.second_order_term(x) - exact) < 1e-9);
    }
    // constant potential: V1 = cx, so the integral term is c^2 x^2 / 2
    const Complex c{0.8, 0.3};
    auto con = Potential::fourier({c});
    for (double x : {0.5, 1.5, 3.0}) {
        CHECK(std::abs(con.second_order_term(x) - c * c * x * x / 2.0) < 1e-10);
    }
}

TEST_CASE("V1 is additive on subintervals") {
    const Complex q{-0.4, 0.9};
    auto V = Potential::mathieu(q);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        const Complex direct = V.antiderivative(b) - V.antiderivative(a);
        const Complex exact = q * (std::sin(2.0 * b) - std::sin(2.0 * a));
        CHECK(std::abs(direct - exact) < 1e-10);
    }
}

TEST_CASE("doubling the quadrature grid leaves smooth results unchanged") {
    const Complex q{0.1, 0.7};
    auto coarse = Potential::mathieu(q, 4096);
    auto fine = Potential::mathieu(q, 8192);
    CHECK(std::abs(coarse.mean() - fine.mean()) < 1e-12);
    for (double x : {0.6, 1.9, 2.8}) {
        CHECK(std::abs(coarse.antiderivative(x) - fine.antiderivative(x)) < 1e-12);
    }
}

TEST_CASE("samples kind interpolates and integrates the tabulated data") {
    auto g = GridFunction::sample(2048, [](double x) { return Complex{std::cos(2.0 * x), 0.0}; });
    auto V = Potential::samples(g);
    const double mid = 0.5 * (g.node(100) + g.node(101));
    const Complex expected = 0.5 * (g[100] + g[101]);
    CHECK(std::abs(V.evaluate(mid) - expected) < 1e-14);
    // trapezoid-level accuracy on smooth tabulated data
    CHECK(std::abs(V.antiderivative(1.0) - Complex{std::sin(2.0) / 2.0, 0.0}) < 1e-6);
    const Complex v2_exact = 0.25 * (1.0 - std::cos(4.0)) / 4.0 - std::cos(2.0) + 1.0;
    CHECK(std::abs(V.second_order_term(1.0) - v2_exact) < 1e-5);
}

TEST_CASE("mean centering and shifting") {
    const Complex c{0.3, 0.1};
    auto V = Potential::mathieu(Complex{0.0, 0.25}).shifted(c);
    CHECK(std::abs(V.mean() - c) < 1e-13);
    auto centered = V.mean_centered();
    CHECK(std::abs(centered.mean()) < 1e-13);
    for (double x : {0.2, 1.4, 2.9}) {
        CHECK(std::abs(V.evaluate(x) - centered.evaluate(x) - V.mean()) < 1e-12);
    }
    auto conj = V.conjugated();
    CHECK(std::abs(conj.evaluate(1.0) - std::conj(V.evaluate(1.0))) < 1e-15);
}
