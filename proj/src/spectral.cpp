#include "revival/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <mutex>
#include <thread>

namespace revival {

namespace {

// Potential sampled at the RK4 stage points x_k = k h/2, k = 0..2M.
std::vector<Complex> stage_values(const Potential& V, std::size_t intervals) {
    const double hh = kPi / static_cast<double>(2 * intervals);
    std::vector<Complex> v(2 * intervals + 1);
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = V.evaluate(std::min(kPi, static_cast<double>(k) * hh));
    return v;
}

struct Trig {
    std::vector<Complex> s, c;  // sin(omega x_k), cos(omega x_k) on the stage grid
};

Trig stage_trig(Complex omega, std::size_t intervals) {
    const double hh = kPi / static_cast<double>(2 * intervals);
    const double a = omega.real();
    const double b = omega.imag();
    if (std::abs(b) * kPi > 300.0)
        throw ShootError("shooting overflow: |Im sqrt(lambda)| too large; "
                         "rescale lambda or increase the grid");
    Trig t;
    t.s.resize(2 * intervals + 1);
    t.c.resize(2 * intervals + 1);
    for (std::size_t k = 0; k < t.s.size(); ++k) {
        const double x = static_cast<double>(k) * hh;
        const double sa = std::sin(a * x);
        const double ca = std::cos(a * x);
        const double eb = std::exp(b * x);
        const double ch = 0.5 * (eb + 1.0 / eb);
        const double sh = 0.5 * (eb - 1.0 / eb);
        t.s[k] = Complex{sa * ch, ca * sh};
        t.c[k] = Complex{ca * ch, -sa * sh};
    }
    return t;
}

struct State {
    Complex a, b;    // y = c*a + s*b
    Complex az, bz;  // z = c*az + s*bz (variational solution)
};

State rk4_rhs(const State& u, Complex s, Complex c, Complex v, Complex inv_omega) {
    const Complex y = c * u.a + s * u.b;
    const Complex z = c * u.az + s * u.bz;
    const Complex g1 = v * y * inv_omega;
    const Complex g2 = (v * z - y) * inv_omega;
    return State{-s * g1, c * g1, -s * g2, c * g2};
}

struct Integration {
    GridFunction trajectory;
    Complex endpoint;
    Complex endpoint_derivative;
};

Integration integrate(const std::vector<Complex>& stage_v, Complex omega,
                      std::size_t intervals) {
    const double h = kPi / static_cast<double>(intervals);
    if (std::abs(omega) < 0.05)
        throw ShootError("shooting normalization degenerates near lambda = 0");
    const Complex inv_omega = 1.0 / omega;
    const Trig trig = stage_trig(omega, intervals);

    State u{Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    GridFunction traj(intervals);
    traj[0] = Complex{0.0, 0.0};

    for (std::size_t i = 0; i < intervals; ++i) {
        const std::size_t k0 = 2 * i, k1 = 2 * i + 1, k2 = 2 * i + 2;
        const State f1 = rk4_rhs(u, trig.s[k0], trig.c[k0], stage_v[k0], inv_omega);
        State u2{u.a + 0.5 * h * f1.a, u.b + 0.5 * h * f1.b,
                 u.az + 0.5 * h * f1.az, u.bz + 0.5 * h * f1.bz};
        const State f2 = rk4_rhs(u2, trig.s[k1], trig.c[k1], stage_v[k1], inv_omega);
        State u3{u.a + 0.5 * h * f2.a, u.b + 0.5 * h * f2.b,
                 u.az + 0.5 * h * f2.az, u.bz + 0.5 * h * f2.bz};
        const State f3 = rk4_rhs(u3, trig.s[k1], trig.c[k1], stage_v[k1], inv_omega);
        State u4{u.a + h * f3.a, u.b + h * f3.b,
                 u.az + h * f3.az, u.bz + h * f3.bz};
        const State f4 = rk4_rhs(u4, trig.s[k2], trig.c[k2], stage_v[k2], inv_omega);
        u.a += (h / 6.0) * (f1.a + 2.0 * f2.a + 2.0 * f3.a + f4.a);
        u.b += (h / 6.0) * (f1.b + 2.0 * f2.b + 2.0 * f3.b + f4.b);
        u.az += (h / 6.0) * (f1.az + 2.0 * f2.az + 2.0 * f3.az + f4.az);
        u.bz += (h / 6.0) * (f1.bz + 2.0 * f2.bz + 2.0 * f3.bz + f4.bz);
        traj[i + 1] = trig.c[k2] * u.a + trig.s[k2] * u.b;
    }

    if (!std::isfinite(u.a.real()) || !std::isfinite(u.b.real()) ||
        !std::isfinite(u.a.imag()) || !std::isfinite(u.b.imag()))
        throw ShootError("shooting overflow: trajectory diverged; increase the grid");

    Integration out;
    out.trajectory = std::move(traj);
    out.endpoint = trig.c.back() * u.a + trig.s.back() * u.b;
    out.endpoint_derivative = trig.c.back() * u.az + trig.s.back() * u.bz;
    return out;
}

EigenPair solve_index(const std::vector<Complex>& stage_v, const Potential& V,
                      int index, std::size_t intervals, double tol,
                      int max_iterations) {
    const double dj = static_cast<double>(index);
    Complex lambda = dj * dj + V.mean();
    Integration last;
    bool converged = false;
    for (int it = 0; it < max_iterations; ++it) {
        last = integrate(stage_v, std::sqrt(lambda), intervals);
        if (std::abs(last.endpoint) < tol) {
            converged = true;
            break;
        }
        if (std::abs(last.endpoint_derivative) < 1e-300)
            throw ConvergenceError("Newton derivative vanished at index " +
                                       std::to_string(index),
                                   index, lambda);
        Complex step = last.endpoint / last.endpoint_derivative;
        // keep the iterate inside the spectral gap around j^2
        const double cap = dj + 1.0;
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        lambda -= step;
    }
    if (!converged)
        throw ConvergenceError("eigenvalue iteration for index " + std::to_string(index) +
                                   " did not converge in " + std::to_string(max_iterations) +
                                   " steps",
                               index, lambda);

    const Complex centered = lambda - V.mean();
    const double d_self = std::abs(centered - dj * dj);
    const double d_down = std::abs(centered - (dj - 1.0) * (dj - 1.0));
    const double d_up = std::abs(centered - (dj + 1.0) * (dj + 1.0));
    if (d_down < d_self || d_up < d_self)
        throw MisindexError("eigenvalue for index " + std::to_string(index) +
                                " converged nearer a neighbouring j^2 "
                                "(eigenvalue crossing?)",
                            index, lambda);

    EigenPair p;
    p.index = index;
    p.lambda = lambda;
    p.omega = std::sqrt(lambda);
    p.deviation = (lambda - dj * dj) * (dj * dj);
    p.eigenfunction = std::move(last.trajectory);
    p.residual = std::abs(last.endpoint);
    return p;
}

}  // namespace

ShootResult shoot(const Potential& V, Complex lambda, std::size_t intervals) {
    if (intervals < 64)
        throw std::invalid_argument("shooting grid must have at least 64 intervals");
    const auto stage_v = stage_values(V, intervals);
    auto res = integrate(stage_v, std::sqrt(lambda), intervals);
    return ShootResult{std::move(res.trajectory), res.endpoint};
}

EigenPair find_eigenvalue(const Potential& V, int index, std::size_t intervals,
                          double tol, int max_iterations) {
    if (index < 1) throw std::invalid_argument("eigenvalue index must be >= 1");
    if (intervals < 64)
        throw std::invalid_argument("shooting grid must have at least 64 intervals");
    const auto stage_v = stage_values(V, intervals);
    return solve_index(stage_v, V, index, intervals, tol, max_iterations);
}

GridFunction asymptotic_eigenfunction(const Potential& V, int index,
                                      std::size_t intervals) {
    if (index < 1) throw std::invalid_argument("eigenvalue index must be >= 1");
    const double dj = static_cast<double>(index);
    GridFunction g(intervals);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double x = g.node(i);
        g[i] = std::sin(dj * x) -
               std::cos(dj * x) * V.antiderivative(x) / (2.0 * dj);
    }
    return g;
}

EigenSweep eigen_sweep(const Potential& V, int count, std::size_t intervals,
                       unsigned jobs, double tol) {
    if (count < 1) throw std::invalid_argument("mode count must be >= 1");
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    const auto stage_v = stage_values(V, intervals);

    EigenSweep sweep;
    sweep.norm_bound_warning = V.sup_norm() >= 1.5;
    sweep.pairs.resize(static_cast<std::size_t>(count));

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<bool> failed{false};
    std::atomic<int> next{1};
    auto worker = [&]() {
        for (;;) {
            const int j = next.fetch_add(1);
            if (j > count || failed.load()) break;
            try {
                sweep.pairs[static_cast<std::size_t>(j - 1)] =
                    solve_index(stage_v, V, j, intervals, tol, 50);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                failed.store(true);
                break;
            }
        }
    };
    if (jobs <= 1 || count == 1) {
        worker();
    } else {
        std::vector<std::future<void>> tasks;
        for (unsigned t = 0; t + 1 < jobs; ++t)
            tasks.push_back(std::async(std::launch::async, worker));
        worker();
        for (auto& t : tasks) t.get();
    }
    if (failure) std::rethrow_exception(failure);

    // simplicity surrogate: computed eigenvalues must be pairwise distinct
    for (std::size_t a = 0; a < sweep.pairs.size(); ++a)
        for (std::size_t b = a + 1; b < sweep.pairs.size(); ++b)
            if (std::abs(sweep.pairs[a].lambda - sweep.pairs[b].lambda) < 1e-10)
                throw MisindexError("indices " + std::to_string(a + 1) + " and " +
                                        std::to_string(b + 1) +
                                        " converged to the same eigenvalue",
                                    static_cast<int>(b + 1), sweep.pairs[b].lambda);
    return sweep;
}

}  // namespace revival
