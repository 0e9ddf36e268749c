#include "revival/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace revival {

namespace {

// Accumulate g[i] += sum_j coef[j] * sin(j x_i) via the Chebyshev
// three-term recurrence in j (node-major, deterministic order).
void add_sine_series(GridFunction& g, const std::vector<Complex>& coef) {
    const std::size_t m = g.intervals();
    for (std::size_t i = 0; i <= m; ++i) {
        const double x = g.node(i);
        const double two_cos = 2.0 * std::cos(x);
        double s_prev = 0.0;
        double s_cur = std::sin(x);
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < coef.size(); ++j) {
            acc += coef[j] * s_cur;
            const double s_next = two_cos * s_cur - s_prev;
            s_prev = s_cur;
            s_cur = s_next;
        }
        g[i] += acc;
    }
}

std::vector<Complex> rational_phases(const RationalTime& t, int modes) {
    // exp(-2 pi i j^2 p / q) via exact integer reduction of j^2 p mod q
    std::vector<Complex> roots(static_cast<std::size_t>(t.q));
    for (std::int64_t r = 0; r < t.q; ++r)
        roots[static_cast<std::size_t>(r)] = std::polar(
            1.0, -2.0 * kPi * static_cast<double>(r) / static_cast<double>(t.q));
    std::vector<Complex> phases(static_cast<std::size_t>(modes));
    for (int j = 1; j <= modes; ++j) {
        const std::int64_t jj = static_cast<std::int64_t>(j) % t.q;
        const std::int64_t r = (jj * jj % t.q) * (t.p % t.q) % t.q;
        phases[static_cast<std::size_t>(j - 1)] = roots[static_cast<std::size_t>(r)];
    }
    return phases;
}

}  // namespace

std::vector<Complex> sine_coefficients(const GridFunction& f, int modes) {
    if (modes < 1) throw std::invalid_argument("mode count must be >= 1");
    const std::size_t m = f.intervals();
    const double h = f.spacing();
    const double amp = std::sqrt(2.0 / kPi);
    std::vector<Complex> coef(static_cast<std::size_t>(modes), Complex{0.0, 0.0});
    for (std::size_t i = 0; i <= m; ++i) {
        double w = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        w *= h / 3.0;
        const Complex fw = f[i] * (w * amp);
        const double x = f.node(i);
        const double two_cos = 2.0 * std::cos(x);
        double s_prev = 0.0;
        double s_cur = std::sin(x);
        for (int j = 0; j < modes; ++j) {
            coef[static_cast<std::size_t>(j)] += fw * s_cur;
            const double s_next = two_cos * s_cur - s_prev;
            s_prev = s_cur;
            s_cur = s_next;
        }
    }
    return coef;
}

GridFunction sine_truncation(const GridFunction& f, int modes) {
    auto coef = sine_coefficients(f, modes);
    const double amp = std::sqrt(2.0 / kPi);
    for (auto& c : coef) c *= amp;
    GridFunction g(f.intervals());
    add_sine_series(g, coef);
    return g;
}

GridFunction evolve(const BiorthogonalSystem& system,
                    const std::vector<EigenPair>& pairs, const GridFunction& f,
                    double t) {
    if (t < 0.0) throw std::invalid_argument("evolution time must be >= 0");
    if (pairs.size() != system.pairs.size())
        throw std::invalid_argument("system and eigenpair list differ in mode count");
    if (f.intervals() != system.intervals)
        throw std::invalid_argument("datum grid does not match the system grid");
    for (std::size_t n = 0; n < pairs.size(); ++n) {
        if (pairs[n].index != system.pairs[n].index)
            throw std::invalid_argument("system and eigenpair indices disagree");
        if (pairs[n].lambda.imag() * t > 50.0)
            throw std::runtime_error("exp(-i lambda t) overflows at index " +
                                     std::to_string(pairs[n].index) +
                                     ": Im(lambda) t > 50");
    }
    const auto coeffs = expand(system, f);
    GridFunction u(system.intervals);
    for (std::size_t n = 0; n < pairs.size(); ++n) {
        const Complex factor =
            coeffs[n] * std::exp(Complex{0.0, -1.0} * pairs[n].lambda * t);
        const GridFunction& phi = system.pairs[n].phi;
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += factor * phi[i];
    }
    return u;
}

GridFunction free_evolution(const GridFunction& f, double t, int modes) {
    if (t < 0.0) throw std::invalid_argument("evolution time must be >= 0");
    auto coef = sine_coefficients(f, modes);
    const double amp = std::sqrt(2.0 / kPi);
    for (int j = 1; j <= modes; ++j) {
        const double jj = static_cast<double>(j) * static_cast<double>(j);
        coef[static_cast<std::size_t>(j - 1)] *=
            amp * std::polar(1.0, -jj * t);
    }
    GridFunction g(f.intervals());
    add_sine_series(g, coef);
    return g;
}

GridFunction free_evolution(const GridFunction& f, const RationalTime& t, int modes) {
    auto coef = sine_coefficients(f, modes);
    const auto phases = rational_phases(t, modes);
    const double amp = std::sqrt(2.0 / kPi);
    for (std::size_t j = 0; j < coef.size(); ++j) coef[j] *= amp * phases[j];
    GridFunction g(f.intervals());
    add_sine_series(g, coef);
    return g;
}

GridFunction free_evolution_from_coeffs(const std::vector<Complex>& coeffs,
                                        const RationalTime& t,
                                        std::size_t intervals) {
    const auto phases = rational_phases(t, static_cast<int>(coeffs.size()));
    std::vector<Complex> coef(coeffs.size());
    const double amp = std::sqrt(2.0 / kPi);
    for (std::size_t j = 0; j < coef.size(); ++j)
        coef[j] = coeffs[j] * amp * phases[j];
    GridFunction g(intervals);
    add_sine_series(g, coef);
    return g;
}

RevivalDecomposition decompose_at_rational_time(const Potential& V,
                                                const BiorthogonalSystem& system,
                                                const std::vector<EigenPair>& pairs,
                                                const GridFunction& f,
                                                const RationalTime& t) {
    RevivalDecomposition d{t, GridFunction{}, GridFunction{}, GridFunction{},
                           system.modes()};
    // eigenvalues of the centered potential, shifted back by <V>: the
    // shift factors out of the series as the Theorem's mean phase
    d.solution = evolve(system, pairs, f, t.seconds());
    const Complex phase = mean_phase(V.mean(), t);
    for (auto& v : d.solution.values()) v *= phase;
    d.revival_part = revival_superposition(f, t, V.mean());
    d.correction = d.solution - d.revival_part;
    return d;
}

}  // namespace revival
