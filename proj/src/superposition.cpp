#include "revival/superposition.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace revival {

RationalTime::RationalTime(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("rational time needs positive p and q");
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
}

Complex odd_periodic_extension(const GridFunction& f, double x) {
    // reduce to [-pi, pi)
    double t = x - 2.0 * kPi * std::floor((x + kPi) / (2.0 * kPi));
    if (t >= kPi) t -= 2.0 * kPi;
    if (t >= 0.0) return f.value_at(t);
    return -f.value_at(-t);
}

GaussIndicator gauss_indicator(std::int64_t m, std::int64_t j, std::int64_t q) {
    if (q < 1) throw std::invalid_argument("gauss indicator needs q >= 1");
    Complex sum{0.0, 0.0};
    for (std::int64_t k = 0; k < q; ++k) {
        const double phase =
            2.0 * kPi * static_cast<double>((m - j) * k) / static_cast<double>(q);
        sum += Complex{std::cos(phase), std::sin(phase)};
    }
    const bool congruent = ((m - j) % q + q) % q == 0;
    const std::int64_t value = congruent ? q : 0;
    return GaussIndicator{value, std::abs(sum - Complex{static_cast<double>(value), 0.0})};
}

Complex mean_phase(Complex mean_potential, const RationalTime& t) {
    if (mean_potential == Complex{0.0, 0.0}) return Complex{1.0, 0.0};
    const Complex exponent = Complex{0.0, -2.0 * kPi} * mean_potential *
                             (static_cast<double>(t.p) / static_cast<double>(t.q));
    return std::exp(exponent);
}

GridFunction revival_superposition(const GridFunction& f, const RationalTime& t,
                                   Complex mean_potential) {
    const std::int64_t q = t.q;
    const std::int64_t p = t.p;
    const auto m_nodes = static_cast<std::int64_t>(f.intervals());

    // q-th roots of unity, exponents reduced in integer arithmetic
    std::vector<Complex> root(static_cast<std::size_t>(q));
    for (std::int64_t r = 0; r < q; ++r)
        root[static_cast<std::size_t>(r)] =
            std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(q));

    // inner sum over m for each shift index k
    std::vector<Complex> shift_weight(static_cast<std::size_t>(q), Complex{0.0, 0.0});
    for (std::int64_t k = 0; k < q; ++k) {
        Complex acc{0.0, 0.0};
        for (std::int64_t m = 0; m < q; ++m) {
            const std::int64_t e = (((m * k - ((m * m) % q) * (p % q)) % q) + q) % q;
            acc += root[static_cast<std::size_t>(e)];
        }
        shift_weight[static_cast<std::size_t>(k)] = acc;
    }

    const bool aligned = (2 * m_nodes) % q == 0;

    GridFunction out(f.intervals());
    if (aligned) {
        // shift by 2*pi*k/q = (2*M*k/q) grid cells; sample the odd
        // 2*pi-periodic extension on the integer lattice of period 2M
        const std::int64_t period = 2 * m_nodes;
        for (std::int64_t k = 0; k < q; ++k) {
            const Complex w = shift_weight[static_cast<std::size_t>(k)];
            if (w == Complex{0.0, 0.0}) continue;
            const std::int64_t offset = (2 * m_nodes * k) / q;
            for (std::int64_t i = 0; i <= m_nodes; ++i) {
                std::int64_t n = ((i - offset) % period + period) % period;
                // n = M is the reflection point x = pi (= -pi mod 2pi),
                // matching odd_periodic_extension there
                const Complex fo = n < m_nodes
                                       ? f[static_cast<std::size_t>(n)]
                                       : -f[static_cast<std::size_t>(period - n)];
                out[static_cast<std::size_t>(i)] += w * fo;
            }
        }
    } else {
        for (std::int64_t i = 0; i <= m_nodes; ++i) {
            const double x = out.node(static_cast<std::size_t>(i));
            Complex acc{0.0, 0.0};
            for (std::int64_t k = 0; k < q; ++k) {
                const Complex w = shift_weight[static_cast<std::size_t>(k)];
                if (w == Complex{0.0, 0.0}) continue;
                acc += w * odd_periodic_extension(
                               f, x - 2.0 * kPi * static_cast<double>(k) /
                                          static_cast<double>(q));
            }
            out[static_cast<std::size_t>(i)] = acc;
        }
    }
    // scale and phase applied as separate factors: the mean phase is
    // then an exact pointwise multiplier on the zero-mean field
    const double inv_q = 1.0 / static_cast<double>(q);
    for (auto& v : out.values()) v *= inv_q;
    const Complex phase = mean_phase(mean_potential, t);
    if (phase != Complex{1.0, 0.0})
        for (auto& v : out.values()) v *= phase;
    return out;
}

}  // namespace revival
