#include "revival/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace revival {

namespace {

void check_intervals(std::size_t m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("grid interval count must be even and >= 2, got " +
                                    std::to_string(m));
}

void check_match(const GridFunction& a, const GridFunction& b) {
    if (a.intervals() != b.intervals())
        throw std::invalid_argument("grid mismatch: " + std::to_string(a.intervals()) +
                                    " vs " + std::to_string(b.intervals()) + " intervals");
}

}  // namespace

GridFunction::GridFunction(std::size_t intervals)
    : intervals_(intervals), values_(intervals + 1, Complex{0.0, 0.0}) {
    check_intervals(intervals);
}

GridFunction::GridFunction(std::size_t intervals, std::vector<Complex> values)
    : intervals_(intervals), values_(std::move(values)) {
    check_intervals(intervals);
    if (values_.size() != intervals + 1)
        throw std::invalid_argument("value count does not match node count");
}

GridFunction GridFunction::sample(std::size_t intervals,
                                  const std::function<Complex(double)>& f) {
    GridFunction g(intervals);
    for (std::size_t i = 0; i <= intervals; ++i) g[i] = f(g.node(i));
    return g;
}

Complex GridFunction::value_at(double x) const {
    const double h = spacing();
    double u = x / h;
    if (u < -1e-9 || u > static_cast<double>(intervals_) + 1e-9)
        throw std::domain_error("evaluation point outside [0,pi]");
    u = std::clamp(u, 0.0, static_cast<double>(intervals_));
    const auto i = static_cast<std::size_t>(u);
    const double theta = u - static_cast<double>(i);
    if (theta < 1e-9 || i == intervals_) return values_[i];
    if (theta > 1.0 - 1e-9) return values_[i + 1];
    return (1.0 - theta) * values_[i] + theta * values_[i + 1];
}

double GridFunction::l2_norm() const {
    // |f|^2 is real; reuse the complex Simpson accumulator.
    std::vector<Complex> sq(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) sq[i] = std::norm(values_[i]);
    return std::sqrt(std::max(0.0, simpson(sq, spacing()).real()));
}

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

double GridFunction::max_adjacent_jump() const {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < values_.size(); ++i)
        m = std::max(m, std::abs(values_[i + 1] - values_[i]));
    return m;
}

GridFunction& GridFunction::operator+=(const GridFunction& rhs) {
    check_match(*this, rhs);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& rhs) {
    check_match(*this, rhs);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(Complex s) {
    for (auto& v : values_) v *= s;
    return *this;
}

Complex simpson(const std::vector<Complex>& values, double spacing) {
    if (values.size() < 3 || values.size() % 2 == 0)
        throw std::invalid_argument("Simpson needs an odd node count >= 3");
    Complex acc = values.front() + values.back();
    for (std::size_t i = 1; i + 1 < values.size(); i += 2) acc += 4.0 * values[i];
    for (std::size_t i = 2; i + 1 < values.size(); i += 2) acc += 2.0 * values[i];
    return acc * (spacing / 3.0);
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
    check_match(f, g);
    std::vector<Complex> prod(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) prod[i] = f[i] * std::conj(g[i]);
    return simpson(prod, f.spacing());
}

double l2_distance(const GridFunction& f, const GridFunction& g) {
    check_match(f, g);
    std::vector<Complex> sq(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) sq[i] = std::norm(f[i] - g[i]);
    return std::sqrt(std::max(0.0, simpson(sq, f.spacing()).real()));
}

GridFunction sine_basis(int index, std::size_t intervals) {
    if (index < 1) throw std::invalid_argument("sine mode index must be >= 1");
    const double amp = std::sqrt(2.0 / kPi);
    GridFunction g(intervals);
    for (std::size_t i = 0; i <= intervals; ++i)
        g[i] = amp * std::sin(static_cast<double>(index) * g.node(i));
    return g;
}

GridFunction make_indicator(double a, double b, std::size_t intervals) {
    if (!(0.0 <= a && a < b && b <= kPi))
        throw std::invalid_argument("indicator bounds must satisfy 0 <= a < b <= pi");
    GridFunction g(intervals);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double x = g.node(i);
        g[i] = (x >= a - 1e-12 && x <= b + 1e-12) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    }
    return g;
}

GridFunction make_poly(std::size_t intervals) {
    GridFunction g(intervals);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double x = g.node(i);
        g[i] = x * (kPi - x);
    }
    return g;
}

std::vector<Complex> indicator_sine_coefficients(double a, double b, int modes) {
    std::vector<Complex> c(static_cast<std::size_t>(modes));
    const double amp = std::sqrt(2.0 / kPi);
    for (int j = 1; j <= modes; ++j) {
        const double dj = static_cast<double>(j);
        c[static_cast<std::size_t>(j - 1)] = amp * (std::cos(dj * a) - std::cos(dj * b)) / dj;
    }
    return c;
}

}  // namespace revival
