#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace revival {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Complex-valued function sampled on the uniform grid x_i = i*pi/M,
/// i = 0..M.  The node count M must be even (Simpson quadrature) and
/// at least 2.  GridFunctions combine arithmetically only when their
/// node counts match.
class GridFunction {
public:
    GridFunction() = default;
    explicit GridFunction(std::size_t intervals);
    GridFunction(std::size_t intervals, std::vector<Complex> values);

    static GridFunction sample(std::size_t intervals,
                               const std::function<Complex(double)>& f);

    std::size_t intervals() const { return intervals_; }   // M
    std::size_t size() const { return values_.size(); }    // M + 1
    double spacing() const { return kPi / static_cast<double>(intervals_); }
    double node(std::size_t i) const {
        return static_cast<double>(i) * kPi / static_cast<double>(intervals_);
    }

    const std::vector<Complex>& values() const { return values_; }
    std::vector<Complex>& values() { return values_; }
    Complex operator[](std::size_t i) const { return values_[i]; }
    Complex& operator[](std::size_t i) { return values_[i]; }

    /// Value at arbitrary x in [0,pi]: exact at nodes, linear in between.
    Complex value_at(double x) const;

    double l2_norm() const;        // Simpson
    double sup_norm() const;
    double max_adjacent_jump() const;

    GridFunction& operator+=(const GridFunction& rhs);
    GridFunction& operator-=(const GridFunction& rhs);
    GridFunction& operator*=(Complex s);

    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
    friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
    friend GridFunction operator*(Complex s, GridFunction f) { return f *= s; }

private:
    std::size_t intervals_ = 0;
    std::vector<Complex> values_;
};

/// <f,g> = int_0^pi f(x) conj(g(x)) dx by composite Simpson.
Complex inner_product(const GridFunction& f, const GridFunction& g);

double l2_distance(const GridFunction& f, const GridFunction& g);

/// Composite Simpson sum of sampled values over [0,pi]; values.size() odd.
Complex simpson(const std::vector<Complex>& values, double spacing);

/// Orthonormal Dirichlet sine mode d_j(x) = sqrt(2/pi) sin(jx) on the grid.
GridFunction sine_basis(int index, std::size_t intervals);

/// chi_[a,b] sampled nodewise (closed interval).
GridFunction make_indicator(double a, double b, std::size_t intervals);

/// x(pi - x) sampled on the grid.
GridFunction make_poly(std::size_t intervals);

/// Exact sine coefficients <chi_[a,b], d_j> = sqrt(2/pi)(cos(ja) - cos(jb))/j.
std::vector<Complex> indicator_sine_coefficients(double a, double b, int modes);

}  // namespace revival
