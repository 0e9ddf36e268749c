#pragma once

#include <cstddef>
#include <vector>

#include "revival/grid.hpp"

namespace revival {

/// The potential V on [0,pi] together with its cached mean <V>,
/// sup-norm estimate and the quadrature machinery behind the
/// antiderivative V1(x) = int_0^x V and the second-order term
/// V2(x) = int_0^x V*V1 - V(x) + V(0).
///
/// Analytic kinds (mathieu, fourier) integrate with cumulative
/// composite Simpson on a uniform grid plus a local Gauss rule for the
/// partial cell; the samples kind interpolates linearly and integrates
/// with the trapezoid rule, which is exact for the interpolant.
class Potential {
public:
    enum class Kind { Mathieu, Fourier, Samples };

    /// V(x) = 2q cos(2x).
    static Potential mathieu(Complex qcoef, std::size_t quadrature_intervals = 4096);

    /// V(x) = sum_k cos_coeffs[k] cos(kx) + sum_k sin_coeffs[k] sin((k+1)x).
    static Potential fourier(std::vector<Complex> cos_coeffs,
                             std::vector<Complex> sin_coeffs = {},
                             std::size_t quadrature_intervals = 4096);

    /// Tabulated values on a uniform grid of [0,pi].
    static Potential samples(GridFunction values);

    Kind kind() const { return kind_; }
    Complex qcoef() const { return qcoef_; }

    Complex evaluate(double x) const;
    Complex mean() const { return mean_; }
    double sup_norm() const { return sup_norm_; }

    Complex antiderivative(double x) const;      // V1
    Complex second_order_term(double x) const;   // V2

    /// V - <V>.
    Potential mean_centered() const;
    /// conj(V), the potential of the adjoint operator.
    Potential conjugated() const;
    /// V + c.
    Potential shifted(Complex c) const;

    std::size_t quadrature_intervals() const { return table_intervals_; }

private:
    Potential() = default;
    void build_tables();
    Complex evaluate_raw(double x) const;

    Kind kind_ = Kind::Mathieu;
    Complex qcoef_{0.0, 0.0};
    std::vector<Complex> cos_coeffs_;
    std::vector<Complex> sin_coeffs_;
    GridFunction sample_values_;

    std::size_t table_intervals_ = 4096;
    std::vector<Complex> node_values_;   // V at table nodes
    std::vector<Complex> cum_v_;         // int_0^{x_i} V
    std::vector<Complex> cum_vv1_;       // int_0^{x_i} V*V1
    Complex mean_{0.0, 0.0};
    double sup_norm_ = 0.0;
};

}  // namespace revival
