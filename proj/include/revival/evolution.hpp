#pragma once

#include <vector>

#include "revival/biortho.hpp"
#include "revival/superposition.hpp"

namespace revival {

/// Sine coefficients <f, d_j>, j = 1..modes, by Simpson quadrature.
std::vector<Complex> sine_coefficients(const GridFunction& f, int modes);

/// Truncated reconstruction sum_j <f, d_j> d_j.
GridFunction sine_truncation(const GridFunction& f, int modes);

/// sum_j c_j exp(-i lambda_j t) phi_j with c_j = <f, phi*_j>.
GridFunction evolve(const BiorthogonalSystem& system,
                    const std::vector<EigenPair>& pairs, const GridFunction& f,
                    double t);

/// Free sine-series propagation sum_j <f, d_j> exp(-i j^2 t) d_j.
GridFunction free_evolution(const GridFunction& f, double t, int modes);

/// Rational-time overload: the phases exp(-2 pi i j^2 p/q) are reduced
/// mod q in integer arithmetic, so revival times are exact.
GridFunction free_evolution(const GridFunction& f, const RationalTime& t, int modes);

/// Series from externally supplied sine coefficients (e.g. the exact
/// coefficients of an indicator datum); aliasing-free for any mode count.
GridFunction free_evolution_from_coeffs(const std::vector<Complex>& coeffs,
                                        const RationalTime& t,
                                        std::size_t intervals);

/// The solution at t = 2 pi p/q split into the finite Gauss-sum revival
/// part and the correction field w = u - revival.
struct RevivalDecomposition {
    RationalTime time;
    GridFunction solution;
    GridFunction revival_part;
    GridFunction correction;
    int modes = 0;
};

/// system/pairs must come from the mean-centered potential; the mean
/// re-enters through the phase exp(-2 pi i <V> p/q) on both terms.
RevivalDecomposition decompose_at_rational_time(const Potential& V,
                                                const BiorthogonalSystem& system,
                                                const std::vector<EigenPair>& pairs,
                                                const GridFunction& f,
                                                const RationalTime& t);

}  // namespace revival
