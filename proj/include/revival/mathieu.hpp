#pragma once

#include <stdexcept>
#include <vector>

#include "revival/grid.hpp"

namespace revival {

struct IndexCollisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Characteristic values b_j(q) of -y'' + 2q cos(2x) y = lambda y with
/// Dirichlet conditions, from the truncated sine-basis matrix.
struct MathieuSpectrum {
    Complex qcoef;
    std::vector<Complex> values;   // b_j(q), j = 1..N
    int truncation = 0;            // matrix dimension K
};

/// Assembles the K x K sine-basis matrix (diagonal j^2, coupling q two
/// modes apart, the j = 1 diagonal corrected by -q from
/// sin((j-2)x) = -sin(x)), takes all eigenvalues and assigns indices by
/// proximity to j^2.  truncation = 0 picks max(2*count, 64).
MathieuSpectrum characteristic_values(Complex qcoef, int count, int truncation = 0);

/// Odd Mathieu function se_j(x, q) = sum_k v_k sin(kx) from the
/// eigenvector of the truncated matrix, unit L2 norm, first
/// nonvanishing coefficient real and positive.
Complex se_function(Complex qcoef, int index, double x, int truncation = 0);

/// se_j sampled on the uniform grid (one eigendecomposition).
GridFunction se_function_grid(Complex qcoef, int index, std::size_t intervals,
                              int truncation = 0);

}  // namespace revival
