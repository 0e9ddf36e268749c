#pragma once

#include <stdexcept>
#include <vector>

#include "revival/potential.hpp"
#include "revival/spectral.hpp"

namespace revival {

struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BiorthogonalPair {
    int index = 0;
    GridFunction phi;        // gamma_j y_j
    GridFunction phi_star;   // adjoint partner, <phi_j, phi*_j> = 1
    Complex gamma;           // sine coefficient <phi_j, d_j>
};

/// Bi-orthogonal eigenfunction system of L and L*.  phi*_j is anchored
/// to the sine basis (<phi*_j, d_j> = 1, real and positive) and phi_j
/// rescaled so that <phi_j, phi*_j> = 1; gamma_j = <phi_j, d_j> tracks
/// the deviation of the pair from the orthonormal free basis.
struct BiorthogonalSystem {
    std::vector<BiorthogonalPair> pairs;
    double gram_defect = 0.0;   // max_{j,k} |<phi_j, phi*_k> - delta_jk|
    std::size_t intervals = 0;

    int modes() const { return static_cast<int>(pairs.size()); }
};

/// Pairs the eigenfunction sweeps of V and conj(V) by index.  The two
/// sweeps are computed independently, so the resulting gram defect is a
/// genuine cross-validation of both solvers.
BiorthogonalSystem assemble_biorthogonal(const EigenSweep& direct,
                                         const EigenSweep& adjoint);

BiorthogonalSystem build_system(const Potential& V, int modes,
                                std::size_t intervals, unsigned jobs = 0);

/// Expansion coefficients c_j = <f, phi*_j>.
std::vector<Complex> expand(const BiorthogonalSystem& system, const GridFunction& f);

}  // namespace revival
