#pragma once

#include <stdexcept>
#include <vector>

#include "revival/grid.hpp"
#include "revival/potential.hpp"

namespace revival {

/// One Dirichlet eigenpair of L = -d^2/dx^2 + V.  The eigenfunction is
/// the shooting solution y(0) = 0, y'(0) = omega; its endpoint modulus
/// |y(pi)| at the converged eigenvalue is kept as the residual.
struct EigenPair {
    int index = 0;
    Complex omega;        // sqrt(lambda), Re > 0
    Complex lambda;       // omega^2
    Complex deviation;    // k_j = (lambda - j^2) j^2
    GridFunction eigenfunction;
    double residual = 0.0;
};

struct ShootResult {
    GridFunction trajectory;
    Complex endpoint;
};

struct ShootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& msg, int index_, Complex last)
        : std::runtime_error(msg), index(index_), last_lambda(last) {}
    int index;
    Complex last_lambda;
};

struct MisindexError : std::runtime_error {
    MisindexError(const std::string& msg, int index_, Complex lambda_)
        : std::runtime_error(msg), index(index_), lambda(lambda_) {}
    int index;
    Complex lambda;
};

/// Integrates y(0) = 0, y'(0) = sqrt(lambda) across [0,pi].  Classical
/// RK4 is applied to the variation-of-parameters form of the system
/// (the state multiplying the exact free oscillation), so the step
/// error scales with V rather than with lambda; the free problem is
/// integrated exactly.
ShootResult shoot(const Potential& V, Complex lambda, std::size_t intervals);

/// Complex Newton iteration on the shooting endpoint, seeded at
/// j^2 + <V>, with the derivative from the simultaneously integrated
/// variational system  -z'' + Vz = lambda z + y,  z(0) = z'(0) = 0.
EigenPair find_eigenvalue(const Potential& V, int index, std::size_t intervals,
                          double tol = 1e-10, int max_iterations = 50);

/// Two-term Marchenko form sin(jx) - cos(jx) V1(x)/(2j) on the grid
/// (V mean-centered).
GridFunction asymptotic_eigenfunction(const Potential& V, int index,
                                      std::size_t intervals);

struct EigenSweep {
    std::vector<EigenPair> pairs;
    /// sup-norm of V is >= 3/2, outside the weak-revival hypothesis;
    /// the sweep is still attempted.
    bool norm_bound_warning = false;
};

/// Eigenpairs for j = 1..count, solved independently (in parallel when
/// jobs != 1) and assembled in index order.  jobs = 0 picks the
/// hardware concurrency.
EigenSweep eigen_sweep(const Potential& V, int count, std::size_t intervals,
                       unsigned jobs = 0, double tol = 1e-10);

}  // namespace revival
