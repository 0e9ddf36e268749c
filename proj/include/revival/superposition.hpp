#pragma once

#include <cstdint>

#include "revival/grid.hpp"

namespace revival {

/// t = 2*pi*p/q with p, q coprime; reduced on construction.
struct RationalTime {
    RationalTime(std::int64_t p_, std::int64_t q_);
    std::int64_t p;
    std::int64_t q;
    double seconds() const { return 2.0 * kPi * static_cast<double>(p) / static_cast<double>(q); }
};

/// Odd, 2*pi-periodic extension of f evaluated at x: exact at grid
/// points, linear interpolation in between.
Complex odd_periodic_extension(const GridFunction& f, double x);

struct GaussIndicator {
    std::int64_t value;       // q when j = m (mod q), otherwise 0
    double rounding_error;    // |numerical sum - value| before rounding
};

/// Evaluates sum_{k=0}^{q-1} exp(2 pi i (m-j) k / q) numerically and
/// rounds.  Kept as an oracle for the revival combinatorics.
GaussIndicator gauss_indicator(std::int64_t m, std::int64_t j, std::int64_t q);

/// exp(-2 pi i <V> p / q), the potential-mean phase of the revival
/// formula.  The single source of this phase for both the superposition
/// and the eigenfunction evolution, so the two match bit for bit.
Complex mean_phase(Complex mean_potential, const RationalTime& t);

/// The finite revival part
///   (1/q) exp(-2 pi i <V> p/q) sum_{k,m=0}^{q-1}
///        exp(2 pi i (m k/q - m^2 p/q)) f°(x - 2 pi k/q)
/// evaluated at every grid node.  Phase exponents are reduced mod q in
/// integer arithmetic before the complex exponential; when 2q divides
/// the grid size every shift lands on grid nodes and no interpolation
/// is involved.
GridFunction revival_superposition(const GridFunction& f, const RationalTime& t,
                                   Complex mean_potential);

}  // namespace revival
