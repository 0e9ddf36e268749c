#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "revival/evolution.hpp"

namespace revival {

/// Mesh-refinement jump diagnostic.  A field sampled from a Lipschitz
/// function halves its largest adjacent-node jump when the grid is
/// doubled (ratio ~ 2); a genuine discontinuity keeps it (ratio ~ 1).
struct ContinuityReport {
    double max_jump = 0.0;           // coarse grid
    double refinement_ratio = 0.0;   // coarse max_jump / refined max_jump
    double l2_norm = 0.0;
    double sup_norm = 0.0;
};

using Interval = std::pair<double, double>;

/// Largest |field(x_{i+1}) - field(x_i)| over node gaps that do not
/// meet any excluded interval.
double max_jump_outside(const GridFunction& field,
                        const std::vector<Interval>& excluded = {});

/// field_refined must have exactly twice the interval count of field.
ContinuityReport continuity_report(const GridFunction& field,
                                   const GridFunction& field_refined,
                                   const std::vector<Interval>& excluded = {});

/// Jump locations of the shifted copies f°(x - 2 pi k/q) inside [0,pi],
/// from the datum's own jump set.
std::vector<double> shifted_jump_locations(const std::vector<double>& datum_jumps,
                                           std::int64_t q);

/// Intervals of total width 10*pi/modes centred at each jump location.
std::vector<Interval> gibbs_exclusion_zones(const std::vector<double>& jump_locations,
                                            int modes);

/// max_jump(correction outside the Gibbs zones) / max_jump(revival part).
/// The revival part is the jump carrier, so its maximum is taken over
/// the whole grid.  Empty datum_jumps (smooth datum) -> nullopt.
std::optional<double> jump_ratio(const RevivalDecomposition& decomposition,
                                 const std::vector<double>& datum_jumps);

}  // namespace revival
