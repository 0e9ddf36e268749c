#include "revival/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace revival {

double max_jump_outside(const GridFunction& field,
                        const std::vector<Interval>& excluded) {
    const double h = field.spacing();
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < field.size(); ++i) {
        const double lo = static_cast<double>(i) * h;
        const double hi = lo + h;
        bool skip = false;
        for (const auto& zone : excluded)
            if (hi > zone.first && lo < zone.second) {
                skip = true;
                break;
            }
        if (!skip) m = std::max(m, std::abs(field[i + 1] - field[i]));
    }
    return m;
}

ContinuityReport continuity_report(const GridFunction& field,
                                   const GridFunction& field_refined,
                                   const std::vector<Interval>& excluded) {
    if (field_refined.intervals() != 2 * field.intervals())
        throw std::invalid_argument(
            "refined field must have exactly twice the interval count");
    ContinuityReport r;
    r.max_jump = max_jump_outside(field, excluded);
    const double refined = max_jump_outside(field_refined, excluded);
    if (refined > 0.0)
        r.refinement_ratio = r.max_jump / refined;
    else
        r.refinement_ratio = r.max_jump > 0.0
                                 ? std::numeric_limits<double>::infinity()
                                 : 1.0;
    r.l2_norm = field.l2_norm();
    r.sup_norm = field.sup_norm();
    return r;
}

std::vector<double> shifted_jump_locations(const std::vector<double>& datum_jumps,
                                           std::int64_t q) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    std::vector<double> locations;
    for (double s : datum_jumps) {
        for (double base : {s, 2.0 * kPi - s}) {  // the odd reflection jumps too
            for (std::int64_t k = 0; k < q; ++k) {
                double x = std::fmod(base + 2.0 * kPi * static_cast<double>(k) /
                                                static_cast<double>(q),
                                     2.0 * kPi);
                if (x < 0.0) x += 2.0 * kPi;
                if (x <= kPi + 1e-12) locations.push_back(std::min(x, kPi));
            }
        }
    }
    std::sort(locations.begin(), locations.end());
    locations.erase(std::unique(locations.begin(), locations.end(),
                                [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                    locations.end());
    return locations;
}

std::vector<Interval> gibbs_exclusion_zones(const std::vector<double>& jump_locations,
                                            int modes) {
    if (modes < 1) throw std::invalid_argument("mode count must be >= 1");
    const double half_width = 5.0 * kPi / static_cast<double>(modes);
    std::vector<Interval> zones;
    zones.reserve(jump_locations.size());
    for (double s : jump_locations)
        zones.emplace_back(std::max(0.0, s - half_width), std::min(kPi, s + half_width));
    return zones;
}

std::optional<double> jump_ratio(const RevivalDecomposition& decomposition,
                                 const std::vector<double>& datum_jumps) {
    if (datum_jumps.empty()) return std::nullopt;
    const auto locations = shifted_jump_locations(datum_jumps, decomposition.time.q);
    const auto zones = gibbs_exclusion_zones(locations, decomposition.modes);
    const double numerator = max_jump_outside(decomposition.correction, zones);
    const double denominator = max_jump_outside(decomposition.revival_part);
    if (denominator <= 0.0) return std::nullopt;
    return numerator / denominator;
}

}  // namespace revival
