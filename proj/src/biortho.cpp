#include "revival/biortho.hpp"

#include <cmath>

namespace revival {

BiorthogonalSystem assemble_biorthogonal(const EigenSweep& direct,
                                         const EigenSweep& adjoint) {
    if (direct.pairs.size() != adjoint.pairs.size())
        throw std::invalid_argument("direct and adjoint sweeps differ in mode count");
    if (direct.pairs.empty()) throw std::invalid_argument("empty eigen sweep");
    const std::size_t m = direct.pairs.front().eigenfunction.intervals();

    BiorthogonalSystem system;
    system.intervals = m;
    system.pairs.reserve(direct.pairs.size());

    for (std::size_t n = 0; n < direct.pairs.size(); ++n) {
        const EigenPair& ep = direct.pairs[n];
        const EigenPair& ap = adjoint.pairs[n];
        const GridFunction d = sine_basis(ep.index, m);

        const Complex pairing = inner_product(ep.eigenfunction, ap.eigenfunction);
        if (std::abs(pairing) < 1e-12)
            throw DegeneracyError("bi-orthogonal pairing degenerates at index " +
                                  std::to_string(ep.index));
        const Complex anchor = inner_product(ap.eigenfunction, d);
        if (std::abs(anchor) < 1e-12)
            throw DegeneracyError("adjoint eigenfunction at index " +
                                  std::to_string(ep.index) +
                                  " has no sine component to anchor");

        BiorthogonalPair pair;
        pair.index = ep.index;
        // <phi*_j, d_j> = <y*_j, d_j>/anchor = 1 exactly
        pair.phi_star = (1.0 / anchor) * ap.eigenfunction;
        const Complex scale = inner_product(ep.eigenfunction, pair.phi_star);
        if (std::abs(scale) < 1e-12)
            throw DegeneracyError("bi-orthogonal pairing degenerates at index " +
                                  std::to_string(ep.index));
        pair.phi = (1.0 / scale) * ep.eigenfunction;
        pair.gamma = inner_product(pair.phi, d);
        system.pairs.push_back(std::move(pair));
    }

    double defect = 0.0;
    for (const auto& pj : system.pairs)
        for (const auto& pk : system.pairs) {
            const Complex g = inner_product(pj.phi, pk.phi_star);
            const Complex expected = pj.index == pk.index ? Complex{1.0, 0.0}
                                                          : Complex{0.0, 0.0};
            defect = std::max(defect, std::abs(g - expected));
        }
    system.gram_defect = defect;
    return system;
}

BiorthogonalSystem build_system(const Potential& V, int modes,
                                std::size_t intervals, unsigned jobs) {
    const EigenSweep direct = eigen_sweep(V, modes, intervals, jobs);
    const EigenSweep adjoint = eigen_sweep(V.conjugated(), modes, intervals, jobs);
    return assemble_biorthogonal(direct, adjoint);
}

std::vector<Complex> expand(const BiorthogonalSystem& system, const GridFunction& f) {
    if (f.intervals() != system.intervals)
        throw std::invalid_argument("datum grid does not match the system grid");
    std::vector<Complex> coeffs;
    coeffs.reserve(system.pairs.size());
    for (const auto& pair : system.pairs)
        coeffs.push_back(inner_product(f, pair.phi_star));
    return coeffs;
}

}  // namespace revival
