"""Weak revivals of the linear Schrodinger equation on (0, pi).

Complex bounded potentials with Dirichlet conditions: shooting spectra,
bi-orthogonal eigenfunction expansions, the finite Gauss-sum revival
part at rational times t = 2*pi*p/q and the continuous correction field.
"""

from ._core import (
    BiorthogonalPair,
    BiorthogonalSystem,
    ContinuityReport,
    ConvergenceError,
    CriterionResult,
    DegeneracyError,
    EigenPair,
    EigenSweep,
    GridFunction,
    IndexCollisionError,
    MathieuSpectrum,
    MisindexError,
    Potential,
    RationalTime,
    RevivalDecomposition,
    ShootError,
    ShootResult,
    __version__,
    asymptotic_eigenfunction,
    assemble_biorthogonal,
    build_system,
    characteristic_values,
    continuity_report,
    decompose_at_rational_time,
    eigen_sweep,
    evolve,
    expand,
    find_eigenvalue,
    free_evolution,
    free_evolution_from_coeffs,
    gauss_indicator,
    gibbs_exclusion_zones,
    indicator_sine_coefficients,
    inner_product,
    jump_ratio,
    l2_distance,
    make_indicator,
    make_poly,
    max_jump_outside,
    mean_phase,
    odd_periodic_extension,
    revival_superposition,
    run_all_criteria,
    run_suite,
    se_function,
    se_function_grid,
    shifted_jump_locations,
    shoot,
    sine_basis,
    sine_coefficients,
    sine_truncation,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
