r"""
Square-tiled surfaces (origamis): exact Siegel-Veech constants, sums of
Lyapunov exponents of arithmetic Teichmueller discs, stratum-level closed
formulas, and a Monte Carlo estimator of individual Lyapunov exponents.

The package is organized around a small set of value types:

- :class:`~origamis.origami.Origami` -- a connected square-tiled surface
  encoded by a pair of permutations (right neighbor, top neighbor);
- :class:`~origamis.strata.AbelianSignature` and
  :class:`~origamis.strata.QuadraticSignature` -- strata of Abelian and
  quadratic differentials;
- :class:`~origamis.orbits.Orbit` -- a finite SL(2,Z)-orbit of origamis;
- exact rational values carried as :class:`fractions.Fraction` throughout.

Hot kernels (canonical forms, orbit enumeration, the cocycle walk) are
compiled with numba when available; set ``ORIGAMI_NUMBA=0`` to force the
pure-Python fallback.  See ``benchmarks/bench_kernels.py`` for a timing
comparison of the two paths.
"""

from .errors import DomainError, ParseError, ConsistencyError
from .rationals import Rational, arithmetic, make_rational, parse_rational, format_rational
from .strata import (
    AbelianSignature,
    QuadraticSignature,
    stratum_info,
    kappa,
    double_cover,
    odd_defect,
    genus0_values,
    hyperelliptic_abelian_sum,
    hyperelliptic_quadratic_sum,
    positivity_bound,
    nondegeneracy_check,
)
from .origami import (
    Origami,
    make_origami,
    parse_origami,
    format_origami,
    stratum_of,
    canonical_form,
    apply_generator,
    conjugate,
    horizontal_cylinders,
    CylinderDecomposition,
)
from .orbits import Orbit, CuspData, sl2z_orbit, cusp_decomposition, enumerate_stratum
from .svc import (
    normalized_svc,
    cycle_statistic,
    sum_exponents_abelian_orbit,
    sum_exponents_quadratic_plus,
    sum_exponents_minus,
    SiegelVeechValue,
    LyapunovSum,
)
from .homology import HomologyData, homology_data, generator_action
from .montecarlo import LyapunovEstimate, estimate_spectrum

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "ParseError",
    "ConsistencyError",
    "Rational",
    "arithmetic",
    "make_rational",
    "parse_rational",
    "format_rational",
    "AbelianSignature",
    "QuadraticSignature",
    "stratum_info",
    "kappa",
    "double_cover",
    "odd_defect",
    "genus0_values",
    "hyperelliptic_abelian_sum",
    "hyperelliptic_quadratic_sum",
    "positivity_bound",
    "nondegeneracy_check",
    "Origami",
    "make_origami",
    "parse_origami",
    "format_origami",
    "stratum_of",
    "canonical_form",
    "apply_generator",
    "conjugate",
    "horizontal_cylinders",
    "CylinderDecomposition",
    "Orbit",
    "CuspData",
    "sl2z_orbit",
    "cusp_decomposition",
    "enumerate_stratum",
    "normalized_svc",
    "cycle_statistic",
    "sum_exponents_abelian_orbit",
    "sum_exponents_quadratic_plus",
    "sum_exponents_minus",
    "SiegelVeechValue",
    "LyapunovSum",
    "HomologyData",
    "homology_data",
    "generator_action",
    "LyapunovEstimate",
    "estimate_spectrum",
]
