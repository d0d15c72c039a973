r"""
Exact Siegel-Veech constants and Lyapunov-exponent sums for arithmetic
Teichmueller discs (SL(2,Z)-orbits of origamis), plus quadratic-stratum
sums from a supplied Siegel-Veech input.

Two independent routes compute the same orbit statistic:

- :func:`normalized_svc` averages the sum of cylinder moduli h/w over
  the orbit (via the cylinder decomposition);
- :func:`cycle_statistic` averages the inverse cycle lengths of the
  horizontal permutation over the orbit.

Their exact agreement (each cylinder of width w and height h consists
of h rows, each a horizontal cycle of length w) is a standing
cross-check, exercised by the test suite orbit by orbit.

Siegel-Veech constants are carried exclusively as the exact rational
pi^2 * c_area, never as floats.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .origami import horizontal_cylinders
from .permutations import perm_cycles
from .strata import (
    QuadraticSignature,
    LyapunovSum,
    SiegelVeechValue,
    kappa,
    odd_defect,
)


@dataclass(frozen=True)
class OrbitSiegelVeech:
    svc: Fraction  # (pi^2 / 3) * c_area = orbit average of sum h/w
    c: SiegelVeechValue


def normalized_svc(orbit):
    """Orbit average of the sum of cylinder moduli; equals
    (pi^2/3) * c_area for the arithmetic Teichmueller disc.

    EXAMPLES::

        >>> from .origami import make_origami
        >>> from .orbits import sl2z_orbit
        >>> normalized_svc(sl2z_orbit(make_origami((1, 0, 2), (2, 1, 0)))).svc
        Fraction(10, 9)
    """
    total = sum(
        (horizontal_cylinders(m).sum_moduli for m in orbit.members), Fraction(0)
    )
    svc = total / orbit.size
    return OrbitSiegelVeech(svc, SiegelVeechValue(3 * svc))


def cycle_statistic(orbit):
    """Average inverse cycle length of the horizontal permutation over
    all members of the orbit; computed without cylinders.

    EXAMPLES::

        >>> from .origami import make_origami
        >>> from .orbits import sl2z_orbit
        >>> cycle_statistic(sl2z_orbit(make_origami((1, 0, 2), (2, 1, 0))))
        Fraction(10, 9)
    """
    total = Fraction(0)
    for m in orbit.members:
        for cyc in perm_cycles(m.h):
            total += Fraction(1, len(cyc))
    return total / orbit.size


def sum_exponents_abelian_orbit(orbit):
    """Exact sum of the top g Lyapunov exponents over the disc of the
    orbit: the stratum kappa-term plus the orbit cylinder average.

    EXAMPLES::

        >>> from .origami import make_origami
        >>> from .orbits import sl2z_orbit
        >>> sum_exponents_abelian_orbit(
        ...     sl2z_orbit(make_origami((1, 0, 2), (2, 1, 0)))).value
        Fraction(4, 3)
    """
    value = kappa(orbit.signature) + normalized_svc(orbit).svc
    return LyapunovSum(value, "abelian_top_g")


def sum_exponents_quadratic_plus(sig, svc):
    """Sum of the plus-exponents of a quadratic locus with the supplied
    normalized Siegel-Veech constant ``svc = (pi^2/3) c_area``.

    For genus 0 the sum is zero by convention; a nonzero total then
    signals an inconsistent ``svc`` input.

    EXAMPLES::

        >>> sum_exponents_quadratic_plus(
        ...     QuadraticSignature((-1,) * 4), Fraction(1, 2)).value
        Fraction(0, 1)
    """
    if not isinstance(sig, QuadraticSignature):
        raise DomainError("expected a quadratic signature")
    svc = Fraction(svc)
    value = kappa(sig) + svc
    if sig.genus == 0 and value != 0:
        raise DomainError(
            f"genus-0 stratum {sig} forces a zero plus-sum, got {value}; "
            "the supplied Siegel-Veech value is inconsistent"
        )
    return LyapunovSum(value, "quadratic_plus")


def sum_exponents_minus(sig, plus_sum):
    """Sum of the minus-exponents: the plus-sum shifted by the odd
    defect of the signature.

    EXAMPLES::

        >>> sum_exponents_minus(QuadraticSignature((-1,) * 4), Fraction(0)).value
        Fraction(1, 1)
    """
    if not isinstance(sig, QuadraticSignature):
        raise DomainError("expected a quadratic signature")
    return LyapunovSum(Fraction(plus_sum) + odd_defect(sig), "quadratic_minus")
