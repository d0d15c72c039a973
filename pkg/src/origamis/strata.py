r"""
Strata of Abelian and quadratic differentials and their closed-form
invariants: dimensions, the combinatorial kappa-terms, canonical double
covers, genus-zero Siegel-Veech values, hyperelliptic families,
positivity bounds and the non-degeneracy criterion.

Signatures are value types.  An Abelian signature lists zero degrees
``m_i >= 1`` (degree-0 marked points counted separately); a quadratic
signature lists orders ``d_j >= -1`` with ``d_j = -1`` for simple poles
(order-0 marked points counted separately, which is how the empty
stratum ``Q(0)`` is represented).

All values are exact :class:`fractions.Fraction`.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ConsistencyError


def _split_zeros(entries):
    entries = tuple(int(e) for e in entries)
    nonzero = tuple(sorted((e for e in entries if e != 0), reverse=True))
    marked = sum(1 for e in entries if e == 0)
    return nonzero, marked


@dataclass(frozen=True)
class AbelianSignature:
    """Stratum of Abelian differentials with zeroes of the given degrees.

    ``degrees`` keeps the positive degrees, sorted decreasingly;
    marked points (degree 0) are carried as a count.  The torus is the
    empty signature with genus 1.

    EXAMPLES::

        >>> AbelianSignature((2,)).genus
        2
        >>> AbelianSignature(()).genus
        1
    """

    degrees: tuple = ()
    marked_points: int = 0

    def __post_init__(self):
        degrees, extra_marked = _split_zeros(self.degrees)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "marked_points", self.marked_points + extra_marked)
        if any(m < 0 for m in degrees):
            raise DomainError(f"negative degree in Abelian signature {degrees}")
        if self.marked_points < 0:
            raise DomainError("negative number of marked points")
        total = sum(degrees)
        if total % 2 != 0:
            raise DomainError(f"degree sum {total} is not of the form 2g-2")

    @property
    def genus(self):
        return sum(self.degrees) // 2 + 1

    @property
    def n_singularities(self):
        return len(self.degrees) + self.marked_points

    def __str__(self):
        entries = list(self.degrees) + [0] * self.marked_points
        return "H(%s)" % ",".join(str(e) for e in entries)


@dataclass(frozen=True)
class QuadraticSignature:
    """Stratum of meromorphic quadratic differentials with at most
    simple poles; order ``-1`` encodes a simple pole.

    EXAMPLES::

        >>> QuadraticSignature((2, 1, 1)).genus
        2
        >>> QuadraticSignature((-1, -1, -1, -1)).genus
        0
    """

    orders: tuple = ()
    marked_points: int = 0

    def __post_init__(self):
        orders, extra_marked = _split_zeros(self.orders)
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "marked_points", self.marked_points + extra_marked)
        if any(d < -1 for d in orders):
            raise DomainError(f"order below -1 in quadratic signature {orders}")
        if self.marked_points < 0:
            raise DomainError("negative number of marked points")
        total = sum(orders)
        if total % 4 != 0 or total < -4:
            raise DomainError(
                f"order sum {total} is not of the form 4g-4 with g >= 0"
            )

    @property
    def genus(self):
        return (sum(self.orders) + 4) // 4

    @property
    def n_singularities(self):
        return len(self.orders) + self.marked_points

    def __str__(self):
        entries = list(self.orders) + [0] * self.marked_points
        return "Q(%s)" % ",".join(str(e) for e in entries)


@dataclass(frozen=True)
class SiegelVeechValue:
    """A Siegel-Veech constant carried exactly as pi^2 * c_area."""

    pi2_times_c: Fraction

    @property
    def approx(self):
        import math

        return float(self.pi2_times_c) / math.pi**2


@dataclass(frozen=True)
class LyapunovSum:
    value: Fraction
    kind: str  # abelian_top_g | quadratic_plus | quadratic_minus


@dataclass(frozen=True)
class StratumInfo:
    genus: int
    dimension: int
    known_empty: bool


@dataclass(frozen=True)
class DoubleCoverResult:
    cover_signature: AbelianSignature
    g_hat: int
    g_eff: int


# The only strata the source results declare empty; other small empty
# strata from the literature are intentionally not flagged.
_KNOWN_EMPTY_QUADRATIC = {((), 1), ((4,), 0), ((3, 1), 0)}


def stratum_info(sig):
    """Genus, complex dimension and the known-empty flag of a stratum.

    Dimensions are ``2g + n - 1`` (Abelian) and ``2g + n - 2``
    (quadratic), with ``n`` counting marked points as singularities.

    EXAMPLES::

        >>> stratum_info(AbelianSignature((2,)))
        StratumInfo(genus=2, dimension=4, known_empty=False)
        >>> stratum_info(QuadraticSignature((3, 1))).known_empty
        True
    """
    if isinstance(sig, AbelianSignature):
        return StratumInfo(sig.genus, 2 * sig.genus + sig.n_singularities - 1, False)
    if isinstance(sig, QuadraticSignature):
        empty = (sig.orders, sig.marked_points) in _KNOWN_EMPTY_QUADRATIC
        return StratumInfo(sig.genus, 2 * sig.genus + sig.n_singularities - 2, empty)
    raise DomainError(f"not a signature: {sig!r}")


def kappa(sig):
    """Combinatorial term of the sum formula for the given stratum:
    ``(1/12) sum m(m+2)/(m+1)`` for Abelian signatures and
    ``(1/24) sum d(d+4)/(d+2)`` for quadratic ones.

    EXAMPLES::

        >>> kappa(AbelianSignature((1, 1, 1, 1)))
        Fraction(1, 2)
        >>> kappa(QuadraticSignature((-1, -1, -1, -1)))
        Fraction(-1, 2)
    """
    if isinstance(sig, AbelianSignature):
        return sum(
            (Fraction(m * (m + 2), m + 1) for m in sig.degrees), Fraction(0)
        ) / 12
    if isinstance(sig, QuadraticSignature):
        return sum(
            (Fraction(d * (d + 4), d + 2) for d in sig.orders), Fraction(0)
        ) / 24
    raise DomainError(f"not a signature: {sig!r}")


def double_cover(sig):
    """Canonical orientation double cover of a quadratic signature.

    Each even order ``d`` contributes two zeroes of degree ``d/2``;
    each odd order ``d`` one zero of degree ``d+1``.  Degree-0 images
    (from ``d = 0`` and simple poles) become marked points.

    EXAMPLES::

        >>> double_cover(QuadraticSignature((2, 1, 1))).cover_signature.degrees
        (2, 2, 1, 1)
        >>> double_cover(QuadraticSignature((-1,) * 4)).g_hat
        1
    """
    if not isinstance(sig, QuadraticSignature):
        raise DomainError("double_cover expects a quadratic signature")
    odd = [d for d in sig.orders if d % 2 != 0]
    if len(odd) % 2 != 0:
        raise DomainError(
            f"{sig} has an odd number of odd orders; the cover genus "
            "would not be an integer"
        )
    degrees = []
    marked = 2 * sig.marked_points
    for d in sig.orders:
        if d % 2 == 0:
            degrees.extend([d // 2, d // 2])
        elif d == -1:
            marked += 1
        else:
            degrees.append(d + 1)
    g_hat = 2 * sig.genus - 1 + len(odd) // 2
    cover = AbelianSignature(tuple(degrees), marked_points=marked)
    if cover.genus != g_hat:
        raise ConsistencyError(
            f"cover degree sum disagrees with the genus formula for {sig}"
        )
    return DoubleCoverResult(cover, g_hat, g_hat - sig.genus)


def odd_defect(sig):
    """The exact difference (minus-sum) - (plus-sum) of Lyapunov
    exponents: ``(1/4) sum over odd d of 1/(d+2)``.

    EXAMPLES::

        >>> odd_defect(QuadraticSignature((-1, -1, -1, -1)))
        Fraction(1, 1)
        >>> odd_defect(QuadraticSignature((2, 1, 1)))
        Fraction(1, 6)
    """
    if not isinstance(sig, QuadraticSignature):
        raise DomainError("odd_defect expects a quadratic signature")
    return sum(
        (Fraction(1, d + 2) for d in sig.orders if d % 2 != 0), Fraction(0)
    ) / 4


@dataclass(frozen=True)
class Genus0Values:
    c: SiegelVeechValue
    lambda_minus_sum: Fraction


def genus0_values(sig):
    """Siegel-Veech constant and minus-sum for a genus-0 stratum.

    Both depend only on the ambient stratum:
    ``pi^2 c = -(1/8) sum d(d+4)/(d+2)`` and the minus-sum equals the
    odd defect.

    EXAMPLES::

        >>> genus0_values(QuadraticSignature((-1,) * 4)).c.pi2_times_c
        Fraction(3, 2)
        >>> genus0_values(QuadraticSignature((1, -1, -1, -1, -1, -1))).lambda_minus_sum
        Fraction(4, 3)
    """
    if not isinstance(sig, QuadraticSignature):
        raise DomainError("genus0_values expects a quadratic signature")
    if sig.genus != 0:
        raise DomainError(f"{sig} has genus {sig.genus}, expected 0")
    pi2c = -sum(
        (Fraction(d * (d + 4), d + 2) for d in sig.orders), Fraction(0)
    ) / 8
    return Genus0Values(SiegelVeechValue(pi2c), odd_defect(sig))


def hyperelliptic_abelian_sum(g, component):
    """Exact sum of the top g Lyapunov exponents on a hyperelliptic
    component: ``g^2/(2g-1)`` for the single-zero component and
    ``(g+1)/2`` for the two-zero component.

    EXAMPLES::

        >>> hyperelliptic_abelian_sum(2, "single_zero")
        Fraction(4, 3)
        >>> hyperelliptic_abelian_sum(4, "two_zeros")
        Fraction(5, 2)
    """
    if g < 2:
        raise DomainError(f"hyperelliptic components need genus >= 2, got {g}")
    if component == "single_zero":
        return Fraction(g * g, 2 * g - 1)
    if component == "two_zeros":
        return Fraction(g + 1, 2)
    raise DomainError(f"unknown component {component!r}")


@dataclass(frozen=True)
class HyperellipticQuadraticSum:
    sum: Fraction
    g_eff: int
    orders: tuple


def hyperelliptic_quadratic_sum(family, g, k):
    """Exact sum of the nonnegative minus-exponents for the three
    families of hyperelliptic components of quadratic strata.

    - ``F1``: orders (2(g-k)-3, 2(g-k)-3, 2k+1, 2k+1), g_eff = g+1,
      sum = (g+1)/2 + (g+1)/(2(2g-2k-1)(2k+3)), for k >= -1, g >= 1,
      g-k >= 2;
    - ``F2``: orders (2(g-k)-3, 2(g-k)-3, 4k+2), g_eff = g,
      sum = (2g+1)/4 + 1/(8(g-k)-4), for k >= 0, g >= 1, g-k >= 1;
    - ``F3``: orders (4(g-k)-6, 4k+2), g_eff = g-1, sum = g/2,
      for k >= 0, g >= 2, g-k >= 2.

    EXAMPLES::

        >>> hyperelliptic_quadratic_sum("F1", 2, 0).sum
        Fraction(5, 3)
        >>> hyperelliptic_quadratic_sum("F3", 2, 0).g_eff
        1
    """
    g = int(g)
    k = int(k)
    if family == "F1":
        if not (k >= -1 and g >= 1 and g - k >= 2):
            raise DomainError(f"F1 needs k >= -1, g >= 1, g-k >= 2; got g={g}, k={k}")
        value = Fraction(g + 1, 2) + Fraction(g + 1, 2 * (2 * g - 2 * k - 1) * (2 * k + 3))
        orders = (2 * (g - k) - 3, 2 * (g - k) - 3, 2 * k + 1, 2 * k + 1)
        return HyperellipticQuadraticSum(value, g + 1, orders)
    if family == "F2":
        if not (k >= 0 and g >= 1 and g - k >= 1):
            raise DomainError(f"F2 needs k >= 0, g >= 1, g-k >= 1; got g={g}, k={k}")
        value = Fraction(2 * g + 1, 4) + Fraction(1, 8 * (g - k) - 4)
        orders = (2 * (g - k) - 3, 2 * (g - k) - 3, 4 * k + 2)
        return HyperellipticQuadraticSum(value, g, orders)
    if family == "F3":
        if not (k >= 0 and g >= 2 and g - k >= 2):
            raise DomainError(f"F3 needs k >= 0, g >= 2, g-k >= 2; got g={g}, k={k}")
        orders = (4 * (g - k) - 6, 4 * k + 2)
        return HyperellipticQuadraticSum(Fraction(g, 2), g - 1, orders)
    raise DomainError(f"unknown family {family!r}; expected F1, F2 or F3")


_POSITIVITY = {
    # kind: (threshold, numerator coefficients as a function of g, denominator)
    "abelian_general": (7, lambda g: ((g - 1) * g, 6 * g - 3)),
    "abelian_principal": (5, lambda g: (g - 1, 4)),
    "quadratic_general": (7, lambda g: ((g - 1) * g, 6 * g + 3)),
    "quadratic_plus_principal": (5, lambda g: (5 * (g - 1), 18)),
    "quadratic_minus_principal": (3, lambda g: (11 * (g - 1), 18)),
}


def positivity_bound(kind, g):
    """Guaranteed count k of strictly positive leading exponents.

    EXAMPLES::

        >>> positivity_bound("abelian_general", 7)
        2
        >>> positivity_bound("quadratic_minus_principal", 3)
        2
    """
    if kind not in _POSITIVITY:
        raise DomainError(f"unknown positivity kind {kind!r}")
    threshold, ratio = _POSITIVITY[kind]
    g = int(g)
    if g < threshold:
        raise DomainError(f"{kind} requires genus >= {threshold}, got {g}")
    num, den = ratio(g)
    return num // den + 1


def nondegeneracy_check(sig):
    """True iff the minus-spectrum of any invariant locus in the stratum
    cannot be completely degenerate: ``sum over odd d of 1/(d+2) > 4``
    and the stratum is not Q(-1^4).

    EXAMPLES::

        >>> nondegeneracy_check(QuadraticSignature((1, -1, -1, -1, -1, -1)))
        True
        >>> nondegeneracy_check(QuadraticSignature((-1, -1, -1, -1)))
        False
    """
    if not isinstance(sig, QuadraticSignature):
        raise DomainError("nondegeneracy_check expects a quadratic signature")
    if sig.orders == (-1, -1, -1, -1):
        return False
    total = sum(
        (Fraction(1, d + 2) for d in sig.orders if d % 2 != 0), Fraction(0)
    )
    return total > 4
