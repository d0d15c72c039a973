r"""
Exact rational arithmetic.

Every exact quantity in the package (cylinder moduli, Siegel-Veech
constants normalized by pi^2, sums of Lyapunov exponents, stratum
formula values) is a :class:`Rational`.  We back the type by the
standard-library :class:`fractions.Fraction`, which already guarantees
the invariants we rely on:

- the stored fraction is always reduced, with positive denominator,
  so equality is structural and safe for exact regression tests;
- zero is uniquely ``0/1``;
- arithmetic is exact at arbitrary precision;
- ``str()`` prints ``p/q`` with the denominator omitted when it is 1
  (``"10/9"``, ``"-1/2"``, ``"4"``), the form used verbatim in CLI and
  JSON output.

The helpers below exist to give the rest of the package (and its tests)
a single place for construction and text round-tripping with the
package's error types.
"""

from fractions import Fraction

from .errors import DomainError, ParseError

Rational = Fraction


def make_rational(p, q=1):
    """Return the reduced fraction ``p/q`` with positive denominator.

    EXAMPLES::

        >>> make_rational(10, 9)
        Fraction(10, 9)
        >>> make_rational(-4, -6)
        Fraction(2, 3)
        >>> make_rational(0, 7)
        Fraction(0, 1)
    """
    if q == 0:
        raise DomainError("zero denominator")
    return Fraction(p, q)


def arithmetic(a, b, op):
    """Exact field operation; ``op`` is one of add, sub, mul, div.

    EXAMPLES::

        >>> arithmetic(Fraction(2, 9), Fraction(10, 9), "add")
        Fraction(4, 3)
        >>> arithmetic(Fraction(1, 12), Fraction(8, 3), "mul")
        Fraction(2, 9)
    """
    a = Fraction(a)
    b = Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DomainError("division by zero")
        return a / b
    raise DomainError(f"unknown operation {op!r}")


def parse_rational(text):
    """Parse the textual form ``p/q`` (or plain ``p``).

    EXAMPLES::

        >>> parse_rational("10/9")
        Fraction(10, 9)
        >>> parse_rational("4")
        Fraction(4, 1)
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {text!r}: {exc}") from None


def format_rational(r):
    """Text form ``p/q``, with ``/q`` omitted when the denominator is 1."""
    return str(Fraction(r))
