r"""
Square-tiled surfaces (origamis) as pairs of permutations.

An origami on ``N`` unit squares is encoded by the right-neighbor
permutation ``pi_h`` and the top-neighbor permutation ``pi_v`` on
``{0, ..., N-1}``, acting transitively (the surface is connected).
Composition is ``(s o t)(x) = s(t(x))`` everywhere.

Key derived data:

- the stratum: degrees ``(cycle length - 1)`` over the cycles of the
  commutator ``pi_h o pi_v o pi_h^-1 o pi_v^-1`` longer than 1;
- the canonical form: the lexicographically smallest simultaneous
  relabeling over BFS labelings (right neighbor explored before top
  neighbor, FIFO frontier), used to identify origamis up to renumbering;
- the action of the shear ``T: (h, v) -> (h, v o h^-1)`` and the
  quarter-turn ``R: (h, v) -> (v^-1, h)``;
- the decomposition into maximal horizontal cylinders.

The text format (1-based, fixed points omissible) is
``n=<N>; h=<cycles-or-image-list>; v=<cycles-or-image-list>``, e.g.
``n=3; h=(1,2); v=(1,3)`` for the L-origami or ``n=2; h=[2,1]; v=[1,2]``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import DomainError, ParseError, ConsistencyError
from .permutations import (
    perm_check,
    perm_commutator,
    perm_conjugate,
    perm_cycles,
    perm_inverse,
    perm_to_array,
    cycles_to_string,
    cycles_from_string,
)
from .strata import AbelianSignature


@dataclass(frozen=True)
class Origami:
    """A connected square-tiled surface; immutable and hashable.

    ``h`` and ``v`` are 0-based image tuples of the right- and
    top-neighbor permutations.
    """

    h: tuple
    v: tuple

    @property
    def n_squares(self):
        return len(self.h)

    def __str__(self):
        return format_origami(self)


def make_origami(h, v):
    """Validate and build an origami from two image sequences.

    EXAMPLES::

        >>> make_origami((1, 0, 2), (2, 1, 0)).n_squares   # the L-origami
        3
        >>> make_origami((0,), (0,)).n_squares             # unit torus
        1
    """
    h = tuple(int(x) for x in h)
    v = tuple(int(x) for x in v)
    if len(h) != len(v):
        raise DomainError(f"size mismatch: |h| = {len(h)}, |v| = {len(v)}")
    if len(h) == 0:
        raise DomainError("empty permutation pair")
    if not perm_check(h):
        raise DomainError(f"h = {h} is not a permutation")
    if not perm_check(v):
        raise DomainError(f"v = {v} is not a permutation")
    if not kernels.is_transitive(perm_to_array(h), perm_to_array(v)):
        raise DomainError("disconnected: the pair does not act transitively")
    return Origami(h, v)


def conjugate(o, s):
    """Relabel the squares by ``s``: the pair ``(s h s^-1, s v s^-1)``."""
    return Origami(perm_conjugate(o.h, s), perm_conjugate(o.v, s))


def stratum_of(o):
    """Abelian signature of the stratum containing ``o``.

    Degrees are the commutator cycle lengths minus one, dropping fixed
    points; a commuting pair (torus cover) gives the empty signature.

    EXAMPLES::

        >>> stratum_of(make_origami((1, 0, 2), (2, 1, 0)))
        AbelianSignature(degrees=(2,), marked_points=0)
    """
    comm = perm_commutator(o.h, o.v)
    degrees = tuple(
        sorted((len(c) - 1 for c in perm_cycles(comm) if len(c) > 1), reverse=True)
    )
    return AbelianSignature(degrees)


def canonical_form(o):
    """Canonical representative of ``o`` under simultaneous conjugation."""
    ch, cv, _ = kernels.canonical_relabel(perm_to_array(o.h), perm_to_array(o.v))
    return Origami(tuple(int(x) for x in ch), tuple(int(x) for x in cv))


def canonical_form_with_map(o):
    """Canonical form plus the relabeling ``new_of_old`` realizing it,
    i.e. ``canonical_form(o) == conjugate(o, new_of_old)``."""
    ch, cv, m = kernels.canonical_relabel(perm_to_array(o.h), perm_to_array(o.v))
    canon = Origami(tuple(int(x) for x in ch), tuple(int(x) for x in cv))
    return canon, tuple(int(x) for x in m)


def apply_generator(o, gen):
    """Act by ``T: (h, v) -> (h, v o h^-1)`` or ``R: (h, v) -> (v^-1, h)``.

    The lower shear ``L = R^-1 T^-1 R: (h, v) -> (h o v^-1, v)`` is also
    accepted; it is the move the Monte Carlo walk alternates with ``T``.

    EXAMPLES::

        >>> L = make_origami((1, 0, 2), (2, 1, 0))
        >>> apply_generator(L, "T").v    # (1,3) o (1,2)^-1 = (1,2,3), 0-based
        (1, 2, 0)
    """
    if gen == "T":
        hinv = perm_inverse(o.h)
        return Origami(o.h, tuple(o.v[hinv[x]] for x in range(o.n_squares)))
    if gen == "R":
        return Origami(perm_inverse(o.v), o.h)
    if gen == "L":
        vinv = perm_inverse(o.v)
        return Origami(tuple(o.h[vinv[x]] for x in range(o.n_squares)), o.v)
    raise DomainError(f"unknown generator {gen!r}; expected 'T', 'R' or 'L'")


@dataclass(frozen=True)
class CylinderDecomposition:
    """Widths and heights of the maximal horizontal cylinders."""

    cylinders: tuple  # of (width, height) pairs, sorted

    @property
    def sum_moduli(self):
        """Exact sum of the moduli h/w over all cylinders."""
        return sum((Fraction(h, w) for (w, h) in self.cylinders), Fraction(0))

    @property
    def total_area(self):
        return sum(w * h for (w, h) in self.cylinders)


def horizontal_cylinders(o):
    """Decompose ``o`` into maximal horizontal cylinders.

    Rows are the cycles of ``pi_h``.  The interface between a row and
    the row below it carries no singularity exactly when the commutator
    fixes every square of the row (the vertices sitting on that
    interface are the bottom-left corners of the row's squares); in that
    case the two rows lie in one cylinder and we merge them.

    EXAMPLES::

        >>> L = make_origami((1, 0, 2), (2, 1, 0))
        >>> horizontal_cylinders(L).cylinders
        ((1, 1), (2, 1))
        >>> horizontal_cylinders(L).sum_moduli
        Fraction(3, 2)
    """
    n = o.n_squares
    rows = perm_cycles(o.h)
    row_of = [0] * n
    for idx, row in enumerate(rows):
        for x in row:
            row_of[x] = idx

    comm = perm_commutator(o.h, o.v)
    vinv = perm_inverse(o.v)

    parent = list(range(len(rows)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for idx, row in enumerate(rows):
        if all(comm[x] == x for x in row):
            below = {row_of[vinv[x]] for x in row}
            if len(below) != 1:
                raise ConsistencyError(
                    "regular interface between rows of unequal widths"
                )
            b = below.pop()
            if len(rows[b]) != len(row):
                raise ConsistencyError(
                    "regular interface between rows of unequal widths"
                )
            ra, rb = find(idx), find(b)
            if ra != rb:
                parent[ra] = rb

    groups = {}
    for idx, row in enumerate(rows):
        groups.setdefault(find(idx), []).append(idx)

    cylinders = []
    for members in groups.values():
        widths = {len(rows[i]) for i in members}
        if len(widths) != 1:
            raise ConsistencyError("cylinder rows of unequal widths")
        cylinders.append((widths.pop(), len(members)))
    cylinders.sort()
    decomposition = CylinderDecomposition(tuple(cylinders))
    if decomposition.total_area != n:
        raise ConsistencyError(
            f"cylinder areas sum to {decomposition.total_area}, expected {n}"
        )
    return decomposition


# -- text format ---------------------------------------------------------


def format_origami(o):
    """One-line text form, cycles with fixed points omitted.

    EXAMPLES::

        >>> format_origami(make_origami((1, 0, 2), (2, 1, 0)))
        'n=3; h=(1,2); v=(1,3)'
    """
    return "n=%d; h=%s; v=%s" % (
        o.n_squares,
        cycles_to_string(o.h),
        cycles_to_string(o.v),
    )


_FIELD_RE = re.compile(r"^\s*(n|h|v)\s*=\s*(.*?)\s*$")


def _parse_images(text, n, label):
    """Parse ``[2,1,3]`` (1-based image list) or cycle notation."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError(f"{label}: unterminated image list {text!r}")
        body = s[1:-1].strip()
        toks = [t for t in body.split(",") if t.strip() != ""] if body else []
        if len(toks) != n:
            raise ParseError(
                f"{label}: image list has {len(toks)} entries, expected {n}"
            )
        images = []
        for t in toks:
            try:
                val = int(t)
            except ValueError:
                raise ParseError(f"{label}: bad symbol {t.strip()!r}") from None
            if not (1 <= val <= n):
                raise ParseError(f"{label}: symbol {val} out of range")
            images.append(val - 1)
        if not perm_check(tuple(images)):
            raise ParseError(f"{label}: image list is not a bijection")
        return tuple(images)
    try:
        return cycles_from_string(s, n)
    except ParseError as exc:
        raise ParseError(f"{label}: {exc}") from None


def parse_origami(text):
    """Parse the one-line origami format.

    EXAMPLES::

        >>> parse_origami("n=3; h=(1,2); v=(1,3)").h
        (1, 0, 2)
        >>> parse_origami("n=2; h=[2,1]; v=[1,2]").h
        (1, 0)
    """
    fields = {}
    for part in text.split(";"):
        if part.strip() == "":
            continue
        m = _FIELD_RE.match(part)
        if not m:
            raise ParseError(f"expected 'key=value' with key n, h or v: {part!r}")
        key, value = m.group(1), m.group(2)
        if key in fields:
            raise ParseError(f"duplicate field {key!r}")
        fields[key] = value
    for key in ("n", "h", "v"):
        if key not in fields:
            raise ParseError(f"missing field {key!r}")
    try:
        n = int(fields["n"])
    except ValueError:
        raise ParseError(f"n: not an integer: {fields['n']!r}") from None
    if n <= 0:
        raise ParseError(f"n must be positive, got {n}")
    h = _parse_images(fields["h"], n, "h")
    v = _parse_images(fields["v"], n, "v")
    return make_origami(h, v)
