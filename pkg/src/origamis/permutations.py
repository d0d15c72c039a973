r"""
Permutations of ``{0, ..., n-1}`` as immutable tuples of images.

Free functions in the style of an array-based permutation library; the
composition convention is fixed once for the whole package:

    ``perm_compose(s, t)`` is the map ``x -> s[t[x]]``  (apply ``t`` first).

Cycle strings are 1-based (human-facing, e.g. ``"(1,2)(3)"``) while all
in-memory data is 0-based.
"""

import numpy as np

from .errors import DomainError, ParseError


def perm_check(images, n=None):
    """Return ``True`` iff ``images`` is a bijection of ``{0,...,n-1}``."""
    if n is None:
        n = len(images)
    if len(images) != n:
        return False
    seen = [False] * n
    for i in images:
        if not (0 <= i < n) or seen[i]:
            return False
        seen[i] = True
    return True


def perm_id(n):
    return tuple(range(n))


def perm_inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_compose(s, t):
    """Composite ``s o t``: apply ``t``, then ``s``.

    EXAMPLES::

        >>> perm_compose((1, 0, 2), (0, 2, 1))  # (0,1) o (1,2) = (0,1,2)... as images
        (1, 2, 0)
    """
    return tuple(s[t[x]] for x in range(len(t)))


def perm_conjugate(p, s):
    """Return ``s o p o s^-1``, the relabeling of ``p`` by ``s``."""
    n = len(p)
    out = [0] * n
    for x in range(n):
        out[s[x]] = s[p[x]]
    return tuple(out)


def perm_commutator(h, v):
    """Return ``h o v o h^-1 o v^-1``."""
    hi = perm_inverse(h)
    vi = perm_inverse(v)
    return perm_compose(h, perm_compose(v, perm_compose(hi, vi)))


def perm_cycles(p):
    """Cycles of ``p`` as tuples, each starting at its smallest element,
    ordered by that element.  Fixed points are included as 1-cycles.

    EXAMPLES::

        >>> perm_cycles((1, 0, 2))
        ((0, 1), (2,))
    """
    n = len(p)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def perm_cycle_lengths(p):
    """Multiset of cycle lengths, sorted decreasingly (fixed points included)."""
    return tuple(sorted((len(c) for c in perm_cycles(p)), reverse=True))


def perm_from_cycles(cycles, n):
    """Build a permutation of ``{0,...,n-1}`` from 0-based cycles.

    Elements not mentioned are fixed.  Raises :class:`DomainError` on
    out-of-range or repeated symbols.
    """
    images = list(range(n))
    seen = set()
    for cyc in cycles:
        for x in cyc:
            if not (0 <= x < n):
                raise DomainError(f"symbol {x + 1} out of range")
            if x in seen:
                raise DomainError(f"symbol {x + 1} repeated")
            seen.add(x)
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def perm_random(rng, n):
    """Uniformly random permutation from a ``numpy.random.Generator``."""
    return tuple(int(x) for x in rng.permutation(n))


def perm_to_array(p):
    return np.asarray(p, dtype=np.int64)


# -- 1-based cycle-string notation --------------------------------------


def cycles_to_string(p):
    """1-based cycle string with fixed points omitted; ``"()"`` for id.

    EXAMPLES::

        >>> cycles_to_string((1, 0, 2))
        '(1,2)'
        >>> cycles_to_string((0, 1))
        '()'
    """
    parts = [
        "(" + ",".join(str(x + 1) for x in cyc) + ")"
        for cyc in perm_cycles(p)
        if len(cyc) > 1
    ]
    return "".join(parts) if parts else "()"


def cycles_from_string(text, n):
    """Parse a 1-based cycle string like ``"(1,2)(3)"`` into images.

    EXAMPLES::

        >>> cycles_from_string("(1,2)", 3)
        (1, 0, 2)
    """
    s = text.strip().replace(" ", "")
    if s in ("", "()"):
        return perm_id(n)
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError(f"cycle notation must be parenthesized: {text!r}")
    cycles = []
    for chunk in s[1:-1].split(")("):
        if chunk == "":
            continue
        cyc = []
        for tok in chunk.split(","):
            try:
                val = int(tok)
            except ValueError:
                raise ParseError(f"bad symbol {tok!r} in {text!r}") from None
            if not (1 <= val <= n):
                raise ParseError(f"symbol {val} out of range in {text!r}")
            cyc.append(val - 1)
        cycles.append(cyc)
    try:
        return perm_from_cycles(cycles, n)
    except DomainError as exc:
        raise ParseError(f"{exc} in {text!r}") from None
