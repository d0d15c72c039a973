r"""
Monte Carlo estimation of individual Lyapunov exponents of the Hodge
bundle over the arithmetic Teichmueller disc of an origami.

The random geodesic is coded by continued fractions: the digit sequence
``a_1, a_2, ...`` of a uniform endpoint is sampled as a stationary
process (see :func:`_cf_digit_stream`) and the cocycle is driven along
the cutting-sequence word ``T^(a_1) L^(a_2) T^(a_3) L^(a_4) ...``
alternating the upper shear ``T`` with the lower shear ``L``.  One
*step* is one shear application, so a digit ``a`` advances ``a`` steps.

The cocycle itself lives over the finite SL(2,Z)-orbit: for every
canonical orbit member and each generator we precompute the successor
member and the exact integer matrix of the induced map on homology
(transported back to canonical labels; the matrix is independent of the
relabeling by equivariance).  Large T-powers take a shortcut through
the precomputed full T-cycle matrix raised by binary exponentiation.

A frame of 2g vectors is renormalized by modified Gram-Schmidt every
``cadence`` multiplications; accumulated log-stretches per batch yield
the raw exponents, reported normalized by the leading one (the
tautological plane carries exponent one exactly, so ratios remove the
time change of the coding).  With fixed ``(seed, steps, opts)`` the
output is reproducible bit for bit.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import DomainError, ConsistencyError
from .homology import (
    chain_matrix,
    homology_data,
    relabel_chain_matrix,
    _matmul,
)
from .origami import apply_generator, canonical_form_with_map
from .orbits import sl2z_orbit

_TAUT_ACTION = {"T": ((1, 0), (1, 1)), "R": ((0, 1), (-1, 0)), "L": ((1, 1), (0, 1))}
_GENERATORS = ("T", "R", "L")


@dataclass(frozen=True)
class MonteCarloOptions:
    cadence: int = 16
    digit_cap: int = 10**6
    n_batches: int = 32
    burn_in: Optional[int] = None
    check_symplectic: bool = True
    max_orbit: Optional[int] = None
    chunk_digits: int = 4096


@dataclass(frozen=True)
class LyapunovEstimate:
    """Normalized exponent estimates; ``exponents[0] == 1`` exactly."""

    exponents: tuple
    standard_errors: tuple
    steps: int
    seed: int
    cf_digit_resamples: int
    raw_exponents: tuple  # all 2g normalized exponents, diagnostics
    raw_standard_errors: tuple
    counters: dict

    def to_json_dict(self):
        return {
            "exponents": list(self.exponents),
            "stderr": list(self.standard_errors),
            "steps": self.steps,
            "seed": self.seed,
            "cf_digit_resamples": self.cf_digit_resamples,
        }


@dataclass(frozen=True)
class CocycleTables:
    """Per-orbit-member transition tables of the homology cocycle.

    Generator rows are ordered (T, R, L); the walk itself only uses the
    two shears T and L, with R kept for exact-word checks.
    """

    members: tuple
    rank: int
    genus: int
    succ: np.ndarray  # (3, M) successor member per generator
    fmat: np.ndarray  # (3, M, D, D) float64 copies of the matrices
    imat: np.ndarray  # (3, M, D, D) int64 exact matrices
    jforms: np.ndarray  # (M, D, D) intersection forms
    cyc_len: np.ndarray  # (2, M) T- and L-cycle lengths through members
    loops: np.ndarray  # (2, M, D, D) float64 full T-/L-cycle products
    homology: tuple  # HomologyData per member

    @property
    def size(self):
        return len(self.members)


def _exact_generator_matrix(member, hd_src, hd_dst, canon, sigma, gen):
    """Exact integer matrix member -> canonical(gen(member)) = canon,
    where ``sigma`` is the canonicalizing relabeling of gen(member).

    Composition: chain map of the generator, then the relabeling that
    canonicalizes the image, then homology coordinates.
    """
    n = member.n_squares
    c = relabel_chain_matrix(sigma, n) @ chain_matrix(member, gen)
    A = hd_dst.projection @ c @ hd_src.homology_basis
    rows = [[int(x) for x in row] for row in A]
    # exact symplectic check in unbounded integers
    j_src = [[int(x) for x in row] for row in hd_src.intersection_form]
    j_dst = [[int(x) for x in row] for row in hd_dst.intersection_form]
    at = [list(col) for col in zip(*rows)]
    if _matmul(at, _matmul(j_dst, rows)) != j_src:
        raise ConsistencyError(f"{gen}-matrix is not symplectic on the orbit")
    (ah, bh), (av, bv) = _TAUT_ACTION[gen]
    th = ah * hd_dst.taut_h + bh * hd_dst.taut_v
    tv = av * hd_dst.taut_h + bv * hd_dst.taut_v
    if not np.array_equal(A @ hd_src.taut_h, th) or not np.array_equal(
        A @ hd_src.taut_v, tv
    ):
        raise ConsistencyError(f"{gen}-matrix is wrong on the tautological plane")
    return rows


def build_cocycle_tables(o, max_orbit=None):
    """Precompute the full cocycle data over the orbit of ``o``."""
    orbit = sl2z_orbit(o, max_orbit=max_orbit)
    members = orbit.members
    index = {m: i for i, m in enumerate(members)}
    hd = tuple(homology_data(m) for m in members)
    d = hd[0].rank
    genus = orbit.signature.genus
    if d != 2 * genus:
        raise ConsistencyError(f"homology rank {d} != 2g = {2 * genus}")
    m_count = len(members)

    n_gen = len(_GENERATORS)
    succ = np.zeros((n_gen, m_count), dtype=np.int64)
    fmat = np.zeros((n_gen, m_count, d, d), dtype=np.float64)
    imat = np.zeros((n_gen, m_count, d, d), dtype=np.int64)
    exact = [[None] * m_count for _ in range(n_gen)]
    for i, member in enumerate(members):
        for g_idx, gen in enumerate(_GENERATORS):
            canon, sigma = canonical_form_with_map(apply_generator(member, gen))
            j = index[canon]
            rows = _exact_generator_matrix(member, hd[i], hd[j], canon, sigma, gen)
            succ[g_idx, i] = j
            exact[g_idx][i] = rows
            imat[g_idx, i] = np.array(rows, dtype=np.int64)
            fmat[g_idx, i] = np.array(rows, dtype=np.float64)

    jforms = np.stack([h.intersection_form for h in hd]).astype(np.int64)

    # full T-/L-cycle products, exact, then stored as float64
    cyc_len = np.zeros((2, m_count), dtype=np.int64)
    loops = np.zeros((2, m_count, d, d), dtype=np.float64)
    for slot, g_idx in enumerate((0, 2)):  # T and L
        seen = [False] * m_count
        for start in range(m_count):
            if seen[start]:
                continue
            cycle = [start]
            j = int(succ[g_idx, start])
            while j != start:
                cycle.append(j)
                j = int(succ[g_idx, j])
            for i in cycle:
                seen[i] = True
                cyc_len[slot, i] = len(cycle)
                acc = [[1 if a == b else 0 for b in range(d)] for a in range(d)]
                node = i
                for _ in range(len(cycle)):
                    acc = _matmul(exact[g_idx][node], acc)
                    node = int(succ[g_idx, node])
                if node != i:
                    raise ConsistencyError("generator cycle did not close")
                peak = max(abs(x) for row in acc for x in row)
                if peak >= 2**52:
                    raise ConsistencyError(
                        "loop matrix too large for exact float64 storage"
                    )
                loops[slot, i] = np.array(acc, dtype=np.float64)

    return CocycleTables(
        members=members,
        rank=d,
        genus=genus,
        succ=succ,
        fmat=fmat,
        imat=imat,
        jforms=jforms,
        cyc_len=cyc_len,
        loops=loops,
        homology=hd,
    )


def _cf_digit_stream(rng, cap, chunk):
    """Yield ``(digits_array, resample_count)`` chunks of a stationary
    continued-fraction digit sequence (one infinite geodesic, no
    restarts).

    The digit process of a uniform endpoint is a chain with complete
    connections: the law of the next digit depends on the past only
    through ``y = [0; a_k, ..., a_1]``.  Under the invariant measure
    ``dx dy / (ln 2 (1+xy)^2)`` the conditional CDF of the forward
    endpoint ``x`` given ``y`` is ``x (1+y) / (1+xy)``, inverted in
    closed form, and ``y`` itself updates by ``y <- 1/(a+y)``.  The
    initial ``y`` is drawn from its exact marginal ``2^u - 1``, so the
    stream is stationary from the first digit.

    A digit above ``cap`` is rejected and the endpoint is redrawn (a
    resample event, counted).
    """
    y = 2.0 ** rng.random() - 1.0
    buffer = []
    resamples = 0
    while True:
        u = rng.random()
        if u <= 0.0:
            continue
        x = u / ((1.0 + y) - u * y)
        digit = int(1.0 / x)
        if digit < 1:
            digit = 1
        if digit > cap:
            resamples += 1
            continue
        y = 1.0 / (digit + y)
        buffer.append(digit)
        if len(buffer) >= chunk:
            yield np.asarray(buffer, dtype=np.int64), resamples
            buffer = []
            resamples = 0


def _single_run(tables, start_member, steps, seed, opts):
    d = tables.rank
    nb = opts.n_batches
    burn_in = opts.burn_in
    if burn_in is None:
        burn_in = min(max(steps // 100, 1_000), 100_000)
    burn_in = min(burn_in, steps // 2)

    rng = np.random.Generator(np.random.PCG64(seed))
    stream = _cf_digit_stream(rng, opts.digit_cap, opts.chunk_digits)

    state = np.array([start_member, 0, 0], dtype=np.int64)
    frame = np.eye(d, dtype=np.float64)
    batch_logs = np.zeros((nb + 1, d), dtype=np.float64)
    counters = np.zeros(8, dtype=np.int64)
    resamples = 0

    while state[1] < steps:
        digits, res = next(stream)
        resamples += res
        kernels.mc_walk(
            tables.succ[0],
            tables.succ[2],
            tables.fmat[0],
            tables.fmat[2],
            tables.imat[0],
            tables.imat[2],
            tables.jforms,
            tables.cyc_len[0],
            tables.loops[0],
            tables.cyc_len[1],
            tables.loops[1],
            digits,
            state,
            frame,
            batch_logs,
            counters,
            steps,
            opts.cadence,
            nb,
            burn_in,
            1 if opts.check_symplectic else 0,
        )
    if counters[4] != 0:
        raise ConsistencyError(
            f"{counters[4]} integer symplectic window checks failed"
        )

    sums = batch_logs[:nb]
    # a huge continued-fraction digit can jump a whole batch span; drop
    # batches that received no renormalization
    filled = sums[:, 0] > 0
    sums = sums[filled]
    if sums.shape[0] < 4:
        raise ConsistencyError("too few filled batches for error estimation")
    totals = sums.sum(axis=0)
    if totals[0] <= 0:
        raise ConsistencyError("leading log-stretch is not positive")
    lam = totals / totals[0]
    ratios = sums / sums[:, :1]
    n_filled = sums.shape[0]
    se = ratios.std(axis=0, ddof=1) / np.sqrt(n_filled)

    # keep the leading column first (exponent 1 by normalization), order
    # the rest decreasingly
    rest = sorted(range(1, d), key=lambda i: -lam[i])
    order = [0] + rest
    lam_sorted = tuple(float(lam[i]) for i in order)
    se_sorted = tuple(float(se[i]) for i in order)
    g = tables.genus
    counter_dict = {
        "multiplications": int(counters[0]),
        "renormalizations": int(counters[1]),
        "symplectic_windows_checked": int(counters[2]),
        "symplectic_windows_skipped": int(counters[3]),
        "symplectic_window_failures": int(counters[4]),
    }
    return LyapunovEstimate(
        exponents=lam_sorted[:g],
        standard_errors=se_sorted[:g],
        steps=steps,
        seed=seed,
        cf_digit_resamples=resamples,
        raw_exponents=lam_sorted,
        raw_standard_errors=se_sorted,
        counters=counter_dict,
    )


def _combine(estimates, steps, seed):
    """Inverse-variance weighted aggregation across replicas."""
    g = len(estimates[0].exponents)
    exps = []
    ses = []
    for i in range(g):
        vals = np.array([e.exponents[i] for e in estimates])
        errs = np.array([e.standard_errors[i] for e in estimates])
        if np.all(errs == 0):
            exps.append(float(vals.mean()))
            ses.append(0.0)
            continue
        floor = errs[errs > 0].min()
        w = 1.0 / np.maximum(errs, floor) ** 2
        exps.append(float((w * vals).sum() / w.sum()))
        ses.append(float(1.0 / np.sqrt(w.sum())))
    return LyapunovEstimate(
        exponents=tuple(exps),
        standard_errors=tuple(ses),
        steps=steps,
        seed=seed,
        cf_digit_resamples=sum(e.cf_digit_resamples for e in estimates),
        raw_exponents=estimates[0].raw_exponents,
        raw_standard_errors=estimates[0].raw_standard_errors,
        counters=estimates[0].counters,
    )


def estimate_spectrum(o, steps, seed, opts=None, replicas=1, tables=None):
    """Estimate the top-g Lyapunov exponents of the disc of ``o``.

    EXAMPLES::

        >>> from .origami import make_origami
        >>> est = estimate_spectrum(make_origami((0,), (0,)), 10**4, 7)
        >>> est.exponents
        (1.0,)
    """
    steps = int(steps)
    if steps < 10**4:
        raise DomainError(f"need at least 10^4 steps, got {steps}")
    if replicas < 1:
        raise DomainError("replicas must be >= 1")
    if opts is None:
        opts = MonteCarloOptions()
    if tables is None:
        tables = build_cocycle_tables(o, max_orbit=opts.max_orbit)
    start, _ = canonical_form_with_map(o)
    start_member = tables.members.index(start)
    runs = [
        _single_run(tables, start_member, steps, seed + k, opts)
        for k in range(replicas)
    ]
    if replicas == 1:
        return runs[0]
    return _combine(runs, steps, seed)
