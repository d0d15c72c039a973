r"""
Hot kernels, written once in nopython-compatible style.

Everything here operates on raw ``int64``/``float64`` numpy arrays; the
:mod:`origamis.jit` wrapper compiles each function with numba unless
``ORIGAMI_NUMBA=0``, in which case the identical code runs as plain
Python.  Higher-level modules own validation and all exact arithmetic;
kernels only do the tight loops:

- BFS canonical form of a permutation pair (the orbit/enumeration
  workhorse, called millions of times in a stratum sweep);
- transitivity and commutator cycle-type tests;
- the scan over all of ``S_n`` for one fixed horizontal representative;
- the Monte Carlo cocycle walk (float frame, integer window checks).
"""

import numpy as np

from .jit import kernel

# Window products whose entries would exceed this magnitude are not
# checked (counted as skipped): with d <= 16 and intersection-form
# entries <= 2^10, the three-factor check product stays below 2^63.
INT64_GUARD = 2**20


@kernel
def is_transitive(h, v):
    n = h.shape[0]
    seen = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int64)
    stack[0] = 0
    seen[0] = True
    count = 1
    top = 1
    while top > 0:
        top -= 1
        x = stack[top]
        a = h[x]
        if not seen[a]:
            seen[a] = True
            stack[top] = a
            top += 1
            count += 1
        b = v[x]
        if not seen[b]:
            seen[b] = True
            stack[top] = b
            top += 1
            count += 1
    return count == n


@kernel
def commutator_images(h, v):
    # h o v o h^-1 o v^-1 under the convention (s o t)(x) = s[t[x]]
    n = h.shape[0]
    hinv = np.empty(n, np.int64)
    vinv = np.empty(n, np.int64)
    for i in range(n):
        hinv[h[i]] = i
        vinv[v[i]] = i
    out = np.empty(n, np.int64)
    for x in range(n):
        out[x] = h[v[hinv[vinv[x]]]]
    return out


@kernel
def cycle_type_gt1(p):
    # cycle lengths > 1, ascending
    n = p.shape[0]
    seen = np.zeros(n, np.bool_)
    lens = np.empty(n, np.int64)
    m = 0
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        length = 1
        x = p[s]
        while x != s:
            seen[x] = True
            length += 1
            x = p[x]
        if length > 1:
            lens[m] = length
            m += 1
    return np.sort(lens[:m])


@kernel
def apply_T(h, v):
    # (h, v) -> (h, v o h^-1)
    n = h.shape[0]
    h2 = h.copy()
    v2 = np.empty(n, np.int64)
    for i in range(n):
        v2[h[i]] = v[i]
    return h2, v2


@kernel
def apply_R(h, v):
    # (h, v) -> (v^-1, h)
    n = h.shape[0]
    h2 = np.empty(n, np.int64)
    for i in range(n):
        h2[v[i]] = i
    return h2, h.copy()


@kernel
def canonical_relabel(h, v):
    # Lexicographically smallest simultaneous relabeling of (h, v) over
    # BFS labelings: from each start square, label squares in first-visit
    # order, exploring the right neighbor before the top neighbor with a
    # FIFO frontier.  Returns the winning images and the relabeling map
    # (new_of_old) that produced them.
    n = h.shape[0]
    best_h = np.empty(n, np.int64)
    best_v = np.empty(n, np.int64)
    best_map = np.empty(n, np.int64)
    cand_h = np.empty(n, np.int64)
    cand_v = np.empty(n, np.int64)
    new_of_old = np.empty(n, np.int64)
    old_of_new = np.empty(n, np.int64)
    have_best = False
    for s in range(n):
        for i in range(n):
            new_of_old[i] = -1
        new_of_old[s] = 0
        old_of_new[0] = s
        count = 1
        head = 0
        while head < count:
            cur = old_of_new[head]
            head += 1
            nb = h[cur]
            if new_of_old[nb] < 0:
                new_of_old[nb] = count
                old_of_new[count] = nb
                count += 1
            nb = v[cur]
            if new_of_old[nb] < 0:
                new_of_old[nb] = count
                old_of_new[count] = nb
                count += 1
        for k in range(n):
            cand_h[k] = new_of_old[h[old_of_new[k]]]
            cand_v[k] = new_of_old[v[old_of_new[k]]]
        better = not have_best
        if have_best:
            cmp = 0
            for k in range(n):
                if cand_h[k] != best_h[k]:
                    cmp = -1 if cand_h[k] < best_h[k] else 1
                    break
            if cmp == 0:
                for k in range(n):
                    if cand_v[k] != best_v[k]:
                        cmp = -1 if cand_v[k] < best_v[k] else 1
                        break
            better = cmp < 0
        if better:
            for k in range(n):
                best_h[k] = cand_h[k]
                best_v[k] = cand_v[k]
                best_map[k] = new_of_old[k]
            have_best = True
    return best_h, best_v, best_map


@kernel
def step_canonical(h, v, gen):
    # apply generator (0 = T, 1 = R), then canonicalize
    if gen == 0:
        h2, v2 = apply_T(h, v)
    else:
        h2, v2 = apply_R(h, v)
    ch, cv, _ = canonical_relabel(h2, v2)
    return ch, cv


@kernel
def next_permutation(a):
    # in-place lexicographic successor; False when a was the last one
    n = a.shape[0]
    i = n - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]
    a[i] = a[j]
    a[j] = t
    lo = i + 1
    hi = n - 1
    while lo < hi:
        t = a[lo]
        a[lo] = a[hi]
        a[hi] = t
        lo += 1
        hi -= 1
    return True


@kernel
def scan_pairs(h_rep, filter_type, use_filter, out):
    # For the fixed horizontal permutation ``h_rep``, run over every
    # vertical permutation of S_n; keep transitive pairs whose commutator
    # cycle type (lengths > 1, ascending) matches ``filter_type`` (always
    # keep when use_filter is False).  Survivors are written to ``out``
    # as int8 rows [canonical h images | canonical v images].
    n = h_rep.shape[0]
    v = np.arange(n)
    rows = 0
    while True:
        if is_transitive(h_rep, v):
            ok = True
            if use_filter:
                t = cycle_type_gt1(commutator_images(h_rep, v))
                if t.shape[0] != filter_type.shape[0]:
                    ok = False
                else:
                    for j in range(t.shape[0]):
                        if t[j] != filter_type[j]:
                            ok = False
                            break
            if ok:
                ch, cv, _ = canonical_relabel(h_rep, v)
                for j in range(n):
                    out[rows, j] = ch[j]
                    out[rows, n + j] = cv[j]
                rows += 1
        if not next_permutation(v):
            break
    return rows


# -- Monte Carlo cocycle walk --------------------------------------------


@kernel
def _fmatmul(a, b, out):
    d = a.shape[0]
    for i in range(d):
        for j in range(d):
            s = 0.0
            for k in range(d):
                s += a[i, k] * b[k, j]
            out[i, j] = s


@kernel
def _imatmul(a, b, out):
    d = a.shape[0]
    for i in range(d):
        for j in range(d):
            s = np.int64(0)
            for k in range(d):
                s += a[i, k] * b[k, j]
            out[i, j] = s


@kernel
def _imax_abs(a):
    d = a.shape[0]
    m = np.int64(0)
    for i in range(d):
        for j in range(d):
            x = a[i, j]
            if x < 0:
                x = -x
            if x > m:
                m = x
    return m


@kernel
def _renormalize(frame, logs):
    # modified Gram-Schmidt with a second pass; logs[c] accumulates the
    # log-stretch of column c
    d = frame.shape[0]
    for c in range(d):
        for _pass in range(2):
            for p in range(c):
                dot = 0.0
                for i in range(d):
                    dot += frame[i, c] * frame[i, p]
                for i in range(d):
                    frame[i, c] -= dot * frame[i, p]
        norm = 0.0
        for i in range(d):
            norm += frame[i, c] * frame[i, c]
        norm = np.sqrt(norm)
        logs[c] += np.log(norm)
        for i in range(d):
            frame[i, c] /= norm


@kernel
def _fpow_apply(base, q, frame, tmp1, tmp2, tmp3):
    # frame <- base^q @ frame by binary exponentiation; returns the
    # number of matrix multiplications performed
    d = base.shape[0]
    mults = 0
    for i in range(d):
        for j in range(d):
            tmp1[i, j] = base[i, j]  # running square
            tmp2[i, j] = 1.0 if i == j else 0.0  # accumulated power
    e = q
    while e > 0:
        if e & 1:
            _fmatmul(tmp1, tmp2, tmp3)
            for i in range(d):
                for j in range(d):
                    tmp2[i, j] = tmp3[i, j]
            mults += 1
        e >>= 1
        if e > 0:
            _fmatmul(tmp1, tmp1, tmp3)
            for i in range(d):
                for j in range(d):
                    tmp1[i, j] = tmp3[i, j]
            mults += 1
    _fmatmul(tmp2, frame, tmp3)
    for i in range(d):
        for j in range(d):
            frame[i, j] = tmp3[i, j]
    return mults + 1


@kernel
def mc_walk(succ_t, succ_l, fmat_t, fmat_l, imat_t, imat_l, jforms,
            tcyc_len, tloop, lcyc_len, lloop, digits, state, frame,
            batch_logs, counters, steps_total, cadence, n_batches,
            burn_in, check_sympl):
    """Drive the frame along the cutting-sequence word
    ``T^(a_1) L^(a_2) T^(a_3) L^(a_4) ...`` for the supplied digits,
    renormalizing every ``cadence`` multiplications.

    ``state = [member, steps_done, parity]`` is updated in place
    (parity 0 means the next digit is a T-power); the return value is
    the number of digits consumed.  ``batch_logs`` must have
    ``n_batches + 1`` rows; the extra row receives burn-in stretches.
    Counter slots: 0 total multiplications, 1 renormalizations,
    2 integer symplectic windows checked, 3 windows skipped (power
    shortcut or magnitude guard), 4 window check failures.
    """
    d = frame.shape[0]
    member = state[0]
    steps_done = state[1]
    parity = state[2]

    tmp1 = np.empty((d, d), np.float64)
    tmp2 = np.empty((d, d), np.float64)
    tmp3 = np.empty((d, d), np.float64)
    win = np.empty((d, d), np.int64)
    wtmp = np.empty((d, d), np.int64)
    for i in range(d):
        for j in range(d):
            win[i, j] = 1 if i == j else 0
    win_start = member
    win_ok = True
    win_used = False
    msr = 0  # multiplications since the last renormalization

    ndig = digits.shape[0]
    pos = 0
    while pos < ndig and steps_done < steps_total:
        a = digits[pos]
        pos += 1
        left = steps_total - steps_done
        block = a if a < left else left

        if parity == 0:
            succ = succ_t
            fmat = fmat_t
            imat = imat_t
            cyc_len = tcyc_len
            loop = tloop
        else:
            succ = succ_l
            fmat = fmat_l
            imat = imat_l
            cyc_len = lcyc_len
            loop = lloop

        # take the cycle-power shortcut only for genuinely large blocks;
        # small ones go step by step, keeping integer windows checkable
        loop_len = cyc_len[member]
        if block > 64 and block >= 2 * loop_len:
            q = block // loop_len
            r = block - q * loop_len
        else:
            q = 0
            r = block
        if q > 0:
            m = _fpow_apply(loop[member], q, frame, tmp1, tmp2, tmp3)
            msr += m
            counters[0] += m
            if win_ok and win_used:
                counters[3] += 1
            win_ok = False  # integer window cannot track a float shortcut
        for _ in range(r):
            _fmatmul(fmat[member], frame, tmp3)
            for i in range(d):
                for j in range(d):
                    frame[i, j] = tmp3[i, j]
            msr += 1
            counters[0] += 1
            if win_ok:
                ma = _imax_abs(imat[member])
                limit = INT64_GUARD // d // (ma if ma > 0 else 1)
                if _imax_abs(win) > limit:
                    if win_used:
                        counters[3] += 1
                    win_ok = False
                else:
                    _imatmul(imat[member], win, wtmp)
                    for i in range(d):
                        for j in range(d):
                            win[i, j] = wtmp[i, j]
                    win_used = True
            member = succ[member]
        steps_done += block
        parity = 1 - parity

        if msr >= cadence or steps_done >= steps_total or pos >= ndig:
            if steps_done >= burn_in:
                span = steps_total - burn_in + 1
                b = (steps_done - burn_in) * n_batches // span
                if b > n_batches - 1:
                    b = n_batches - 1
                _renormalize(frame, batch_logs[b])
            else:
                _renormalize(frame, batch_logs[n_batches])
            counters[1] += 1
            if check_sympl != 0 and win_ok and win_used:
                # win maps the fiber at win_start to the fiber at member;
                # exact check: win^T J_member win == J_win_start
                _imatmul(jforms[member], win, wtmp)
                ok = True
                for i in range(d):
                    for j in range(d):
                        s = np.int64(0)
                        for k in range(d):
                            s += win[k, i] * wtmp[k, j]
                        if s != jforms[win_start, i, j]:
                            ok = False
                counters[2] += 1
                if not ok:
                    counters[4] += 1
            for i in range(d):
                for j in range(d):
                    win[i, j] = 1 if i == j else 0
            win_start = member
            win_ok = True
            win_used = False
            msr = 0

    state[0] = member
    state[1] = steps_done
    state[2] = parity
    return pos
