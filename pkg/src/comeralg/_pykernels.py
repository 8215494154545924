"""Pure-Python kernels: the fallback twins of the compiled loops in _ckernels.

Each function here must stay behaviorally identical to its compiled
counterpart; tests cross-check the two backends on shared inputs.
"""

from __future__ import annotations

from array import array


def log_table(p: int, g: int) -> array:
    """Discrete-log table over F_p with generator g.

    Returns an array('i') of length p with tbl[x] = t for x = g^t mod p,
    t in [0, p-2]; tbl[0] = -1 (zero has no discrete log).
    """
    tbl = array("i", bytes(4 * p))
    tbl[0] = -1
    x = 1
    for t in range(p - 1):
        tbl[x] = t
        x = x * g % p
    return tbl


def shift_class_masks(tbl: array, p: int, n: int) -> tuple[list[int], int]:
    """One O(p) sweep collecting the classes hit by 1 + X_s for every shift s.

    masks[s] is an n-bit integer whose bit c is set iff some x with
    log[x] = s (mod n) has log[x+1] = c (mod n).  The second return value
    is the class of p-1, i.e. the single shift whose coset contains -1.
    """
    masks = [0] * n
    for x in range(1, p - 1):
        masks[tbl[x] % n] |= 1 << (tbl[x + 1] % n)
    return masks, tbl[p - 1] % n


def check_table_all_pairs(tbl, p, n, masks, zero_shift):
    """Cross-check masks against a full O((p-1)^2) sumset enumeration.

    For every pair (i, j) the enumerated class set of X_i + X_j must match
    the rotation reconstruction from masks[(j-i) mod n], and 0 must be hit
    exactly when (j-i) mod n == zero_shift.  Returns None when everything
    agrees, else ("classes" | "zero", i, j) for the first mismatch.

    This fallback is quadratic in p with Python-level loops; the compiled
    twin is the one meant for large sweeps.
    """
    cls = [t % n if t >= 0 else -1 for t in tbl]
    by_class = [[] for _ in range(n)]
    for x in range(1, p):
        by_class[cls[x]].append(x)
    for i in range(n):
        row = [0] * n
        zerohit = [False] * n
        for x in by_class[i]:
            for y in range(1, p):
                s = x + y
                if s >= p:
                    s -= p
                d = cls[y] - i
                if d < 0:
                    d += n
                if s == 0:
                    zerohit[d] = True
                else:
                    c = cls[s] - i
                    if c < 0:
                        c += n
                    row[d] |= 1 << c
        for d in range(n):
            j = (i + d) % n
            if row[d] != masks[d]:
                return ("classes", i, j)
            if zerohit[d] != (d == zero_shift):
                return ("zero", i, j)
    return None
