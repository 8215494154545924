# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: O(p) table sweeps and the quadratic oracle cross-check.

Behaviorally identical to _pykernels; keep the two in sync.
"""

from cpython cimport array
import array

from libc.stdint cimport int32_t, uint64_t
from libc.string cimport memset, memcmp

cdef array.array _INT32 = array.array("i", [])
cdef array.array _UINT64 = array.array("Q", [])


def log_table(long long p, long long g):
    """Discrete-log table over F_p with generator g (array('i'), tbl[0] = -1)."""
    cdef array.array tbl = array.clone(_INT32, p, zero=False)
    cdef int32_t[::1] v = tbl
    cdef long long x = 1, t
    v[0] = -1
    with nogil:
        for t in range(p - 1):
            v[x] = <int32_t> t
            x = x * g % p
    return tbl


def shift_class_masks(tbl, long long p, long long n):
    """Per-shift class masks of 1 + X_s; returns (masks, class of -1)."""
    cdef int32_t[::1] v = tbl
    cdef long long words = (n + 63) >> 6
    cdef array.array buf = array.clone(_UINT64, n * words, zero=True)
    cdef uint64_t[::1] b = buf
    cdef long long x, s, c
    with nogil:
        for x in range(1, p - 1):
            s = v[x] % n
            c = v[x + 1] % n
            b[s * words + (c >> 6)] |= (<uint64_t> 1) << (c & 63)
    raw = buf.tobytes()
    w8 = words * 8
    masks = [int.from_bytes(raw[s * w8:(s + 1) * w8], "little") for s in range(<long long> n)]
    return masks, v[p - 1] % n


def check_table_all_pairs(tbl, long long p, long long n, masks, long long zero_shift):
    """Cross-check masks against full O((p-1)^2) enumeration of all X_i + X_j.

    Returns None on agreement, else ("classes" | "zero", i, j) for the
    first mismatching pair (rows scanned in ascending i, then shift d).
    """
    cdef int32_t[::1] v = tbl
    cdef long long words = (n + 63) >> 6
    cdef long long w8 = words * 8

    expected = b"".join(int(m).to_bytes(w8, "little") for m in masks)
    cdef const unsigned char[::1] eview = expected

    # class table and elements bucketed by class (counting sort)
    cdef array.array clsbuf = array.clone(_INT32, p, zero=False)
    cdef int32_t[::1] cls = clsbuf
    cdef array.array elembuf = array.clone(_INT32, p - 1, zero=False)
    cdef int32_t[::1] elems = elembuf
    cdef array.array offbuf = array.clone(_INT32, n + 1, zero=True)
    cdef int32_t[::1] off = offbuf
    cdef array.array posbuf = array.clone(_INT32, n, zero=True)
    cdef int32_t[::1] pos = posbuf

    cdef array.array rowbuf = array.clone(_UINT64, n * words, zero=True)
    cdef uint64_t[::1] row = rowbuf
    cdef array.array zbuf = array.clone(_INT32, n, zero=True)
    cdef int32_t[::1] zerohit = zbuf

    cdef long long x, y, s, i, d, c, idx
    cdef long long bad_i = -1, bad_d = -1, bad_kind = 0

    with nogil:
        cls[0] = -1
        for x in range(1, p):
            cls[x] = v[x] % n
            off[cls[x] + 1] += 1
        for i in range(n):
            off[i + 1] += off[i]
            pos[i] = off[i]
        for x in range(1, p):
            elems[pos[cls[x]]] = <int32_t> x
            pos[cls[x]] += 1

        for i in range(n):
            memset(&row[0], 0, n * words * 8)
            memset(&zerohit[0], 0, n * 4)
            for idx in range(off[i], off[i + 1]):
                x = elems[idx]
                for y in range(1, p):
                    s = x + y
                    if s >= p:
                        s -= p
                    d = cls[y] - i
                    if d < 0:
                        d += n
                    if s == 0:
                        zerohit[d] = 1
                    else:
                        c = cls[s] - i
                        if c < 0:
                            c += n
                        row[d * words + (c >> 6)] |= (<uint64_t> 1) << (c & 63)
            if memcmp(&row[0], &eview[0], n * words * 8) != 0:
                for d in range(n):
                    if memcmp(&row[d * words], &eview[d * w8], w8) != 0:
                        bad_i = i
                        bad_d = d
                        bad_kind = 1
                        break
                break
            for d in range(n):
                if zerohit[d] != (1 if d == zero_shift else 0):
                    bad_i = i
                    bad_d = d
                    bad_kind = 2
                    break
            if bad_kind != 0:
                break

    if bad_kind == 0:
        return None
    return ("classes" if bad_kind == 1 else "zero", int(bad_i), int((bad_i + bad_d) % n))
