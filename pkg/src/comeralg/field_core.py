"""Prime-field groundwork: primality, factoring, primitive roots, dlog tables.

The discrete-log table is what makes the per-prime sumset sweep O(p); it
uses 32-bit entries (about 4p bytes), which caps the modulus at 2**31.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field

from comeralg import kernels

# 32-bit log entries; larger p would need a wider table and is rejected.
MAX_MODULUS = 1 << 31

# Deterministic Miller-Rabin base set, exact for all x < 3.3e24 (covers 2**63).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(x: int) -> bool:
    """Deterministic primality test, exact for all x below 2**63."""
    if x < 2:
        return False
    for q in _MR_BASES:
        if x % q == 0:
            return x == q
    d = x - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        y = pow(a, d, x)
        if y == 1 or y == x - 1:
            continue
        for _ in range(r - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def factorize(x: int) -> list[int]:
    """Prime factors of x with multiplicity, ascending (trial division).

    Intended for cofactors below 2**31 (factoring p-1); larger inputs work
    but may be slow when they have large prime factors.
    """
    if x < 2:
        raise ValueError(f"cannot factor {x}: need an integer >= 2")
    out = []
    d = 2
    while d * d <= x:
        while x % d == 0:
            out.append(d)
            x //= d
        d += 1 if d == 2 else 2
    if x > 1:
        out.append(x)
    return out


def find_primitive_root(p: int) -> int:
    """Smallest generator of F_p^x for an odd prime p.

    Fixing the smallest root keeps every downstream coset labeling (and
    therefore every file and CSV emitted) reproducible.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p = {p} is not an odd prime")
    cofactors = [(p - 1) // q for q in sorted(set(factorize(p - 1)))]
    g = 2
    while True:
        if all(pow(g, e, p) != 1 for e in cofactors):
            return g
        g += 1


@dataclass(frozen=True)
class FieldContext:
    """A prime p, its smallest primitive root g, and the full dlog table.

    log[x] is the exponent t in [0, p-2] with g^t = x (mod p); log[0] = -1.
    Immutable after construction and safe to share across threads.
    """

    p: int
    g: int
    log: array = field(repr=False, compare=False)


def build_context(p: int) -> FieldContext:
    """Build the FieldContext for prime p (O(p) time, about 4p bytes)."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p = {p} is not an odd prime")
    if p >= MAX_MODULUS:
        raise ValueError(
            f"p = {p} exceeds the supported modulus limit 2**31 "
            "(32-bit dlog table entries)"
        )
    g = find_primitive_root(p)
    return FieldContext(p=p, g=g, log=kernels.log_table(p, g))
