"""Coset partitions of F_p^x and their sumset class structure.

The partition splits F_p^x into n cosets X_0..X_{n-1} of the index-n
multiplicative subgroup, X_i = {g^(an+i)}.  Because every sumset
X_i + X_j is a union of whole cosets (it is closed under multiplication
by X_0), the entire cycle structure is captured by n shift masks:
the class set of X_i + X_j is the mask for shift (j-i) mod n rotated by i,
and 0 is attained exactly when (j-i) mod n is the class of -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from comeralg import kernels
from comeralg.field_core import FieldContext


class InvalidIndexError(ValueError):
    """The requested coset index n does not divide p-1 (or is < 1)."""


class ParityError(ValueError):
    """The cofactor k = (p-1)/n has the wrong parity for the requested mode."""


def bits_of(mask: int):
    """Yield the set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def rotate_mask(mask: int, a: int, n: int) -> int:
    """Rotate an n-bit mask left by a positions (class-set translation by a)."""
    a %= n
    if a == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << a) | (mask >> (n - a))) & full


@dataclass(frozen=True)
class CosetSystem:
    """Partition of F_p^x into the n cosets of the index-n subgroup."""

    ctx: FieldContext
    n: int

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def k(self) -> int:
        """Coset size, the cofactor (p-1)/n."""
        return (self.p - 1) // self.n

    @property
    def m(self) -> int:
        """n/2, the converse shift of odd-k systems (requires n even)."""
        if self.n % 2:
            raise ValueError(f"n = {self.n} is odd: no half-index")
        return self.n // 2

    @property
    def neg_shift(self) -> int:
        """The class of -1: (p-1)/2 mod n (= n/2 for odd k, 0 for even k)."""
        return ((self.p - 1) // 2) % self.n

    def class_of(self, x: int) -> int:
        """Coset class of x in [0, n), for x not divisible by p."""
        t = self.ctx.log[x % self.p]
        if t < 0:
            raise ValueError(f"{x} is 0 mod {self.p}: no coset class")
        return t % self.n

    @cached_property
    def _cosets(self) -> list[tuple[int, ...]]:
        buckets: list[list[int]] = [[] for _ in range(self.n)]
        log = self.ctx.log
        n = self.n
        for x in range(1, self.p):
            buckets[log[x] % n].append(x)
        return [tuple(b) for b in buckets]

    def coset(self, i: int) -> tuple[int, ...]:
        """Elements of X_i in ascending order."""
        return self._cosets[i]


def build_coset_system(ctx: FieldContext, n: int, require: str | None = None) -> CosetSystem:
    """Validate (p, n) and build the coset partition.

    require selects a parity mode: "odd-k" demands n even and (p-1)/n odd
    (the directed constructions), "even-k" demands (p-1)/n even (the
    symmetric construction), None accepts any divisor.
    """
    p = ctx.p
    if n < 1 or (p - 1) % n != 0:
        raise InvalidIndexError(f"n = {n} does not divide p-1 = {p - 1}")
    k = (p - 1) // n
    if require == "odd-k":
        if n % 2:
            raise ParityError(f"n = {n} must be even in odd-k mode")
        if k % 2 == 0:
            raise ParityError(
                f"k = {k} is even: p = {p} is not {n + 1} (mod {2 * n})"
            )
    elif require == "even-k":
        if k % 2:
            raise ParityError(f"k = {k} is odd: p = {p} is not 1 (mod {2 * n})")
    elif require is not None:
        raise ValueError(f"unknown parity mode {require!r}")
    return CosetSystem(ctx=ctx, n=n)


@dataclass(frozen=True)
class SumClassTable:
    """The n shift masks that determine every sumset X_i + X_j.

    masks[s] has bit c set iff class(1 + x) = c for some x in X_s (with
    x != p-1); zero_shift is the class of -1, the single shift whose
    sums reach 0.
    """

    n: int
    masks: tuple[int, ...]
    zero_shift: int

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def class_set(self, s: int) -> frozenset[int]:
        return frozenset(bits_of(self.masks[s]))

    def zero(self, s: int) -> bool:
        return s % self.n == self.zero_shift

    def pair_mask(self, i: int, j: int) -> int:
        """Class set of X_i + X_j as a mask (reconstruction law)."""
        return rotate_mask(self.masks[(j - i) % self.n], i, self.n)

    def pair_zero(self, i: int, j: int) -> bool:
        """Whether 0 lies in X_i + X_j."""
        return (j - i) % self.n == self.zero_shift

    def pair_class_set(self, i: int, j: int) -> frozenset[int]:
        return frozenset(bits_of(self.pair_mask(i, j)))


def sum_class_table(cs: CosetSystem) -> SumClassTable:
    """Compute the shift masks in a single O(p) sweep."""
    masks, zero_shift = kernels.shift_class_masks(cs.ctx.log, cs.p, cs.n)
    assert zero_shift == cs.neg_shift
    return SumClassTable(n=cs.n, masks=tuple(masks), zero_shift=zero_shift)


def brute_force_sum_classes(cs: CosetSystem, i: int, j: int) -> tuple[set[int], bool]:
    """Independent O(k^2) oracle: enumerate X_i + X_j element by element."""
    n = cs.n
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"classes must lie in [0, {n})")
    p = cs.p
    log = cs.ctx.log
    hit: set[int] = set()
    zero = False
    for x in cs.coset(i):
        for y in cs.coset(j):
            s = x + y
            if s >= p:
                s -= p
            if s == 0:
                zero = True
            else:
                hit.add(log[s] % n)
    return hit, zero


def table_matches_oracle(cs: CosetSystem, table: SumClassTable):
    """Diagnostic: recompute every (i, j) pair by full enumeration.

    Returns None if the table's reconstruction agrees everywhere, else
    ("classes" | "zero", i, j) for the first mismatching pair.
    """
    return kernels.check_table_all_pairs(
        cs.ctx.log, cs.p, cs.n, list(table.masks), table.zero_shift
    )


def cycle_list(table: SumClassTable) -> set[tuple[int, int, int]]:
    """All triples (i, j, l) with X_l contained in X_i + X_j."""
    n = table.n
    out: set[tuple[int, int, int]] = set()
    for d in range(n):
        classes = list(bits_of(table.masks[d]))
        for i in range(n):
            j = (i + d) % n
            for c in classes:
                out.add((i, j, (i + c) % n))
    return out


def find_witness(cs: CosetSystem, kind: str) -> tuple[int, int, int] | None:
    """Least (x, y) in X_0^2 solving x+y = z ("sum") or x+y = -z ("antisum").

    z must lie in X_0 as well; returns None when no solution exists.
    """
    if kind not in ("sum", "antisum"):
        raise ValueError(f"kind must be 'sum' or 'antisum', got {kind!r}")
    p = cs.p
    n = cs.n
    log = cs.ctx.log
    xs = cs.coset(0)
    for x in xs:
        for y in xs:
            s = x + y
            if s >= p:
                s -= p
            z = s if kind == "sum" else (p - s if s else 0)
            if z and log[z] % n == 0:
                return (x, y, z)
    return None
