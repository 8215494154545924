"""Deciders and searches for Ramsey-type coset partitions of prime fields.

Three variants share one engine.  Each demands specific class sets from
the SumClassTable:

  directed Ramsey      n = 2m, k odd:  classes[0] = Z_n - {0},
                                       classes[m] = Z_n - {0, m},
                                       classes[s] = Z_n otherwise
  directed anti-Ramsey n = 2m, k odd:  classes[0] = Z_n - {m},
                                       classes[s] = Z_n otherwise
  symmetric Ramsey     n = m,  k even: classes[0] = Z_m - {0},
                                       classes[s] = Z_m otherwise

Zero membership never needs separate checking: 0 lands in X_i + X_j
exactly when (j - i) mod n is the class of -1, which the parity
constraints pin to m (odd k) or 0 (even k).
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from comeralg.coset_cycles import bits_of, build_coset_system, sum_class_table, table_matches_oracle
from comeralg.field_core import MAX_MODULUS, build_context, is_prime


class CongruenceError(ValueError):
    """p is not a prime in the residue class the variant requires."""


class Variant(enum.Enum):
    DIRECTED_RAMSEY = "ramsey"
    DIRECTED_ANTI_RAMSEY = "anti"
    SYMMETRIC_RAMSEY = "symmetric"

    @property
    def directed(self) -> bool:
        return self is not Variant.SYMMETRIC_RAMSEY

    @property
    def parity_mode(self) -> str:
        return "odd-k" if self.directed else "even-k"

    def cosets_for(self, m: int) -> int:
        """Number of cosets n: 2m for the directed variants, m symmetric."""
        return 2 * m if self.directed else m

    def congruence(self, m: int) -> tuple[int, int]:
        """(residue, modulus) that candidate primes must satisfy."""
        n = self.cosets_for(m)
        return (n + 1, 2 * n) if self.directed else (1, 2 * n)

    def default_bound(self, m: int) -> int:
        """Bound past which X_0 cannot stay sum-free, making 'none' final."""
        return self.cosets_for(m) ** 4 + 5


@dataclass(frozen=True)
class Violation:
    """First failed condition: id, shift, and the class-set discrepancy."""

    condition: str
    shift: int
    missing: tuple[int, ...]
    extra: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        if self.missing:
            parts.append("missing " + " ".join(map(str, self.missing)))
        if self.extra:
            parts.append("extra " + " ".join(map(str, self.extra)))
        return f"{self.condition} at shift {self.shift}: " + "; ".join(parts)


@dataclass(frozen=True)
class CheckReport:
    p: int
    m: int
    variant: Variant
    n: int
    k: int
    g: int
    passed: bool
    violation: Violation | None

    def __post_init__(self):
        assert self.passed == (self.violation is None)


def candidate_primes(m: int, v: Variant, p_max: int) -> Iterator[int]:
    """Ascending primes <= p_max in the residue class demanded by v."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    r, mod = v.congruence(m)
    q = r if r > 1 else r + mod
    while q <= p_max:
        if is_prime(q):
            yield q
        q += mod


def required_masks(v: Variant, n: int) -> list[int]:
    """Target class masks per shift; comparison reduces to integer equality."""
    full = (1 << n) - 1
    req = [full] * n
    if v is Variant.DIRECTED_RAMSEY:
        req[0] = full ^ 1
        req[n // 2] = full ^ 1 ^ (1 << (n // 2))
    elif v is Variant.DIRECTED_ANTI_RAMSEY:
        req[0] = full ^ (1 << (n // 2))
    else:
        req[0] = full ^ 1
    return req


def _condition_schedule(v: Variant, n: int) -> list[tuple[int, str]]:
    # first-violation order: cheap sum-freeness failures surface first
    if not v.directed:
        return [(0, "C2")] + [(s, "C3") for s in range(1, n)]
    h = n // 2
    return [(0, "C1"), (h, "C2")] + [(s, "C3") for s in range(1, n) if s != h]


def check(p: int, m: int, v: Variant, paranoid: bool = False) -> CheckReport:
    """Decide whether (p, m) realizes the variant; p must be a candidate prime.

    paranoid additionally recomputes every sumset pair by brute force and
    raises if the O(p) table disagrees anywhere.
    """
    n = v.cosets_for(m)
    r, mod = v.congruence(m)
    if p % mod != r % mod or not is_prime(p):
        raise CongruenceError(f"p = {p} must be a prime = {r % mod} (mod {mod})")
    ctx = build_context(p)
    cs = build_coset_system(ctx, n, require=v.parity_mode)
    t = sum_class_table(cs)
    if paranoid:
        bad = table_matches_oracle(cs, t)
        if bad is not None:
            raise RuntimeError(f"table/oracle mismatch at {bad}")
    req = required_masks(v, n)
    violation = None
    for s, cond in _condition_schedule(v, n):
        have = t.masks[s]
        want = req[s]
        if have != want:
            violation = Violation(
                condition=cond,
                shift=s,
                missing=tuple(bits_of(want & ~have)),
                extra=tuple(bits_of(have & ~want)),
            )
            break
    return CheckReport(
        p=p, m=m, variant=v, n=n, k=cs.k, g=ctx.g,
        passed=violation is None, violation=violation,
    )


def _effective_bound(m: int, v: Variant, p_max: int | None) -> tuple[int, int]:
    want = v.default_bound(m) if p_max is None else p_max
    return min(want, MAX_MODULUS - 1), want


def search_smallest(m: int, v: Variant, p_max: int | None = None, jobs: int = 1) -> int | None:
    """Smallest candidate prime <= p_max passing check, or None.

    The default bound makes None conclusive: beyond it X_0 always picks up
    a forbidden solution.  Candidates are scanned in increasing order; with
    jobs > 1 they are checked in parallel batches whose results are reduced
    in candidate order, so the answer never depends on scheduling.
    """
    cap, want = _effective_bound(m, v, p_max)
    cands = candidate_primes(m, v, cap)
    found = None
    if jobs <= 1:
        for q in cands:
            if check(q, m, v).passed:
                found = q
                break
    else:
        batch_size = max(32, 8 * jobs)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            while found is None:
                batch = list(islice(cands, batch_size))
                if not batch:
                    break
                for q, report in zip(batch, pool.map(lambda q: check(q, m, v), batch)):
                    if report.passed:
                        found = q
                        break
    if found is None and want > cap:
        raise ValueError(
            f"no pass below 2^31; bound {want} exceeds the supported modulus range"
        )
    return found
