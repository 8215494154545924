"""Atom structures, coset representations, and the composition verifier.

An atom structure lists the diversity atoms of a finite integral relation
algebra: a converse involution plus the forbidden diversity cycles, kept
closed under the Peircean transforms.  A representation assigns each atom
a union of cosets of F_p^x; the verifier checks that coset sumsets realize
exactly the compositions the forbidden cycles dictate, class-set against
class-set, never touching individual field elements on the main path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from comeralg.coset_cycles import (
    CosetSystem,
    SumClassTable,
    bits_of,
    build_coset_system,
    rotate_mask,
    sum_class_table,
)
from comeralg.field_core import build_context, is_prime


class RepFormatError(ValueError):
    """Malformed representation file (reported with a line number)."""


class StructureError(ValueError):
    """Ill-formed atom structure or representation (not a verification fail)."""


def _transforms(t: tuple[str, str, str], conv: Mapping[str, str]):
    x, y, z = t
    return (
        (conv[y], conv[x], conv[z]),
        (conv[x], z, y),
        (z, conv[y], x),
    )


def peircean_closure(
    triples: Iterable[tuple[str, str, str]], converse: Mapping[str, str]
) -> frozenset[tuple[str, str, str]]:
    """Least superset closed under the three cycle transforms; idempotent."""
    pending = []
    for t in triples:
        t = tuple(t)
        for a in t:
            if a not in converse:
                raise StructureError(f"unknown atom {a!r} in forbidden cycle")
        pending.append(t)
    seen: set[tuple[str, str, str]] = set()
    while pending:
        t = pending.pop()
        if t not in seen:
            seen.add(t)
            pending.extend(_transforms(t, converse))
    return frozenset(seen)


class AtomStructure:
    """Diversity atoms with converse involution and closed forbidden cycles."""

    def __init__(
        self,
        converse: Mapping[str, str],
        forbidden: Iterable[tuple[str, str, str]] = (),
    ):
        conv = dict(converse)
        for x, xc in conv.items():
            if xc not in conv or conv[xc] != x:
                raise StructureError(f"converse of {x!r} is not an involution")
        self.atoms: tuple[str, ...] = tuple(sorted(conv))
        self.converse: dict[str, str] = conv
        self.forbidden: frozenset[tuple[str, str, str]] = peircean_closure(forbidden, conv)

    def conv(self, x: str) -> str:
        return self.converse[x]

    def __repr__(self):
        return f"AtomStructure(atoms={self.atoms}, forbidden={len(self.forbidden)} cycles)"

    def __eq__(self, other):
        if not isinstance(other, AtomStructure):
            return NotImplemented
        return self.converse == other.converse and self.forbidden == other.forbidden


def flexible_atoms(a: AtomStructure) -> frozenset[str]:
    """Diversity atoms appearing in no forbidden cycle."""
    used = {atom for t in a.forbidden for atom in t}
    return frozenset(a.atoms) - used


def expected_comp(a: AtomStructure, x: str, y: str) -> tuple[frozenset[str], bool]:
    """Diversity atoms below x;y plus whether the identity is (y = conv x)."""
    if x not in a.converse or y not in a.converse:
        raise StructureError(f"unknown atom in pair ({x!r}, {y!r})")
    below = frozenset(z for z in a.atoms if (x, y, z) not in a.forbidden)
    return below, a.converse[x] == y


@dataclass(frozen=True)
class Representation:
    """Assignment of each diversity atom to a union of coset classes."""

    p: int
    n: int
    assign: dict[str, frozenset[int]] = field(compare=True)

    def atoms(self) -> tuple[str, ...]:
        return tuple(sorted(self.assign))


def image_comp_classes(
    rep: Representation, t: SumClassTable, x: str, y: str
) -> tuple[frozenset[int], bool]:
    """Class set of rho(x) + rho(y), and whether 0 is attained."""
    if rep.n != t.n:
        raise StructureError(f"representation index {rep.n} does not match table index {t.n}")
    if x not in rep.assign or y not in rep.assign:
        raise StructureError(f"unknown atom in pair ({x!r}, {y!r})")
    n = t.n
    mask = 0
    for i in rep.assign[x]:
        for j in rep.assign[y]:
            mask |= rotate_mask(t.masks[(j - i) % n], i, n)
    ys = rep.assign[y]
    zero = any((i + t.zero_shift) % n in ys for i in rep.assign[x])
    return frozenset(bits_of(mask)), zero


@dataclass(frozen=True)
class VerifyProblem:
    kind: str
    subject: tuple[str, ...]
    detail: str

    def __str__(self):
        where = " ".join(self.subject)
        return f"{self.kind}{' ' + where if where else ''}: {self.detail}"


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    problems: tuple[VerifyProblem, ...]
    pairs_checked: int


def _fmt_classes(cs: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(cs))) + "}"


def verify(
    a: AtomStructure, rep: Representation, t: SumClassTable, paranoid: bool = False
) -> VerifyReport:
    """Check partition, converse shift, and every pairwise composition.

    Problems are collected (not short-circuited) in a deterministic order:
    partition first, then converse per atom, then atom pairs
    lexicographically.  Structural mismatches raise instead.
    """
    if rep.n != t.n:
        raise StructureError(f"representation index {rep.n} does not match table index {t.n}")
    if rep.n % 2:
        raise StructureError(f"index {rep.n} must be even (converse shift is n/2)")
    if set(rep.assign) != set(a.atoms):
        raise StructureError("representation and structure name different atoms")
    n = rep.n
    h = n // 2
    for x in a.atoms:
        for c in rep.assign[x]:
            if not 0 <= c < n:
                raise StructureError(f"class {c} of atom {x} out of range [0, {n})")
    problems: list[VerifyProblem] = []

    counts = Counter(c for s in rep.assign.values() for c in s)
    dup = sorted(c for c, k in counts.items() if k > 1)
    if dup:
        problems.append(VerifyProblem("partition", (), f"classes assigned twice: {_fmt_classes(dup)}"))
    missing = sorted(set(range(n)) - set(counts))
    if missing:
        problems.append(VerifyProblem("partition", (), f"classes unassigned: {_fmt_classes(missing)}"))
    for x in a.atoms:
        if not rep.assign[x]:
            problems.append(VerifyProblem("partition", (x,), "empty class set"))

    for x in a.atoms:
        want = frozenset((c + h) % n for c in rep.assign[x])
        xc = a.converse[x]
        if rep.assign[xc] != want:
            problems.append(
                VerifyProblem(
                    "converse",
                    (x, xc),
                    f"classes of {xc} are {_fmt_classes(rep.assign[xc])}, expected {_fmt_classes(want)}",
                )
            )

    pairs = 0
    for x in a.atoms:
        for y in a.atoms:
            pairs += 1
            img, zero = image_comp_classes(rep, t, x, y)
            below, identity = expected_comp(a, x, y)
            want = frozenset(c for z in below for c in rep.assign[z])
            notes = []
            if img - want:
                notes.append(f"extra classes {_fmt_classes(img - want)}")
            if want - img:
                notes.append(f"missing classes {_fmt_classes(want - img)}")
            if zero != identity:
                notes.append(f"identity flag {identity} but zero membership {zero}")
            if notes:
                problems.append(VerifyProblem("composition", (x, y), "; ".join(notes)))

    if paranoid and not problems:
        _spot_check(rep, t)
    return VerifyReport(passed=not problems, problems=tuple(problems), pairs_checked=pairs)


def _spot_check(rep: Representation, t: SumClassTable, samples: int = 3):
    """Recompute a few explicit element sums per atom pair against the table."""
    ctx = build_context(rep.p)
    cs = build_coset_system(ctx, rep.n)
    for x in sorted(rep.assign):
        for y in sorted(rep.assign):
            img, zero = image_comp_classes(rep, t, x, y)
            for i in rep.assign[x]:
                for j in rep.assign[y]:
                    for u in cs.coset(i)[:samples]:
                        for v in cs.coset(j)[:samples]:
                            w = (u + v) % rep.p
                            if w == 0:
                                ok = zero
                            else:
                                ok = cs.class_of(w) in img
                            if not ok:
                                raise RuntimeError(
                                    f"spot check failed: {u} + {v} contradicts pair ({x}, {y})"
                                )


def parse_rep_file(text: str) -> tuple[AtomStructure, Representation]:
    """Parse the line-oriented representation format.

    Directives: modulus, index, atom, converse, forbid.  Comments start
    with '#'.  Syntax and structural rules (ranges, duplicate classes,
    converse totality) are enforced here; partition completeness and the
    converse shift are verify's job.
    """
    p = None
    n = None
    assign: dict[str, frozenset[int]] = {}
    conv_decl: dict[str, str] = {}
    forbids: list[tuple[str, str, str]] = []

    def fail(ln: int, msg: str):
        raise RepFormatError(f"line {ln}: {msg}")

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "modulus":
            if p is not None:
                fail(ln, "modulus declared twice")
            if len(tok) != 2 or not tok[1].isdigit():
                fail(ln, "expected 'modulus P'")
            p = int(tok[1])
            if not is_prime(p):
                fail(ln, f"modulus {p} is not prime")
        elif kind == "index":
            if n is not None:
                fail(ln, "index declared twice")
            if len(tok) != 2 or not tok[1].isdigit():
                fail(ln, "expected 'index N'")
            n = int(tok[1])
            if n < 2 or n % 2:
                fail(ln, f"index {n} must be even and >= 2")
            if p is None:
                fail(ln, "index declared before modulus")
            if (p - 1) % n:
                fail(ln, f"index {n} does not divide {p - 1}")
        elif kind == "atom":
            if n is None:
                fail(ln, "atom declared before index")
            if len(tok) < 3:
                fail(ln, "expected 'atom NAME CLASS...'")
            name = tok[1]
            if not (name.isascii() and name.isidentifier()):
                fail(ln, f"bad atom name {name!r}")
            if name in assign:
                fail(ln, f"atom {name} declared twice")
            classes = []
            for w in tok[2:]:
                try:
                    c = int(w)
                except ValueError:
                    fail(ln, f"bad class {w!r}")
                if not 0 <= c < n:
                    fail(ln, f"class {c} out of range [0, {n})")
                classes.append(c)
            taken = {c for s in assign.values() for c in s}
            for c in classes:
                if c in taken or classes.count(c) > 1:
                    fail(ln, f"class {c} assigned twice")
            assign[name] = frozenset(classes)
        elif kind == "converse":
            if len(tok) != 3:
                fail(ln, "expected 'converse NAME NAME'")
            x, y = tok[1], tok[2]
            for atom in (x, y):
                if atom not in assign:
                    fail(ln, f"converse names unknown atom {atom}")
            for atom, other in ((x, y), (y, x)):
                if atom in conv_decl and conv_decl[atom] != other:
                    fail(ln, f"atom {atom} has conflicting converse declarations")
            conv_decl[x] = y
            conv_decl[y] = x
        elif kind == "forbid":
            if len(tok) != 4:
                fail(ln, "expected 'forbid NAME NAME NAME'")
            for atom in tok[1:]:
                if atom not in assign:
                    fail(ln, f"forbidden cycle names unknown atom {atom}")
            forbids.append((tok[1], tok[2], tok[3]))
        else:
            fail(ln, f"unknown directive {kind!r}")

    if p is None:
        raise RepFormatError("missing modulus declaration")
    if n is None:
        raise RepFormatError("missing index declaration")
    if not assign:
        raise RepFormatError("no atom declarations")
    for name in sorted(assign):
        if name not in conv_decl:
            raise RepFormatError(f"atom {name} has no converse declaration")
    structure = AtomStructure(conv_decl, forbids)
    return structure, Representation(p=p, n=n, assign=assign)


def format_rep(a: AtomStructure, rep: Representation) -> str:
    """Render in the representation file format; parses back equal."""
    lines = [f"modulus {rep.p}", f"index {rep.n}"]
    for x in a.atoms:
        lines.append("atom " + x + " " + " ".join(map(str, sorted(rep.assign[x]))))
    done: set[str] = set()
    for x in a.atoms:
        if x not in done:
            xc = a.converse[x]
            done.update((x, xc))
            lines.append(f"converse {x} {xc}")
    seen: set[tuple[str, str, str]] = set()
    for t in sorted(a.forbidden):
        if t not in seen:
            seen.update(peircean_closure([t], a.converse))
            lines.append("forbid " + " ".join(t))
    return "\n".join(lines) + "\n"


def search_embedding(
    a: AtomStructure, p: int, m: int, v, max_width: int | None = None
) -> Representation | None:
    """Bounded search for a representation of a over a passing (p, m) system.

    Classes come in m lines {c, c+m}; a line is either owned whole by a
    symmetric atom or split across a converse pair.  Lines are assigned by
    depth-first search, widths capped and raised one at a time, options
    tried in atom order, so the first hit is the lexicographically least
    assignment of minimal width.
    """
    from comeralg.comer_checkers import check

    if not v.directed:
        raise ValueError("embedding search requires a directed variant")
    report = check(p, m, v)
    if not report.passed:
        raise ValueError(f"(p={p}, m={m}) fails the {v.value} conditions: {report.violation}")
    n = 2 * m
    ctx = build_context(p)
    cs = build_coset_system(ctx, n, require="odd-k")
    t = sum_class_table(cs)
    atoms = a.atoms
    cap = max_width if max_width is not None else n

    def attempt(width: int) -> Representation | None:
        sides: dict[str, set[int]] = {x: set() for x in atoms}

        def grown(x: str, line: int) -> bool:
            # width accounting: a symmetric atom absorbs both sides
            xc = a.converse[x]
            if x == xc:
                if len(sides[x]) + 2 > width:
                    return False
                sides[x].update((line, line + m))
            else:
                if len(sides[x]) + 1 > width or len(sides[xc]) + 1 > width:
                    return False
                sides[x].add(line)
                sides[xc].add(line + m)
            return True

        def shrink(x: str, line: int):
            xc = a.converse[x]
            if x == xc:
                sides[x].difference_update((line, line + m))
            else:
                sides[x].discard(line)
                sides[xc].discard(line + m)

        def dfs(line: int) -> Representation | None:
            if line == m:
                if any(not s for s in sides.values()):
                    return None
                rep = Representation(
                    p=p, n=n, assign={x: frozenset(s) for x, s in sides.items()}
                )
                if verify(a, rep, t).passed:
                    return rep
                return None
            for x in atoms:
                if grown(x, line):
                    hit = dfs(line + 1)
                    if hit is not None:
                        return hit
                    shrink(x, line)
            return None

        return dfs(0)

    for width in range(1, cap + 1):
        hit = attempt(width)
        if hit is not None:
            return hit
    return None
