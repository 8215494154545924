"""Command-line interface: search, check, cycles, witness, verify, embed, plotdata."""

from __future__ import annotations

import argparse
import sys
import time
from contextlib import ExitStack
from dataclasses import dataclass

from comeralg.comer_checkers import (
    CongruenceError,
    Variant,
    check,
    search_smallest,
)
from comeralg.coset_cycles import (
    InvalidIndexError,
    ParityError,
    build_coset_system,
    cycle_list,
    find_witness,
    sum_class_table,
    table_matches_oracle,
)
from comeralg.field_core import build_context
from comeralg.ra_verify import (
    RepFormatError,
    StructureError,
    format_rep,
    parse_rep_file,
    search_embedding,
    verify,
)

_VARIANTS = {v.value: v for v in Variant}


@dataclass(frozen=True)
class SearchRecord:
    variant: Variant
    m: int
    n: int
    p: int | None
    k: int | None
    primitive_root: int | None
    elapsed_ms: int | None

    def csv_row(self) -> str:
        cells = (
            self.variant.value,
            self.m,
            self.n,
            self.p,
            self.k,
            self.primitive_root,
            self.elapsed_ms,
        )
        return ",".join("" if c is None else str(c) for c in cells)


def _fmt_classes(classes) -> str:
    return "{" + ",".join(map(str, sorted(classes))) + "}"


def _open_out(stack: ExitStack, path: str):
    if path == "-":
        return sys.stdout
    return stack.enter_context(open(path, "w", newline=""))


def _search_record(v: Variant, m: int, p_max: int | None, jobs: int, timing: bool) -> SearchRecord:
    t0 = time.monotonic()
    p = search_smallest(m, v, p_max=p_max, jobs=jobs)
    ms = round((time.monotonic() - t0) * 1000) if timing else None
    n = v.cosets_for(m)
    if p is None:
        return SearchRecord(v, m, n, None, None, None, ms)
    report = check(p, m, v)
    return SearchRecord(v, m, n, p, report.k, report.g, ms)


def _cmd_search(args) -> int:
    v = _VARIANTS[args.variant]
    if args.m_min < 1 or args.m_max < args.m_min:
        raise ValueError(f"bad m range [{args.m_min}, {args.m_max}]")
    all_found = True
    with ExitStack() as stack:
        out = _open_out(stack, args.out)
        out.write("variant,m,n,p,k,g,elapsed_ms\n")
        out.flush()
        try:
            for m in range(args.m_min, args.m_max + 1):
                rec = _search_record(v, m, args.p_max, args.jobs, args.timing)
                if rec.p is None:
                    all_found = False
                out.write(rec.csv_row() + "\n")
                out.flush()
        except KeyboardInterrupt:
            out.write("# incomplete\n")
            out.flush()
            return 130
    return 0 if all_found else 1


def _cmd_plotdata(args) -> int:
    v = _VARIANTS[args.variant]
    if args.m_min < 1 or args.m_max < args.m_min:
        raise ValueError(f"bad m range [{args.m_min}, {args.m_max}]")
    all_found = True
    with ExitStack() as stack:
        out = _open_out(stack, args.out)
        out.write("m,p\n")
        out.flush()
        try:
            for m in range(args.m_min, args.m_max + 1):
                p = search_smallest(m, v, p_max=args.p_max, jobs=args.jobs)
                if p is None:
                    all_found = False
                out.write(f"{m},{'' if p is None else p}\n")
                out.flush()
        except KeyboardInterrupt:
            out.write("# incomplete\n")
            out.flush()
            return 130
    return 0 if all_found else 1


def _cmd_check(args) -> int:
    v = _VARIANTS[args.variant]
    report = check(args.p, args.m, v, paranoid=args.paranoid)
    if report.passed:
        print("pass")
        return 0
    print(f"fail: {report.violation}")
    return 1


def _cmd_cycles(args) -> int:
    ctx = build_context(args.p)
    cs = build_coset_system(ctx, args.n)
    t = sum_class_table(cs)
    print(f"p {cs.p} n {cs.n} g {ctx.g} k {cs.k} zero-shift {t.zero_shift}")
    for s in range(t.n):
        zero = " zero" if t.zero(s) else ""
        print(f"shift {s}: {_fmt_classes(t.class_set(s))}{zero}")
    if args.full:
        for i, j, l in sorted(cycle_list(t)):
            print(f"{i} {j} {l}")
    return 0


def _cmd_witness(args) -> int:
    ctx = build_context(args.p)
    cs = build_coset_system(ctx, args.n)
    w = find_witness(cs, args.kind)
    if w is None:
        print("none")
        return 1
    print(" ".join(map(str, w)))
    return 0


def _cmd_verify(args) -> int:
    with open(args.file) as fh:
        text = fh.read()
    structure, rep = parse_rep_file(text)
    ctx = build_context(rep.p)
    cs = build_coset_system(ctx, rep.n)
    t = sum_class_table(cs)
    if args.paranoid:
        bad = table_matches_oracle(cs, t)
        if bad is not None:
            raise RuntimeError(f"table/oracle mismatch at {bad}")
    report = verify(structure, rep, t, paranoid=args.paranoid)
    if report.passed:
        print(f"pass: {report.pairs_checked} atom pairs")
        return 0
    for problem in report.problems:
        print(f"fail {problem}")
    return 1


def _cmd_embed(args) -> int:
    v = _VARIANTS[args.variant]
    with open(args.file) as fh:
        text = fh.read()
    structure, _ = parse_rep_file(text)
    rep = search_embedding(structure, args.p, args.m, v, max_width=args.max_width)
    if rep is None:
        print("none")
        return 1
    sys.stdout.write(format_rep(structure, rep))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comeralg",
        description="Search prime fields for Ramsey-type coset partitions "
        "and verify relation-algebra representations built from them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_variant(sp):
        sp.add_argument("--variant", required=True, choices=sorted(_VARIANTS))

    sp = sub.add_parser("search", help="smallest passing prime per m, CSV output")
    add_variant(sp)
    sp.add_argument("--m-min", type=int, required=True)
    sp.add_argument("--m-max", type=int, required=True)
    sp.add_argument("--p-max", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", required=True, help="output file, or - for stdout")
    sp.add_argument("--timing", action="store_true", help="fill elapsed_ms (breaks byte-reproducibility)")
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("check", help="test one (p, m) against a variant")
    add_variant(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--paranoid", action="store_true", help="cross-check the table by brute force")
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("cycles", help="dump the sumset class table for (p, n)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--full", action="store_true", help="also list all (i, j, l) triples")
    sp.set_defaults(func=_cmd_cycles)

    sp = sub.add_parser("witness", help="least X_0 solution of x+y=z or x+y=-z")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", required=True, choices=("sum", "antisum"))
    sp.set_defaults(func=_cmd_witness)

    sp = sub.add_parser("verify", help="verify a representation file")
    sp.add_argument("--file", required=True)
    sp.add_argument("--paranoid", action="store_true", help="extra brute-force cross-checks")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("embed", help="search coset assignments realizing a structure")
    sp.add_argument("--file", required=True, help="representation file supplying the atom structure")
    add_variant(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-width", type=int, default=None)
    sp.set_defaults(func=_cmd_embed)

    sp = sub.add_parser("plotdata", help="CSV of smallest moduli over an m range")
    add_variant(sp)
    sp.add_argument("--m-min", type=int, required=True)
    sp.add_argument("--m-max", type=int, required=True)
    sp.add_argument("--p-max", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", required=True, help="output file, or - for stdout")
    sp.set_defaults(func=_cmd_plotdata)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except KeyboardInterrupt:
        return 130
    except (
        CongruenceError,
        InvalidIndexError,
        ParityError,
        RepFormatError,
        StructureError,
        FileNotFoundError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
