"""Timing comparison: pure-Python kernels vs the compiled extension.

Run as `python benchmarks/bench_kernels.py [--scale {small,large}]`.
Imports both kernel modules directly, so it works regardless of which
backend the package selected at import time.
"""

from __future__ import annotations

import argparse
import time

from comeralg import _pykernels

try:
    from comeralg import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat=3):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times) * 1000.0, out


def run(scale: str):
    if scale == "large":
        p_log, p_pairs, n = 999983, 4231, 6
    else:
        p_log, p_pairs, n = 99991, 997, 4

    from comeralg.field_core import build_context

    ctx = build_context(p_log)
    ctx_pairs = build_context(p_pairs)

    rows = []

    def add(name, pure_fn, c_fn):
        pure_ms, pure_out = best_of(pure_fn)
        if _ckernels is None:
            rows.append((name, pure_ms, None, pure_out, None))
            return
        c_ms, c_out = best_of(c_fn)
        rows.append((name, pure_ms, c_ms, pure_out, c_out))

    add(
        f"log_table(p={p_log})",
        lambda: _pykernels.log_table(p_log, ctx.g),
        lambda: _ckernels.log_table(p_log, ctx.g),
    )
    add(
        f"shift_class_masks(p={p_log}, n=62)",
        lambda: _pykernels.shift_class_masks(ctx.log, p_log, 62),
        lambda: _ckernels.shift_class_masks(ctx.log, p_log, 62),
    )
    masks, zs = _pykernels.shift_class_masks(ctx_pairs.log, p_pairs, n)
    add(
        f"check_table_all_pairs(p={p_pairs}, n={n})",
        lambda: _pykernels.check_table_all_pairs(ctx_pairs.log, p_pairs, n, masks, zs),
        lambda: _ckernels.check_table_all_pairs(ctx_pairs.log, p_pairs, n, masks, zs),
    )

    print(f"{'kernel':44s} {'pure ms':>10s} {'c ms':>10s} {'speedup':>8s}")
    for name, pure_ms, c_ms, pure_out, c_out in rows:
        if c_ms is None:
            print(f"{name:44s} {pure_ms:10.2f} {'n/a':>10s} {'n/a':>8s}")
        else:
            same = "" if _agrees(pure_out, c_out) else "  RESULTS DISAGREE"
            print(f"{name:44s} {pure_ms:10.2f} {c_ms:10.2f} {pure_ms / c_ms:7.1f}x{same}")
    if _ckernels is None:
        print("compiled extension not available; showing pure timings only")


def _agrees(a, b):
    if isinstance(a, tuple) and isinstance(b, tuple):
        return all(_agrees(x, y) for x, y in zip(a, b))
    if hasattr(a, "tolist") or hasattr(b, "tolist"):
        return list(a) == list(b)
    return a == b


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--scale", choices=("small", "large"), default="small")
    run(ap.parse_args().scale)
