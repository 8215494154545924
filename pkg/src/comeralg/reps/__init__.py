"""Bundled representation files for small finite relation algebras.

Names follow the catalog numbering (algebra_tablesize).  1313_1316 ships
twice: the published class ranges (which leave a class unassigned and
must fail verification) and the corrected assignment.
"""

from importlib import resources


def available() -> list[str]:
    out = []
    for entry in resources.files(__package__).iterdir():
        if entry.name.endswith(".rep"):
            out.append(entry.name[: -len(".rep")])
    return sorted(out)


def rep_text(name: str) -> str:
    res = resources.files(__package__).joinpath(name + ".rep")
    if not res.is_file():
        raise KeyError(f"no bundled representation {name!r}; have {available()}")
    return res.read_text()
