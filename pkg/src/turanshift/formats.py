"""Plain-text hypergraph files.

::

    # optional comments
    n=5 k=2
    1 2
    2 3
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import Family

_HEADER = re.compile(r"^n=(\d+)\s+k=(\d+)$")


class FormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_family(text: str) -> Family:
    header = None
    members = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise FormatError(lineno, f"expected header 'n=<int> k=<int>', got {line!r}")
            header = int(m.group(1)), int(m.group(2))
            continue
        try:
            vs = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(lineno, f"non-integer token in {line!r}") from None
        n, k = header
        if len(vs) != k:
            raise FormatError(lineno, f"expected {k} vertices, got {len(vs)}")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise FormatError(lineno, "vertices must be strictly increasing")
        if vs[0] < 1 or vs[-1] > n:
            raise FormatError(lineno, f"vertex outside [1, {n}]")
        members.append(vs)
    if header is None:
        raise FormatError(0, "missing 'n=<int> k=<int>' header")
    return Family(header[0], header[1], members)


def format_family(family: Family) -> str:
    lines = [f"n={family.n} k={family.k}"]
    lines += [" ".join(map(str, s)) for s in family]
    return "\n".join(lines) + "\n"


def read_family(path: str | Path) -> Family:
    return parse_family(Path(path).read_text())


def write_family(family: Family, path: str | Path) -> None:
    Path(path).write_text(format_family(family))
