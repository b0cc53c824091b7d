"""Plain-text, line-oriented file formats for designs and parallelisms.

Design file (``qsteiner-design v1``)::

    qsteiner-design v1
    q=2 t=2 k=3 n=7 m=4
    block 1 0 -
    block 4 2 1000;0100
    ...

One line per distinct block: multiplicity, dimension, then the RREF
basis rows joined by ";".  A row is written as m field-element digits,
contiguous for q <= 9 and space-separated for larger q.  The dimension-0
block is written with "-" in place of rows.  Blocks are sorted in
canonical subspace order (dimension, then row-major lexicographic), so
serialization is deterministic and diffable.

Parallelism file (``qsteiner-parallelism v1``)::

    qsteiner-parallelism v1
    q=2 n=4
    spread
    1000;0100
    ...

Each ``spread`` marker starts a spread; each following line is one
2-subspace in the block row syntax.  Files are verified on load.
"""

from __future__ import annotations

from .designs import DesignMultiset, DesignParams, Parallelism, Spread
from .field import make_field
from .subspaces import Subspace, rref

DESIGN_HEADER = "qsteiner-design v1"
PARALLELISM_HEADER = "qsteiner-parallelism v1"


def _format_row(row: tuple, q: int) -> str:
    if q <= 9:
        return "".join(str(x) for x in row)
    return " ".join(str(x) for x in row)


def _parse_row(text: str, q: int, m: int) -> tuple:
    if q <= 9:
        digits = [int(ch) for ch in text]
    else:
        digits = [int(tok) for tok in text.split()]
    if len(digits) != m:
        raise ValueError(f"row {text!r} does not have {m} coordinates")
    if any(not 0 <= d < q for d in digits):
        raise ValueError(f"row {text!r} has elements outside F_{q}")
    return tuple(digits)


def format_block_rows(block: Subspace) -> str:
    """The ``row;row;...`` rendering of a block ('-' for dimension 0)."""
    if block.dim == 0:
        return "-"
    return ";".join(_format_row(r, block.field.q) for r in block.rows)


def _parse_block_rows(text: str, q: int, m: int, dim: int) -> Subspace:
    field = make_field(q)
    if text == "-":
        if dim != 0:
            raise ValueError("'-' rows are only valid for dimension 0")
        return Subspace(field, m, (), ())
    rows = tuple(_parse_row(part, q, m) for part in text.split(";"))
    if len(rows) != dim:
        raise ValueError(f"block says dimension {dim} but has {len(rows)} rows")
    sub = _rref_checked(field, rows, m)
    return sub


def _rref_checked(field, rows: tuple, m: int) -> Subspace:
    """Reject rows that are not already a canonical RREF basis."""
    sub = rref(field, rows)
    if sub.rows != rows:
        raise ValueError(f"rows {rows} are not in reduced row echelon form")
    return sub


def serialize_design(design: DesignMultiset) -> str:
    p = design.params
    lines = [DESIGN_HEADER,
             f"q={p.q} t={p.t} k={p.k} n={p.n} m={p.m}"]
    for block in sorted(design.blocks, key=lambda b: b.sort_key()):
        lines.append(f"block {design.blocks[block]} {block.dim} "
                     f"{format_block_rows(block)}")
    return "\n".join(lines) + "\n"


def parse_design(text: str) -> DesignMultiset:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != DESIGN_HEADER:
        raise ValueError(f"missing header {DESIGN_HEADER!r}")
    try:
        fields = dict(tok.split("=") for tok in lines[1].split())
        params = DesignParams(*(int(fields[name]) for name in "qtknm"))
    except (KeyError, IndexError, ValueError) as exc:
        raise ValueError(f"bad parameter line {lines[1]!r}") from exc
    blocks: dict = {}
    for ln in lines[2:]:
        parts = ln.split(maxsplit=3)
        if len(parts) != 4 or parts[0] != "block":
            raise ValueError(f"bad block line {ln!r}")
        mult, dim = int(parts[1]), int(parts[2])
        if mult < 1:
            raise ValueError(f"multiplicity must be positive in {ln!r}")
        block = _parse_block_rows(parts[3], params.q, params.m, dim)
        if block in blocks:
            raise ValueError(f"duplicate block line for {parts[3]!r}")
        blocks[block] = mult
    return DesignMultiset(params, blocks)


def write_design(design: DesignMultiset, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_design(design))


def parse_design_file(path) -> DesignMultiset:
    with open(path, encoding="ascii") as fh:
        return parse_design(fh.read())


def serialize_parallelism(para: Parallelism) -> str:
    q = para.field.q
    lines = [PARALLELISM_HEADER, f"q={q} n={para.n}"]
    for sp in para.spreads:
        lines.append("spread")
        for line in sp.lines:
            lines.append(";".join(_format_row(r, q) for r in line.rows))
    return "\n".join(lines) + "\n"


def parse_parallelism(text: str) -> Parallelism:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != PARALLELISM_HEADER:
        raise ValueError(f"missing header {PARALLELISM_HEADER!r}")
    try:
        fields = dict(tok.split("=") for tok in lines[1].split())
        q, n = int(fields["q"]), int(fields["n"])
    except (KeyError, IndexError, ValueError) as exc:
        raise ValueError(f"bad parameter line {lines[1]!r}") from exc
    field = make_field(q)
    groups: list = []
    for ln in lines[2:]:
        if ln == "spread":
            groups.append([])
            continue
        if not groups:
            raise ValueError("line outside any spread section")
        rows = tuple(_parse_row(part, q, n) for part in ln.split(";"))
        groups.append(groups.pop() + [_rref_checked(field, rows, n)])
    spreads = tuple(Spread(field, n, tuple(sorted(g, key=lambda s: s.rows)))
                    for g in groups)
    return Parallelism(field, n, tuple(sorted(
        spreads, key=lambda sp: tuple(l.rows for l in sp.lines))))


def write_parallelism(para: Parallelism, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_parallelism(para))


def parse_parallelism_file(path) -> Parallelism:
    with open(path, encoding="ascii") as fh:
        return parse_parallelism(fh.read())


def packaged_parallelism_path(q: int, n: int):
    """Path of a parallelism shipped with the package, or None.

    The package carries verified parallelisms of F_2^6 and F_3^4, whose
    construction is out of reach of the bundled backtracking search.
    """
    from importlib.resources import files as resource_files
    candidate = resource_files("qsteiner") / "data" / f"parallelism-q{q}-n{n}.txt"
    return candidate if candidate.is_file() else None
