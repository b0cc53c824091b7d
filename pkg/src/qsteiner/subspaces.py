"""Canonical subspaces of F_q^m and the puncture/extend/expand calculus.

A subspace is stored by its generator matrix in reduced row echelon form
(RREF), which is unique per subspace, so equality of spans is equality
of the stored rows.  Vectors are tuples of field-element codes; the
integer encoding of a vector v is ``sum(v[j] * q**j)`` (leftmost
coordinate is the least significant digit).

Puncturing always removes the last coordinate(s).  Deleting the last
column of an RREF matrix leaves an RREF matrix: row pivots can only sit
in the deleted column for the final row (pivot columns are strictly
increasing), and that row then becomes zero and is dropped.  This makes
puncturing a pure slicing operation, no elimination needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .field import GF, make_field


class Subspace:
    """A d-dimensional subspace of F_q^m in canonical RREF form.

    The null subspace (d = 0) is represented by an empty row tuple.
    Instances are immutable and hashable; two subspaces compare equal
    iff they are the same set of vectors.
    """

    __slots__ = ("field", "ambient", "rows", "pivots", "_hash")

    def __init__(self, field: GF, ambient: int, rows: tuple, pivots: tuple) -> None:
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots
        self._hash = hash((field.q, ambient, rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.field.q == other.field.q
                and self.ambient == other.ambient
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ";".join("".join(map(str, r)) for r in self.rows) or "-"
        return f"Subspace(q={self.field.q}, m={self.ambient}, [{body}])"

    def sort_key(self) -> tuple:
        """Canonical order: dimension, then row-major lexicographic."""
        return (self.dim, self.rows)

    def vectors(self) -> Iterator[tuple]:
        """All q^d vectors of the subspace (zero vector included)."""
        f, m = self.field, self.ambient
        for coeffs in itertools.product(range(f.q), repeat=self.dim):
            yield _combine(f, m, coeffs, self.rows)

    def nonzero_vectors_sorted(self) -> list:
        """Nonzero vectors in ascending integer-encoding order."""
        q = self.field.q
        out = [v for v in self.vectors() if any(v)]
        out.sort(key=lambda v: vector_code(v, q))
        return out


def vector_code(v: tuple, q: int) -> int:
    """Integer encoding of a vector: coordinate j has place value q^j."""
    c = 0
    for x in reversed(v):
        c = c * q + x
    return c


def vector_from_code(code: int, q: int, m: int) -> tuple:
    out = []
    for _ in range(m):
        out.append(code % q)
        code //= q
    return tuple(out)


def _combine(field: GF, m: int, coeffs: tuple, rows: tuple) -> tuple:
    """Linear combination sum(coeffs[i] * rows[i]) over F_q."""
    add, mul = field.add_table, field.mul_table
    acc = [0] * m
    for c, row in zip(coeffs, rows):
        if c == 0:
            continue
        if c == 1:
            for j, x in enumerate(row):
                if x:
                    acc[j] = add[acc[j]][x]
        else:
            mc = mul[c]
            for j, x in enumerate(row):
                if x:
                    acc[j] = add[acc[j]][mc[x]]
    return tuple(acc)


def null_subspace(field: GF, m: int) -> Subspace:
    return Subspace(field, m, (), ())


def rref(field: GF, vectors: Iterable[tuple]) -> Subspace:
    """Canonicalize the span of the given vectors into a Subspace.

    All vectors must share one length (the ambient dimension);
    raises ValueError on a length mismatch or an empty vector list
    (the ambient dimension would be unknown).
    """
    vecs = [list(v) for v in vectors]
    if not vecs:
        raise ValueError("cannot infer ambient dimension from no vectors")
    m = len(vecs[0])
    if any(len(v) != m for v in vecs):
        raise ValueError("vectors of unequal length")
    sub, mul = field.sub_table, field.mul_table
    pivots = []
    rank = 0
    for col in range(m):
        pr = next((i for i in range(rank, len(vecs)) if vecs[i][col]), None)
        if pr is None:
            continue
        vecs[rank], vecs[pr] = vecs[pr], vecs[rank]
        lead = vecs[rank][col]
        if lead != 1:
            inv = field.inv_table[lead]
            mi = mul[inv]
            vecs[rank] = [mi[x] for x in vecs[rank]]
        prow = vecs[rank]
        for i in range(len(vecs)):
            if i != rank and vecs[i][col]:
                c = vecs[i][col]
                mc = mul[c]
                row = vecs[i]
                vecs[i] = [sub[x][mc[y]] for x, y in zip(row, prow)]
        pivots.append(col)
        rank += 1
        if rank == len(vecs):
            break
    return Subspace(field, m, tuple(tuple(vecs[i]) for i in range(rank)),
                    tuple(pivots))


def _iter_grassmannian(field: GF, m: int, d: int) -> Iterator[Subspace]:
    """All d-subspaces of F_q^m, unspecified (but deterministic) order.

    RREF matrices are produced directly from their pivot-column
    parametrization, so no elimination is performed.
    """
    if d == 0:
        yield null_subspace(field, m)
        return
    q = field.q
    for pivots in itertools.combinations(range(m), d):
        pivotset = set(pivots)
        base = []
        for p in pivots:
            row = [0] * m
            row[p] = 1
            base.append(row)
        slots = [(i, c)
                 for i in range(d)
                 for c in range(pivots[i] + 1, m) if c not in pivotset]
        if not slots:
            yield Subspace(field, m, tuple(tuple(r) for r in base), pivots)
            continue
        for vals in itertools.product(range(q), repeat=len(slots)):
            rows = [r[:] for r in base]
            for (i, c), v in zip(slots, vals):
                rows[i][c] = v
            yield Subspace(field, m, tuple(tuple(r) for r in rows), pivots)


def enumerate_subspaces(field: GF, m: int, d: int) -> Iterator[Subspace]:
    """Yield each d-subspace of F_q^m exactly once, lexicographically.

    The order is lexicographic on the RREF matrix read row-major with
    elements as integers; the full Grassmannian is materialized and
    sorted to realize it.
    """
    if not 0 <= d <= m:
        raise ValueError(f"dimension {d} out of range for ambient {m}")
    subs = list(_iter_grassmannian(field, m, d))
    subs.sort(key=lambda s: s.rows)
    return iter(subs)


def first_subspace(field: GF, m: int, d: int) -> Subspace:
    """The first d-subspace in enumeration order: span of the last d
    unit vectors."""
    if not 0 <= d <= m:
        raise ValueError(f"dimension {d} out of range for ambient {m}")
    pivots = tuple(range(m - d, m))
    rows = []
    for p in pivots:
        row = [0] * m
        row[p] = 1
        rows.append(tuple(row))
    return Subspace(field, m, tuple(rows), pivots)


def contains(outer: Subspace, inner: Subspace) -> bool:
    """True iff every vector of ``inner`` lies in ``outer``."""
    if outer.field.q != inner.field.q or outer.ambient != inner.ambient:
        raise ValueError("ambient space mismatch")
    if inner.dim > outer.dim:
        return False
    f = outer.field
    sub, mul = f.sub_table, f.mul_table
    orows, opivots = outer.rows, outer.pivots
    for x in inner.rows:
        x = list(x)
        for i, pc in enumerate(opivots):
            c = x[pc]
            if c:
                mc = mul[c]
                orow = orows[i]
                for j in range(pc, len(x)):
                    if orow[j]:
                        x[j] = sub[x[j]][mc[orow[j]]]
        if any(x):
            return False
    return True


def puncture(x: Subspace, p: int = 1) -> Subspace:
    """Delete the last p coordinates of every vector of x.

    A single puncture keeps or lowers the dimension by one; the result
    stays canonical because RREF survives last-column deletion.
    """
    if not 0 <= p <= x.ambient:
        raise ValueError(f"puncture count {p} out of range for ambient {x.ambient}")
    rows = list(x.rows)
    pivots = list(x.pivots)
    m = x.ambient
    for _ in range(p):
        m -= 1
        if pivots and pivots[-1] == m:
            rows.pop()
            pivots.pop()
        rows = [r[:-1] for r in rows]
    return Subspace(x.field, m, tuple(rows), tuple(pivots))


def extensions_same_dim(x: Subspace) -> list:
    """The q^t distinct t-subspaces of F_q^{m+1} puncturing back to x.

    Each extension appends one column whose entries on the basis rows
    sweep all of F_q^t.
    """
    q = x.field.q
    out = []
    for extra in itertools.product(range(q), repeat=x.dim):
        rows = tuple(row + (e,) for row, e in zip(x.rows, extra))
        out.append(Subspace(x.field, x.ambient + 1, rows, x.pivots))
    return out


def extension_raise_dim(x: Subspace) -> Subspace:
    """The unique (t+1)-subspace of F_q^{m+1} puncturing back to x."""
    m = x.ambient
    rows = tuple(row + (0,) for row in x.rows) + ((0,) * m + (1,),)
    return Subspace(x.field, m + 1, rows, x.pivots + (m,))


def enumerate_extensions(x: Subspace, t_target: int, n_target: int) -> Iterator[Subspace]:
    """All t_target-subspaces of F_q^{n_target} puncturing to x.

    Generated from the block RREF structure [[G1 B], [0 G2]]: G2 runs
    over the (t-s)-subspaces of the appended coordinates and B is free
    outside G2's pivot columns.
    """
    s, m = x.dim, x.ambient
    p = n_target - m
    if s > t_target:
        raise ValueError("target dimension below current dimension")
    if p <= 0:
        raise ValueError("target ambient must exceed current ambient")
    if t_target - s > p:
        raise ValueError("not enough new coordinates to raise the dimension")
    q = x.field.q
    field = x.field
    for g2 in enumerate_subspaces(field, p, t_target - s):
        g2piv = set(g2.pivots)
        free_cols = [c for c in range(p) if c not in g2piv]
        bottom = tuple((0,) * m + row for row in g2.rows)
        new_pivots = x.pivots + tuple(m + c for c in g2.pivots)
        for vals in itertools.product(range(q), repeat=len(free_cols) * s):
            it = iter(vals)
            top = []
            for i in range(s):
                suffix = [0] * p
                for c in free_cols:
                    suffix[c] = next(it)
                top.append(x.rows[i] + tuple(suffix))
            yield Subspace(field, n_target, tuple(top) + bottom, new_pivots)


@dataclass(frozen=True)
class VirtualExpansion:
    """The (q^k - 1) x m row list recording a punctured k-subspace.

    Rows are q^{k-d} stacked copies of the nonzero vectors of the
    underlying d-subspace (in ascending integer-encoding order) followed
    by q^{k-d} - 1 zero rows.
    """

    field: GF
    ambient: int
    k: int
    rows: tuple

    def underlying(self) -> Subspace:
        """The punctured subspace: distinct nonzero rows plus zero."""
        distinct = {r for r in self.rows if any(r)}
        if not distinct:
            return null_subspace(self.field, self.ambient)
        return rref(self.field, sorted(distinct))


def expand(x: Subspace, k: int) -> VirtualExpansion:
    """The k-expansion of x (its virtual k-subspace representation)."""
    d = x.dim
    if d > k:
        raise ValueError(f"cannot expand a {d}-subspace to dimension {k} < {d}")
    q = x.field.q
    copies = q ** (k - d)
    nonzero = x.nonzero_vectors_sorted()
    zero = (0,) * x.ambient
    rows = tuple(nonzero) * copies + (zero,) * (copies - 1)
    return VirtualExpansion(x.field, x.ambient, k, rows)


@lru_cache(maxsize=None)
def _coefficient_bases(q: int, d: int, s: int) -> tuple:
    """Sorted RREF bases of the s-subspaces of F_q^d (coefficient space)."""
    field = make_field(q)
    return tuple(enumerate_subspaces(field, d, s))


def subspaces_within(y: Subspace, s: int) -> Iterator[Subspace]:
    """All s-subspaces of the subspace y, each in canonical form.

    If C is an RREF coefficient matrix and Y is an RREF basis, the
    product C*Y is again RREF (read the entries at Y's pivot columns),
    so images need no re-canonicalization.
    """
    d = y.dim
    if s > d:
        return
    if s == d:
        yield y
        return
    f, m = y.field, y.ambient
    if s == 0:
        yield null_subspace(f, m)
        return
    yrows = y.rows
    ypiv = y.pivots
    for c in _coefficient_bases(f.q, d, s):
        rows = tuple(_combine(f, m, crow, yrows) for crow in c.rows)
        pivots = tuple(ypiv[cp] for cp in c.pivots)
        yield Subspace(f, m, rows, pivots)
