"""Punctured q-Steiner systems: the design multiset type, the streaming
verifier, puncturing, spreads/parallelisms, and the explicit and
recursive constructions.

A p-punctured q-Steiner system S_q(t,k,n;m), m = n-p, is a multiset of
subspaces of F_q^m.  Its checkable content is one counting equation per
s-subspace X of F_q^m (max{0,t-p} <= s <= min{t,m}): the blocks
containing X, weighted by multiplicity times the expansion-covering
count, must account for every t-subspace of F_q^n extending X.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass
from typing import Iterable

from .counting import count_N, covering_coefficient, gaussian
from .field import GF, make_field
from .subspaces import (Subspace, enumerate_subspaces,
                        extension_raise_dim, extensions_same_dim,
                        null_subspace, puncture, rref, subspaces_within,
                        vector_code, vector_from_code)


class ConstructionError(RuntimeError):
    """A construction produced a multiset that fails verification."""


class SearchExhausted(RuntimeError):
    """Backtracking ran out of its node budget without a result."""


@dataclass(frozen=True)
class DesignParams:
    """Parameters (q, t, k, n, m) of a punctured system S_q(t,k,n;m)."""

    q: int
    t: int
    k: int
    n: int
    m: int

    def __post_init__(self) -> None:
        # k = n is the trivial Steiner system; its punctures are legal designs.
        if not 0 < self.t < self.k <= self.n:
            raise ValueError(f"need 0 < t < k <= n, got {self}")
        if not 1 <= self.m < self.n:
            raise ValueError(f"need 1 <= m < n, got {self}")

    @property
    def p(self) -> int:
        return self.n - self.m

    def s_range(self) -> range:
        """Dimensions of subspaces to be covered."""
        return range(max(0, self.t - self.p), min(self.t, self.m) + 1)

    def r_range(self) -> range:
        """Legal block dimensions."""
        return range(max(0, self.k - self.p), min(self.k, self.m) + 1)

    def block_budget(self) -> int:
        """Total multiplicity any valid design must have."""
        return gaussian(self.n, self.t, self.q) // gaussian(self.k, self.t, self.q)


class DesignMultiset:
    """A multiset of subspaces of F_q^m with parameters (q,t,k,n,m).

    ``blocks`` maps each distinct canonical subspace to its positive
    multiplicity; absent means multiplicity zero.
    """

    __slots__ = ("params", "blocks")

    def __init__(self, params: DesignParams, blocks: dict) -> None:
        for b, mult in blocks.items():
            if not isinstance(mult, int) or mult < 1:
                raise ValueError(f"multiplicity of {b!r} must be a positive integer")
            if b.field.q != params.q or b.ambient != params.m:
                raise ValueError(f"block {b!r} does not live in F_{params.q}^{params.m}")
        self.params = params
        self.blocks = dict(blocks)

    def total_multiplicity(self) -> int:
        return sum(self.blocks.values())

    def dimension_totals(self) -> dict:
        out: dict = {}
        for b, mult in self.blocks.items():
            out[b.dim] = out.get(b.dim, 0) + mult
        return out

    def with_block_multiplicity(self, block: Subspace, mult: int) -> "DesignMultiset":
        """Copy with one multiplicity replaced (0 removes the block)."""
        blocks = dict(self.blocks)
        if mult == 0:
            blocks.pop(block, None)
        else:
            blocks[block] = mult
        return DesignMultiset(self.params, blocks)

    def __eq__(self, other) -> bool:
        return (isinstance(other, DesignMultiset)
                and self.params == other.params and self.blocks == other.blocks)

    def __repr__(self) -> str:
        p = self.params
        return (f"DesignMultiset(S_{p.q}({p.t},{p.k},{p.n};{p.m}), "
                f"{len(self.blocks)} distinct blocks, total {self.total_multiplicity()})")


@dataclass(frozen=True)
class EquationViolation:
    s: int
    subject: Subspace
    got: object
    expected: object


@dataclass(frozen=True)
class VerificationReport:
    """Per-equation outcome of checking a design against its counting
    equations."""

    ok: bool
    equations_checked: int
    violations: tuple
    block_dim_violations: tuple
    total_multiplicity: int
    residuals: tuple | None = None

    def first_violation(self):
        return self.violations[0] if self.violations else None


def _chunks(items: list, jobs: int) -> list:
    jobs = max(1, jobs)
    size = (len(items) + jobs - 1) // jobs if items else 1
    return [items[i:i + size] for i in range(0, len(items), size)] or [[]]


def verify(design: DesignMultiset, jobs: int = 1) -> VerificationReport:
    """Check every covering equation of the design, streaming.

    For each s in the covered range and each s-subspace X of F_q^m the
    accumulated sum over blocks Y >= X of mult(Y) * C-coefficient must
    equal N_{(s,m),(t,n)}.  Equations are never materialized as a
    matrix; block contributions are accumulated per chunk (the chunking
    only partitions work, results are independent of it).
    """
    pr = design.params
    q, t, k, n, m = pr.q, pr.t, pr.k, pr.n, pr.m
    field = make_field(q)
    r_rng = pr.r_range()
    bad_dims = tuple((b, b.dim) for b in design.blocks
                     if b.dim not in r_rng)
    items = list(design.blocks.items())
    violations = []
    residuals = []
    for s in pr.s_range():
        expected = count_N(s, m, t, n, q)
        acc: dict = {}
        for chunk in _chunks(items, jobs):
            part: dict = {}
            for y, mult in chunk:
                coeff = covering_coefficient(s, t, y.dim, k, q)
                if coeff == 0:
                    continue
                w = mult * coeff
                for x in subspaces_within(y, s):
                    part[x] = part.get(x, 0) + w
            for x, w in part.items():
                acc[x] = acc.get(x, 0) + w
        for x in enumerate_subspaces(field, m, s):
            got = acc.get(x, 0)
            residuals.append(got - expected)
            if got != expected:
                violations.append(EquationViolation(s, x, got, expected))
    ok = not violations and not bad_dims
    return VerificationReport(ok, len(residuals), tuple(violations), bad_dims,
                              design.total_multiplicity(),
                              residuals=tuple(residuals))


def puncture_design(design: DesignMultiset) -> DesignMultiset:
    """Puncture every block once; multiplicities of colliding images add up."""
    pr = design.params
    if pr.m < 2:
        raise ValueError("cannot puncture a design below ambient dimension 1")
    new_params = DesignParams(pr.q, pr.t, pr.k, pr.n, pr.m - 1)
    blocks: dict = {}
    for b, mult in design.blocks.items():
        img = puncture(b, 1)
        blocks[img] = blocks.get(img, 0) + mult
    return DesignMultiset(new_params, blocks)


def distinctness_check(design: DesignMultiset) -> bool:
    """True iff every block appears exactly once."""
    return all(mult == 1 for mult in design.blocks.values())


# ---------------------------------------------------------------------------
# q-Steiner systems, spreads, parallelisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SteinerSystem:
    """A q-Steiner system S_q(t,k,n): every t-subspace of F_q^n lies in
    exactly one block."""

    field: GF
    t: int
    k: int
    n: int
    blocks: tuple

    def __post_init__(self) -> None:
        if not 0 <= self.t <= self.k <= self.n:
            raise ValueError(f"need 0 <= t <= k <= n, got t={self.t}, k={self.k}, n={self.n}")
        for b in self.blocks:
            if b.dim != self.k or b.ambient != self.n or b.field.q != self.field.q:
                raise ValueError(f"block {b!r} is not a {self.k}-subspace of F^{self.n}")


def steiner_coverage(system: SteinerSystem) -> dict:
    """Multiplicity with which each t-subspace is covered by the blocks."""
    cov: dict = {}
    for b in system.blocks:
        for x in subspaces_within(b, system.t):
            cov[x] = cov.get(x, 0) + 1
    return cov


def verify_steiner(system: SteinerSystem) -> bool:
    """Every t-subspace of the ambient space covered exactly once."""
    cov = steiner_coverage(system)
    if len(set(system.blocks)) != len(system.blocks):
        return False
    total = gaussian(system.n, system.t, system.field.q)
    return len(cov) == total and all(c == 1 for c in cov.values())


def trivial_steiner(q: int, t: int, n: int) -> SteinerSystem:
    """S_q(t,n,n): the whole space as the single block."""
    field = make_field(q)
    whole = rref(field, [tuple(1 if j == i else 0 for j in range(n))
                         for i in range(n)])
    return SteinerSystem(field, t, n, n, (whole,))


def puncture_steiner(system: SteinerSystem) -> tuple:
    """Puncture a verified Steiner system once.

    Returns the full punctured multiset (an S_q(t,k,n;n-1)) together
    with the extracted (k-1)-dimensional part, which is checked to be a
    q-Steiner system S_q(t-1,k-1,n-1).  Every t-subspace of F_q^{n-1}
    covered by that part must be absent from the k-dimensional images,
    and every other t-subspace must appear exactly q^t times in them.
    """
    if not verify_steiner(system):
        raise ValueError("input is not a valid q-Steiner system")
    q, t, k, n = system.field.q, system.t, system.k, system.n
    field = system.field
    blocks: dict = {}
    for b in system.blocks:
        img = puncture(b, 1)
        blocks[img] = blocks.get(img, 0) + 1
    design = DesignMultiset(DesignParams(q, t, k, n, n - 1), blocks)

    lower = tuple(sorted((b for b in blocks if b.dim == k - 1),
                         key=lambda s: s.rows))
    for b in lower:
        if blocks[b] != 1:
            raise ConstructionError(f"repeated (k-1)-image {b!r}")
    sub_system = SteinerSystem(field, t - 1, k - 1, n - 1, lower)
    if not verify_steiner(sub_system):
        raise ConstructionError("(k-1)-images do not form the derived Steiner system")

    covered_by_lower = set()
    for b in lower:
        for x in subspaces_within(b, t):
            covered_by_lower.add(x)
    upper_cov: dict = {}
    for b, mult in blocks.items():
        if b.dim != k:
            continue
        for x in subspaces_within(b, t):
            upper_cov[x] = upper_cov.get(x, 0) + mult
    for x in enumerate_subspaces(field, n - 1, t):
        want = 0 if x in covered_by_lower else q ** t
        if upper_cov.get(x, 0) != want:
            raise ConstructionError(
                f"t-subspace {x!r} appears {upper_cov.get(x, 0)} times, expected {want}")
    return design, sub_system


@dataclass(frozen=True)
class Spread:
    """A partition of the nonzero vectors of F_q^n into 2-subspaces."""

    field: GF
    n: int
    lines: tuple

    def __post_init__(self) -> None:
        q = self.field.q
        covered = set()
        for line in self.lines:
            if line.dim != 2 or line.ambient != self.n:
                raise ValueError(f"{line!r} is not a 2-subspace of F^{self.n}")
            for v in line.vectors():
                if any(v):
                    if v in covered:
                        raise ValueError(f"vector {v} covered twice")
                    covered.add(v)
        if len(covered) != q ** self.n - 1:
            raise ValueError("lines do not cover every nonzero vector")

    def to_steiner(self) -> SteinerSystem:
        return SteinerSystem(self.field, 1, 2, self.n, self.lines)


def build_spread(q: int, n: int) -> Spread:
    """The field-extension spread: F_q^n read as an (n/2)-dimensional
    space over F_{q^2}, whose 1-dimensional subspaces are the lines.

    Consecutive coordinate pairs (a, b) encode the element a + b*x of
    F_{q^2}; supported for prime q with q^2 a supported field order.
    """
    if n % 2 or n < 2:
        raise ValueError("spread needs an even ambient dimension >= 2")
    if q not in (2, 3):
        raise ValueError("field-extension spread implemented for q in {2, 3}")
    field = make_field(q)
    ext = make_field(q * q)
    half = n // 2
    root = q  # code of the element x
    lines = set()
    for code in range(1, q ** n):
        v = vector_from_code(code, q, n)
        w = tuple(v[2 * i] + q * v[2 * i + 1] for i in range(half))
        xw = tuple(ext.mul_table[root][c] for c in w)
        u = []
        for c in xw:
            u.extend((c % q, c // q))
        lines.add(rref(field, [v, tuple(u)]))
    return Spread(field, n, tuple(sorted(lines, key=lambda s: s.rows)))


@dataclass(frozen=True)
class Parallelism:
    """A partition of all 2-subspaces of F_q^n into disjoint spreads."""

    field: GF
    n: int
    spreads: tuple

    def __post_init__(self) -> None:
        q = self.field.q
        seen = set()
        for sp in self.spreads:
            if sp.n != self.n or sp.field.q != q:
                raise ValueError("spread with mismatched parameters")
            for line in sp.lines:
                if line in seen:
                    raise ValueError(f"line {line!r} appears in two spreads")
                seen.add(line)
        if len(seen) != gaussian(self.n, 2, q):
            raise ValueError("spreads do not cover every 2-subspace")


def _search_parallelism(field: GF, n: int, node_limit: int) -> tuple:
    """Deterministic backtracking: each new spread is anchored on the
    lexicographically first unused line and completed first-fit on the
    lowest uncovered vector."""
    q = field.q
    lines = list(enumerate_subspaces(field, n, 2))
    nv = q ** n - 1
    full = (1 << nv) - 1
    masks = []
    through: dict = {i: [] for i in range(nv)}
    for idx, line in enumerate(lines):
        mask = 0
        for v in line.vectors():
            if any(v):
                mask |= 1 << (vector_code(v, q) - 1)
        masks.append(mask)
        bits = mask
        while bits:
            low = bits & -bits
            through[low.bit_length() - 1].append(idx)
            bits ^= low
    used = bytearray(len(lines))
    spreads_acc: list = []
    nodes = 0

    def start_new() -> bool:
        anchor = next((i for i in range(len(lines)) if not used[i]), None)
        if anchor is None:
            return True
        used[anchor] = 1
        if complete(masks[anchor], [anchor]):
            return True
        used[anchor] = 0
        return False

    def complete(cover: int, members: list) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise SearchExhausted(
                f"parallelism search for q={q}, n={n} exhausted {node_limit} nodes")
        if cover == full:
            spreads_acc.append(tuple(members))
            if start_new():
                return True
            spreads_acc.pop()
            return False
        missing = full & ~cover
        v = (missing & -missing).bit_length() - 1
        for li in through[v]:
            if used[li] or (masks[li] & cover):
                continue
            used[li] = 1
            members.append(li)
            if complete(cover | masks[li], members):
                return True
            members.pop()
            used[li] = 0
        return False

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * gaussian(n, 2, q) + 1000))
    try:
        if not start_new():
            raise SearchExhausted(f"no parallelism found for q={q}, n={n}")
    finally:
        sys.setrecursionlimit(old_limit)
    return tuple(Spread(field, n, tuple(lines[i] for i in sorted(
        members, key=lambda i: lines[i].rows))) for members in spreads_acc)


def build_parallelism(q: int, n: int, source: str = "search",
                      node_limit: int = 5_000_000) -> Parallelism:
    """Obtain a verified parallelism of F_q^n.

    ``source="search"`` runs the deterministic backtracking search
    (supported regime: q = 2, n even).  Any other value is taken as a
    path to a parallelism file, which is loaded and verified.
    """
    field = make_field(q)
    if source == "search":
        if q != 2 or n % 2:
            raise ValueError("search mode supports q = 2 with n even; "
                             "use a file for other parameters")
        spreads = _search_parallelism(field, n, node_limit)
        return Parallelism(field, n, tuple(sorted(
            spreads, key=lambda sp: tuple(l.rows for l in sp.lines))))
    from . import files
    para = files.parse_parallelism_file(source)
    if para.field.q != q or para.n != n:
        raise ValueError(f"file holds a parallelism for q={para.field.q}, "
                         f"n={para.n}, requested q={q}, n={n}")
    return para


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def _add_block(blocks: dict, b: Subspace, mult: int) -> None:
    blocks[b] = blocks.get(b, 0) + mult


def construct_uniform_design(q: int, t: int, k: int, n: int, m: int,
                             assignment: dict) -> DesignMultiset:
    """The uniform design giving every r-subspace of F_q^m the
    multiplicity assignment[r]."""
    params = DesignParams(q, t, k, n, m)
    r_rng = params.r_range()
    field = make_field(q)
    blocks: dict = {}
    for r, mult in assignment.items():
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 0:
            raise ValueError(f"multiplicity for dimension {r} must be a "
                             f"nonnegative integer, got {mult!r}")
        if mult and r not in r_rng:
            raise ValueError(f"dimension {r} outside the legal block range "
                             f"{r_rng.start}..{r_rng.stop - 1}")
    for r in r_rng:
        mult = assignment.get(r, 0)
        if mult:
            for y in enumerate_subspaces(field, m, r):
                blocks[y] = mult
    return DesignMultiset(params, blocks)


def construct_s3485(q: int) -> DesignMultiset:
    """The explicit six-part 3-punctured system S_q(3,4,8;5).

    Parts, by (dimension, dimension after one more puncture):
    the single raising 1-subspace; 2-subspaces staying 2-dimensional,
    once each; 3-subspaces dropping to dimension 2, q^4 each;
    3-subspaces staying 3-dimensional, q(q^3-1) each; 4-subspaces
    dropping to dimension 3, q^7(q-1) each; 4-subspaces staying
    4-dimensional, q^8-q^7+q^3 each.
    """
    params = DesignParams(q, 3, 4, 8, 5)
    field = make_field(q)
    blocks: dict = {}
    blocks[extension_raise_dim(null_subspace(field, 4))] = 1
    for y in enumerate_subspaces(field, 5, 2):
        if puncture(y, 1).dim == 2:
            blocks[y] = 1
    for y in enumerate_subspaces(field, 5, 3):
        blocks[y] = q ** 4 if puncture(y, 1).dim == 2 else q * (q ** 3 - 1)
    for y in enumerate_subspaces(field, 5, 4):
        blocks[y] = q ** 7 * (q - 1) if puncture(y, 1).dim == 3 else q ** 8 - q ** 7 + q ** 3
    design = DesignMultiset(params, blocks)
    report = verify(design)
    if not report.ok:
        raise ConstructionError(f"S_{q}(3,4,8;5) construction failed verification: "
                                f"{report.first_violation()}")
    return design


def construct_fano_m5(q: int, parallelism: Parallelism) -> DesignMultiset:
    """The four-type 2-punctured system S_q(2,3,7;5) built from a
    parallelism of F_q^4.

    Type 1: the raised 0-subspace, once.  Type 2: every same-dimension
    extension of every 3-subspace of F_q^4, q(q-1) times.  The
    parallelism's q^2+q+1 spreads split into a set A (first q^2) and a
    set B (last q+1): Type 3 raises each A-line uniquely, q^2 times;
    Type 4 takes all q^2 same-dimension extensions of each B-line, once
    each.
    """
    if parallelism.field.q != q or parallelism.n != 4:
        raise ValueError("need a parallelism of F_q^4 for the same q")
    if len(parallelism.spreads) != q * q + q + 1:
        raise ValueError("parallelism of F_q^4 must have q^2+q+1 spreads")
    params = DesignParams(q, 2, 3, 7, 5)
    field = make_field(q)
    blocks: dict = {}
    _add_block(blocks, extension_raise_dim(null_subspace(field, 4)), 1)
    for y in enumerate_subspaces(field, 4, 3):
        for ext in extensions_same_dim(y):
            _add_block(blocks, ext, q * (q - 1))
    set_a = parallelism.spreads[:q * q]
    set_b = parallelism.spreads[q * q:]
    for sp in set_a:
        for line in sp.lines:
            _add_block(blocks, extension_raise_dim(line), q * q)
    for sp in set_b:
        for line in sp.lines:
            for ext in extensions_same_dim(line):
                _add_block(blocks, ext, 1)
    design = DesignMultiset(params, blocks)
    report = verify(design)
    if not report.ok:
        raise ConstructionError(f"S_{q}(2,3,7;5) construction failed verification: "
                                f"{report.first_violation()}")
    return design


def construct_recursive(q: int, k: int, parallelism: Parallelism,
                        base: DesignMultiset) -> DesignMultiset:
    """Recursive construction of S_2(2,3,2k+1;k+1+r), r = floor((k+1)/3).

    Starts from the uniform S_2(2,3,2k+1;k+1) and appends r columns:
    3-subspaces get every suffix combination at multiplicity 2^{k+1-3r};
    the 0-subspace is replaced by the base design S_2(2,3,k;r) placed on
    the new columns; the parallelism's 2^k-1 spreads split into one set
    of 2^{k-r}-1 (extended to 2-subspaces, 2^{2r} suffix pairs at
    multiplicity 2^{k-1-2r}) and 2^r-1 sets of 2^{k-r} tagged with the
    nonzero vectors v of length r (extended to 3-subspaces whose last
    row is v, 2^{2(r-1)} suffix pairs at multiplicity 2^{k-1-2(r-1)}).
    """
    if q != 2:
        raise ValueError("the recursive construction is specified for q = 2 only")
    if k < 3 or k % 6 not in (1, 3):
        raise ValueError("need k = 1 or 3 (mod 6), k >= 3")
    r = (k + 1) // 3
    if k - 1 - 2 * r < 0:
        raise ValueError(f"multiplicity 2^(k-1-2r) not integral for k={k}, r={r}")
    if parallelism.field.q != 2 or parallelism.n != k + 1:
        raise ValueError(f"need a parallelism of F_2^{k + 1}")
    if len(parallelism.spreads) != 2 ** k - 1:
        raise ValueError(f"parallelism of F_2^{k + 1} must have 2^k-1 spreads")
    base_params = DesignParams(2, 2, 3, k, r)
    if base.params != base_params:
        raise ValueError(f"base design must be an S_2(2,3,{k};{r})")
    if not verify(base).ok:
        raise ValueError("base design fails verification")

    field = make_field(2)
    m1 = k + 1
    params = DesignParams(2, 2, 3, 2 * k + 1, m1 + r)
    suffixes = list(itertools.product(range(2), repeat=r))
    blocks: dict = {}

    top_mult = 2 ** (k + 1 - 3 * r)
    for y in enumerate_subspaces(field, m1, 3):
        for sfx in itertools.product(suffixes, repeat=3):
            rows = tuple(row + s for row, s in zip(y.rows, sfx))
            _add_block(blocks, Subspace(field, m1 + r, rows, y.pivots), top_mult)

    for b, mult in base.blocks.items():
        rows = tuple((0,) * m1 + row for row in b.rows)
        pivots = tuple(m1 + p for p in b.pivots)
        _add_block(blocks, Subspace(field, m1 + r, rows, pivots), mult)

    spreads = parallelism.spreads
    zero_set = spreads[:2 ** (k - r) - 1]
    mult_zero = 2 ** (k - 1 - 2 * r)
    for sp in zero_set:
        for line in sp.lines:
            for s1 in suffixes:
                for s2 in suffixes:
                    rows = (line.rows[0] + s1, line.rows[1] + s2)
                    _add_block(blocks, Subspace(field, m1 + r, rows, line.pivots),
                               mult_zero)

    mult_v = 2 ** (k - 1 - 2 * (r - 1))
    for j in range(1, 2 ** r):
        v = tuple((j >> i) & 1 for i in range(r))
        j0 = next(i for i in range(r) if v[i])
        lo = 2 ** (k - r) - 1 + (j - 1) * 2 ** (k - r)
        group = spreads[lo:lo + 2 ** (k - r)]
        vrow = (0,) * m1 + v
        restricted = [s for s in suffixes if s[j0] == 0]
        for sp in group:
            for line in sp.lines:
                pivots = line.pivots + (m1 + j0,)
                for s1 in restricted:
                    for s2 in restricted:
                        rows = (line.rows[0] + s1, line.rows[1] + s2, vrow)
                        _add_block(blocks, Subspace(field, m1 + r, rows, pivots),
                                   mult_v)

    design = DesignMultiset(params, blocks)
    report = verify(design)
    if not report.ok:
        raise ConstructionError(f"recursive S_2(2,3,{2 * k + 1};{m1 + r}) failed "
                                f"verification: {report.first_violation()}")
    return design


# ---------------------------------------------------------------------------
# Column transforms
# ---------------------------------------------------------------------------

def _transform_matrix(field: GF, ncols: int, column_ops: Iterable) -> list:
    """Compose the column operations into one invertible matrix."""
    q = field.q
    mat = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    for op in column_ops:
        j, coeffs = op
        coeffs = tuple(coeffs)
        if len(coeffs) != ncols:
            raise ValueError(f"operation on column {j} needs {ncols} coefficients")
        if not 0 <= j < ncols:
            raise ValueError(f"column index {j} out of range")
        if any(not 0 <= c < q for c in coeffs):
            raise ValueError("coefficient outside the field")
        if coeffs[j] == 0:
            raise ValueError(f"column {j} must occur with nonzero coefficient")
        step = [[1 if a == b else 0 for b in range(ncols)] for a in range(ncols)]
        for i in range(ncols):
            step[i][j] = coeffs[i]
        add, mul = field.add_table, field.mul_table
        out = [[0] * ncols for _ in range(ncols)]
        for a in range(ncols):
            row = mat[a]
            for c in range(ncols):
                acc = 0
                for b in range(ncols):
                    x = row[b]
                    if x:
                        acc = add[acc][mul[x][step[b][c]]]
                out[a][c] = acc
        mat = out
    return mat


def _apply_matrix(field: GF, sub: Subspace, mat: list) -> Subspace:
    if sub.dim == 0:
        return sub
    add, mul = field.add_table, field.mul_table
    ncols = sub.ambient
    new_rows = []
    for row in sub.rows:
        out = [0] * ncols
        for b, x in enumerate(row):
            if x:
                mb = mat[b]
                mx = mul[x]
                for c in range(ncols):
                    if mb[c]:
                        out[c] = add[out[c]][mx[mb[c]]]
        new_rows.append(tuple(out))
    return rref(field, new_rows)


def apply_transform(target, column_ops: Iterable):
    """Replace columns by linear combinations (each including the
    replaced column with nonzero coefficient) in every block.

    Works on a SteinerSystem or a DesignMultiset and preserves its
    verification status.
    """
    ops = list(column_ops)
    if isinstance(target, DesignMultiset):
        field = make_field(target.params.q)
        mat = _transform_matrix(field, target.params.m, ops)
        blocks: dict = {}
        for b, mult in target.blocks.items():
            _add_block(blocks, _apply_matrix(field, b, mat), mult)
        return DesignMultiset(target.params, blocks)
    if isinstance(target, SteinerSystem):
        mat = _transform_matrix(target.field, target.n, ops)
        new_blocks = tuple(sorted((_apply_matrix(target.field, b, mat)
                                   for b in target.blocks),
                                  key=lambda s: s.rows))
        if len(set(new_blocks)) != len(new_blocks):
            raise ConstructionError("transform collapsed two blocks")
        return SteinerSystem(target.field, target.t, target.k, target.n, new_blocks)
    raise TypeError(f"cannot transform {type(target).__name__}")
