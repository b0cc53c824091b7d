"""Exact subspace counts and their brute-force oracles.

Closed forms:

* ``gaussian(n, k, q)`` -- the q-binomial coefficient, the size of the
  Grassmannian of k-subspaces of F_q^n.
* ``count_N(s, m, t, n, q)`` -- t-subspaces of F_q^n extending a fixed
  s-subspace of F_q^m: q^{s(n-m-t+s)} * gaussian(n-m, t-s).
* ``count_C(s, t, r, k, q)`` -- copies of the t-expansion of an
  s-subspace inside the k-expansion of a containing r-subspace:
  gaussian(k-r, t-s) * q^{s(k-r-t+s)}.
* ``count_D(s, r, m, q)`` -- r-subspaces of F_q^m containing a fixed
  s-subspace: gaussian(m-s, r-s).

Every closed form has an independent oracle that counts by exhaustive
enumeration; the oracles never evaluate the formulas.  All values are
exact arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .field import make_field
from .subspaces import (Subspace, _iter_grassmannian, contains,
                        extension_raise_dim, first_subspace, puncture,
                        subspaces_within)

# Largest Grassmannian an oracle is allowed to enumerate.
ORACLE_GUARD = 10 ** 7


def gaussian(n: int, k: int, q: int) -> int:
    """The q-binomial coefficient [n choose k]_q.

    Out-of-range arguments (k < 0 or k > n) return 0 by convention so
    that equation builders can sum over uniform bounds.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    num = den = 1
    for i in range(min(k, n - k)):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_N(s: int, m: int, t: int, n: int, q: int) -> int:
    """Number of t-subspaces of F_q^n whose (n-m)-puncture is a fixed
    s-subspace of F_q^m."""
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    if not 0 <= s <= t:
        raise ValueError(f"need 0 <= s <= t, got s={s}, t={t}")
    if s > m:
        raise ValueError(f"no s-subspace of F_q^{m} with s={s}")
    if t - s > n - m:
        raise ValueError(f"cannot raise dimension by {t - s} in {n - m} coordinates")
    return q ** (s * (n - m - t + s)) * gaussian(n - m, t - s, q)


def count_C(s: int, t: int, r: int, k: int, q: int) -> int:
    """Number of copies of the t-expansion of an s-subspace X inside
    the k-expansion of an r-subspace Y containing X."""
    if not 0 <= s <= t < k:
        raise ValueError(f"need 0 <= s <= t < k, got s={s}, t={t}, k={k}")
    if not s <= r <= k - t + s:
        raise ValueError(f"need s <= r <= k-t+s, got r={r}")
    return gaussian(k - r, t - s, q) * q ** (s * (k - r - t + s))


def count_D(s: int, r: int, m: int, q: int) -> int:
    """Number of r-subspaces of F_q^m containing a fixed s-subspace."""
    if not 0 <= s <= r <= m:
        raise ValueError(f"need 0 <= s <= r <= m, got s={s}, r={r}, m={m}")
    return gaussian(m - s, r - s, q)


def covering_coefficient(s: int, t: int, r: int, k: int, q: int) -> int:
    """count_C with the zero convention outside its r-range.

    Equation builders sum over every block dimension; a block of
    dimension r > k-t+s contributes no covering copies (the gaussian
    factor vanishes) and r < s cannot contain the subspace at all.
    """
    if r < s:
        return 0
    g = gaussian(k - r, t - s, q)
    if g == 0:
        return 0
    return g * q ** (s * (k - r - t + s))


@dataclass(frozen=True)
class DivisibilityEntry:
    i: int
    numerator: int
    denominator: int
    divides: bool


@dataclass(frozen=True)
class DivisibilityReport:
    """Outcome of the divisibility necessary conditions for S_q(t,k,n)."""

    q: int
    t: int
    k: int
    n: int
    entries: tuple
    ok: bool


def necessary_conditions(t: int, k: int, n: int, q: int) -> DivisibilityReport:
    """Check that gaussian(n-i, t-i) / gaussian(k-i, t-i) is an integer
    for every 0 <= i <= t-1."""
    if not 0 < t < k < n:
        raise ValueError(f"need 0 < t < k < n, got t={t}, k={k}, n={n}")
    entries = []
    for i in range(t):
        num = gaussian(n - i, t - i, q)
        den = gaussian(k - i, t - i, q)
        entries.append(DivisibilityEntry(i, num, den, num % den == 0))
    return DivisibilityReport(q, t, k, n, tuple(entries),
                              all(e.divides for e in entries))


@lru_cache(maxsize=None)
def _puncture_census(q: int, n: int, t: int, m: int) -> dict:
    """Map each subspace of F_q^m to the number of t-subspaces of
    F_q^n puncturing onto it.

    Built incrementally: the census for m is the once-more-punctured
    census for m+1, so the full Grassmannian is walked only once per
    (q, n, t).
    """
    field = make_field(q)
    census: dict = {}
    if m == n - 1:
        for x in _iter_grassmannian(field, n, t):
            img = puncture(x, 1)
            census[img] = census.get(img, 0) + 1
    else:
        for img, cnt in _puncture_census(q, n, t, m + 1).items():
            img2 = puncture(img, 1)
            census[img2] = census.get(img2, 0) + cnt
    return census


def _check_guard(n: int, t: int, q: int) -> None:
    size = gaussian(n, t, q)
    if size > ORACLE_GUARD:
        raise ValueError(
            f"oracle would enumerate {size} subspaces (> {ORACLE_GUARD})")


def oracle_N(s: int, m: int, t: int, n: int, q: int,
             witness: Subspace | None = None) -> int:
    """Brute-force count_N: enumerate all t-subspaces of F_q^n and count
    those puncturing onto the witness s-subspace of F_q^m."""
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    _check_guard(n, t, q)
    field = make_field(q)
    if witness is None:
        witness = first_subspace(field, m, s)
    if witness.dim != s or witness.ambient != m:
        raise ValueError("witness does not match the requested (s, m)")
    return _puncture_census(q, n, t, m).get(witness, 0)


def oracle_C(s: int, t: int, r: int, k: int, q: int,
             inner: Subspace | None = None,
             outer: Subspace | None = None) -> int:
    """Brute-force count_C.

    Picks an r-subspace Y containing an s-subspace X (by default Y is
    the whole space F_q^r and X its first s-subspace), raises Y to a
    k-subspace W by repeated unique dimension-raising extension, and
    counts the t-subspaces of W that puncture back onto X.
    """
    if not 0 <= s <= t < k:
        raise ValueError(f"need 0 <= s <= t < k, got s={s}, t={t}, k={k}")
    if not s <= r <= k:
        raise ValueError(f"need s <= r <= k, got r={r}")
    field = make_field(q)
    if outer is None:
        outer = first_subspace(field, r, r)
    if inner is None:
        inner = first_subspace(field, outer.ambient, s)
    if outer.dim != r or inner.dim != s or not contains(outer, inner):
        raise ValueError("witness pair is not an s-subspace inside an r-subspace")
    w = outer
    for _ in range(k - r):
        w = extension_raise_dim(w)
    p = k - r
    total = 0
    for tsub in subspaces_within(w, t):
        if puncture(tsub, p) == inner:
            total += 1
    return total


def oracle_D(s: int, r: int, m: int, q: int,
             witness: Subspace | None = None) -> int:
    """Brute-force count_D: enumerate all r-subspaces of F_q^m and count
    those containing the witness s-subspace."""
    if not 0 <= s <= r <= m:
        raise ValueError(f"need 0 <= s <= r <= m, got s={s}, r={r}, m={m}")
    _check_guard(m, r, q)
    field = make_field(q)
    if witness is None:
        witness = first_subspace(field, m, s)
    if witness.dim != s or witness.ambient != m:
        raise ValueError("witness does not match the requested (s, m)")
    return sum(1 for y in _iter_grassmannian(field, m, r)
               if contains(y, witness))


def grassmannian_size_by_enumeration(q: int, m: int, d: int) -> int:
    """|G_q(m, d)| counted by streaming enumeration (test oracle)."""
    field = make_field(q)
    return sum(1 for _ in _iter_grassmannian(field, m, d))
