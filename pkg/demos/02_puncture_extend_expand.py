#!/usr/bin/env python3
"""The subspace calculus: canonical form, puncturing, the two kinds of
extension, and virtual expansions."""

from qsteiner import (enumerate_extensions, expand, extension_raise_dim,
                      extensions_same_dim, make_field, puncture, rref)

F2 = make_field(2)


def show(label, sub):
    rows = " / ".join("".join(map(str, r)) for r in sub.rows) or "(null)"
    print(f"  {label}: dim {sub.dim}, basis {rows}")


print("== Canonical subspaces ==")
x = rref(F2, [(0, 1, 1, 0), (0, 0, 1, 0), (0, 1, 0, 0)])
show("span{0110, 0010, 0100}", x)
print("  same subspace from any generating set:",
      x == rref(F2, [(0, 1, 0, 0), (0, 0, 1, 0)]))

print()
print("== Puncturing deletes the last coordinate ==")
show("puncture once", puncture(x, 1))
e4 = rref(F2, [(0, 0, 0, 1)])
show("span{0001} punctured", puncture(e4, 1))
print("  a punctured k-subspace keeps its dimension unless the last")
print("  unit vector was inside; then the dimension drops by one.")

print()
print("== Extensions invert puncturing ==")
print("A t-subspace extends to a t-subspace of the longer space in")
print("exactly q^t ways (choose the appended column):")
for ext in extensions_same_dim(x):
    show("same-dim extension", ext)
print("and to a (t+1)-subspace in exactly one way:")
show("raised extension", extension_raise_dim(x))

print()
print("== Multi-coordinate extensions ==")
y = rref(F2, [(0, 1, 0, 0, 1), (0, 0, 1, 0, 1)])
show("a 2-subspace of F_2^5", y)
exts = list(enumerate_extensions(y, 3, 7))
print(f"  it extends to {len(exts)} distinct 3-subspaces of F_2^7"
      f" (N formula: 2^(2*1) * [2 choose 1]_2 = 12)")
print("  every one punctures back:",
      all(puncture(e, 2) == y for e in exts))

print()
print("== Virtual expansion ==")
print("Puncturing loses the row structure of the parent; the k-expansion")
print("records it: q^(k-d) stacked copies of the nonzero vectors, then")
print("zero rows.  The 3-expansion of the 2-subspace above:")
ve = expand(x, 3)
for row in ve.rows:
    print("   ", "".join(map(str, row)))
print("  distinct nonzero rows recover the subspace:",
      ve.underlying() == x)
