#!/usr/bin/env python3
"""Counting in the Grassmannian: closed forms, necessary conditions,
and brute-force cross-checks.

Everything here is exact integer arithmetic; every closed form is
compared against an independent enumeration oracle.
"""

from qsteiner import (count_C, count_D, count_N, gaussian,
                      necessary_conditions, oracle_C, oracle_D, oracle_N)

print("== Gaussian (q-binomial) coefficients ==")
print("Number of k-subspaces of F_q^n, a few landmarks:")
for n, k, q in ((3, 2, 2), (5, 2, 2), (6, 2, 2), (7, 2, 2), (7, 3, 2), (4, 2, 3)):
    print(f"  [{n} choose {k}]_{q} = {gaussian(n, k, q)}")

print()
print("== Divisibility necessary conditions for S_q(t,k,n) ==")
for t, k, n, q in ((2, 3, 7, 2), (2, 3, 7, 3), (2, 3, 8, 2), (1, 2, 6, 2)):
    rep = necessary_conditions(t, k, n, q)
    verdict = "pass" if rep.ok else "FAIL"
    parts = ", ".join(f"{e.numerator}/{e.denominator}" for e in rep.entries)
    print(f"  S_{q}({t},{k},{n}): {parts} -> {verdict}")
print("  (2,3,8,2) failing is why no binary S(2,3,8) analog can exist;")
print("  (2,3,7,q) passing for all q is why the q-Fano plane stays open.")

print()
print("== Extension counts N, covering counts C, containment counts D ==")
print("N_{(s,m),(t,n)}: t-subspaces of F_q^n puncturing onto a fixed")
print("s-subspace of F_q^m.  Checked against full-Grassmannian enumeration:")
for s, m, t, n, q in ((2, 5, 3, 7, 2), (0, 4, 2, 7, 2), (1, 1, 2, 7, 2)):
    f, o = count_N(s, m, t, n, q), oracle_N(s, m, t, n, q)
    print(f"  N_(({s},{m}),({t},{n})) over F_{q}: formula {f}, oracle {o}")

print()
print("C_{(s,t),(r,k)}: copies of the t-expansion of an s-subspace inside")
print("the k-expansion of a containing r-subspace:")
for s, t, r, k, q in ((2, 2, 2, 3, 2), (1, 2, 1, 3, 2), (0, 2, 1, 3, 2)):
    f, o = count_C(s, t, r, k, q), oracle_C(s, t, r, k, q)
    print(f"  C_(({s},{t}),({r},{k})) over F_{q}: formula {f}, oracle {o}")

print()
print("D_{s,r,m}: r-subspaces of F_q^m through a fixed s-subspace:")
for s, r, m, q in ((1, 2, 4, 2), (2, 3, 4, 2), (0, 2, 4, 2)):
    f, o = count_D(s, r, m, q), oracle_D(s, r, m, q)
    print(f"  D_({s},{r},{m}) over F_{q}: formula {f}, oracle {o}")

print()
print("These three counts are the whole content of the covering equations:")
print("an s-subspace X of F_q^m must be extended N times, and each block")
print("of dimension r through X accounts for C of those extensions, with")
print("D blocks of each dimension available.")
