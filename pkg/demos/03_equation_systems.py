#!/usr/bin/env python3
"""The covering equation systems behind punctured systems S_q(t,k,n;m),
solved exactly over the rationals."""

from qsteiner import (build_full, build_uniform, gaussian, solve,
                      uniform_family_solution)
from qsteiner.equations import NonIntegralSolution, family_system_params

print("== The five-times-punctured binary q-Fano plane, m = 2 ==")
print("One equation per subspace of F_2^2, one unknown per subspace:")
fs = build_full(2, 2, 3, 7, 2)
for x, row, rhs in zip(fs.subjects, fs.matrix, fs.rhs):
    label = "/".join("".join(map(str, r)) for r in x.rows) or "null"
    terms = " + ".join(f"{c}*a{i}" for i, c in enumerate(row) if c)
    print(f"  [{label:>5}]  {rhs} = {terms}")
out = solve(fs)
print(f"status: {out.status}; solution "
      f"{[int(out.assignment[y]) for y in fs.variables]}"
      " (the null subspace 5 times, each line 40, the plane 256)")

print()
print("== The m = 1 shadow ==")
out = solve(build_uniform(2, 2, 3, 7, 1), {0: 45})
print(f"pinning X_0 = 45 forces X_1 = {int(out.assignment[1])}"
      "  (651 = 336 + 45*7 two-subspaces with a zero first column)")

print()
print("== Uniform solutions of the known families ==")
for name in ("S(2,3,7;4)", "S(3,4,8;4)", "S(4,5,11;6)", "S(5,6,12;6)"):
    for q in (2, 3):
        fam = uniform_family_solution(name, q)
        t, k, n, m = family_system_params(name)
        got = solve(build_uniform(q, t, k, n, m), {0: fam[0]})
        tag = "matches closed form" if (
            {r: int(v) for r, v in got.assignment.items()} == fam) else "MISMATCH"
        print(f"  {name} at q={q}: {dict(fam)}  [{tag}]")

print()
print("== The S_q(3,4,2k;k) family is integral only at k = 4 ==")
for k in (4, 8, 10):
    try:
        fam = uniform_family_solution("S(3,4,2k;k)", 2, k=k)
        print(f"  k={k}: accepted, X_4 = {fam[4]}")
    except NonIntegralSolution as exc:
        print(f"  k={k}: rejected ({exc})")

print()
print("== The open m = 6 case ==")
out = solve(build_uniform(2, 2, 3, 7, 6))
print(f"status: {out.status}; X_2 = {out.assignment[2]}, "
      f"X_3 = {out.assignment[3]}")
print("a UNIFORM once-punctured binary q-Fano plane cannot exist (the")
print("unique solution is fractional); whether a non-uniform S_2(2,3,7;6)")
print("exists remains open.")

print()
print("== Mass identity ==")
print(f"every verified S_2(2,3,7;m) carries total multiplicity "
      f"{gaussian(7, 2, 2) // gaussian(3, 2, 2)} = [7 choose 2]_2 / [3 choose 2]_2")
