#!/usr/bin/env python3
"""Independent brute-force oracle for the twist census at A = -27, height 25.

Enumerates t = n/m in lowest terms, |n| <= H, 1 <= m <= H, evaluates the
degree-12 right-hand side with sympy rationals, extracts the squarefree part
with sympy.factorint, and tabulates distinct d.  No code from src/twocovers
is imported.
"""

from math import gcd

import sympy as sp


def rhs(A, t):
    return A * (t + 1) ** 4 * (t**2 + 1) ** 4 - 64 * t**3 * (t**2 + t + 1) ** 3


def squarefree_part(v):
    num, den = sp.fraction(sp.Rational(v))
    n = int(num) * int(den)
    sign = -1 if n < 0 else 1
    d = sign
    for p, e in sp.factorint(abs(n)).items():
        if e % 2 == 1:
            d *= p
    return d


def main():
    A = sp.Integer(-27)
    H = 25
    seen = {}
    for m in range(1, H + 1):
        for n in range(-H, H + 1):
            if gcd(abs(n), m) != 1:
                continue
            t = sp.Rational(n, m)
            v = rhs(A, t)
            if v == 0:
                continue
            d = squarefree_part(v)
            h = max(abs(n), m)
            key = (h, t)
            if d not in seen or key < seen[d]:
                seen[d] = key

    print("distinct d count:", len(seen))
    print("d for t=0:", squarefree_part(rhs(A, sp.Integer(0))))
    print("d for t=-1:", squarefree_part(rhs(A, sp.Integer(-1))))
    print("d for t=1:", squarefree_part(rhs(A, sp.Integer(1))))
    for X in (10, 100, 1000, 10**6, 10**12):
        print(f"N_dedup(|d|<={X}):", sum(1 for d in seen if abs(d) <= X))
    ds = sorted(seen, key=lambda d: (abs(d), d))
    print("smallest ten d:", ds[:10])
    print("largest |d|:", ds[-1])


if __name__ == "__main__":
    main()
