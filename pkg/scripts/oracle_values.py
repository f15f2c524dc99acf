"""Recompute the frozen reference values used in the tests with sympy alone.

Nothing here imports multitwist, so the numbers form an independent check.
Run: python3 scripts/oracle_values.py
"""

import sympy as sp

x, y = sp.symbols("x y")


def minpoly(expr):
    return sp.Poly(sp.minimal_polynomial(expr, x), x).as_expr()


def pf(M):
    M = sp.Matrix(M)
    ev = max(M.eigenvals(), key=lambda e: float(sp.re(e)))
    return sp.nsimplify(ev), minpoly(ev)


def lam(trace):
    return sp.nsimplify((abs(trace) + sp.sqrt(trace ** 2 - 4)) / 2)


gamma = (1 + sp.sqrt(5)) / 2
mu_a4 = gamma ** 2
print("A4 mu", sp.simplify(mu_a4), minpoly(mu_a4))
print("A4 area gamma^2 + 2 gamma", sp.nsimplify(sp.expand(gamma ** 2 + 2 * gamma)))
print("E7 charpoly root", sp.N(max(sp.Poly(x**3 - 6*x**2 + 9*x - 3).nroots()), 15))

# A7: heights from the PF vector of N N^T, N = path with 3 rows, 4 columns
N = sp.Matrix([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]])
G = N * N.T
mu7 = 2 + sp.sqrt(2)
v = (G - mu7 * sp.eye(3)).nullspace()[0]
v = sp.simplify(v / v[0])
print("A7 heights", list(v))
w = sp.simplify(N.T * v / sp.sqrt(mu7))
print("A7 widths", [sp.nsimplify(sp.N(t, 40)) for t in w], [sp.N(t, 15) for t in w])
print("A7 middle circumference", sp.N(v[1] * sp.sqrt(mu7), 20), sp.N(sp.sqrt(2) * sp.sqrt(2 + sp.sqrt(2)), 20))

# expansion factors
mu = sp.symbols("mu")
A = sp.Matrix([[1, sp.sqrt(mu)], [0, 1]])
B = sp.Matrix([[1, 0], [-sp.sqrt(mu), 1]])
print("AB", sp.simplify(A * B))
print("AB at 6", lam(2 - 6), minpoly(lam(2 - 6)))
print("AB^-1 at 4", lam(2 + 4), minpoly(lam(2 + 4)))
for n in (2, 3, 4):
    t = 2 - n * mu_a4
    print(f"A4 cover n={n}: AB upstairs trace", sp.simplify(t), "lambda minpoly", minpoly(lam(t)))
    NtN = n * sp.Matrix([[2, 1], [1, 1]])
    print("   charpoly", NtN.charpoly(x).as_expr())

# Lehmer: E10 has N N^T with PF root mu; lambda(AB) satisfies y^2 - (mu - 2) y + 1
lehmer = x**10 + x**9 - x**7 - x**6 - x**5 - x**4 - x**3 + x + 1
root = max(sp.Poly(lehmer).nroots(), key=lambda r: sp.re(r))
print("Lehmer root", root, "mu = lambda + 1/lambda + 2 =", sp.N(root + 1 / root + 2, 20))
print("(2+sqrt3)^2 =", sp.expand((2 + sp.sqrt(3)) ** 2))
print("trace AB^-1 at A4", sp.simplify(2 + mu_a4), "lambda minpoly", minpoly(lam(2 + mu_a4)))
print("A6 AB^-1 lambda minpoly", minpoly(lam(2 + sp.CRootOf(x**3 - 5*x**2 + 6*x - 1, 2))))
