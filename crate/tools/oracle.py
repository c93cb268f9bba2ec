"""Independent reference values for the frozen tests in crates/core/tests/oracle.rs.

Uses mpmath (50 digits) and sympy only; nothing here shares code with the
Rust implementation. Run: python3 tools/oracle.py
"""
from fractions import Fraction

import mpmath as mp
import sympy as sp

mp.mp.dps = 50


def r(x):
    return mp.nstr(x, 20, min_fixed=-1, max_fixed=-1) if isinstance(x, mp.mpf) else x


def c(z):
    z = mp.mpc(z)
    return f"({mp.nstr(z.real, 20)}, {mp.nstr(z.imag, 20)})"


def f_integral(z):
    # e^{-1} ∫_0^1 t^{z+1} e^t dt, valid for Re z > -2
    return mp.quad(lambda t: t ** (z + 1) * mp.e ** t, [0, 1]) / mp.e


def f_continued(z):
    # raise Re z with f(z) = f(z+1) + f(z+2)/(z+2), from the AFE
    if mp.re(z) > -1.5:
        return f_integral(z)
    return f_continued(z + 1) + f_continued(z + 2) / (z + 2)


def g_gamma(z):
    a = lambda w: mp.gamma(w / 2 + 1) * mp.rgamma((w + 1) / 2)
    return mp.sqrt(2) * (a(z) - a(z - 1))


print("// f(z): integral representation, continued left through the AFE")
for z in [0, 1, 2.5, -1, -0.5, -1.5, -2.5, mp.mpc(0.5, 1), mp.mpc(-1.25, 3), mp.mpc(4, -2), mp.mpc(2, 10)]:
    print(f"    ({c(z)}, {c(f_continued(mp.mpc(z)))}),")

print("// g(z)")
for z in [0, 1, 2, 0.5, -0.5, -1.5, mp.mpc(0.5, 1), mp.mpc(-1.25, 3), mp.mpc(4, -2), mp.mpc(1, 20)]:
    print(f"    ({c(z)}, {c(g_gamma(mp.mpc(z)))}),")

print("// Gamma(z)")
for z in [mp.mpc(0.5, 0), mp.mpc(1 / 3, 0), mp.mpc(-2.5, 0), mp.mpc(0.25, 3), mp.mpc(-3.7, 1.1), mp.mpc(12, 15), mp.mpc(80, -3)]:
    print(f"    ({c(z)}, {c(mp.gamma(z))}),")

print("// log Gamma(z), principal for Re z >= 1/2")
for z in [mp.mpc(0.75, 0), mp.mpc(3, 4), mp.mpc(100, 0), mp.mpc(10, -30)]:
    print(f"    ({c(z)}, {c(mp.loggamma(z))}),")

print("// lower incomplete gamma(a, x)")
for a, x in [(2, -1), (0.5, 1), (mp.mpc(2.5, 1), -1), (mp.mpc(-0.5, 0), 2), (mp.mpc(3, -2), 0.75)]:
    a = mp.mpc(a)
    print(f"    ({c(a)}, {x}, {c(mp.gammainc(a, 0, x))}),")

print("// 1F1(a; b; x)")
for a, b, x in [(2, 3, -1), (mp.mpc(0.5, 1), mp.mpc(1.5, -0.5), 1.5), (mp.mpc(-2.5, 0.3), mp.mpc(3, 1), -2), (1, mp.mpc(-0.5, 0.5), 0.8)]:
    print(f"    ({c(a)}, {c(b)}, {x}, {c(mp.hyp1f1(a, b, x))}),")

print("// duality integers from J_m = ∫_0^1 t^{m+1} e^t dt = (-1)^m (a_m - e b_m)")
t, e = sp.symbols("t"), sp.E
for m in [0, 1, 2, 3, 7, 12, 20]:
    jm = sp.expand(sp.integrate(t ** (m + 1) * sp.exp(t), (t, 0, 1)) * (-1) ** m)
    b = -jm.coeff(e)
    a = jm - jm.coeff(e) * e
    print(f"    ({m}, \"{a}\", \"{b}\"),")

print("// duality rationals from sqrt(pi)(A(m) - A(m-1)) = (-1)^m (p_m - pi q_m)")
for m in [0, 1, 2, 3, 6, 11, 20]:
    A = lambda w: sp.gamma(sp.Rational(w, 2) + 1) / sp.gamma(sp.Rational(w + 1, 2)) if w >= 0 else sp.Integer(0)
    expr = sp.expand(sp.sqrt(sp.pi) * (A(m) - A(m - 1)) * (-1) ** m)
    q = -expr.coeff(sp.pi)
    p = sp.simplify(expr + q * sp.pi)
    print(f"    ({m}, \"{p}\", \"{q}\"),")

print("// e-world mirror u_n(z), exact, z = 1/3")
def iterate(step, z, n_max):
    u = {1: Fraction(0), 2: Fraction(1)}
    for n in range(1, n_max - 1):
        u[n + 2] = step(n, z, u[n], u[n + 1])
    return u
ue = iterate(lambda n, z, a, b: b + a / (n + z), Fraction(1, 3), 40)
up = iterate(lambda n, z, a, b: b / (n + z) + a, Fraction(1, 3), 40)
for n in [3, 4, 5, 10, 40]:
    print(f"    ({n}, \"{ue[n]}\", \"{up[n]}\"),")

print("// shell w_n(z) = n!/(z)_n at z = 7/3")
w, z = Fraction(1), Fraction(7, 3)
for n in range(1, 31):
    w = w * n / (z + n - 1)
    if n in (1, 2, 5, 30):
        print(f"    ({n}, \"{w}\"),")

print("// quadrature I_m, J_m, L_m")
for m in [0.5, 1, 3.25, 7]:
    print(f"    I({m}) = {mp.nstr(mp.quad(lambda t: t**m * mp.e**t, [0, 1]), 20)}")
for m in [1, 2, 5, 12]:
    L = mp.quad(lambda t: m * t ** (m - 1) * mp.sqrt((1 - t) / (1 + t)), [0, 1])
    print(f"    L({m}) = {mp.nstr(L, 20)}")
