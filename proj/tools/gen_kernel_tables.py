#!/usr/bin/env python3
"""Regenerates src/kernel_tables.inc: exact-rational Maclaurin coefficients
(total degree <= DEG) of the two singularity-removed bracket-weight kernels

    u1(c, cb) = (f(c, cb) - g1(c, cb)) / c
    u2(c, cb) = (f(c, cb) + g2(c, cb)) / cb

about the origin, where (with s = c + cb, T = 1 - e^s)

    f  = ((1 - e^cb)/cb - e^cb (1 - e^c)/c) / T
    g1 = (1 - e^cb)/cb * (1/T + s e^s / T^2)
    g2 = e^cb (1 - e^c)/c * (1/T + s / T^2)

Both quotients are entire: after clearing denominators the numerator brackets
are divisible by s^2 as formal series, and because s^2 is homogeneous the
polynomial division is exact degree by degree. Requires sympy and mpmath.

Usage: python3 tools/gen_kernel_tables.py > src/kernel_tables.inc
"""
import sympy as sp
from mpmath import mp, mpf

DEG = 16
W = DEG + 4

mp.dps = 30
c, cb, x = sp.symbols('c cb x')


def trunc(p, deg):
    out = 0
    for term, coeff in sp.expand(p).as_coefficients_dict().items():
        d = (sp.degree(term, c) + sp.degree(term, cb)) if term != 1 else 0
        if d <= deg:
            out += coeff * term
    return out


fact = [sp.factorial(k) for k in range(W + 3)]
exp_ser = lambda v: sum(v**k / fact[k] for k in range(W + 1))
E_ser = lambda v: sum(v**k / fact[k + 1] for k in range(W + 1))
kap_ser = lambda v: sum((k + 1) * v**k / fact[k + 2] for k in range(W + 1))

ec, ecb = exp_ser(c), exp_ser(cb)
Ec, Ecb = E_ser(c), E_ser(cb)
kc, kcb = kap_ser(c), kap_ser(cb)

# u1 = e^cb * B1 / (1-e^s)^2 with B1 = cb E(cb) kappa(c) + e^c E(cb) - e^cb E(c)^2
# u2 = -B2 / (1-e^s)^2      with B2 = c E(c) kappa(cb) + e^cb E(c) - e^c E(cb)^2
B1 = trunc(cb * Ecb * kc + ec * Ecb - ecb * Ec**2, W)
B2 = trunc(c * Ec * kcb + ecb * Ec - ec * Ecb**2, W)

s2 = sp.expand((c + cb)**2)


def divide_by_s2(P):
    q, r = sp.reduced(sp.expand(P), [s2], c, cb)
    assert sp.expand(r) == 0, "bracket not divisible by s^2"
    return sp.expand(q[0])


Es = sum(x**k / fact[k + 1] for k in range(W + 1))
invE2 = trunc(sp.series(1 / Es**2, x, 0, W + 1).removeO().subs(x, c + cb), W)

u1_ser = trunc(trunc(ecb * divide_by_s2(B1), W) * invE2, DEG)
u2_ser = trunc(-trunc(divide_by_s2(B2), W) * invE2, DEG)

assert u1_ser.subs({c: 0, cb: 0}) == sp.Rational(-1, 12)
assert u2_ser.subs({c: 0, cb: 0}) == sp.Rational(1, 12)


def emit(name, ser):
    dd = sp.expand(ser).as_coefficients_dict()

    def coeff_of(i, j):
        key = c**i * cb**j if (i or j) else sp.Integer(1)
        return sp.Rational(dd.get(key, sp.Integer(0)))

    vals = []
    for d in range(DEG + 1):
        for i in range(d, -1, -1):
            q = coeff_of(i, d - i)
            vals.append(mp.nstr(mpf(q.p) / mpf(q.q), 19, strip_zeros=False))
    lines = [f"inline constexpr int {name}_deg = {DEG};",
             f"inline constexpr double {name}_coef[] = {{"]
    for k in range(0, len(vals), 4):
        lines.append("    " + ", ".join(vals[k:k + 4]) + ",")
    lines[-1] = lines[-1].rstrip(',')
    lines.append("};")
    return "\n".join(lines)


print("// Maclaurin coefficients about (0,0) of the two singularity-removed")
print("// bracket-weight kernels u1 = (f-g1)/c and u2 = (f+g2)/cbar, exact")
print("// rationals rounded to double. Triangular order: total degree d = 0..deg,")
print("// within each d the power of the first argument runs d..0.")
print("// Regenerate with tools/gen_kernel_tables.py.")
print(emit("u1", u1_ser))
print()
print(emit("u2", u2_ser))
