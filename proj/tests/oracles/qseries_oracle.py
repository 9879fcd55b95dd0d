"""Independent reference values for the C++ tests.

Plain-Python truncated power series (dict exponent -> Fraction) and mpmath for
numeric checks. Run: python3 tests/oracles/qseries_oracle.py
"""
from fractions import Fraction
from itertools import product

from mpmath import mp, mpf

N = 40


def mul(a, b, n):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            if e <= n:
                out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def inv(a, n):
    # a has valuation 0 here
    a0 = a[0]
    out = {}
    for e in range(n + 1):
        s = Fraction(1 if e == 0 else 0)
        for k in range(1, e + 1):
            s -= a.get(k, 0) * out.get(e - k, 0)
        out[e] = s / a0
    return {e: c for e, c in out.items() if c != 0}


def binom(c, e):
    return {0: Fraction(1), e: -Fraction(c)} if e else {0: 1 - Fraction(c)}


def poch(c, e, base_e, count, n):
    out = {0: Fraction(1)}
    for j in range(count):
        out = mul(out, binom(c, e + j * base_e), n)
    return out


def poch_inf(c, e, base_e, n):
    out = {0: Fraction(1)}
    j = 0
    while e + j * base_e <= n:
        out = mul(out, binom(c, e + j * base_e), n)
        j += 1
    return out


def coeffs(s, n, lo=0):
    return [s.get(e, 0) for e in range(lo, n + 1)]


def fmt(lst):
    return ", ".join(str(x) for x in lst)


print("# pentagonal (q;q)_inf to q^5:", fmt(coeffs(poch_inf(1, 1, 1, 5), 5)))
pent = poch_inf(1, 1, 1, N)
print("# (q;q)_inf coefficients in {-1,0,1}:", all(abs(c) <= 1 for c in pent.values()))
print("# (q;q)_2:", fmt(coeffs(poch(1, 1, 1, 2, 10), 3)))

ft = {}
n = 0
while n * (n + 1) // 2 <= 10:
    ft[n * (n + 1) // 2] = (-1) ** n
    n += 1
print("# false theta to 10:", fmt(coeffs(ft, 10)))

# q-Gauss at a=q^2, b=q^3, c=q^7 (c/ab = q^2)
M = 30
lhs = {}
for k in range(0, M + 1):
    t = mul(mul(poch(1, 2, 1, k, M + 20), poch(1, 3, 1, k, M + 20), M + 20), {2 * k: Fraction(1)}, M + 20)
    d = mul(poch(1, 1, 1, k, M + 20), poch(1, 7, 1, k, M + 20), M + 20)
    t = mul(t, inv(d, M + 20), M)
    for e, c in t.items():
        lhs[e] = lhs.get(e, 0) + c
rhs = mul(mul(poch_inf(1, 5, 1, M), poch_inf(1, 4, 1, M), M),
          inv(mul(poch_inf(1, 7, 1, M), poch_inf(1, 2, 1, M), M), M), M)
assert coeffs(lhs, M) == coeffs(rhs, M)
print("# qgauss a=q^2,b=q^3,c=q^7 to 30:", fmt(coeffs(rhs, M)))

# q-binomial at a=q^3, z=q^2
lhs = {}
for k in range(0, M + 1):
    t = mul(poch(1, 3, 1, k, M), {2 * k: Fraction(1)}, M)
    t = mul(t, inv(poch(1, 1, 1, k, M), M), M)
    for e, c in t.items():
        lhs[e] = lhs.get(e, 0) + c
rhs = mul(poch_inf(1, 5, 1, M), inv(poch_inf(1, 2, 1, M), M), M)
assert coeffs(lhs, M) == coeffs(rhs, M)
print("# qbinom a=q^3,z=q^2 to 30:", fmt(coeffs(rhs, M)))

# right side of the q^{n(3n+1)/2}(1-q^{2n+1}) false theta, to 40
f2 = {}
n = 0
while n * (3 * n + 1) // 2 <= N:
    f2[n * (3 * n + 1) // 2] = f2.get(n * (3 * n + 1) // 2, 0) + 1
    f2[n * (3 * n + 1) // 2 + 2 * n + 1] = f2.get(n * (3 * n + 1) // 2 + 2 * n + 1, 0) - 1
    n += 1
print("# sum q^{n(3n+1)/2}(1-q^{2n+1}) to 40:", fmt(coeffs(f2, N)))

# numeric check of the n+1 weighted sum at q=1/7, x=1/3
mp.dps = 60
q = mpf(1) / 7
x = mpf(1) / 3


def npoch(a, n):
    r = mpf(1)
    for j in range(n):
        r *= 1 - a * q ** j
    return r


def npinf(a):
    r = mpf(1)
    j = 0
    while abs(a * q ** j) > mpf(10) ** -70:
        r *= 1 - a * q ** j
        j += 1
    return r


left = sum((1 + q ** (k + 1) / x) * npoch(q / x ** 2, k) * x ** k * (k + 1) / npoch(q, k + 1) for k in range(200))
right = 1 / (1 - x) * npinf(q / x) / npinf(x)
print("# weighted sum at q=1/7,x=1/3:", mp.nstr(left, 45), mp.nstr(right, 45))

# PTE
A, B = [1, 5, 6], [2, 3, 7]
print("# power sums e=1..3:", [sum(a ** e for a in A) for e in (1, 2, 3)], [sum(b ** e for b in B) for e in (1, 2, 3)])


def poly_from_roots(r):
    c = [Fraction(1)]
    for a in r:
        c = [Fraction(0)] + c
        for i in range(len(c) - 1):
            c[i] -= a * c[i + 1]
    return c


pa, pb = poly_from_roots(A), poly_from_roots(B)
print("# ideal-poly difference coefficients (Z^0..Z^3):", [str(x - y) for x, y in zip(pa, pb)])


def family6_normalized(m, n):
    a = [-3 * m * m + 7 * n * m - 2 * n * n + 1, -2 * m * m + 8 * n * m + 2 * n * n + 1, -m * m - n * n + 1,
         2 * m * m + 3 * n * m + n * n + 1, m * m + 2 * n * m - 3 * n * n + 1, 10 * m * n + 1]
    b = [-3 * m * m + 8 * n * m + n * n + 1, -2 * m * m + 3 * n * m - 3 * n * n + 1, -m * m + 10 * n * m - n * n + 1,
         2 * m * m + 2 * n * m - 2 * n * n + 1, m * m + 7 * n * m + 2 * n * n + 1]
    return a, b


a, b = family6_normalized(1, 2)
print("# family6 normalized m=1,n=2:", a, b, sum(a), sum(b) + 1)
a, b = family6_normalized(1, 1)
print("# family6 normalized m=n=1 degenerate:", sorted(a) == sorted(b + [1]))
for e in range(1, 6):
    a, b = family6_normalized(Fraction(2, 3), Fraction(-5, 7))
    assert sum(x ** e for x in a) == sum(x ** e for x in b + [1])
print("# family6 normalized m=2/3,n=-5/7 is degree-5 ideal")

KA = [22, 61, 86, 127, 140, 151]
KB = [35, 47, 94, 121, 146, 148]
A12 = [s * k for k in KA for s in (1, -1)]
B12 = [s * k for k in KB for s in (1, -1)]
print("# Kuosa sets e=1..12 agree:", [sum(x ** e for x in A12) == sum(x ** e for x in B12) for e in range(1, 13)])

# small multisets: check_pte(k=m-1) <=> constant difference
agree = 0
for A in product(range(-2, 3), repeat=3):
    for B in product(range(-2, 3), repeat=3):
        pte = all(sum(x ** e for x in A) == sum(x ** e for x in B) for e in (1, 2))
        d = [x - y for x, y in zip(poly_from_roots(A), poly_from_roots(B))]
        const = all(c == 0 for c in d[1:])
        assert pte == const
        agree += 1
print("# criteria agree on", agree, "pairs")
