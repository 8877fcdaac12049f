#!/usr/bin/env python3
"""Regenerate uniform_coeffs.txt.

Builds the Maclaurin coefficients (in eta = 2^(-1/3) zeta) of the
turning-point quantities used by the Airy-type expansions of K_{ia}(az)
and L_{ia}(az):

    phi, chi = phi'/phi, a_s, b_s, c_s, d_s   (s = 0..3)

plus the inverse map eta(w), w = z - 1, used to evaluate zeta near z = 1.

Method: z(eta) is obtained by solving 2 eta (d eta/dz)^2 = (1 - z^2)/z^2
order by order; the Liouville transform then gives

    V'' = (-a^2 zeta + psi(zeta)) V,
    psi = zdot^2 g(z) + |zdot|^(1/2) (|zdot|^(-1/2))'',  g = -1/(4 z^2),

and the Airy-type ansatz V = Ai(-a^(2/3) zeta) F + a^(-4/3) Ai'(...) G with
F = sum A_s a^(-2s), G = sum B_s a^(-2s) leads to

    2 zeta B_s' + B_s = psi A_s - A_s'',   A_{s+1}' = (B_s'' - psi B_s)/2.

The integration constants A_s(0) are fixed by F P - G Q / a^2 = 1.
Output uses the sign convention F = sum (-1)^s a_s / a^(2s), i.e.
a_s = (-1)^s A_s, b_s = (-1)^s B_s.

Usage: python3 gen_uniform_coeffs.py > uniform_coeffs.txt
Requires mpmath. Runtime is a few seconds.
"""
from mpmath import mp, mpf, cbrt, sqrt, nstr

mp.dps = 60
N = 90        # Taylor terms in eta
NW = 45       # Taylor terms of eta(w)


def mul(a, b, n=None):
    n = n or len(a)
    r = [mpf(0)] * n
    for i in range(n):
        if a[i] == 0:
            continue
        for j in range(n - i):
            r[i + j] += a[i] * b[j]
    return r


def inv(a):
    n = len(a)
    r = [mpf(0)] * n
    r[0] = 1 / a[0]
    for k in range(1, n):
        r[k] = -sum(a[j] * r[k - j] for j in range(1, k + 1)) / a[0]
    return r


def powr(a, p):
    n = len(a)
    r = [mpf(0)] * n
    r[0] = a[0] ** p
    for k in range(1, n):
        s = mpf(0)
        for j in range(1, k + 1):
            s += (p * j - (k - j)) * a[j] * r[k - j]
        r[k] = s / (k * a[0])
    return r


def der(a):
    return [(k + 1) * a[k + 1] for k in range(len(a) - 1)] + [mpf(0)]


def integ(a, c0):
    return [c0] + [a[k - 1] / k for k in range(1, len(a))]


def sc(a, s):
    return [s * v for v in a]


def add(*xs):
    return [sum(v) for v in zip(*xs)]


def shift(a):
    return [mpf(0)] + a[:-1]


M = N + 6  # guard terms, derivatives eat from the top
one = [mpf(1)] + [mpf(0)] * (M - 1)

# w = z - 1 = eta * v(eta), v(0) = -1
v = [mpf(0)] * M
v[0] = mpf(-1)
for n in range(1, M):
    ev = shift(v)
    vp = add(v, shift(der(v)))
    res = add(mul(mul(mul(vp, vp), sc(v, -1)), add(sc(one, 2), ev)),
              sc(mul(add(one, ev), add(one, ev)), -2))
    v[n] = res[n] / (4 * n + 6)
w = shift(v)
z = add(one, w)

c = cbrt(2)
D = lambda s: sc(der(s), 1 / c)          # d/dzeta
zeta = sc(shift(one), c)
adz = sc(D(z), -1)                        # |dz/dzeta|
g = sc(inv(mul(z, z)), mpf(-1) / 4)
psi = add(mul(mul(adz, adz), g),
          mul(powr(adz, mpf(1) / 2), D(D(powr(adz, mpf(-1) / 2)))))
phi = sc(powr(mul(adz, inv(z)), mpf(1) / 2), sqrt(2))
chi = mul(D(phi), inv(phi))

A = [one]
B = []


def next_b(As):
    rhs = add(mul(psi, As), sc(D(D(As)), -1))
    return [rhs[n] / (2 * n + 1) for n in range(M)]


def next_a(Bs):
    dA = sc(add(D(D(Bs)), sc(mul(psi, Bs), -1)), c / 2)   # dA/deta
    return integ(dA, mpf(0))


B.append(next_b(A[0]))
A.append(next_a(B[0]))


def p_coef(j):
    if j == 0:
        return A[0]
    return add(A[j], sc(add(mul(chi, B[j - 1]), D(B[j - 1])), -1))


def q_coef(j):
    return add(sc(mul(chi, A[j]), -1), sc(D(A[j]), -1), sc(mul(zeta, B[j]), -1))


def identity_order(s):
    tot = [mpf(0)] * M
    for i in range(s + 1):
        tot = add(tot, mul(A[i], p_coef(s - i)))
    for i in range(s):
        tot = add(tot, sc(mul(B[i], q_coef(s - 1 - i)), -1))
    return tot


for s in range(1, 4):
    # A_s(0) enters twice (F and P) at order s
    A[s][0] += -identity_order(s)[0] / 2
    B.append(next_b(A[s]))
    if s < 3:
        A.append(next_a(B[s]))

for s in range(1, 4):
    err = max(abs(t) for t in identity_order(s)[:N])
    assert err < mpf(10) ** -40, (s, err)

sgn = lambda s: mpf(-1) ** s
a_s = [sc(A[s], sgn(s)) for s in range(4)]
b_s = [sc(B[s], sgn(s)) for s in range(4)]
c_s = []
d_s = []
for s in range(4):
    cs = a_s[s]
    if s > 0:
        cs = add(cs, mul(chi, b_s[s - 1]), D(b_s[s - 1]))
    c_s.append(cs)
    d_s.append(add(sc(mul(chi, a_s[s]), -1), sc(D(a_s[s]), -1), sc(mul(zeta, b_s[s]), -1)))

# eta(w): revert w(eta) = -eta + ...
wser = w[:NW]
eta_w = [mpf(0)] * NW
eta_w[1] = 1 / wser[1]
for n in range(2, NW):
    # coefficient n of w(eta(w)) must vanish
    comp = [mpf(0)] * NW
    pw = [mpf(0)] * NW
    pw[0] = mpf(1)
    for k in range(1, NW):
        pw = mul(pw, eta_w, NW)
        comp = add(comp, sc(pw, wser[k]))
    eta_w[n] = -comp[n] / wser[1]


def emit(name, ser, n):
    print("[%s]" % name)
    for k in range(n):
        print(nstr(ser[k], 20, min_fixed=1, max_fixed=0, strip_zeros=False))


print("# Maclaurin coefficients in eta = 2^(-1/3) zeta, 20 significant digits.")
print("# Generated by gen_uniform_coeffs.py; do not edit by hand.")
print("# terms %d" % N)
emit("phi", phi, N)
emit("chi", chi, N)
for s in range(4):
    emit("a %d" % s, a_s[s], N)
    emit("b %d" % s, b_s[s], N)
    emit("c %d" % s, c_s[s], N)
    emit("d %d" % s, d_s[s], N)
emit("eta_of_w", eta_w, NW)
