#!/usr/bin/env python3
"""Independent high-precision reference values for the C++ test suites.

Everything here is evaluated with mpmath (40 significant digits) straight
from the closed-form physics, sharing no code with the library. Run from the
repository root:

    python3 tests/oracle/generate_golden.py

It rewrites tests/data/bessel_reference.csv, tests/data/golden/fig*.csv and
prints the scalar constants that are frozen into the unit tests.
"""
import csv
import os
import random

import mpmath as mp

mp.mp.dps = 40
I = mp.mpc(0, 1)
HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")


def jn(n, z):
    z = mp.mpc(z)
    if z == 0:
        return mp.mpc(1) if n == 0 else mp.mpc(0)
    return mp.sqrt(mp.pi / (2 * z)) * mp.besselj(n + mp.mpf(1) / 2, z)


def yn(n, z):
    z = mp.mpc(z)
    return mp.sqrt(mp.pi / (2 * z)) * mp.bessely(n + mp.mpf(1) / 2, z)


def hn(n, z):
    return jn(n, z) + I * yn(n, z)


def riccati(f, n, z):
    # (1/z) d[z f_n(z)]/dz via the lowering identity f_{n-1} - n f_n / z
    if n == 0:
        return f(0, z) / z - f(1, z)
    return f(n - 1, z) - n * f(n, z) / z


def legendre(n, m, x):
    # associated Legendre function without the Condon-Shortley phase
    return (-1) ** m * mp.legenp(n, m, x)


def fmt(x, digits=17):
    return mp.nstr(x, digits, min_fixed=-mp.inf, max_fixed=mp.inf)


def cfmt(z):
    z = mp.mpc(z)
    return "Complex{%s, %s}" % (fmt(z.real), fmt(z.imag))


# ---------------------------------------------------------------- Bessel table
def bessel_table():
    rng = random.Random(20240611)
    points = [mp.mpc(1, 0), mp.mpc(0.5, 0), mp.mpc(2, 1), mp.mpc(1e-3, 0),
              mp.mpc(5, 2), mp.mpc(0.3, 0.05), mp.mpc(12.5, 0.4),
              mp.mpc(3.14159, 0), mp.mpc(0.05, 0.01), mp.mpc(18, 6),
              mp.mpc(0.7, 3.5), mp.mpc(40, 1)]
    for _ in range(12):
        r = 10 ** rng.uniform(-1, mp.log10(20))
        t = rng.uniform(0, float(mp.pi) / 2)
        points.append(mp.mpc(r * mp.cos(t), r * mp.sin(t)))
    orders = [0, 1, 2, 3, 5, 8, 13, 21, 34, 64]
    path = os.path.join(DATA, "bessel_reference.csv")
    with open(path, "w", newline="\n") as fh:
        fh.write("# spherical Bessel reference values, mpmath 40 digits\n")
        fh.write("n,z_re,z_im,j_re,j_im,h_re,h_im\n")
        for z in points:
            for n in orders:
                j = jn(n, z)
                h = hn(n, z)
                if abs(h) > mp.mpf("1e250"):
                    continue
                fh.write(",".join([str(n), fmt(z.real), fmt(z.imag), fmt(j.real), fmt(j.imag),
                                   fmt(h.real), fmt(h.imag)]) + "\n")
    print("wrote", path)


# ------------------------------------------------------------------- dielectric
def eps_paper(w, wp, g, wt=1):
    return 1 + mp.mpf(wp) ** 2 / (wt ** 2 - mp.mpf(w) ** 2 - I * g * wt)


def sqrt_branch(e):
    n = mp.sqrt(mp.mpc(e))
    if n.imag < 0:
        n = -n
    return n


# -------------------------------------------------------------------- bulk Green
def green_long(rv, omega, eps):
    rho = mp.sqrt(sum(x ** 2 for x in rv))
    pre = -1 / (4 * mp.pi * omega ** 2 * eps)
    return [[pre * ((1 if a == b else 0) - 3 * rv[a] * rv[b] / rho ** 2) / rho ** 3 for b in range(3)]
            for a in range(3)]


def green_trans(rv, omega, eps):
    rho = mp.sqrt(sum(x ** 2 for x in rv))
    k = sqrt_branch(eps) * omega
    x = k * rho
    pre = 1 / (4 * mp.pi * omega ** 2 * eps)
    out = []
    for a in range(3):
        row = []
        for b in range(3):
            d = 1 if a == b else 0
            pp = rv[a] * rv[b] / rho ** 2
            static = (d - 3 * pp) / rho ** 3
            dyn = k ** 3 * ((1 / x + I / x ** 2 - 1 / x ** 3) * d
                            - (1 / x + 3 * I / x ** 2 - 3 / x ** 3) * pp) * mp.exp(I * x)
            row.append(pre * (static + dyn))
        out.append(row)
    return out


# ------------------------------------------------------------- sphere / Mie
def c1n_closed(eps, z):
    n = sqrt_branch(eps)
    num = (I + z * (n + 1) - I * z ** 2 * n - z ** 3 * n ** 2 / (n + 1)) * mp.exp(I * z)
    den = (mp.sin(z) - z * (mp.cos(z) + I * n * mp.sin(z)) + I * z ** 2 * n * mp.cos(z)
           - z ** 3 * (mp.cos(z) - I * n * mp.sin(z)) * n ** 2 / (n ** 2 - 1))
    return num / den


def reflection(order, eps, z):
    """TE/TM reflection amplitudes for a source inside an empty sphere, from
    continuity of tangential E and H at r = R (cavity index 0, medium 1)."""
    k0 = mp.mpf(1)
    k1 = sqrt_branch(eps)
    R = z
    j0, h0, h1 = jn(order, k0 * R), hn(order, k0 * R), hn(order, k1 * R)
    dj0, dh0, dh1 = riccati(jn, order, k0 * R), riccati(hn, order, k0 * R), riccati(hn, order, k1 * R)
    cn = (k0 * h0 * dh1 - k1 * h1 * dh0) / (k1 * h1 * dj0 - k0 * j0 * dh1)
    cm = (k0 * dh0 * h1 - k1 * h0 * dh1) / (k1 * j0 * dh1 - k0 * dj0 * h1)
    return cm, cn


def debye(kind, parity, n, m, r, th, ph, k):
    x = k * r
    ct, st = mp.cos(th), mp.sin(th)
    P = legendre(n, m, ct)
    dP = mp.diff(lambda t: legendre(n, m, mp.cos(t)), th)
    mPs = m * P / st
    c, s = mp.cos(m * ph), mp.sin(m * ph)
    even = parity == "e"
    if kind == "M":
        j = jn(n, x)
        if even:
            return [0, -mPs * j * s, -j * dP * c]
        return [0, mPs * j * c, -j * dP * s]
    j = jn(n, x)
    rj = riccati(jn, n, x)
    if even:
        return [n * (n + 1) * j / x * P * c, rj * dP * c, -rj * mPs * s]
    return [n * (n + 1) * j / x * P * s, rj * dP * s, rj * mPs * c]


def to_cart(v, th, ph):
    ct, st, cp, sp = mp.cos(th), mp.sin(th), mp.cos(ph), mp.sin(ph)
    er = [st * cp, st * sp, ct]
    et = [ct * cp, ct * sp, -st]
    ep = [-sp, cp, 0]
    return [v[0] * er[i] + v[1] * et[i] + v[2] * ep[i] for i in range(3)]


def scattering_green(p1, p2, omega, eps, R, nmax):
    z = omega * R
    G = [[mp.mpc(0)] * 3 for _ in range(3)]
    for n in range(1, nmax + 1):
        cm, cn = reflection(n, eps, z)
        for m in range(0, n + 1):
            w = mp.mpf(2 * n + 1) / (n * (n + 1)) * mp.factorial(n - m) / mp.factorial(n + m) * (1 if m == 0 else 2)
            for par in ("e", "o"):
                M1 = to_cart(debye("M", par, n, m, *p1, omega), p1[1], p1[2])
                M2 = to_cart(debye("M", par, n, m, *p2, omega), p2[1], p2[2])
                N1 = to_cart(debye("N", par, n, m, *p1, omega), p1[1], p1[2])
                N2 = to_cart(debye("N", par, n, m, *p2, omega), p2[1], p2[2])
                for a in range(3):
                    for b in range(3):
                        G[a][b] += w * (cm * M1[a] * M2[b] + cn * N1[a] * N2[b])
    pre = I * omega / (4 * mp.pi)
    return [[pre * G[a][b] for b in range(3)] for a in range(3)]


# ------------------------------------------------------------------- rates
def rates(eps, z):
    eps = mp.mpc(eps)
    n = sqrt_branch(eps)
    eta, kap = n.real, n.imag
    er, ei = eps.real, eps.imag
    iz = 1 / z
    par = 4 * ei / (27 * abs(eps) ** 2) * iz ** 3
    perp = (eta * (abs((eps + 2) / 3) ** 2 - 2 * ei ** 2 / 9)
            + ei * (er + 2) * (mp.mpf(8) / 15 * iz - mp.mpf(2) / 9 * kap)
            + 25 * ei / 54 * iz ** 3)
    a2 = abs(2 * eps + 1) ** 2
    e2 = abs(eps) ** 2
    r3 = 9 * ei / a2 * iz ** 3
    r1 = 9 * ei * (28 * e2 + 16 * er + 1) / (5 * a2 ** 2) * iz
    r0 = (9 * eta * (4 * e2 ** 2 + 4 * er * e2 + er ** 2 - ei ** 2) / a2 ** 2
          - 9 * kap * ei * (4 * e2 + 2 * er) / a2 ** 2)
    gl = 1 + c1n_closed(eps, z).real if abs(eps - 1) > mp.mpf("1e-8") else mp.mpf(1)
    return dict(gl=gl, glx=r3 + r1 + r0, cm=par + perp, perp=perp, par=par, eta=eta, kappa=kap)


PRESETS = {
    1: (0.05, 0.02, (0.9, 1.3)),
    2: (0.05, 0.02, (0.2, 0.9)),
    3: (0.2, 0.02, (0.9, 1.3)),
    4: (0.2, 0.02, (0.2, 0.9)),
    5: (0.05, 0.2, (0.9, 1.3)),
    6: (0.2, 0.2, (0.9, 1.3)),
}
FIELDS = ["omega_over_omegaT", "eps_re", "eps_im", "eta", "kappa", "gamma_gl_exact", "gamma_gl_expanded",
          "gamma_cm_total", "gamma_cm_perp", "gamma_cm_par", "baseline_gl", "baseline_cm", "markov_flag"]


def figure_tables(count=600):
    mp.mp.dps = 30
    for fig, (gamma, frac, (lo, hi)) in PRESETS.items():
        z = 2 * mp.pi * mp.mpf(frac)
        flag = 0 if z <= 0.5 else (1 if z <= 1 else 2)
        path = os.path.join(DATA, "golden", "fig%d.csv" % fig)
        with open(path, "w", newline="\n") as fh:
            fh.write(",".join(FIELDS) + "\n")
            for i in range(count):
                # same node placement as the C++ grid: start + i*(stop-start)/(count-1)
                w = float(lo) + i * ((float(hi) - float(lo)) / (count - 1)) if i < count - 1 else float(hi)
                w = mp.mpf(w)
                e = eps_paper(w, mp.mpf("0.46"), mp.mpf(gamma))
                r = rates(e, z)
                eta = r["eta"]
                base_gl = eta * (3 * eta ** 2 / (2 * eta ** 2 + 1)) ** 2
                base_cm = eta * ((eta ** 2 + 2) / 3) ** 2
                vals = [w, e.real, e.imag, eta, r["kappa"], r["gl"], r["glx"], r["cm"], r["perp"], r["par"],
                        base_gl, base_cm]
                fh.write(",".join(fmt(v) for v in vals) + ",%d\n" % flag)
        print("wrote", path)
    mp.mp.dps = 40


def scalars():
    print("// ---- specfun")
    print("j1(0.5) =", fmt(jn(1, 0.5)))
    print("h1(1) =", cfmt(hn(1, 1)))
    print("riccati J 1 0.5 =", fmt(riccati(jn, 1, mp.mpf("0.5")).real))
    print("P_2^1(0.5) =", fmt(legendre(2, 1, mp.mpf("0.5"))))
    print("// ---- dielectric")
    e_res = eps_paper(1, mp.mpf("0.46"), mp.mpf("0.05"))
    print("eps(omega_T) =", cfmt(e_res))
    e0 = eps_paper(mp.mpf("1e-9"), mp.mpf("0.46"), mp.mpf("0.05"))
    print("eps(0+) =", cfmt(e0), "|eps(0+)| =", fmt(abs(e0)))
    n = sqrt_branch(mp.mpc(1, "4.232"))
    print("n(1+4.232i) =", cfmt(n))
    print("omega_L =", fmt(mp.sqrt(1 + mp.mpf("0.46") ** 2)))
    print("// ---- bulk Green, eps = 2+0.5i, omega = 1")
    eps = mp.mpc(2, 0.5)
    gl = green_long([mp.mpf("0.5"), 0, 0], 1, eps)
    print("G_long(0.5 x) xx =", cfmt(gl[0][0]), " yy =", cfmt(gl[1][1]))
    gt = green_trans([mp.mpf(1), 0, 0], 1, eps)
    print("G_trans(1.0 x) xx =", cfmt(gt[0][0]), " yy =", cfmt(gt[1][1]))
    rv = [mp.mpf("0.3"), mp.mpf("-0.4"), mp.mpf("0.5")]
    gt = green_trans(rv, 1, eps)
    for a in range(3):
        print("G_trans(0.3,-0.4,0.5) row", a, ", ".join(cfmt(v) for v in gt[a]))
    print("// ---- sphere")
    cm, cn = reflection(2, mp.mpc(2, 0.5), mp.mpf("0.3"))
    print("order2 eps=2+0.5i z=0.3: cM =", cfmt(cm), " cN =", cfmt(cn))
    cm1, cn1 = reflection(1, mp.mpc(2, 0.5), mp.mpf("0.3"))
    print("order1 eps=2+0.5i z=0.3: cM =", cfmt(cm1), " cN =", cfmt(cn1))
    zf = 2 * mp.pi * mp.mpf("0.02")
    c = c1n_closed(mp.mpc(1, "4.232"), zf)
    print("C1N(1+4.232i, 2pi*0.02) =", cfmt(c), " gamma_gl =", fmt(1 + c.real))
    print("C1N(2, 1e-2) =", cfmt(c1n_closed(mp.mpf(2), mp.mpf("1e-2"))))
    print("// ---- rates")
    n = sqrt_branch(mp.mpc(1, "4.232"))
    print("abs_cm =", fmt(abs((n ** 2 + 2) / 3) ** 2), " abs_gl =", fmt(abs(3 * n ** 2 / (2 * n ** 2 + 1)) ** 2))
    print("// ---- off-centre scattering Green, eps = 2+0.5i, omega = 1, R = 0.5")
    p1 = (mp.mpf("0.12"), mp.mpf("0.7"), mp.mpf("0.4"))
    p2 = (mp.mpf("0.2"), mp.mpf("2.1"), mp.mpf("-1.3"))
    G = scattering_green(p1, p2, 1, mp.mpc(2, 0.5), mp.mpf("0.5"), 12)
    for a in range(3):
        print("Gs row", a, ", ".join(cfmt(v) for v in G[a]))


if __name__ == "__main__":
    bessel_table()
    scalars()
    figure_tables()
