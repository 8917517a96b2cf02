"""Generate Chebyshev coefficients for the large-argument Bessel modulus/phase
functions used by the real-axis evaluation path.

For real x >= X_MIN and order nu in {0, 1}:

    H1_nu(x) = sqrt(2/(pi*x)) * (P_nu(x) + i*Q_nu(x)) * exp(i*omega_nu),
    omega_nu = x - nu*pi/2 - pi/4.

P_nu and x*Q_nu are smooth functions of v = (X_MIN/x)^2 on (0, 1]; fit them
with Chebyshev series in u = 2v - 1 using high-precision reference values.

Run:  python tools/gen_bessel_pq.py  > src/helmbie/_pq_coeffs.py
"""

import mpmath as mp

mp.mp.dps = 60

X_MIN = 9.0
DEGREE = 34


def pq_exact(nu, x):
    x = mp.mpf(x)
    omega = x - nu * mp.pi / 2 - mp.pi / 4
    h = mp.hankel1(nu, x)
    w = h * mp.sqrt(mp.pi * x / 2) * mp.e ** (-1j * omega)
    return w.real, w.imag


def cheb_fit(f, n):
    # Chebyshev interpolation on [0, 1] at n+1 Chebyshev points.
    nodes = [(mp.cos(mp.pi * (2 * j + 1) / (2 * (n + 1))) + 1) / 2 for j in range(n + 1)]
    vals = [f(t) for t in nodes]
    coeffs = []
    for m in range(n + 1):
        s = mp.mpf(0)
        for j, t in enumerate(nodes):
            u = 2 * t - 1
            s += vals[j] * mp.cos(m * mp.acos(u))
        c = 2 * s / (n + 1)
        if m == 0:
            c /= 2
        coeffs.append(c)
    return coeffs


def cheb_eval(coeffs, t):
    u = 2 * t - 1
    b0, b1 = mp.mpf(0), mp.mpf(0)
    for c in reversed(coeffs):
        b0, b1 = 2 * u * b0 - b1 + c, b0
    return b0 - u * b1  # == sum c_m T_m(u) given the recurrence above


def x_of_v(v):
    if v == 0:
        return mp.inf
    return X_MIN / mp.sqrt(v)


def gen(nu):
    def pfun(v):
        if v == 0:
            return mp.mpf(1)
        return pq_exact(nu, x_of_v(v))[0]

    def qfun(v):  # x * Q_nu(x)
        if v == 0:
            return mp.mpf(4 * nu * nu - 1) / 8
        x = x_of_v(v)
        return pq_exact(nu, x)[1] * x

    pc = cheb_fit(pfun, DEGREE)
    qc = cheb_fit(qfun, DEGREE)

    # residual check on a dense grid
    errp = errq = mp.mpf(0)
    for i in range(1, 400):
        v = mp.mpf(i) / 400
        x = x_of_v(v)
        p, q = pq_exact(nu, x)
        errp = max(errp, abs(cheb_eval(pc, v) - p))
        errq = max(errq, abs(cheb_eval(qc, v) - q * x))
    return pc, qc, errp, errq


def fmt(arr, name):
    body = ",\n    ".join(mp.nstr(c, 20) for c in arr)
    return f"{name} = np.array([\n    {body},\n])\n"


if __name__ == "__main__":
    out = ['"""Frozen Chebyshev coefficients for large-argument Bessel evaluation.',
           "",
           "Generated by tools/gen_bessel_pq.py; do not edit by hand.",
           '"""', "", "import numpy as np", "",
           f"PQ_X_MIN = {X_MIN}", ""]
    import sys
    for nu in (0, 1):
        pc, qc, errp, errq = gen(nu)
        print(f"# nu={nu}: max |P err| = {mp.nstr(errp, 3)}, max |xQ err| = {mp.nstr(errq, 3)}",
              file=sys.stderr)
        out.append(fmt(pc, f"P{nu}_CHEB"))
        out.append(fmt(qc, f"XQ{nu}_CHEB"))
    print("\n".join(out))
