#!/usr/bin/env python3
"""Extended-precision oracle for the constants frozen into the C++ tests.

Every quantity is evaluated from first principles (Cartesian geometry,
brute-force sums, quadrature, quadratic formula) with 40-digit arithmetic.
Run: python3 tests/oracles/frozen_values.py
"""
from mpmath import mp, mpf, sqrt, atan, atan2, tan, cos, sin, asin, pi, log10, floor, quad, radians

mp.dps = 40
LAM = mpf("0.01")
D_SP = LAM / 2
G0 = mpf(10) ** 5


def arc_from_aperture_support(D, L):
    r0 = (4 * L * L + D * D) / (8 * L)
    alpha = 4 * atan(2 * L / D)
    eps_d = 2 * asin(D_SP / (2 * r0))
    M = 2 * int(floor(alpha / (2 * eps_d) + mpf("1e-9"))) + 1
    return r0, alpha, M, alpha / (M - 1)


def positions(r0, L, M, eps):
    h = (M - 1) // 2
    return [(r0 * cos(m * eps) - (r0 - L), r0 * sin(m * eps)) for m in range(-h, h + 1)]


def direct_snr(pos, r, th):
    qx, qy = r * cos(th), r * sin(th)
    return G0 * sum(1 / ((x - qx) ** 2 + (y - qy) ** 2) for x, y in pos)


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 20)}")


# radius/count constructor example
r0, M = mpf("80.125"), 10171
eps = 2 * asin(D_SP / (2 * r0))
alpha = (M - 1) * eps
show("rc.alpha", alpha)
show("rc.L", r0 * (1 - cos(alpha / 2)))
show("rc.D", 2 * r0 * sin(alpha / 2))

# aperture/support example (D=0.635, L=0.3)
r0, alpha, M, eps = arc_from_aperture_support(mpf("0.635"), mpf("0.3"))
show("fig2.r0", r0); show("fig2.alpha", alpha); print("fig2.M", M)
pos = positions(r0, mpf("0.3"), M, eps)
show("fig2.edge_dist_to_A", sqrt((pos[0][0] + r0 - mpf("0.3")) ** 2 + pos[0][1] ** 2))

# user arc coords at r=16, 30deg, r0=80.125, L=4
r, th = mpf(16), radians(30)
ax = -(mpf("80.125") - 4)
g = sqrt((r * cos(th) - ax) ** 2 + (r * sin(th)) ** 2)
show("uac.g", g); show("uac.sinphi", r * sin(th) / g)

# theorem-1 angle term at the spec's example point (sin(phi)=8/90.336)
x, y, L = mpf("90.336"), mpf("80.125"), mpf(4)
phi = asin(mpf(8) / x)
t = sqrt(L / (2 * y - L))
A = (x * x + y * y + 2 * x * y * cos(phi)) * t
B = 2 * x * y * sin(phi)
show("u.example", atan((A - B) / (x * x - y * y)) + atan((A + B) / (x * x - y * y)))

# quadrature of 1/(2+cos x) on [0, pi/2] and [0, pi]
show("int_2pcos_half", quad(lambda s: 1 / (2 + cos(s)), [0, pi / 2]))
show("int_2pcos_full", quad(lambda s: 1 / (2 + cos(s)), [0, pi]))

# M=3 hand instance, r0=10, lambda=0.01, r=20, theta=0
r0 = mpf(10); eps = 2 * asin(D_SP / (2 * r0)); alpha = 2 * eps
L = 2 * r0 * sin(alpha / 4) ** 2
show("m3.snr_over_g0", direct_snr(positions(r0, L, 3, eps), mpf(20), 0) / G0)

# ULA M=101, d=0.005, r=16, theta=0
show("ula101.snr", G0 * sum(1 / (mpf(16) ** 2 + (m * D_SP) ** 2) for m in range(-50, 51)))
xx = 101 * D_SP / (2 * 16)
show("ula101.closed", G0 / (D_SP * 16) * 2 * atan(xx))

# closed form vs direct at D=200, L=4, r=16, 30deg
r0, alpha, M, eps = arc_from_aperture_support(mpf(200), mpf(4))
print("d200.M", M)
show("d200.direct", direct_snr(positions(r0, mpf(4), M, eps), r, th))

# asymptote r=16, 30 deg, L=4
asym = G0 * pi / (D_SP * (r * cos(th) - 4))
show("asym.linear", asym); show("asym.db", 10 * log10(asym))

# power ratio fig2 r=5 theta=0 and UPD roots
D, L = mpf("0.635"), mpf("0.3")
show("pr.r5", (5 - L) ** 2 / (25 + D * D / 4))
# (r-L)^2 = 0.9 (r^2 + D^2/4)  ->  0.1 r^2 - 2L r + L^2 - 0.9 D^2/4 = 0
a, b, c = mpf("0.1"), -2 * L, L * L - mpf("0.9") * D * D / 4
show("upd.uaa0", (-b + sqrt(b * b - 4 * a * c)) / (2 * a))
# theta = pi/2: ((r - D/2)/(r + D/2))^2 = 0.9
k = sqrt(mpf("0.9"))
show("upd.90", (D / 2) * (1 + k) / (1 - k))
