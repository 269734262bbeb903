"""Arbitrary-precision reference evaluation of the rate-region formulas.

Used once to produce the frozen expected values in tests/unit/*.cpp.
Written straight from the closed forms, independent of the C++ code.
"""
from mpmath import mp, mpf, log, sqrt, pi, e

mp.dps = 40


def lg(x):
    return log(x, 2)


def half_log(x):
    return lg(x) / 2


class Ch:
    def __init__(self, s1, s2, i12, i21, f1, f2):
        self.snr = {1: mpf(s1), 2: mpf(s2)}
        self.inr = {(1, 2): mpf(i12), (2, 1): mpf(i21)}
        self.fb = {1: mpf(f1), 2: mpf(f2)}


def other(i):
    return 2 if i == 1 else 1


def b1(c, i, rho):
    j = other(i)
    return c.snr[i] + 2 * rho * sqrt(c.snr[i] * c.inr[(i, j)]) + c.inr[(i, j)]


def b2(c, i, rho):
    j = other(i)
    return (1 - rho) * c.inr[(i, j)] - 1


def a(c, l, i, rho, mu=None, mu1=None, mu2=None):
    j = other(i)
    r = c.snr[i] / c.inr[(j, i)]
    if l == 1:
        return half_log(2 + r) - mpf(1) / 2
    if l == 2:
        return half_log(b1(c, i, rho) + 1) - mpf(1) / 2
    if l == 3:
        num = c.fb[i] * (b2(c, i, rho) + 2) + b1(c, i, 1) + 1
        den = c.fb[i] * ((1 - mu) * b2(c, i, rho) + 2) + b1(c, i, 1) + 1
        return half_log(num / den)
    if l == 4:
        return half_log((1 - mu) * b2(c, i, rho) + 2) - mpf(1) / 2
    if l == 5:
        return half_log(2 + r + (1 - mu) * b2(c, i, rho)) - mpf(1) / 2
    if l == 6:
        return half_log(r * ((1 - mu) * b2(c, j, rho) + 1) + 2) - mpf(1) / 2
    if l == 7:
        mui = mu1 if i == 1 else mu2
        muj = mu2 if i == 1 else mu1
        return half_log(r * ((1 - mui) * b2(c, j, rho) + 1) + (1 - muj) * b2(c, i, rho) + 2) - mpf(1) / 2


def thm1(c, rho, m1, m2):
    A = lambda l, i, **kw: max(a(c, l, i, rho, **kw), 0)
    a11, a12 = A(1, 1), A(1, 2)
    a21, a22 = A(2, 1), A(2, 2)
    a31, a32 = A(3, 1, mu=m2), A(3, 2, mu=m1)
    a41, a42 = A(4, 1, mu=m2), A(4, 2, mu=m1)
    a51, a52 = A(5, 1, mu=m2), A(5, 2, mu=m1)
    a61, a62 = A(6, 1, mu=m1), A(6, 2, mu=m2)
    a71, a72 = A(7, 1, mu1=m1, mu2=m2), A(7, 2, mu1=m1, mu2=m2)
    r1 = min(a21, a61 + a32, a11 + a32 + a42)
    r2 = min(a22, a31 + a62, a31 + a41 + a12)
    s = min(a21 + a12, a11 + a22, a31 + a11 + a32 + a72, a31 + a51 + a32 + a52, a31 + a71 + a32 + a12)
    t1 = min(a21 + a11 + a32 + a72, a31 + a11 + a71 + 2 * a32 + a52, a21 + a11 + a32 + a52)
    t2 = min(a31 + a51 + a22 + a12, a31 + a71 + a22 + a12, 2 * a31 + a51 + a32 + a12 + a72)
    return r1, r2, s, t1, t2


def b4(c, i, rho):
    return (1 - rho ** 2) * c.snr[i]


def b5(c, i, rho):
    j = other(i)
    return (1 - rho ** 2) * c.inr[(i, j)]


def kappa(c, rho):
    out = {}
    for i in (1, 2):
        j = other(i)
        out['k1_%d' % i] = half_log(b1(c, i, rho) + 1)
        out['k2_%d' % i] = half_log(1 + b5(c, j, rho)) + half_log(1 + b4(c, i, rho) / (1 + b5(c, j, rho)))
        out['k3_%d' % i] = half_log((b4(c, i, rho) + b5(c, j, rho) + 1) * c.fb[j]
                                    / ((b1(c, j, 1) + 1) * (b4(c, i, rho) + 1)) + 1) + half_log(b4(c, i, rho) + 1)
    out['k4'] = half_log(1 + b4(c, 1, rho) / (1 + b5(c, 2, rho))) + half_log(b1(c, 2, rho) + 1)
    out['k5'] = half_log(1 + b4(c, 2, rho) / (1 + b5(c, 1, rho))) + half_log(b1(c, 1, rho) + 1)
    return out


def b3(c, i):
    j = other(i)
    return c.snr[i] - 2 * sqrt(c.snr[i] * c.inr[(j, i)]) + c.inr[(j, i)]


def b6(c, i, rho):
    j = other(i)
    s, iij, iji = c.snr[i], c.inr[(i, j)], c.inr[(j, i)]
    return s + iij + 2 * rho * sqrt(iij) * (sqrt(s) - sqrt(iji)) + iij * sqrt(iji) / s * (sqrt(iji) - 2 * sqrt(s))


def scenario(c, i):
    j = other(i)
    s, iij, iji = c.snr[j], c.inr[(i, j)], c.inr[(j, i)]
    if s < min(iij, iji):
        return 1
    if iji <= s < iij:
        return 2
    if iij <= s < iji:
        return 3
    if max(iij, iji) <= s < iij * iji:
        return 4
    return 5


def k6(c, rho):
    L = lg(2 * pi * e)
    s1, s2 = c.snr[1], c.snr[2]
    i12, i21 = c.inr[(1, 2)], c.inr[(2, 1)]
    f1, f2 = c.fb[1], c.fb[2]
    b51, b52 = b5(c, 1, rho), b5(c, 2, rho)
    b11, b12 = b1(c, 1, rho), b1(c, 2, rho)
    b11_1, b12_1 = b1(c, 1, 1), b1(c, 2, 1)
    b31, b32 = b3(c, 1), b3(c, 2)
    b61, b62 = b6(c, 1, rho), b6(c, 2, rho)
    k61 = (half_log(b11 + b51 * i21) - half_log(1 + i12) + half_log(1 + b52 * f2 / (b12_1 + 1))
           + half_log(b12 + b51 * i21) - half_log(1 + i21) + half_log(1 + b51 * f1 / (b11_1 + 1)) + L)
    k62 = (half_log(b62 + b51 * i21 / s2 * (s2 + b32)) - half_log(1 + i12)
           + half_log(1 + b51 * f1 / (b11_1 + 1)) + half_log(b11 + b51 * i21) - half_log(1 + i21)
           + half_log(1 + b52 / s2 * (i12 + b32 * f2 / (b12_1 + 1))) - half_log(1 + b51 * i21 / s2) + L)
    k63 = (half_log(b61 + b51 * i21 / s1 * (s1 + b31)) - half_log(1 + i12)
           + half_log(1 + b52 * f2 / (b12_1 + 1)) + half_log(b12 + b51 * i21) - half_log(1 + i21)
           + half_log(1 + b51 / s1 * (i21 + b31 * f1 / (b11_1 + 1))) - half_log(1 + b51 * i21 / s1) + L)
    k64 = (half_log(b61 + b51 * i21 / s1 * (s1 + b31)) - half_log(1 + i12) - half_log(1 + i21)
           + half_log(1 + b52 / s2 * (i12 + b32 * f2 / (b12_1 + 1))) - half_log(1 + b51 * i21 / s2)
           - half_log(1 + b51 * i21 / s1) + half_log(b62 + b51 * i21 / s2 * (s2 + b32))
           + half_log(1 + b51 / s1 * (i21 + b31 * f1 / (b11_1 + 1))) + L)
    g1 = scenario(c, 1) in (3, 4)
    g2 = scenario(c, 2) in (3, 4)
    if not g2 and not g1:
        return k61, 1
    if not g2 and g1:
        return k62, 2
    if g2 and not g1:
        return k63, 3
    return k64, 4


def k7(c, i, rho):
    L = lg(2 * pi * e)
    j = other(i)
    iij, iji = c.inr[(i, j)], c.inr[(j, i)]
    sj, fj = c.snr[j], c.fb[j]
    b1j_1 = b1(c, j, 1)
    if scenario(c, i) in (3, 4):
        v = (half_log(b1(c, i, rho) + 1) - half_log(1 + iij) - half_log(1 + b5(c, j, rho))
             + half_log(1 + b4(c, i, rho) + b5(c, j, rho))
             + half_log(1 + (1 - rho ** 2) * iji / sj * (iij + b3(c, j) * fj / (b1j_1 + 1)))
             - half_log(1 + b5(c, i, rho) * iji / sj)
             + half_log(b6(c, j, rho) + b5(c, i, rho) * iji / sj * (sj + b3(c, j))) + 2 * L)
        return v, 2
    v = (half_log(b1(c, i, rho) + 1) - half_log(1 + iij) + half_log(1 + b5(c, j, rho) * fj / (b1j_1 + 1))
         + half_log(b1(c, j, rho) + b5(c, i, rho) * iji) + half_log(1 + b4(c, i, rho) + b5(c, j, rho))
         - half_log(1 + b5(c, j, rho)) + 2 * L)
    return v, 1


if __name__ == '__main__':
    c = Ch(100, 100, 10, 10, 100, 100)
    z = mpf(0)
    for l in range(1, 8):
        print('a%d' % l, mp.nstr(a(c, l, 1, z, mu=z, mu1=z, mu2=z), 15))
    print('thm1', [mp.nstr(v, 15) for v in thm1(c, z, z, z)])
    print('kappa', {k: mp.nstr(v, 15) for k, v in kappa(c, z).items()})
    print('log2(2 pi e)', mp.nstr(lg(2 * pi * e), 15))
    c = Ch(4, 9, 4, 4, 17, 26)
    print('asym thm1 (0.3,0.2,0.7)', [mp.nstr(v, 15) for v in thm1(c, mpf('0.3'), mpf('0.2'), mpf('0.7'))])
    print('asym kappa 0.4', {k: mp.nstr(v, 15) for k, v in kappa(c, mpf('0.4')).items()})

    for ch in [(100, 100, 10, 10, 100, 100), (1000, 100, 20, 30, 50, 80), (100, 1000, 20, 30, 50, 80),
               (100, 100, 20, 30, 50, 80), (4, 9, 4, 4, 17, 26)]:
        c = Ch(*ch)
        for rho in (mpf(0), mpf('0.35')):
            v6, br6 = k6(c, rho)
            v71, br71 = k7(c, 1, rho)
            v72, br72 = k7(c, 2, rho)
            print(ch, mp.nstr(rho, 3), 'S', scenario(c, 1), scenario(c, 2), 'k6_%d' % br6, mp.nstr(v6, 15),
                  'k7_1_%d' % br71, mp.nstr(v71, 15), 'k7_2_%d' % br72, mp.nstr(v72, 15),
                  'k3', mp.nstr(kappa(c, rho)['k3_1'], 15), mp.nstr(kappa(c, rho)['k3_2'], 15))
