"""Brute-force reference values for the unit tests.

Works in 80-digit floating point with mpmath and never uses the modular
formula, the membership recursion or the exact field arithmetic of the C++
code. Prints the values that are frozen into tests/unit.
"""
from math import gcd

import mpmath as mp

mp.mp.dps = 80

THETAS = {
    "golden": (mp.sqrt(5) - 1) / 2,
    "sqrt:2": mp.sqrt(2),
    "sqrt:3": mp.sqrt(3),
    "qi:1,1,3,2": (1 + mp.sqrt(2)) / 3,
}


def val(t, v):
    return v[0] * t + v[1]


def chi(a, b):
    return b[0] * a[1] - a[0] * b[1]


def phi(t, v):
    """The w with 0 < w < v and chi(w, v) = 1, by exhaustive search."""
    hits = []
    x = val(t, v)
    bound = 3 * (abs(v[0]) + int(mp.ceil(1 / x))) + 10
    for m1 in range(-bound, bound + 1):
        lo = int(mp.floor(-m1 * t)) - 1
        for n1 in range(lo, lo + int(mp.ceil(x)) + 3):
            w = (m1, n1)
            if 0 < val(t, w) < x and chi(w, v) == 1:
                hits.append(w)
    assert len(hits) == 1, (v, hits)
    return hits[0]


def tree_points(t, depth):
    pts = []

    def grow(a, b, level):
        if level == depth:
            return
        length = (b[0] - a[0], b[1] - a[1])
        p = phi(t, length)
        c = (a[0] + p[0], a[1] + p[1])
        grow(a, c, level + 1)
        pts.append(c)
        grow(c, b, level + 1)

    grow((0, 0), (0, 1), 0)
    return pts


def approach(t, r, steps):
    a, b, out = (0, 0), (0, 1), []
    while len(out) < steps:
        length = (b[0] - a[0], b[1] - a[1])
        p = phi(t, length)
        c = (a[0] + p[0], a[1] + p[1])
        if r < val(t, c):
            b = c
        else:
            a = c
            out.append(c)
    return out


def positive_convergents(t, k):
    """Convergents p/q of -t from a floating-point expansion, kept when p + q t > 0."""
    out, x = [], -t
    h, h1, kq, kq1 = 1, 0, 0, 1
    while len(out) < k:
        a = int(mp.floor(x))
        h, h1 = a * h + h1, h
        kq, kq1 = a * kq + kq1, kq
        x = 1 / (x - a)
        if h + kq * t > 0:
            out.append((h, kq))
    return out


def m_set_max(t, n_bound, c):
    best = None
    for m in range(0, -int(2 * c * n_bound) - 1, -1):
        for n in range(int(mp.floor(-m * t)) - 1, int(mp.floor(n_bound - m * t)) + 2):
            x = m * t + n
            if 0 < x < n_bound and m / x >= -c:
                if best is None or m / x > best[0]:
                    best = (m / x, (m, n))
    return best


if __name__ == "__main__":
    g = THETAS["golden"]
    for name, t in THETAS.items():
        print(name, "tree depth 3:", tree_points(t, 3))
    for v in [(0, 1), (1, 0), (-1, 1), (-3, 2), (-2, 2 - 0), (-8, 5), (3, -1)]:
        if gcd(*v) == 1 and val(g, v) > 0:
            print("golden phi", v, "->", phi(g, v))
    for v in [(0, 1), (-1, 2), (1, -1), (-5, 8), (2, -1)]:
        print("sqrt2 phi", v, "->", phi(THETAS["sqrt:2"], v))
    for v in [(0, 1), (-1, 1), (-7, 4), (3, 1)]:
        if gcd(*v) == 1 and val(THETAS["qi:1,1,3,2"], v) > 0:
            print("qi phi", v, "->", phi(THETAS["qi:1,1,3,2"], v))
    print("approach golden 1/2:", approach(g, mp.mpf(1) / 2, 6))
    print("approach golden 0.123456:", approach(g, mp.mpf("0.123456"), 4))
    print("approach sqrt2 0.9:", approach(THETAS["sqrt:2"], mp.mpf("0.9"), 4))
    for name, t in THETAS.items():
        print(name, "positive convergents:", positive_convergents(t, 5))
    for name in ("golden", "sqrt:2"):
        t = THETAS[name]
        for nb in (1, 1 + t):
            for c in (3, 10):
                best = m_set_max(t, nb, c)
                print(name, "N", mp.nstr(nb, 8), "c", c, "max", None if best is None else (mp.nstr(best[0], 12), best[1]))
    print("depth-6 tree contains (-25,16)?", (-25, 16) in tree_points(g, 6))
    print("golden depth 6 max |m|:", max(-p[0] for p in tree_points(g, 6)))
