"""Independent reference values for the C++ tests, computed with mpmath.

Critical lengths come from root finding on the angle defect, never from the
closed form, and the extremal search is a plain double loop.
Run: python3 derive.py
"""
from fractions import Fraction
from itertools import combinations_with_replacement

import mpmath as mp

mp.mp.dps = 60


def phi(p):
    return 1 - sum(Fraction(1, 2) - Fraction(1, f) for f in p)


def beta(n, a):
    return 2 * mp.asin(mp.cos(mp.pi / n) / mp.cosh(a / 2))


def defect(p, a):
    return 2 * mp.pi - sum(beta(f, a) for f in p)


def critical(p):
    lo, hi = mp.mpf("1e-6"), mp.mpf(1)
    while defect(p, hi) <= 0:
        lo, hi = hi, 2 * hi
    return mp.findroot(lambda a: defect(p, a), (lo, hi), solver="anderson")


def kappa(b):
    ts = [t for t in combinations_with_replacement(range(3, b + 1), 3) if phi(t) < 0]
    ac = {t: critical(t) for t in ts}
    best, pairs = None, []
    for p in ts:
        for q in ts:
            if ac[p] >= ac[q] or abs(ac[p] - ac[q]) < mp.mpf("1e-40"):
                continue
            k = sum(beta(f, ac[p]) for f in p) - sum(beta(g, ac[p]) for g in q)
            if k >= 0:
                continue
            if best is not None and abs(k - best) < mp.mpf("1e-40"):
                pairs.append((p, q))
            elif best is None or k > best:
                best, pairs = k, [(p, q)]
    return best, sorted(pairs)


def load(path):
    faces = []
    for line in open(path):
        if line[:1].isdigit():
            faces.append([int(v) for v in line.split()])
    return faces


def patterns(faces):
    inc = {}
    for f in faces:
        for v in f:
            inc.setdefault(v, []).append(len(f))
    return {v: tuple(sorted(d)) for v, d in inc.items()}


def main():
    print("alpha(3,7,43)   ", mp.nstr(2 * mp.cosh(critical((3, 7, 43)) / 2) ** 2, 40))
    print("a_c(3,7,43)     ", mp.nstr(critical((3, 7, 43)), 40))
    print("a_c(7,7,7)      ", mp.nstr(critical((7, 7, 7)), 40))
    print("a_c(3,3,4,13)   ", mp.nstr(critical((3, 3, 4, 13)), 40))
    print("a_c(4,6,16)     ", mp.nstr(critical((4, 6, 16)), 40))
    for b in (11, 59):
        p, q = (b - 1, b, b), (b, b, b)
        a = critical(p)
        print("seed K B=%d      " % b, mp.nstr(sum(beta(f, a) for f in p) - sum(beta(g, a) for g in q), 40))
    faces = load(__file__.rsplit("/", 3)[0] + "/data/sn7.txt")
    pat = patterns(faces)
    acs = {v: critical(p) for v, p in pat.items()}
    v0 = min(acs, key=acs.get)
    a = acs[v0]
    area = sum((len(f) - 2) * mp.pi - len(f) * beta(len(f), a) for f in faces)
    print("sn7 a_c(G)      ", mp.nstr(a, 40), "at vertex", v0, pat[v0])
    print("sn7 Area^cri    ", mp.nstr(area, 40))
    for b in (11, 13, 16):
        k, pairs = kappa(b)
        print("kappa(%d)        " % b, mp.nstr(k, 40), pairs)


if __name__ == "__main__":
    main()
