#!/usr/bin/env python3
"""Regenerate the offline b-file fixtures under crates/hoflab/fixtures/.

Every sequence is computed here straight from its defining rule with Python
integers (math.isqrt for Beatty floors), independently of the Rust code.
Usage: python3 scripts/gen_fixtures.py [TERMS]
"""
import math
import os
import sys

TERMS = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "hoflab", "fixtures")


def floor_sqrt_multiple(n, b2d, c, a):
    """floor((n*a + sqrt(n^2 * b2d)) / c)"""
    return (n * a + math.isqrt(n * n * b2d)) // c


def hofstadter_g(count):
    g = [0, 1]
    for n in range(2, count):
        g.append(n - g[g[n - 1]])
    return g[:count]


def lower_wythoff(n):
    return floor_sqrt_multiple(n, 5, 2, 1)


def upper_wythoff(n):
    return floor_sqrt_multiple(n, 5, 2, 3)


def swap_by_definition(lower, upper, count, offset):
    hi = offset + count + 1
    w = {}
    m = 1
    while lower(m) <= hi or upper(m) <= hi:
        w[lower(m)] = upper(m)
        w[upper(m)] = lower(m)
        m += 1
    if offset == 0:
        w[0] = 0
    return [w[n] for n in range(offset, offset + count)]


def married(count):
    a = [1]
    b = [0]
    for n in range(1, count):
        b.append(n - a[b[n - 1]])
        a.append(n - b[a[n - 1]])
    return a, b


def hofstadter_v(count):
    v = [None, 1, 1, 1, 1]
    for n in range(5, count + 1):
        v.append(v[n - v[n - 1]] + v[n - v[n - 4]])
    return v[1 : count + 1]


def cloitre(count):
    a = [None, 1]
    for n in range(2, count + 1):
        a.append(n - a[a[n - 1]] // 2)
    return a[1 : count + 1]


def celaya_ruskey(k, count):
    h = []
    for n in range(count):
        if n < k:
            h.append(0)
        else:
            h.append(n - k + 1 - sum(h[n - i] for i in range(1, k)) - h[h[n - k]])
    return h


def venkatachala(count):
    used = set()
    out = []
    total = 0
    for n in range(1, count + 1):
        cand = 1
        while cand in used or (total + cand) % n != 0:
            cand += 1
        used.add(cand)
        total += cand
        out.append(cand)
    return out


def write(anum, offset, values, how):
    path = os.path.join(OUT, "b%s.txt" % anum[1:])
    with open(path, "w") as fh:
        fh.write("# %s: first %d terms, offset %d\n" % (anum, len(values), offset))
        fh.write("# generated by scripts/gen_fixtures.py from %s\n" % how)
        for i, v in enumerate(values):
            fh.write("%d %d\n" % (offset + i, v))


def main():
    os.makedirs(OUT, exist_ok=True)
    n = TERMS
    write("A005206", 0, hofstadter_g(n), "G(n) = n - G(G(n-1))")
    write("A000201", 1, [lower_wythoff(i) for i in range(1, n + 1)], "floor(n*phi)")
    write("A001950", 1, [upper_wythoff(i) for i in range(1, n + 1)], "floor(n*phi^2)")
    w = swap_by_definition(lower_wythoff, upper_wythoff, n, 0)
    write("A002251", 0, w, "swapping floor(n*phi) and floor(n*phi^2)")
    acc = 0
    avg = []
    for i, x in enumerate(w):
        acc += x
        assert acc % (i + 1) == 0
        avg.append(acc // (i + 1))
    write("A073869", 0, avg, "averages of A002251")
    write("A019444", 1, venkatachala(n), "greedy divisibility search")
    write("A097508", 0, celaya_ruskey(2, n), "H(n) = n - 1 - H(n-1) - H(H(n-2))")
    write("A049472", 0, [math.isqrt(2 * i * i) // 2 for i in range(n)], "floor(n/sqrt(2))")
    lp = lambda i: i + math.isqrt(2 * i * i)
    up = lambda i: i + math.isqrt(2 * i * i) // 2
    write("A003151", 1, [lp(i) for i in range(1, n + 1)], "floor(n*(1+sqrt(2)))")
    write("A003152", 1, [up(i) for i in range(1, n + 1)], "floor(n*(1+sqrt(2)/2))")
    write("A109250", 1, swap_by_definition(lp, up, n, 1), "swapping the two Pell Beatty sequences")
    write("A063882", 1, hofstadter_v(n), "V(n) = V(n-V(n-1)) + V(n-V(n-4))")
    write("A138466", 1, cloitre(n), "a(n) = n - floor(a(a(n-1))/2)")
    a, b = married(n)
    write("A005378", 0, a, "a(n) = n - b(a(n-1)), a(0) = 1")
    write("A005379", 0, b, "b(n) = n - a(b(n-1)), b(0) = 0")


if __name__ == "__main__":
    main()
