#!/usr/bin/env python3
"""Independent reference computations whose outputs are frozen into the C++ tests.

Uses sympy's Smith normal form over ZZ; shares no code with the library.
Run: python3 tests/oracles/oracles.py
"""
from itertools import combinations, product
from math import comb

from sympy import Matrix, ZZ, Rational, symbols, expand, Poly
from sympy.matrices.normalforms import invariant_factors


def inv(rows):
    if not rows or not rows[0]:
        return []
    return [int(x) for x in invariant_factors(Matrix(rows), domain=ZZ) if x != 0]


def cohomology(ranks, diffs):
    """ranks[n]; diffs[n] is a matrix rank[n+1] x rank[n] (list of rows)."""
    out = []
    for n, r in enumerate(ranks):
        out_f = inv(diffs[n]) if n < len(diffs) and ranks[n + 1] and r else []
        in_f = inv(diffs[n - 1]) if n >= 1 and ranks[n - 1] and r else []
        free = r - len(out_f) - len(in_f)
        tors = [abs(t) for t in in_f if abs(t) > 1]
        out.append((free, tors))
    return out


def simplicial_complex_cochains(facets):
    simplices = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            for s in combinations(f, k):
                simplices.add(s)
    top = max(len(s) for s in simplices) - 1
    by_dim = [sorted(s for s in simplices if len(s) == k + 1) for k in range(top + 1)]
    idx = [{s: i for i, s in enumerate(l)} for l in by_dim]
    ranks = [len(l) for l in by_dim]
    diffs = []
    for k in range(top):
        rows = [[0] * ranks[k] for _ in range(ranks[k + 1])]
        for r, s in enumerate(by_dim[k + 1]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                rows[r][idx[k][face]] += (-1) ** i
        diffs.append(rows)
    return cohomology(ranks, diffs)


RP2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
       (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
TORUS7 = [(1, 2, 4), (2, 3, 5), (3, 1, 6), (4, 5, 1), (5, 6, 2), (6, 4, 3),
          (1, 2, 6), (2, 3, 4), (3, 1, 5), (4, 5, 3), (5, 6, 1), (6, 4, 2)]


def compositions(d, n):
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(1, d - n + 2):
        for rest in compositions(d - first, n - 1):
            yield (first,) + rest


def cobar_rank1(coef, n_max, d_max):
    """Reduced cobar of a coalgebra with rank-1 pieces in each degree >= 1
    and reduced diagonal c_d -> sum coef(d,p) c_p (x) c_{d-p}."""
    table = {}
    for d in range(0, d_max + 1):
        basis = [list(compositions(d, n)) for n in range(0, n_max + 2)]
        ranks = [len(b) for b in basis]
        diffs = []
        for n in range(0, n_max + 1):
            index = {c: i for i, c in enumerate(basis[n + 1])}
            rows = [[0] * ranks[n] for _ in range(ranks[n + 1])]
            for col, c in enumerate(basis[n]):
                for i in range(n):
                    for p in range(1, c[i]):
                        t = c[:i] + (p, c[i] - p) + c[i + 1:]
                        rows[index[t]][col] += (-1) ** (i + 1) * coef(c[i], p)
            diffs.append(rows)
        h = cohomology(ranks, diffs)
        for n in range(0, n_max + 1):
            if h[n][0] or h[n][1]:
                table[(n, d)] = h[n]
    return table


def bar_truncated_poly(trunc, n_max, d_max):
    """Bar homology of Z[x]/(x^trunc) (trunc=None for Z[x]), x in weight 1."""
    table = {}
    def mult(p, q):
        return 1 if trunc is None or p + q < trunc else 0
    for d in range(0, d_max + 1):
        basis = [[c for c in compositions(d, n) if trunc is None or max(c, default=0) < trunc]
                 for n in range(0, n_max + 2)]
        ranks = [len(b) for b in basis]
        # chain complex; store as cochain on reversed degrees
        diffs = {}
        for n in range(1, n_max + 2):
            index = {c: i for i, c in enumerate(basis[n - 1])}
            rows = [[0] * ranks[n] for _ in range(ranks[n - 1])]
            for col, c in enumerate(basis[n]):
                for i in range(n - 1):
                    if mult(c[i], c[i + 1]):
                        t = c[:i] + (c[i] + c[i + 1],) + c[i + 2:]
                        rows[index[t]][col] += (-1) ** (i + 1)
            diffs[n] = rows
        for n in range(0, n_max + 1):
            out_f = inv(diffs[n]) if n >= 1 and ranks[n] and ranks[n - 1] else []
            in_f = inv(diffs[n + 1]) if ranks[n + 1] and ranks[n] else []
            free = ranks[n] - len(out_f) - len(in_f)
            tors = [abs(t) for t in in_f if abs(t) > 1]
            if free or tors:
                table[(n, d)] = (free, tors)
    return table


def witt_fixed_order(p, k):
    S = [p ** i for i in range(k)]
    u = symbols(" ".join(f"u{s}" for s in S))
    v = symbols(" ".join(f"v{s}" for s in S))
    if k == 1:
        u, v = (u,), (v,)
    def ghost(w, n):
        return sum(d * w[S.index(d)] ** (n // d) for d in S if n % d == 0)
    def invert(targets):
        out = []
        for n in S:
            acc = targets[n] - sum(d * out[S.index(d)] ** (n // d) for d in S if n % d == 0 and d < n)
            out.append(expand(acc / n))
        return out
    add = invert({n: ghost(u, n) + ghost(v, n) for n in S})
    for poly in add:
        assert all(c.is_integer for c in Poly(poly, *u, *v).coeffs())
    # Frobenius F_p lands in truncation S/p
    Sp = [s for s in S if s * p in S]
    frob = []
    for n in Sp:
        acc = ghost(u, n * p) - sum(d * frob[Sp.index(d)] ** (n // d) for d in Sp if n % d == 0 and d < n)
        frob.append(expand(acc / n))
    elems = list(product(range(p), repeat=k))
    def ev(poly, a, b=None):
        subs = dict(zip(u, a))
        if b is not None:
            subs.update(zip(v, b))
        return int(poly.subs(subs)) % p
    fixed = [a for a in elems if all(ev(frob[i], a) == a[S.index(Sp[i])] for i in range(len(Sp)))]
    one = tuple([1] + [0] * (k - 1))
    zero = tuple([0] * k)
    x, order = one, 1
    while x != zero:
        x = tuple(ev(poly, x, one) for poly in add)
        order += 1
    return len(fixed), order


if __name__ == "__main__":
    print("snf [[2,4],[6,8]]:", inv([[2, 4], [6, 8]]))
    print("snf diag(6,2):", inv([[6, 0], [0, 2]]))
    print("rp2:", simplicial_complex_cochains(RP2))
    print("torus7:", simplicial_complex_cochains(TORUS7))
    print("sphere2 (boundary of tetrahedron):", simplicial_complex_cochains(list(combinations(range(4), 3))))
    print("num cobar n<=6 d<=8:", cobar_rank1(lambda d, p: 1, 6, 8))
    print("divided-type cobar n,d<=5:", cobar_rank1(lambda d, p: comb(d, p), 5, 5))
    print("bar Z[x] n<=5 d<=8:", bar_truncated_poly(None, 5, 8))
    print("bar Z[x]/x^2 n<=5 d<=6:", bar_truncated_poly(2, 5, 6))
    for p, k in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
        print("witt", p, k, "fixed count, order of 1:", witt_fixed_order(p, k))
