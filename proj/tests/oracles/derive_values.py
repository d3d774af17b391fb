"""Independent oracle for the frozen expected values in the C++ tests.

Uses only Python integers, fractions and sympy; shares no code with the
library. Run: python3 tests/oracles/derive_values.py
"""
from fractions import Fraction
from itertools import product
import sympy as sp


def f_of(word):
    out = []
    for x, y in zip(word, word[1:]):
        out += [1, 1] if x == y else [2]
    return out


def cf_value(entries):
    v = Fraction(entries[-1])
    for e in reversed(entries[:-1]):
        v = e + 1 / v
    return v


def mat(entries):
    m = sp.eye(2)
    for e in entries:
        m = m * sp.Matrix([[e, 1], [1, 0]])
    return m


def below(word, a, b):
    x = y = 0
    for c in word:
        x += c == "R"
        y += c == "U"
        if a * y > b * x:
            return False
    return True


def paths(a, b):
    res = []
    for bits in product("RU", repeat=a + b):
        w = "".join(bits)
        if w.count("R") == a and below(w, a, b):
            res.append(w)
    return res


def lagrange_sympy(word):
    """max over all shifts of rho_k - rho_k' using sympy surds."""
    period = [2] + f_of(word)
    n = len(period)
    best = None
    for k in range(n):
        rot = period[k:] + period[:k]
        m = mat(rot)
        A, B, C, D = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
        x = sp.symbols("x")
        roots = sp.solve(C * x**2 + (D - A) * x - B, x)
        rho = max(roots, key=lambda r: float(r))
        rho_c = min(roots, key=lambda r: float(r))
        val = sp.nsimplify(sp.simplify(rho - rho_c))
        if best is None or float(val) > float(best):
            best = val
    return sp.simplify(best)


def snake_count(word):
    a, b = word.count("R"), word.count("U")
    pts = [(0, 0)]
    x = y = 0
    for c in word:
        for _ in range(2):
            if c == "R":
                x += 1
            else:
                y += 1
            pts.append((x, y))
    tiles = [(X, Y) for X, Y in pts if X >= 2 and Y <= 2 * (b - 1)]
    edges = set()
    for X, Y in tiles:
        c = [(X - 1, Y), (X, Y), (X, Y + 1), (X - 1, Y + 1)]
        for i in range(4):
            edges.add(frozenset((c[i], c[(i + 1) % 4])))
    verts = sorted({v for e in edges for v in e})
    adj = {v: [] for v in verts}
    for e in edges:
        u, v = tuple(e)
        adj[u].append(v)
        adj[v].append(u)

    def rec(cov):
        for v in verts:
            if v not in cov:
                break
        else:
            return 1
        tot = 0
        for u in adj[v]:
            if u not in cov:
                tot += rec(cov | {u, v})
        return tot

    return len(tiles), len(verts), len(edges), rec(frozenset())


if __name__ == "__main__":
    for w in ["RU", "RRU", "RRURU", "RRRUU", "RRRUURURU", "RRRUURRUU", "RRRURRU"]:
        f = f_of(w)
        m = mat(f)
        print(w, "f=", f, "M=", m[0, 0], "mat=", m.tolist(), "snake=", snake_count(w))
    print("[1,1,2]", cf_value([1, 1, 2]), "[1,2]", cf_value([1, 2]))
    for w in ["RU", "RRU", "RRURU", "RRRUU", "RRRUURURU", "RRRUURRUU"]:
        L = lagrange_sympy(w)
        print("L", w, L, sp.N(L, 20))
    print("phi", sp.N((1 + sp.sqrt(5)) / 2, 20), "sqrt221/5", sp.N(sp.sqrt(221) / 5, 20))
    print("sqrt11390621/1055", sp.N(sp.sqrt(11390621) / 1055, 20))
    for ab in [(2, 1), (3, 2), (5, 2), (5, 4), (3, 1), (4, 3)]:
        ps = paths(*ab)
        print(ab, len(ps), ps[:6])
    print("[2,1,1,2] eval", mat([2, 1, 1, 2]).tolist())
    for a in range(2, 8):
        print("count D", [(a, b, len(paths(a, b))) for b in range(1, a)])
