#!/usr/bin/env python3
# Independent recomputation of the mod-p Lazard dimensions. Shares no code
# with the C++ library: its own sign rule, its own substitution, and the
# ideal in each degree spanned by every generator times every monomial.
#
# usage: lazard_crosscheck.py PRIME MAX_DEGREE [CLI_BINARY]
# With a CLI binary, runs `lazard --mode modp` and compares the JSON.
import itertools
import json
import subprocess
import sys
import tempfile
from collections import defaultdict

P = int(sys.argv[1])
DMAX = int(sys.argv[2])
D = DMAX + 2

class Ring:
    def __init__(self, names, degs):
        self.names, self.degs = names, degs
        self.idx = {n: i for i, n in enumerate(names)}
def mono_mul(R, a, b):
    # a, b: tuples of exponents; sign from moving b's odd factors past a's later odd factors
    sign = 1
    for j, eb in enumerate(b):
        if eb and R.degs[j] % 2:
            later = sum(a[i] for i in range(j + 1, len(a)) if R.degs[i] % 2)
            if later % 2: sign = -sign
            if a[j]: return None, 0
    return tuple(x + y for x, y in zip(a, b)), sign
def gdeg(R, m, geo): return sum(R.degs[i] * m[i] for i in geo)
def sdeg(R, m, sym): return sum(R.degs[i] * m[i] for i in sym)
class Poly:
    def __init__(self, R, t=None): self.R, self.t = R, dict(t or {})
    def __add__(s, o):
        t = dict(s.t)
        for m, c in o.t.items(): t[m] = (t.get(m, 0) + c) % P
        return Poly(s.R, {m: c for m, c in t.items() if c})
    def __neg__(s): return Poly(s.R, {m: (-c) % P for m, c in s.t.items()})
    def __sub__(s, o): return s + (-o)
    def __mul__(s, o):
        R = s.R; t = defaultdict(int)
        for a, ca in s.t.items():
            for b, cb in o.t.items():
                m, sg = mono_mul(R, a, b)
                if m is None: continue
                if gdeg(R, m, R.geo) > D: continue
                if sdeg(R, m, R.sym) > DMAX: continue
                t[m] = (t[m] + sg * ca * cb) % P
        return Poly(R, {m: c for m, c in t.items() if c})
def var(R, n, c=1):
    m = [0] * len(R.names); m[R.idx[n]] = 1; return Poly(R, {tuple(m): c % P})
def const(R, c):
    return Poly(R, {tuple([0] * len(R.names)): c % P} if c % P else {})

# symbols
syms = []
for n in range(2, D + 1):
    for a, b in itertools.product(range(n // 2 + 1), repeat=2):
        for s, t in itertools.product((0, 1), repeat=2):
            if 2 * a + s + 2 * b + t != n: continue
            if (a + s) == 0 or (b + t) == 0: continue
            syms.append((f"F1[{a},{b},{s},{t}]", n - 1, ('F1', a, b, s, t)))
for i in range(1, D):
    for j in range(1, D):
        if 2 * (i + j) <= D: syms.append((f"F2[{i},{j}]", 2 * (i + j) - 2, ('F2', i, j)))
syms = [s for s in syms if s[1] <= DMAX]
def make_ring(geo_names, geo_degs):
    R = Ring([s[0] for s in syms] + geo_names, [s[1] for s in syms] + geo_degs)
    R.sym = list(range(len(syms))); R.geo = list(range(len(syms), len(R.names)))
    return R
R2 = make_ring(["x1", "x2", "e1", "e2"], [2, 2, 1, 1])
R3 = make_ring(["x1", "x2", "x3", "e1", "e2", "e3"], [2, 2, 2, 1, 1, 1])
R1 = make_ring(["x", "e"], [2, 1])

def law(R, X1, E1, X2, E2):
    # F1, F2 evaluated on given point images (polys in R); monomial factor order x1 x2 e1 e2
    def pw(f, k):
        r = const(R, 1)
        for _ in range(k): r = r * f
        return r
    F1 = E1 + E2; F2 = X1 + X2
    for name, deg, key in syms:
        if key[0] == 'F1':
            _, a, b, s, t = key
            m = pw(X1, a) * pw(X2, b) * pw(E1, s) * pw(E2, t)
            F1 = F1 + var(R, name) * m
        else:
            _, i, j = key
            F2 = F2 + var(R, name) * pw(X1, i) * pw(X2, j)
    return F1, F2

rels = []
def harvest(poly, R):
    by = defaultdict(dict)
    for m, c in poly.t.items():
        geo = tuple(m[i] for i in R.geo); sm = tuple(m[i] for i in R.sym)
        by[geo][sm] = c
    for g in by.values(): rels.append(g)
# commutativity
v = lambda R, n: var(R, n)
F1, F2 = law(R2, v(R2, "x1"), v(R2, "e1"), v(R2, "x2"), v(R2, "e2"))
G1, G2 = law(R2, v(R2, "x2"), v(R2, "e2"), v(R2, "x1"), v(R2, "e1"))
harvest(F1 - G1, R2); harvest(F2 - G2, R2)
# associativity
a1, a2 = law(R3, v(R3, "x2"), v(R3, "e2"), v(R3, "x3"), v(R3, "e3"))
L1, L2 = law(R3, v(R3, "x1"), v(R3, "e1"), a2, a1)
b1, b2 = law(R3, v(R3, "x1"), v(R3, "e1"), v(R3, "x2"), v(R3, "e2"))
M1, M2 = law(R3, b2, b1, v(R3, "x3"), v(R3, "e3"))
harvest(L1 - M1, R3); harvest(L2 - M2, R3)
# p-series, right nested
k1, k2 = v(R1, "e"), v(R1, "x")
for _ in range(P - 1):
    k1, k2 = law(R1, v(R1, "x"), v(R1, "e"), k2, k1)
harvest(k1, R1); harvest(k2, R1)

# quotient dims: symbol ring monomials by degree, ideal = span of m*g
sdegs = [s[1] for s in syms]; ns = len(syms)
def monos(d):
    out = []
    def rec(i, left, cur):
        if left == 0: out.append(tuple(cur + [0] * (ns - i))); return
        if i == ns: return
        mx = 1 if sdegs[i] % 2 else left // sdegs[i]
        for e in range(mx + 1):
            if e * sdegs[i] > left: break
            rec(i + 1, left - e * sdegs[i], cur + [e])
    rec(0, d, []); return out
SR = Ring([s[0] for s in syms], sdegs)
def deg_of(m): return sum(sdegs[i] * m[i] for i in range(ns))
gens = []
for r in rels:
    if not r: continue
    ds = {deg_of(m) for m in r}
    assert len(ds) == 1, "inhomogeneous"
    gens.append((ds.pop(), r))
def rank(rows, cols):
    idx = {c: i for i, c in enumerate(cols)}
    M = [[0] * len(cols) for _ in rows]
    for k, r in enumerate(rows):
        for m, c in r.items(): M[k][idx[m]] = c % P
    rk = 0
    for c in range(len(cols)):
        piv = next((i for i in range(rk, len(M)) if M[i][c]), None)
        if piv is None: continue
        M[rk], M[piv] = M[piv], M[rk]
        inv = pow(M[rk][c], P - 2, P)
        M[rk] = [x * inv % P for x in M[rk]]
        for i in range(len(M)):
            if i != rk and M[i][c]:
                f = M[i][c]; M[i] = [(x - f * y) % P for x, y in zip(M[i], M[rk])]
        rk += 1
    return rk
dims = []
for d in range(DMAX + 1):
    cols = monos(d)
    rows = []
    for gd, g in gens:
        if gd > d: continue
        for m in monos(d - gd):
            row = defaultdict(int)
            for gm, c in g.items():
                mm, sg = mono_mul(SR, m, gm)
                if mm is None: continue
                row[mm] = (row[mm] + sg * c) % P
            row = {k: c for k, c in row.items() if c}
            if row: rows.append(row)
    dims.append(len(cols) - rank(rows, cols))

print("oracle dimensions:", dims)
if len(sys.argv) > 3:
    with tempfile.TemporaryDirectory() as tmp:
        out = f"{tmp}/lazard.json"
        subprocess.run([sys.argv[3], "lazard", "--prime", str(P), "--max-degree", str(DMAX),
                        "--mode", "modp", "--output", out], stdout=subprocess.DEVNULL)
        with open(out) as f:
            cli = [row["dimension"] for row in json.load(f)["degrees"]]
    print("cli dimensions:   ", cli)
    sys.exit(0 if cli == dims else 1)
