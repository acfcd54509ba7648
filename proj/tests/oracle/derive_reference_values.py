#!/usr/bin/env python3
"""Independent reference pipeline for the regression and acceptance suites.

Recomputes, with plain sympy and a minimal exterior-algebra layer (no code
shared with the C++ library), everything the catalog asserts: differentials,
Hitchin operators, eigenspace splittings, metrics, curvature, signatures.
Values that cannot be transcribed from a published table are frozen into
tests/expected/derived_values.hpp by this script.

Regenerate with:  python3 tests/oracle/derive_reference_values.py
"""

import sys
from fractions import Fraction
from itertools import combinations

import sympy as sp

N = 6
PAIRS = [(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]
SYM = {(i, j): sp.Symbol("a%d%d" % (i, j)) for (i, j) in PAIRS}


def a(i, j):
    return SYM[(i, j)]


# ---------------------------------------------------------------------------
# exterior algebra on dicts {sorted index tuple: coefficient}

def canon(idx):
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return None, 0
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return tuple(idx), sign


def clean(f):
    out = {}
    for k, v in f.items():
        v = sp.cancel(v)
        if v != 0:
            out[k] = v
    return out


def fadd(*fs):
    out = {}
    for f in fs:
        for k, v in f.items():
            out[k] = out.get(k, 0) + v
    return clean(out)


def fscl(c, f):
    return clean({k: c * v for k, v in f.items()})


def wedge(f, g):
    out = {}
    for I, u in f.items():
        for J, v in g.items():
            K, s = canon(I + J)
            if K is None:
                continue
            out[K] = out.get(K, 0) + s * u * v
    return clean(out)


def basis(idx):
    return {tuple(idx): sp.Integer(1)}


def interior(X, f):
    """X: 1-based list of components; contraction in the first slot."""
    out = {}
    for I, c in f.items():
        for p, ip in enumerate(I):
            J = I[:p] + I[p + 1:]
            out[J] = out.get(J, 0) + (-1) ** p * c * X[ip]
    return clean(out)


def form_eq(f, g):
    return not fadd(f, fscl(-1, g))


def pullback(M, f):
    """(M^* f)_I = sum_J f_J det(M[J, I]) for a k-form f."""
    if not f:
        return {}
    k = len(next(iter(f)))
    out = {}
    for I in combinations(range(1, N + 1), k):
        s = sp.Integer(0)
        for J, c in f.items():
            s += c * M[[j - 1 for j in J], [i - 1 for i in I]].det()
        s = sp.cancel(s)
        if s != 0:
            out[I] = s
    return out


# ---------------------------------------------------------------------------
# algebras: nonzero brackets [e_i,e_j] = sum_k c e_k, i < j

BRACKETS = {
    "g1": {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}, (2, 3): {5: 1},
           (3, 4): {6: 1}, (2, 5): {6: -1}},
    "g2": {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1},
           (3, 4): {6: 1}, (2, 5): {6: -1}},
    "g3": {(1, 2): {4: 1}, (1, 3): {5: 1}, (1, 4): {6: 1}, (3, 5): {6: 1}},
    "g4": {(1, 2): {4: 1}, (2, 3): {5: 1}, (1, 4): {6: 1}, (3, 5): {6: 1}},
    "g5": {(1, 2): {5: 1}, (1, 5): {6: 1}, (3, 4): {6: 1}},
}


def structure_constants(name):
    C = [[[0] * (N + 1) for _ in range(N + 1)] for _ in range(N + 1)]
    for (i, j), img in BRACKETS[name].items():
        for k, c in img.items():
            C[i][j][k] = c
            C[j][i][k] = -c
    return C


def bracket(C, X, Y):
    Z = [0] * (N + 1)
    for i in range(1, N + 1):
        if X[i] == 0:
            continue
        for j in range(1, N + 1):
            if Y[j] == 0:
                continue
            for k in range(1, N + 1):
                if C[i][j][k]:
                    Z[k] += X[i] * Y[j] * C[i][j][k]
    return [sp.cancel(z) if z != 0 else 0 for z in Z]


def d_basis1(C, k):
    """d e^k = -sum_{i<j} C^k_ij e^{ij}"""
    out = {}
    for (i, j) in PAIRS:
        if C[i][j][k]:
            out[(i, j)] = -sp.Integer(C[i][j][k])
    return out


def dform(C, f):
    out = {}
    for I, c in f.items():
        for p in range(len(I)):
            term = wedge(wedge(basis(I[:p]), d_basis1(C, I[p])),
                         basis(I[p + 1:]))
            for K, v in term.items():
                out[K] = out.get(K, 0) + (-1) ** p * c * v
    return clean(out)


# ---------------------------------------------------------------------------
# Hitchin machinery, mu = e^{123456}

def iso5(eta):
    X = [0] * (N + 1)
    full = set(range(1, N + 1))
    for J, c in eta.items():
        m = (full - set(J)).pop()
        X[m] += c * (-1) ** (m - 1)
    return [sp.cancel(x) if x != 0 else 0 for x in X]


def hitchin_K(Omega):
    M = sp.zeros(N)
    for j in range(1, N + 1):
        X = [0] * (N + 1)
        X[j] = 1
        col = iso5(wedge(interior(X, Omega), Omega))
        for i in range(1, N + 1):
            M[i - 1, j - 1] = col[i]
    return M


def hitchin_lambda(K):
    return sp.cancel(sp.trace(K * K) / 6)


def omega_matrix(w):
    W = sp.zeros(N)
    for (i, j), c in w.items():
        W[i - 1, j - 1] = c
        W[j - 1, i - 1] = -c
    return W


def cube_coefficient(w):
    c3 = wedge(wedge(w, w), w)
    return sp.cancel(c3.get(tuple(range(1, N + 1)), sp.Integer(0)))


# ---------------------------------------------------------------------------
# curvature (left-invariant metric, Koszul in a frame)

def christoffel(C, G, Ginv):
    T = [[[sp.Integer(0)] * (N + 1) for _ in range(N + 1)] for _ in range(N + 1)]
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            for k in range(1, N + 1):
                s = sp.Integer(0)
                for p in range(1, N + 1):
                    if C[i][j][p]:
                        s += C[i][j][p] * G[p - 1, k - 1]
                T[i][j][k] = s
    Gm = [[[sp.Integer(0)] * (N + 1) for _ in range(N + 1)] for _ in range(N + 1)]
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            for n in range(1, N + 1):
                s = sp.Integer(0)
                for k in range(1, N + 1):
                    if Ginv[k - 1, n - 1] == 0:
                        continue
                    s += Ginv[k - 1, n - 1] * (T[i][j][k] + T[k][i][j] + T[k][j][i])
                Gm[i][j][n] = sp.cancel(s / 2)
    return Gm


def ricci(C, Gm):
    Ric = sp.zeros(N)
    for n in range(1, N + 1):
        for m in range(1, N + 1):
            s = sp.Integer(0)
            for i in range(1, N + 1):
                for p in range(1, N + 1):
                    s += Gm[i][p][i] * Gm[n][m][p] - Gm[n][p][i] * Gm[i][m][p]
                    if C[i][n][p]:
                        s -= C[i][n][p] * Gm[p][m][i]
            Ric[n - 1, m - 1] = sp.cancel(s)
    return Ric


def scalar_curv(Ginv, Ric):
    s = sp.Integer(0)
    for i in range(N):
        for j in range(N):
            if Ginv[i, j] != 0:
                s += Ginv[i, j] * Ric[i, j]
    return sp.cancel(s)


def is_einstein(G, Ric):
    c = None
    for i in range(N):
        for j in range(N):
            if G[i, j] != 0:
                c = sp.cancel(Ric[i, j] / G[i, j])
                break
        if c is not None:
            break
    for i in range(N):
        for j in range(N):
            if sp.cancel(Ric[i, j] - c * G[i, j]) != 0:
                return False
    return True


def nijenhuis_nonzero(C, P, eps):
    cols = [[P[i, j] for i in range(N)] for j in range(N)]

    def Pv(X):
        Y = [0] * (N + 1)
        for i in range(1, N + 1):
            s = 0
            for j in range(1, N + 1):
                s += P[i - 1, j - 1] * X[j]
            Y[i] = sp.cancel(s)
        return Y

    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            X = [0] * (N + 1); X[i] = 1
            Y = [0] * (N + 1); Y[j] = 1
            PX, PY = Pv(X), Pv(Y)
            t1 = bracket(C, PX, PY)
            t2 = bracket(C, X, Y)
            t3 = Pv(bracket(C, PX, Y))
            t4 = Pv(bracket(C, X, PY))
            for k in range(1, N + 1):
                if eps == 1:
                    v = t2[k] + t1[k] - t3[k] - t4[k]
                else:
                    v = t1[k] - t2[k] - t3[k] - t4[k]
                if sp.cancel(v) != 0:
                    return True
    return False


def inertia(M):
    """Exact (pos, neg) inertia of a nondegenerate rational symmetric matrix."""
    n = M.rows
    W = [[Fraction(sp.Rational(M[i, j]).p, sp.Rational(M[i, j]).q)
          for j in range(n)] for i in range(n)]
    pos = neg = 0
    for k in range(n):
        if W[k][k] == 0:
            swap = next((l for l in range(k + 1, n) if W[l][l] != 0), None)
            if swap is not None:
                for r in range(n):
                    W[r][k], W[r][swap] = W[r][swap], W[r][k]
                W[k], W[swap] = W[swap], W[k]
            else:
                l = next((l for l in range(k + 1, n) if W[k][l] != 0), None)
                if l is None:
                    return None
                for r in range(n):
                    W[r][k] += W[r][l]
                for cidx in range(n):
                    W[k][cidx] += W[l][cidx]
        d = W[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(k + 1, n):
            f = W[r][k] / d
            if f:
                for cidx in range(n):
                    W[r][cidx] -= f * W[k][cidx]
        for cidx in range(k + 1, n):
            f = W[k][cidx] / d
            if f:
                for r in range(n):
                    W[r][cidx] -= f * W[r][k]
    return (pos, neg)


# ---------------------------------------------------------------------------
# canonical sample points: primes assigned in symbol order

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
          53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
POINT = {SYM[p]: sp.Integer(PRIMES[k]) for k, p in enumerate(PAIRS)}


def sample_points(symbols, count):
    """Base point plus perturbations of the last symbol (next unused primes)."""
    symbols = sorted(symbols, key=lambda s: PAIRS.index(
        next(p for p in PAIRS if SYM[p] == s)))
    base = {s: POINT[s] for s in symbols}
    pts = [dict(base)]
    used = {int(v) for v in base.values()}
    nxt = (q for q in PRIMES if q not in used)
    last = symbols[-1]
    for _ in range(count - 1):
        p = dict(pts[-1])
        p[last] = sp.Integer(next(nxt))
        pts.append(p)
    return pts


# ---------------------------------------------------------------------------
# reporting helpers

FAILURES = []


def check(label, ok, detail=""):
    print(("OK   " if ok else "DIFF ") + label + (("  " + detail) if detail and not ok else ""))
    if not ok:
        FAILURES.append(label)


def cxx(expr):
    """Render a sympy expression in the CLI scalar grammar."""
    expr = sp.cancel(sp.together(expr))
    num, den = sp.fraction(expr)
    num = sp.expand(num)
    den = sp.expand(den)
    ns = str(num).replace("**", "^")
    if den == 1:
        return ns
    ds = str(den).replace("**", "^")
    return "(" + ns + ")/(" + ds + ")"


# ---------------------------------------------------------------------------
# scenario machinery

def span_matrix(vectors):
    return sp.Matrix([[v[i] for i in range(1, N + 1)] for v in vectors])


def same_span(A, B):
    return A.rref()[0] == B.rref()[0]


def run_scenario(name, algebra, omega, *, expect_lambda=None, expect_K=None,
                 eps_expected=None, eigen_plus=None, eigen_minus=None,
                 expect_metric=None, ricci_subs=None, expect_ricci_diag=None,
                 expect_scalar=None, zero_scalar_sub=None, expect_signature=None,
                 J_override_root=None):
    print("--- scenario " + name)
    C = structure_constants(algebra)
    dw = dform(C, omega)
    Omega = dw
    K = hitchin_K(Omega).applyfunc(sp.cancel)
    lam = hitchin_lambda(K)
    if expect_lambda is not None:
        check(name + ".lambda", sp.cancel(lam - expect_lambda) == 0, str(lam))
    if expect_K is not None:
        check(name + ".K", (K - expect_K).applyfunc(sp.cancel) == sp.zeros(N))
    check(name + ".K2=lambdaId",
          (K * K - lam * sp.eye(N)).applyfunc(sp.cancel) == sp.zeros(N))
    # normalized structure
    if J_override_root is not None:
        root = J_override_root
    else:
        root = sp.sqrt(sp.cancel(sp.Abs(lam))) if not lam.free_symbols else None
        if root is None:
            num, den = sp.fraction(sp.cancel(lam))
            sq = sp.sqrt(sp.factor(num) / sp.factor(den))
            root = sp.cancel(sp.powsimp(sq, force=True))
    J = (K / root).applyfunc(sp.cancel)
    eps = int(sp.cancel((J * J)[0, 0]))
    if eps_expected is not None:
        check(name + ".eps", eps == eps_expected, "eps=%d" % eps)
    check(name + ".J2", (J * J - eps * sp.eye(N)).applyfunc(sp.cancel) == sp.zeros(N))
    W = omega_matrix(omega)
    check(name + ".omega(PX,PY)=-eps*omega",
          (J.T * W * J + eps * W).applyfunc(sp.cancel) == sp.zeros(N))
    # compatibility / half-flatness / normalization
    check(name + ".compatible", not wedge(omega, Omega))
    check(name + ".dOmega=0", not dform(C, Omega))
    dual = pullback(J, Omega)
    Kd = hitchin_K(dual).applyfunc(sp.cancel)
    check(name + ".lambda_dual", sp.cancel(hitchin_lambda(Kd) - lam) == 0)
    Jd = (Kd / root).applyfunc(sp.cancel)
    check(name + ".J_dual=-eps*J", (Jd + eps * J).applyfunc(sp.cancel) == sp.zeros(N))
    check(name + ".dual_involution",
          form_eq(pullback(Jd, dual), fscl(-1, Omega)))
    cube = wedge(omega, wedge(omega, omega))
    normalized = form_eq(wedge(dual, Omega), fscl(sp.Rational(2, 3), cube))
    print("info %s.normalized = %s" % (name, normalized))
    if eps == 1 and eigen_plus is not None:
        Ep = (J - sp.eye(N)).nullspace()
        Em = (J + sp.eye(N)).nullspace()
        Pm = sp.Matrix([[v[i, 0] for i in range(N)] for v in Ep])
        Mm = sp.Matrix([[v[i, 0] for i in range(N)] for v in Em])
        check(name + ".E+", same_span(Pm, span_matrix(eigen_plus)))
        check(name + ".E-", same_span(Mm, span_matrix(eigen_minus)))
    check(name + ".nijenhuis!=0", nijenhuis_nonzero(C, J, eps))
    G = (W * J).applyfunc(sp.cancel)
    check(name + ".metric_symmetric", (G - G.T).applyfunc(sp.cancel) == sp.zeros(N))
    if expect_metric is not None:
        check(name + ".metric", (G - expect_metric).applyfunc(sp.cancel) == sp.zeros(N))
    Ginv = G.inv().applyfunc(sp.cancel)
    Gm = christoffel(C, G, Ginv)
    Ric = ricci(C, Gm)
    R = scalar_curv(Ginv, Ric)
    print("info %s.scalar = %s" % (name, R))
    check(name + ".einstein=false", not is_einstein(G, Ric))
    if expect_scalar is not None:
        check(name + ".scalar", sp.cancel(R - expect_scalar) == 0, "R=" + str(sp.cancel(R)))
    if zero_scalar_sub is not None:
        Rz = sp.cancel(R.subs(zero_scalar_sub))
        Ricz = Ric.subs(zero_scalar_sub).applyfunc(sp.cancel)
        check(name + ".zero_scalar", Rz == 0 and Ricz != sp.zeros(N))
    RicOp = (Ginv * Ric).applyfunc(sp.cancel)
    if ricci_subs is not None and expect_ricci_diag is not None:
        Rs = RicOp.subs(ricci_subs).applyfunc(sp.cancel)
        check(name + ".ricci_diag", (Rs - expect_ricci_diag).applyfunc(sp.cancel) == sp.zeros(N))
    if expect_signature is not None:
        syms = sorted(G.free_symbols, key=str)
        ok = True
        sigs = []
        for pt in sample_points(syms, 3):
            Gp = G.subs(pt)
            sig = inertia(Gp)
            sigs.append(sig)
            ok = ok and sig == expect_signature
        check(name + ".signature", ok, str(sigs))
    return {"K": K, "lambda": lam, "J": J, "G": G, "Ginv": Ginv,
            "Ric": Ric, "RicOp": RicOp, "R": R, "eps": eps}


# ---------------------------------------------------------------------------
# scenario data (transcribed expectations)

def msym(rows):
    return sp.Matrix(rows)


def main():
    frozen = {}

    # ---- generic lambda for each algebra
    generic = {(i, j): a(i, j) for (i, j) in PAIRS}
    for name, expected in [("g1", None),
                           ("g2", (a(4, 6) ** 2 - 2 * a(3, 6) * a(5, 6)) ** 2),
                           ("g3", a(4, 6) ** 4),
                           ("g4", (a(4, 6) ** 2 - a(5, 6) ** 2) ** 2),
                           ("g5", a(5, 6) ** 4)]:
        C = structure_constants(name)
        dw = dform(C, generic)
        K = hitchin_K(dw)
        lam = hitchin_lambda(K)
        if expected is not None:
            check("generic_lambda.%s" % name, sp.cancel(lam - expected) == 0, str(lam))
        else:
            print("generic lambda g1 = %s" % sp.expand(lam))
        frozen["kGenericLambda_%s" % name.upper()] = cxx(lam)
        # d of d == 0 sanity on basis 1..2 forms
        ok = all(not dform(C, dform(C, basis((k,)))) for k in range(1, N + 1))
        check("ddzero.%s" % name, ok)

    # ---- closed families
    closed_expected = {
        "g1": ({a(1, 6): 0, a(2, 6): 0, a(3, 6): 0, a(3, 5): 0, a(4, 5): 0,
                a(4, 6): 0, a(5, 6): 0, a(3, 4): -a(2, 5), a(2, 4): a(1, 5)}, 6),
        "g2": ({a(1, 6): 0, a(2, 4): 0, a(2, 6): 0, a(3, 5): 0, a(3, 6): 0,
                a(4, 5): 0, a(4, 6): 0, a(5, 6): 0, a(2, 5): -a(3, 4)}, 6),
        "g3": ({a(1, 6): 0, a(2, 6): 0, a(3, 6): 0, a(4, 5): 0, a(4, 6): 0,
                a(5, 6): 0, a(3, 4): a(2, 5)}, 8),
        "g4": ({a(1, 6): 0, a(2, 6): 0, a(3, 6): 0, a(4, 5): 0, a(4, 6): 0,
                a(5, 6): 0, a(3, 4): -a(1, 5)}, 8),
        "g5": ({a(1, 6): 0, a(2, 6): 0, a(3, 5): 0, a(3, 6): 0, a(4, 5): 0,
                a(4, 6): 0, a(5, 6): 0}, 8),
    }
    for name, (subs, freedim) in closed_expected.items():
        C = structure_constants(name)
        dw = dform(C, generic)
        eqs = [v for v in dw.values()]
        syms = [SYM[p] for p in PAIRS]
        M, rhs = sp.linear_eq_to_matrix(eqs, syms)
        rank = M.rank()
        check("closed.%s.rank" % name, 15 - rank == freedim,
              "rank=%d" % rank)
        closed_w = clean({k: v.subs(subs) for k, v in generic.items()})
        check("closed.%s.family_closed" % name, not dform(C, closed_w))
        check("closed.%s.degenerate" % name, cube_coefficient(closed_w) == 0)

    # ---- wedge-closure systems for generic omega (printed condition sets)
    printed_conditions = {
        "g3": [a(1, 2) * a(4, 6) - a(1, 4) * a(2, 6) - a(2, 3) * a(5, 6)
               + a(2, 4) * a(1, 6) + a(2, 5) * a(3, 6) - a(3, 5) * a(2, 6),
               a(2, 5) * a(4, 6) - a(2, 4) * a(5, 6) - a(2, 6) * a(4, 5),
               a(3, 5) * a(4, 6) - a(3, 6) * a(4, 5) - a(3, 4) * a(5, 6)],
        "g4": [-a(1, 2) * a(4, 6) + a(1, 4) * a(2, 6) - a(1, 6) * a(2, 4)
               + a(2, 3) * a(5, 6) - a(2, 5) * a(3, 6) + a(2, 6) * a(3, 5),
               -a(1, 4) * a(5, 6) + a(1, 5) * a(4, 6) - a(1, 6) * a(4, 5),
               a(3, 4) * a(5, 6) - a(3, 5) * a(4, 6) + a(3, 6) * a(4, 5)],
        # The published g5 display shows +a34*a56 in the first condition; the
        # actual coefficient of e^{12346} in omega^dw is -a34*a56 + a35*a46
        # - a36*a45 (hand-checked term by term).  Assert the computed truth.
        "g5": [-a(3, 4) * a(5, 6) + a(3, 5) * a(4, 6) - a(3, 6) * a(4, 5),
               a(1, 2) * a(5, 6) - a(1, 5) * a(2, 6) + a(1, 6) * a(2, 5)
               - a(2, 3) * a(4, 6) + a(2, 4) * a(3, 6) - a(2, 6) * a(3, 4)],
    }
    for name, conds in printed_conditions.items():
        C = structure_constants(name)
        dw = dform(C, generic)
        wdw = wedge(generic, dw)
        coeffs = [sp.expand(v) for v in wdw.values()]
        for ci, cond in enumerate(conds):
            hit = any(sp.simplify(cond - c) == 0 or sp.simplify(cond + c) == 0
                      or sp.simplify(2 * cond - c) == 0 or sp.simplify(2 * cond + c) == 0
                      for c in coeffs)
            check("wdw_conditions.%s.%d" % (name, ci), hit,
                  "coeffs=" + str(coeffs))

    # ---- g2 branches: a46 branch admits nondegenerate solutions, a56 does not
    g2closed = clean({k: v.subs(closed_expected["g2"][0]) for k, v in generic.items()})
    C2 = structure_constants("g2")
    for extra, label in [((4, 6), "a46"), ((5, 6), "a56")]:
        w = fadd(g2closed, {extra: a(*extra)})
        dw = dform(C2, w)
        wdw = wedge(w, dw)
        eqs = [sp.cancel(v / a(*extra)) for v in wdw.values()]
        frees = [a(1, 2), a(1, 3), a(1, 4), a(1, 5), a(2, 3), a(3, 4)]
        sol = sp.solve(eqs, frees, dict=True)
        assert len(sol) == 1, sol
        wsol = clean({k: v.subs(sol[0]) for k, v in w.items()})
        cert = cube_coefficient(wsol)
        if label == "a46":
            check("g2_branch.a46.solution", sol[0] == {a(1, 3): 0, a(3, 4): 0},
                  str(sol[0]))
            check("g2_branch.a46.cert", sp.cancel(cert + 6 * a(1, 5) * a(2, 3) * a(4, 6)) == 0,
                  str(cert))
        else:
            check("g2_branch.a56.solution",
                  sol[0] == {a(1, 2): 0, a(2, 3): 0, a(3, 4): 0}, str(sol[0]))
            check("g2_branch.a56.incompatible", cert == 0, str(cert))

    # ---- certificates of the main families
    def cert_of(w):
        return cube_coefficient(w)

    # ---- scenario: g1_opt1
    w_g1o1 = {(1, 2): a(1, 3) * a(4, 6) / a(5, 6), (1, 3): a(1, 3),
              (1, 4): a(1, 4), (2, 3): -a(1, 4), (4, 6): a(4, 6),
              (5, 6): a(5, 6)}
    check("g1_opt1.cert", sp.cancel(cert_of(w_g1o1) + 6 * a(1, 4) ** 2 * a(5, 6)) == 0,
          str(cert_of(w_g1o1)))
    C1 = structure_constants("g1")
    dw = dform(C1, w_g1o1)
    expected_dw = {(1, 3, 6): -a(4, 6), (2, 4, 5): a(4, 6), (1, 4, 6): -a(5, 6),
                   (2, 3, 6): -a(5, 6), (3, 4, 5): a(5, 6)}
    check("g1_opt1.domega", form_eq(dw, expected_dw), str(dw))
    K_g1o1 = msym([
        [-a(4, 6) ** 2, -2 * a(4, 6) * a(5, 6), -2 * a(5, 6) ** 2, 0, 0, 0],
        [0, a(4, 6) ** 2, 2 * a(4, 6) * a(5, 6), 2 * a(5, 6) ** 2, 0, 0],
        [0, 0, -a(4, 6) ** 2, -2 * a(4, 6) * a(5, 6), 0, 0],
        [0, 0, 0, a(4, 6) ** 2, 0, 0],
        [0, 0, 0, 0, a(4, 6) ** 2, 2 * a(5, 6) ** 2],
        [0, 0, 0, 0, 0, -a(4, 6) ** 2]])
    g_g1o1 = msym([
        [0, a(1, 3) * a(4, 6) / a(5, 6), a(1, 3), a(1, 4), 0, 0],
        [a(1, 3) * a(4, 6) / a(5, 6), 2 * a(1, 3),
         (2 * a(1, 3) * a(5, 6) + a(1, 4) * a(4, 6)) / a(4, 6),
         2 * a(1, 4) * a(5, 6) / a(4, 6), 0, 0],
        [a(1, 3), (2 * a(1, 3) * a(5, 6) + a(1, 4) * a(4, 6)) / a(4, 6),
         2 * a(5, 6) * (a(1, 3) * a(5, 6) + a(1, 4) * a(4, 6)) / a(4, 6) ** 2,
         2 * a(1, 4) * a(5, 6) ** 2 / a(4, 6) ** 2, 0, 0],
        [a(1, 4), 2 * a(1, 4) * a(5, 6) / a(4, 6),
         2 * a(1, 4) * a(5, 6) ** 2 / a(4, 6) ** 2, 0, 0, -a(4, 6)],
        [0, 0, 0, 0, 0, -a(5, 6)],
        [0, 0, 0, -a(4, 6), -a(5, 6), -2 * a(5, 6) ** 3 / a(4, 6) ** 2]])
    Eplus = [ {1: a(5, 6) ** 3, 2: 0, 3: -a(5, 6) * a(4, 6) ** 2, 4: a(4, 6) ** 3, 5: 0, 6: 0},
              {1: -a(5, 6), 2: a(4, 6), 3: 0, 4: 0, 5: 0, 6: 0},
              {1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 0} ]
    Eminus = [ {1: 1, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0},
               {1: 0, 2: -a(5, 6), 3: a(4, 6), 4: 0, 5: 0, 6: 0},
               {1: 0, 2: 0, 3: 0, 4: 0, 5: -a(5, 6) ** 2, 6: a(4, 6) ** 2} ]
    res = run_scenario(
        "g1_opt1", "g1", w_g1o1,
        expect_lambda=a(4, 6) ** 4, expect_K=K_g1o1, eps_expected=1,
        eigen_plus=Eplus, eigen_minus=Eminus, expect_metric=g_g1o1,
        expect_scalar=(8 * a(1, 3) * a(5, 6) ** 7 - 8 * a(1, 4) * a(4, 6) * a(5, 6) ** 6
                       - a(4, 6) ** 8) / (a(1, 4) ** 2 * a(4, 6) ** 6 * a(5, 6)),
        zero_scalar_sub={a(1, 3): (a(4, 6) ** 8 + 8 * a(5, 6) ** 6 * a(4, 6) * a(1, 4))
                         / (8 * a(5, 6) ** 7)},
        expect_signature=(3, 3), J_override_root=a(4, 6) ** 2)
    frozen["kG1Opt1RicciOp"] = [cxx(res["RicOp"][i, j]) for i in range(N) for j in range(N)]
    frozen["kG1Opt1Scalar"] = cxx(res["R"])

    # ---- g1_opt2 with free a45, then the two cases
    w_g1o2 = dict(w_g1o1)
    w_g1o2[(4, 5)] = a(4, 5)
    C = C1
    dw2 = dform(C, w_g1o2)
    expected_dw2 = dict(expected_dw)
    expected_dw2[(2, 3, 4)] = a(4, 5)
    expected_dw2[(1, 3, 5)] = -a(4, 5)
    check("g1_opt2.domega", form_eq(dw2, expected_dw2), str(dw2))
    K2g = hitchin_K(dw2).applyfunc(sp.cancel)
    lam2 = hitchin_lambda(K2g)
    check("g1_opt2.lambda", sp.cancel(
        lam2 - (a(4, 6) ** 4 - 4 * a(4, 6) * a(4, 5) * a(5, 6) ** 2)) == 0, str(lam2))
    K2exp = msym([
        [-a(4, 6) ** 2, -2 * a(4, 6) * a(5, 6), -2 * a(5, 6) ** 2, 0, 0, 0],
        [2 * a(4, 5) * a(5, 6), a(4, 6) ** 2, 2 * a(4, 6) * a(5, 6), 2 * a(5, 6) ** 2, 0, 0],
        [0, 0, -a(4, 6) ** 2, -2 * a(4, 6) * a(5, 6), 0, 0],
        [0, 0, 2 * a(4, 5) * a(5, 6), a(4, 6) ** 2, 0, 0],
        [0, 0, -2 * a(4, 5) * a(4, 6), -2 * a(4, 5) * a(5, 6), a(4, 6) ** 2, 2 * a(5, 6) ** 2],
        [0, 0, 2 * a(4, 5) ** 2, 0, -2 * a(4, 5) * a(4, 6), -a(4, 6) ** 2]])
    check("g1_opt2.K", (K2g - K2exp).applyfunc(sp.cancel) == sp.zeros(N))
    frozen["kG1Opt2K"] = [cxx(K2g[i, j]) for i in range(N) for j in range(N)]

    case1 = {a(4, 5): (a(4, 6) ** 4 + 1) / (4 * a(4, 6) * a(5, 6) ** 2)}
    case2 = {a(4, 5): (a(4, 6) ** 4 - 1) / (4 * a(4, 6) * a(5, 6) ** 2)}
    w_c1 = clean({k: v.subs(case1) for k, v in w_g1o2.items()})
    w_c2 = clean({k: v.subs(case2) for k, v in w_g1o2.items()})

    res1 = run_scenario(
        "g1_opt2_case1", "g1", w_c1,
        expect_lambda=sp.Integer(-1),
        expect_K=K2exp.subs(case1).applyfunc(sp.cancel), eps_expected=-1,
        expect_scalar=(8 * a(5, 6) ** 7 * a(1, 3) - 8 * a(5, 6) ** 6 * a(4, 6) * a(1, 4) - 1)
        / (a(1, 4) ** 2 * a(5, 6)),
        zero_scalar_sub={a(1, 3): (1 + 8 * a(5, 6) ** 6 * a(4, 6) * a(1, 4))
                         / (8 * a(5, 6) ** 7)},
        expect_signature=(2, 4), J_override_root=sp.Integer(1))
    res2 = run_scenario(
        "g1_opt2_case2", "g1", w_c2,
        expect_lambda=sp.Integer(1),
        expect_K=K2exp.subs(case2).applyfunc(sp.cancel), eps_expected=1,
        expect_signature=(3, 3), J_override_root=sp.Integer(1))
    check("g1_opt2.same_scalar", sp.cancel(res1["R"] - res2["R"]) == 0,
          "R1=%s R2=%s" % (res1["R"], res2["R"]))
    frozen["kG1Opt2Scalar"] = cxx(res1["R"])

    # ---- g2_main
    w_g2 = {(1, 2): a(1, 2), (1, 4): a(1, 4), (1, 5): a(1, 5),
            (2, 3): a(2, 3), (4, 6): a(4, 6)}
    K_g2 = sp.diag(-a(4, 6) ** 2, a(4, 6) ** 2, -a(4, 6) ** 2,
                   a(4, 6) ** 2, a(4, 6) ** 2, -a(4, 6) ** 2)
    g_g2 = msym([
        [0, a(1, 2), 0, a(1, 4), a(1, 5), 0],
        [a(1, 2), 0, -a(2, 3), 0, 0, 0],
        [0, -a(2, 3), 0, 0, 0, 0],
        [a(1, 4), 0, 0, 0, 0, -a(4, 6)],
        [a(1, 5), 0, 0, 0, 0, 0],
        [0, 0, 0, -a(4, 6), 0, 0]])
    ric_diag = a(4, 6) / (2 * a(1, 5) * a(2, 3)) * sp.diag(-1, -1, -1, 1, -1, 1)
    res = run_scenario(
        "g2_main", "g2", w_g2,
        expect_lambda=a(4, 6) ** 4, expect_K=K_g2, eps_expected=1,
        eigen_plus=[{1: 0, 2: 1, 3: 0, 4: 0, 5: 0, 6: 0},
                    {1: 0, 2: 0, 3: 0, 4: 1, 5: 0, 6: 0},
                    {1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 0}],
        eigen_minus=[{1: 1, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0},
                     {1: 0, 2: 0, 3: 1, 4: 0, 5: 0, 6: 0},
                     {1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 1}],
        expect_metric=g_g2, ricci_subs={a(1, 4): 0}, expect_ricci_diag=ric_diag,
        expect_signature=(3, 3), J_override_root=a(4, 6) ** 2)
    frozen["kG2MainScalar"] = cxx(res["R"])

    # ---- g3_main
    w_g3 = {(1, 3): a(1, 3), (1, 4): a(1, 4), (1, 5): a(1, 5),
            (2, 3): a(2, 3), (2, 4): a(2, 4), (4, 6): a(4, 6)}
    K_g3 = sp.diag(-a(4, 6) ** 2, -a(4, 6) ** 2, a(4, 6) ** 2,
                   a(4, 6) ** 2, a(4, 6) ** 2, -a(4, 6) ** 2)
    g_g3 = msym([
        [0, 0, a(1, 3), a(1, 4), a(1, 5), 0],
        [0, 0, a(2, 3), a(2, 4), 0, 0],
        [a(1, 3), a(2, 3), 0, 0, 0, 0],
        [a(1, 4), a(2, 4), 0, 0, 0, -a(4, 6)],
        [a(1, 5), 0, 0, 0, 0, 0],
        [0, 0, 0, -a(4, 6), 0, 0]])
    res = run_scenario(
        "g3_main", "g3", w_g3,
        expect_lambda=a(4, 6) ** 4, expect_K=K_g3, eps_expected=1,
        eigen_plus=[{1: 0, 2: 0, 3: 1, 4: 0, 5: 0, 6: 0},
                    {1: 0, 2: 0, 3: 0, 4: 1, 5: 0, 6: 0},
                    {1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 0}],
        eigen_minus=[{1: 1, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0},
                     {1: 0, 2: 1, 3: 0, 4: 0, 5: 0, 6: 0},
                     {1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 1}],
        expect_metric=g_g3,
        ricci_subs={a(1, 4): 0, a(2, 4): 0},
        expect_ricci_diag=a(4, 6) / (2 * a(1, 5) * a(2, 3)) * sp.diag(-1, -1, -1, 1, -1, 1),
        expect_signature=(3, 3), J_override_root=a(4, 6) ** 2)
    frozen["kG3MainScalar"] = cxx(res["R"])
    check("g3_main.cert", sp.cancel(cert_of(w_g3) + 6 * a(1, 5) * a(2, 3) * a(4, 6)) == 0,
          str(cert_of(w_g3)))

    # ---- g4_general
    g4subs = {a(1, 2): a(2, 3) * a(5, 6) / a(4, 6),
              a(1, 4): a(1, 5) * a(4, 6) / a(5, 6),
              a(3, 5): -a(1, 5) * a(5, 6) / a(4, 6)}
    w_g4 = {(1, 2): g4subs[a(1, 2)], (1, 3): a(1, 3), (1, 4): g4subs[a(1, 4)],
            (1, 5): a(1, 5), (2, 3): a(2, 3), (2, 4): a(2, 4), (2, 5): a(2, 5),
            (3, 4): -a(1, 5), (3, 5): g4subs[a(3, 5)],
            (4, 6): a(4, 6), (5, 6): a(5, 6)}
    C4 = structure_constants("g4")
    dw4 = dform(C4, w_g4)
    expected_dw4 = {(1, 4, 5): a(5, 6), (3, 4, 5): -a(4, 6),
                    (1, 2, 6): -a(4, 6), (2, 3, 6): -a(5, 6)}
    check("g4_general.domega", form_eq(dw4, expected_dw4), str(dw4))
    K_g4 = msym([
        [-a(4, 6) ** 2 - a(5, 6) ** 2, 0, 2 * a(4, 6) * a(5, 6), 0, 0, 0],
        [0, -a(4, 6) ** 2 + a(5, 6) ** 2, 0, 0, 0, 0],
        [-2 * a(4, 6) * a(5, 6), 0, a(4, 6) ** 2 + a(5, 6) ** 2, 0, 0, 0],
        [0, 0, 0, a(4, 6) ** 2 - a(5, 6) ** 2, 0, 0],
        [0, 0, 0, 0, a(4, 6) ** 2 - a(5, 6) ** 2, 0],
        [0, 0, 0, 0, 0, -a(4, 6) ** 2 + a(5, 6) ** 2]])
    res = run_scenario(
        "g4_general", "g4", w_g4,
        expect_lambda=(a(4, 6) ** 2 - a(5, 6) ** 2) ** 2,
        expect_K=K_g4, eps_expected=1,
        eigen_plus=[{1: a(5, 6), 2: 0, 3: a(4, 6), 4: 0, 5: 0, 6: 0},
                    {1: 0, 2: 0, 3: 0, 4: 1, 5: 0, 6: 0},
                    {1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 0}],
        eigen_minus=[{1: a(4, 6), 2: 0, 3: a(5, 6), 4: 0, 5: 0, 6: 0},
                     {1: 0, 2: 1, 3: 0, 4: 0, 5: 0, 6: 0},
                     {1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 1}],
        expect_signature=(3, 3),
        J_override_root=a(4, 6) ** 2 - a(5, 6) ** 2)
    got_R = sp.cancel(res["R"])
    want_R = sp.cancel((a(4, 6) ** 2 - a(5, 6) ** 2)
                       / (a(1, 3) * (a(2, 4) * a(5, 6) - a(2, 5) * a(4, 6))))
    check("g4_general.scalar_mod_sign",
          sp.cancel(got_R - want_R) == 0 or sp.cancel(got_R + want_R) == 0,
          "R=" + str(got_R))
    print("g4_general scalar (canonical branch +): %s" % got_R)
    diag_entries = all(sp.cancel(res["RicOp"][i, j]) == 0
                       for i in range(N) for j in range(N) if i != j)
    check("g4_general.ricci_nondiagonal", not diag_entries)
    frozen["kG4GeneralScalar"] = cxx(got_R)
    frozen["kG4GeneralRicciOp"] = [cxx(res["RicOp"][i, j]) for i in range(N) for j in range(N)]
    frozen["kG4GeneralCert"] = cxx(cert_of(w_g4))

    # sign branch: metric from -P
    Jm = -res["J"]
    Gm_ = (omega_matrix(w_g4) * Jm).applyfunc(sp.cancel)
    Ginv_ = Gm_.inv().applyfunc(sp.cancel)
    Gamma_ = christoffel(C4, Gm_, Ginv_)
    Ric_ = ricci(C4, Gamma_)
    R_ = scalar_curv(Ginv_, Ric_)
    check("g4_general.branch_minus_scalar", sp.cancel(R_ + got_R) == 0, str(R_))
    sig_ok = True
    syms = sorted(Gm_.free_symbols, key=str)
    for pt in sample_points(syms, 3):
        sig_ok = sig_ok and inertia(Gm_.subs(pt)) == (3, 3)
    check("g4_general.branch_minus_signature", sig_ok)

    # ---- g4_a56zero
    w_g4z = {(1, 3): a(1, 3), (1, 4): a(1, 4), (2, 3): a(2, 3),
             (2, 4): a(2, 4), (2, 5): a(2, 5), (4, 6): a(4, 6)}
    g_g4z = msym([
        [0, 0, a(1, 3), a(1, 4), 0, 0],
        [0, 0, a(2, 3), a(2, 4), a(2, 5), 0],
        [a(1, 3), a(2, 3), 0, 0, 0, 0],
        [a(1, 4), a(2, 4), 0, 0, 0, -a(4, 6)],
        [0, a(2, 5), 0, 0, 0, 0],
        [0, 0, 0, -a(4, 6), 0, 0]])
    res = run_scenario(
        "g4_a56zero", "g4", w_g4z,
        expect_lambda=a(4, 6) ** 4,
        expect_K=sp.diag(-a(4, 6) ** 2, -a(4, 6) ** 2, a(4, 6) ** 2,
                         a(4, 6) ** 2, a(4, 6) ** 2, -a(4, 6) ** 2),
        eps_expected=1,
        eigen_plus=[{1: 0, 2: 0, 3: 1, 4: 0, 5: 0, 6: 0},
                    {1: 0, 2: 0, 3: 0, 4: 1, 5: 0, 6: 0},
                    {1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 0}],
        eigen_minus=[{1: 1, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0},
                     {1: 0, 2: 1, 3: 0, 4: 0, 5: 0, 6: 0},
                     {1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 1}],
        expect_metric=g_g4z,
        ricci_subs={a(1, 4): 0, a(2, 4): 0},
        # The published display reuses a46/(2*a25*a23)*diag(-1,-1,-1,1,-1,1)
        # from the earlier sections, but the trace of that matrix contradicts
        # the scalar curvature (= a46/(a13*a25), confirmed independently as the
        # a56 -> 0 limit of the general-branch scalar).  The recomputed
        # operator is a46/(2*a13*a25)*diag(1,1,1,-1,1,-1): still diagonal with
        # two eigenvalues differing in sign, as claimed.
        expect_ricci_diag=a(4, 6) / (2 * a(1, 3) * a(2, 5)) * sp.diag(1, 1, 1, -1, 1, -1),
        expect_signature=(3, 3), J_override_root=a(4, 6) ** 2)
    frozen["kG4A56ZeroScalar"] = cxx(res["R"])
    ric4z = res["RicOp"].subs({a(1, 4): 0, a(2, 4): 0}).applyfunc(sp.cancel)
    frozen["kG4A56ZeroRicciOp"] = [cxx(ric4z[i, j]) for i in range(N) for j in range(N)]
    check("g4_a56zero.cert", sp.cancel(cert_of(w_g4z) - 6 * a(1, 3) * a(2, 5) * a(4, 6)) == 0,
          str(cert_of(w_g4z)))

    # ---- g5_main
    w_g5 = {(1, 3): a(1, 3), (1, 4): a(1, 4), (1, 5): a(1, 5), (2, 3): a(2, 3),
            (2, 4): a(2, 4), (2, 5): a(2, 5), (5, 6): a(5, 6)}
    g_g5 = msym([
        [0, 0, -a(1, 3), -a(1, 4), -a(1, 5), 0],
        [0, 0, -a(2, 3), -a(2, 4), -a(2, 5), 0],
        [-a(1, 3), -a(2, 3), 0, 0, 0, 0],
        [-a(1, 4), -a(2, 4), 0, 0, 0, 0],
        [-a(1, 5), -a(2, 5), 0, 0, 0, a(5, 6)],
        [0, 0, 0, 0, a(5, 6), 0]])
    res = run_scenario(
        "g5_main", "g5", w_g5,
        expect_lambda=a(5, 6) ** 4,
        expect_K=a(5, 6) ** 2 * sp.diag(1, 1, -1, -1, -1, 1),
        eps_expected=1,
        eigen_plus=[{1: 1, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0},
                    {1: 0, 2: 1, 3: 0, 4: 0, 5: 0, 6: 0},
                    {1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 1}],
        eigen_minus=[{1: 0, 2: 0, 3: 1, 4: 0, 5: 0, 6: 0},
                     {1: 0, 2: 0, 3: 0, 4: 1, 5: 0, 6: 0},
                     {1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 0}],
        expect_metric=g_g5,
        ricci_subs={a(1, 5): 0, a(2, 5): 0},
        expect_ricci_diag=a(5, 6) / (2 * a(1, 3) * a(2, 4) - 2 * a(1, 4) * a(2, 3))
        * sp.diag(-1, -1, -1, -1, 1, 1),
        expect_signature=(3, 3), J_override_root=a(5, 6) ** 2)
    frozen["kG5MainScalar"] = cxx(res["R"])
    check("g5_main.cert",
          sp.cancel(cert_of(w_g5) + 6 * a(5, 6) * (a(1, 3) * a(2, 4) - a(1, 4) * a(2, 3))) == 0,
          str(cert_of(w_g5)))

    # ---- spec-level single values
    K0 = hitchin_K({(1, 2, 3): sp.Integer(1), (4, 5, 6): sp.Integer(1)})
    check("hitchin.model_form", K0 == sp.diag(1, 1, 1, -1, -1, -1), str(K0))

    # ---- emit frozen header
    out = ["// Generated by tests/oracle/derive_reference_values.py; do not edit by hand.",
           "// Strings are in the scalar expression grammar and are parsed by the tests.",
           "#ifndef STABLEFORMS_TESTS_DERIVED_VALUES_HPP",
           "#define STABLEFORMS_TESTS_DERIVED_VALUES_HPP",
           "",
           "namespace derived {",
           ""]
    for key in sorted(frozen):
        val = frozen[key]
        if isinstance(val, list):
            out.append("inline constexpr const char* %s[%d] = {" % (key, len(val)))
            for v in val:
                out.append('    "%s",' % v)
            out.append("};")
        else:
            out.append('inline constexpr const char* %s = "%s";' % (key, val))
        out.append("")
    out.append("}  // namespace derived")
    out.append("")
    out.append("#endif")
    with open("tests/expected/derived_values.hpp", "w") as fh:
        fh.write("\n".join(out) + "\n")
    print("wrote tests/expected/derived_values.hpp")

    if FAILURES:
        print("FAILED checks: %d" % len(FAILURES))
        for f in FAILURES:
            print("  " + f)
        return 1
    print("all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
