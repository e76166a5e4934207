"""Cubic forms and generator sets shipped in corpus/.

Forms are expression strings in x1..x7 over helpers xi(k), sqrt(n), R(p, q).
Generator builders receive a Field and return sympy matrices acting by
F -> F(A x).  ``gen_corpus.py`` turns both into exact cyclotomic files.
"""
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import sympy as sp

Z = sp.Symbol("z")
R = sp.Rational


class Field:
    """Q(zeta_N) presented as Q[z] / Phi_N(z)."""

    def __init__(self, n):
        self.n = n

    def xi(self, k):
        if self.n % k:
            raise ValueError(f"zeta_{k} not in Q(zeta_{self.n})")
        return Z ** (self.n // k)

    def sqrt(self, n):
        if n == 2:
            return self.xi(8) + self.xi(8) ** 7
        if n == 3:
            return self.xi(12) + self.xi(12) ** 11
        if n == 5:
            return 1 + 2 * self.xi(5) + 2 * self.xi(5) ** 4
        if n == 15:
            return self.sqrt(3) * self.sqrt(5)
        raise ValueError(n)

    def eval(self, text, m):
        ns = {f"x{i + 1}": sp.Symbol(f"x{i + 1}") for i in range(m)}
        ns.update(xi=self.xi, sqrt=self.sqrt, R=R)
        return sp.expand(eval(text, {"__builtins__": {}}, ns))

    def mat(self, rows):
        return sp.Matrix([[self.eval(e, 0) if isinstance(e, str) else e for e in r] for r in rows])


# ---------------------------------------------------------------- forms

def fermat(idx):
    return " + ".join(f"x{i}**3" for i in idx)


def hesse(a, b, c):
    return f"x{a}**3 + x{b}**3 + x{c}**3 + 3*(sqrt(3) - 1)*x{a}*x{b}*x{c}"


def chain(idx, closed=False):
    terms = [f"x{a}**2*x{b}" for a, b in zip(idx, idx[1:])]
    terms.append(f"x{idx[-1]}**2*x{idx[0]}" if closed else f"x{idx[-1]}**3")
    return " + ".join(terms)


def hyperplane(nsum, rest):
    """Fermat sum over x1..x_nsum with x_nsum eliminated, plus ``rest``."""
    elim = "(-(" + " + ".join(f"x{i}" for i in range(1, nsum)) + "))"
    parts = [f"x{i}**3" for i in range(1, nsum)] + [elim + "**3"]
    if rest:
        parts.append(rest)
    return " + ".join(parts)


F12 = (
    "(x1**3 + x2**3 + x3**3 + x4**3 + x5**3 + x6**3 + x7**3) + R(1,5)*(-3*xi(24)**7 - "
    "3*xi(24)**5 + 3*xi(6) - 3*xi(8) + 6*xi(24) - 3)*(x1*x2*x3 + x1*x2*x4 + (xi(6) - "
    "1)*x1*x2*x5 + x1*x2*x6 + (xi(6) - 1)*x1*x3*x4 + x1*x3*x5 + x1*x3*x6 + (xi(6) - "
    "1)*x1*x4*x5 - xi(6)*x1*x4*x6 - xi(6)*x1*x5*x6 + (xi(6) - 1)*x2*x3*x4 + (xi(6) - "
    "1)*x2*x3*x5 - xi(6)*x2*x3*x6 + x2*x4*x5 + x2*x4*x6 - xi(6)*x2*x5*x6 + x3*x4*x5 - "
    "xi(6)*x3*x4*x6 + x3*x5*x6 + x4*x5*x6)"
)
F15 = (
    "x1**3 + 8*x2**3 + 8*(-5 + 4*sqrt(2))*x2*x3**2 + 2*xi(4)*(-11 + 6*sqrt(2))*x3*(x4**2 + "
    "x5**2) - 4*xi(4)*x2*((-5 + 4*sqrt(2))*x4*x5 + 2*(-3 + sqrt(2))*x6*x7) + (1 + xi(4))*(-12 "
    "+ 11*sqrt(2))*(x5*x6**2 - x4*x7**2)"
)

F16 = (
    "x1**3 + x2**3 + x3**3 + R(12,5)*x1*x2*x3 + x1*x4**2 + x2*x5**2 + x3*x6**2 + "
    "R(4,9)*sqrt(15)*x4*x5*x6 + x7**3"
)

F17 = (
    "x1**3 + x2**3 + x2*x5**2 - R(2,3)*x2*x5*x7 + x2*x7**2 - R(2,3)*xi(6)*x2*x5*x6 - "
    "R(2,3)*xi(6)*x2*x6*x7 + (-1 + xi(6))*x2*x6**2 + x3**2*x5 - x3*x4*x5 + x4**2*x5 + "
    "x4**2*x7 + 3*xi(6)*x3*x4*x6 + (-1 + xi(24) - xi(8) - xi(24)**5)*x3**2*x7 + (-1 - "
    "2*xi(24) + 2*xi(8) + 2*xi(24)**5)*x3*x4*x7 + (xi(24) - xi(6) - xi(24)**7)*x4**2*x6 + (- "
    "xi(24) - xi(6) + xi(24)**7)*x3**2*x6 + x5**3 - x6**3 - x5**2*x7 - x5*x7**2 + x7**3 - "
    "xi(6)*x5**2*x6+ 2*xi(6)*x5*x6*x7 - xi(6)*x6*x7**2 + (1 - xi(6))*x5*x6**2 + (1 - "
    "xi(6))*x6**2*x7"
)

F18 = (
    "x1**3 + x2**3 + (R(3,2)*xi(4) - xi(6) + R(1,2))*x2**2*x3 + (-R(1,2)*xi(4) + R(1,2)*xi(6) "
    "+ R(1,2)*xi(12) - 1)*x2*x3**2 + (-R(1,2)*xi(6) - R(1,2)*xi(12) + R(1,2))*x3**3 + (xi(4) "
    "- 2*xi(6) - xi(12) + 2)*x2**2*x4 + (2*xi(12) - 1)*x2*x3*x4 + (R(1,2)*xi(4) + "
    "R(1,2)*xi(6) - R(1,2)*xi(12))*x3**2*x4 + (xi(4) - 2*xi(6) + 1)*x2*x4**2 + (-R(3,2)*xi(4) "
    "+ xi(6) + xi(12) - R(1,2))*x3*x4**2 + (-R(1,2)*xi(6) + R(1,2)*xi(12) - R(1,2))*x4**3 + "
    "(xi(4) + xi(6) - 1)*x2**2*x5 + (-xi(4) - xi(6) + xi(12) - 1)*x2*x3*x5 + (-R(1,2)*xi(4) - "
    "R(1,2))*x3**2*x5 + (2*xi(12))*x2*x4*x5 + (xi(6) - xi(12) - 1)*x3*x4*x5 + (-R(3,2)*xi(4) "
    "+ R(1,2)*xi(6) + R(3,2)*xi(12) - 1)*x4**2*x5 + (-xi(6) - xi(12))*x2*x5**2 + "
    "(-R(1,2)*xi(4) + R(1,2)*xi(6) + R(1,2)*xi(12))*x3*x5**2 + (R(1,2)*xi(4) + xi(6) - xi(12) "
    "- R(1,2))*x4*x5**2 + (-R(1,2)*xi(6) + R(1,2)*xi(12) + R(1,2))*x5**3 + (xi(12) - "
    "2)*x2**2*x6 + (-xi(4) + 2*xi(6) - 1)*x2*x3*x6 + (-R(1,2)*xi(6) - R(1,2)*xi(12) + "
    "R(1,2))*x3**2*x6 + (-2*xi(4) + 2*xi(6) + 2*xi(12) - 2)*x2*x4*x6 + (R(1,2)*xi(6) - "
    "R(1,2)*xi(12) + R(1,2))*x4**2*x6 + (-2*xi(4))*x2*x5*x6 + (xi(6) - xi(12))*x3*x5*x6 + "
    "(xi(4) - xi(6) - xi(12))*x4*x5*x6 + (-R(1,2)*xi(4) + xi(6) + xi(12) - R(1,2))*x5**2*x6 + "
    "(xi(6) - xi(12) + 1)*x2*x6**2 + (xi(4) - R(3,2)*xi(6) - R(1,2)*xi(12) + R(1,2))*x3*x6**2 "
    "+ (R(1,2)*xi(6) - R(1,2)*xi(12) + R(1,2))*x4*x6**2 + (R(3,2)*xi(4) - R(1,2)*xi(6) - "
    "R(3,2)*xi(12) + 1)*x5*x6**2 + (-R(1,2)*xi(6) + R(1,2)*xi(12) - R(1,2))*x6**3 + "
    "(R(1,2)*xi(4) - R(3,2)*xi(6) + R(1,2)*xi(12))*x2**2*x7 + (-2*xi(4) + xi(6) + xi(12) - "
    "1)*x2*x3*x7 + (R(1,2)*xi(4) - 2*xi(6) - xi(12) + R(5,2))*x3**2*x7 + (xi(6) + xi(12) - "
    "2)*x2*x4*x7 + (xi(6) - xi(12) - 1)*x3*x4*x7 + (-R(1,2)*xi(4) + R(1,2)*xi(6) + "
    "R(1,2)*xi(12))*x4**2*x7 + (-2*xi(4) + 2*xi(12))*x2*x5*x7 + (-xi(4) + xi(6) - "
    "xi(12))*x3*x5*x7 + (-xi(4) - 1)*x4*x5*x7 + (R(3,2)*xi(6) - R(1,2)*xi(12) - "
    "R(1,2))*x5**2*x7 + (2*xi(6) - xi(12))*x2*x6*x7 + (xi(4) - 2*xi(6) + 1)*x3*x6*x7 + "
    "(-xi(12) + 1)*x4*x6*x7 + (2*xi(4) - xi(6) - 2*xi(12) + 1)*x5*x6*x7 + (-R(1,2)*xi(4) - "
    "xi(6) + xi(12) - R(1,2))*x6**2*x7 + (-R(1,2)*xi(4) + xi(6) - R(1,2))*x2*x7**2 + "
    "(R(1,2)*xi(4) - R(5,2)*xi(6) + R(1,2)*xi(12) + 2)*x3*x7**2 + (R(1,2)*xi(4) - xi(12) + "
    "R(1,2))*x4*x7**2 + (-R(1,2)*xi(6) - R(1,2)*xi(12) + R(1,2))*x5*x7**2 + (-R(1,2)*xi(4) - "
    "R(1,2)*xi(6) + R(1,2)*xi(12))*x6*x7**2 + (-R(1,2)*xi(6) + R(1,2)*xi(12) + R(1,2))*x7**3"
)


# ----------------------------------------------------------- generators

def diag(*entries):
    return sp.diag(*entries)


def perm(m, cycle):
    """Matrix with (A x)_{c[i]} = x_{c[i+1]}; indices are 1-based."""
    mat = sp.eye(m)
    nxt = cycle[1:] + cycle[:1]
    for a in cycle:
        mat[a - 1, a - 1] = 0
    for a, b in zip(cycle, nxt):
        mat[a - 1, b - 1] = 1
    return mat


def embed(block, m, first):
    """Place ``block`` on coordinates first..first+k-1 (1-based), identity elsewhere."""
    mat = sp.eye(m)
    k = block.shape[0]
    mat[first - 1:first - 1 + k, first - 1:first - 1 + k] = block
    return mat


def diag_at(K, m, entries):
    """Diagonal matrix with entries {index: value}, 1 elsewhere."""
    vals = [1] * m
    for i, v in entries.items():
        vals[i - 1] = v
    return diag(*vals)


def scalar(K, m, k=3):
    return K.xi(k) * sp.eye(m)


def hesse_gens(K, m, first):
    w = K.xi(3)
    cyc = sp.Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    phase = sp.diag(1, w, w**2)
    fourier = (K.sqrt(3) / 3) * sp.Matrix([[1, 1, 1], [1, w, w**2], [1, w**2, w]])
    return [embed(b, m, first) for b in (cyc, phase, fourier)]


def fermat_gens(K, m, idx):
    """Monomial symmetries of a Fermat block: one phase, one transposition, one long cycle."""
    gens = [diag_at(K, m, {idx[0]: K.xi(3)})]
    if len(idx) > 1:
        gens.append(perm(m, [idx[0], idx[1]]))
    if len(idx) > 2:
        gens.append(perm(m, list(idx)))
    return gens


def chain_diag(K, m, length, order, tail=None):
    """diag(xi_order^(1, -2, 4, ...)) on x1..x_length, which fixes x1^2x2 + x2^2x3 + ..."""
    vals = {i + 1: K.xi(order) ** ((-2) ** i % order) for i in range(length)}
    if tail:
        vals.update(tail)
    return diag_at(K, m, vals)


def hyperplane_perms(m, nsum):
    """Transposition and long cycle of x1..x_nsum with x_nsum = -(x1 + ... + x_{nsum-1})."""
    k = nsum - 1
    cyc = sp.eye(m)
    cyc[:k, :k] = sp.zeros(k, k)
    for i in range(k - 1):
        cyc[i, i + 1] = 1
    for j in range(k):
        cyc[k - 1, j] = -1
    return [perm(m, [1, 2]), cyc]


def chain14_diag(K, m):
    """Diagonal symmetries of x1^2x2 + x2^2x5 + x3^2x4 + x4^2x5 + x5^2x6 + x2x4x6 + x6^3."""
    x = K.xi(24)
    def d(*e):
        return diag_at(K, m, {i + 1: x**v for i, v in enumerate(e)})
    return [d(7, 10, 1, 22, 4, 16), d(12, 0, 0, 0, 0, 0), d(0, 0, 12, 0, 0, 0), d(6, 12, 6, 12, 0, 0)]


X15_G2 = [
    ["1", "0", "0", "0", "0", "0", "0"],
    ["0", "-sqrt(2)/4", "0", "(-3 + sqrt(2))/8", "(-3 + sqrt(2))/8*xi(4)",
     "-R(1,8) + xi(4)/4 + (3 + xi(4))*sqrt(2)/16", "-R(1,4) + xi(4)/8 - (1 + 3*xi(4))*sqrt(2)/16"],
    ["0", "0", "sqrt(2)/4", "(3 + sqrt(2))/8*xi(4)", "(3 + sqrt(2))/8",
     "R(1,8) - xi(4)/4 + (3 + xi(4))*sqrt(2)/16", "R(1,4) - xi(4)/8 - (1 + 3*xi(4))*sqrt(2)/16"],
    ["0", "R(1,2)", "xi(4)/2", "-R(1,2)", "-sqrt(2)/4*xi(4)", "-xi(4)/4 - xi(8)/4", "-xi(4)/4 + xi(8)**3/4"],
    ["0", "-xi(4)/2", "-R(1,2)", "sqrt(2)/4*xi(4)", "-R(1,2)", "-xi(4)/4 + xi(8)/4", "-xi(4)/4 - xi(8)**3/4"],
    ["0", "R(1,2) + xi(8)/2", "-R(1,2) + xi(8)/2", "R(1,4) + xi(8)/4", "R(1,4) - xi(8)/4", "xi(4)/2", "0"],
    ["0", "xi(4)/2 + xi(8)/2", "-xi(4)/2 + xi(8)/2", "-R(1,4) - xi(8)**3/4", "-R(1,4) + xi(8)**3/4", "0",
     "-xi(4)/2"],
]

X16_G2 = [
    ["R(1,2)", "R(1,2)", "R(1,2)", "sqrt(15)/18", "sqrt(15)/18", "sqrt(15)/18"],
    ["R(1,2)", "xi(3)/2", "-xi(6)/2", "sqrt(15)/18", "sqrt(15)/18*xi(3)", "-(3*sqrt(5)*xi(4) + sqrt(15))/36"],
    ["R(1,2)", "-xi(6)/2", "xi(3)/2", "sqrt(15)/18", "-(3*sqrt(5)*xi(4) + sqrt(15))/36", "sqrt(15)/18*xi(3)"],
    ["sqrt(15)/10", "sqrt(15)/10", "sqrt(15)/10", "-R(1,2)", "-R(1,2)", "-R(1,2)"],
    ["sqrt(15)/10", "sqrt(15)/10*xi(3)", "-sqrt(15)/10*xi(6)", "-R(1,2)", "-xi(3)/2", "xi(6)/2"],
    ["sqrt(15)/10", "-sqrt(15)/10*xi(6)", "sqrt(15)/10*xi(3)", "-R(1,2)", "xi(6)/2", "-xi(3)/2"],
]

X17_G = [
    [["1", "0", "0", "0", "0", "0", "0"], ["0", "1", "0", "0", "0", "0", "0"],
     ["0", "0", "1 - xi(8) - xi(8)**3", "-2", "0", "0", "0"],
     ["0", "0", "-1 - xi(8) - xi(8)**3", "-1 + xi(8) + xi(8)**3", "0", "0", "0"],
     ["0", "0", "0", "0", "1", "xi(3)**2", "0"], ["0", "0", "0", "0", "0", "-1", "0"],
     ["0", "0", "0", "0", "0", "xi(3)**2", "1"]],
    [["1", "0", "0", "0", "0", "0", "0"], ["0", "xi(3)", "0", "0", "0", "0", "0"],
     ["0", "0", "0", "-xi(3)", "0", "0", "0"], ["0", "0", "xi(3)", "-xi(3)", "0", "0", "0"],
     ["0", "0", "0", "0", "xi(3)", "1", "0"], ["0", "0", "0", "0", "0", "-xi(3)", "-xi(3)**2"],
     ["0", "0", "0", "0", "0", "1", "0"]],
    [["1", "0", "0", "0", "0", "0", "0"], ["0", "1", "0", "0", "0", "0", "0"],
     ["0", "0", "1", "-xi(8) - xi(8)**3", "0", "0", "0"], ["0", "0", "-xi(8) - xi(8)**3", "-1", "0", "0", "0"],
     ["0", "0", "0", "0", "0", "-xi(3)**2", "-1"], ["0", "0", "0", "0", "-xi(3)", "0", "xi(3)"],
     ["0", "0", "0", "0", "0", "0", "-1"]],
]

X18_G = [
    [["1", "0", "0", "0", "0", "0", "0"], ["0", "1", "0", "0", "xi(4)", "-1", "0"],
     ["0", "0", "0", "0", "0", "0", "xi(12)**7"], ["0", "0", "0", "0", "xi(12)**11", "0", "0"],
     ["0", "0", "0", "0", "0", "xi(4)**3", "0"], ["0", "0", "0", "xi(3)", "0", "0", "0"],
     ["0", "0", "xi(12)**7", "0", "0", "0", "-xi(3)"]],
    [["1", "0", "0", "0", "0", "0", "0"],
     ["0", "-xi(3)**2", "xi(12)**7", "0", "0", "xi(3)**2 - xi(12)**11", "-xi(3)"],
     ["0", "1 - xi(4)", "-xi(12)**7", "-xi(3) + xi(12)**7", "xi(4)", "0", "0"],
     ["0", "0", "xi(4)", "0", "0", "0", "-1"], ["0", "-xi(3)**2", "0", "0", "0", "xi(3)**2", "0"],
     ["0", "-xi(3)**2 - xi(12)**11", "0", "0", "0", "xi(3)**2", "-xi(12)**7"],
     ["0", "xi(4)", "xi(3) + xi(12)**7", "-xi(12)**7", "-1", "0", "xi(12)**7"]],
    [["1", "0", "0", "0", "0", "0", "0"], ["0", "-xi(3)**2", "xi(4)", "-xi(3)", "0", "0", "xi(4)"],
     ["0", "-1 - xi(4)", "-xi(3)", "xi(3) + xi(12)**7", "1", "0", "0"],
     ["0", "-xi(3)", "xi(4)**3", "-1", "0", "0", "xi(4)**3"],
     ["0", "0", "-xi(12)**11", "0", "0", "0", "xi(3)**2 - xi(12)**11"],
     ["0", "1", "-1 + xi(4)", "-xi(3)", "xi(4)", "xi(3)", "-1"],
     ["0", "1", "0", "-xi(3)", "-1", "0", "-xi(3)"]],
]


def printed(K, rows):
    return K.mat(rows)


def lower_block(mat):
    """Drop the first coordinate of a generator acting trivially on it."""
    return mat[1:, 1:]


# --------------------------------------------------------------- records

@dataclass
class Record:
    id: str
    m: int
    conductor: int
    form: str
    gens: Optional[Callable] = None
    linear_order: Optional[int] = None
    projective_order: Optional[int] = None
    symplectic_order: Optional[int] = None
    partial: bool = False
    note: str = ""
    shift_to: Optional[str] = None


def _fivefolds():
    r = []
    r.append(Record("X1", 7, 3, fermat(range(1, 8)),
                    lambda K: [diag_at(K, 7, {1: K.xi(3), 2: K.xi(3) ** 2}), perm(7, [1, 2]),
                               perm(7, list(range(1, 8)))],
                    3674160))
    r.append(Record("X2", 7, 12, hesse(1, 2, 3) + " + " + fermat([4, 5, 6, 7]),
                    lambda K: hesse_gens(K, 7, 1)
                    + [diag_at(K, 7, {4: K.xi(3), 5: K.xi(3) ** 2}), perm(7, [4, 5]), perm(7, [4, 5, 6, 7])],
                    69984))
    r.append(Record("X3", 7, 24, chain([1, 2, 3, 4]) + " + " + fermat([5, 6, 7]),
                    lambda K: [chain_diag(K, 7, 3, 8, {4: 1})] + fermat_gens(K, 7, [5, 6, 7]),
                    1296))
    r.append(Record("X4", 7, 3, hyperplane(5, fermat([5, 6, 7])),
                    lambda K: hyperplane_perms(7, 5) + fermat_gens(K, 7, [5, 6, 7]),
                    19440, note="hyperplane x1+...+x5=0 solved for x5; x6,x7,x8 renamed x5,x6,x7"))
    r.append(Record("X5", 7, 48, chain([1, 2, 3, 4, 5]) + " + " + fermat([6, 7]),
                    lambda K: [chain_diag(K, 7, 4, 16)] + fermat_gens(K, 7, [6, 7]),
                    288))
    r.append(Record("X6", 7, 33, chain([1, 2, 3, 4, 5], closed=True) + " + " + fermat([6, 7]),
                    lambda K: [chain_diag(K, 7, 5, 11), perm(7, [1, 2, 3, 4, 5])] + fermat_gens(K, 7, [6, 7]),
                    11880, partial=True,
                    note="PSL(2,11) factor needs non-monomial generators not shipped; monomial part only"))
    r.append(Record("X7", 7, 12, hesse(1, 2, 3) + " + " + hesse(4, 5, 6) + " + x7**3",
                    lambda K: hesse_gens(K, 7, 1) + [perm(7, [1, 4]) * perm(7, [2, 5]) * perm(7, [3, 6])],
                    23328))
    r.append(Record("X8", 7, 24, chain([1, 2, 3, 4]) + " + " + hesse(5, 6, 7),
                    lambda K: [chain_diag(K, 7, 3, 8, {4: 1})] + hesse_gens(K, 7, 5),
                    864))
    r.append(Record("X9", 7, 12, hyperplane(5, hesse(5, 6, 7)),
                    lambda K: hyperplane_perms(7, 5) + hesse_gens(K, 7, 5),
                    12960, note="hyperplane x1+...+x5=0 solved for x5; x6,x7,x8 renamed x5,x6,x7"))
    r.append(Record("X10", 7, 96, chain([1, 2, 3, 4, 5, 6]) + " + x7**3",
                    lambda K: [chain_diag(K, 7, 5, 32), diag_at(K, 7, {7: K.xi(3)})],
                    96))
    r.append(Record("X11", 7, 63, chain([1, 2, 3, 4, 5, 6], closed=True) + " + x7**3",
                    lambda K: [chain_diag(K, 7, 6, 63), perm(7, [1, 2, 3, 4, 5, 6])],
                    378))
    r.append(Record("X12", 7, 24, F12, None, 2160, partial=True,
                    note="generators of C3.M10 are not shipped; supply them as X12.group"))
    r.append(Record("X13", 7, 3, hyperplane(7, "x7**3"),
                    lambda K: hyperplane_perms(7, 7) + [diag_at(K, 7, {7: K.xi(3)})],
                    15120, note="hyperplane x1+...+x7=0 solved for x7; x8 renamed x7"))
    r.append(Record("X14", 7, 24,
                    "x1**2*x2 + x2**2*x5 + x3**2*x4 + x4**2*x5 + x5**2*x6 + x2*x4*x6 + x6**3 + x7**3",
                    lambda K: chain14_diag(K, 7) + [perm(7, [1, 3]) * perm(7, [2, 4])],
                    96))
    r.append(Record("X15", 7, 24, F15,
                    lambda K: [diag(K.xi(3), 1, -1, K.xi(4) ** 3, K.xi(4), K.xi(8) ** 7, K.xi(8)),
                               printed(K, X15_G2)],
                    1008))
    r.append(Record("X16", 7, 60, F16,
                    lambda K: [diag(1, K.xi(3), K.xi(3) ** 2, -1, K.xi(3), -K.xi(3) ** 2, 1),
                               embed(printed(K, X16_G2), 7, 1)],
                    7560))
    r.append(Record("X17", 7, 24, F17, lambda K: [printed(K, g) for g in X17_G], 144))
    r.append(Record("X18", 7, 12, F18, lambda K: [printed(K, g) for g in X18_G], 648))
    r.append(Record("X19", 7, 64, chain([1, 2, 3, 4, 5, 6, 7]),
                    lambda K: [chain_diag(K, 7, 6, 64)], 64))
    r.append(Record("X20", 7, 43, chain([1, 2, 3, 4, 5, 6, 7], closed=True),
                    lambda K: [chain_diag(K, 7, 7, 43), perm(7, [1, 2, 3, 4, 5, 6, 7])], 301))
    for rec in r:
        rec.projective_order = rec.linear_order
    return r


def _drop_first(gens_fn):
    return lambda K: [lower_block(g) for g in gens_fn(K)] + [scalar(K, 6)]


def _fourfolds():
    r = []
    r.append(Record("X1'", 6, 3, fermat(range(1, 7)),
                    lambda K: [diag_at(K, 6, {1: K.xi(3)}), perm(6, [1, 2]), perm(6, [1, 2, 3, 4, 5, 6])],
                    None, 174960, 29160))
    r.append(Record("X2'", 6, 12, hesse(1, 2, 3) + " + " + fermat([4, 5, 6]),
                    lambda K: hesse_gens(K, 6, 1) + fermat_gens(K, 6, [4, 5, 6]),
                    None, 5832, 486))
    r.append(Record("X3'", 6, 24, chain([1, 2, 3, 4]) + " + " + fermat([5, 6]),
                    lambda K: [chain_diag(K, 6, 3, 8, {4: 1})] + fermat_gens(K, 6, [5, 6]) + [scalar(K, 6)],
                    None, 144, 6))
    r.append(Record("X4'", 6, 3, hyperplane(5, fermat([5, 6])),
                    lambda K: hyperplane_perms(6, 5) + fermat_gens(K, 6, [5, 6]) + [scalar(K, 6)],
                    None, 2160, 360, note="hyperplane x1+...+x5=0 solved for x5; x6,x7 renamed x5,x6"))
    r.append(Record("X5'", 6, 48, chain([1, 2, 3, 4, 5]) + " + x6**3",
                    lambda K: [chain_diag(K, 6, 4, 16, {6: K.xi(3)}), scalar(K, 6)],
                    None, 48, 1))
    r.append(Record("X6'", 6, 33, chain([1, 2, 3, 4, 5], closed=True) + " + x6**3",
                    lambda K: [chain_diag(K, 6, 5, 11), perm(6, [1, 2, 3, 4, 5]), diag_at(K, 6, {6: K.xi(3)}),
                               scalar(K, 6)],
                    None, 1980, 660, partial=True,
                    note="PSL(2,11) factor needs non-monomial generators not shipped; monomial part only"))
    r.append(Record("X7'", 6, 12, hesse(1, 2, 3) + " + " + hesse(4, 5, 6),
                    lambda K: hesse_gens(K, 6, 1) + [perm(6, [1, 4]) * perm(6, [2, 5]) * perm(6, [3, 6])],
                    None, 7776, 1944))
    r.append(Record("X8'", 6, 96, chain([1, 2, 3, 4, 5, 6]),
                    lambda K: [chain_diag(K, 6, 5, 32), scalar(K, 6)], None, 32, 1))
    r.append(Record("X9'", 6, 63, chain([1, 2, 3, 4, 5, 6], closed=True),
                    lambda K: [chain_diag(K, 6, 6, 63), perm(6, [1, 2, 3, 4, 5, 6])], None, 126, 21))
    r.append(Record("X10'", 6, 24, F12.replace(" + x7**3", ""), None, None, 720, 720, partial=True,
                    note="generators of M10 are not shipped; supply them as X10'.group"))
    r.append(Record("X11'", 6, 3, hyperplane(7, ""),
                    lambda K: hyperplane_perms(6, 7) + [scalar(K, 6)], None, 5040, 2520,
                    note="hyperplane x1+...+x7=0 solved for x7"))
    r.append(Record("X12'", 6, 24,
                    "x1**2*x2 + x2**2*x5 + x3**2*x4 + x4**2*x5 + x5**2*x6 + x2*x4*x6 + x6**3",
                    lambda K: chain14_diag(K, 6) + [perm(6, [1, 3]) * perm(6, [2, 4]), scalar(K, 6)],
                    None, 32, 16))
    five = {rec.id: rec for rec in _fivefolds()}
    for four, src, proj, sym in (("X13'", "X15", 336, 168), ("X14'", "X17", 48, 48), ("X15'", "X18", 216, 72)):
        r.append(Record(four, 6, five[src].conductor, "", _drop_first(five[src].gens), None, proj, sym,
                        shift_to=src, note=f"{src} with the x1^3 summand removed, variables shifted down"))
    for rec in r:
        if rec.projective_order is not None:
            rec.linear_order = 3 * rec.projective_order
    return r


def records():
    return _fivefolds() + _fourfolds()


# Extra data used by the test-suite.
FA7 = F16.replace(" + x7**3", "")
A7_GENS = lambda K: [diag(1, K.xi(3), K.xi(3) ** 2, -1, K.xi(3), -K.xi(3) ** 2), printed(K, X16_G2)]
M96_GENS = lambda K: [
    diag(1, K.xi(4) ** 3, K.xi(8) ** 5, K.xi(16) ** 3, K.xi(32) ** 13, 1, 1) * perm(7, [6, 7]),
    diag(1, 1, 1, 1, 1, K.xi(3), K.xi(3) ** 2),
]
