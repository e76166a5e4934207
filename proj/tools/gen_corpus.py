#!/usr/bin/env python3
"""Write corpus/ from tools/corpus_data.py.

Coefficients are reduced modulo the N-th cyclotomic polynomial and written as
``N d c0 ... c_{phi-1}`` with d > 0 and gcd(d, c0, ...) = 1.  Every generator is
checked numerically against its form before anything is written.
"""
import argparse
import cmath
import json
import math
import random
from functools import reduce
from pathlib import Path

import sympy as sp

import corpus_data as cd

Z = cd.Z


def encode(expr, n):
    phi = sp.totient(n)
    poly = sp.Poly(sp.expand(expr), Z, domain="QQ")
    rem = poly.rem(sp.Poly(sp.cyclotomic_poly(n, Z), Z, domain="QQ"))
    coeffs = [sp.Rational(0)] * phi
    for (k,), c in rem.terms():
        coeffs[k] = sp.Rational(c)
    den = reduce(sp.ilcm, [c.q for c in coeffs], 1)
    nums = [int(c * den) for c in coeffs]
    g = reduce(math.gcd, nums, den)
    return " ".join(str(v) for v in [n, den // g] + [x // g for x in nums])


def grevlex_desc(exps):
    return sorted(exps, key=lambda e: tuple(reversed(e)))


def form_terms(expr, m):
    xs = sp.symbols(f"x1:{m + 1}")
    poly = sp.Poly(sp.expand(expr), *xs)
    return {mon: coeff for mon, coeff in poly.terms()}


def form_text(terms, m, n):
    lines = [f"form {m} 3 {n}"]
    for e in grevlex_desc(list(terms)):
        enc = encode(terms[e], n)
        if enc.split()[2:] == ["0"] * (len(enc.split()) - 2):
            continue
        lines.append(" ".join(str(v) for v in e) + " | " + enc)
    return "\n".join(lines) + "\n"


def matrix_text(mat, n, header=True):
    m = mat.shape[0]
    lines = [f"matrix {m} {n}"] if header else []
    for i in range(m):
        lines.append(" ; ".join(encode(mat[i, j], n) for j in range(m)))
    return lines


def group_text(gens, m, n):
    lines = [f"group {m} {n} {len(gens)}"]
    for g in gens:
        lines += matrix_text(g, n)
    return "\n".join(lines) + "\n"


def shifted(terms):
    """Drop the x1^3 summand and shift x_{k+1} -> x_k."""
    out = {}
    for e, c in terms.items():
        if e[0] == 3:
            continue
        assert e[0] == 0, "first variable must be separated"
        out[e[1:]] = c
    return out


def numeric(expr, n):
    zeta = cmath.exp(2j * math.pi / n)
    return complex(sp.lambdify(Z, expr, "math")(zeta)) if expr.free_symbols else complex(expr)


def check_invariance(terms, gens, m, n, rng):
    coeffs = {e: numeric(c, n) for e, c in terms.items()}
    def value(x):
        return sum(c * math.prod(x[i] ** e[i] for i in range(m)) for e, c in coeffs.items())
    for g in gens:
        gn = [[numeric(g[i, j], n) for j in range(m)] for i in range(m)]
        for _ in range(3):
            x = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(m)]
            y = [sum(gn[i][j] * x[j] for j in range(m)) for i in range(m)]
            a, b = value(y), value(x)
            if abs(a - b) > 1e-8 * max(1.0, abs(b)):
                return False
    return True


def file_stem(rid):
    return rid.replace("'", "p")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    args = ap.parse_args()
    out = Path(args.out)
    (out / "fivefolds").mkdir(parents=True, exist_ok=True)
    (out / "fourfolds").mkdir(parents=True, exist_ok=True)
    (out / "extra").mkdir(parents=True, exist_ok=True)
    rng = random.Random(7)

    recs = cd.records()
    terms_by_id = {}
    manifest = []
    for rec in recs:
        K = cd.Field(rec.conductor)
        sub = "fivefolds" if rec.m == 7 else "fourfolds"
        if rec.shift_to:
            terms = shifted(terms_by_id[rec.shift_to])
        else:
            terms = form_terms(K.eval(rec.form, rec.m), rec.m)
        terms_by_id[rec.id] = terms
        stem = file_stem(rec.id)
        (out / sub / f"{stem}.form").write_text(form_text(terms, rec.m, rec.conductor))
        entry = {
            "id": rec.id,
            "vars": rec.m,
            "form": f"{sub}/{stem}.form",
            "group": None,
            "linear_order": rec.linear_order,
            "projective_order": rec.projective_order,
            "symplectic_order": rec.symplectic_order,
            "partial": rec.partial,
            "note": rec.note,
        }
        if rec.gens is not None:
            gens = rec.gens(K)
            if not check_invariance(terms, gens, rec.m, rec.conductor, rng):
                raise SystemExit(f"{rec.id}: generator does not fix the form")
            (out / sub / f"{stem}.group").write_text(group_text(gens, rec.m, rec.conductor))
            entry["group"] = f"{sub}/{stem}.group"
        manifest.append(entry)
        print(f"{rec.id}: {len(terms)} terms", "partial" if rec.partial else "")

    K = cd.Field(60)
    fa7 = form_terms(K.eval(cd.FA7, 6), 6)
    a7 = cd.A7_GENS(K)
    assert check_invariance(fa7, a7, 6, 60, rng)
    (out / "extra" / "FA7.form").write_text(form_text(fa7, 6, 60))
    (out / "extra" / "A7.group").write_text(group_text(a7, 6, 60))
    (out / "extra" / "A7_1.matrix").write_text("\n".join(matrix_text(a7[0], 60)) + "\n")
    K = cd.Field(96)
    (out / "extra" / "m96.group").write_text(group_text(cd.M96_GENS(K), 7, 96))
    K = cd.Field(48)
    x5p = [r for r in recs if r.id == "X5'"][0].gens(K)
    (out / "extra" / "X5p_1.matrix").write_text("\n".join(matrix_text(x5p[0], 48)) + "\n")

    (out / "examples.json").write_text(json.dumps(manifest, indent=1) + "\n")


if __name__ == "__main__":
    main()
