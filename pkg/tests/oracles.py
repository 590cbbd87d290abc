"""Brute-force references shared by the tests: monomial expansion and rank counts over Fraction."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from pasl_groebner.bidet import expand_column
from pasl_groebner.polyring import Poly


def rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    width = len(rows[0])
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col] / lead
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    return out


def polynomial_quotient_dim(gens: list[Poly], nvars: int, degree: int) -> int:
    """dim of (k[x] / <gens>) in one degree, all variables of degree 1, gens homogeneous."""
    basis = monomials(nvars, degree)
    column = {e: i for i, e in enumerate(basis)}
    rows = []
    for g in gens:
        dg = sum(next(iter(g.terms)))
        if dg > degree:
            continue
        for m in monomials(nvars, degree - dg):
            row = [Fraction(0)] * len(basis)
            for e, c in g.shift(m).terms.items():
                row[column[e]] += c
            rows.append(row)
    return len(basis) - rank(rows)


def monomial_quotient_count(generators: list[tuple[int, ...]], nvars: int, degree: int) -> int:
    return sum(
        1 for e in monomials(nvars, degree)
        if not any(all(a <= b for a, b in zip(g, e)) for g in generators)
    )


def expand_columns(columns, n: int, m: int) -> Poly:
    out = Poly.constant(n * m)
    for col in columns:
        out = out * expand_column(col, n, m)
    return out


def random_column(rng: random.Random, n: int, m: int, height: int):
    rows = tuple(sorted(rng.sample(range(1, n + 1), height)))
    cols = tuple(sorted(rng.sample(range(1, m + 1), height)))
    return rows, cols


def random_columns(rng: random.Random, n: int, m: int, max_size: int):
    """Columns of total size <= max_size, in no particular order."""
    out = []
    size = 0
    while True:
        h = rng.randint(1, min(n, m))
        if size + h > max_size:
            break
        out.append(random_column(rng, n, m, h))
        size += h
        if rng.random() < 0.25:
            break
    return out
