"""Bideterminants of a generic n x m matrix.

A column is a pair (rows, cols) of equal-length strictly increasing index
tuples and stands for the minor on those rows and columns. A bitableau is a
multiset of columns, kept sorted by non-increasing height and then by content,
and stands for the product of its minors. It is standard when consecutive
columns are comparable: the earlier one is at least as tall and entrywise
smaller on the common rows.
"""
from __future__ import annotations

import itertools
import logging
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .config import MAX_MATRIX_SIZE, REWRITE_FUEL
from .errors import InputFormatError, InternalConsistencyError, InvalidAlgebra, NonTerminatingRewrite
from .pasl import PaslAlgebra, PaslElement, PaslTermOrder
from .polyring import ExpVec, HilbertSeries, OrdTermOrder, Poly, hilbert_homogeneous

log = logging.getLogger(__name__)

Column = tuple[tuple[int, ...], tuple[int, ...]]


def _sort_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    if len(set(seq)) != len(seq):
        return 0, ()
    inversions = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return (-1 if inversions % 2 else 1), tuple(sorted(seq))


def _subset_sign(positions: Sequence[int]) -> int:
    """Sign of the shuffle putting `positions` first, the rest after, both in order."""
    k = len(positions)
    return -1 if (sum(positions) - k * (k - 1) // 2) % 2 else 1


def column_key(col: Column) -> tuple:
    return (-len(col[0]), col[0], col[1])


def columns_comparable(a: Column, b: Column) -> bool:
    """a <= b in the minor order: a at least as tall, entrywise smaller on b's rows."""
    if len(a[0]) < len(b[0]):
        return False
    return all(a[0][i] <= b[0][i] and a[1][i] <= b[1][i] for i in range(len(b[0])))


def canonical_form(raw_columns: Iterable[Sequence[Sequence[int]]]) -> tuple[int, tuple[Column, ...]]:
    """Sort entries inside each column (tracking the sign) and sort the columns.

    Returns (0, ()) when some column repeats a row or a column index.
    """
    sign = 1
    out: list[Column] = []
    for rows, cols in raw_columns:
        if len(rows) != len(cols):
            raise ValueError(f"column ({list(rows)}|{list(cols)}) is not square")
        if not rows:
            continue
        s1, r = _sort_sign(tuple(rows))
        s2, c = _sort_sign(tuple(cols))
        if not s1 or not s2:
            return 0, ()
        sign *= s1 * s2
        out.append((r, c))
    out.sort(key=column_key)
    return sign, tuple(out)


@dataclass(frozen=True)
class Bitableau:
    columns: tuple[Column, ...] = ()

    @classmethod
    def of(cls, raw_columns: Iterable[Sequence[Sequence[int]]]) -> tuple[int, "Bitableau"]:
        sign, cols = canonical_form(raw_columns)
        return sign, cls(cols)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(c[0]) for c in self.columns)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def row(self, tableau: int, i: int) -> list[int]:
        """Entries at height i (0-based) of the row (0) or column (1) tableau."""
        return [c[tableau][i] for c in self.columns if len(c[0]) > i]

    def theta(self) -> tuple[int, ...]:
        height = self.shape[0] if self.columns else 0
        out: list[int] = []
        for tableau in (0, 1):
            for i in range(height):
                out.extend(self.row(tableau, i))
        return tuple(out)

    def is_standard(self) -> bool:
        return all(columns_comparable(a, b) for a, b in zip(self.columns, self.columns[1:]))

    def content(self, n: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        rows = [0] * n
        cols = [0] * m
        for r, c in self.columns:
            for i in r:
                rows[i - 1] += 1
            for j in c:
                cols[j - 1] += 1
        return tuple(rows), tuple(cols)

    def to_text(self) -> str:
        if not self.columns:
            return "1"
        return "*".join(
            f"det({' '.join(map(str, r))}|{' '.join(map(str, c))})" for r, c in self.columns
        )

    def __str__(self) -> str:
        return self.to_text()


def is_standard_bitableau(t: Bitableau) -> bool:
    return t.is_standard()


def _shape_key(shape: Sequence[int]) -> tuple:
    return (sum(shape), tuple(-h for h in shape))


def _bitableau_key(t: Bitableau) -> tuple:
    return _shape_key(t.shape) + (tuple(-v for v in t.theta()),)


def _cmp(a: tuple, b: tuple) -> int:
    return (a > b) - (a < b)


def compare_shapes(a: Sequence[int], b: Sequence[int]) -> int:
    """-1 when a is smaller: smaller size, or equal size and lexicographically larger."""
    return _cmp(_shape_key(a), _shape_key(b))


def compare_bitableaux(a: Bitableau, b: Bitableau) -> int:
    return _cmp(_bitableau_key(a), _bitableau_key(b))


# --------------------------------------------------------------------------
# Straightening
# --------------------------------------------------------------------------


def _transpose(col: Column) -> Column:
    return (col[1], col[0])


def _shuffle_rows(a: Column, b: Column, r: int) -> list[tuple[int, list[Column]]]:
    """Rewrite a*b, where a is at least as tall as b and a.rows[r] > b.rows[r].

    The rows b.rows[:r+1] + a.rows[r:] are shuffled between the two columns;
    the identity term is moved to the left, and the remaining terms either keep
    the shape or carry a minor of height len(a)+1.
    """
    I, J = a
    L, T = b
    s, t = len(I), len(L)
    p, q = r + 1, s - r
    x, y = L, T
    z = I[r:] + I[:r]
    w = J
    rot = -1 if (r * (s - r)) % 2 else 1
    A = x[:p] + z[:q]
    terms: list[tuple[int, list[Column]]] = []
    for P in itertools.combinations(range(t), p):
        Pc = tuple(i for i in range(t) if i not in P)
        eP = _subset_sign(P)
        for Q in itertools.combinations(range(s), q):
            Qc = tuple(j for j in range(s) if j not in Q)
            big_cols = tuple(y[i] for i in P) + tuple(w[j] for j in Q)
            terms.append((rot * eP * _subset_sign(Q), [
                (A, big_cols),
                (x[p:], tuple(y[i] for i in Pc)),
                (z[q:], tuple(w[j] for j in Qc)),
            ]))
    first = tuple(range(p))
    for S in itertools.combinations(range(p + q), p):
        if S == first:
            continue
        Sc = tuple(i for i in range(p + q) if i not in S)
        terms.append((-rot * _subset_sign(S), [
            (tuple(A[i] for i in S) + x[p:], y),
            (tuple(A[i] for i in Sc) + z[q:], w),
        ]))
    return terms


def _expand_pair(a: Column, b: Column) -> list[tuple[int, list[Column]]]:
    t = len(b[0])
    for r in range(t):
        if a[0][r] > b[0][r]:
            return _shuffle_rows(a, b, r)
    for r in range(t):
        if a[1][r] > b[1][r]:
            return [
                (c, [_transpose(col) for col in cols])
                for c, cols in _shuffle_rows(_transpose(a), _transpose(b), r)
            ]
    raise InternalConsistencyError(f"columns {a} and {b} are comparable")


class _Straightener:
    """Memoized straightening of canonical column tuples."""

    def __init__(self, fuel: int):
        self.fuel = fuel
        self.cache: dict[tuple[Column, ...], dict[tuple[Column, ...], int]] = {}

    def run(self, columns: tuple[Column, ...]) -> dict[tuple[Column, ...], int]:
        budget = [self.fuel]
        return self._go(columns, budget, set())

    def _go(self, columns: tuple[Column, ...], budget: list[int], stack: set) -> dict[tuple[Column, ...], int]:
        hit = self.cache.get(columns)
        if hit is not None:
            return hit
        clash = next(
            (k for k in range(len(columns) - 1) if not columns_comparable(columns[k], columns[k + 1])),
            None,
        )
        if clash is None:
            result = {columns: 1}
            self.cache[columns] = result
            return result
        if columns in stack:
            raise NonTerminatingRewrite(f"straightening {Bitableau(columns)} cycles")
        budget[0] -= 1
        if budget[0] < 0:
            raise NonTerminatingRewrite(f"straightening budget exhausted at {Bitableau(columns)}")
        a, b = columns[clash], columns[clash + 1]
        rest = columns[:clash] + columns[clash + 2:]
        stack.add(columns)
        result: dict[tuple[Column, ...], int] = {}
        try:
            for coeff, new_cols in _expand_pair(a, b):
                sign, canon = canonical_form(list(new_cols) + list(rest))
                if not sign:
                    continue
                for std, v in self._go(canon, budget, stack).items():
                    total = result.get(std, 0) + coeff * sign * v
                    if total:
                        result[std] = total
                    else:
                        result.pop(std, None)
        finally:
            stack.discard(columns)
        self.cache[columns] = result
        return result


def straighten(t: Bitableau, fuel: int = 1_000_000) -> dict[Bitableau, int]:
    """Expansion of the bideterminant of t in standard bitableaux."""
    out = _Straightener(fuel).run(t.columns)
    return {Bitableau(cols): c for cols, c in out.items()}


def leading_bitableau(a: Bitableau, b: Bitableau) -> Bitableau:
    """Merge the columns of two standard bitableaux and sort every row of both tableaux."""
    cols = sorted(a.columns + b.columns, key=lambda c: -len(c[0]))
    if not cols:
        return Bitableau()
    heights = [len(c[0]) for c in cols]
    tabs = [[list(c[0]) for c in cols], [list(c[1]) for c in cols]]
    for tab in tabs:
        for i in range(heights[0]):
            idx = [k for k, h in enumerate(heights) if h > i]
            for k, v in zip(idx, sorted(tab[k][i] for k in idx)):
                tab[k][i] = v
    merged = tuple(sorted(((tuple(r), tuple(c)) for r, c in zip(*tabs)), key=column_key))
    return Bitableau(merged)


def lt_quotient(num: Bitableau, den: Bitableau) -> Optional[Bitableau]:
    """The standard q with leading_bitableau(den, q) == num, or None."""
    big, small = Counter(num.shape), Counter(den.shape)
    if any(small[h] > big[h] for h in small):
        return None
    heights = sorted((big - small).elements(), reverse=True)
    height = num.shape[0] if num.columns else 0
    tabs: list[list[list[int]]] = [[[] for _ in heights], [[] for _ in heights]]
    for tab in (0, 1):
        for i in range(height):
            left = Counter(num.row(tab, i))
            right = Counter(den.row(tab, i))
            if any(right[v] > left[v] for v in right):
                return None
            values = sorted((left - right).elements())
            slots = [k for k, h in enumerate(heights) if h > i]
            if len(values) != len(slots):
                return None
            for k, v in zip(slots, values):
                tabs[tab][k].append(v)
    cols: list[Column] = []
    for r, c in zip(*tabs):
        if any(x >= y for x, y in zip(r, r[1:])) or any(x >= y for x, y in zip(c, c[1:])):
            return None
        cols.append((tuple(r), tuple(c)))
    q = Bitableau(tuple(sorted(cols, key=column_key)))
    if not q.is_standard() or leading_bitableau(den, q) != num:
        return None
    return q


# --------------------------------------------------------------------------
# Least common standard multiples
# --------------------------------------------------------------------------


def _row_union(a: Bitableau, b: Bitableau, tab: int, i: int) -> Counter:
    return Counter(a.row(tab, i)) | Counter(b.row(tab, i))


def _admissible_shapes(union: Counter, row_sizes: Sequence[int], parts: int, hmax: int) -> list[tuple[int, ...]]:
    out = []
    for shape in itertools.combinations_with_replacement(range(hmax, 0, -1), parts):
        have = Counter(shape)
        if any(have[h] < k for h, k in union.items()):
            continue
        if all(sum(1 for h in shape if h > i) >= need for i, need in enumerate(row_sizes)):
            out.append(shape)
    return out


def _tableaux(shape: Sequence[int], alphabet: int, required: Sequence[Counter]) -> list[tuple[tuple[int, ...], ...]]:
    """Column-strict, row-weak fillings of `shape` whose rows contain `required`."""
    found: list[tuple[tuple[int, ...], ...]] = []
    chosen: list[tuple[int, ...]] = []

    def walk(k: int) -> None:
        if k == len(shape):
            for i, need in enumerate(required):
                row = Counter(col[i] for col in chosen if len(col) > i)
                if any(row[v] < c for v, c in need.items()):
                    return
            found.append(tuple(chosen))
            return
        for col in itertools.combinations(range(1, alphabet + 1), shape[k]):
            if chosen and any(col[i] < chosen[-1][i] for i in range(len(col))):
                continue
            chosen.append(col)
            walk(k + 1)
            chosen.pop()

    walk(0)
    return found


def lcm_bitableaux(f: Bitableau, g: Bitableau, n: int, m: int,
                   divides: Callable[[Bitableau, Bitableau], bool] | None = None) -> list[Bitableau]:
    """Least common standard multiples of f and g under leading-term division.

    Candidates have rows containing the row-wise multiset unions of f and g and a
    shape containing both shapes; the column count runs from the largest row
    union up to the column count of f*g. `divides(den, num)` defaults to
    leading-bitableau division.
    """
    if divides is None:
        def divides(den: Bitableau, num: Bitableau) -> bool:
            return lt_quotient(num, den) is not None

    depth = max(f.shape[:1] + g.shape[:1], default=0)
    if depth == 0:
        return [Bitableau()]
    re_rows = [_row_union(f, g, 0, i) for i in range(depth)]
    ce_rows = [_row_union(f, g, 1, i) for i in range(depth)]
    row_sizes = [max(sum(a.values()), sum(b.values())) for a, b in zip(re_rows, ce_rows)]
    union = Counter(f.shape) | Counter(g.shape)
    hmax = min(n, m)
    lo = max(row_sizes)
    hi = max(lo, len(f.columns) + len(g.columns))
    candidates: list[Bitableau] = []
    for parts in range(lo, hi + 1):
        for shape in _admissible_shapes(union, row_sizes, parts, hmax):
            row_fill = _tableaux(shape, n, re_rows)
            if not row_fill:
                continue
            col_fill = _tableaux(shape, m, ce_rows)
            for R in row_fill:
                for C in col_fill:
                    t = Bitableau(tuple(sorted(zip(R, C), key=column_key)))
                    if t.is_standard() and divides(f, t) and divides(g, t):
                        candidates.append(t)
    candidates = sorted(set(candidates), key=_bitableau_key)
    minimal = [
        t for t in candidates
        if not any(o != t and o.size <= t.size and divides(o, t) for o in candidates)
    ]
    log.debug("[lcm] %s, %s: %d candidates, %d minimal", f, g, len(candidates), len(minimal))
    return minimal


# --------------------------------------------------------------------------
# Monomial expansion and the diagonal bridge
# --------------------------------------------------------------------------


def _variable(n: int, m: int, i: int, j: int) -> int:
    return (i - 1) * m + (j - 1)


def expand_column(col: Column, n: int, m: int) -> Poly:
    rows, cols = col
    nv = n * m
    terms: dict[ExpVec, Fraction] = {}
    for perm in itertools.permutations(range(len(cols))):
        sign, _ = _sort_sign(perm)
        exp = [0] * nv
        for i, pj in zip(rows, perm):
            exp[_variable(n, m, i, cols[pj])] += 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + sign
    return Poly(nv, terms)


def expand_to_monomials(t: Bitableau, n: int, m: int) -> Poly:
    out = Poly.constant(n * m)
    for col in t.columns:
        out = out * expand_column(col, n, m)
    return out


def diagonal_leading_monomial(t: Bitableau, n: int, m: int) -> ExpVec:
    exp = [0] * (n * m)
    for rows, cols in t.columns:
        for i, j in zip(rows, cols):
            exp[_variable(n, m, i, j)] += 1
    return tuple(exp)


def variable_names(n: int, m: int) -> list[str]:
    return [f"x{i}{j}" for i in range(1, n + 1) for j in range(1, m + 1)]


# --------------------------------------------------------------------------
# The algebra
# --------------------------------------------------------------------------


def minors(n: int, m: int) -> list[Column]:
    """All minors, by size and then lexicographically."""
    out: list[Column] = []
    for k in range(1, min(n, m) + 1):
        for rows in itertools.combinations(range(1, n + 1), k):
            for cols in itertools.combinations(range(1, m + 1), k):
                out.append((rows, cols))
    return out


def minor_name(col: Column, wide: bool = False) -> str:
    rows, cols = col
    sep = "," if wide else ""
    if len(rows) == 1:
        return f"x{rows[0]}{sep}{cols[0]}" if wide else f"x{rows[0]}{cols[0]}"
    return f"[{sep.join(map(str, rows))}|{sep.join(map(str, cols))}]"


class BideterminantAlgebra(PaslAlgebra):
    """The polynomial ring on x_ij in the basis of standard bideterminants."""

    kind = "bidet"

    def __init__(self, n: int, m: int, allow_large: bool = False, fuel: int | None = None):
        if n < 1 or m < 1:
            raise InvalidAlgebra("matrix dimensions must be positive")
        if not allow_large and max(n, m) > MAX_MATRIX_SIZE:
            raise InvalidAlgebra(
                f"{n}x{m} exceeds the configured limit {MAX_MATRIX_SIZE}; pass --allow-large to override"
            )
        self.n, self.m = n, m
        self.minor_list = minors(n, m)
        wide = max(n, m) > 9
        names = [minor_name(c, wide) for c in self.minor_list]
        degrees = [len(c[0]) for c in self.minor_list]
        self._minor_index = {c: i for i, c in enumerate(self.minor_list)}
        sigma = []
        nv = len(self.minor_list)
        for i, j in itertools.combinations(range(nv), 2):
            a, b = sorted((self.minor_list[i], self.minor_list[j]), key=column_key)
            if not columns_comparable(a, b):
                exp = [0] * nv
                exp[i] = exp[j] = 1
                sigma.append(tuple(exp))
        super().__init__(names, degrees, sigma)

        self._straightener = _Straightener(fuel if fuel is not None else REWRITE_FUEL)
        self._bitab_cache: dict[ExpVec, Bitableau] = {}

    # exp <-> bitableau
    def bitableau(self, exp: ExpVec) -> Bitableau:
        t = self._bitab_cache.get(exp)
        if t is None:
            cols = []
            for idx, e in enumerate(exp):
                cols.extend([self.minor_list[idx]] * e)
            t = Bitableau(tuple(sorted(cols, key=column_key)))
            self._bitab_cache[exp] = t
        return t

    def exponent(self, t: Bitableau) -> ExpVec:
        exp = [0] * self.nvars
        for col in t.columns:
            try:
                exp[self._minor_index[col]] += 1
            except KeyError as exc:
                raise InvalidAlgebra(f"column {col} is not a minor of a {self.n}x{self.m} matrix") from exc
        return tuple(exp)

    def is_standard(self, exp: ExpVec) -> bool:
        if len(exp) != self.nvars:
            raise ValueError(f"exponent {exp} does not have {self.nvars} entries")
        return self.bitableau(tuple(exp)).is_standard()

    def from_columns(self, raw_columns: Iterable[Sequence[Sequence[int]]]) -> PaslElement:
        """Bideterminant of arbitrary columns, straightened."""
        raw = [(tuple(r), tuple(c)) for r, c in raw_columns]
        for rows, cols in raw:
            if any(not 1 <= i <= self.n for i in rows) or any(not 1 <= j <= self.m for j in cols):
                raise InputFormatError(f"column ({list(rows)}|{list(cols)}) is out of range for {self.n}x{self.m}")
        sign, cols = canonical_form(raw)
        if not sign:
            return self.zero()
        return self._element(self._straightener.run(cols), sign)

    def _element(self, expansion: Mapping[tuple[Column, ...], int], scale: int = 1) -> PaslElement:
        return PaslElement(self.nvars, {
            self.exponent(Bitableau(cols)): Fraction(scale * c) for cols, c in expansion.items()
        })

    def straighten_exp(self, exp: ExpVec) -> Mapping[ExpVec, Fraction]:
        exp = tuple(exp)
        out = self._straightener.run(self.bitableau(exp).columns)
        return {self.exponent(Bitableau(cols)): Fraction(c) for cols, c in out.items()}

    def leading_product(self, order: PaslTermOrder, a: ExpVec, b: ExpVec):
        if isinstance(order, BitableauOrder):
            t = leading_bitableau(self.bitableau(a), self.bitableau(b))
            return Fraction(1), self.exponent(t)
        return super().leading_product(order, a, b)

    def is_zerodivisor(self, m: ExpVec, sample_degree: int | None = None) -> bool:
        return False

    def is_domain(self) -> bool:
        return True

    def default_order(self) -> "BitableauOrder":
        return BitableauOrder(self)

    def expand(self, f: Poly) -> Poly:
        """f as a polynomial in the x_ij."""
        out = Poly.zero(self.n * self.m)
        for exp, c in f.terms.items():
            out = out + expand_to_monomials(self.bitableau(exp), self.n, self.m).scale(c)
        return out

    def quotient_series(self, gens: Sequence[Poly]) -> HilbertSeries:
        """Same series, computed from the x_ij expansions of the generators."""
        nv = self.n * self.m
        expanded = [self.expand(g) for g in gens if g]
        return hilbert_homogeneous(expanded, [1] * nv, OrdTermOrder.degrevlex(nv))

    def to_json(self) -> dict:
        return {"builtin": "bideterminant", "rows": self.n, "cols": self.m}


@dataclass(frozen=True, eq=False)
class BitableauOrder:
    """Size, then optional weighted content, then shape and row reading (larger reading is smaller)."""

    algebra: BideterminantAlgebra
    row_weights: tuple[int, ...] | None = None
    col_weights: tuple[int, ...] | None = None
    graded = True

    def __post_init__(self) -> None:
        for label, weights, size in (("row", self.row_weights, self.algebra.n),
                                     ("column", self.col_weights, self.algebra.m)):
            if weights is not None and (len(weights) != size or any(w <= 0 for w in weights)):
                raise InvalidAlgebra(f"{label} weights must be {size} positive integers")

    @property
    def name(self) -> str:
        if self.row_weights is None and self.col_weights is None:
            return "bitableau"
        return "bitableau-weighted"

    def weight(self, t: Bitableau) -> int:
        if self.row_weights is None and self.col_weights is None:
            return 0
        rw = self.row_weights or (0,) * self.algebra.n
        cw = self.col_weights or (0,) * self.algebra.m
        return sum(rw[i - 1] for r, _ in t.columns for i in r) + sum(cw[j - 1] for _, c in t.columns for j in c)

    def key(self, exp: ExpVec) -> tuple:
        t = self.algebra.bitableau(exp)
        return (t.size, self.weight(t), tuple(-h for h in t.shape), tuple(-v for v in t.theta()))

    def to_json(self) -> dict:
        doc: dict = {"kind": "bitableau"}
        if self.row_weights is not None:
            doc["row_weights"] = list(self.row_weights)
        if self.col_weights is not None:
            doc["col_weights"] = list(self.col_weights)
        return doc


def determinantal_basis(alg: BideterminantAlgebra, r: int) -> list[PaslElement]:
    """All minors of size >= r: a universal basis of the ideal of r-minors."""
    if not 1 <= r <= min(alg.n, alg.m):
        raise InvalidAlgebra(f"minor size {r} is out of range for {alg.n}x{alg.m}")
    return [
        alg.generator(alg.names[i]) for i, col in enumerate(alg.minor_list) if len(col[0]) >= r
    ]


def maximal_minors(alg: BideterminantAlgebra) -> list[PaslElement]:
    return determinantal_basis(alg, min(alg.n, alg.m))


_DET = re.compile(r"det\(\s*([\d\s,]*)\|\s*([\d\s,]*)\)")


def _indices(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.isdigit() and len(text) > 1:
        return tuple(int(ch) for ch in text)
    return tuple(int(v) for v in re.split(r"[\s,]+", text) if v)


def parse_bitableau(text: str) -> list[Column]:
    """Columns of a `det(r ... | c ...)*det(...)` literal, entries in the given order.

    Unseparated digit runs such as `det(12|13)` read one index per digit.
    """
    cols: list[Column] = []
    parts = [p.strip() for p in text.split("*")]
    for part in parts:
        match = _DET.fullmatch(part)
        if not match:
            raise InputFormatError(f"not a bitableau column: {part!r}")
        rows = _indices(match.group(1))
        cols_ = _indices(match.group(2))
        if len(rows) != len(cols_) or not rows:
            raise InputFormatError(f"column {part!r} needs equally many rows and columns")
        cols.append((rows, cols_))
    return cols
