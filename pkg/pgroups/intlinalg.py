"""
Exact integer matrix algebra.

Smith normal forms (dense and sparse), invariant factors of finitely generated
abelian groups given by relation matrices, and the small amount of linear
algebra over the field with p elements that the group code needs.

Every entry is a Python ``int``; nothing here ever touches floating point.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd, prod

from sympy import factorint

from .exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f'{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, '
                f'got {len(self.entries)}'
            )

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatchError(f'row of length {len(row)} in a matrix with {cols} columns')
        return cls(len(rows), cols, tuple(int(x) for row in rows for x in row))

    def to_rows(self):
        return [list(self.entries[r * self.cols:(r + 1) * self.cols]) for r in range(self.rows)]


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant-factor decomposition Z_{d1} x ... x Z_{dt} x Z^free_rank."""

    torsion: tuple = ()
    free_rank: int = 0

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f'invariant factors {a}, {b} break the divisibility chain')
        if any(d < 2 for d in self.torsion):
            raise ValueError('invariant factors must be at least 2')

    @classmethod
    def from_diagonal(cls, diagonal, ngens):
        """Invariants of Z^ngens modulo a lattice whose Smith diagonal is ``diagonal``."""
        return cls(tuple(d for d in diagonal if d != 1), ngens - len(diagonal))

    @classmethod
    def elementary(cls, p, rank):
        return cls((p,) * rank)

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def order(self):
        """Group order, or ``None`` when the group is infinite."""
        return prod(self.torsion) if self.is_finite else None

    @property
    def rank(self):
        """Number of cyclic factors."""
        return len(self.torsion) + self.free_rank

    def prime(self):
        """The single prime dividing every factor, or ``None``."""
        primes = {q for d in self.torsion for q in factorint(d)}
        return primes.pop() if len(primes) == 1 else None

    def is_p_group(self, p=None):
        if not self.is_finite:
            return False
        if not self.torsion:
            return True
        q = self.prime()
        return q is not None and (p is None or q == p)

    def is_elementary(self, p):
        return self.is_finite and all(d == p for d in self.torsion)

    def log_order(self, p):
        """log_p of the order; the group must be a finite p-group."""
        if not self.is_p_group(p):
            raise ValueError(f'{self} is not a finite {p}-group')
        return sum(p_valuation(d, p) for d in self.torsion)

    def as_list(self):
        return list(self.torsion) + [0] * self.free_rank

    def __str__(self):
        parts = [f'Z{d}' for d in self.torsion]
        if self.free_rank:
            parts.append('Z' if self.free_rank == 1 else f'Z^{self.free_rank}')
        return ' x '.join(parts) if parts else '1'


def p_valuation(n, p):
    n = abs(n)
    if n == 0:
        raise ValueError('valuation of zero')
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_part(n, p):
    return p ** p_valuation(n, p)


def xgcd(a, b):
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _smith_diagonal(a, ncols):
    """Smith diagonal of the dense matrix ``a`` (list of row lists, mutated)."""
    m, n = len(a), ncols
    diagonal = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]

        while True:
            pivot = a[t][t]
            for i in range(t + 1, m):
                v = a[i][t]
                if v:
                    q = v // pivot
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            if rt[j]:
                                ri[j] -= q * rt[j]
            for j in range(t + 1, n):
                v = a[t][j]
                if v:
                    q = v // pivot
                    if q:
                        for row in a:
                            if row[t]:
                                row[j] -= q * row[t]

            # smallest leftover in the pivot row or column becomes the new pivot
            best = None
            for i in range(t + 1, m):
                v = a[i][t]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, None)
            for j in range(t + 1, n):
                v = a[t][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), None, j)
            if best is not None:
                _, i, j = best
                if i is not None:
                    a[t], a[i] = a[i], a[t]
                else:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue

            # pivot must divide the whole trailing block
            bad = None
            for i in range(t + 1, m):
                row = a[i]
                for j in range(t + 1, n):
                    if row[j] % pivot:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            rt, rb = a[t], a[bad]
            for j in range(t, n):
                rt[j] += rb[j]

        diagonal.append(abs(a[t][t]))
        t += 1
    return diagonal


def smith_normal_form(m):
    """
    Invariant-factor diagonal of an integer matrix.

    Args:
        m (IntMatrix): the matrix

    Returns:
        tuple: (diagonal, rank) where diagonal lists the nonzero invariant
        factors d1 | d2 | ... and rank == len(diagonal)
    """
    if m.rows == 0 or m.cols == 0:
        return [], 0
    diagonal = _smith_diagonal(m.to_rows(), m.cols)
    return diagonal, len(diagonal)


def _insert_echelon(basis, vec, ncols):
    """Insert ``vec`` into a row-echelon lattice basis keyed by pivot column."""
    for j in range(ncols):
        a = vec[j]
        if not a:
            continue
        b_row = basis.get(j)
        if b_row is None:
            basis[j] = vec
            return
        b = b_row[j]
        if a % b == 0:
            q = a // b
            vec = [v - q * w for v, w in zip(vec, b_row)]
            continue
        x, y, g = xgcd(b, a)
        top = [x * w + y * v for v, w in zip(vec, b_row)]
        vec = [(-a // g) * w + (b // g) * v for v, w in zip(vec, b_row)]
        basis[j] = top


def sparse_smith_form(rows, ncols):
    """
    Smith diagonal of a sparse integer matrix.

    Args:
        rows (list): rows as ``{column: value}`` dicts; they are consumed
        ncols (int): number of columns

    Returns:
        tuple: (diagonal, rank) with the same meaning as smith_normal_form

    Unit entries are used as pivots first (Markowitz order: short rows, then
    short columns). What is left has no unit entries; it is reduced to a row
    echelon basis and finished densely.
    """
    active = {}
    col_rows = {}
    for rid, row in enumerate(rows):
        row = {c: v for c, v in row.items() if v}
        if not row:
            continue
        active[rid] = row
        for c in row:
            col_rows.setdefault(c, set()).add(rid)

    units = 0
    progress = True
    while progress:
        progress = False
        for rid in sorted(active, key=lambda r: len(active[r])):
            row = active.get(rid)
            if row is None:
                continue
            unit_cols = [c for c, v in row.items() if v == 1 or v == -1]
            if not unit_cols:
                continue
            col = min(unit_cols, key=lambda c: (len(col_rows[c]), c))
            pivot = row[col]
            for other in list(col_rows[col]):
                if other == rid:
                    continue
                orow = active[other]
                factor = orow[col] * pivot
                for c, v in row.items():
                    nv = orow.get(c, 0) - factor * v
                    if nv:
                        if c not in orow:
                            col_rows[c].add(other)
                        orow[c] = nv
                    elif c in orow:
                        del orow[c]
                        col_rows[c].discard(other)
                if not orow:
                    del active[other]
            for c in row:
                col_rows[c].discard(rid)
            del col_rows[col]
            del active[rid]
            units += 1
            progress = True
    logger.debug('sparse smith: %d unit pivots, %d rows left', units, len(active))

    columns = sorted(c for c, owners in col_rows.items() if owners)
    index = {c: k for k, c in enumerate(columns)}
    basis = {}
    for row in active.values():
        vec = [0] * len(columns)
        for c, v in row.items():
            vec[index[c]] = v
        _insert_echelon(basis, vec, len(columns))
    dense = [basis[j] for j in sorted(basis)]
    rest = _smith_diagonal(dense, len(columns)) if dense else []
    diagonal = [1] * units + rest
    return diagonal, len(diagonal)


def abelian_invariants(relations, ngens):
    """
    Invariants of Z^ngens modulo the row space of ``relations``.

    Args:
        relations (IntMatrix): one relation per row
        ngens (int): rank of the free abelian group

    Returns:
        AbelianInvariants: torsion factors (1s dropped) and free rank

    Raises:
        DimensionMismatchError: if the matrix does not have ngens columns
    """
    if relations.rows and relations.cols != ngens:
        raise DimensionMismatchError(f'relations have {relations.cols} columns, expected {ngens}')
    diagonal, _ = smith_normal_form(relations)
    return AbelianInvariants.from_diagonal(diagonal, ngens)


def invariants_from_orders(orders):
    """Invariant factors of a direct product of cyclic groups of the given orders."""
    orders = [d for d in orders if d != 1]
    if not orders:
        return AbelianInvariants()
    diagonal, _ = smith_normal_form(IntMatrix.from_rows(
        [[d if i == j else 0 for j in range(len(orders))] for i, d in enumerate(orders)]
    ))
    return AbelianInvariants.from_diagonal(diagonal, len(orders))


# Linear algebra over GF(p)

def rref_mod_p(rows, ncols, p):
    """Reduced row echelon form over GF(p); returns (rows, pivot columns)."""
    rows = [[v % p for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank_mod_p(rows, ncols, p):
    return len(rref_mod_p(rows, ncols, p)[1])


def nullspace_mod_p(rows, ncols, p):
    """
    Solutions of ``rows @ c == 0`` over GF(p), echelonised so that the basis
    vectors have distinct leading positions with leading entry 1.
    """
    reduced, pivots = rref_mod_p(rows, ncols, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[f] % p
        basis.append(vec)
    return rref_mod_p(basis, ncols, p)[0]


def gcd_all(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
