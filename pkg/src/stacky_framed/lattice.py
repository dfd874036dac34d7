"""Exact integer-matrix algebra: Smith normal form, cokernels and Gale duals.

Everything here works with Python integers, so entries never overflow.
Matrices are small (a handful of rows and columns), so the algorithms favour
clarity and reproducibility over asymptotic speed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major.

    ``rows`` and ``cols`` are kept explicitly so that empty shapes such as
    ``0 x 3`` survive round trips, which nested lists cannot express.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> IntMatrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([list(c) for c in columns], cols=rows).T

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum(r[k] * other[k, j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def select_columns(self, indices: Iterable[int]) -> IntMatrix:
        indices = list(indices)
        return IntMatrix.from_columns([self.column(j) for j in indices], rows=self.rows)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return IntMatrix.from_rows(
            [self.row(i) + other.row(i) for i in range(self.rows)],
            cols=self.cols + other.cols,
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})" if self.rows else f"IntMatrix.zeros(0, {self.cols})"


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ m @ V == D`` in Smith normal form.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with nonnegative
    entries ``d1 | d2 | ...``. Pivots are chosen as the nonzero entry of
    smallest absolute value, first in row-major order.
    """
    nr, nc = m.shape
    a = m.tolist()
    u = IntMatrix.identity(nr).tolist()
    v = IntMatrix.identity(nc).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row[dst] += k * row[src]
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for s in range(min(nr, nc)):
        while True:
            pivot = None
            for i in range(s, nr):
                for j in range(s, nc):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return IntMatrix.from_rows(u, nr), IntMatrix.from_rows(a, nc), IntMatrix.from_rows(v, nc)
            swap_rows(s, pivot[0])
            swap_cols(s, pivot[1])
            d = a[s][s]
            clean = True
            for i in range(s + 1, nr):
                if a[i][s]:
                    add_row(s, i, -(a[i][s] // d))
                    clean = clean and a[i][s] == 0
            for j in range(s + 1, nc):
                if a[s][j]:
                    add_col(s, j, -(a[s][j] // d))
                    clean = clean and a[s][j] == 0
            if not clean:
                continue
            # row and column are clear; enforce divisibility on the remainder
            bad = next(
                (i for i in range(s + 1, nr) for j in range(s + 1, nc) if a[i][j] % d),
                None,
            )
            if bad is None:
                break
            add_row(bad, s, 1)
        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            u[s] = [-x for x in u[s]]
    return IntMatrix.from_rows(u, nr), IntMatrix.from_rows(a, nc), IntMatrix.from_rows(v, nc)


def invariant_factors(m: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form of ``m``."""
    _, d, _ = smith_normal_form(m)
    return [d[i, i] for i in range(min(d.shape)) if d[i, i]]


def hermite_rows(m: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form (zero rows dropped).

    Pivots are positive, strictly increasing in column, and entries above a
    pivot are reduced into ``[0, pivot)``.
    """
    a = m.tolist()
    nr, nc = m.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        while True:
            nz = [i for i in range(r, nr) if a[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[i0] = a[i0], a[r]
            done = True
            for i in range(r + 1, nr):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    done = done and a[i][c] == 0
            if done:
                break
        if r < nr and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    return IntMatrix.from_rows(a[:r], nc)


@dataclass(frozen=True)
class FGAbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + sum Z/d_i``.

    ``projection`` maps the ambient free lattice onto the canonical
    coordinates: the first ``free_rank`` rows give the free part, the
    remaining rows give residues modulo the matching torsion order.
    Equality compares only the isomorphism type.
    """

    free_rank: int
    torsion_orders: tuple[int, ...] = ()
    projection: IntMatrix | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion_orders:
            if d < 2:
                raise ValueError(f"torsion orders must be >= 2, got {d}")
        for a, b in zip(self.torsion_orders, self.torsion_orders[1:]):
            if b % a:
                raise ValueError(f"torsion orders {self.torsion_orders} are not a divisor chain")
        if self.projection is not None and self.projection.rows != self.ngens:
            raise ValueError("projection rows do not match canonical coordinates")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion_orders)

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    @property
    def is_free(self) -> bool:
        return not self.torsion_orders

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` if infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion_orders:
            out *= d
        return out

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Normalise canonical coordinates (torsion parts taken mod d_i)."""
        if len(coords) != self.ngens:
            raise ValueError("wrong number of coordinates")
        free = tuple(coords[: self.free_rank])
        tors = tuple(c % d for c, d in zip(coords[self.free_rank:], self.torsion_orders))
        return free + tors

    def image(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Class of an ambient lattice vector in canonical coordinates."""
        if self.projection is None:
            raise ValueError("group carries no projection")
        col = IntMatrix.from_columns([list(vector)], rows=self.projection.cols)
        return self.reduce((self.projection @ col).column(0))

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion_orders]
        return " + ".join(parts) if parts else "0"


def _reduce_rows_mod(m: IntMatrix, start: int, orders: Sequence[int], rescale: bool = False) -> IntMatrix:
    rows = m.tolist()
    for k, d in enumerate(orders):
        row = [x % d for x in rows[start + k]]
        lead = next((x for x in row if x), 0)
        if rescale and lead and math.gcd(lead, d) == 1:
            # a unit rescaling is an automorphism of Z/d
            inv = pow(lead, -1, d)
            row = [x * inv % d for x in row]
        rows[start + k] = row
    return IntMatrix.from_rows(rows, m.cols)


def cokernel(m: IntMatrix) -> FGAbelianGroup:
    """Cokernel of ``m: Z^cols -> Z^rows`` in canonical form.

    The free rows of the projection are put in Hermite form and the torsion
    rows are reduced modulo their orders, so the same subgroup always yields
    the same projection.
    """
    u, d, _ = smith_normal_form(m)
    diag = [d[i, i] for i in range(min(d.shape))]
    rank = sum(1 for x in diag if x)
    torsion = [(i, diag[i]) for i in range(rank) if diag[i] > 1]
    free_rows = [u.row(i) for i in range(rank, m.rows)]
    free = hermite_rows(IntMatrix.from_rows(free_rows, m.rows)) if free_rows else IntMatrix.zeros(0, m.rows)
    proj_rows = free.tolist() + [list(u.row(i)) for i, _ in torsion]
    orders = tuple(x for _, x in torsion)
    proj = _reduce_rows_mod(IntMatrix.from_rows(proj_rows, m.rows), free.rows, orders, rescale=True)
    return FGAbelianGroup(free.rows, orders, proj)


def free_resolution(group: FGAbelianGroup) -> IntMatrix:
    """Presentation matrix ``Q`` with ``coker(Q)`` equal to ``group``.

    Columns are the relations ``d_i e_{free_rank + i}``.
    """
    cols = []
    for k, d in enumerate(group.torsion_orders):
        col = [0] * group.ngens
        col[group.free_rank + k] = d
        cols.append(col)
    return IntMatrix.from_columns(cols, rows=group.ngens)


def gale_dual(beta: IntMatrix, target: FGAbelianGroup | None = None) -> tuple[FGAbelianGroup, IntMatrix]:
    """Gale dual of ``beta: Z^n -> N``.

    ``beta`` has one column per generator, written in the canonical
    coordinates of ``target`` (free coordinates first, then torsion). With no
    ``target`` the codomain is the free lattice ``Z^rows``.

    Returns the group ``DG(beta)`` and the weight matrix whose column ``i`` is
    the class of the ``i``-th dual basis vector. Torsion rows of the weight
    matrix are reduced modulo their orders.
    """
    if target is None:
        target = FGAbelianGroup(beta.rows)
    if beta.rows != target.ngens:
        raise ValueError(
            f"beta has {beta.rows} rows but target {target} has {target.ngens} coordinates"
        )
    n = beta.cols
    combined = beta.hstack(free_resolution(target))
    group = cokernel(combined.T)
    weights = group.projection.select_columns(range(n))
    return group, _reduce_rows_mod(weights, group.free_rank, group.torsion_orders)


def is_gale_dual_weights(beta: IntMatrix, weights: IntMatrix) -> bool:
    """True when ``weights`` presents ``coker(beta^T)`` for a free target.

    Checks ``weights @ beta^T == 0``, surjectivity of ``weights`` and that
    ``im(beta^T)`` has the same rank as ``ker(weights)`` and is saturated,
    which together force ``ker(weights) == im(beta^T)``.
    """
    if weights.cols != beta.cols:
        return False
    if not (weights @ beta.T).is_zero():
        return False
    k = weights.rows
    if invariant_factors(weights) != [1] * k:
        return False
    dual = cokernel(beta.T)
    return dual.is_free and dual.free_rank == k
