"""Dense linear algebra over GF(q) on small integer-encoded matrices.

Rows are tuples of ints in ``[q]``; arithmetic goes through an
:class:`~stuckcells.ring.AlphabetCtx` of field kind. Everything here is
exact and deterministic: pivots are chosen as the topmost unused row with a
nonzero entry, scanning columns left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParameterError, UnmaskableColumnError
from .ring import AlphabetCtx, make_ctx

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Matrix:
    ctx: AlphabetCtx
    rows: tuple[Vector, ...]
    ncols: int

    def __post_init__(self):
        q = self.ctx.q
        for r in self.rows:
            if len(r) != self.ncols:
                raise ParameterError("ragged matrix rows")
            if any(not 0 <= v < q for v in r):
                raise ParameterError(f"matrix entry outside [0, {q})")

    @classmethod
    def from_rows(cls, ctx: AlphabetCtx, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(ctx, rows, ncols)

    @classmethod
    def identity(cls, ctx: AlphabetCtx, size: int) -> "Matrix":
        return cls(ctx, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)), size)

    @classmethod
    def zeros(cls, ctx: AlphabetCtx, nrows: int, ncols: int) -> "Matrix":
        return cls(ctx, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def entries(self) -> Vector:
        return tuple(v for r in self.rows for v in r)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.ctx, tuple(tuple(r[j] for j in idx) for r in self.rows), len(idx))

    def transpose(self) -> "Matrix":
        return Matrix(self.ctx, tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ParameterError("shape mismatch in matrix product")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix(self.ctx, tuple(tuple(dot(self.ctx, r, c) for c in cols) for r in self.rows), other.ncols)


@dataclass(frozen=True)
class RreResult:
    R: Matrix
    T: Matrix
    rank: int
    pivot_cols: tuple[int, ...]


def dot(ctx: AlphabetCtx, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = ctx.add(acc, ctx.mul(x, y))
    return acc


def vec_add(ctx: AlphabetCtx, a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(ctx.add(x, y) for x, y in zip(a, b))


def vec_sub(ctx: AlphabetCtx, a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(ctx.sub(x, y) for x, y in zip(a, b))


def vec_mat(ctx: AlphabetCtx, z: Sequence[int], A: Matrix) -> Vector:
    """Row vector times matrix, ``z . A``."""
    if len(z) != A.nrows:
        raise ParameterError(f"vector length {len(z)} != matrix rows {A.nrows}")
    out = [0] * A.ncols
    for zi, row in zip(z, A.rows):
        if not zi:
            continue
        for j, h in enumerate(row):
            if h:
                out[j] = ctx.add(out[j], ctx.mul(zi, h))
    return tuple(out)


def _eliminate(ctx: AlphabetCtx, rows: list[list[int]], ncols: int, aug: list[list[int]] | None = None):
    """In-place Gauss-Jordan elimination; ``aug`` rows follow the same row ops."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
            if aug is not None:
                aug[r], aug[pr] = aug[pr], aug[r]
        piv_inv = ctx.inv(rows[r][c])
        if piv_inv != 1:
            rows[r] = [ctx.mul(piv_inv, v) for v in rows[r]]
            if aug is not None:
                aug[r] = [ctx.mul(piv_inv, v) for v in aug[r]]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(rows[i], rows[r])]
                if aug is not None:
                    aug[i] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    return pivots


def rre(A: Matrix) -> RreResult:
    """Reduced row echelon form ``R`` together with an invertible ``T`` such that ``T @ A == R``.

    Zero rows are kept at the bottom so ``R`` has the shape of ``A`` and ``T``
    stays square.
    """
    ctx = A.ctx
    ctx.require_field()
    rows = [list(r) for r in A.rows]
    aug = [[int(i == j) for j in range(A.nrows)] for i in range(A.nrows)]
    pivots = _eliminate(ctx, rows, A.ncols, aug)
    R = Matrix(ctx, tuple(tuple(r) for r in rows), A.ncols)
    T = Matrix(ctx, tuple(tuple(r) for r in aug), A.nrows)
    return RreResult(R=R, T=T, rank=len(pivots), pivot_cols=tuple(pivots))


def rank(A: Matrix) -> int:
    A.ctx.require_field()
    return len(_eliminate(A.ctx, [list(r) for r in A.rows], A.ncols))


def solve_left(A: Matrix, t: Sequence[int]) -> Vector | None:
    """Solve ``z . A = t`` for a row vector ``z``; None if inconsistent.

    Free unknowns are set to zero, which makes the answer canonical.
    """
    ctx = A.ctx
    ctx.require_field()
    if len(t) != A.ncols:
        raise ParameterError(f"target length {len(t)} != matrix columns {A.ncols}")
    # z . A = t  <=>  A^T z^T = t^T; eliminate the augmented system [A^T | t].
    nunk = A.nrows
    system = [list(A.column(j)) + [t[j]] for j in range(A.ncols)]
    pivots = _eliminate(ctx, system, nunk)
    for row in system[len(pivots):]:
        if row[nunk]:
            return None
    z = [0] * nunk
    for i, c in enumerate(pivots):
        z[c] = system[i][nunk]
    return tuple(z)


def column_block_assignment(R: Matrix) -> tuple[int, ...]:
    """Map each column of an RRE matrix to the row of its lowermost nonzero entry."""
    out = []
    for j in range(R.ncols):
        col = R.column(j)
        low = next((i for i in range(len(col) - 1, -1, -1) if col[i]), None)
        if low is None:
            raise UnmaskableColumnError(f"column {j} is all-zero")
        out.append(low)
    return tuple(out)


def maskable_check(R: Matrix, limits: Sequence[int]) -> bool:
    """True iff every column has a nonzero entry and the exclusion budgets
    assigned to each row sum to at most ``q - 1``.

    ``limits[j]`` is the number of values column ``j`` forbids (its stuck level).
    """
    if len(limits) != R.ncols:
        raise ParameterError("one budget per column required")
    try:
        blocks = column_block_assignment(R)
    except UnmaskableColumnError:
        return False
    load: dict[int, int] = {}
    for row, budget in zip(blocks, limits):
        load[row] = load.get(row, 0) + budget
    return all(v <= R.ctx.q - 1 for v in load.values())


# -- text format -------------------------------------------------------------


def format_matrix(A: Matrix) -> str:
    lines = [f"{A.ctx.q} {A.nrows} {A.ncols}"]
    lines += [" ".join(str(v) for v in r) for r in A.rows]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 3:
        raise ParameterError("matrix header must be 'q rows cols'")
    q, nrows, ncols = (int(v) for v in lines[0])
    body = lines[1:]
    if len(body) != nrows:
        raise ParameterError(f"expected {nrows} rows, found {len(body)}")
    return Matrix.from_rows(make_ctx(q), [[int(v) for v in r] for r in body], ncols)


def read_matrix(path) -> Matrix:
    with open(path) as fh:
        return parse_matrix(fh.read())


def write_matrix(A: Matrix, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix(A))
