"""Linear codes held as parity-check matrices, plus a small registry.

A :class:`LinearCode` stores its parity-check matrix ``H`` together with the
columns of ``H`` that form an identity (``check_positions``; position
``check_positions[i]`` is the unit vector ``e_i``) and the remaining
``info_positions``. For every built-in family the check positions are the
leftmost ``n - k`` columns. User matrices may carry their identity columns
elsewhere, which is recorded instead of silently permuting columns.

A code may also be *cited*: parameters only, no matrix. Cited codes feed the
redundancy bookkeeping but cannot encode.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import ClaimedDistanceError, ParameterError, RankError, TooLargeError
from .linalg import Matrix, read_matrix, rre
from .ring import AlphabetCtx, is_prime_power, make_ctx

BRUTE_FORCE_LIMIT = 1 << 20


@dataclass(frozen=True)
class LinearCode:
    ctx: AlphabetCtx
    n: int
    k: int
    d_claimed: int
    H: Matrix | None
    provenance: str
    check_positions: tuple[int, ...] = ()
    info_positions: tuple[int, ...] = ()
    verified: bool = False
    name: str = ""

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def is_cited(self) -> bool:
        return self.H is None

    @property
    def is_left_systematic(self) -> bool:
        return self.check_positions == tuple(range(self.n - self.k))

    def require_matrix(self) -> Matrix:
        if self.H is None:
            raise ParameterError(f"code {self.label()} is cited by parameters only; it has no matrix")
        return self.H

    def label(self) -> str:
        return self.name or f"[{self.n},{self.k},{self.d_claimed}]_{self.q}"

    def generator_rows(self) -> list[tuple[int, ...]]:
        """One codeword per message unit vector (message placed on info positions)."""
        H = self.require_matrix()
        ctx = self.ctx
        rows = []
        for info in self.info_positions:
            g = [0] * self.n
            g[info] = 1
            for i, pos in enumerate(self.check_positions):
                g[pos] = ctx.neg(H.rows[i][info])
            rows.append(tuple(g))
        return rows


def _identity_columns(H: Matrix) -> tuple[int, ...] | None:
    """For each row i the smallest column equal to e_i, or None if one is missing."""
    found = []
    for i in range(H.nrows):
        target = tuple(int(r == i) for r in range(H.nrows))
        j = next((c for c in range(H.ncols) if H.column(c) == target), None)
        if j is None:
            return None
        found.append(j)
    return tuple(found)


def _finish(ctx, H: Matrix, d: int, provenance: str, name: str = "", verify: bool = False) -> LinearCode:
    checks = _identity_columns(H)
    if checks is None:  # pragma: no cover - callers pass systematic matrices
        raise RankError("matrix has no identity columns")
    info = tuple(j for j in range(H.ncols) if j not in checks)
    code = LinearCode(ctx, H.ncols, H.ncols - H.nrows, d, H, provenance, checks, info, name=name)
    if verify and ctx.q ** code.k <= BRUTE_FORCE_LIMIT:
        actual = min_distance_bruteforce(code)
        if actual != d:
            raise ClaimedDistanceError(f"claimed distance {d}, brute force finds {actual}")
        code = replace(code, verified=True)
    return code


def _systematize(H: Matrix) -> Matrix:
    """Row-reduce ``H``; pivot columns then form an identity."""
    res = rre(H)
    if res.rank < H.nrows:
        raise RankError(f"parity-check matrix has rank {res.rank} < {H.nrows} rows")
    return res.R


# -- built-in families ----------------------------------------------------------


def _field_ctx(q: int) -> AlphabetCtx:
    if not is_prime_power(q):
        raise ParameterError(f"q={q} is not a prime power")
    return make_ctx(q)


def hamming(q: int, r: int) -> LinearCode:
    """The ``[(q^r-1)/(q-1), n-r, 3]_q`` Hamming code in systematic form.

    Columns are the projective points normalised so the topmost nonzero entry
    is 1, sorted by their big-endian base-q value, with the unit vectors
    ``e_0..e_{r-1}`` moved to the front.
    """
    if r < 2:
        raise ParameterError("Hamming codes need r >= 2")
    ctx = _field_ctx(q)
    points = []
    for v in range(1, q**r):
        digits = [(v // q ** (r - 1 - i)) % q for i in range(r)]  # big-endian, row 0 first
        lead = next(x for x in digits if x)
        if lead == 1:
            points.append(tuple(digits))
    units = [tuple(int(i == j) for i in range(r)) for j in range(r)]
    rest = [c for c in points if c not in units]
    cols = units + rest
    H = Matrix.from_rows(ctx, [[c[i] for c in cols] for i in range(r)])
    return _finish(ctx, H, 3, "family:hamming", name=f"hamming({q},{r})")


def mds(q: int, n: int, d: int) -> LinearCode:
    """A ``[n, n-d+1, d]_q`` Reed-Solomon type code, ``2 <= d <= n <= q+1``."""
    ctx = _field_ctx(q)
    if not 2 <= d <= n:
        raise ParameterError(f"need 2 <= d <= n, got d={d}, n={n}")
    if n > q + 1:
        raise ParameterError(f"MDS construction supports n <= q+1 = {q + 1}, got {n}")
    r = d - 1
    cols = []
    for alpha in range(min(n, q)):
        col, power = [], 1
        for _ in range(r):
            col.append(power)
            power = ctx.mul(power, alpha)
        cols.append(col)
    if n == q + 1:
        cols.append([0] * (r - 1) + [1])
    H = Matrix.from_rows(ctx, [[c[i] for c in cols] for i in range(r)])
    return _finish(ctx, _systematize(H), d, "family:mds", name=f"mds({q},{n},{d})")


def parity(q: int, n: int) -> LinearCode:
    """Single parity check ``[n, n-1, 2]_q``."""
    ctx = _field_ctx(q)
    if n < 2:
        raise ParameterError("parity code needs n >= 2")
    return _finish(ctx, Matrix.from_rows(ctx, [[1] * n]), 2, "family:parity", name=f"parity({q},{n})")


def repetition(q: int, n: int) -> LinearCode:
    """Repetition ``[n, 1, n]_q``."""
    ctx = _field_ctx(q)
    if n < 2:
        raise ParameterError("repetition code needs n >= 2")
    minus_one = ctx.neg(1)
    rows = [[int(i == j) for j in range(n - 1)] + [minus_one] for i in range(n - 1)]
    return _finish(ctx, Matrix.from_rows(ctx, rows), n, "family:repetition", name=f"repetition({q},{n})")


def shorten(code: LinearCode, count: int) -> LinearCode:
    """Drop the last ``count`` message coordinates."""
    if count < 0 or count >= code.k:
        raise ParameterError(f"can shorten by 0..{code.k - 1}, got {count}")
    if count == 0:
        return code
    name = f"shorten({code.label()},{count})"
    if code.H is None:
        return replace(code, n=code.n - count, k=code.k - count, provenance=f"shortened:{code.label()}", name=name)
    drop = set(code.info_positions[-count:])
    keep = [j for j in range(code.n) if j not in drop]
    H = code.H.columns(keep)
    new_index = {old: new for new, old in enumerate(keep)}
    return LinearCode(
        code.ctx,
        code.n - count,
        code.k - count,
        code.d_claimed,
        H,
        f"shortened:{code.label()}",
        tuple(new_index[j] for j in code.check_positions),
        tuple(new_index[j] for j in code.info_positions if j not in drop),
        verified=False,
        name=name,
    )


def from_matrix(H: Matrix, d_claimed: int, verify: bool = True, name: str = "") -> LinearCode:
    """Register an explicit parity-check matrix.

    Identity columns are used where they already exist; otherwise a full-rank
    ``H`` is replaced by its reduced row echelon form, which spans the same
    dual space.
    """
    H.ctx.require_field()
    if H.ncols - H.nrows < 1:
        raise ParameterError("code dimension k = n - rows must be at least 1")
    provenance = "user"
    if _identity_columns(H) is None:
        H = _systematize(H)
        provenance = "user:row-reduced"
    return _finish(H.ctx, H, d_claimed, provenance, name=name, verify=verify)


def cited(q: int, n: int, k: int, d: int, name: str = "") -> LinearCode:
    """A code known only by its parameters (e.g. from published tables)."""
    ctx = _field_ctx(q)
    if not 1 <= k <= n:
        raise ParameterError("need 1 <= k <= n")
    return LinearCode(ctx, n, k, d, None, "cited", name=name or f"[{n},{k},{d}]_{q}")


# -- brute force distance --------------------------------------------------------


def min_distance_bruteforce(code: LinearCode) -> int:
    """Exact minimum weight over all nonzero codewords (``q^k <= 2^20``)."""
    q, k = code.q, code.k
    if q**k > BRUTE_FORCE_LIMIT:
        raise TooLargeError(f"q^k = {q}^{k} exceeds brute-force limit {BRUTE_FORCE_LIMIT}")
    G = code.generator_rows()
    if q <= 256:
        return _min_weight_numpy(code.ctx, G, code.n)
    best = code.n
    for coeffs in itertools.product(range(q), repeat=k):
        if any(coeffs):
            word = [0] * code.n
            for a, g in zip(coeffs, G):
                if a:
                    word = [code.ctx.add(x, code.ctx.mul(a, y)) for x, y in zip(word, g)]
            best = min(best, sum(1 for x in word if x))
    return best


def _min_weight_numpy(ctx: AlphabetCtx, G, n: int) -> int:
    q = ctx.q
    add_t = np.array([[ctx.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
    mul_t = np.array([[ctx.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
    Ga = np.array(G, dtype=np.int32).reshape(len(G), n)
    k = len(G)
    # Split generators: a table of all combinations of the first k1 rows, then loop over the rest.
    k1 = k
    while k1 > 0 and q**k1 > 1 << 14:
        k1 -= 1
    base = np.zeros((1, n), dtype=np.int32)
    for j in range(k1):
        layers = [add_t[base, mul_t[a][Ga[j]]] for a in range(q)]
        base = np.concatenate(layers, axis=0)
    best = n
    for coeffs in itertools.product(range(q), repeat=k - k1):
        offset = np.zeros(n, dtype=np.int32)
        for a, j in zip(coeffs, range(k1, k)):
            offset = add_t[offset, mul_t[a][Ga[j]]]
        words = add_t[base, offset]
        weights = np.count_nonzero(words, axis=1)
        if not any(coeffs):
            weights = weights[1:]  # row 0 of base is the zero combination
        if weights.size:
            best = min(best, int(weights.min()))
    return best


# -- registry and constructive redundancy ------------------------------------------


@dataclass
class CodeRegistry:
    """Append-only store of named codes. Writers must serialise externally."""

    codes: dict[str, LinearCode] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def register(self, code: LinearCode, name: str | None = None) -> LinearCode:
        name = name or code.label()
        with self._lock:
            if name in self.codes:
                raise ParameterError(f"code {name!r} already registered")
            code = replace(code, name=name)
            self.codes[name] = code
        return code

    def get(self, name: str) -> LinearCode:
        try:
            return self.codes[name]
        except KeyError:
            raise ParameterError(f"unknown code {name!r}") from None

    def __iter__(self):
        return iter(list(self.codes.values()))

    def load_manifest(self, path) -> list[LinearCode]:
        """Read lines ``name q n k d path-to-H``; a path of ``-`` registers a cited code."""
        base = Path(path).parent
        added = []
        for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 6:
                raise ParameterError(f"{path}:{lineno}: expected 'name q n k d path'")
            name, q, n, k, d, mpath = parts[0], *map(int, parts[1:5]), parts[5]
            if mpath == "-":
                code = cited(q, n, k, d, name=name)
            else:
                code = from_matrix(read_matrix(base / mpath), d, verify=True, name=name)
                if (code.q, code.n, code.k) != (q, n, k):
                    raise ParameterError(f"{path}:{lineno}: matrix parameters disagree with manifest line")
            added.append(self.register(code, name))
        return added


def _hamming_r(n: int, q: int) -> int:
    r = 2
    while (q**r - 1) // (q - 1) < n:
        r += 1
    return r


def rho_constructive(n: int, d: int, q: int, registry: Iterable[LinearCode] = ()) -> int | None:
    """Smallest redundancy of a length-``n`` code with distance ``>= d`` this library can name.

    None means no available family applies (always the case for ``d >= 2``
    when ``q`` is not a prime power).
    """
    if n < 1 or d < 1:
        raise ParameterError("need n >= 1 and d >= 1")
    if d == 1:
        return 0
    if not is_prime_power(q) or d > n:
        return None
    options = []
    if d == 2:
        options.append(1)
    if d <= 3:
        r = _hamming_r(n, q)
        if n - r >= 1:
            options.append(r)
    if n <= q + 1:
        options.append(d - 1)
    options.append(n - 1)  # repetition code
    for code in registry:
        if code.q == q and code.d_claimed >= d and code.n >= n and code.n - n < code.k:
            options.append(code.n - code.k)
    return min(options)
