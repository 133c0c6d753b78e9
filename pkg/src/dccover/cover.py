"""Tetravalent covers of doubled cycles built from banded code matrices.

A proper divisor g of x^n - (-1)^eps over Z_p yields an r x n matrix whose
rows are the shifted coefficient vectors of g, with r = n - deg g.  The cover
has vertex set Z_p^r x Z_n, and each vertex (v, j) is joined to
(v + col_j, j+1) and (v - col_j, j+1) where col_j is column j of the matrix.
Vertices are numbered j * p^r + value(v) with v read as little-endian base-p
digits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fpoly import FpPoly, code_modulus, is_odd_prime, poly_x


class NonSimpleCover(ValueError):
    """A zero matrix column would merge the two parallel arcs of a layer."""

    def __init__(self, column: int):
        super().__init__(f"column {column} is zero, giving parallel edges")
        self.column = column


@dataclass(frozen=True)
class GeneratorMatrix:
    """Voltage matrix over Z_p; column j feeds the arcs leaving layer j."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        rows = tuple(tuple(int(x) % self.p for x in row) for row in self.rows)
        if not rows or not rows[0]:
            raise ValueError("the matrix must be nonempty")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_poly(cls, g: FpPoly, n: int) -> "GeneratorMatrix":
        """Banded matrix whose row i carries the coefficients of x^i * g."""
        m = g.degree
        if not 1 <= n - m:
            raise ValueError("the polynomial leaves no room for rows")
        r = n - m
        coeffs = [g.coeff(k) for k in range(m + 1)]
        rows = tuple(
            tuple(coeffs[j - i] if i <= j <= i + m else 0 for j in range(n))
            for i in range(r)
        )
        return cls(g.p, rows)

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple[int, ...]:
        j %= self.n
        return tuple(row[j] for row in self.rows)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.n))

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)


def check_simple(matrix: GeneratorMatrix) -> int | None:
    """Index of the first zero column, or None when the cover is simple."""
    for j in range(matrix.n):
        if not any(matrix.column(j)):
            return j
    return None


class CoverGraph:
    """Cover of the doubled cycle described by a generator matrix.

    Darts at a vertex are tracked as t in {0, 1, 2, 3}: t=0 adds the column
    of the current layer (the a-arc), t=1 subtracts it, and t=2, t=3 step
    back to the previous layer undoing t=0 and t=1 respectively.
    """

    def __init__(
        self,
        matrix: GeneratorMatrix,
        eps: int | None = None,
        g: FpPoly | None = None,
    ):
        bad = check_simple(matrix)
        if bad is not None:
            raise NonSimpleCover(bad)
        self.matrix = matrix
        self.p = matrix.p
        self.n = matrix.n
        self.r = matrix.r
        self.eps = eps
        self.g = g
        self.fiber_size = self.p**self.r
        self.order = self.n * self.fiber_size
        self._add_tables = self._build_add_tables()
        self._sub_tables = np.empty_like(self._add_tables)
        for j in range(self.n):
            self._sub_tables[j, self._add_tables[j]] = np.arange(self.fiber_size)
        self._adjacency: list[list[int]] | None = None

    def _build_add_tables(self) -> np.ndarray:
        """Table [j, v] of the fiber value v plus column j, digitwise mod p."""
        p, r, size = self.p, self.r, self.fiber_size
        values = np.arange(size, dtype=np.int64)
        digits = np.empty((r, size), dtype=np.int64)
        rest = values
        for i in range(r):
            digits[i] = rest % p
            rest = rest // p
        tables = np.empty((self.n, size), dtype=np.int64)
        for j in range(self.n):
            col = self.matrix.column(j)
            acc = np.zeros(size, dtype=np.int64)
            weight = 1
            for i in range(r):
                acc += ((digits[i] + col[i]) % p) * weight
                weight *= p
            tables[j] = acc
        return tables

    # -- vertex encoding ------------------------------------------------------

    def vertex_id(self, fiber, layer: int) -> int:
        fiber = tuple(fiber)
        if len(fiber) != self.r:
            raise ValueError(f"expected {self.r} fiber digits, got {len(fiber)}")
        value = 0
        weight = 1
        for x in fiber:
            value += (int(x) % self.p) * weight
            weight *= self.p
        return (layer % self.n) * self.fiber_size + value

    def vertex_of(self, vid: int) -> tuple[tuple[int, ...], int]:
        layer, value = divmod(vid, self.fiber_size)
        fiber = []
        for _ in range(self.r):
            value, digit = divmod(value, self.p)
            fiber.append(digit)
        return tuple(fiber), layer

    def layer(self, vid: int) -> int:
        return vid // self.fiber_size

    # -- dart structure ---------------------------------------------------------

    def dart_end(self, vid: int, t: int) -> int:
        """End vertex of the dart of track t at vid."""
        size = self.fiber_size
        layer, value = divmod(vid, size)
        if t == 0:
            return (layer + 1) % self.n * size + self._add_tables[layer, value]
        if t == 1:
            return (layer + 1) % self.n * size + self._sub(layer, value)
        back = (layer - 1) % self.n
        if t == 2:
            return back * size + self._sub(back, value)
        if t == 3:
            return back * size + self._add_tables[back, value]
        raise ValueError(f"track {t} out of range")

    def _sub(self, j: int, value: int) -> int:
        return self._sub_tables[j, value]

    def base_dart(self, vid: int, t: int) -> int:
        """Dart of the doubled cycle under the covering projection."""
        layer = vid // self.fiber_size
        j = layer if t < 2 else (layer - 1) % self.n
        return t * self.n + j

    def dart_inverse_track(self, t: int) -> int:
        return t ^ 2

    # -- graph views -----------------------------------------------------------

    def neighbors(self, vid: int) -> list[int]:
        return [self.dart_end(vid, t) for t in range(4)]

    def adjacency(self) -> list[list[int]]:
        if self._adjacency is None:
            self._adjacency = [self.neighbors(v) for v in range(self.order)]
        return self._adjacency

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, nbrs in enumerate(self.adjacency()):
            for v in nbrs:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def translations(self) -> list[list[int]]:
        """Vertex permutations adding each standard basis vector to fibers."""
        out = []
        size = self.fiber_size
        values = np.arange(size, dtype=np.int64)
        digits = []
        rest = values
        for _ in range(self.r):
            digits.append(rest % self.p)
            rest = rest // self.p
        for i in range(self.r):
            weight = self.p**i
            shifted = values + weight - (digits[i] == self.p - 1) * self.p * weight
            perm = []
            for layer in range(self.n):
                perm.extend((layer * size + shifted).tolist())
            out.append(perm)
        return out

    def is_connected(self) -> bool:
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            nxt = []
            for u in frontier:
                for w in self.neighbors(u):
                    if not seen[w]:
                        seen[w] = True
                        nxt.append(w)
            frontier = nxt
        return bool(seen.all())


def build_cover(g: FpPoly, n: int, eps: int) -> CoverGraph:
    """Cover of the doubled cycle on n vertices from a proper divisor g."""
    if n < 3:
        raise ValueError("the base cycle needs at least three vertices")
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    if g.is_zero or g.leading != 1:
        raise ValueError("the divisor must be monic")
    modulus = code_modulus(n, eps, g.p)
    if g.degree >= n or not g.divides(modulus):
        raise ValueError(f"{g.to_text()!r} is not a proper divisor of {modulus.to_text()!r}")
    cover = CoverGraph(GeneratorMatrix.from_poly(g, n), eps=eps, g=g)
    assert cover.is_connected(), "covers of proper divisors are connected"
    return cover


def extremal_cover(kind: str, p: int, r: int, blocks: int) -> CoverGraph:
    """Cover with identity-block voltage matrix and maximal fiber dimension.

    Kind "pm1" lays down `blocks` copies of the r x r identity.  Kind
    "pmtheta" alternates the identity with theta times the identity where
    theta is a square root of -1, so p must be 1 mod 4 and `blocks` even.
    Both give n = r * blocks.
    """
    if r < 1 or blocks < 2:
        raise ValueError("need a positive fiber dimension and at least two blocks")
    n = r * blocks
    if n < 3:
        raise ValueError("the base cycle needs at least three vertices")
    eye = np.eye(r, dtype=np.int64)
    if kind == "pm1":
        eps = 0
        scales = [1] * blocks
        core = [1] * blocks
    elif kind == "pmtheta":
        if p % 4 != 1:
            raise ValueError("a square root of -1 requires p = 1 mod 4")
        if blocks % 2:
            raise ValueError("the alternating family needs an even block count")
        theta = min(x for x in range(2, p) if (x * x + 1) % p == 0)
        eps = (blocks // 2) % 2
        # The monic divisor has theta^(k+1-blocks) on block k; since the
        # adjacency only uses columns up to sign, the alternation theta, 1,
        # theta, 1, ... yields the identical edge set.
        core = [pow(theta, (k + 1 - blocks) % 4, p) for k in range(blocks)]
        scales = [theta if k % 2 == 0 else 1 for k in range(blocks)]
        if any((s - c) % p and (s + c) % p for s, c in zip(scales, core)):
            raise AssertionError("block scales drifted from the divisor")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    block_row = np.hstack([(s * eye) % p for s in scales])
    matrix = GeneratorMatrix(p, tuple(map(tuple, block_row.tolist())))
    poly = FpPoly(p, tuple(
        core[k // r] if k % r == 0 else 0 for k in range((blocks - 1) * r + 1)
    ))
    assert poly.divides(code_modulus(n, eps, p))
    cover = CoverGraph(matrix, eps=eps, g=poly)
    assert cover.is_connected()
    return cover
