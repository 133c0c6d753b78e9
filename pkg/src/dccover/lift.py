"""Lifting doubled-cycle automorphisms to cover graphs.

An automorphism of the doubled cycle lifts to a cover exactly when its
action on first homology mod p preserves the kernel of the voltage map,
and that kernel is the annihilator of the row space of the generator
matrix.  The decision therefore reduces to invariance of the row space
under the transposed homology block.  lift_by_propagation makes the same
decision combinatorially and returns the lifted vertex permutation when
it exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .cover import CoverGraph, GeneratorMatrix
from .dcycle import DCAut, span_basis
from .reflex import DivisorInfo, is_maximal_divisor, is_maximal_weakly_reflexible

# -- the row-space criterion ---------------------------------------------------


def _reduce(vec, pivots, rows, p):
    out = list(vec)
    for piv, row in zip(pivots, rows):
        c = out[piv] % p
        if c:
            out = [(a - c * b) % p for a, b in zip(out, row)]
    return out


@lru_cache(maxsize=None)
def _row_space(matrix: GeneratorMatrix):
    """Pivot columns and reduced echelon basis of the matrix row space."""
    p = matrix.p
    pivots: list[int] = []
    rows: list[list[int]] = []
    for raw in matrix.rows:
        vec = _reduce(raw, pivots, rows, p)
        lead = next((i for i, a in enumerate(vec) if a), None)
        if lead is None:
            continue
        inv = pow(vec[lead], p - 2, p)
        vec = [a * inv % p for a in vec]
        for other in rows:
            c = other[lead]
            if c:
                other[:] = [(a - c * b) % p for a, b in zip(other, vec)]
        at = next((k for k, piv in enumerate(pivots) if piv > lead), len(pivots))
        pivots.insert(at, lead)
        rows.insert(at, vec)
    return tuple(pivots), tuple(tuple(row) for row in rows)


def lifts_by_invariance(aut: DCAut, matrix: GeneratorMatrix) -> bool:
    """Whether the automorphism maps the matrix row space into itself.

    Row i of the homology block carries a single signed entry at column
    perm(i), so a row vector w maps to y with y[i] = sign(i) * w[perm(i)];
    the automorphism lifts exactly when every basis row maps back into
    the row space.
    """
    n, p = matrix.n, matrix.p
    if aut.n != n:
        raise ValueError("automorphism and matrix disagree on the cycle length")
    pivots, rows = _row_space(matrix)
    corner = -1 if aut.reflect else 1
    perm = [((-i if aut.reflect else i) + aut.shift) % n for i in range(n)]
    sign = [corner * (-1 if (aut.swaps >> i) & 1 else 1) for i in range(n)]
    for w in rows:
        y = [sign[i] * w[perm[i]] % p for i in range(n)]
        if any(_reduce(y, pivots, rows, p)):
            return False
    return True


def lifting_swaps(matrix: GeneratorMatrix) -> list[int]:
    """Basis masks of the group of edge swaps that lift, found exhaustively.

    Lifts form a group and swaps compose by xor of their masks, so the
    lifting swaps are a binary subspace; every mask is tested and the
    result is checked to be closed.
    """
    n = matrix.n
    if n > 20:
        raise ValueError("exhaustive swap search is limited to 20 edge pairs")
    hits = [
        m for m in range(1 << n) if lifts_by_invariance(DCAut(n, swaps=m), matrix)
    ]
    basis = span_basis(hits)
    if len(hits) != 1 << len(basis):
        raise AssertionError("lifting swaps do not form a subspace")
    return basis


# -- combinatorial lifting by forced propagation -------------------------------


@dataclass(frozen=True)
class Inconsistent:
    """Witness that propagation forced two different images on one vertex."""

    vertex: int
    expected: int
    got: int


def lift_by_propagation(
    aut: DCAut, cover: CoverGraph, base_image: int | None = None
) -> list[int] | Inconsistent:
    """Lift the automorphism to a vertex permutation, or return a witness.

    The image of vertex 0 determines everything else: each dart at a
    placed vertex must map to the unique dart over the image of its base
    dart, which forces the image of the far endpoint.  Breadth-first
    propagation either completes the permutation or revisits a vertex
    with a conflicting image.  By default vertex 0 goes to the zero fiber
    point over its base image.
    """
    n = cover.n
    if aut.n != n:
        raise ValueError("automorphism and cover disagree on the cycle length")
    if base_image is None:
        base_image = cover.vertex_id((0,) * cover.r, aut.vertex_image(0))
    if cover.layer(base_image) != aut.vertex_image(0):
        raise ValueError("base image must lie over the image of vertex 0")
    image = [-1] * cover.order
    image[0] = base_image
    queue = deque([0])
    while queue:
        u = queue.popleft()
        iu = image[u]
        for t in range(4):
            target = aut.dart_image(cover.base_dart(u, t))
            t2, j2 = divmod(target, n)
            start = cover.layer(iu) if t2 < 2 else (cover.layer(iu) - 1) % n
            if j2 != start:
                raise AssertionError("image dart does not start at the image vertex")
            v = int(cover.dart_end(u, t))
            iv = int(cover.dart_end(iu, t2))
            if image[v] < 0:
                image[v] = iv
                queue.append(v)
            elif image[v] != iv:
                return Inconsistent(vertex=v, expected=image[v], got=iv)
    if min(image) < 0:
        raise AssertionError("propagation did not reach every vertex")
    if len(set(image)) != cover.order:
        raise AssertionError("propagation produced a non-bijective map")
    return image


# -- the lifting subgroup of a divisor ------------------------------------------


def is_minimal_cover(info: DivisorInfo) -> bool:
    """Whether no strictly larger divisor gives an intermediate cover of the same kind.

    Covers shrink as divisors grow, so minimal covers come from maximal
    divisors.  The comparison happens at the core level, in the compressed
    code of length n / step: maximal among weakly reflexible divisors when
    the cover is arc-transitive, maximal outright otherwise.
    """
    m = info.n // info.step
    if info.weakly_reflexible:
        return is_maximal_weakly_reflexible(info.core, m, info.eps)
    return is_maximal_divisor(info.core, m, info.eps)


@dataclass(frozen=True)
class LiftReport:
    """The largest edge-transitive subgroup that lifts, with derived data."""

    info: DivisorInfo
    generators: tuple[DCAut, ...]
    arc_transitive: bool
    tau_l: DCAut | None
    stabilizer: str
    minimal_cover: bool
    base_order: int
    lifted_order: int


def lifting_report(info: DivisorInfo) -> LiftReport:
    """Generators of the maximal lifting edge-transitive subgroup.

    The swaps that lift are generated by the step-d periodic swaps, the
    twisted rotation always lifts, and a twisted reflection lifts exactly
    when the core is reflexible: its swap tail is the full swap for a
    type-1 core and the union of the even-position step classes for a
    strictly type-2 core.  Every generator is re-checked against the
    row-space criterion before being reported.
    """
    n, eps, d = info.n, info.eps, info.step
    gens = [DCAut.periodic_swap(n, i, d) for i in range(d)]
    tau0 = DCAut.edge_swap(n, 0)
    rot = DCAut.rotation(n)
    gens.append(rot * tau0 if eps else rot)
    tau_l = None
    if info.weakly_reflexible:
        if info.core_refl.type1:
            tau_l = DCAut.full_swap(n)
        else:
            if n % (2 * d):
                raise AssertionError("a strictly type-2 core forces an even quotient")
            tau_l = DCAut(n, swaps=sum(1 << j for j in range(n) if j % (2 * d) < d))
        refl = DCAut.reflection(n)
        if eps:
            refl = refl * tau0
        gens.append(refl * tau_l)
    matrix = GeneratorMatrix.from_poly(info.g, n)
    for g in gens:
        if not lifts_by_invariance(g, matrix):
            raise AssertionError(f"predicted generator {g} fails the row-space criterion")
    base = (1 << d) * n * (2 if info.weakly_reflexible else 1)
    return LiftReport(
        info=info,
        generators=tuple(gens),
        arc_transitive=info.weakly_reflexible,
        tau_l=tau_l,
        stabilizer=f"Z2^{d}:Z2" if info.weakly_reflexible else f"Z2^{d}",
        minimal_cover=is_minimal_cover(info),
        base_order=base,
        lifted_order=base * info.p**info.fiber_dim,
    )


def lifted_generators(report: LiftReport, cover: CoverGraph) -> list[list[int]]:
    """Vertex permutations generating the full preimage of the base group.

    One propagation lift per base generator plus the fiber translations;
    together these generate every lift of every element of the base group,
    a group of order base_order * p^fiber_dim.
    """
    info = report.info
    if cover.matrix != GeneratorMatrix.from_poly(info.g, info.n):
        raise ValueError("cover does not belong to the report's divisor")
    perms: list[list[int]] = []
    for g in report.generators:
        lift = lift_by_propagation(g, cover)
        if isinstance(lift, Inconsistent):
            raise AssertionError(f"verified generator {g} failed to lift")
        perms.append(lift)
    perms.extend(cover.translations())
    return perms
