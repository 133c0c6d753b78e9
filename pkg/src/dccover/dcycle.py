"""The doubled cycle and its automorphisms in split normal form.

The doubled cycle on n vertices has two parallel arcs a_j, b_j from vertex j
to vertex j+1.  Darts are encoded as t*n + j with track t in {0: a_j, 1: b_j,
2: inverse of a_j, 3: inverse of b_j}; flipping bit 0 of t exchanges the two
parallel arcs, flipping bit 1 reverses direction.

Every automorphism factors uniquely as tau_J sigma^s rho^k where tau_J swaps
the parallel arc pairs indexed by J, sigma is the reflection fixing the arcs
between vertices 0 and 1, and rho is the one-step rotation.  Factors apply
left to right throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


# -- subsets of Z_n as bitmasks ----------------------------------------------


def mask_shift(mask: int, n: int, k: int) -> int:
    """Image of a subset of Z_n under j -> j + k, as a bitmask."""
    k %= n
    full = (1 << n) - 1
    return ((mask << k) | (mask >> (n - k))) & full if k else mask


def mask_reverse(mask: int, n: int) -> int:
    """Image of a subset of Z_n under j -> -j, as a bitmask."""
    out = 0
    for j in range(n):
        if (mask >> j) & 1:
            out |= 1 << ((-j) % n)
    return out


def mask_bits(mask: int) -> list[int]:
    out = []
    j = 0
    while mask >> j:
        if (mask >> j) & 1:
            out.append(j)
        j += 1
    return out


def span_basis(masks) -> list[int]:
    """Echelonized basis of a set of bitmasks over GF(2)."""
    basis: list[int] = []
    for m in masks:
        for b in basis:
            m = min(m, m ^ b)
        if m:
            basis.append(m)
            basis.sort(reverse=True)
    return basis


def in_span(basis, mask: int) -> bool:
    for b in basis:
        mask = min(mask, mask ^ b)
    return mask == 0


# -- automorphisms ------------------------------------------------------------


@dataclass(frozen=True)
class DCAut:
    """Automorphism tau_J sigma^s rho^k of the doubled cycle on n vertices."""

    n: int
    swaps: int = 0
    reflect: int = 0
    shift: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if not 0 <= self.swaps < (1 << self.n):
            raise ValueError("swap set is not a subset of Z_n")
        if self.reflect not in (0, 1):
            raise ValueError("reflect must be 0 or 1")
        object.__setattr__(self, "shift", self.shift % self.n)

    # constructors

    @classmethod
    def identity(cls, n: int) -> "DCAut":
        return cls(n)

    @classmethod
    def edge_swap(cls, n: int, j: int) -> "DCAut":
        return cls(n, swaps=1 << (j % n))

    @classmethod
    def edge_swaps(cls, n: int, js) -> "DCAut":
        mask = 0
        for j in js:
            mask ^= 1 << (j % n)
        return cls(n, swaps=mask)

    @classmethod
    def full_swap(cls, n: int) -> "DCAut":
        return cls(n, swaps=(1 << n) - 1)

    @classmethod
    def periodic_swap(cls, n: int, i: int, step: int) -> "DCAut":
        """tau over the arithmetic progression i, i+step, ... of step dividing n."""
        if step <= 0 or n % step:
            raise ValueError(f"step {step} does not divide {n}")
        return cls.edge_swaps(n, range(i % step, n, step))

    @classmethod
    def reflection(cls, n: int) -> "DCAut":
        return cls(n, reflect=1)

    @classmethod
    def rotation(cls, n: int, k: int = 1) -> "DCAut":
        return cls(n, shift=k)

    # group structure

    def __mul__(self, other: "DCAut") -> "DCAut":
        """Composite applying self first, then other."""
        if self.n != other.n:
            raise ValueError("mixed cycle lengths")
        n = self.n
        carried = mask_shift(other.swaps, n, -self.shift)
        if self.reflect:
            carried = mask_reverse(carried, n)
        shift = other.shift - self.shift if other.reflect else self.shift + other.shift
        return DCAut(n, self.swaps ^ carried, self.reflect ^ other.reflect, shift)

    def inverse(self) -> "DCAut":
        n = self.n
        mask = mask_reverse(self.swaps, n) if self.reflect else self.swaps
        mask = mask_shift(mask, n, self.shift)
        shift = self.shift if self.reflect else -self.shift
        return DCAut(n, mask, self.reflect, shift)

    def is_identity(self) -> bool:
        return self.swaps == 0 and self.reflect == 0 and self.shift == 0

    # actions

    def vertex_image(self, v: int) -> int:
        w = (1 - v) % self.n if self.reflect else v % self.n
        return (w + self.shift) % self.n

    def dart_image(self, dart: int) -> int:
        n = self.n
        t, j = divmod(dart, n)
        if (self.swaps >> j) & 1:
            t ^= 1
        if self.reflect:
            j = -j % n
            t ^= 2
        return t * n + (j + self.shift) % n

    def vertex_perm(self) -> list[int]:
        return [self.vertex_image(v) for v in range(self.n)]

    def arc_perm(self) -> list[int]:
        return [self.dart_image(d) for d in range(4 * self.n)]

    # text form

    def to_text(self) -> str:
        parts = []
        if self.swaps:
            parts.append("t[" + ",".join(map(str, mask_bits(self.swaps))) + "]")
        if self.reflect:
            parts.append("s")
        if self.shift:
            parts.append(f"r{self.shift}" if self.shift != 1 else "r")
        return "*".join(parts) if parts else "1"

    @classmethod
    def from_text(cls, n: int, text: str) -> "DCAut":
        out = cls.identity(n)
        if text.strip() == "1":
            return out
        for part in text.strip().split("*"):
            if part == "s":
                out = out * cls.reflection(n)
            elif part == "r":
                out = out * cls.rotation(n)
            elif part.startswith("r"):
                out = out * cls.rotation(n, int(part[1:]))
            elif part.startswith("t[") and part.endswith("]"):
                js = [int(x) for x in part[2:-1].split(",") if x]
                out = out * cls.edge_swaps(n, js)
            else:
                raise ValueError(f"cannot parse factor {part!r}")
        return out

    def __str__(self) -> str:
        return self.to_text()


class DoubledCycle:
    """Dart structure of the doubled cycle on n vertices."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one vertex")
        self.n = n
        self.dart_count = 4 * n

    def beg(self, dart: int) -> int:
        t, j = divmod(dart, self.n)
        return j if t < 2 else (j + 1) % self.n

    def inv(self, dart: int) -> int:
        t, j = divmod(dart, self.n)
        return (t ^ 2) * self.n + j

    def end(self, dart: int) -> int:
        return self.beg(self.inv(dart))


# -- action on first homology -------------------------------------------------


def homology_matrix(aut: DCAut, p: int) -> np.ndarray:
    """Matrix of the automorphism on first homology mod p, rows are images.

    The basis is c_0, ..., c_{n-1}, c_* with c_j the difference of the two
    parallel arcs from vertex j and c_* the sum of all arcs.  tau_J negates
    the c_j with j in J, sigma sends c_j to -c_{-j} and negates c_*, rho
    shifts indices; the composite has one signed entry per row.
    """
    n = aut.n
    mat = np.zeros((n + 1, n + 1), dtype=np.int64)
    corner = -1 if aut.reflect else 1
    for i in range(n):
        col = ((-i if aut.reflect else i) + aut.shift) % n
        sign = corner * (-1 if (aut.swaps >> i) & 1 else 1)
        mat[i, col] = sign % p
    mat[n, n] = corner % p
    return mat


def mat_mult(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


# -- vertex- and edge-transitive subgroups -------------------------------------


def subgroup_from_case(
    n: int, case: str, b_masks=(), eps: int = 0, j_mask: int = 0
) -> list[DCAut]:
    """Generators of a vertex- and edge-transitive subgroup of a given shape.

    Case "i" is the dihedral group generated by the rotation and the
    reflection composed with the full swap; it takes no further data.  Cases
    "ii" and "iii" adjoin to a swap subgroup B (given by generator masks) the
    twisted rotation, and for "iii" also a twisted reflection.  The side
    conditions on B, eps and J are verified and violations raise ValueError.
    """
    if case == "i":
        return [DCAut.rotation(n), DCAut.reflection(n) * DCAut.full_swap(n)]
    if case not in ("ii", "iii"):
        raise ValueError(f"unknown case {case!r}")
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    basis = span_basis(b_masks)
    if not basis:
        raise ValueError("the swap subgroup must be nontrivial")
    for m in b_masks:
        if not in_span(basis, mask_shift(m, n, 1)):
            raise ValueError("the swap subgroup is not rotation-invariant")
    full = (1 << n) - 1
    if eps and not in_span(basis, full):
        raise ValueError("eps=1 requires the full swap inside the subgroup")
    tau0 = DCAut.edge_swap(n, 0)
    gens = [DCAut(n, swaps=m) for m in b_masks]
    rot = DCAut.rotation(n)
    gens.append(rot * tau0 if eps else rot)
    if case == "iii":
        for m in b_masks:
            if not in_span(basis, mask_reverse(m, n)):
                raise ValueError("the swap subgroup is not reflection-invariant")
        if not in_span(basis, j_mask ^ mask_reverse(j_mask, n)):
            raise ValueError("tau_J tau_{-J} must lie in the swap subgroup")
        if not in_span(basis, j_mask ^ mask_shift(j_mask, n, 1)):
            raise ValueError("tau_J tau_{J+1} must lie in the swap subgroup")
        refl = DCAut.reflection(n)
        if eps:
            refl = refl * tau0
        gens.append(refl * DCAut(n, swaps=j_mask))
    return gens
