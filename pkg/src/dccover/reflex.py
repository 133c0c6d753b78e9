"""Reflexibility of code polynomials and maximality within the divisor lattice.

A polynomial with coefficients a_0..a_m (a_0, a_m nonzero) is type-1
reflexible when some unit s satisfies s*a_{m-i} = a_i for all i, and type-2
reflexible when s*a_{m-i} = (-1)^i * a_i for all i.  The scale is forced to
a_0 / a_m by the i = 0 equation, so classification is a single pass.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fpoly import FpPoly, code_modulus, compress, modulus_divisors, support_gcd


@dataclass(frozen=True)
class Reflexibility:
    """Which reflexibility equations hold, and the forced scale."""

    type1: bool
    type2: bool
    scale: int

    @property
    def kind(self) -> str:
        if self.type1 and self.type2:
            return "both"
        return "type1" if self.type1 else "type2"


def reflexibility_of(f: FpPoly) -> Reflexibility | None:
    """Classify f as type-1/type-2/both reflexible, or None."""
    if f.is_zero:
        raise ValueError("zero polynomial cannot be classified")
    if f.coeff(0) == 0:
        raise ValueError("constant term must be nonzero")
    p = f.p
    m = f.degree
    scale = f.coeff(0) * pow(f.coeff(m), p - 2, p) % p
    type1 = all(scale * f.coeff(m - i) % p == f.coeff(i) for i in range(m + 1))
    type2 = all(
        scale * f.coeff(m - i) % p == (-1) ** i * f.coeff(i) % p
        for i in range(m + 1)
    )
    if not (type1 or type2):
        return None
    return Reflexibility(type1, type2, scale)


def core_polynomial(g: FpPoly, n: int) -> tuple[int, FpPoly]:
    """The support step d of g and the core c with g(x) = c(x^d).

    The constant divisor 1 uses step n: the full code length.
    """
    d = support_gcd(g, constant_default=n)
    return d, compress(g, d)


def is_weakly_reflexible(g: FpPoly, n: int) -> bool:
    """True when the core polynomial of g is reflexible of either type."""
    _, core = core_polynomial(g, n)
    return reflexibility_of(core) is not None


def _require_divisor(g: FpPoly, n: int, eps: int) -> None:
    mod = code_modulus(n, eps, g.p)
    if g == mod or not g.divides(mod):
        raise ValueError(
            f"{g.to_text()!r} is not a proper divisor of the length-{n} modulus"
        )


def is_maximal_divisor(g: FpPoly, n: int, eps: int) -> bool:
    """True when no proper divisor of the modulus lies strictly above g."""
    _require_divisor(g, n, eps)
    for q in modulus_divisors(n, eps, g.p):
        if q != g and g.divides(q):
            return False
    return True


def is_maximal_weakly_reflexible(g: FpPoly, n: int, eps: int) -> bool:
    """True when no weakly reflexible proper divisor lies strictly above g."""
    _require_divisor(g, n, eps)
    if not is_weakly_reflexible(g, n):
        raise ValueError(f"{g.to_text()!r} is not weakly reflexible")
    for q in modulus_divisors(n, eps, g.p):
        if q != g and g.divides(q) and is_weakly_reflexible(q, n):
            return False
    return True


@dataclass(frozen=True)
class DivisorInfo:
    """A proper divisor of x^n - (-1)^eps with its derived classification.

    fiber_dim is n - deg(g): the rank of the banded generator matrix, hence
    the exponent of the fiber group Z_p^fiber_dim of the cover.
    """

    g: FpPoly
    n: int
    eps: int
    fiber_dim: int
    step: int
    core: FpPoly
    core_refl: Reflexibility | None
    weakly_reflexible: bool
    maximal_divisor: bool
    maximal_weakly_reflexible: bool

    @property
    def p(self) -> int:
        return self.g.p


def divisor_info(g: FpPoly, n: int, eps: int) -> DivisorInfo:
    """Classify a proper divisor; validates divisibility and monicity."""
    _require_divisor(g, n, eps)
    if g.leading != 1:
        raise ValueError("divisors are handled in monic form")
    d, core = core_polynomial(g, n)
    if n % d:
        raise AssertionError("support step must divide the code length")
    refl = reflexibility_of(core)
    wr = refl is not None
    return DivisorInfo(
        g=g,
        n=n,
        eps=eps,
        fiber_dim=n - max(g.degree, 0),
        step=d,
        core=core,
        core_refl=refl,
        weakly_reflexible=wr,
        maximal_divisor=is_maximal_divisor(g, n, eps),
        maximal_weakly_reflexible=wr and is_maximal_weakly_reflexible(g, n, eps),
    )
