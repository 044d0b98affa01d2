"""
(1,1)-knots given by a two-generator one-relator presentation
<alpha, gamma | r(alpha, gamma)> of the exterior in L(p, q), and the
cyclic presentations of their strongly-cyclic branched coverings.

The lens parameter q is metadata: only gcd(p, q) = 1 is checked.
Every computation uses p and the gamma exponent sum q' of the relator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .intlinalg import HomologyGroup, IntMatrix, group_from_presentation
from .polyring import CyclicPoly
from .words import (ALPHA, GAMMA, IDENTITY, Generator, Word, exponent_sum, leading_gamma,
                    parse_relator, substitute_alpha, syllable_profile)


class KnotError(ValueError):
    """Invalid input.  ``code`` is one of P_ZERO, BAD_LENS_PARAMS,
    ALPHA_SUM_MISMATCH, BAD_RELATOR, BAD_N, NOT_COPRIME."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class OneOneKnot:
    p: int
    q: int
    relator: Word
    name: Optional[str] = None

    @classmethod
    def from_text(cls, p: int, q: int, relator: str, name: Optional[str] = None) -> "OneOneKnot":
        return cls(int(p), int(q), parse_relator(relator), name)

    @classmethod
    def from_json(cls, data: dict) -> "OneOneKnot":
        missing = [k for k in ("p", "q", "relator") if k not in data]
        if missing:
            raise KnotError("BAD_RELATOR", f"knot object is missing {', '.join(missing)}")
        return cls.from_text(data["p"], data["q"], data["relator"], data.get("name"))

    def to_json(self) -> dict:
        return {"name": self.name, "p": self.p, "q": self.q, "relator": self.relator.relator_text()}

    @property
    def label(self) -> str:
        return self.name or f"L({self.p},{self.q}) <a,g | {self.relator.relator_text()}>"


@dataclass(frozen=True)
class ExteriorHomology:
    """H_1 of the knot exterior, Z + Z/d, with the data the torsion
    computation needs: p_bar = p/d, q_bar = q'/d and a Bezout pair
    (r, s) with r*p_bar + s*q_bar = 1."""

    d: int
    p_bar: int
    q_bar: int
    q_prime: int
    bezout: tuple

    @property
    def group(self) -> HomologyGroup:
        return HomologyGroup(1, (self.d,) if self.d > 1 else ())

    def to_json(self) -> dict:
        return {"d": self.d, "p_bar": self.p_bar, "q_bar": self.q_bar, "q_prime": self.q_prime,
                "bezout": list(self.bezout), "group": str(self.group)}


def _bezout(a: int, b: int) -> tuple[int, int]:
    """(x, y) with a*x + b*y = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        x0, y0 = -x0, -y0
    return x0, y0


def validate(k: OneOneKnot) -> ExteriorHomology:
    if k.p == 0:
        raise KnotError("P_ZERO", "p = 0 is S^2 x S^1, where strongly-cyclic coverings are not unique; "
                                  "not supported")
    if k.p < 0:
        raise KnotError("BAD_LENS_PARAMS", f"p must be positive, got {k.p}")
    if k.p == 1 and k.q != 0:
        raise KnotError("BAD_LENS_PARAMS", f"L(1,q) = S^3 is written with q = 0, got q = {k.q}")
    if k.p > 1 and not (0 <= k.q < k.p and gcd(k.p, k.q) == 1):
        raise KnotError("BAD_LENS_PARAMS", f"L({k.p},{k.q}) needs 0 <= q < p and gcd(p,q) = 1")
    stray = k.relator.generators() - {ALPHA, GAMMA}
    if stray:
        raise KnotError("BAD_RELATOR", f"relator uses generators other than alpha, gamma: {sorted(stray)}")
    e_alpha = exponent_sum(k.relator, ALPHA)
    if e_alpha != k.p:
        raise KnotError("ALPHA_SUM_MISMATCH",
                        f"the alpha exponent sum of the relator is {e_alpha}, but must equal p = {k.p}")
    q_prime = exponent_sum(k.relator, GAMMA)
    d = gcd(e_alpha, q_prime)
    p_bar, q_bar = e_alpha // d, q_prime // d
    return ExteriorHomology(d, p_bar, q_bar, q_prime, _bezout(p_bar, q_bar))


@dataclass(frozen=True)
class Monodromy:
    """omega(alpha), omega(gamma) in Z/n, normalized so omega(gamma) = 1."""

    n: int
    omega_alpha: int
    omega_gamma: int = 1

    def to_json(self) -> dict:
        return {"n": self.n, "omega_alpha": self.omega_alpha, "omega_gamma": self.omega_gamma}


def _check_n(k: OneOneKnot, n: int):
    if n < 2:
        raise KnotError("BAD_N", f"covering degree n must be at least 2, got {n}")
    if gcd(n, k.p) != 1:
        raise KnotError("NOT_COPRIME",
                        f"gcd(n,p) = gcd({n},{k.p}) \u2260 1: strongly-cyclic covering not unique")


def strongly_cyclic_monodromy(k: OneOneKnot, n: int) -> Monodromy:
    """The unique solution of p*omega(alpha) + q' = 0 (mod n)."""
    h = validate(k)
    _check_n(k, n)
    return Monodromy(n, (-h.q_prime * pow(k.p, -1, n)) % n)


@dataclass(frozen=True)
class CyclicPresentation:
    """G_n(w) = <x_1..x_n | w, theta(w), ..., theta^(n-1)(w)>."""

    n: int
    w: Word

    def __post_init__(self):
        for g in self.w.generators():
            if g.kind != "x" or not 1 <= g.index <= self.n:
                raise ValueError(f"generator {g} is not among x_1..x_{self.n}")

    def theta(self, s: int = 1) -> Word:
        n = self.n
        return self.w.map_generators(lambda g: Generator.x((g.index - 1 + s) % n + 1))

    def relators(self) -> list[Word]:
        return [self.theta(s) for s in range(self.n)]

    def relation_matrix(self) -> IntMatrix:
        """Exponent-sum matrix of all n relators against x_1..x_n."""
        return IntMatrix([[exponent_sum(r, Generator.x(i)) for i in range(1, self.n + 1)]
                          for r in self.relators()])

    def abelianization(self) -> HomologyGroup:
        return group_from_presentation(self.relation_matrix())

    def to_json(self) -> dict:
        return {"n": self.n, "word": str(self.w)}


def lift_presentation(k: OneOneKnot, n: int) -> CyclicPresentation:
    """Cyclic presentation of the n-fold strongly-cyclic covering.

    Substitutes alpha = x gamma^c (c = omega(alpha)), then reads x-letter
    subscripts off the running gamma exponent, 1-based mod n.  A leading
    gamma syllable just offsets the starting subscript.
    """
    c = strongly_cyclic_monodromy(k, n).omega_alpha
    rbar = substitute_alpha(k.relator, c)
    offset = leading_gamma(rbar)
    if offset:
        rbar = Word(rbar.syllables[1:])
    letters = []
    position = offset
    for eps, delta in syllable_profile(rbar, unit_steps=True):
        letters.append((Generator.x(position % n + 1), eps))
        position += delta
    return CyclicPresentation(n, Word(letters) if letters else IDENTITY)


def associated_polynomial(cp: CyclicPresentation) -> CyclicPoly:
    return CyclicPoly(cp.n, [exponent_sum(cp.w, Generator.x(i)) for i in range(1, cp.n + 1)])


def gamma_polynomial(k: OneOneKnot, n: int) -> CyclicPoly:
    """The n-cyclic polynomial of k."""
    return associated_polynomial(lift_presentation(k, n))
