"""
Fox calculus, the Alexander polynomial of a (1,1)-knot through the
torsion identity Q_alpha = Delta * (1 + t + ... + t^(p_bar - 1)), and
the homology of the strongly-cyclic coverings, computed two ways
(Smith normal form of the circulant, and resultants against t^n - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Optional

from .intlinalg import HomologyGroup, circulant, group_from_presentation
from .knot import (ExteriorHomology, OneOneKnot, gamma_polynomial,
                   strongly_cyclic_monodromy, validate)
from .polyring import (CyclicPoly, LaurentPoly, NotDivisible, RationalFunction,
                       canonical_unit_form, compose_monomial, cyclotomic, divides,
                       equal_up_to_cyclic_units, equal_up_to_laurent_units, exact_divide,
                       geometric_poly, reduce_mod_cyclic, resultant)
from .words import ALPHA, GAMMA, IDENTITY, Generator, Word, exponent_sum


class VerificationError(AssertionError):
    """A theorem identity failed on the given input."""


class GroupRingElement:
    """Finite Z-linear combination of reduced words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, w: Word, c: int = 1) -> "GroupRingElement":
        return cls({w: c})

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def left_multiply(self, u: Word) -> "GroupRingElement":
        out: dict[Word, int] = {}
        for w, c in self.terms.items():
            uw = u * w
            out[uw] = out.get(uw, 0) + c
        return GroupRingElement(out)

    def __rmul__(self, u):
        if isinstance(u, Word):
            return self.left_multiply(u)
        return NotImplemented

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0])):
            body = "" if w == IDENTITY else str(w)
            if abs(c) != 1 or not body:
                body = f"{abs(c)}{'*' + body if body else ''}"
            parts.append(("-" if c < 0 else "+") + " " + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__


def fox_derivative(w: Word, g: Generator) -> GroupRingElement:
    """Free derivative d w / d g."""
    out: dict[Word, int] = {}
    prefix = IDENTITY
    for h, e in w.syllables:
        if h == g:
            if e > 0:
                steps, sign = range(e), 1
            else:
                steps, sign = range(-1, e - 1, -1), -1
            for j in steps:
                term = prefix * Word.letter(g, j)
                out[term] = out.get(term, 0) + sign
        prefix = prefix * Word.letter(h, e)
    return GroupRingElement(out)


def evaluate_abelianized(e: GroupRingElement, alpha_exp: int, gamma_exp: int) -> LaurentPoly:
    """Send alpha to t^alpha_exp and gamma to t^gamma_exp."""
    out: dict[int, int] = {}
    for w, c in e.terms.items():
        k = alpha_exp * exponent_sum(w, ALPHA) + gamma_exp * exponent_sum(w, GAMMA)
        out[k] = out.get(k, 0) + c
    return LaurentPoly(out)


@dataclass(frozen=True)
class AlexanderResult:
    delta: LaurentPoly
    q_alpha: LaurentPoly
    p_bar: int
    d: int

    def to_json(self) -> dict:
        return {"delta": self.delta.to_json(), "q_alpha": self.q_alpha.to_json(),
                "p_bar": self.p_bar, "d": self.d}


def _q_alpha(k: OneOneKnot, h: ExteriorHomology) -> LaurentPoly:
    return evaluate_abelianized(fox_derivative(k.relator, ALPHA), -h.q_bar, h.p_bar)


def alexander_polynomial(k: OneOneKnot) -> AlexanderResult:
    """Delta_K in canonical unit form, from Q_alpha / (1 + ... + t^(p_bar - 1)).

    Raises NotDivisible or VerificationError when the relator cannot be
    the presentation of a (1,1)-knot exterior.
    """
    h = validate(k)
    q_alpha = _q_alpha(k, h)
    geo = geometric_poly(h.p_bar)
    delta = canonical_unit_form(exact_divide(q_alpha, geo))
    if not equal_up_to_laurent_units(q_alpha, delta * geo):
        raise VerificationError(f"Q_alpha = {q_alpha} is not Delta * geometric factor")
    if abs(delta(1)) != h.d:
        raise VerificationError(f"|Delta(1)| = {abs(delta(1))} but d = {h.d}")
    if not equal_up_to_laurent_units(delta, delta.reciprocal()):
        raise VerificationError(f"Delta = {delta} is not symmetric up to units")
    return AlexanderResult(delta, q_alpha, h.p_bar, h.d)


def reduced_torsion(k: OneOneKnot) -> RationalFunction:
    """Q_alpha / (t^p_bar - 1) in lowest terms, scaled by a power of t so the
    numerator starts at t^0; checked against Delta/(t - 1)."""
    alex = alexander_polynomial(k)
    q = alex.q_alpha
    torsion = RationalFunction(q.shift(-q.low()), LaurentPoly({alex.p_bar: 1, 0: -1}))
    expected = RationalFunction(alex.delta, LaurentPoly({1: 1, 0: -1}))
    if not torsion.equal_up_to_units(expected):
        raise VerificationError(f"torsion {torsion} differs from {expected} beyond units")
    return torsion


@dataclass(frozen=True)
class TheoremCheck:
    """Outcome of comparing Gamma(t^p_bar) with Delta * geometric factor mod t^n - 1.

    ``witness`` is (sign, k) with lhs = sign * t^k * rhs, or None.
    """

    n: int
    lhs: CyclicPoly
    rhs: CyclicPoly
    witness: Optional[tuple]

    @property
    def ok(self) -> bool:
        return self.witness is not None

    def to_json(self) -> dict:
        return {"n": self.n, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json(),
                "witness": None if self.witness is None else
                {"sign": self.witness[0], "shift": self.witness[1]},
                "ok": self.ok}


def verify_main_theorem(k: OneOneKnot, n: int) -> TheoremCheck:
    gamma = gamma_polynomial(k, n)
    alex = alexander_polynomial(k)
    lhs = compose_monomial(gamma, alex.p_bar)
    rhs = reduce_mod_cyclic(alex.delta * geometric_poly(alex.p_bar), n)
    return TheoremCheck(n, lhs, rhs, equal_up_to_cyclic_units(lhs, rhs))


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def covering_polynomial(k: OneOneKnot, n: int) -> CyclicPoly:
    """G(t) = Gamma_{K,n}(t^p_bar), first row of the circulant presenting
    H_1 of the covering."""
    h = validate(k)
    return compose_monomial(gamma_polynomial(k, n), h.p_bar)


def cover_homology(k: OneOneKnot, n: int) -> HomologyGroup:
    return group_from_presentation(circulant(covering_polynomial(k, n).coeffs))


def cover_homology_order(k: OneOneKnot, n: int):
    """|Res(t^n - 1, G)|, or INFINITE when it vanishes."""
    g = covering_polynomial(k, n)
    if g.is_zero():
        return INFINITE
    res = resultant(LaurentPoly({n: 1, 0: -1}), g.to_laurent())
    return INFINITE if res == 0 else abs(res)


def cyclotomic_part(g: LaurentPoly, n: int) -> LaurentPoly:
    """Product of the distinct Phi_s, s | n, that divide g."""
    phi = LaurentPoly.const(1)
    for s in range(1, n + 1):
        if n % s == 0 and divides(cyclotomic(s), g):
            phi = phi * cyclotomic(s)
    return phi


def cover_torsion_order(k: OneOneKnot, n: int) -> int:
    """Order of the torsion of H_1 of the covering, as |Res((t^n-1)/Phi, G/Phi)|."""
    g = covering_polynomial(k, n)
    if g.is_zero():
        return 1
    gl = g.to_laurent()
    phi = cyclotomic_part(gl, n)
    h = exact_divide(gl, phi)
    psi = exact_divide(LaurentPoly({n: 1, 0: -1}), phi)
    return abs(resultant(psi, h))


@dataclass(frozen=True)
class CoverCheck:
    n: int
    homology: HomologyGroup
    order: object
    torsion_order: int

    @property
    def ok(self) -> bool:
        if self.order is INFINITE:
            finite_ok = self.homology.free_rank > 0
        else:
            finite_ok = self.homology.free_rank == 0 and self.order == self.homology.torsion_order
        return finite_ok and self.torsion_order == self.homology.torsion_order

    def to_json(self) -> dict:
        return {"n": self.n, "homology": self.homology.to_json(),
                "order": None if self.order is INFINITE else str(self.order),
                "infinite": self.order is INFINITE,
                "torsion_order": str(self.torsion_order), "ok": self.ok}


def check_cover(k: OneOneKnot, n: int) -> CoverCheck:
    """Resultant and Smith-normal-form routes side by side."""
    return CoverCheck(n, cover_homology(k, n), cover_homology_order(k, n), cover_torsion_order(k, n))


def coprime_degrees(p: int, n_max: int) -> list[int]:
    return [n for n in range(2, n_max + 1) if gcd(n, p) == 1]


@dataclass
class KnotVerification:
    """Everything the verifier checks for one knot over a list of degrees."""

    knot: OneOneKnot
    exterior: ExteriorHomology
    alexander: AlexanderResult
    theorem: list
    covers: list
    gammas: dict
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_knot(k: OneOneKnot, n_values) -> KnotVerification:
    """Main theorem, covering homology cross-checks and Gamma(1) = +-p
    for each n; raises KnotError on bad input."""
    h = validate(k)
    failures = []
    try:
        alex = alexander_polynomial(k)
    except (NotDivisible, VerificationError) as exc:
        raise VerificationError(f"Alexander polynomial: {exc}") from exc
    theorem, covers, gammas = [], [], {}
    for n in n_values:
        strongly_cyclic_monodromy(k, n)
        gamma = gamma_polynomial(k, n)
        gammas[n] = gamma
        if abs(gamma.value_at_one()) != k.p:
            failures.append(f"n={n}: Gamma(1) = {gamma.value_at_one()}, expected +-{k.p}")
        check = verify_main_theorem(k, n)
        theorem.append(check)
        if not check.ok:
            failures.append(f"n={n}: Gamma(t^{alex.p_bar}) = {check.lhs} and "
                            f"Delta*geometric = {check.rhs} differ beyond +-t^k")
        cov = check_cover(k, n)
        covers.append(cov)
        if not cov.ok:
            failures.append(f"n={n}: covering homology {cov.homology} disagrees with "
                            f"resultant order {cov.order} / torsion order {cov.torsion_order}")
    return KnotVerification(k, h, alex, theorem, covers, gammas, failures)


__all__ = [
    "GroupRingElement", "fox_derivative", "evaluate_abelianized", "AlexanderResult",
    "alexander_polynomial", "reduced_torsion", "TheoremCheck", "verify_main_theorem",
    "INFINITE", "covering_polynomial", "cover_homology", "cover_homology_order",
    "cover_torsion_order", "cyclotomic_part", "CoverCheck", "check_cover", "coprime_degrees",
    "KnotVerification", "verify_knot", "VerificationError",
]
