"""
Exact integer polynomial arithmetic.

``LaurentPoly`` lives in Z[t, 1/t], ``CyclicPoly`` in Z[t]/(t^n - 1).
Nothing in here touches floating point: products over roots of unity
are evaluated as resultants.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Mapping, Optional, Sequence

from .intlinalg import determinant


def _render(terms) -> str:
    """Render (exponent, coefficient) pairs in increasing exponent order."""
    out = []
    for e, c in terms:
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out) if out else "0"


class LaurentPoly:
    """Integer Laurent polynomial, stored as {exponent: coefficient}."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self._hash = None

    @classmethod
    def from_list(cls, coeffs: Sequence[int], shift: int = 0) -> "LaurentPoly":
        """``coeffs[i]`` is the coefficient of t^(i + shift)."""
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def low(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def high(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def span(self) -> int:
        """Breadth high - low; -1 for zero."""
        return self.high() - self.low() if self.coeffs else -1

    def __getitem__(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def dense(self) -> tuple[int, list[int]]:
        """(lowest exponent, ascending coefficient list)."""
        if not self.coeffs:
            return 0, []
        lo = self.low()
        return lo, [self.coeffs.get(e, 0) for e in range(lo, self.high() + 1)]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) == 1:
                (e, c), = self.coeffs.items()
                if abs(c) == 1:
                    return LaurentPoly({e * k: c ** abs(k)})
            raise ValueError("only units can be raised to negative powers")
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """f(t) -> f(t^k)."""
        out: dict[int, int] = {}
        for e, c in self.coeffs.items():
            out[e * k] = out.get(e * k, 0) + c
        return LaurentPoly(out)

    def reciprocal(self) -> "LaurentPoly":
        """f(t) -> f(1/t)."""
        return self.substitute_power(-1)

    def __call__(self, value: int):
        """Evaluate at an integer or Fraction (t = 0 needs no negative exponents)."""
        return sum(c * value ** e for e, c in self.coeffs.items())

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return _render(sorted(self.coeffs.items()))

    def to_json(self) -> dict:
        return {
            "text": str(self),
            "coefficients": {str(e): str(c) for e, c in sorted(self.coeffs.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data["coefficients"].items()})


T = LaurentPoly.monomial(1)


class CyclicPoly:
    """A residue class in Z[t]/(t^n - 1); ``coeffs[i]`` multiplies t^i."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Sequence[int]):
        if n < 2:
            raise ValueError(f"cyclic modulus must be at least 2, got {n}")
        c = [int(v) for v in coeffs]
        if len(c) != n:
            raise ValueError(f"expected {n} coefficients, got {len(c)}")
        self.n = n
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, n: int) -> "CyclicPoly":
        return cls(n, [0] * n)

    def _check(self, other: "CyclicPoly"):
        if not isinstance(other, CyclicPoly) or other.n != self.n:
            raise ValueError("cyclic polynomials over different moduli")

    def __eq__(self, other):
        return isinstance(other, CyclicPoly) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __add__(self, other):
        self._check(other)
        return CyclicPoly(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CyclicPoly(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclicPoly(self.n, [other * a for a in self.coeffs])
        self._check(other)
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % n] += a * b
        return CyclicPoly(n, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "CyclicPoly":
        """Multiply by t^k."""
        n = self.n
        return CyclicPoly(n, [self.coeffs[(i - k) % n] for i in range(n)])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def to_laurent(self) -> LaurentPoly:
        """The ordinary representative of degree < n."""
        return LaurentPoly.from_list(self.coeffs)

    def __repr__(self):
        return f"CyclicPoly({self.n}, {list(self.coeffs)})"

    def __str__(self):
        return _render([(i, c) for i, c in enumerate(self.coeffs) if c])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "text": str(self),
            "coefficients": {str(i): str(c) for i, c in enumerate(self.coeffs) if c},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CyclicPoly":
        n = int(data["n"])
        c = [0] * n
        for e, v in data["coefficients"].items():
            c[int(e)] = int(v)
        return cls(n, c)


def reduce_mod_cyclic(f: LaurentPoly, n: int) -> CyclicPoly:
    if n < 2:
        raise ValueError(f"cyclic modulus must be at least 2, got {n}")
    out = [0] * n
    for e, c in f.coeffs.items():
        out[e % n] += c
    return CyclicPoly(n, out)


def compose_monomial(f: CyclicPoly, k: int) -> CyclicPoly:
    """f(t) -> f(t^k) in Z[t]/(t^n - 1)."""
    n = f.n
    out = [0] * n
    for i, c in enumerate(f.coeffs):
        out[(i * k) % n] += c
    return CyclicPoly(n, out)


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_divide`; ``remainder`` is what was left when
    the integer long division stopped."""

    def __init__(self, dividend, divisor, remainder: LaurentPoly):
        super().__init__(f"{divisor} does not divide {dividend} (remainder {remainder})")
        self.remainder = remainder


def _divmod_dense(f: list[int], g: list[int]):
    """Integer long division of ascending coefficient lists.

    Returns (quotient, remainder, exact) where ``exact`` is False if a
    leading coefficient did not divide and the division had to stop.
    """
    f = list(f)
    dg, lc = len(g) - 1, g[-1]
    q = [0] * max(len(f) - dg, 0)
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if c == 0:
            continue
        if c % lc:
            return q, f, False
        m = c // lc
        q[k - dg] = m
        for i, b in enumerate(g):
            f[k - dg + i] -= m * b
    return q, f, True


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """h with f = g*h exactly, or NotDivisible."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return LaurentPoly()
    flo, fd = f.dense()
    glo, gd = g.dense()
    q, r, ok = _divmod_dense(fd, gd)
    rem = LaurentPoly.from_list(r, flo)
    if not ok or not rem.is_zero():
        raise NotDivisible(f, g, rem)
    return LaurentPoly.from_list(q, flo - glo)


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    try:
        exact_divide(f, g)
    except NotDivisible:
        return False
    return True


def canonical_unit_form(f: LaurentPoly) -> LaurentPoly:
    """The representative of {+-t^k f} with lowest exponent 0 and a
    positive lowest coefficient."""
    if f.is_zero():
        return f
    lo = f.low()
    sign = 1 if f[lo] > 0 else -1
    return LaurentPoly({e - lo: sign * c for e, c in f.coeffs.items()})


def equal_up_to_laurent_units(f: LaurentPoly, g: LaurentPoly) -> bool:
    return canonical_unit_form(f) == canonical_unit_form(g)


def equal_up_to_cyclic_units(f: CyclicPoly, g: CyclicPoly) -> Optional[tuple[int, int]]:
    """Find (sign, k) with f = sign * t^k * g, trying k = 0..n-1 and +1 before -1.

    Only the units +-t^k are tried; None means no such unit exists, not that
    f and g are non-associate in the full unit group.
    """
    if f.n != g.n:
        raise ValueError("cyclic polynomials over different moduli")
    neg = -g
    for k in range(f.n):
        if f == g.shift(k):
            return 1, k
        if f == neg.shift(k):
            return -1, k
    return None


@lru_cache(maxsize=None)
def cyclotomic(s: int) -> LaurentPoly:
    """The s-th cyclotomic polynomial, by dividing t^s - 1 by the lower ones."""
    if s < 1:
        raise ValueError(f"cyclotomic index must be positive, got {s}")
    f = LaurentPoly({s: 1, 0: -1})
    for d in range(1, s):
        if s % d == 0:
            f = exact_divide(f, cyclotomic(d))
    return f


def geometric_poly(k: int) -> LaurentPoly:
    """1 + t + ... + t^(k-1)."""
    if k < 1:
        raise ValueError(f"geometric polynomial length must be positive, got {k}")
    return LaurentPoly.from_list([1] * k)


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix of two ascending coefficient lists."""
    m, n = len(f) - 1, len(g) - 1
    fd, gd = list(reversed(f)), list(reversed(g))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def resultant(f: LaurentPoly, g: LaurentPoly) -> int:
    """Res(f, g) of the ordinary polynomials t^-low(f) f and t^-low(g) g.

    Computed as a Bareiss determinant of the Sylvester matrix.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant with the zero polynomial")
    _, fd = f.dense()
    _, gd = g.dense()
    return determinant(sylvester_matrix(fd, gd))


def _content(c: list[int]) -> int:
    g = 0
    for v in c:
        g = gcd(g, v)
    return g


def _primitive(c: list[int]) -> list[int]:
    g = _content(c)
    if c[-1] < 0:
        g = -g
    return [v // g for v in c]


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Primitive gcd in Z[t] of the ordinary parts (positive leading
    coefficient, lowest exponent 0); monomial factors are ignored."""
    if f.is_zero():
        return canonical_unit_form(g) if not g.is_zero() else LaurentPoly()
    if g.is_zero():
        return canonical_unit_form(f)
    a, b = _primitive(f.dense()[1]), _primitive(g.dense()[1])
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        # pseudo-remainder keeps everything integral
        r = list(a)
        lc, db = b[-1], len(b) - 1
        while r and len(r) - 1 >= db:
            c = r[-1]
            k = len(r) - 1 - db
            r = [v * lc for v in r]
            for i, bv in enumerate(b):
                r[k + i] -= c * bv
            _trim(r)
        if not r:
            return LaurentPoly.from_list(b)
        a, b = b, _primitive(r)
    return LaurentPoly.const(1)


class RationalFunction:
    """A quotient of Laurent polynomials, in lowest terms.

    The denominator is normalized to lowest exponent 0 and positive
    leading coefficient; the numerator absorbs the matching unit, so the
    value is unchanged.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly):
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        if numerator.is_zero():
            numerator, denominator = LaurentPoly(), LaurentPoly.const(1)
        else:
            common = poly_gcd(numerator, denominator)
            numerator = exact_divide(numerator, common)
            denominator = exact_divide(denominator, common)
            content = gcd(_content(numerator.dense()[1]), _content(denominator.dense()[1]))
            lo = denominator.low()
            sign = 1 if denominator[denominator.high()] > 0 else -1
            numerator = LaurentPoly({e - lo: sign * c // content for e, c in numerator.coeffs.items()})
            denominator = LaurentPoly({e - lo: sign * c // content for e, c in denominator.coeffs.items()})
        self.numerator = numerator
        self.denominator = denominator

    def __eq__(self, other):
        return (isinstance(other, RationalFunction)
                and self.numerator == other.numerator
                and self.denominator == other.denominator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def equal_up_to_units(self, other: "RationalFunction") -> bool:
        """Equality up to multiplication by +-t^k."""
        return equal_up_to_laurent_units(self.numerator * other.denominator,
                                         other.numerator * self.denominator)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        return f"({self.numerator})/({self.denominator})"

    def to_json(self) -> dict:
        return {"text": str(self),
                "numerator": self.numerator.to_json(),
                "denominator": self.denominator.to_json()}
