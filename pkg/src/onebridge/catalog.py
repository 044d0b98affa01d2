"""
Built-in knots with golden values.

* ``trivial{p}_{q}``: the trivial knot in L(p,q), relator a^p.
* ``km{m}`` (m >= 3): K_m in L(m-2,1), relator (ag)^(m-1) A g; ``km3``
  is the trefoil, also available as ``trefoil``.

Golden values for K_m come from the closed forms for that family, not
from the lifting code, so ``verify --catalog`` is an independent check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd

from .knot import OneOneKnot
from .polyring import CyclicPoly, LaurentPoly, reduce_mod_cyclic

GOLDEN_N_MAX = 12


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    knot: OneOneKnot
    delta: LaurentPoly
    d: int
    gamma: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "knot": self.knot.to_json(),
            "expected": {
                "delta": self.delta.to_json(),
                "d": self.d,
                "gamma": {str(n): g.to_json() for n, g in sorted(self.gamma.items())},
            },
        }


def trivial(p: int, q: int) -> CatalogEntry:
    name = "unknot" if p == 1 else f"trivial{p}_{q}"
    knot = OneOneKnot.from_text(p, q, f"a^{p}", name)
    gamma = {n: reduce_mod_cyclic(LaurentPoly.const(p), n)
             for n in range(2, GOLDEN_N_MAX + 1) if gcd(n, p) == 1}
    return CatalogEntry(name, knot, LaurentPoly.const(p), p, gamma)


def km_gamma(m: int, n: int) -> CyclicPoly:
    """Closed form: sum_{i=0}^{m-2} t^(i(1+c)) - t^(1+(m-2)(1+c)), where
    c = -m/(m-2) for odd m and -(m/2)/((m-2)/2) for even m, in Z/n."""
    if m % 2:
        c = -m * pow(m - 2, -1, n)
    else:
        c = -(m // 2) * pow((m - 2) // 2, -1, n)
    f = LaurentPoly({})
    for i in range(m - 1):
        f = f + LaurentPoly.monomial(i * (1 + c))
    f = f - LaurentPoly.monomial(1 + (m - 2) * (1 + c))
    return reduce_mod_cyclic(f, n)


def km(m: int) -> CatalogEntry:
    if m < 3:
        raise ValueError(f"K_m needs m >= 3, got {m}")
    p = m - 2
    name = "trefoil" if m == 3 else f"km{m}"
    knot = OneOneKnot.from_text(p, 1 % p, "ag" * (m - 1) + "Ag", name)
    if m % 2:
        delta = LaurentPoly({i: (-1) ** i for i in range(m)})
        d = 1
    else:
        delta = LaurentPoly({0: 1, m // 2: 1})
        d = 2
    gamma = {n: km_gamma(m, n) for n in range(2, GOLDEN_N_MAX + 1) if gcd(n, p) == 1}
    return CatalogEntry(name, knot, delta, d, gamma)


def builtin() -> list[CatalogEntry]:
    """Trivial knots for p <= 7 (every valid q) and K_m for 3 <= m <= 10."""
    out = [trivial(1, 0)]
    for p in range(2, 8):
        out.extend(trivial(p, q) for q in range(1, p) if gcd(p, q) == 1)
    out.extend(km(m) for m in range(3, 11))
    return out


def lookup(name: str) -> CatalogEntry:
    key = name.strip().lower().replace(" ", "")
    if key in ("trefoil", "km3", "k3"):
        return km(3)
    if key == "unknot":
        return trivial(1, 0)
    match = re.fullmatch(r"k_?m\(?(\d+)\)?", key)
    if match:
        return km(int(match.group(1)))
    match = re.fullmatch(r"trivial\(?(\d+)[_,](\d+)\)?", key)
    if match:
        p, q = int(match.group(1)), int(match.group(2))
        if p < 1 or (p == 1 and q != 0) or (p > 1 and not (0 < q < p and gcd(p, q) == 1)):
            raise KeyError(f"no trivial knot in L({p},{q})")
        return trivial(p, q)
    raise KeyError(f"unknown catalog knot {name!r}; try km3, km4, trefoil, trivial5_2")
