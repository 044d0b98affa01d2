"""
Words in the free group on the generators alpha, gamma (knot group)
and x_1, ..., x_n (cyclic presentations).

Words are immutable and always freely reduced.  The relator syntax is

    word   := { term }
    term   := letter [ '^' int ]
    letter := 'a' | 'A' | 'g' | 'G'
    int    := ['-'] digit+

with whitespace ignored; an uppercase letter is the inverse of the
lowercase one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Generator:
    """A free generator: alpha, gamma, or x_i.

    ``x_0`` is reserved for the fresh letter introduced by
    :func:`substitute_alpha`.
    """

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in ("a", "g", "x"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "x" and self.index < 0:
            raise ValueError("x generator index must be nonnegative")
        if self.kind != "x" and self.index != 0:
            raise ValueError("alpha and gamma carry no index")

    @classmethod
    def x(cls, i: int) -> "Generator":
        return cls("x", i)

    def __str__(self):
        if self.kind == "x":
            return "x" if self.index == 0 else f"x{self.index}"
        return self.kind

    __repr__ = __str__


ALPHA = Generator("a")
GAMMA = Generator("g")
X = Generator.x(0)


def _reduce(syllables: Iterable[tuple[Generator, int]]) -> tuple:
    stack: list[list] = []
    for gen, e in syllables:
        if e == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, e])
    return tuple((g, e) for g, e in stack)


class Word:
    """A freely reduced word, stored as a tuple of (generator, exponent)
    syllables with nonzero exponents and no two adjacent syllables
    sharing a generator."""

    __slots__ = ("syllables", "_hash")

    def __init__(self, syllables: Iterable[tuple[Generator, int]] = ()):
        self.syllables = _reduce(syllables)
        self._hash = hash(self.syllables)

    @classmethod
    def letter(cls, gen: Generator, e: int = 1) -> "Word":
        return cls([(gen, e)])

    def __eq__(self, other):
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.syllables < other.syllables

    def __len__(self):
        """Length as a reduced word in letters (not syllables)."""
        return sum(abs(e) for _, e in self.syllables)

    def __iter__(self) -> Iterator[tuple[Generator, int]]:
        return iter(self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.syllables))

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.syllables * abs(k))

    def letters(self) -> Iterator[tuple[Generator, int]]:
        """Iterate over single letters as (generator, +1 or -1)."""
        for g, e in self.syllables:
            s = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, s

    def generators(self) -> set:
        return {g for g, _ in self.syllables}

    def map_generators(self, f) -> "Word":
        """Apply ``f: Generator -> Generator`` letterwise."""
        return Word((f(g), e) for g, e in self.syllables)

    def __str__(self):
        if not self.syllables:
            return "1"
        parts = []
        for g, e in self.syllables:
            name = str(g)
            parts.append(name if e == 1 else f"{name}^{e}")
        return " ".join(parts)

    def __repr__(self):
        return f"Word({self})"

    def relator_text(self) -> str:
        """Render in the relator grammar (alpha/gamma words only)."""
        out = []
        for g, e in self.syllables:
            if g.kind not in ("a", "g"):
                raise ValueError(f"{g} has no relator-grammar spelling")
            ch = g.kind if e > 0 else g.kind.upper()
            out.append(ch if abs(e) == 1 else f"{ch}^{abs(e)}")
        return "".join(out)


IDENTITY = Word()


class RelatorSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


_LETTERS = {"a": (ALPHA, 1), "A": (ALPHA, -1), "g": (GAMMA, 1), "G": (GAMMA, -1)}


def parse_relator(text: str) -> Word:
    """Parse a relator such as ``"agagAg"`` or ``"a^5"`` into a reduced Word.

    Offsets in error messages are byte offsets into the UTF-8 encoding.
    """
    data = text.encode("utf-8")
    pos, n = 0, len(data)
    syllables = []

    def skip_ws(i):
        while i < n and chr(data[i]).isspace():
            i += 1
        return i

    while True:
        pos = skip_ws(pos)
        if pos >= n:
            break
        ch = chr(data[pos]) if data[pos] < 128 else None
        if ch not in _LETTERS:
            raise RelatorSyntaxError(f"unknown letter {text.encode()[pos:pos + 1]!r}", pos)
        gen, sign = _LETTERS[ch]
        pos = skip_ws(pos + 1)
        exp = 1
        if pos < n and data[pos] == ord("^"):
            start = pos
            pos = skip_ws(pos + 1)
            neg = False
            if pos < n and data[pos] == ord("-"):
                neg = True
                pos += 1
            digits_start = pos
            while pos < n and 48 <= data[pos] <= 57:
                pos += 1
            if pos == digits_start:
                raise RelatorSyntaxError("malformed exponent", start)
            exp = int(data[digits_start:pos])
            if neg:
                exp = -exp
        syllables.append((gen, sign * exp))
    return Word(syllables)


def exponent_sum(w: Word, g: Generator) -> int:
    return sum(e for h, e in w.syllables if h == g)


def substitute_alpha(w: Word, c: int) -> Word:
    """Replace every alpha^e by (x gamma^c)^e, with x the fresh letter ``X``."""
    unit = Word([(X, 1), (GAMMA, c)])
    out = IDENTITY
    for g, e in w.syllables:
        if g == ALPHA:
            out = out * unit ** e
        elif g == GAMMA:
            out = out * Word.letter(GAMMA, e)
        else:
            raise ValueError(f"substitute_alpha expects a word in alpha, gamma; got {g}")
    return out


def leading_gamma(w: Word) -> int:
    """Exponent of a leading gamma syllable, 0 if the word starts otherwise."""
    if w.syllables and w.syllables[0][0] == GAMMA:
        return w.syllables[0][1]
    return 0


def syllable_profile(w: Word, unit_steps: bool = False) -> list[tuple[int, int]]:
    """Decompose ``w = x^e1 g^d1 ... x^es g^ds`` into [(e1, d1), ...].

    With ``unit_steps`` each x-run of exponent e is split into |e| steps of
    sign(e), separated by zero gamma exponents.  The word must start with x
    (strip a leading gamma first, see :func:`leading_gamma`).
    """
    profile: list[list[int]] = []
    for g, e in w.syllables:
        if g == X:
            profile.append([e, 0])
        elif g == GAMMA:
            if not profile:
                raise ValueError("word starts with gamma; strip the leading gamma syllable first")
            profile[-1][1] = e
        else:
            raise ValueError(f"syllable_profile expects a word in x, gamma; got {g}")
    if not unit_steps:
        return [(e, d) for e, d in profile]
    out = []
    for e, d in profile:
        s = 1 if e > 0 else -1
        out.extend([(s, 0)] * (abs(e) - 1))
        out.append((s, d))
    return out
