"""The mod 2 Steenrod algebra in the admissible basis.

Words are tuples of positive exponents ``(a1, ..., ak)`` read as
``Sq^a1 Sq^a2 ... Sq^ak``. Elements are frozensets of admissible words,
with GF(2) addition given by symmetric difference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Tuple

Word = Tuple[int, ...]
Poly = FrozenSet[Word]

ZERO: Poly = frozenset()
UNIT: Poly = frozenset([()])


def binom2(n: int, k: int) -> int:
    """C(n, k) mod 2 via Lucas: odd iff the bits of k sit inside those of n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if (k & ~n) == 0 else 0


def degree(word: Word) -> int:
    return sum(word)


def is_admissible(word: Word) -> bool:
    return all(word[i] >= 2 * word[i + 1] for i in range(len(word) - 1))


def excess(word: Word) -> int:
    if not word:
        return 0
    return word[0] - sum(word[1:])


def _clean(word: Iterable[int]) -> Word:
    return tuple(a for a in word if a != 0)


@lru_cache(maxsize=None)
def _sq_times(a: int, word: Word) -> Poly:
    """Sq^a times an admissible word, normalized."""
    if a == 0:
        return frozenset([word])
    if not word or a >= 2 * word[0]:
        return frozenset([(a,) + word])
    b, rest = word[0], word[1:]
    acc = set()
    for j in range(a // 2 + 1):
        if binom2(b - 1 - j, a - 2 * j):
            tail = _sq_times(j, rest)
            for w in tail:
                acc ^= _sq_times(a + b - j, w)
    return frozenset(acc)


@lru_cache(maxsize=None)
def adem_normalize(word: Word) -> Poly:
    """Admissible normal form of a word (exponent 0 entries are dropped)."""
    word = _clean(word)
    if is_admissible(word):
        return frozenset([word])
    acc = {()}
    for a in reversed(word):
        nxt = set()
        for w in acc:
            nxt ^= _sq_times(a, w)
        acc = nxt
    return frozenset(acc)


def add(*polys: Poly) -> Poly:
    acc = set()
    for p in polys:
        acc ^= p
    return frozenset(acc)


def compose(p: Poly, q: Poly) -> Poly:
    acc = set()
    for u in p:
        for v in q:
            acc ^= adem_normalize(u + v)
    return frozenset(acc)


@lru_cache(maxsize=None)
def _admissibles(d: int, max_first: int) -> Tuple[Word, ...]:
    if d == 0:
        return ((),)
    out = []
    for a in range(min(d, max_first), 0, -1):
        for rest in _admissibles(d - a, a // 2):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def admissible_basis(d: int, e_max: int | None = None) -> Tuple[Word, ...]:
    """Admissible words of degree ``d`` with excess at most ``e_max``.

    Ordered lexicographically on exponent sequences.
    """
    words = _admissibles(d, d)
    if e_max is not None:
        words = tuple(w for w in words if excess(w) <= e_max)
    return tuple(sorted(words))


def sorted_terms(p: Poly) -> List[Word]:
    return sorted(p)


def render_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(f"Sq^{a}" for a in word)


def render(p: Poly) -> str:
    if not p:
        return "0"
    return " + ".join(render_word(w) for w in sorted(p))


_TERM = re.compile(r"Sq\^?(\d+)")


def parse(text: str) -> Poly:
    """Parse ``"Sq^2 Sq^1 + Sq^3"`` style text into a normalized element."""
    text = text.strip()
    if text == "0":
        return ZERO
    acc = set()
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if chunk == "1":
            acc ^= UNIT
            continue
        pos = 0
        exps = []
        for m in _TERM.finditer(chunk):
            if chunk[pos:m.start()].strip():
                raise ValueError(f"cannot parse {chunk!r}")
            exps.append(int(m.group(1)))
            pos = m.end()
        if chunk[pos:].strip() or not exps:
            raise ValueError(f"cannot parse {chunk!r}")
        acc ^= adem_normalize(tuple(exps))
    return frozenset(acc)


@dataclass(frozen=True)
class SqPoly:
    """Homogeneous-or-not element of the Steenrod algebra."""

    terms: Poly = ZERO

    @classmethod
    def word(cls, *exps: int) -> "SqPoly":
        return cls(adem_normalize(tuple(exps)))

    @classmethod
    def parse(cls, text: str) -> "SqPoly":
        return cls(parse(text))

    def __add__(self, other: "SqPoly") -> "SqPoly":
        return SqPoly(self.terms ^ other.terms)

    def __mul__(self, other: "SqPoly") -> "SqPoly":
        return SqPoly(compose(self.terms, other.terms))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {degree(w) for w in self.terms}

    def __str__(self):
        return render(self.terms)

    def __repr__(self):
        return f"SqPoly({render(self.terms)!r})"
