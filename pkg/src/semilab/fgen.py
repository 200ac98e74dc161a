"""The free idempotent-generated semigroup F = <a, b | aa = a, bb = b>.

Under the rewriting ``aa -> a``, ``bb -> b`` every element has a unique
normal form: a nonempty alternating word, determined by its first letter and
its length.  F is also realised by 2x2 integer matrices

    a -> A = [[1, 0], [1, 0]]      b -> B = [[1, 1], [0, 0]]
    ab -> C = [[1, 1], [1, 1]]     ba -> D = [[2, 0], [0, 0]]

and the verifiers here cross-check the word model against the matrix model
on finite windows of short words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import WordParseError

_OTHER = {"a": "b", "b": "a"}


@dataclass(frozen=True)
class FWord:
    """Alternating word of ``length`` letters starting with ``first``."""

    first: str
    length: int

    def __post_init__(self):
        if self.first not in _OTHER:
            raise ValueError(f"letter must be 'a' or 'b', got {self.first!r}")
        if self.length < 1:
            raise ValueError("words are nonempty")

    @property
    def last(self) -> str:
        return self.first if self.length % 2 else _OTHER[self.first]

    def letters(self) -> str:
        pair = self.first + _OTHER[self.first]
        return (pair * (self.length // 2 + 1))[: self.length]

    def __str__(self) -> str:
        return format_word(self)


A_WORD = FWord("a", 1)
B_WORD = FWord("b", 1)


def f_mul(x: FWord, y: FWord) -> FWord:
    if x.last == y.first:
        return FWord(x.first, x.length + y.length - 1)
    return FWord(x.first, x.length + y.length)


def f_ell(x: FWord) -> FWord:
    """Idempotent of the L*-class of ``x``: its last letter."""
    return FWord(x.last, 1)


def f_r(x: FWord) -> FWord:
    """Idempotent of the R*-class of ``x``: its first letter."""
    return FWord(x.first, 1)


def normalize(letters: str) -> FWord:
    """Normal form of any nonempty string over ``{a, b}``."""
    if not letters or set(letters) - {"a", "b"}:
        raise WordParseError(f"not a nonempty word over a, b: {letters!r}")
    length = 1
    for prev, cur in zip(letters, letters[1:]):
        if cur != prev:
            length += 1
    return FWord(letters[0], length)


# -- text form ---------------------------------------------------------------

_WORD_RE = re.compile(r"^(?:\((ab|ba)\)\^(\d+))?([ab])?$")


def format_word(x: FWord) -> str:
    """``a``, ``(ab)^3``, ``(ab)^2a`` ...; a lone letter prints bare."""
    if x.length == 1:
        return x.first
    pair = x.first + _OTHER[x.first]
    tail = x.first if x.length % 2 else ""
    return f"({pair})^{x.length // 2}{tail}"


def parse_word(text: str) -> FWord:
    """Inverse of :func:`format_word`; also accepts ``(ab)^0a`` for ``a``."""
    m = _WORD_RE.match(text.strip())
    if m is None or m.group(0) == "":
        raise WordParseError(f"malformed word {text!r}; expected e.g. a, (ab)^2, (ba)^1b")
    pair, exp, tail = m.groups()
    if pair is None:
        return FWord(tail, 1)
    k = int(exp)
    if tail is not None and tail != pair[0]:
        raise WordParseError(f"{text!r} is not alternating: trailing letter must be {pair[0]!r}")
    length = 2 * k + (1 if tail else 0)
    if length == 0:
        raise WordParseError(f"{text!r} denotes the empty word")
    return FWord(pair[0], length)


# -- matrix model ------------------------------------------------------------

@dataclass(frozen=True)
class Mat2:
    e11: int
    e12: int
    e21: int
    e22: int

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.e11 * o.e11 + self.e12 * o.e21,
            self.e11 * o.e12 + self.e12 * o.e22,
            self.e21 * o.e11 + self.e22 * o.e21,
            self.e21 * o.e12 + self.e22 * o.e22,
        )

    def scale(self, k: int) -> "Mat2":
        return Mat2(k * self.e11, k * self.e12, k * self.e21, k * self.e22)

    def rows(self) -> list[list[int]]:
        return [[self.e11, self.e12], [self.e21, self.e22]]


MAT_A = Mat2(1, 0, 1, 0)
MAT_B = Mat2(1, 1, 0, 0)
MAT_C = Mat2(1, 1, 1, 1)
MAT_D = Mat2(2, 0, 0, 0)


def f_to_matrix(x: FWord) -> Mat2:
    """Closed form: (ab)^m -> 2^(m-1) C, (ba)^m -> 2^(m-1) D, (ab)^n a -> 2^n A, (ba)^n b -> 2^n B."""
    half = x.length // 2
    if x.length % 2:
        return (MAT_A if x.first == "a" else MAT_B).scale(1 << half)
    return (MAT_C if x.first == "a" else MAT_D).scale(1 << (half - 1))


def f_to_matrix_iterated(x: FWord) -> Mat2:
    """Same image by multiplying the generator matrices letter by letter."""
    gens = {"a": MAT_A, "b": MAT_B}
    letters = x.letters()
    m = gens[letters[0]]
    for ch in letters[1:]:
        m = m @ gens[ch]
    return m


def f_window(max_len: int) -> list[FWord]:
    """Every word of length at most ``max_len``, ordered by (length, first letter)."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    return [FWord(c, n) for n in range(1, max_len + 1) for c in "ab"]


# -- window verifiers --------------------------------------------------------

@dataclass(frozen=True)
class FViolation:
    check: str
    elements: tuple

    def __str__(self) -> str:
        shown = ", ".join("1" if e is None else format_word(e) for e in self.elements)
        return f"{self.check}: {shown}"


def verify_f_distinct(max_len: int) -> FViolation | None:
    """Window words are pairwise distinct, both as normal forms and as matrices."""
    window = f_window(max_len)
    seen_words: dict[tuple[str, int], FWord] = {}
    seen_mats: dict[Mat2, FWord] = {}
    for x in window:
        key = (x.first, x.length)
        if key in seen_words:
            return FViolation("normal-form collision", (seen_words[key], x))
        seen_words[key] = x
        m = f_to_matrix(x)
        if m != f_to_matrix_iterated(x):
            return FViolation("closed-form matrix disagrees with product", (x,))
        if m in seen_mats:
            return FViolation("matrix collision", (seen_mats[m], x))
        seen_mats[m] = x
    return None


def _mul1(x: FWord, u: Optional[FWord]) -> FWord:
    return x if u is None else f_mul(x, u)


def _lmul1(u: Optional[FWord], x: FWord) -> FWord:
    return x if u is None else f_mul(u, x)


def verify_f_star_window(max_len: int) -> FViolation | None:
    """Audit the claimed L*/R*-classes of F on a finite window.

    Cohesion (words with the same last letter are never told apart by a pair
    from the window plus the identity) is only a necessary condition: it can
    refute the claimed classes but not prove them.  Separation exhibits, for
    each inequivalent pair, a distinguishing pair of multipliers of length at
    most 2.
    """
    if max_len < 4:
        raise ValueError("max_len must be >= 4")
    window = f_window(max_len)
    mult: list[Optional[FWord]] = [None, *window]
    short: list[Optional[FWord]] = [None, *f_window(2)]
    sides = (
        ("L*", f_ell, _mul1),
        ("R*", f_r, _lmul1),
    )
    for rel, rep, act in sides:
        # kernel of x as a set of index pairs, computed once per word
        kernels = {}
        for x in window:
            prods = [act(x, u) if rel == "L*" else act(u, x) for u in mult]
            kernels[x] = _kernel(prods)
        for i, x in enumerate(window):
            for y in window[i + 1:]:
                if rep(x) == rep(y):
                    if kernels[x] != kernels[y]:
                        u, v = _first_difference(kernels[x], kernels[y])
                        return FViolation(f"{rel} cohesion", (x, y, mult[u], mult[v]))
                elif _separating_pair(x, y, short, act, rel) is None:
                    return FViolation(f"{rel} separation", (x, y))
    return None


def _kernel(prods: list[FWord]) -> frozenset[tuple[int, int]]:
    return frozenset(
        (i, j) for i in range(len(prods)) for j in range(i + 1, len(prods)) if prods[i] == prods[j]
    )


def _first_difference(k1, k2) -> tuple[int, int]:
    return min(k1 ^ k2)


def separating_pair(x: FWord, y: FWord, relation: str = "L*"):
    """Multipliers ``(u, v)`` of length <= 2 (None is the identity) telling ``x`` and ``y`` apart."""
    act = _mul1 if relation == "L*" else _lmul1
    return _separating_pair(x, y, [None, *f_window(2)], act, relation)


def _separating_pair(x, y, short, act, rel):
    def p(z, u):
        return act(z, u) if rel == "L*" else act(u, z)

    for u in short:
        for v in short:
            if (p(x, u) == p(x, v)) != (p(y, u) == p(y, v)):
                return u, v
    return None


def verify_power_distinctness(max_m: int) -> FViolation | None:
    """(ab)^1, ..., (ab)^max_m are pairwise distinct in both models."""
    if max_m < 2:
        raise ValueError("max_m must be >= 2")
    ab = FWord("a", 2)
    power = ab
    words: list[FWord] = []
    mats: list[Mat2] = []
    for m in range(1, max_m + 1):
        if m > 1:
            power = f_mul(power, ab)
        if power != FWord("a", 2 * m):
            return FViolation(f"(ab)^{m} has the wrong normal form", (power,))
        mat = f_to_matrix(power)
        if mat != MAT_C.scale(1 << (m - 1)):
            return FViolation(f"(ab)^{m} has the wrong matrix image", (power,))
        for k, (w, mk) in enumerate(zip(words, mats), start=1):
            if w == power or mk == mat:
                return FViolation(f"(ab)^{k} = (ab)^{m}", (w, power))
        words.append(power)
        mats.append(mat)
    return None


def f_classes(words: Iterable[FWord]) -> dict[str, dict[str, list[FWord]]]:
    """Group words by their L*- and R*-class idempotents."""
    out: dict[str, dict[str, list[FWord]]] = {"L*": {}, "R*": {}}
    for x in words:
        out["L*"].setdefault(format_word(f_ell(x)), []).append(x)
        out["R*"].setdefault(format_word(f_r(x)), []).append(x)
    return out
