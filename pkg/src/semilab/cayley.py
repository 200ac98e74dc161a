"""Finite semigroups as validated Cayley tables.

Elements are the dense indices ``0 .. n-1``; any human-readable names live
only at the I/O boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import NotAssociative, OutOfRangeEntry, TableShapeError


@dataclass(frozen=True)
class ElementSet:
    """A subset of ``[0, n)`` stored as an integer bitmask."""

    bits: int = 0

    @classmethod
    def of(cls, members: Iterable[int]) -> "ElementSet":
        bits = 0
        for m in members:
            bits |= 1 << m
        return cls(bits)

    def __iter__(self) -> Iterator[int]:
        bits, i = self.bits, 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x >= 0 and bool(self.bits >> x & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits | other.bits)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits & other.bits)

    def issubset(self, other: "ElementSet") -> bool:
        return self.bits & ~other.bits == 0

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"ElementSet({set(self) or '{}'})"


@dataclass(frozen=True)
class CayleyTable:
    """An associative product table; build through :func:`validate`."""

    products: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.products)

    def mul(self, x: int, y: int) -> int:
        return self.products[x][y]

    def transpose(self) -> "CayleyTable":
        """The opposite semigroup (``x * y := y x``)."""
        return CayleyTable(tuple(zip(*self.products)), self.name)

    def relabel(self, perm: Sequence[int]) -> "CayleyTable":
        """Image of the table under the bijection ``i -> perm[i]``."""
        n = self.order
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows[perm[i]][perm[j]] = perm[self.products[i][j]]
        return CayleyTable(tuple(map(tuple, rows)), self.name)

    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.products))

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.products]


@dataclass(frozen=True)
class IsoWitness:
    """Bijection ``map[i]`` from one table onto another.

    With ``anti`` set the map reverses products: ``map(xy) = map(y) map(x)``.
    """

    map: tuple[int, ...]
    anti: bool = False


def validate(order: int, raw_products: Sequence[Sequence[int]], name: str | None = None) -> CayleyTable:
    """Check range and associativity of a raw grid and freeze it.

    Associativity failures are reported for the first triple ``(i, j, k)`` in
    row-major scan order.
    """
    if order < 1:
        raise TableShapeError(f"order must be positive, got {order}")
    if len(raw_products) != order or any(len(row) != order for row in raw_products):
        raise TableShapeError(f"expected a {order}x{order} grid")
    rows = tuple(tuple(int(v) for v in row) for row in raw_products)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not 0 <= v < order:
                raise OutOfRangeEntry(i, j, v)
    r = range(order)
    for i in r:
        ri = rows[i]
        for j in r:
            rij = rows[ri[j]]
            rj = rows[j]
            for k in r:
                if rij[k] != ri[rj[k]]:
                    raise NotAssociative(i, j, k)
    return CayleyTable(rows, name)


def idempotents(S: CayleyTable) -> ElementSet:
    return ElementSet.of(e for e in range(S.order) if S.products[e][e] == e)


def identity_element(S: CayleyTable) -> int | None:
    """Least two-sided identity of ``S``, if any."""
    r = range(S.order)
    for e in r:
        if all(S.products[e][x] == x and S.products[x][e] == x for x in r):
            return e
    return None


def adjoin_identity(S: CayleyTable) -> CayleyTable:
    """``S`` itself if it is a monoid, else ``S`` with a new identity at index ``n``."""
    if identity_element(S) is not None:
        return S
    n = S.order
    rows = [row + (i,) for i, row in enumerate(S.products)]
    rows.append(tuple(range(n + 1)))
    return CayleyTable(tuple(rows), None if S.name is None else S.name + "^1")


def generated_subsemigroup(S: CayleyTable, gens: Iterable[int] | ElementSet) -> ElementSet:
    """Worklist closure of ``gens`` under the product."""
    members = list(dict.fromkeys(gens))
    if not members:
        raise ValueError("generator set must be nonempty")
    seen = set(members)
    work = list(members)
    t = S.products
    while work:
        x = work.pop()
        for y in list(seen):
            for p in (t[x][y], t[y][x]):
                if p not in seen:
                    seen.add(p)
                    work.append(p)
    return ElementSet.of(seen)


def induced_table(S: CayleyTable, members: Sequence[int]) -> CayleyTable:
    """Restrict ``S`` to a closed subset, relabelled in the given order."""
    index = {m: i for i, m in enumerate(members)}
    try:
        rows = tuple(tuple(index[S.products[x][y]] for y in members) for x in members)
    except KeyError:
        raise ValueError("subset is not closed under the product") from None
    return CayleyTable(rows)


# -- canonical forms ---------------------------------------------------------

def canonical_form(S: CayleyTable, include_anti: bool = False) -> CayleyTable:
    """Lexicographically least relabelling of ``S`` (row-major order).

    The search assigns the preimages ``sigma(0), sigma(1), ...`` of the new
    labels one at a time and abandons a branch as soon as the part of the
    relabelled table it already determines exceeds the best table found.
    With ``include_anti`` the transpose is relabelled as well.
    """
    n = S.order
    best: list[int] | None = None
    for t in ([S.products, tuple(zip(*S.products))] if include_anti else [S.products]):
        best = _lexmin_relabel(t, n, best)
    return CayleyTable(tuple(tuple(best[i * n:(i + 1) * n]) for i in range(n)), S.name)


def _lexmin_relabel(t, n: int, best: list[int] | None) -> list[int]:
    sigma: list[int] = []
    pi = [-1] * n
    cells = [(i, j) for i in range(n) for j in range(n)]

    def bound() -> int:
        # -1: branch is strictly better than best, 0: undecided, 1: prune
        if best is None:
            return -1
        k = len(sigma)
        for c, (i, j) in enumerate(cells):
            if i >= k or j >= k:
                return 0
            v = pi[t[sigma[i]][sigma[j]]]
            if v < 0:
                # image not labelled yet; it will receive a label >= k
                if best[c] < k:
                    return 1
                return 0
            if v != best[c]:
                return -1 if v < best[c] else 1
        return 0

    def rec() -> None:
        nonlocal best
        k = len(sigma)
        if k == n:
            cand = [pi[t[sigma[i]][sigma[j]]] for i, j in cells]
            if best is None or cand < best:
                best = cand
            return
        for x in range(n):
            if pi[x] >= 0:
                continue
            sigma.append(x)
            pi[x] = k
            if bound() <= 0:
                rec()
            pi[x] = -1
            sigma.pop()

    rec()
    assert best is not None
    return best


# -- isomorphism search ------------------------------------------------------

def _fingerprints(t: Sequence[Sequence[int]], n: int) -> list[tuple[int, int, int, int]]:
    occurrences = [0] * n
    for row in t:
        for v in row:
            occurrences[v] += 1
    return [
        (int(t[x][x] == x), len(set(t[x])), len({t[y][x] for y in range(n)}), occurrences[x])
        for x in range(n)
    ]


def find_isomorphism(S: CayleyTable, T: CayleyTable, include_anti: bool = False) -> IsoWitness | None:
    """Search for an isomorphism (then, optionally, an anti-isomorphism) ``S -> T``."""
    n = S.order
    if n != T.order or len(idempotents(S)) != len(idempotents(T)):
        return None
    modes = [False, True] if include_anti else [False]
    for anti in modes:
        target = tuple(zip(*T.products)) if anti else T.products
        m = _find_bijection(S.products, target, n)
        if m is not None:
            return IsoWitness(tuple(m), anti)
    return None


def _find_bijection(s, t, n: int) -> list[int] | None:
    fs = _fingerprints(s, n)
    ft = _fingerprints(t, n)
    if sorted(fs) != sorted(ft):
        return None
    candidates = [[y for y in range(n) if ft[y] == fs[x]] for x in range(n)]
    image = [-1] * n
    used = [False] * n

    def ok(x: int) -> bool:
        for u in range(x + 1):
            for v in range(x + 1):
                if u != x and v != x:
                    continue
                p = s[u][v]
                q = t[image[u]][image[v]]
                if p <= x:
                    if image[p] != q:
                        return False
                elif used[q]:
                    # p is unassigned, so its forced image must still be free
                    return False
        return True

    def rec(x: int) -> bool:
        if x == n:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            image[x] = y
            used[y] = True
            if ok(x) and rec(x + 1):
                return True
            used[y] = False
            image[x] = -1
        return False

    return image if rec(0) else None
