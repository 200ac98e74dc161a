"""Green's relations L, R, their starred and tilde versions, and x_l / x_r."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .cayley import CayleyTable, ElementSet, adjoin_identity, idempotents
from .errors import NotAmiable


@dataclass(frozen=True)
class Partition:
    """Equivalence classes ordered by least member; ``class_of[x]`` is the class id."""

    class_of: tuple[int, ...]
    classes: tuple[ElementSet, ...]

    @classmethod
    def from_keys(cls, keys: Sequence[Hashable]) -> "Partition":
        ids: dict[Hashable, int] = {}
        class_of = []
        for k in keys:
            class_of.append(ids.setdefault(k, len(ids)))
        members: list[list[int]] = [[] for _ in ids]
        for x, c in enumerate(class_of):
            members[c].append(x)
        return cls(tuple(class_of), tuple(ElementSet.of(m) for m in members))

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def class_containing(self, x: int) -> ElementSet:
        return self.classes[self.class_of[x]]

    def refines(self, other: "Partition") -> bool:
        """True when every class of ``self`` lies inside a class of ``other``."""
        return all(c.issubset(other.class_containing(next(iter(c)))) for c in self.classes)

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.classes]


@dataclass(frozen=True)
class GreenProfile:
    L: Partition
    R: Partition
    Lstar: Partition
    Rstar: Partition
    Ltilde: Partition
    Rtilde: Partition
    # None when some L*-class (resp. R*-class) lacks a unique idempotent
    ell: tuple[int, ...] | None = None
    r: tuple[int, ...] | None = None


def green_classic(S: CayleyTable) -> tuple[Partition, Partition]:
    """L and R via principal one-sided ideals ``S^1 x`` and ``x S^1``."""
    n = S.order
    t = adjoin_identity(S).products
    m = len(t)
    left = []
    right = []
    for x in range(n):
        lb = rb = 0
        for s in range(m):
            lb |= 1 << t[s][x]
            rb |= 1 << t[x][s]
        left.append(lb)
        right.append(rb)
    return Partition.from_keys(left), Partition.from_keys(right)


def _kernel_key(values: Sequence[int]) -> tuple[int, ...]:
    # relabel by first occurrence: two sequences get the same key iff
    # they induce the same equality pattern on positions
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(v, len(seen)) for v in values)


def green_star(S: CayleyTable) -> tuple[Partition, Partition]:
    """L* and R*.

    ``x L* y`` iff ``xa = xb <=> ya = yb`` for all ``a, b`` in ``S^1``; that is,
    the rows of ``x`` and ``y`` in the table of ``S^1`` have the same kernel.
    Each row (column, for R*) is reduced to its kernel fingerprint and equal
    fingerprints are grouped.
    """
    n = S.order
    t = adjoin_identity(S).products
    m = len(t)
    lkeys = [_kernel_key(t[x]) for x in range(n)]
    rkeys = [_kernel_key([t[a][x] for a in range(m)]) for x in range(n)]
    return Partition.from_keys(lkeys), Partition.from_keys(rkeys)


def green_star_pairwise(S: CayleyTable) -> tuple[Partition, Partition]:
    """L* and R* by direct quantification over all ``(x, y, a, b)``; O(n^4) reference."""
    n = S.order
    t = adjoin_identity(S).products
    m = len(t)
    pairs = [(a, b) for a in range(m) for b in range(m)]

    def l_rel(x: int, y: int) -> bool:
        return all((t[x][a] == t[x][b]) == (t[y][a] == t[y][b]) for a, b in pairs)

    def r_rel(x: int, y: int) -> bool:
        return all((t[a][x] == t[b][x]) == (t[a][y] == t[b][y]) for a, b in pairs)

    return _partition_from_relation(n, l_rel), _partition_from_relation(n, r_rel)


def _partition_from_relation(n: int, rel) -> Partition:
    keys = list(range(n))
    for x in range(n):
        for y in range(x):
            if keys[y] == y and rel(y, x):
                keys[x] = y
                break
    return Partition.from_keys(keys)


def green_tilde(S: CayleyTable) -> tuple[Partition, Partition]:
    """L~ and R~: equal sets of idempotent right (left) identities.

    Quantifies over the idempotents of ``S`` itself, with no identity adjoined.
    """
    t = S.products
    E = list(idempotents(S))
    n = S.order
    lkeys = [frozenset(e for e in E if t[x][e] == x) for x in range(n)]
    rkeys = [frozenset(e for e in E if t[e][x] == x) for x in range(n)]
    return Partition.from_keys(lkeys), Partition.from_keys(rkeys)


def _unique_idempotent_map(part: Partition, E: ElementSet, relation: str) -> tuple[int, ...]:
    rep = []
    for c in part.classes:
        idem = c & E
        if len(idem) != 1:
            raise NotAmiable(relation, c.members(), len(idem))
        rep.append(next(iter(idem)))
    return tuple(rep[k] for k in part.class_of)


def idempotent_maps(S: CayleyTable, profile: GreenProfile | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(ell, r)``: the unique idempotent in each element's L*-class and R*-class.

    Raises :class:`NotAmiable` for the first class (L* side first) whose
    idempotent count differs from one.
    """
    if profile is None:
        Lstar, Rstar = green_star(S)
    else:
        Lstar, Rstar = profile.Lstar, profile.Rstar
    E = idempotents(S)
    return _unique_idempotent_map(Lstar, E, "L*"), _unique_idempotent_map(Rstar, E, "R*")


def green_profile(S: CayleyTable) -> GreenProfile:
    L, R = green_classic(S)
    Lstar, Rstar = green_star(S)
    Ltilde, Rtilde = green_tilde(S)
    E = idempotents(S)
    maps = []
    for part, rel in ((Lstar, "L*"), (Rstar, "R*")):
        try:
            maps.append(_unique_idempotent_map(part, E, rel))
        except NotAmiable:
            maps.append(None)
    return GreenProfile(L, R, Lstar, Rstar, Ltilde, Rtilde, maps[0], maps[1])
