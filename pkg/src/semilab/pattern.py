"""Embedded copies of M and of arbitrary small pattern tables."""

from __future__ import annotations

from dataclasses import dataclass

from .cayley import CayleyTable, idempotents, validate
from .errors import NotAmiable, NotAmiableInput
from .green import GreenProfile, green_profile, idempotent_maps

# a, b, c = ab, d = ba  ->  0, 1, 2, 3
M_TABLE = validate(
    4,
    [
        [0, 2, 2, 2],
        [3, 1, 2, 3],
        [2, 2, 2, 2],
        [3, 2, 2, 2],
    ],
    name="M",
)
M_LABELS = ("a", "b", "c", "d")


@dataclass(frozen=True)
class EmbeddingWitness:
    """Injective homomorphism: pattern element ``i`` maps to host element ``map[i]``."""

    map: tuple[int, ...]

    def is_valid(self, host: CayleyTable, pattern: CayleyTable) -> bool:
        m = self.map
        if len(set(m)) != len(m) or len(m) != pattern.order:
            return False
        h, p = host.products, pattern.products
        return all(m[p[i][j]] == h[m[i]][m[j]] for i in range(len(m)) for j in range(len(m)))


@dataclass(frozen=True)
class MainTheoremCheck:
    adequate: bool
    contains_M: bool
    witness: EmbeddingWitness | None
    # F is infinite, so a finite table cannot contain it
    avoids_F: bool = True

    @property
    def consistent(self) -> bool:
        return self.adequate == (not self.contains_M)


def _require_amiable(S: CayleyTable, profile: GreenProfile | None) -> None:
    if profile is not None:
        if profile.ell is None or profile.r is None:
            raise NotAmiableInput("table is not amiable")
        return
    try:
        idempotent_maps(S)
    except NotAmiable as exc:
        raise NotAmiableInput(f"table is not amiable: {exc}") from None


def noncommuting_idempotent_pairs(S: CayleyTable):
    """Ordered pairs ``(a, b)`` of idempotents with ``ab != ba``, in index order."""
    t = S.products
    E = list(idempotents(S))
    for a in E:
        for b in E:
            if t[a][b] != t[b][a]:
                yield a, b


def find_M(S: CayleyTable, strict: bool = True, profile: GreenProfile | None = None) -> EmbeddingWitness | None:
    """Locate a copy of M generated by two noncommuting idempotents.

    For amiable ``S`` it suffices to find idempotents ``a, b`` with
    ``ab != ba`` and ``abab = ab``; the copy is then ``{a, b, ab, ba}``.
    With ``strict=False`` a non-amiable table is handed to the general
    :func:`find_embedding` search instead of raising.
    """
    try:
        _require_amiable(S, profile)
    except NotAmiableInput:
        if strict:
            raise
        return find_embedding(S, M_TABLE)
    t = S.products
    for a, b in noncommuting_idempotent_pairs(S):
        ab = t[a][b]
        if t[ab][ab] == ab:
            return EmbeddingWitness((a, b, ab, t[b][a]))
    return None


@dataclass(frozen=True)
class AvoidsMViolation:
    pair: tuple[int, int]
    aba_eq_ab: bool
    bab_eq_ab: bool
    abab_eq_ab: bool


def check_avoidsM_equivalences(S: CayleyTable) -> AvoidsMViolation | None:
    """For noncommuting idempotents, ``aba = ab``, ``bab = ab`` and ``abab = ab`` agree."""
    _require_amiable(S, None)
    t = S.products
    for a, b in noncommuting_idempotent_pairs(S):
        ab = t[a][b]
        conds = (t[ab][a] == ab, t[b][ab] == ab, t[ab][ab] == ab)
        if len(set(conds)) != 1:
            return AvoidsMViolation((a, b), *conds)
    return None


def find_embedding(S: CayleyTable, pattern: CayleyTable) -> EmbeddingWitness | None:
    """First injective homomorphism ``pattern -> S`` in lexicographic map order.

    Pattern elements are assigned in index order.  Whenever the product of two
    assigned pattern elements is not yet assigned, its image is forced to the
    product of their images, so only that candidate is tried later.
    """
    m, n = pattern.order, S.order
    if m > n:
        return None
    p, h = pattern.products, S.products
    idem = idempotents(S)
    image = [-1] * m
    used = [False] * n

    def forced(i: int) -> int | None:
        # -2 signals a contradiction between two forcing products
        val = None
        for u in range(i):
            pu = p[u]
            for v in range(i):
                if pu[v] == i:
                    q = h[image[u]][image[v]]
                    if val is None:
                        val = q
                    elif val != q:
                        return -2
        return val

    def consistent(i: int) -> bool:
        for u in range(i + 1):
            for a, b in ((u, i), (i, u)):
                prod = p[a][b]
                q = h[image[a]][image[b]]
                if prod <= i:
                    if image[prod] != q:
                        return False
                elif used[q]:
                    return False
        return True

    def rec(i: int) -> bool:
        if i == m:
            return True
        f = forced(i)
        if f == -2:
            return False
        candidates = range(n) if f is None else (f,)
        need_idem = p[i][i] == i
        for y in candidates:
            if used[y] or (need_idem and y not in idem):
                continue
            image[i] = y
            used[y] = True
            if consistent(i) and rec(i + 1):
                return True
            used[y] = False
            image[i] = -1
        return False

    return EmbeddingWitness(tuple(image)) if rec(0) else None


def verify_main_theorem_finite(S: CayleyTable, profile: GreenProfile | None = None) -> MainTheoremCheck:
    """Compare adequacy with M-avoidance on a finite amiable table."""
    if profile is None:
        profile = green_profile(S)
    _require_amiable(S, profile)
    # amiable implies abundant, so adequacy reduces to commuting idempotents
    adequate = next(noncommuting_idempotent_pairs(S), None) is None
    w = find_M(S, profile=profile)
    return MainTheoremCheck(adequate=adequate, contains_M=w is not None, witness=w)
