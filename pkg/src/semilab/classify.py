"""Membership in the regular / abundant / amiable / adequate hierarchy.

"Left" variants look at R*-classes and "right" variants at L*-classes: a
semigroup is left abundant when every R*-class contains an idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .cayley import CayleyTable, idempotents
from .errors import NotAmiableInput
from .green import GreenProfile, Partition, green_profile
from .pattern import EmbeddingWitness, find_M

FLAG_NAMES = (
    "regular",
    "inverse",
    "abundant",
    "adequate",
    "amiable",
    "left_abundant",
    "left_amiable",
    "left_adequate",
    "right_abundant",
    "right_amiable",
    "right_adequate",
    "semiabundant",
    "semiadequate",
    "semiamiable",
    "idempotents_commute",
    "avoids_M",
)


@dataclass
class ClassificationReport:
    regular: bool
    inverse: bool
    abundant: bool
    adequate: bool
    amiable: bool
    left_abundant: bool
    left_amiable: bool
    left_adequate: bool
    right_abundant: bool
    right_amiable: bool
    right_adequate: bool
    semiabundant: bool
    semiadequate: bool
    semiamiable: bool
    idempotents_commute: bool
    avoids_M: bool
    # one entry per false flag
    witnesses: dict[str, Any] = field(default_factory=dict)
    embedding: EmbeddingWitness | None = None

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in FLAG_NAMES}

    def to_dict(self) -> dict[str, Any]:
        return {
            "flags": self.flags(),
            "witnesses": self.witnesses,
            "embedding": None if self.embedding is None else list(self.embedding.map),
        }


def commute_witness(S: CayleyTable) -> tuple[int, int] | None:
    """Least pair of idempotents ``(e, f)`` with ``ef != fe``, or None."""
    t = S.products
    E = list(idempotents(S))
    for i, e in enumerate(E):
        for f in E[i + 1:]:
            if t[e][f] != t[f][e]:
                return e, f
    return None


def idempotents_commute(S: CayleyTable) -> bool:
    return commute_witness(S) is None


def _class_failure(part: Partition, E, relation: str, unique: bool) -> dict | None:
    for c in part.classes:
        k = len(c & E)
        if k == 0 or (unique and k > 1):
            return {"relation": relation, "class": list(c), "idempotents": list(c & E)}
    return None


def classify(S: CayleyTable, profile: GreenProfile | None = None) -> ClassificationReport:
    if profile is None:
        profile = green_profile(S)
    E = idempotents(S)
    t = S.products
    w: dict[str, Any] = {}

    def check(name: str, sides: list[tuple[Partition, str]], unique: bool) -> bool:
        for part, rel in sides:
            fail = _class_failure(part, E, rel, unique)
            if fail is not None:
                w[name] = fail
                return False
        return True

    p = profile
    regular = check("regular", [(p.L, "L"), (p.R, "R")], False)
    inverse = check("inverse", [(p.L, "L"), (p.R, "R")], True)
    abundant = check("abundant", [(p.Lstar, "L*"), (p.Rstar, "R*")], False)
    amiable = check("amiable", [(p.Lstar, "L*"), (p.Rstar, "R*")], True)
    left_abundant = check("left_abundant", [(p.Rstar, "R*")], False)
    left_amiable = check("left_amiable", [(p.Rstar, "R*")], True)
    right_abundant = check("right_abundant", [(p.Lstar, "L*")], False)
    right_amiable = check("right_amiable", [(p.Lstar, "L*")], True)
    semiabundant = check("semiabundant", [(p.Ltilde, "L~"), (p.Rtilde, "R~")], False)
    semiamiable = check("semiamiable", [(p.Ltilde, "L~"), (p.Rtilde, "R~")], True)

    cw = commute_witness(S)
    commute = cw is None
    if cw is not None:
        e, f = cw
        w["idempotents_commute"] = {"pair": [e, f], "products": [t[e][f], t[f][e]]}

    def conj(name: str, base: bool, base_name: str) -> bool:
        if not base:
            w[name] = {"because": base_name}
        elif not commute:
            w[name] = {"because": "idempotents_commute"}
        return base and commute

    adequate = conj("adequate", abundant, "abundant")
    left_adequate = conj("left_adequate", left_abundant, "left_abundant")
    right_adequate = conj("right_adequate", right_abundant, "right_abundant")
    semiadequate = conj("semiadequate", semiabundant, "semiabundant")

    embedding = find_M(S, strict=False, profile=profile)
    if embedding is not None:
        w["avoids_M"] = {"map": list(embedding.map)}

    return ClassificationReport(
        regular=regular,
        inverse=inverse,
        abundant=abundant,
        adequate=adequate,
        amiable=amiable,
        left_abundant=left_abundant,
        left_amiable=left_amiable,
        left_adequate=left_adequate,
        right_abundant=right_abundant,
        right_amiable=right_amiable,
        right_adequate=right_adequate,
        semiabundant=semiabundant,
        semiadequate=semiadequate,
        semiamiable=semiamiable,
        idempotents_commute=commute,
        avoids_M=embedding is None,
        witnesses=w,
        embedding=embedding,
    )


@dataclass(frozen=True)
class Violation:
    """A quasi-identity that fails, with the tuple instantiating it."""

    rule: str
    elements: tuple[int, ...]


def verify_amiable_axioms(S: CayleyTable, profile: GreenProfile | None = None) -> Violation | None:
    """Check the eight quasi-identities of amiable semigroups over all tuples."""
    if profile is None:
        profile = green_profile(S)
    ell, r = profile.ell, profile.r
    if ell is None or r is None:
        raise NotAmiableInput("x_l / x_r are undefined on a non-amiable table")
    t = S.products
    n = S.order
    N = range(n)
    for x in N:
        if t[ell[x]][ell[x]] != ell[x]:
            return Violation("xl xl = xl", (x,))
        if t[r[x]][r[x]] != r[x]:
            return Violation("xr xr = xr", (x,))
        if t[x][ell[x]] != x:
            return Violation("x xl = x", (x,))
        if t[r[x]][x] != x:
            return Violation("xr x = x", (x,))
    for x in N:
        for y in N:
            for z in N:
                if t[x][y] == t[x][z] and t[ell[x]][y] != t[ell[x]][z]:
                    return Violation("xy = xz => xl y = xl z", (x, y, z))
                if t[y][x] == t[z][x] and t[y][r[x]] != t[z][r[x]]:
                    return Violation("yx = zx => y xr = z xr", (x, y, z))
    for x in N:
        if t[x][x] != x:
            continue
        for y in N:
            if t[y][y] != y or x == y:
                continue
            if t[x][y] == x and t[y][x] == y:
                return Violation("idempotents x L y => x = y", (x, y))
            if t[x][y] == y and t[y][x] == x:
                return Violation("idempotents x R y => x = y", (x, y))
    return None


QUASI_IDENTITIES = {
    "QI-1": "xx = x & yy = y & xyx = xy => xy = yx",
    "QI-2": "xx = x & yy = y & xyx = yx => xy = yx",
    "QI-3": "xx = x & yy = y & xyxy = xy => xy = yx",
}


def check_quasi_identity(S: CayleyTable, which: str) -> tuple[int, int] | None:
    """First pair ``(x, y)`` violating the named M-avoidance quasi-identity, else None."""
    if which not in QUASI_IDENTITIES:
        raise ValueError(f"unknown quasi-identity {which!r}")
    t = S.products
    E = [e for e in range(S.order) if t[e][e] == e]
    for x in E:
        for y in E:
            xy, yx = t[x][y], t[y][x]
            if xy == yx:
                continue
            if which == "QI-1":
                hyp = t[xy][x] == xy
            elif which == "QI-2":
                hyp = t[xy][x] == yx
            else:
                hyp = t[xy][xy] == xy
            if hyp:
                return x, y
    return None
