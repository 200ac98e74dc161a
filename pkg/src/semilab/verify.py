"""Property suites run over census tables.

Each suite scans a sequence of tables and stops at the first failure, which
it describes in a short message naming the table and the offending tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .cayley import CayleyTable, idempotents
from .classify import check_quasi_identity, classify, verify_amiable_axioms
from .green import GreenProfile, green_profile, green_star, green_star_pairwise
from .pattern import M_TABLE, check_avoidsM_equivalences, find_embedding, find_M, verify_main_theorem_finite


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f" -- {self.failure}"
        return f"[{status}] {self.name} ({self.checked} tables){tail}"


def _run(name: str, tables: Iterable[CayleyTable], check: Callable[[CayleyTable, GreenProfile], str | None], amiable_only: bool) -> SuiteResult:
    result = SuiteResult(name)
    for table in tables:
        profile = green_profile(table)
        if amiable_only and (profile.ell is None or profile.r is None):
            continue
        result.checked += 1
        msg = check(table, profile)
        if msg is not None:
            result.failure = f"{msg} in table {[list(r) for r in table.products]}"
            break
    return result


def _quasi(table: CayleyTable, profile: GreenProfile) -> str | None:
    avoids = find_M(table, profile=profile) is None
    qi = {k: check_quasi_identity(table, k) is None for k in ("QI-1", "QI-2", "QI-3")}
    if len(set(qi.values()) | {avoids}) != 1:
        return f"QI results {qi} disagree with avoids_M={avoids}"
    if (find_embedding(table, M_TABLE) is None) != avoids:
        return "fast M scan disagrees with the general embedding search"
    v = check_avoidsM_equivalences(table)
    if v is not None:
        return f"aba=ab / bab=ab / abab=ab disagree on {v.pair}"
    v = verify_amiable_axioms(table, profile)
    if v is not None:
        return f"amiable axiom {v.rule!r} fails at {v.elements}"
    return None


def quasi_identity_suite(tables: Iterable[CayleyTable]) -> SuiteResult:
    """QI-1, QI-2, QI-3 and M-avoidance coincide on amiable tables."""
    return _run("quasi-identities <=> avoids M", tables, _quasi, amiable_only=True)


def _powers_stabilise_then_commute(t, a: int, b: int) -> str | None:
    ab = t[a][b]
    powers = [ab]
    while True:
        nxt = t[powers[-1]][ab]
        if nxt in powers:
            break
        powers.append(nxt)
    # powers[k] = (ab)^(k+1); the first repeat (ab)^m = (ab)^n with m > n
    n = powers.index(t[powers[-1]][ab]) + 1
    if t[powers[n - 1]][ab] != powers[n - 1]:
        return f"(ab)^m = (ab)^n does not give (ab)^(n+1) = (ab)^n for a={a}, b={b}"
    if t[a][b] != t[b][a]:
        return f"periodic (ab) powers but ab != ba for a={a}, b={b}"
    return None


def _lemmas(table: CayleyTable, profile: GreenProfile) -> str | None:
    t = table.products
    ell = profile.ell
    n = table.order
    E = list(idempotents(table))
    for x in range(n):
        for y in range(n):
            if ell[t[ell[x]][y]] != ell[t[x][y]]:
                return f"(x_l y)_l != (xy)_l at x={x}, y={y}"
    if find_M(table, profile=profile) is not None:
        return None
    for x in range(n):
        lx = ell[x]
        for c in E:
            xc = t[x][c]
            if t[x][ell[xc]] != xc:
                return f"x (xc)_l != xc at x={x}, c={c}"
            if t[lx][ell[xc]] != t[lx][c]:
                return f"x_l (xc)_l != x_l c at x={x}, c={c}"
            if t[c][x] == xc and t[c][lx] != t[lx][c]:
                return f"cx = xc but c x_l != x_l c at x={x}, c={c}"
    for a in E:
        for b in E:
            msg = _powers_stabilise_then_commute(t, a, b)
            if msg is not None:
                return msg
    return None


def lemma_chain_suite(tables: Iterable[CayleyTable]) -> SuiteResult:
    """Identities for x_l on amiable tables; those needing M-avoidance only there."""
    return _run("x_l identities and power lemmas", tables, _lemmas, amiable_only=True)


def _refinement(table: CayleyTable, profile: GreenProfile) -> str | None:
    p = profile
    t = table.products
    n = table.order
    for a, b, c, side in ((p.L, p.Lstar, p.Ltilde, "L"), (p.R, p.Rstar, p.Rtilde, "R")):
        if not a.refines(b):
            return f"{side} does not refine {side}*"
        if not b.refines(c):
            return f"{side}* does not refine {side}~"
    for x in range(n):
        for y in range(n):
            if p.Lstar.related(x, y):
                for z in range(n):
                    if not p.Lstar.related(t[x][z], t[y][z]):
                        return f"L* not a right congruence at x={x}, y={y}, z={z}"
            if p.Rstar.related(x, y):
                for z in range(n):
                    if not p.Rstar.related(t[z][x], t[z][y]):
                        return f"R* not a left congruence at x={x}, y={y}, z={z}"
    E = list(idempotents(table))
    for e in E:
        for f in E:
            if p.Lstar.related(e, f) != p.L.related(e, f):
                return f"L* and L disagree on idempotents {e}, {f}"
            if p.Rstar.related(e, f) != p.R.related(e, f):
                return f"R* and R disagree on idempotents {e}, {f}"
    return None


def refinement_suite(tables: Iterable[CayleyTable]) -> SuiteResult:
    """L <= L* <= L~, R <= R* <= R~, one-sided congruence and agreement on idempotents."""
    return _run("refinement chains and congruences", tables, _refinement, amiable_only=False)


def _star_oracle(table: CayleyTable, profile: GreenProfile) -> str | None:
    if green_star(table) != green_star_pairwise(table):
        return "kernel fingerprints disagree with pairwise quantification"
    return None


def star_oracle_suite(tables: Iterable[CayleyTable]) -> SuiteResult:
    return _run("L*/R* fingerprints == pairwise oracle", tables, _star_oracle, amiable_only=False)


def _main(table: CayleyTable, profile: GreenProfile) -> str | None:
    check = verify_main_theorem_finite(table, profile)
    if not check.consistent:
        return f"adequate={check.adequate} but contains_M={check.contains_M}"
    return None


def main_theorem_suite(tables: Iterable[CayleyTable]) -> SuiteResult:
    return _run("adequate <=> avoids M (amiable)", tables, _main, amiable_only=True)


def _implications(table: CayleyTable, profile: GreenProfile) -> str | None:
    f = classify(table, profile).flags()
    rules = [
        ("adequate => amiable", not f["adequate"] or f["amiable"]),
        ("amiable => abundant", not f["amiable"] or f["abundant"]),
        ("inverse => regular", not f["inverse"] or f["regular"]),
        ("inverse => idempotents commute", not f["inverse"] or f["idempotents_commute"]),
        ("regular & commuting => inverse", not (f["regular"] and f["idempotents_commute"]) or f["inverse"]),
        ("semiadequate => semiabundant", not f["semiadequate"] or f["semiabundant"]),
        ("semiadequate => semiamiable", not f["semiadequate"] or f["semiamiable"]),
        ("left & right amiable = amiable", (f["left_amiable"] and f["right_amiable"]) == f["amiable"]),
        ("adequate = abundant & commuting", f["adequate"] == (f["abundant"] and f["idempotents_commute"])),
    ]
    for name, ok in rules:
        if not ok:
            return f"implication {name!r} fails"
    return None


def implication_suite(tables: Iterable[CayleyTable]) -> SuiteResult:
    return _run("classification implications", tables, _implications, amiable_only=False)


ALL_SUITES = (
    main_theorem_suite,
    quasi_identity_suite,
    lemma_chain_suite,
    refinement_suite,
    star_oracle_suite,
    implication_suite,
)
