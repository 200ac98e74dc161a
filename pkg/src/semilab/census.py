"""Enumeration of all semigroups of a small order, one per isomorphism class.

Tables are built cell by cell in row-major order.  Each assignment is checked
against every associativity triple whose four products are now all known, and
a partial table is abandoned as soon as some relabelling (or relabelled
transpose, when anti-isomorphisms are identified) provably beats it in
lexicographic order.  The leaves are therefore exactly the canonical forms
returned by :func:`semilab.cayley.canonical_form`, and they come out in
increasing lexicographic order.
"""

from __future__ import annotations

import functools
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .cayley import CayleyTable
from .classify import FLAG_NAMES, classify
from .green import green_profile
from .pattern import find_M

DEDUP_MODES = ("iso", "iso_and_anti")
MAX_ORDER = 7
DEFAULT_CONJECTURE_CEILING = 6


@dataclass(frozen=True)
class CensusSpec:
    order: int
    dedup: str = "iso_and_anti"
    filters: tuple[tuple[str, bool], ...] = ()
    limit: int | None = None

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in [1, {MAX_ORDER}], got {self.order}")
        if self.dedup not in DEDUP_MODES:
            raise ValueError(f"dedup must be one of {DEDUP_MODES}, got {self.dedup!r}")
        for name, _ in self.filters:
            if name not in FLAG_NAMES:
                raise ValueError(f"unknown property {name!r}")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be non-negative")


@dataclass
class CensusResult:
    spec: CensusSpec
    total_tables: int
    matched: int
    filter_counts: dict[str, int]
    examples: list[CayleyTable] = field(default_factory=list)
    elapsed: float = 0.0


def parse_filter(expr: str) -> tuple[tuple[str, bool], ...]:
    """``"amiable,!adequate"`` -> ``(("amiable", True), ("adequate", False))``."""
    terms = []
    for raw in expr.split(","):
        term = raw.strip()
        if not term:
            continue
        want = not term.startswith("!")
        name = term.lstrip("!").strip()
        if name not in FLAG_NAMES:
            raise ValueError(f"unknown property {name!r} in filter")
        terms.append((name, want))
    return tuple(terms)


def format_filter_term(term: tuple[str, bool]) -> str:
    name, want = term
    return name if want else "!" + name


# -- orderly generation ------------------------------------------------------

class _Enumerator:
    def __init__(self, n: int, anti: bool):
        self.n = n
        self.N = n * n
        self.T = [-1] * self.N
        self.perms = self._relabellings(n, anti)

    @staticmethod
    def _relabellings(n: int, anti: bool) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        # (source cell for each target cell, new label of each old element)
        out = []
        ident = tuple(range(n))
        for sigma in itertools.permutations(range(n)):
            pi = [0] * n
            for i, s in enumerate(sigma):
                pi[s] = i
            for transposed in (False, True) if anti else (False,):
                if sigma == ident and not transposed:
                    continue
                if transposed:
                    src = tuple(sigma[j] * n + sigma[i] for i in range(n) for j in range(n))
                else:
                    src = tuple(sigma[i] * n + sigma[j] for i in range(n) for j in range(n))
                out.append((src, tuple(pi)))
        return out

    def _associative_so_far(self, i: int, j: int, v: int) -> bool:
        T, n = self.T, self.n
        r = range(n)
        # (ij)k = i(jk)
        vn, jn, i_n = v * n, j * n, i * n
        for k in r:
            a = T[vn + k]
            jk = T[jn + k]
            if a >= 0 and jk >= 0:
                b = T[i_n + jk]
                if b >= 0 and a != b:
                    return False
        # (xi)j = x(ij)
        for x in r:
            xi = T[x * n + i]
            if xi >= 0:
                a = T[xi * n + j]
                b = T[x * n + v]
                if a >= 0 and b >= 0 and a != b:
                    return False
        # cell (i, j) read as ((xy), z) with xy = i, z = j
        for x in r:
            xn = x * n
            for y in r:
                if T[xn + y] == i:
                    yj = T[y * n + j]
                    if yj >= 0:
                        b = T[xn + yj]
                        if b >= 0 and b != v:
                            return False
        # cell (i, j) read as (x, (yz)) with x = i, yz = j
        for y in r:
            yn = y * n
            for z in r:
                if T[yn + z] == j:
                    iy = T[i_n + y]
                    if iy >= 0:
                        a = T[iy * n + z]
                        if a >= 0 and a != v:
                            return False
        return True

    def _lexmin_so_far(self, k: int) -> bool:
        T = self.T
        for src, pi in self.perms:
            for c in range(k):
                v = T[src[c]]
                if v < 0:
                    break
                pv = pi[v]
                tc = T[c]
                if pv < tc:
                    return False
                if pv > tc:
                    break
        return True

    def run(self, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, ...]]:
        """Yield flat tables (or, with ``stop``, partial prefixes) below the current state."""
        N, n, T = self.N, self.n, self.T
        stop = N if stop is None else stop

        def rec(c: int) -> Iterator[tuple[int, ...]]:
            if c == stop:
                yield tuple(T)
                return
            i, j = divmod(c, n)
            for v in range(n):
                T[c] = v
                if self._associative_so_far(i, j, v) and self._lexmin_so_far(c + 1):
                    yield from rec(c + 1)
            T[c] = -1

        yield from rec(start)


def _to_table(flat: Sequence[int], n: int) -> CayleyTable:
    return CayleyTable(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def _subtree(args: tuple[int, bool, tuple[int, ...]]) -> list[tuple[int, ...]]:
    n, anti, prefix = args
    e = _Enumerator(n, anti)
    e.T[:n] = prefix
    return list(e.run(start=n))


def enumerate_tables(spec: CensusSpec, workers: int = 1) -> Iterator[CayleyTable]:
    """One table per class under ``spec.dedup``, in increasing lexicographic order.

    With several workers the search is split by first-row assignments; the
    subtrees are disjoint and reassembled in prefix order, so the output is
    identical to the single-worker stream.
    """
    n = spec.order
    anti = spec.dedup == "iso_and_anti"
    if workers <= 1 or n < 2:
        for flat in _Enumerator(n, anti).run():
            yield _to_table(flat, n)
        return
    prefixes = [p[:n] for p in _Enumerator(n, anti).run(stop=n)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_subtree, [(n, anti, p) for p in prefixes]):
            for flat in chunk:
                yield _to_table(flat, n)


@functools.lru_cache(maxsize=None)
def census_tables(order: int, dedup: str = "iso") -> tuple[CayleyTable, ...]:
    """Cached single-worker census of one order."""
    return tuple(enumerate_tables(CensusSpec(order, dedup)))


def run_census(
    spec: CensusSpec,
    workers: int = 1,
    on_match: Callable[[int, CayleyTable, dict[str, bool] | None], None] | None = None,
) -> CensusResult:
    """Classify every table of the census and tally the filter terms.

    ``matched`` counts tables satisfying all terms; ``filter_counts`` counts
    each term on its own.  At most ``spec.limit`` matches are kept as examples.
    ``on_match(index, table, flags)`` is called for every match in stream order.
    """
    start = time.perf_counter()
    total = matched = 0
    counts = {format_filter_term(t): 0 for t in spec.filters}
    examples: list[CayleyTable] = []
    for index, table in enumerate(enumerate_tables(spec, workers)):
        total += 1
        flags = None
        if spec.filters:
            flags = classify(table).flags()
            hits = [flags[name] == want for name, want in spec.filters]
            for term, hit in zip(spec.filters, hits):
                counts[format_filter_term(term)] += hit
            ok = all(hits)
        else:
            ok = True
        if ok:
            matched += 1
            if on_match is not None:
                on_match(index, table, flags)
            if spec.limit is None or len(examples) < spec.limit:
                examples.append(table)
    return CensusResult(spec, total, matched, counts, examples, time.perf_counter() - start)


@dataclass
class ConjectureResult:
    max_order: int
    # per order: tables, amiable, amiable and not adequate
    counts: dict[int, dict[str, int]]
    counterexample: CayleyTable | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def verify_conjecture(max_order: int, long: bool = False, workers: int = 1) -> ConjectureResult:
    """Every amiable, non-adequate semigroup up to ``max_order`` contains a copy of M.

    Isomorphism-only dedup is used, since containment is about isomorphic
    copies.  Orders above 6 need ``long=True``.
    """
    ceiling = MAX_ORDER if long else DEFAULT_CONJECTURE_CEILING
    if not 1 <= max_order <= ceiling:
        raise ValueError(f"max_order must be in [1, {ceiling}]" + ("" if long else "; pass long=True for 7"))
    counts: dict[int, dict[str, int]] = {}
    for n in range(1, max_order + 1):
        c = counts[n] = {"tables": 0, "amiable": 0, "amiable_not_adequate": 0}
        for table in enumerate_tables(CensusSpec(n, "iso"), workers):
            c["tables"] += 1
            profile = green_profile(table)
            if profile.ell is None or profile.r is None:
                continue
            c["amiable"] += 1
            report = classify(table, profile)
            if report.adequate:
                continue
            c["amiable_not_adequate"] += 1
            if find_M(table, profile=profile) is None:
                return ConjectureResult(max_order, counts, table)
    return ConjectureResult(max_order, counts)
