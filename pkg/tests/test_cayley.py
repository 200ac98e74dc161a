import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semilab import (
    ElementSet,
    NotAssociative,
    OutOfRangeEntry,
    adjoin_identity,
    canonical_form,
    find_isomorphism,
    generated_subsemigroup,
    idempotents,
    validate,
)
from semilab.cayley import identity_element, induced_table
from semilab.census import census_tables

from .conftest import A, B, C, D
from .oracles import all_grids, brute_canonical, is_associative


def test_validate_trivial():
    T = validate(1, [[0]])
    assert T.order == 1 and T.products == ((0,),)


def test_validate_m(M):
    rows = [[A, C, C, C], [D, B, C, D], [C, C, C, C], [D, C, C, C]]
    assert validate(4, rows) == M


def test_validate_reports_first_failing_triple():
    with pytest.raises(NotAssociative) as exc:
        validate(2, [[0, 0], [1, 0]])
    assert (exc.value.i, exc.value.j, exc.value.k) == (1, 0, 1)


def test_validate_out_of_range():
    with pytest.raises(OutOfRangeEntry) as exc:
        validate(2, [[0, 2], [1, 1]])
    assert (exc.value.i, exc.value.j, exc.value.value) == (0, 1, 2)


def test_tables_are_immutable(M):
    with pytest.raises(AttributeError):
        M.products = ()
    with pytest.raises(TypeError):
        M.products[0][0] = 1


def test_validate_matches_oracle_on_all_order2_grids():
    accepted = 0
    for grid in all_grids(2):
        try:
            validate(2, grid)
            ok = True
        except NotAssociative:
            ok = False
        assert ok == is_associative(grid)
        accepted += ok
    assert accepted == 8


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_validate_matches_oracle_random(grid):
    try:
        validate(len(grid), grid)
        ok = True
    except NotAssociative:
        ok = False
    assert ok == is_associative(grid)


def test_idempotents(M, trivial, left_zero2):
    assert set(idempotents(M)) == {A, B, C}
    assert set(idempotents(trivial)) == {0}
    assert set(idempotents(left_zero2)) == {0, 1}


def test_element_set_basics():
    s = ElementSet.of([0, 3, 5])
    assert list(s) == [0, 3, 5] and len(s) == 3 and 3 in s and 4 not in s
    assert ElementSet.of([0, 3]).issubset(s)
    assert not ElementSet()


def test_adjoin_identity(M, trivial, left_zero2):
    assert adjoin_identity(trivial) is trivial
    M1 = adjoin_identity(M)
    assert M1.order == 5 and identity_element(M1) == 4
    assert adjoin_identity(left_zero2).order == 3


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_adjoin_identity_restricts_back(order):
    for S in census_tables(order, "iso"):
        S1 = adjoin_identity(S)
        assert identity_element(S1) is not None
        assert induced_table(S1, range(order)) == S
        validate(S1.order, S1.products)


def test_generated_subsemigroup(M):
    assert set(generated_subsemigroup(M, [A, B])) == {A, B, C, D}
    assert set(generated_subsemigroup(M, [C])) == {C}
    for e in idempotents(M):
        assert set(generated_subsemigroup(M, [e])) == {e}


@pytest.mark.parametrize("order", [3, 4])
def test_generated_subsemigroup_closed_and_minimal(order):
    rng = random.Random(order)
    for S in census_tables(order, "iso"):
        gens = rng.sample(range(order), rng.randint(1, order))
        sub = set(generated_subsemigroup(S, gens))
        assert set(gens) <= sub
        assert all(S.mul(u, v) in sub for u in sub for v in sub)
        # every member is a product of generators: grow words level by level
        reach = set(gens)
        while True:
            new = {S.mul(u, g) for u in reach for g in gens} - reach
            if not new:
                break
            reach |= new
        assert reach == sub


def test_canonical_form_small(trivial, left_zero2):
    assert canonical_form(trivial) == trivial
    assert canonical_form(left_zero2.relabel([1, 0])) == canonical_form(left_zero2)


def test_canonical_form_m_all_relabellings(M):
    canon = canonical_form(M)
    for perm in itertools.permutations(range(4)):
        assert canonical_form(M.relabel(perm)) == canon
    assert canon.flat() == brute_canonical(M.rows())


@pytest.mark.parametrize("anti", [False, True])
def test_canonical_form_matches_brute_force_order3(anti):
    for grid in all_grids(3):
        if is_associative(grid):
            S = validate(3, grid)
            assert canonical_form(S, anti).flat() == brute_canonical(grid, anti)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 187), st.permutations(range(4)), st.booleans())
def test_canonical_form_invariant_and_idempotent(idx, perm, anti):
    S = census_tables(4, "iso")[idx]
    c = canonical_form(S, anti)
    assert canonical_form(S.relabel(perm), anti) == c
    assert canonical_form(c, anti) == c
    if anti:
        assert canonical_form(S.transpose(), True) == c


def test_find_isomorphism_examples(M, trivial, left_zero2, right_zero2):
    w = find_isomorphism(M, M)
    assert w.map == (0, 1, 2, 3) and not w.anti
    assert find_isomorphism(M, trivial) is None
    assert find_isomorphism(left_zero2, right_zero2) is None
    w = find_isomorphism(left_zero2, right_zero2, include_anti=True)
    assert w is not None and w.anti


def _is_iso(S, T, w):
    m = w.map
    n = S.order
    if sorted(m) != list(range(n)):
        return False
    for x in range(n):
        for y in range(n):
            want = T.mul(m[y], m[x]) if w.anti else T.mul(m[x], m[y])
            if m[S.mul(x, y)] != want:
                return False
    return True


@pytest.mark.parametrize("anti", [False, True])
def test_find_isomorphism_agrees_with_canonical_form_order3(anti):
    tables = [validate(3, g) for g in all_grids(3) if is_associative(g)]
    canon = [canonical_form(S, anti) for S in tables]
    for S, cs in zip(tables, canon):
        for T, ct in zip(tables, canon):
            w = find_isomorphism(S, T, anti)
            assert (w is not None) == (cs == ct)
            if w is not None:
                assert _is_iso(S, T, w)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 1914), st.permutations(range(5)))
def test_find_isomorphism_recovers_relabelling(idx, perm):
    S = census_tables(5, "iso")[idx]
    T = S.relabel(perm)
    w = find_isomorphism(S, T)
    assert w is not None and _is_iso(S, T, w)
