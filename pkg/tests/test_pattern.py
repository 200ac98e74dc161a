import pytest

from semilab import NotAmiableInput, adjoin_identity, classify, find_embedding, find_M, generated_subsemigroup, validate
from semilab.cayley import find_isomorphism, induced_table
from semilab.census import census_tables
from semilab.pattern import M_TABLE, check_avoidsM_equivalences, verify_main_theorem_finite

from .conftest import A, B, C, D
from .oracles import embeds


def test_m_table_generated_by_noncommuting_idempotents(M):
    assert set(generated_subsemigroup(M, [A, B])) == {A, B, C, D}
    assert M.mul(A, B) != M.mul(B, A)


def test_find_M_examples(M, semilattice2, left_zero2):
    assert find_M(M).map == (A, B, C, D)
    assert find_M(semilattice2) is None
    with pytest.raises(NotAmiableInput):
        find_M(left_zero2)
    assert find_M(left_zero2, strict=False) is None


def test_find_M_none_on_adequate_tables():
    for n in range(1, 6):
        for S in census_tables(n, "iso"):
            r = classify(S)
            if r.adequate:
                assert find_M(S, strict=False) is None


def test_avoidsM_equivalences(M, trivial):
    assert check_avoidsM_equivalences(M) is None
    assert check_avoidsM_equivalences(trivial) is None


def test_find_embedding_examples(M, semilattice2):
    assert find_embedding(M, M_TABLE).map == (A, B, C, D)
    assert find_embedding(adjoin_identity(M), M_TABLE) is not None
    # {a, c} is a two-element semilattice inside M: ac = ca = c
    w = find_embedding(M, semilattice2)
    assert w.map == (A, C) == embeds(M.rows(), semilattice2.rows())
    assert find_embedding(semilattice2, M) is None


@pytest.mark.parametrize("order", [2, 3, 4])
def test_find_embedding_matches_exhaustive_search(order):
    patterns = [P for m in (1, 2, 3) for P in census_tables(m, "iso")]
    for S in census_tables(order, "iso"):
        for P in patterns:
            w = find_embedding(S, P)
            brute = embeds(S.rows(), P.rows())
            assert (w is None) == (brute is None)
            if w is not None:
                # lexicographically first injective homomorphism
                assert w.map == brute and w.is_valid(S, P)


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5])
def test_fast_path_agrees_with_general_search(order):
    for S in census_tables(order, "iso"):
        if not classify(S).amiable:
            continue
        fast = find_M(S)
        slow = find_embedding(S, M_TABLE)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert fast.is_valid(S, M_TABLE)
            sub = sorted(set(fast.map))
            assert len(sub) == 4
            assert find_isomorphism(induced_table(S, sub), M_TABLE) is not None


def test_embedding_monotone_under_subsemigroups():
    P = census_tables(2, "iso")
    for S in census_tables(4, "iso"):
        for gens in ([0], [0, 1], [1, 2], [2, 3]):
            sub = list(generated_subsemigroup(S, gens))
            T = induced_table(S, sub)
            for pat in P:
                if pat.order <= T.order and find_embedding(T, pat) is not None:
                    assert find_embedding(S, pat) is not None


def test_main_theorem_examples(M, semilattice2, left_zero2):
    check = verify_main_theorem_finite(M)
    assert check.consistent and not check.adequate and check.contains_M and check.avoids_F
    check = verify_main_theorem_finite(semilattice2)
    assert check.consistent and check.adequate and not check.contains_M
    with pytest.raises(NotAmiableInput):
        verify_main_theorem_finite(left_zero2)


def test_m_inside_larger_amiable_table():
    # M with a zero adjoined is still amiable and not adequate
    rows = [list(r) + [4] for r in M_TABLE.products] + [[4] * 5]
    S = validate(5, rows)
    assert classify(S).amiable
    check = verify_main_theorem_finite(S)
    assert check.consistent and check.witness.map == (A, B, C, D)
