import pytest

from semilab import NotAmiable, green_classic, green_profile, green_star, green_tilde, idempotent_maps, idempotents
from semilab.census import census_tables
from semilab.green import Partition, green_star_pairwise

from .conftest import A, B, C, D
from .oracles import green_L_R, green_star_naive, green_tilde_naive


def test_partition_ordering_by_least_member():
    p = Partition.from_keys(["x", "y", "x", "z", "y"])
    assert p.as_lists() == [[0, 2], [1, 4], [3]]
    assert p.class_of == (0, 1, 0, 2, 1)
    assert p.related(1, 4) and not p.related(0, 1)


def test_classic_left_zero(left_zero2):
    L, R = green_classic(left_zero2)
    assert L.as_lists() == [[0, 1]]
    assert R.as_lists() == [[0], [1]]


def test_classic_semilattice(semilattice2):
    L, R = green_classic(semilattice2)
    assert L.as_lists() == R.as_lists() == [[0], [1]]


def test_m_star_classes(M):
    Ls, Rs = green_star(M)
    assert Ls.as_lists() == [[A, D], [B], [C]]
    assert Rs.as_lists() == [[A], [B, D], [C]]
    L, R = green_classic(M)
    assert L.refines(Ls) and R.refines(Rs)


def test_star_left_zero(left_zero2):
    Ls, _ = green_star(left_zero2)
    assert Ls.as_lists() == [[0, 1]]


def test_tilde(M, trivial, chain3):
    Lt, Rt = green_tilde(M)
    Ls, Rs = green_star(M)
    assert Ls.refines(Lt) and Rs.refines(Rt)
    for part in green_tilde(trivial) + green_star(trivial) + green_classic(trivial):
        assert part.as_lists() == [[0]]
    Lt, Rt = green_tilde(chain3)
    assert Lt.as_lists() == [[0], [1], [2]]


def test_idempotent_maps(M, trivial, left_zero2):
    ell, r = idempotent_maps(M)
    assert ell == (A, B, C, A)
    assert r == (A, B, C, B)
    assert idempotent_maps(trivial) == ((0,), (0,))
    with pytest.raises(NotAmiable) as exc:
        idempotent_maps(left_zero2)
    assert exc.value.relation == "L*"
    assert exc.value.members == (0, 1) and exc.value.idempotent_count == 2


def test_bands_star_equals_classic():
    for n in (1, 2, 3):
        for S in census_tables(n, "iso"):
            if len(idempotents(S)) == n:
                assert green_star(S) == green_classic(S)


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_partitions_match_brute_force(order):
    for S in census_tables(order, "iso"):
        rows = S.rows()
        L, R = green_classic(S)
        Ls, Rs = green_star(S)
        Lt, Rt = green_tilde(S)
        assert (L.as_lists(), R.as_lists()) == green_L_R(rows)
        assert (Ls.as_lists(), Rs.as_lists()) == green_star_naive(rows)
        assert (Lt.as_lists(), Rt.as_lists()) == green_tilde_naive(rows)
        assert green_star_pairwise(S) == (Ls, Rs)


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_star_is_one_sided_congruence(order):
    for S in census_tables(order, "iso"):
        Ls, Rs = green_star(S)
        n = S.order
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if Ls.related(x, y):
                        assert Ls.related(S.mul(x, z), S.mul(y, z))
                    if Rs.related(x, y):
                        assert Rs.related(S.mul(z, x), S.mul(z, y))


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5])
def test_kernel_soundness_by_direct_quantification(order):
    from semilab import adjoin_identity

    for S in census_tables(order, "iso"):
        t = adjoin_identity(S).products
        m = len(t)
        Ls, Rs = green_star(S)
        for c in Ls.classes:
            x, *rest = c
            for y in rest:
                for a in range(m):
                    for b in range(m):
                        assert (t[x][a] == t[x][b]) == (t[y][a] == t[y][b])


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5])
def test_profile_maps_satisfy_identities(order):
    for S in census_tables(order, "iso"):
        p = green_profile(S)
        E = idempotents(S)
        if p.ell is not None:
            for x in range(order):
                assert p.ell[x] in E and p.Lstar.related(x, p.ell[x]) and S.mul(x, p.ell[x]) == x
        if p.r is not None:
            for x in range(order):
                assert p.r[x] in E and p.Rstar.related(x, p.r[x]) and S.mul(p.r[x], x) == x
