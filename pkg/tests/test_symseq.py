from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from ukrull import symseq as S
from ukrull.umod import free_presentation


@given(st.integers(1, 4))
def test_group_laws(n):
    G = S.symmetric_group(n)
    assert len(G) == factorial(n)
    for p in G[:6]:
        assert S.pmul(p, S.pinv(p)) == S.identity(n)
    assert S.closure(G[:2] if n > 1 else G, n) <= frozenset(G)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_regular_fixed_points_count_cosets(n):
    R = S.regular(n)
    R.check()
    for H, dims in S.fixed_point_table(R).items():
        assert dims == (factorial(n) // len(H),)


def test_trivial_fixed_points():
    T = S.trivial(3)
    assert all(d == (1,) for d in S.fixed_point_table(T).values())


def test_boxtimes_of_trivials_is_induced():
    triv = [S.trivial(n) for n in range(3)]
    box = S.boxtimes(triv, triv, 4, 0)
    for n, E in enumerate(box):
        E.check()
        want = sum(comb(n, l) for l in range(n + 1) if l <= 2 and n - l <= 2)
        assert E.module.dim(0) == want


@pytest.mark.parametrize("m, dims", [(1, [1, 1, 1, 1, 1]), (2, [1, 0, 1, 0, 3])])
def test_sh_dimensions(m, dims):
    sh = S.sh_m(S.trivial(m), 4, 0)
    assert [E.module.dim(0) for E in sh] == dims
    for E in sh:
        E.check()


def test_subgroup_families():
    assert len(S.young_subgroup(1, 2)) == 2
    assert len(S.wreath_subgroup(2, 2)) == 8
    assert len(S.subgroups(3)) == 6


@pytest.mark.parametrize("N", [S.trivial(1), S.regular(2)])
def test_counit_is_iso(N):
    assert S.counit(N, 16).iso


@pytest.mark.parametrize("n", [1, 2])
def test_unit_kernel_and_cokernel_drop_a_stage(n):
    assert S.verify_unit(free_presentation(n), n, 16).ok
