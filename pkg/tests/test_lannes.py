import pytest

from ukrull import lannes, umod
from ukrull.corpus import f1_tensor_presentation

D = 12


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_tbar_of_free_is_sum_of_lower_frees(n):
    T = umod.realize(lannes.tbar(umod.free_presentation(n)), D)
    want = [sum(umod.free(i, D).dim(d) for i in range(n)) for d in range(D + 1)]
    assert list(T.dims) == want


def test_tbar_of_tensor_square():
    # Tbar(M x N) = TbarM x N + M x TbarN + TbarM x TbarN with Tbar F(1) = F(0)
    P = f1_tensor_presentation(2)
    T = umod.realize(lannes.tbar(P), 8)
    F1 = umod.free(1, 8)
    want = [2 * F1.dim(d) + (1 if d == 0 else 0) for d in range(9)]
    assert list(T.dims) == want


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_free_module_krull_degree(n):
    P = umod.free_presentation(n)
    assert lannes.is_in_Un(P, n)
    assert n == 0 or not lannes.is_in_Un(P, n - 1)
    assert lannes.krull_degree(P) == n


def test_equivariant_structure_of_iterates():
    E = lannes.tbar_iter(f1_tensor_presentation(2), 2, 4)
    E.check()
    assert E.module.dims[0] == 2


def test_unit_map_is_a_module_map():
    P = umod.free_presentation(2)
    f = lannes.unit_map(P, 1, 10)
    f.check()
    # the unit of F(2) is injective
    assert all(r == f.source.dim(d) for d, r in enumerate(f.ranks()))
