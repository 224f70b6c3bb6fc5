from math import comb

import pytest

from ukrull import genfun as G
from ukrull import kalg, umod
from ukrull.errors import RankExhausted

K = 3


@pytest.mark.parametrize("name, m, dims", [
    ("id", 1, [0, 1, 2, 3]),
    ("const", 1, [1, 1, 1, 1]),
    ("tensor_power", 2, [0, 1, 4, 9]),
    ("lambda", 2, [0, 0, 1, 3]),
    ("sym", 2, [0, 1, 3, 6]),
    ("gamma", 2, [0, 1, 3, 6]),
    ("P_W", 1, [1, 2, 4, 8]),
    ("barI", 1, [0, 1, 3, 7]),
])
def test_standard_functors(name, m, dims):
    F = G.standard_functor(name, K, m)
    F.check()
    assert list(F.dims) == dims


def test_rank_is_bounded():
    with pytest.raises(RankExhausted):
        G.identity_functor(K).dim(K + 1)
    with pytest.raises(KeyError):
        G.standard_functor("nope", K)


@pytest.mark.parametrize("name, m, deg", [("const", 1, 0), ("id", 1, 1), ("lambda", 2, 2),
                                          ("tensor_power", 2, 2), ("sym", 2, 2)])
def test_polynomial_degrees(name, m, deg):
    assert G.poly_degree(G.standard_functor(name, K, m)) == deg


def test_reduced_projective_is_not_polynomial():
    deg = G.poly_degree(G.standard_functor("barP", K))
    assert isinstance(deg, G.NotPolynomialWithin) and deg.K == K


def test_difference_functor_of_exterior_square_is_identity():
    assert list(G.delta(G.exterior_functor(2, K)).dims) == [0, 1, 2]


def test_natural_transformations():
    Id, T2 = G.identity_functor(K), G.tensor_power_functor(2, K)
    assert G.hom_functors(Id, Id) == 1
    assert G.hom_functors(Id, T2) == 0
    assert G.hom_functors(G.exterior_functor(2, K), T2) == 1


@pytest.mark.parametrize("n", [0, 1, 2])
def test_p_n_of_injective(n):
    got = list(G.p_n(G.injective_functor(1, 6), n).dims)
    assert got == [sum(comb(k, i) for i in range(n + 1)) for k in range(len(got))]


def test_tensor_and_quotients():
    T = G.tensor_functors(G.identity_functor(K), G.identity_functor(K))
    assert list(T.dims) == [0, 1, 4, 9]
    # p_n is available on ranks below K - n
    assert [s.dim for s in G.p_n_spaces(T, 1)] == [0, 0]
    T5 = G.tensor_functors(G.identity_functor(5), G.identity_functor(5))
    top = G.p_n_spaces(T5, 2)
    assert [s.dim for s in top] == [0, 1, 4]
    Q = G.quotient_functor(T5, top)
    Q.check()
    assert Q.is_zero()


@pytest.mark.parametrize("n, dims", [(1, [0, 1, 2, 3]), (2, [0, 1, 3, 6])])
def test_l_of_free_is_divided_power(n, dims):
    assert list(G.l_of(umod.free_presentation(n), K).dims) == dims


def test_l_kills_nilpotent_modules():
    from ukrull.corpus import sigma_z2

    P = umod.present(sigma_z2(16), 4, 16)
    assert G.l_of(P, K).is_zero()


def test_r_of_identity():
    assert [i for i, d in enumerate(G.r_of(G.identity_functor(K), 8)) if d] == [1, 2, 4, 8]


def test_nil_closure_of_bz2():
    P = umod.present(kalg.poly_algebra(1, 32).module, 16, 32)
    nc = G.nil_closure(P, 6)
    assert nc.dims == [1] * 7
    assert not nc.certified


def test_lambda2_splitting():
    rep = G.lambda2_tensor_splitting(K)
    assert rep.composite_identity and rep.simple
    assert rep.dims_L == [0, 0, 2, 8]
