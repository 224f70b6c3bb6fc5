import pytest

from ukrull import gf2, kalg, umod
from ukrull.errors import IdealNotStable


def series_product(degrees, top):
    out = [1] + [0] * top
    for g in degrees:
        for d in range(g, top + 1):
            out[d] += out[d - g]
    return out


def test_polynomial_algebras():
    A = kalg.poly_algebra(2, 12)
    A.module.check()
    A.check_restriction()
    A.check_products()
    assert list(A.module.dims) == [d + 1 for d in range(13)]


def test_quaternion_quotients():
    Q = kalg.s3_mod_q8(8)
    assert list(Q.module.dims) == [1, 2, 2, 1, 0, 0, 0, 0, 0]
    B = kalg.bq8(12)
    B.module.check()
    B.check_restriction()
    want = [sum(Q.module.dim(d - 4 * j) for j in range(d // 4 + 1) if d - 4 * j <= 3) for d in range(13)]
    assert list(B.module.dims) == want


def test_unstable_ideal_is_required():
    with pytest.raises(IdealNotStable):
        kalg.PolyQuotient([1, 1], [{(1, 0), (2, 0)}, {(0, 1), (0, 2)}], [{(3, 0), (0, 3)}], 6)


@pytest.mark.parametrize("m, gens", [(1, [1]), (2, [2, 3, 5, 9, 17])])
def test_free_unstable_algebra_series(m, gens):
    K = kalg.kvm(m, 20)
    K.module.check(12)
    K.check_restriction()
    want = series_product(gens, 20) if m == 2 else [1] * 21
    assert list(K.module.dims) == want


def test_length_filtration_quotients_are_exterior_powers():
    K = kalg.kvm(2, 16)
    F2 = umod.free(2, 16)
    filt = [K.length_filtration(k) for k in range(3)]
    assert [s.dim for s in filt[1]] == [1 + F2.dim(d) if d == 0 else F2.dim(d) for d in range(17)]
    for k in range(1, 3):
        assert [a.dim - b.dim for a, b in zip(filt[k], filt[k - 1])] == K.exterior_dims(k)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_primitive_filtration_of_bz2(n):
    H = kalg.poly_algebra(1, 32)
    prim = kalg.primitive_filtration(H, n)
    assert [s.dim for s in prim][1:] == [1 if bin(d).count("1") <= n else 0 for d in range(1, 33)]
