import pytest
from hypothesis import given, strategies as st

from ukrull import umod
from ukrull.errors import DesuspensionError, WindowError

D = 20


def poincare_product(a, b, top):
    return tuple(sum(a[i] * b[d - i] for i in range(d + 1)) for d in range(top + 1))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_free_modules_are_unstable_modules(n):
    M = umod.free(n, D)
    M.check()
    assert M.dim(n) == 1 and all(M.dim(d) == 0 for d in range(n))


def test_free_dims():
    # F(1) has classes exactly in degrees 2^k
    assert umod.free(1, D).support() == [1, 2, 4, 8, 16]
    assert umod.free(2, 12).dims == (0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1)


def test_tensor_dims_and_axioms():
    T = umod.tensor(umod.free(1, D), umod.free(2, D))
    T.check(14)
    assert T.dims == poincare_product(umod.free(1, D).dims, umod.free(2, D).dims, D)


def test_phi_doubles_degrees():
    M = umod.free(2, D)
    P = umod.phi(M)
    P.check()
    assert all(P.dim(2 * d) == M.dim(d) for d in range(D // 2 + 1))
    assert all(P.dim(d) == 0 for d in range(1, D + 1, 2))


def test_suspension_round_trip():
    M = umod.free(2, D)
    S = umod.suspend(M, 1)
    assert S.dims[1:] == M.dims[:-1] or S.dims[1:D + 1] == M.dims[:D]
    back = umod.desuspend(S, 1)
    assert back.dims[:D] == M.dims[:D]
    with pytest.raises(DesuspensionError):
        umod.desuspend(umod.free(1, D), 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_loops_of_free(n):
    om, om1 = umod.loops(umod.free(n, D))
    ref = umod.free(n - 1, D)
    assert om.dims[: D // 2] == ref.dims[: D // 2]
    assert om1.is_zero()


@given(st.integers(0, 3), st.integers(2, 8))
def test_truncation(n, r):
    M = umod.free(n, D)
    T = umod.truncate_above(M, r)
    T.check()
    assert T.dims == tuple(M.dim(d) if d <= r else 0 for d in range(M.top + 1))


def test_truncation_beyond_cert():
    with pytest.raises(WindowError):
        umod.truncate_above(umod.free(1, 8), 20)


@pytest.mark.parametrize("n", [1, 2])
def test_present_realize_round_trip(n):
    M = umod.tensor(umod.free(1, D), umod.free(n, D))
    P = umod.present(M, D // 2, D)
    R = umod.realize(P, D // 2)
    assert R.dims == M.dims[: D // 2 + 1]
    ev = umod.evaluation_map(P, R, M)
    ev.check()
    assert all(r == R.dim(d) for d, r in enumerate(ev.ranks()))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_hom_out_of_free_is_degree_n(n):
    M = umod.tensor(umod.free(1, D), umod.free(1, D))
    assert len(umod.hom_space(umod.free_presentation(n), M)) == M.dim(n)


def test_kernel_image_cokernel_exactness():
    lam = umod.lambda_map(umod.free(2, D))
    K, _ = umod.kernel(lam)
    I, _ = umod.image(lam)
    C, _ = umod.cokernel(lam)
    for d in range(D + 1):
        assert K.dim(d) + I.dim(d) == lam.source.dim(d)
        assert I.dim(d) + C.dim(d) == lam.target.dim(d)


def test_free_is_reduced():
    assert umod.is_reduced_by_lambda(umod.free(3, D))
    assert not umod.is_reduced_by_lambda(umod.truncate_above(umod.free(1, D), 1))
