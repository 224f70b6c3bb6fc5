import warnings

import pytest
from hypothesis import given, strategies as st

from ukrull import gf2, krull, umod
from ukrull.corpus import example62, sigma_z2
from ukrull.errors import NotLocallyFinite, WindowError
from ukrull.kalg import poly_algebra

D = 16
H = poly_algebra(1, 2 * D).module


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_krull_of_bz2_counts_binary_digits(n):
    sp, cert = krull.krull_in(H, n, D)
    assert cert == D
    want = [1 if d == 0 or bin(d).count("1") <= n else 0 for d in range(D + 1)]
    assert [s.dim for s in sp] == want


def test_krull_is_monotone():
    prev = None
    for n in range(4):
        sp, _ = krull.krull_in(H, n, D)
        if prev is not None:
            assert all(a.issubset(b) for a, b in zip(prev, sp))
        prev = sp


@given(st.integers(0, 3), st.integers(0, 3))
def test_krull_of_free(m, n):
    K, _ = krull.k_n(umod.free_presentation(m), n, 10)
    F = umod.free(m, 10)
    assert K.dims == (F.dims if n >= m else tuple([0] * 11))


def test_kbar_of_free_tensor():
    P = umod.present(umod.tensor(umod.free(1, 24), umod.free(1, 24)), 12, 24)
    Q = krull.kbar_n(P, 1, 12)
    assert Q.is_zero()


def test_window_error():
    with pytest.raises(WindowError):
        krull.krull_in(H, 1, 4 * D)
    P = umod.present(H, 4, 8)
    with pytest.raises(WindowError):
        krull.k_n(P, 1, 9)


def test_certified_degree():
    assert krull.certified_degree(umod.free_presentation(2), 1, 40) == 40
    P = umod.present(H, 4, 8)
    assert krull.certified_degree(P, 1, 6) == 6


def test_nil_1_of_truncation_is_everything():
    M = umod.truncate_above(umod.free(2, 2 * D), 6)
    r = krull.nil_1(M)
    assert r.nil.dims == M.dims[: r.cert + 1]
    assert r.reduced.is_zero()


def test_nil_1_of_reduced_module_is_zero():
    r = krull.nil_1(H)
    assert r.nil.is_zero()
    assert r.reduced.dims == H.dims[: r.cert + 1]


def test_locally_finite_validator():
    assert krull.is_locally_finite(sigma_z2(16)) == 1
    assert krull.is_locally_finite(example62(32)) is None
    assert krull.is_locally_finite(umod.free(4, 32)) is None
    with pytest.raises(NotLocallyFinite):
        krull.nil_filtration_locally_finite(umod.free(1, 16))


def test_locally_finite_nil_filtration():
    M = umod.truncate_above(umod.free(2, 32), 6)
    lf = krull.nil_filtration_locally_finite(M)
    assert lf.R == [M.dim(s) for s in range(7)]
    assert lf.nil(3) == [M.dim(d) if d >= 3 else 0 for d in range(7)]


@pytest.mark.parametrize("m", [1, 2])
def test_sigma_of_free(m):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", krull.CertificationWarning)
        sig = krull.sigma_sequence(umod.free_presentation(m), 3, 8)
    for n, E in enumerate(sig):
        assert list(E.module.dims)[:1] == ([1] if n == m else [0]) or (n != m and not any(E.module.dims))
        assert not any(E.module.dims[1:])


def test_sigma_warns_when_top_is_nonzero():
    # sigma_0 of Sigma Z/2 is itself, nonzero at a cap of degree 1
    P = umod.present(sigma_z2(16), 4, 16)
    with pytest.warns(krull.CertificationWarning):
        krull.sigma(P, 0, 8, top=1)
