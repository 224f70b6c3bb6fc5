from hypothesis import given, strategies as st

from ukrull import gf2

vecs = st.lists(st.integers(0, 2 ** 10 - 1), max_size=12)


def dense_rank(vectors, n=10):
    rows = [[(v >> i) & 1 for i in range(n)] for v in vectors]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


@given(vecs)
def test_rank_matches_dense_elimination(vs):
    assert gf2.rank(vs) == dense_rank(vs)


@given(vecs)
def test_kernel_is_kernel_of_full_dimension(cols):
    ker = gf2.kernel(cols)
    assert all(gf2.apply(cols, k) == 0 for k in ker)
    assert gf2.rank(ker) == len(ker) == len(cols) - gf2.rank(cols)


@given(vecs, st.integers(0, 2 ** 10 - 1))
def test_coords_reconstruct(vs, target):
    ech = gf2.Echelon(vs)
    if ech.contains(target):
        assert gf2.apply(vs, ech.coords(target)) == target
    else:
        assert ech.normal_form(target) != 0


@given(vecs, st.integers(0, 2 ** 10 - 1))
def test_subspace_quotient_lift(vs, v):
    S = gf2.Subspace(10, vs)
    q = S.quotient_coords(v)
    assert S.contains(S.lift(q) ^ v)
    assert q.bit_length() <= S.codim


@given(vecs)
def test_transpose_is_involution(cols):
    assert gf2.transpose(gf2.transpose(cols, 10), len(cols)) == list(cols)


def test_kron_of_identities():
    a = [1, 2]
    b = [1, 2, 4]
    assert gf2.kron(a, 2, b, 3) == [1 << i for i in range(6)]


def test_compose_and_solve():
    m = [0b01, 0b11]
    assert gf2.compose(m, m) == [0b01, 0b10]
    assert gf2.solve(m, 0b10) == 0b11
    assert gf2.solve([0b01], 0b10) is None
