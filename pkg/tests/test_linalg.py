import random

from hypothesis import given, strategies as st

from monolab._linalg import (
    EchelonLattice,
    det,
    hnf,
    kernel_basis,
    rank,
    smith_normal_form,
    xgcd,
)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert x * a + y * b == g
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


def random_matrix(rng, m, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def mat_mul_lists(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def test_snf_examples():
    _, d, _ = smith_normal_form([[1, 0], [0, 1]])
    assert [d[0][0], d[1][1]] == [1, 1]
    _, d, _ = smith_normal_form([[2, 0], [0, 3]])
    assert [d[0][0], d[1][1]] == [1, 6]
    _, d, _ = smith_normal_form([[0, 0], [0, 0]])
    assert [d[0][0], d[1][1]] == [0, 0]


def test_snf_postconditions_randomized():
    rng = random.Random(20240811)
    for trial in range(60):
        m = rng.randint(1, 12)
        n = rng.randint(1, 12)
        a = random_matrix(rng, m, n)
        u, d, v = smith_normal_form(a)
        u = [list(r) for r in u]
        v = [list(r) for r in v]
        assert mat_mul_lists(mat_mul_lists(u, a), v) == [list(r) for r in d]
        assert det(u) in (1, -1)
        assert det(v) in (1, -1)
        diag = [d[i][i] for i in range(min(m, n))]
        for i in range(len(diag) - 1):
            if diag[i] == 0:
                assert diag[i + 1] == 0
            else:
                assert diag[i + 1] % diag[i] == 0
        assert all(x >= 0 for x in diag)
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0


def test_kernel_basis():
    rng = random.Random(7)
    for _ in range(30):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        a = random_matrix(rng, m, n, -4, 4)
        ker = kernel_basis(a)
        assert len(ker) == n - rank(a)
        for vec in ker:
            assert all(sum(a[i][j] * vec[j] for j in range(n)) == 0 for i in range(m))


def test_rank_against_det():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 6)
        a = random_matrix(rng, n, n, -5, 5)
        if det(a) != 0:
            assert rank(a) == n
        else:
            assert rank(a) < n


def test_echelon_insert_and_member():
    lat = EchelonLattice(3)
    assert lat.insert((2, 0, 0))
    assert lat.insert((0, 3, 0))
    assert not lat.insert((2, 3, 0))
    assert lat.member((4, 3, 0))
    assert not lat.member((1, 0, 0))
    assert lat.insert((1, 0, 0))  # pivot gcd shrink counts as growth
    assert lat.member((1, 0, 0))


def test_hnf_canonical_and_idempotent():
    rng = random.Random(5)
    for _ in range(40):
        dim = rng.randint(1, 8)
        rows = [tuple(rng.randint(-6, 6) for _ in range(dim))
                for _ in range(rng.randint(0, 10))]
        h1 = hnf(rows, dim)
        assert hnf(h1, dim) == h1
        # pivots positive, entries above pivots reduced
        pivots = []
        for r in h1:
            lead = next(i for i in range(dim) if r[i])
            pivots.append((lead, r[lead]))
            assert r[lead] > 0
        for i, (col, p) in enumerate(pivots):
            for k in range(i):
                assert 0 <= h1[k][col] < p
        # permutation invariance: the basis is a lattice invariant
        shuffled = list(rows)
        rng.shuffle(shuffled)
        assert hnf(shuffled, dim) == h1


def test_content():
    lat = EchelonLattice(3)
    assert lat.content() == 0
    lat.insert((2, 4, 0))
    lat.insert((0, 0, 6))
    assert lat.content() == 2
