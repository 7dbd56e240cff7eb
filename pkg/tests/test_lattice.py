import itertools

import numpy as np
from hypothesis import given, settings, strategies as st
from sympy import Matrix

from dpftypes.lattice import (
    ColumnHNF,
    fincke_pohst,
    hnf_from_columns,
    lll_rows,
    reduce_mod_hnf,
    solve_upper,
    xgcd,
)

small = st.integers(min_value=-30, max_value=30)
vec3 = st.lists(small, min_size=3, max_size=3)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g and g >= 0
    assert g == np.gcd(a, b)


@given(st.lists(vec3, min_size=3, max_size=6))
def test_hnf_shape_and_lattice(cols):
    if Matrix(cols).rank() < 3:
        return
    H = hnf_from_columns(cols, 3)
    for i in range(3):
        assert H[i][i] > 0
        for j in range(i):
            assert H[i][j] == 0
        for j in range(i + 1, 3):
            assert 0 <= H[i][j] < H[i][i]
    # same lattice: every generator lies in H and |det H| is the gcd of 3x3 minors
    for c in cols:
        assert solve_upper(H, c) is not None
    minors = [abs(Matrix([cols[i] for i in idx]).det()) for idx in itertools.combinations(range(len(cols)), 3)]
    g = 0
    for m in minors:
        g = int(np.gcd(g, int(m)))
    assert H[0][0] * H[1][1] * H[2][2] == g


@given(st.lists(vec3, min_size=3, max_size=5))
def test_modulus_does_not_change_lattice(cols):
    det = abs(Matrix(cols[:3]).det())
    if det == 0:
        return
    plain = hnf_from_columns(cols, 3)
    dd = plain[0][0] * plain[1][1] * plain[2][2]
    assert hnf_from_columns(cols, 3, modulus=dd) == plain
    L = ColumnHNF(3)
    for c in cols:
        L.add(c)
    L.set_modulus(dd)
    assert L.matrix() == plain and L.full_rank() and L.det() == dd


@given(st.lists(vec3, min_size=3, max_size=4), vec3)
def test_reduce_mod(cols, v):
    if Matrix(cols[:3]).rank() < 3:
        return
    H = hnf_from_columns(cols, 3)
    r = reduce_mod_hnf(H, v)
    assert all(0 <= r[i] < H[i][i] for i in range(3))
    assert solve_upper(H, [a - b for a, b in zip(v, r)]) is not None


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(-50, 50), min_size=3, max_size=3), min_size=3, max_size=3))
def test_lll_unimodular(rows):
    if Matrix(rows).det() == 0:
        return
    T = lll_rows(rows)
    assert abs(Matrix(T).det()) == 1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-2, 2), min_size=9, max_size=9), st.floats(0.5, 6))
def test_fincke_pohst_matches_brute_force(entries, bound):
    B = np.array(entries).reshape(3, 3)
    gram = B @ B.T + 0.3 * np.eye(3)
    got = set(fincke_pohst(gram, bound))
    # box large enough: |x_i| <= sqrt(bound * (gram^-1)_ii)
    inv = np.linalg.inv(gram)
    r = [int(np.ceil(np.sqrt(bound * inv[i, i]))) + 1 for i in range(3)]
    want = set()
    for x in itertools.product(*(range(-k, k + 1) for k in r)):
        q = np.array(x) @ gram @ np.array(x)
        if q <= bound - 1e-7:
            want.add(x)
    assert want <= got
    for x in got:
        assert np.array(x) @ gram @ np.array(x) <= bound + 1e-6
