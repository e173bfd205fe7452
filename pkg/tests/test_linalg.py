import random

import pytest
from hypothesis import given, strategies as st

from racah import (
    Mat,
    Poly,
    ShapeError,
    Subspace,
    eigenspace,
    intertwiner_space,
    invertible,
    kernel,
    minimal_polynomial,
    rank,
    rat,
    rref,
    spin,
)
from racah.linalg import apply_poly

from conftest import rationals


def mats(n, m=None):
    m = n if m is None else m
    return st.lists(
        st.lists(rationals(max_num=5, max_den=3), min_size=m, max_size=m),
        min_size=n,
        max_size=n,
    ).map(Mat)


# ------------------------------------------------------------------- rref

def test_rref_hand_example():
    got = rref([[2, 4, 6], [1, 2, 3], [0, 1, 5]])
    assert got == [
        (rat(1), rat(0), rat(-7)),
        (rat(0), rat(1), rat(5)),
    ]


def test_rref_empty_and_zero():
    assert rref([]) == []
    assert rref([[0, 0], [0, 0]]) == []


@given(
    st.lists(st.lists(rationals(), min_size=3, max_size=3), min_size=1, max_size=4),
    st.randoms(use_true_random=False),
)
def test_rref_canonical_under_shuffle_and_scale(vectors, rnd):
    base = rref(vectors)
    shuffled = list(vectors)
    rnd.shuffle(shuffled)
    scaled = []
    for v in shuffled:
        c = rat(rnd.randint(1, 7))
        scaled.append([c * x for x in v])
    # also throw in sums of pairs: same span
    if len(shuffled) >= 2:
        scaled.append([a + b for a, b in zip(shuffled[0], shuffled[1])])
    assert rref(scaled) == base


# --------------------------------------------------------------- subspace

def test_subspace_basics():
    s = Subspace(3, [[1, 1, 0], [0, 0, 2]])
    assert s.dim == 2 and not s.is_full() and not s.is_zero()
    assert s.contains((1, 1, 5))
    assert not s.contains((0, 1, 0))
    assert s == Subspace(3, [[2, 2, 2], [0, 0, 1]])
    assert Subspace(2, []).is_zero()
    assert Subspace(2, [[1, 0], [0, 1]]).is_full()


def test_subspace_containment_order():
    big = Subspace(3, [[1, 0, 0], [0, 1, 0]])
    small = Subspace(3, [[1, 1, 0]])
    assert big.contains_space(small)
    assert not small.contains_space(big)


# ----------------------------------------------------------------- kernel

def test_kernel_hand_example():
    m = Mat([[2, 4, 6], [1, 2, 3], [0, 1, 5]])
    k = kernel(m)
    assert k.dim == 1
    assert k.contains((7, -5, 1))
    assert k.basis == ((rat(1), rat(-5, 7), rat(1, 7)),)


def test_kernel_of_identity_and_zero():
    assert kernel(Mat.identity(3)).is_zero()
    assert kernel(Mat.zero(2, 4)).dim == 4


@given(mats(3, 4))
def test_kernel_vectors_annihilate_and_rank_nullity(m):
    k = kernel(m)
    for v in k.basis:
        assert all(x == 0 for x in m.apply(v))
    assert rank(m) + k.dim == m.cols


@given(mats(3))
def test_invertible_iff_trivial_kernel(m):
    assert invertible(m) == kernel(m).is_zero()


# -------------------------------------------------------------- eigenspace

def test_eigenspace_known():
    m = Mat([[2, 1], [0, 2]])
    s = eigenspace(m, 2)
    assert s.dim == 1 and s.basis == ((rat(1), rat(0)),)
    assert eigenspace(m, 3).is_zero()
    d = Mat.diagonal([1, 1, 5])
    assert eigenspace(d, 1).dim == 2
    with pytest.raises(ShapeError):
        eigenspace(Mat([[1, 2]]), 1)


# ------------------------------------------------------ minimal polynomial

def companion(poly: Poly) -> Mat:
    """Companion matrix; its minimal polynomial is the (monic) polynomial
    itself, which makes an independent oracle for the Krylov computation."""
    p = poly.monic()
    n = p.degree
    cols = []
    for j in range(n):
        col = [rat(0)] * n
        if j < n - 1:
            col[j + 1] = rat(1)
        else:
            for i in range(n):
                col[i] = -p.coeffs[i]
        cols.append(col)
    return Mat(list(map(list, zip(*cols))))


def block_diag(*blocks: Mat) -> Mat:
    n = sum(b.rows for b in blocks)
    out = [[rat(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[off + i][off + j] = b.entries[i][j]
        off += b.rows
    return Mat(out)


def test_minpoly_known_cases():
    assert minimal_polynomial(Mat.identity(3)) == Poly([-1, 1])
    assert minimal_polynomial(Mat.diagonal([2, 2, 3])) == Poly.from_roots([2, 3])
    assert minimal_polynomial(Mat([[2, 1], [0, 2]])) == Poly.from_roots([2, 2])
    assert minimal_polynomial(Mat([[0, 1], [0, 0]])) == Poly([0, 0, 1])
    assert minimal_polynomial(Mat([[0]])) == Poly([0, 1])
    with pytest.raises(ShapeError):
        minimal_polynomial(Mat([[1, 2]]))


@given(
    st.lists(rationals(max_num=4, max_den=2), min_size=1, max_size=3),
    st.lists(rationals(max_num=4, max_den=2), min_size=1, max_size=2),
)
def test_minpoly_against_companion_oracle(c1, c2):
    p1 = Poly(c1 + [rat(1)])  # monic by construction
    p2 = Poly(c2 + [rat(1)])
    m = block_diag(companion(p1), companion(p2))
    got = minimal_polynomial(m)
    # oracle: lcm of the two minimal polynomials = p1*p2/gcd
    from racah import poly_gcd

    g = poly_gcd(p1, p2)
    expect = ((p1 * p2) // g).monic()
    assert got == expect


@given(mats(3))
def test_minpoly_annihilates_and_is_monic(m):
    p = minimal_polynomial(m)
    assert p.leading() == 1
    assert 1 <= p.degree <= 3
    assert apply_poly(p, m).is_zero()


@given(mats(3))
def test_minpoly_minimality(m):
    # no monic proper divisor obtained by deleting one rational root of the
    # minimal polynomial may annihilate
    from racah import rational_roots

    p = minimal_polynomial(m)
    roots, _ = rational_roots(p)
    for r, _mult in roots:
        q = p.shift_divide(r)
        assert not apply_poly(q, m).is_zero()


# ------------------------------------------------------------------- spin

def test_spin_shift_matrix_reaches_everything():
    n = 4
    shift = Mat([[1 if i == j + 1 else 0 for j in range(n)] for i in range(n)])
    seed = [1, 0, 0, 0]
    assert spin(n, [seed], [shift]).is_full()
    # without the shift the seed spans only itself
    assert spin(n, [seed], [Mat.identity(n)]).dim == 1


def test_spin_respects_block_structure():
    m = Mat.diagonal([1, 2, 3])
    s = spin(3, [[0, 1, 0]], [m])
    assert s.dim == 1 and s.basis == ((rat(0), rat(1), rat(0)),)


def test_spin_shape_check():
    with pytest.raises(ShapeError):
        spin(3, [[1, 0, 0]], [Mat.identity(2)])


@given(mats(4), mats(4), st.lists(rationals(), min_size=4, max_size=4))
def test_spin_is_invariant_and_contains_seed(m1, m2, seed):
    s = spin(4, [seed], [m1, m2])
    assert s.contains(seed)
    for v in s.basis:
        assert s.contains(m1.apply(v))
        assert s.contains(m2.apply(v))


# ------------------------------------------------------------ intertwiners

def test_intertwiner_jordan_block():
    j = Mat([[2, 1], [0, 2]])
    basis = intertwiner_space(j, j, j, j)
    # commutant of a nonderogatory 2x2 matrix: polynomials in it, dim 2
    assert len(basis) == 2
    for x in basis:
        assert j * x == x * j


def test_intertwiner_distinct_diagonals():
    a1 = Mat.diagonal([1, 2])
    a2 = Mat.diagonal([1, 3])
    z = Mat.zero(2)
    basis = intertwiner_space(a1, z, a2, z)
    assert len(basis) == 1
    assert basis[0] == Mat([[1, 0], [0, 0]])


def test_intertwiner_rectangular():
    a1 = Mat.diagonal([1, 2, 3])
    a2 = Mat.diagonal([2, 3])
    z3, z2 = Mat.zero(3), Mat.zero(2)
    basis = intertwiner_space(a1, z3, a2, z2)
    assert len(basis) == 2
    for x in basis:
        assert x.rows == 2 and x.cols == 3
        assert a2 * x == x * a1


@given(mats(3), mats(3), mats(2), mats(2))
def test_intertwiner_defining_property(a1, b1, a2, b2):
    for x in intertwiner_space(a1, b1, a2, b2):
        assert a2 * x == x * a1
        assert b2 * x == x * b1
