import pytest
from hypothesis import given, strategies as st

from racah import (
    Mat,
    ParamTriple,
    Poly,
    act,
    analyze,
    build_R,
    canonical,
    diagonalizable,
    identify,
    irreducible_criterion,
    irreducible_oracle,
    isomorphic,
    l_matrix,
    rat,
    theta,
)
from racah import ALL_FLIPS

from conftest import triples

P = ParamTriple.of("1/3", "-2/5", "7/4")

# constructed so that exactly one linear form lands in the forbidden set
TAIL_REDUCIBLE = ParamTriple.of("1/5", "1/5", "-7/5")  # a+b+c+1 = 0 = 2/2 - 1
SPIN_REDUCIBLE = ParamTriple.of("1/3", "4/3", 1)  # a-b+c = 0 = 2/2 - 1


# ---------------------------------------------------------- irreducibility

def test_generic_point_is_irreducible_both_ways():
    ok, wit = irreducible_criterion(P, 3)
    assert ok and wit == []
    oracle_ok, sub = irreducible_oracle(build_R(P, 3))
    assert oracle_ok and sub is None


def test_tail_reducible_point():
    ok, wit = irreducible_criterion(TAIL_REDUCIBLE, 2)
    assert not ok
    assert [w.form for w in wit] == ["a+b+c+1"]
    rep = build_R(TAIL_REDUCIBLE, 2)
    # the violated form zeroes a superdiagonal entry of B
    assert rep.B.entries[1][2] == 0
    oracle_ok, sub = irreducible_oracle(rep)
    assert not oracle_ok
    assert sub.dim == 1 and sub.contains((0, 0, 1))


def test_spin_reducible_point():
    ok, wit = irreducible_criterion(SPIN_REDUCIBLE, 2)
    assert not ok
    assert [w.form for w in wit] == ["a-b+c"]
    rep = build_R(SPIN_REDUCIBLE, 2)
    # B keeps its superdiagonal here; only the spin route sees the problem
    assert rep.B.entries[0][1] != 0 and rep.B.entries[1][2] != 0
    oracle_ok, sub = irreducible_oracle(rep)
    assert not oracle_ok
    assert 0 < sub.dim < 3


def test_reducible_witness_is_invariant():
    for p in (TAIL_REDUCIBLE, SPIN_REDUCIBLE):
        rep = build_R(p, 2)
        _, sub = irreducible_oracle(rep)
        for v in sub.basis:
            assert sub.contains(rep.A.apply(v))
            assert sub.contains(rep.B.apply(v))


def test_integer_reducible_point():
    p = ParamTriple.of(1, 1, 2)
    ok, wit = irreducible_criterion(p, 2)
    assert not ok
    assert [(w.form, w.i) for w in wit] == [("a+b-c", 1)]
    oracle_ok, sub = irreducible_oracle(build_R(p, 2))
    assert not oracle_ok and 0 < sub.dim < 3


def test_oracle_requires_v_basis():
    with pytest.raises(ValueError):
        irreducible_oracle(build_R(P, 2, "w"))


@given(triples(max_num=5, max_den=3), st.integers(0, 4))
def test_criterion_matches_oracle(p, d):
    ok, _ = irreducible_criterion(p, d)
    oracle_ok, sub = irreducible_oracle(build_R(p, d))
    assert ok == oracle_ok
    if not ok:
        assert 0 < sub.dim < d + 1


# ---------------------------------------------------------------- l_matrix

def test_l_matrix_d1_frozen():
    expect = Mat(
        [
            [rat(16289, 3600), 0],
            [rat(1, 5), rat(15089, 3600)],
        ]
    )
    for method in ("closed", "recurrence", "direct"):
        assert l_matrix(P, 1, method) == expect


def test_l_matrix_d0():
    for method in ("closed", "recurrence", "direct"):
        assert l_matrix(P, 0, method) == Mat([[1]])


def test_l_matrix_validation():
    with pytest.raises(ValueError):
        l_matrix(P, 2, "fast")
    with pytest.raises(ValueError):
        l_matrix(P, -1)


@given(triples(max_num=5, max_den=3), st.integers(0, 4))
def test_l_matrix_methods_agree(p, d):
    closed = l_matrix(p, d, "closed")
    assert l_matrix(p, d, "recurrence") == closed
    assert l_matrix(p, d, "direct") == closed
    # lower triangular, and invertible exactly on the irreducible locus
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            assert closed.entries[i][j] == 0
    diag_nonzero = all(closed.entries[i][i] != 0 for i in range(d + 1))
    assert diag_nonzero == irreducible_criterion(p, d)[0]


@given(triples(max_num=5, max_den=3), st.integers(0, 4))
def test_l_matrix_diagonal_product(p, d):
    from racah import phi, varphi

    closed = l_matrix(p, d, "closed")
    for i in range(d + 1):
        expect = rat(1)
        for h in range(1, d - i + 1):
            expect = expect * phi(p, d, h)
        for h in range(1, i + 1):
            expect = expect * varphi(p, d, h)
        assert closed.entries[i][i] == expect


# -------------------------------------------------------- diagonalizability

def test_diagonalizable_generic_point():
    for g in ("A", "B", "C"):
        assert diagonalizable(P, 3, g, mode="both")


def test_not_diagonalizable_at_half_integer_point():
    p = ParamTriple.of("-1/2", "-1/2", "-1/2")
    for g in ("A", "B", "C"):
        assert diagonalizable(p, 4, g, mode="criterion") is False
        assert diagonalizable(p, 4, g, mode="both") is False


def test_diagonalizable_d0():
    assert diagonalizable(P, 0, "A", mode="both")


def test_diagonalizable_reducible_needs_oracle():
    with pytest.raises(ValueError):
        diagonalizable(TAIL_REDUCIBLE, 2, "A", mode="criterion")
    # the oracle still answers
    assert isinstance(diagonalizable(TAIL_REDUCIBLE, 2, "A", mode="oracle"), bool)


def test_diagonalizable_validation():
    with pytest.raises(ValueError):
        diagonalizable(P, 2, "D")
    with pytest.raises(ValueError):
        diagonalizable(P, 2, "A", mode="guess")


@given(triples(max_num=5, max_den=2), st.integers(0, 4))
def test_diagonalizable_agreement_on_irreducibles(p, d):
    if not irreducible_criterion(p, d)[0]:
        return
    for g in ("A", "B", "C"):
        diagonalizable(p, d, g, mode="both")  # raises on disagreement


# ---------------------------------------------------------------- identify

def test_identify_roundtrip_frozen():
    rep = build_R(P, 3)
    res = identify(rep.A, rep.B, rep.C)
    assert res.d == 3
    assert res.all_rational
    assert res.candidate == P  # P is already canonical
    ga = res.per_generator["A"]
    assert ga.trace == rep.A.trace()
    assert ga.roots[0] == P.a
    assert ga.roots[1] == -1 - P.a


def test_identify_flipped_input_gives_canonical():
    p = ParamTriple.of(-3, "-2/5", "7/4")
    rep = build_R(p, 2)
    res = identify(rep.A, rep.B, rep.C)
    assert res.candidate == canonical(p)[0]
    assert res.candidate.a == rat(2)


def test_identify_irrational_traces():
    one = Mat([[1]])
    res = identify(one, one, one)
    # x^2 + x - 1 has no rational roots
    assert not res.all_rational
    assert res.candidate is None
    assert res.per_generator["A"].roots is None
    assert res.per_generator["A"].quadratic == Poly([-1, 1, 1])


def test_identify_size_mismatch():
    with pytest.raises(ValueError):
        identify(Mat.identity(2), Mat.identity(3), Mat.identity(2))


@given(triples(max_num=5, max_den=3), st.integers(0, 4))
def test_identify_recovers_orbit(p, d):
    rep = build_R(p, d)
    res = identify(rep.A, rep.B, rep.C)
    assert res.all_rational
    assert res.candidate == canonical(p)[0]


# -------------------------------------------------------------- isomorphism

def test_isomorphic_across_all_flips():
    for flip in ALL_FLIPS:
        res = isomorphic(P, act(P, flip), 2)
        assert res.same_orbit and res.iso
        assert res.hom_dim == 1
        r1 = build_R(P, 2)
        r2 = build_R(act(P, flip), 2)
        x = res.intertwiner
        assert r2.A * x == x * r1.A
        assert r2.B * x == x * r1.B


def test_not_isomorphic_different_orbit():
    q = ParamTriple.of("1/2", "1/2", "1/2")
    res = isomorphic(P, q, 2)
    assert not res.same_orbit and not res.iso
    assert res.hom_dim == 0
    assert res.intertwiner is None


def test_not_isomorphic_with_equal_eta():
    # same eta, different orbit: the intertwiner system itself must rule it out
    p1 = ParamTriple.of(0, 0, 1)
    p2 = ParamTriple.of(0, 1, 0)
    r1 = build_R(p1, 1)
    r2 = build_R(p2, 1)
    assert r1.scalars.eta == r2.scalars.eta
    res = isomorphic(p1, p2, 1)
    assert not res.same_orbit and not res.iso and res.hom_dim == 0


def test_isomorphic_rejects_reducible():
    with pytest.raises(ValueError):
        isomorphic(TAIL_REDUCIBLE, P, 2)


def test_isomorphic_dimension_zero():
    # 1x1 modules with different eta are told apart by the scalar action
    res = isomorphic(ParamTriple.of(0, 0, 0), ParamTriple.of(0, 0, 1), 0)
    assert not res.iso and res.hom_dim == 0
    res = isomorphic(ParamTriple.of(0, 0, 0), ParamTriple.of(-1, 0, 0), 0)
    assert res.iso and res.hom_dim == 1


# ------------------------------------------------------------------ analyze

def test_analyze_generic_point():
    report = analyze(P, 2)
    assert report.irreducible
    assert report.witnesses == ()
    assert report.reducible_subspace is None
    assert report.l_det_nonzero
    assert report.canonical_params == P
    th = [theta(P, 2, i) for i in range(3)]
    assert report.minimal_polynomials["A"] == Poly.from_roots(th)
    assert report.diagonalizable == {"A": True, "B": True, "C": True}
    assert report.identification.candidate == P


def test_analyze_reducible_point():
    report = analyze(TAIL_REDUCIBLE, 2)
    assert not report.irreducible
    assert len(report.witnesses) == 1
    assert report.reducible_subspace is not None
    assert not report.l_det_nonzero


def test_analyze_deterministic():
    assert analyze(P, 3) == analyze(P, 3)


@given(triples(max_num=5, max_den=3), st.integers(0, 3))
def test_analyze_internal_cross_checks(p, d):
    # analyze() raises ConsistencyError if any criterion and oracle split
    report = analyze(p, d)
    assert report.irreducible == report.l_det_nonzero
