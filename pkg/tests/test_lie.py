"""Lie superalgebras: q_n builders, subalgebras, verified maps, tensoring."""

import random

import pytest

from queerhom.algebras import (
    build_builtin,
    build_grassmann,
    build_matrix,
    build_q1,
    tensor,
)
from queerhom.lie import (
    LieSuperAlgebra,
    StructureError,
    VerifiedHomomorphism,
    build_gl,
    build_q,
    build_sl,
    build_sq_by_characterization,
    center,
    check_lie,
    derived_subalgebra,
    induced_lie,
    is_perfect,
    iso_q_to_gl,
    iso_qQ1_to_glnn,
    lie_from_assoc,
    lie_tensor,
    quotient_lie,
)
from queerhom.linalg import GradedDim, graded_dim
from queerhom.scalars import QQ, ScalarError, parse_field_flag

QI = parse_field_flag("Qi")

BASE = build_builtin("base-field", QQ)
G1 = build_grassmann(QQ, 1)
G2 = build_grassmann(QQ, 2)
TP2 = build_builtin("truncated-poly(2)", QQ)


def coeff(n):
    return QQ.from_int(n)


# ------------------------------------------------------------- axiom checks


@pytest.mark.parametrize(
    "n,R",
    [(1, BASE), (1, G1), (2, BASE), (2, G1), (3, BASE), (2, TP2)],
    ids=["q1", "q1-gr1", "q2", "q2-gr1", "q3", "q2-tp2"],
)
def test_check_lie_accepts_q_builds(n, R):
    g = build_q(n, R, verify=False)
    assert check_lie(g) is True


def test_check_lie_flags_broken_antisymmetry():
    g = build_q(2, BASE, verify=False)
    bad = dict(g.brackets)
    # make [e0, e1] and [e1, e0] agree, which even parities forbid
    bad[(0, 1)] = {0: QQ.one}
    bad[(1, 0)] = {0: QQ.one}
    broken = LieSuperAlgebra(g.field, g.space, bad, name="broken")
    with pytest.raises(StructureError):
        check_lie(broken)


def test_check_lie_flags_grading_violation():
    g = build_q(1, G1, verify=False)
    bad = dict(g.brackets)
    odd = next(i for i, p in enumerate(g.space.parities) if p)
    even = next(i for i, p in enumerate(g.space.parities) if not p)
    bad[(even, even)] = {odd: QQ.one}
    broken = LieSuperAlgebra(g.field, g.space, bad, name="broken")
    with pytest.raises(StructureError) as err:
        check_lie(broken)
    assert "grading" in str(err.value) or "antisymmetry" in str(err.value)


def test_bracket_antisymmetry_on_random_homogeneous_pairs():
    rng = random.Random(20260815)
    g = build_q(2, G1)
    by_parity = {0: [], 1: []}
    for i, p in enumerate(g.space.parities):
        by_parity[p].append(i)
    for _ in range(40):
        px, py = rng.randint(0, 1), rng.randint(0, 1)
        x = {i: coeff(rng.randint(-3, 3)) for i in rng.sample(by_parity[px], 3)}
        y = {i: coeff(rng.randint(-3, 3)) for i in rng.sample(by_parity[py], 3)}
        x = {i: v for i, v in x.items() if v}
        y = {i: v for i, v in y.items() if v}
        lhs = g.bracket_coords(x, y)
        rhs = g.bracket_coords(y, x)
        sign = -1 if (px and py) else 1
        flipped = {k: -v if sign > 0 else v for k, v in rhs.items()}
        assert lhs == flipped


# ---------------------------------------------------------- frozen brackets


def test_gl_matrix_unit_brackets():
    gl = build_gl(2, 0, BASE)
    e = gl.entry_index
    assert gl.bracket_basis(e(1, 2, 0), e(2, 1, 0)) == {
        e(1, 1, 0): QQ.one,
        e(2, 2, 0): -QQ.one,
    }
    # in gl(1|1) both off-diagonal units are odd, so the bracket symmetrizes
    gl11 = build_gl(1, 1, BASE)
    e = gl11.entry_index
    assert gl11.bracket_basis(e(1, 2, 0), e(2, 1, 0)) == {
        e(1, 1, 0): QQ.one,
        e(2, 2, 0): QQ.one,
    }


def test_q2_frozen_brackets():
    g = build_q(2, BASE)
    qi = g.qindex
    one = QQ.one
    assert g.bracket_basis(qi.u(1, 2, 0), qi.u(2, 1, 0)) == {
        qi.u(1, 1, 0): one,
        qi.u(2, 2, 0): -one,
    }
    assert g.bracket_basis(qi.w(1, 1, 0), qi.w(1, 1, 0)) == {qi.u(1, 1, 0): coeff(2)}
    assert g.bracket_basis(qi.u(1, 2, 0), qi.w(2, 1, 0)) == {
        qi.w(1, 1, 0): one,
        qi.w(2, 2, 0): -one,
    }
    assert g.bracket_basis(qi.w(1, 2, 0), qi.w(2, 1, 0)) == {
        qi.u(1, 1, 0): one,
        qi.u(2, 2, 0): one,
    }


def test_q1_brackets_twist_on_odd_coordinates():
    g = build_q(1, G1)
    qi = g.qindex
    # coordinate labels: index 0 is 1, index 1 is x1
    assert g.bracket_basis(qi.w(1, 1, 0), qi.w(1, 1, 1)) == {qi.u(1, 1, 1): coeff(-2)}
    assert g.bracket_basis(qi.w(1, 1, 1), qi.w(1, 1, 0)) == {qi.u(1, 1, 1): coeff(2)}
    assert g.bracket_basis(qi.w(1, 1, 0), qi.w(1, 1, 0)) == {qi.u(1, 1, 0): coeff(2)}
    assert g.bracket_basis(qi.w(1, 1, 1), qi.w(1, 1, 1)) == {}
    assert g.bracket_basis(qi.u(1, 1, 1), qi.w(1, 1, 1)) == {}


def test_lie_from_assoc_matches_gl_on_matrices():
    A = build_matrix(QQ, 2)
    g = lie_from_assoc(A)
    gl = build_gl(2, 0, BASE)
    assert g.dim == gl.dim
    for i in range(g.dim):
        for j in range(g.dim):
            assert g.bracket_basis(i, j) == gl.bracket_basis(i, j)


# ------------------------------------------------- derived and sq subalgebra


def test_derived_subalgebra_of_q3_over_rationals():
    g = build_q(3, BASE)
    der = derived_subalgebra(g)
    assert graded_dim(der) == GradedDim(9, 8)
    assert der.dim == 17


@pytest.mark.parametrize(
    "n,R,expect",
    [
        (1, G2, GradedDim(2, 2)),
        (2, G1, GradedDim(7, 7)),
        (3, BASE, GradedDim(9, 8)),
        (2, G2, GradedDim(14, 14)),
        (3, G1, GradedDim(17, 17)),
        (2, TP2, GradedDim(8, 6)),
    ],
    ids=["sq1-gr2", "sq2-gr1", "sq3-base", "sq2-gr2", "sq3-gr1", "sq2-tp2"],
)
def test_sq_graded_dims(n, R, expect):
    q = build_q(n, R)
    sq = build_sq_by_characterization(n, R, q)
    assert graded_dim(sq) == expect


@pytest.mark.parametrize(
    "n,R",
    [(2, BASE), (3, BASE), (2, G1), (3, G1), (2, TP2)],
    ids=["q2", "q3", "q2-gr1", "q3-gr1", "q2-tp2"],
)
def test_sq_equals_derived_subalgebra(n, R):
    q = build_q(n, R)
    assert build_sq_by_characterization(n, R, q) == derived_subalgebra(q)


def test_sq1_keeps_only_the_u_block():
    q = build_q(1, G2)
    sq = build_sq_by_characterization(1, G2, q)
    assert graded_dim(sq) == GradedDim(2, 2)
    u_block = G2.dim  # u-indices come first, one per coordinate basis vector
    for row in sq.rows:
        assert all(i < u_block for i in row)


def test_sq1_is_abelian_and_not_perfect():
    q = build_q(1, G2)
    sq = build_sq_by_characterization(1, G2, q)
    s = induced_lie(q, sq, name="sq1")
    assert all(not tbl for tbl in s.brackets.values())
    assert graded_dim(derived_subalgebra(s)) == GradedDim(0, 0)
    assert not is_perfect(s)


def test_sq3_is_perfect_with_scalar_center():
    q = build_q(3, BASE)
    sq = build_sq_by_characterization(3, BASE, q)
    s = induced_lie(q, sq, name="sq3")
    assert is_perfect(s)
    assert graded_dim(center(s)) == GradedDim(1, 0)


def test_quotient_by_center_gives_psq3():
    q = build_q(3, BASE)
    sq = build_sq_by_characterization(3, BASE, q)
    s = induced_lie(q, sq, name="sq3")
    ps = quotient_lie(s, center(s), name="psq3")
    assert graded_dim(ps.space) == GradedDim(8, 8)
    assert check_lie(ps) is True


def test_quotient_rejects_non_ideal():
    g = build_q(2, BASE)
    qi = g.qindex
    from queerhom.linalg import Subspace

    line = Subspace.from_vectors(g.space, [{qi.u(1, 2, 0): QQ.one}])
    with pytest.raises(StructureError):
        quotient_lie(g, line)


# ----------------------------------------------------------- verified maps


@pytest.mark.parametrize(
    "n,R",
    [(1, G1), (2, BASE), (2, G1)],
    ids=["n1-gr1", "n2-base", "n2-gr1"],
)
def test_iso_q_to_gl_is_isomorphism(n, R):
    phi = iso_q_to_gl(n, R)
    assert phi.parity_preserving
    assert phi.bracket_preserving
    assert phi.injective and phi.surjective
    assert phi.is_isomorphism
    assert phi.failures == []


@pytest.mark.parametrize("n,R", [(2, BASE), (2, G1)], ids=["n2-base", "n2-gr1"])
def test_iso_q_to_gl_carries_sq_onto_traceless(n, R):
    phi = iso_q_to_gl(n, R)
    q = phi.source
    sq = build_sq_by_characterization(n, R, q)
    S = tensor(R, build_q1(QQ))
    assert phi.map_subspace(sq) == build_sl(n, S)


@pytest.mark.parametrize("n", [1, 2])
def test_iso_qQ1_to_glnn_over_gaussian_rationals(n):
    R = build_builtin("base-field", QI)
    psi = iso_qQ1_to_glnn(n, R)
    assert psi.is_isomorphism


def test_iso_qQ1_to_glnn_with_odd_coordinates():
    R = build_grassmann(QI, 1)
    psi = iso_qQ1_to_glnn(1, R)
    assert psi.is_isomorphism


def test_iso_qQ1_to_glnn_needs_sqrt_minus_one():
    with pytest.raises(ScalarError):
        iso_qQ1_to_glnn(2, BASE)


def test_verified_homomorphism_flags_corrupted_column():
    phi = iso_q_to_gl(2, BASE)
    cols = [dict(c) for c in phi.columns]
    target_even = next(
        i
        for i, c in enumerate(cols)
        if phi.source.space.parities[i] == 0 and c
    )
    k = next(iter(cols[target_even]))
    cols[target_even][k] = cols[target_even][k] + QQ.one
    bad = VerifiedHomomorphism(phi.source, phi.target, cols, name="corrupted")
    assert not bad.bracket_preserving
    assert bad.failures
    assert not bad.is_isomorphism


def test_verified_homomorphism_zero_map_is_not_surjective():
    g = build_q(1, BASE)
    zero = VerifiedHomomorphism(g, g, [{} for _ in range(g.dim)], name="zero")
    assert zero.bracket_preserving  # zero map preserves brackets trivially
    assert not zero.injective
    assert not zero.surjective


# ---------------------------------------------------------------- tensoring


def test_lie_tensor_with_base_field_changes_nothing():
    g = build_q(2, BASE)
    gt = lie_tensor(g, BASE)
    assert graded_dim(gt.space) == graded_dim(g.space)
    for i in range(g.dim):
        for j in range(g.dim):
            assert gt.bracket_basis(i, j) == g.bracket_basis(i, j)


def test_lie_tensor_with_grassmann_satisfies_axioms():
    g = build_q(2, BASE)
    gt = lie_tensor(g, G1)
    assert graded_dim(gt.space) == GradedDim(8, 8)
    assert check_lie(gt) is True


def test_lie_tensor_rejects_noncommutative_coordinates():
    g = build_q(2, BASE)
    with pytest.raises(ValueError):
        lie_tensor(g, build_matrix(QQ, 2))
