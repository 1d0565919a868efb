"""Quotient matrices, family cubics, difference identities, root finding."""

import random
from fractions import Fraction

import pytest

from evenfactor.graphs import complete, clique_join, path
from evenfactor.quotient import (
    BracketingError,
    Cubic,
    CubicFamily,
    DifferenceIdentity,
    InvalidPartitionError,
    blocks_family_big_clique,
    charpoly3,
    d_block_gap_at_wiener_floor,
    d_block_gap_coeffs,
    d_singleton_gap_coeffs,
    eval_poly,
    family_cubic,
    identity_check,
    largest_root,
    q_block_gap_at_bracket_floor,
    q_block_gap_coeffs,
    q_block_gap_s2_coeffs,
    q_singleton_gap_coeffs,
    quotient_matrix,
)
from evenfactor.spectral import distance_matrix, signless_laplacian


def blocks_of(sizes):
    out = []
    start = 0
    for s in sizes:
        out.append(tuple(range(start, start + s)))
        start += s
    return out


def test_quotient_of_k4_half_split():
    qm = quotient_matrix(signless_laplacian(complete(4)), blocks_of([2, 2]))
    assert qm.equitable
    assert qm.entries == ((Fraction(4), Fraction(2)), (Fraction(2), Fraction(4)))


def test_quotient_matrix_exactness_and_non_equitable():
    from evenfactor.spectral import adjacency_matrix

    qm = quotient_matrix(adjacency_matrix(path(3)), blocks_of([2, 1]))
    assert not qm.equitable
    assert qm.entries[0][1] == Fraction(1, 2)  # average of rows 0 and 1 into {2}


def test_quotient_partition_validation():
    m = signless_laplacian(complete(3))
    with pytest.raises(InvalidPartitionError):
        quotient_matrix(m, [(0, 1)])
    with pytest.raises(InvalidPartitionError):
        quotient_matrix(m, [(0, 1), (1, 2)])
    with pytest.raises(InvalidPartitionError):
        quotient_matrix(m, [(0, 1, 2), ()])


def extremal_q_quotient(n, delta):
    g = clique_join(delta, (n - 2 * delta + 1,) + (1,) * (delta - 1))
    blocks = blocks_of([delta, n - 2 * delta + 1, delta - 1])
    return quotient_matrix(signless_laplacian(g), blocks)


def extremal_d_quotient(n, delta):
    g = clique_join(delta, (n - 2 * delta + 1,) + (1,) * (delta - 1))
    join_b, big_b, single_b = blocks_of([delta, n - 2 * delta + 1, delta - 1])
    return quotient_matrix(distance_matrix(g), [big_b, join_b, single_b])


def test_extremal_quotient_templates_at_8_2():
    qm = extremal_q_quotient(8, 2)
    assert qm.equitable
    assert [[int(x) for x in row] for row in qm.entries] == [
        [8, 5, 1], [2, 10, 0], [2, 0, 2],
    ]
    dm = extremal_d_quotient(8, 2)
    assert dm.equitable
    assert [[int(x) for x in row] for row in dm.entries] == [
        [4, 2, 2], [5, 1, 1], [10, 2, 0],
    ]


def test_charpoly3_known_cases():
    qm = extremal_q_quotient(8, 2)
    assert charpoly3(qm).coefficients == (1, -20, 104, -120)
    dm = extremal_d_quotient(8, 2)
    assert charpoly3(dm).coefficients == (1, -5, -28, -12)
    ident = quotient_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]], blocks_of([1, 1, 1]))
    assert charpoly3(ident).coefficients == (1, -3, 3, -1)
    with pytest.raises(ValueError):
        charpoly3(quotient_matrix([[1, 0], [0, 1]], blocks_of([1, 1])))


def test_family_cubic_matches_spec_values():
    assert family_cubic(CubicFamily.Q_EXTREMAL, 8, delta=2).coefficients == (1, -20, 104, -120)
    assert family_cubic(CubicFamily.D_EXTREMAL, 8, delta=2).coefficients == (1, -5, -28, -12)


def test_singletons_at_s_delta_equals_extremal():
    for n, d in [(8, 2), (12, 3), (20, 4), (30, 5)]:
        a = family_cubic(CubicFamily.Q_SINGLETONS, n, s=d)
        b = family_cubic(CubicFamily.Q_EXTREMAL, n, delta=d)
        assert a.coefficients == b.coefficients
        a = family_cubic(CubicFamily.D_SINGLETONS, n, s=d)
        b = family_cubic(CubicFamily.D_EXTREMAL, n, delta=d)
        assert a.coefficients == b.coefficients


def test_family_cubic_parameter_validation():
    with pytest.raises(ValueError):
        family_cubic(CubicFamily.Q_EXTREMAL, 8)
    with pytest.raises(ValueError):
        family_cubic(CubicFamily.Q_EXTREMAL, 3, delta=2)
    with pytest.raises(ValueError):
        family_cubic(CubicFamily.Q_BLOCKS, 30, s=1, delta=4)
    with pytest.raises(ValueError):
        family_cubic(CubicFamily.Q_BLOCKS, 30, s=4, delta=4)
    with pytest.raises(ValueError):
        family_cubic(CubicFamily.D_BLOCKS, 7, s=3, delta=5)  # big clique empty


def quotient_cubic_of_family(family, n, s, delta):
    """Independent route: build the graph, partition it, expand the charpoly."""
    if family in (CubicFamily.Q_EXTREMAL, CubicFamily.D_EXTREMAL):
        s = delta
        parts = (n - 2 * delta + 1,) + (1,) * (delta - 1)
    elif family in (CubicFamily.Q_SINGLETONS, CubicFamily.D_SINGLETONS):
        parts = (n - 2 * s + 1,) + (1,) * (s - 1)
    else:
        q = blocks_family_big_clique(n, s, delta)
        parts = (q,) + (delta + 1 - s,) * (s - 1)
    g = clique_join(s, parts)
    join_b, big_b, tail_b = blocks_of([s, parts[0], sum(parts[1:])])
    if family in (CubicFamily.Q_EXTREMAL, CubicFamily.Q_SINGLETONS, CubicFamily.Q_BLOCKS):
        qm = quotient_matrix(signless_laplacian(g), [join_b, big_b, tail_b])
    else:
        qm = quotient_matrix(distance_matrix(g), [big_b, join_b, tail_b])
    assert qm.equitable
    return charpoly3(qm)


GRID = [
    (CubicFamily.Q_EXTREMAL, [(n, None, d) for d in (2, 3, 4, 5) for n in range(2 * d + 2, 41, 7)]),
    (CubicFamily.D_EXTREMAL, [(n, None, d) for d in (2, 3, 4, 5) for n in range(2 * d + 2, 41, 7)]),
    (CubicFamily.Q_SINGLETONS, [(n, s, None) for s in (2, 3, 5) for n in range(2 * s + 1, 41, 6)]),
    (CubicFamily.D_SINGLETONS, [(n, s, None) for s in (2, 3, 5) for n in range(2 * s + 1, 41, 6)]),
    (CubicFamily.Q_BLOCKS, [(n, s, d) for d in (3, 4, 6) for s in range(2, d)
                            for n in range(s + (d + 1 - s) * (s - 1) + 1, 41, 5)]),
    (CubicFamily.D_BLOCKS, [(n, s, d) for d in (3, 4, 6) for s in range(2, d)
                            for n in range(s + (d + 1 - s) * (s - 1) + 1, 41, 5)]),
]


@pytest.mark.parametrize("family,points", GRID, ids=lambda v: getattr(v, "value", "grid"))
def test_family_cubics_equal_constructed_quotients_exactly(family, points):
    for n, s, d in points:
        closed = family_cubic(family, n, s=s, delta=d)
        built = quotient_cubic_of_family(family, n, s, d)
        assert closed.coefficients == built.coefficients, (family, n, s, d)


# -- difference identities ---------------------------------------------------


def admissible_identity_point(rng, identity):
    if identity in (DifferenceIdentity.Q_SINGLETONS, DifferenceIdentity.D_SINGLETONS):
        d = rng.randrange(2, 7)
        s = rng.randrange(d + 1, d + 5)
        n = max(2 * s, 8 * d - 7) + 2 * rng.randrange(0, 10)
    else:
        d = rng.randrange(4, 8)
        s = rng.randrange(3, d)
        n = max(s + (d + 1 - s) * (s - 1) + 1, 8 * d - 7) + rng.randrange(0, 20)
    return n, s, d


@pytest.mark.parametrize("identity", list(DifferenceIdentity))
def test_identity_residuals_random_draws(identity):
    rng = random.Random(hash(identity.value) & 0xFFFF)
    for _ in range(100):
        n, s, d = admissible_identity_point(rng, identity)
        xs = [rng.randrange(0, 3 * n) for _ in range(3)] + [n + d - 3, 2 * n]
        assert identity_check(identity, n, s, d, xs) <= 1e-6


def test_identity_exact_zero_at_s_equal_delta():
    for n, d in [(12, 3), (20, 4), (30, 5)]:
        xs = [0, 7, n, 2 * n, 3 * n + 1]
        assert identity_check(DifferenceIdentity.Q_SINGLETONS, n, d, d, xs) == 0.0
        assert identity_check(DifferenceIdentity.D_SINGLETONS, n, d, d, xs) == 0.0


def test_identity_spec_sample_points():
    assert identity_check(DifferenceIdentity.Q_SINGLETONS, 21, 4, 3, [30, 40, 50]) <= 1e-6
    assert identity_check(DifferenceIdentity.D_BLOCKS, 30, 3, 5, [30 + 5 - 3, 60]) <= 1e-6


def test_gap_expansions_match_direct_evaluation():
    for d in range(3, 8):
        for s in range(2, d):
            for n in range(s + (d + 1 - s) * (s - 1) + 1, 45, 3):
                assert (
                    eval_poly(q_block_gap_coeffs(n, s, d), 2 * n - 2 * d)
                    == q_block_gap_at_bracket_floor(n, s, d)
                )
                assert (
                    eval_poly(d_block_gap_coeffs(n, s, d), n + d - 3)
                    == d_block_gap_at_wiener_floor(n, s, d)
                )
        for n in range(d + 3, 45, 3):
            assert q_block_gap_s2_coeffs(n, d) == q_block_gap_coeffs(n, 2, d)


def test_gap_factor_degrees():
    # leading coefficients as displayed: 1, 2s-5, 1, s-3
    assert q_singleton_gap_coeffs(20, 4, 3)[0] == 1
    assert q_block_gap_coeffs(20, 4, 6)[0] == 2 * 4 - 5
    assert d_singleton_gap_coeffs(20, 4, 3)[0] == 1
    assert d_block_gap_coeffs(20, 4, 6)[0] == 4 - 3


# -- root finding -------------------------------------------------------------


def test_largest_root_known_brackets():
    c = Cubic(1, -20, 104, -120)
    root = largest_root(c, 12, 13)
    assert 12 < root < 13
    assert abs(c(root)) < 1e-7
    d = Cubic(1, -5, -28, -12)
    rootd = largest_root(d, 8, 9)
    assert 8 < rootd < 9
    triple = Cubic(1, -3, 3, -1)
    assert largest_root(triple, 0.5, 2) == pytest.approx(1, abs=1e-9)


def test_largest_root_bisection_matches_numpy():
    import numpy as np

    rng = random.Random(3)
    for _ in range(40):
        roots = sorted(rng.uniform(-10, 10) for _ in range(3))
        c2 = -(roots[0] + roots[1] + roots[2])
        c1 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2]
        c0 = -roots[0] * roots[1] * roots[2]
        cub = Cubic(1, c2, c1, c0)
        if roots[2] - roots[1] < 1e-3:
            continue
        lo = (roots[1] + roots[2]) / 2
        found = largest_root(cub, lo, roots[2] + 5)
        assert found == pytest.approx(roots[2], abs=1e-8)
        biggest = max(np.roots([1, c2, c1, c0]).real)
        assert found == pytest.approx(float(biggest), abs=1e-6)


def test_largest_root_widening_and_errors():
    c = Cubic(1, -20, 104, -120)
    assert largest_root(c, 12, 12.1, widen=True, hi_cap=32) == pytest.approx(
        largest_root(c, 12, 13), abs=1e-9
    )
    with pytest.raises(BracketingError):
        largest_root(c, 14, 15)  # above the largest root, no sign change
    with pytest.raises(BracketingError):
        largest_root(Cubic(1, 0, 0, 1), 1, 2, widen=True, hi_cap=100)
    with pytest.raises(ValueError):
        largest_root(c, 13, 12)


def test_largest_root_deterministic_under_refinement():
    c = Cubic(1, -20, 104, -120)
    r1 = largest_root(c, 12, 13)
    r2 = largest_root(c, 12, 13, tol=1e-12)
    r3 = largest_root(c, 11.5, 14, widen=False)
    assert abs(r1 - r2) < 1e-9 and abs(r1 - r3) < 1e-9
    assert largest_root(c, 12, 13) == r1
