"""
Tests for jumping pairs, jumping hyperplanes and the report around them.
"""
import numpy as np
import pandas as pd
import pytest
from pysteiner import (
    FieldCtx,
    JumpingLocusReport,
    JumpingPair,
    ReducedBundle,
    SteinerPresentation,
    enumerate_jumping_pairs,
    hyperplane_profile,
    is_jumping_pair_ab,
    point_fiber,
    reduced_summand,
    schwarz_ample_p1,
    schwarz_p1,
    schwarz_scroll,
    schwarz_veronese,
    span_report,
    tecnico_dim,
)
from pysteiner.exceptions import SteinerBudgetError, SteinerInvalidInput
from pysteiner.oracle import _rank_one


def rational_normal_curve(d_l, d_m, p):
    """
    The pairs ((1, x, .., x^dL), (1, x, .., x^dM)) and the pair at infinity.
    """
    pairs = {
        (
            tuple(pow(x, i, p) for i in range(d_l + 1)),
            tuple(pow(x, j, p) for j in range(d_m + 1)),
        )
        for x in range(p)
    }
    pairs.add(((0,) * d_l + (1,), (0,) * d_m + (1,)))
    return pairs


@pytest.mark.parametrize("d_l,d_m,p", [(1, 1, 5), (2, 2, 5), (2, 2, 7), (3, 2, 7)])
def test_hankel_locus_is_rational_normal_curve(d_l, d_m, p):
    """
    The jumping pairs of a Hankel bundle are the p + 1 points of the curve.
    """
    red = reduced_summand(schwarz_p1(d_l, d_m, p))
    report = enumerate_jumping_pairs(red)
    assert len(report) == p + 1
    assert {(pair.v, pair.h) for pair in report.pairs} == rational_normal_curve(
        d_l, d_m, p
    )
    assert report.tangent_dims == [1] * (p + 1)
    assert report.max_tangent_dim == report.bound == 1
    assert report.consistent


@pytest.mark.parametrize("p", [3, 5, 7])
def test_veronese_locus(p):
    """
    Every point of P^2 gives the pair (v, v) and the locus is a surface.
    """
    red = reduced_summand(schwarz_veronese(p))
    report = enumerate_jumping_pairs(red)
    assert len(report) == p * p + p + 1
    assert all(pair.v == pair.h for pair in report.pairs)
    assert set(report.tangent_dims) == {2}
    assert report.bound == 2
    assert span_report(report, red) == {"pairs": 5, "sigma": 2, "j_set": 2}


def test_scroll_locus():
    """
    The scroll S(2, 1) has a P^1 of pairs over every point of P^1.
    """
    red = reduced_summand(schwarz_scroll([2, 1], 5))
    report = enumerate_jumping_pairs(red)
    assert len(report) == 36
    assert len(report.sigma) == 6
    assert set(report.tangent_dims) == {2}
    for v in report.sigma:
        assert point_fiber(red, v).dim == 2


def test_full_hom_locus():
    """
    When the span is all of Hom(U, S) every rank-1 matrix is a pair.
    """
    red = reduced_summand(schwarz_scroll([1, 1], 5))
    report = enumerate_jumping_pairs(red)
    assert len(report) == 36
    assert set(report.profile.values()) == {2}
    assert report.max_tangent_dim == report.bound == 2


def test_pairs_sorted_with_coordinates():
    """
    Pairs come sorted by (h, v) and their coordinates rebuild v h^T.
    """
    red = reduced_summand(schwarz_p1(2, 2, 7))
    pairs = enumerate_jumping_pairs(red).pairs
    assert pairs == sorted(pairs)
    assert [pair.key for pair in pairs] == sorted(pair.key for pair in pairs)
    for pair in pairs:
        assert (red.combination(pair.coords) == pair.matrix(red.field)).all()


def test_hyperplane_profile():
    """
    On the conic, six of the 31 lines of P^2(F_5) have a(h) = 1.
    """
    red = reduced_summand(schwarz_p1(2, 2, 5))
    profile = hyperplane_profile(red)
    assert len(profile) == 31
    assert sorted(profile.values()).count(1) == 6
    assert set(profile.values()) == {0, 1}
    histogram = enumerate_jumping_pairs(red).histogram()
    assert histogram.name == "hyperplanes"
    assert histogram.index.name == "a"
    assert histogram.to_dict() == {0: 25, 1: 6}


def test_report_to_dict():
    """
    The report dictionary has a fixed key order and plain values.
    """
    report = enumerate_jumping_pairs(reduced_summand(schwarz_p1(1, 1, 3)))
    data = report.to_dict()
    assert list(data) == [
        "p",
        "counts",
        "profile_histogram",
        "bound",
        "certificate",
        "pairs",
    ]
    assert data["counts"] == {"pairs": 4, "sigma": 4, "j_set": 4}
    assert data["profile_histogram"] == {1: 4}
    assert data["certificate"] == {"max_tangent_dim": 1, "consistent": True}
    assert data["pairs"][0] == {
        "v": [0, 1],
        "h": [0, 1],
        "coords": [0, 0, 1],
        "tangent_dim": 1,
    }


def test_report_to_dataframe():
    """
    One row per pair.
    """
    report = enumerate_jumping_pairs(reduced_summand(schwarz_p1(1, 1, 3)))
    frame = report.to_dataframe()
    assert isinstance(frame, pd.DataFrame)
    assert list(frame.columns) == ["h", "v", "coords", "tangent_dim"]
    assert len(frame) == 4
    assert frame["tangent_dim"].tolist() == [1, 1, 1, 1]


def test_empty_report():
    """
    Without pairs the spans have dimension -1 and the locus dimension is -1.
    """
    red = reduced_summand(schwarz_p1(1, 1, 5))
    report = JumpingLocusReport([], {(1, 0): 0}, [], red.bound, FieldCtx(5))
    assert report.max_tangent_dim == -1
    assert report.consistent
    assert span_report(report, red) == {"pairs": -1, "sigma": -1, "j_set": -1}


def test_jumping_pair_ordering():
    """
    Pairs sort by h first and compare by coordinates too.
    """
    first = JumpingPair((1, 1), (0, 1), (1,))
    second = JumpingPair((0, 1), (1, 0), (2,))
    assert first < second
    assert sorted([second, first]) == [first, second]
    assert first == JumpingPair((1, 1), (0, 1), (1,))
    assert first != JumpingPair((1, 1), (0, 1), (2,))
    assert len({first, JumpingPair((1, 1), (0, 1), (1,))}) == 1
    assert first.to_dict() == {"v": [1, 1], "h": [0, 1], "coords": [1]}


def test_enumerate_needs_two_rows():
    """
    Jumping pairs are only defined for s >= 2.
    """
    with pytest.raises(SteinerInvalidInput, match="needs s >= 2"):
        enumerate_jumping_pairs(ReducedBundle([[[1, 0]], [[0, 1]]], 3))


def test_enumerate_budget():
    """
    The budget caps the hyperplanes visited.
    """
    red = reduced_summand(schwarz_p1(2, 2, 5))
    with pytest.raises(SteinerBudgetError):
        enumerate_jumping_pairs(red, budget=30)


def test_is_jumping_pair_ab():
    """
    A x B lies in the span exactly when every v h^T does.
    """
    red = reduced_summand(schwarz_p1(1, 1, 5))
    assert is_jumping_pair_ab(red, [[1, 2]], [[1, 2]])
    assert is_jumping_pair_ab(red, [[1, 0]], [[1, 0]])
    assert not is_jumping_pair_ab(red, [[1, 0], [0, 1]], [[1, 0]])
    full = reduced_summand(schwarz_scroll([1, 1], 5))
    assert is_jumping_pair_ab(full, [[1, 0], [0, 1]], [[1, 0], [0, 1]])


@pytest.mark.parametrize(
    "vectors_a,vectors_b",
    [([[1, 0], [2, 0]], [[1, 0]]), ([[1, 0, 0]], [[1, 0]]), ([], [[1, 0]])],
)
def test_is_jumping_pair_ab_rejects(vectors_a, vectors_b):
    """
    A and B need independent rows of the right length.
    """
    red = reduced_summand(schwarz_p1(1, 1, 5))
    with pytest.raises(SteinerInvalidInput):
        is_jumping_pair_ab(red, vectors_a, vectors_b)


def hankel_with_antisymmetric():
    """
    The conic bundle over F_5 with E01 - E10 added to its span.

    Besides the conic, its pairs are (e0, h) for h in <e0, e1> and (v, e0)
    for v in <e0, e1>.
    """
    antisymmetric = np.zeros((1, 3, 3), dtype=np.int64)
    antisymmetric[0, 0, 1] = 1
    antisymmetric[0, 1, 0] = 4
    phi = np.concatenate([schwarz_p1(2, 2, 5).phi, antisymmetric])
    return reduced_summand(SteinerPresentation(phi, 5))


def test_constant_projection_families():
    """
    Families of pairs with a fixed v or a fixed h stay below t0 - n - s + 1.
    """
    red = hankel_with_antisymmetric()
    report = enumerate_jumping_pairs(red)
    assert len(report) == 16
    assert red.bound == 2
    e_0 = (1, 0, 0)
    fixed_v = [pair for pair in report.pairs if pair.v == e_0]
    fixed_h = [pair for pair in report.pairs if pair.h == e_0]
    assert len(fixed_v) == len(fixed_h) == 6
    # both families are lines, one less than the bound
    assert point_fiber(red, e_0).dim - 1 == red.bound - 1
    assert report.profile[e_0] - 1 == red.bound - 1
    whole_u = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert tecnico_dim(red, whole_u, [list(e_0)], 5) - 1 == red.bound - 1
    assert tecnico_dim(red, [[0, 1, 0], [0, 0, 1]], None, 5) - 1 == red.bound - 1


@pytest.mark.parametrize(
    "build",
    [
        lambda: reduced_summand(schwarz_p1(2, 2, 5)),
        lambda: reduced_summand(schwarz_veronese(5)),
        lambda: reduced_summand(schwarz_scroll([2, 1], 5)),
        lambda: reduced_summand(schwarz_scroll([1, 1], 5)),
        lambda: reduced_summand(schwarz_ample_p1([2, 1], 5)),
        hankel_with_antisymmetric,
    ],
)
def test_fibers_of_projections_below_bound(build):
    """
    Every a(h) - 1 and b(v) - 1 is at most t0 - n - s.
    """
    red = build()
    report = enumerate_jumping_pairs(red)
    assert max(report.profile.values()) - 1 <= red.bound - 1
    for v in report.sigma:
        assert point_fiber(red, v).dim - 1 <= red.bound - 1


@pytest.mark.parametrize(
    "build",
    [
        lambda: schwarz_p1(1, 1, 5),
        lambda: schwarz_p1(2, 2, 7),
        lambda: schwarz_p1(3, 2, 7),
        lambda: schwarz_veronese(5),
        lambda: schwarz_scroll([2, 1], 5),
        lambda: schwarz_ample_p1([2, 1], 5),
    ],
)
def test_pairs_cut_out_by_minors(build):
    """
    Every 2 x 2 minor vanishes at the span element of every pair.
    """
    red = reduced_summand(build())
    pairs = enumerate_jumping_pairs(red).pairs
    stack = np.array([red.combination(pair.coords) for pair in pairs])
    assert _rank_one(stack, red.field.p).all()
