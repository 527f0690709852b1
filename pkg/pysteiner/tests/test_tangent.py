"""
Tests for tangent dimensions and the f(B) in A dimension count.
"""
import pytest
from pysteiner import (
    JumpingPair,
    enumerate_jumping_pairs,
    random_steiner,
    reduced_summand,
    schwarz_p1,
    tangent_dim,
    tecnico_bound,
    tecnico_dim,
)
from pysteiner.exactalg import FieldCtx, Subspace
from pysteiner.exceptions import SteinerInvalidInput

FULL_HOM = [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[0, 0], [0, 1]]]
SYMMETRIC = [[[1, 0], [0, 0]], [[0, 1], [1, 0]], [[0, 0], [0, 1]]]


@pytest.mark.parametrize(
    "matrices,source,target,expected",
    [
        (FULL_HOM, [[1, 0]], [[1, 0]], 3),
        (FULL_HOM, [[1, 0]], None, 2),
        (FULL_HOM, [[1, 0]], [], 2),
        (FULL_HOM, [[1, 0], [0, 1]], None, 0),
        (FULL_HOM, [[1, 0]], [[1, 0], [0, 1]], 4),
        (SYMMETRIC, [[1, 0]], [[1, 0]], 2),
        (SYMMETRIC, [[1, 1]], [[1, 1]], 2),
        (SYMMETRIC, [[1, 0]], None, 1),
    ],
)
def test_tecnico_dim(matrices, source, target, expected):
    """
    Hand counts on the full 2 x 2 matrices and on the symmetric ones.
    """
    assert tecnico_dim(matrices, source, target, 5) == expected


def test_tecnico_dim_accepts_subspaces():
    """
    B and A may be given as subspaces.
    """
    field = FieldCtx(7)
    source = Subspace([[1, 0]], field)
    target = Subspace([[1, 0]], field)
    assert tecnico_dim(FULL_HOM, source, target, field) == 3


def test_tecnico_dim_rejects_wrong_ambient():
    """
    B lives in U and A lives in V.
    """
    with pytest.raises(SteinerInvalidInput):
        tecnico_dim(FULL_HOM, [[1, 0, 0]], None, 5)
    with pytest.raises(SteinerInvalidInput):
        tecnico_dim(FULL_HOM, [[1, 0]], [[1, 0, 0]], 5)


def test_tecnico_bound_tight_on_symmetric():
    """
    The symmetric matrices reach the bound with a = b = 1.
    """
    assert tecnico_bound(3, 2, 2, 1, 1) == 2
    assert tecnico_dim(SYMMETRIC, [[1, 0]], [[1, 0]], 5) == tecnico_bound(
        3, 2, 2, 1, 1
    )


def test_tangent_dim_not_a_pair():
    """
    Only pairs in the span have a tangent space.
    """
    red = reduced_summand(schwarz_p1(1, 1, 5))
    with pytest.raises(SteinerInvalidInput, match="not a jumping pair"):
        tangent_dim(red, JumpingPair((1, 0), (0, 1), ()))


def test_tangent_dim_hankel():
    """
    Every point of the rational normal curve has a tangent line.
    """
    red = reduced_summand(schwarz_p1(3, 2, 5))
    for pair in enumerate_jumping_pairs(red).pairs:
        assert tangent_dim(red, pair) == 1


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize(
    "s,t,n", [(2, 3, 1), (2, 4, 2), (2, 5, 2), (2, 6, 3), (3, 5, 1)]
)
def test_tangent_bound_random(s, t, n, seed):
    """
    Tangent dimensions of random bundles stay below t0 - n - s + 1.
    """
    red = reduced_summand(random_steiner(s, t, n, 5, seed=seed))
    report = enumerate_jumping_pairs(red)
    assert report.max_tangent_dim <= red.bound
    for pair, dim in zip(report.pairs, report.tangent_dims):
        assert tangent_dim(red, pair) == dim


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize(
    "s,t,n", [(3, 5, 2), (3, 6, 2), (3, 6, 3), (2, 6, 3), (3, 6, 1)]
)
def test_tangent_bound_random_all_primes(s, t, n, p, seed):
    """
    The bound holds for random bundles with s <= 3, t0 <= 6, n <= 3, p <= 7.
    """
    red = reduced_summand(random_steiner(s, t, n, p, seed=seed))
    assert red.t0 <= 6
    report = enumerate_jumping_pairs(red)
    assert report.max_tangent_dim <= red.bound
