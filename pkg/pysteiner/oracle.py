"""
Brute-force checks of the fast algorithms.

Nothing in the rest of the package calls these functions. They run
straight from the definitions and are meant for tests and for the
``pysteiner oracle`` command.
"""
import logging

import numpy as np
from pysteiner.bundle import ReducedBundle
from pysteiner.exactalg import (
    FieldCtx,
    Subspace,
    normalize,
    outer,
    projective_points_array,
    rank,
)
from pysteiner.exceptions import SteinerSamplerError
from pysteiner.helpers import fmt_docstring
from pysteiner.src.config import get_default
from pysteiner.src.jumping import JumpingPair
from pysteiner.src.random_steiner import random_steiner
from pysteiner.src.tangent import tecnico_bound, tecnico_dim

logger = logging.getLogger(__name__)

# points tested for rank 1 at a time
CHUNK_SIZE = 4096


def _rank_one(stack, p):
    """
    Which matrices of a stack are nonzero with all 2 x 2 minors zero.
    """
    nonzero = stack.any(axis=(1, 2))
    # minors[m, i, k, j, l] = a_ij a_kl - a_il a_kj
    left = stack[:, :, None, :, None] * stack[:, None, :, None, :]
    right = stack[:, :, None, None, :] * stack[:, None, :, :, None]
    vanishing = ((left - right) % p == 0).all(axis=(1, 2, 3, 4))
    return nonzero & vanishing


@fmt_docstring
def brute_rank_one_scan(red, budget=None):
    """
    Find the jumping pairs by testing every point of P(T0) for rank 1.

    Each point c of the coefficient space gives the matrix sum(c_k W_k).
    The rank-1 ones factor as v h^T with v taken from the first nonzero
    column and h from the first nonzero row.

    Parameters
    ----------
    {red}
    {budget}

    Returns
    -------
    pairs : list of JumpingPair
        Sorted by (h, v).

    Examples
    --------

    >>> from pysteiner import reduced_summand, schwarz_p1
    >>> len(brute_rank_one_scan(reduced_summand(schwarz_p1(2, 2, 3))))
    4
    """
    field = red.field
    if red.t0 == 0:
        return []
    points = projective_points_array(red.t0, field, budget)
    flat_basis = red.span.basis
    pairs = []
    for start in range(0, len(points), CHUNK_SIZE):
        chunk = points[start : start + CHUNK_SIZE]
        stack = field.matmul(chunk, flat_basis).reshape(len(chunk), red.s, red.n + 1)
        for matrix in stack[_rank_one(stack, field.p)]:
            column = matrix[:, np.flatnonzero(matrix.any(axis=0))[0]]
            row = matrix[np.flatnonzero(matrix.any(axis=1))[0]]
            v, h = normalize(column, field), normalize(row, field)
            pairs.append(JumpingPair(v, h, red.coordinates(outer(v, h, field))))
    logger.debug("Rank-1 scan of %d points found %d pairs", len(points), len(pairs))
    return sorted(pairs)


def _random_subspace(dim, ambient_dim, field, rng):
    if dim == 0:
        return Subspace(np.zeros((0, ambient_dim), dtype=np.int64), field, ambient_dim)
    while True:
        vectors = rng.integers(0, field.p, size=(dim, ambient_dim), dtype=np.int64)
        if rank(vectors, field) == dim:
            return Subspace(vectors, field, ambient_dim)


def _transitive_span(s, t, r, field, seed_seq, max_rejections):
    """
    A random span W in Hom(U, V) that is transitive over F_p. Spans with
    t0 < r + s - 1 are redrawn. This is only a heuristic: transitivity over
    the algebraic closure is not checked.
    """
    for child in seed_seq.spawn(max_rejections + 1):
        pres = random_steiner(s, t, r - 1, field, seed=child)
        red = ReducedBundle(pres.phi, field)
        if red.t0 >= r + s - 1:
            return red
    raise SteinerSamplerError(
        f"No transitive span with (s, t, r) = ({s}, {t}, {r}) over F_{field.p}."
    )


def tecnico_bound_property(
    trials=100,
    field=5,
    seed=7,
    r_range=(2, 4),
    s_range=(2, 4),
    t_max=10,
    max_rejections=None,
):
    """
    Test dim{f in W : f(B) in A} <= t - r - s + a + b + 1 on random data.

    Every trial draws r and s from the given ranges, a transitive span W of
    dimension t in Hom(U, V), a subspace B of U of codimension b < r and a
    subspace A of V of dimension a < s (possibly zero). Trial seeds are
    spawned from ``seed`` with :class:`numpy.random.SeedSequence`.

    Parameters
    ----------
    trials : int
        Number of random trials.
    field : FieldCtx or int
        The ground field, or its modulus.
    seed : int
        Master seed.
    r_range, s_range : tuple of int
        Inclusive ranges for dim U and dim V.
    t_max : int
        Largest dimension of T drawn before reduction.
    max_rejections : int or None
        Cap on redrawn spans per trial. If ``None``, use the value set with
        :class:`pysteiner.config`.

    Returns
    -------
    violations : list of dict
        One entry per trial where the bound fails. Empty when it holds.

    Examples
    --------

    >>> tecnico_bound_property(trials=3, field=3, seed=1)
    []
    """
    if not isinstance(field, FieldCtx):
        field = FieldCtx(field)
    if max_rejections is None:
        max_rejections = get_default("max_rejections")
    violations = []
    for trial, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        rng = np.random.default_rng(child)
        r = int(rng.integers(r_range[0], r_range[1] + 1))
        s = int(rng.integers(s_range[0], s_range[1] + 1))
        t = int(rng.integers(r + s - 1, max(t_max, r + s - 1) + 1))
        red = _transitive_span(s, t, r, field, child, max_rejections)
        b = int(rng.integers(0, r))
        a = int(rng.integers(0, s))
        source = _random_subspace(r - b, r, field, rng)
        target = _random_subspace(a, s, field, rng)
        dim = tecnico_dim(red, source, target, field)
        bound = tecnico_bound(red.t0, r, s, a, b)
        if dim > bound:
            violations.append(
                {
                    "trial": trial,
                    "t": red.t0,
                    "r": r,
                    "s": s,
                    "a": a,
                    "b": b,
                    "dim": dim,
                    "bound": bound,
                }
            )
    logger.debug("%d trials, %d violations", trials, len(violations))
    return violations
