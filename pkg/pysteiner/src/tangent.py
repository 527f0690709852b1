"""
tangent - Tangent spaces of the jumping locus and the f(B) in A dimension count.
"""
import logging

import numpy as np
from pysteiner.bundle import ReducedBundle
from pysteiner.exactalg import FieldCtx, Subspace, kernel, outer, rank
from pysteiner.exceptions import SteinerInvalidInput, SteinerInvariantViolation
from pysteiner.helpers import fmt_docstring

logger = logging.getLogger(__name__)


def tecnico_bound(t, r, s, a, b):
    """
    Upper bound t - r - s + a + b + 1 on dim{f in W : f(B) in A}.

    Here W has dimension t inside Hom(U, V) with dim U = r and dim V = s,
    B has dimension r - b and A has dimension a.

    >>> tecnico_bound(4, 2, 2, 1, 1)
    3
    """
    return t - r - s + a + b + 1


def _subspace(data, field, ambient_dim, name):
    if data is None:
        return Subspace(np.zeros((0, ambient_dim), dtype=np.int64), field, ambient_dim)
    if isinstance(data, Subspace):
        space = data
    else:
        vectors = np.asarray(data)
        if vectors.size == 0:
            vectors = np.zeros((0, ambient_dim), dtype=np.int64)
        space = Subspace(np.atleast_2d(vectors), field, ambient_dim=ambient_dim)
    if space.ambient_dim != ambient_dim:
        raise SteinerInvalidInput(
            f"{name} lives in dimension {space.ambient_dim}, expected {ambient_dim}."
        )
    return space


def tecnico_dim(matrices, source, target, field):
    """
    Dimension of {f in W : f(B) is contained in A}.

    W is the span of the given s x r matrices, seen as maps U -> V with
    dim U = r and dim V = s. The count is t - rank of the linear map
    sending f to Q_A f B^T, where the rows of Q_A cut out A and the rows of
    B span B.

    Parameters
    ----------
    matrices : ReducedBundle or array-like
        A spanning set of W, of shape (t, s, r).
    source : Subspace or array-like
        The subspace B of U, given by spanning rows.
    target : Subspace or array-like or None
        The subspace A of V. ``None`` or an empty list stands for A = 0.
    field : FieldCtx or int
        The ground field, or its modulus.

    Returns
    -------
    dim : int

    Examples
    --------

    >>> full = [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[0, 0], [0, 1]]]
    >>> tecnico_dim(full, [[1, 0]], [[1, 0]], 5)
    3
    >>> tecnico_dim(full, [[1, 0]], None, 5)
    2
    """
    if not isinstance(field, FieldCtx):
        field = FieldCtx(field)
    if isinstance(matrices, ReducedBundle):
        span = matrices
    else:
        span = ReducedBundle(matrices, field)
    basis = span.basis
    t, s, r = basis.shape
    source = _subspace(source, field, r, "B")
    target = _subspace(target, field, s, "A")
    cutters = target.annihilator().basis
    if t == 0 or source.dim == 0 or cutters.shape[0] == 0:
        return t
    images = field.matmul(field.matmul(cutters, basis), source.basis.T)
    system = images.reshape(t, -1)
    return t - rank(system, field)


@fmt_docstring
def tangent_dim(red, pair):
    """
    Projective dimension of the tangent space of the jumping locus at a pair.

    Counts the f in the span with f(ker h) contained in the line of v, minus
    one. It never exceeds t0 - n - s + 1 for a Steiner bundle.

    Parameters
    ----------
    {red}
    {pair}

    Returns
    -------
    dim : int

    Raises
    ------
    SteinerInvalidInput
        If v h^T is not in the span.
    SteinerInvariantViolation
        If the bound t0 - n - s + 1 fails.

    Examples
    --------

    >>> from pysteiner import enumerate_jumping_pairs, reduced_summand, schwarz_p1
    >>> red = reduced_summand(schwarz_p1(2, 2, 5))
    >>> pair = enumerate_jumping_pairs(red).pairs[0]
    >>> tangent_dim(red, pair)
    1
    """
    field = red.field
    if not red.contains(outer(pair.v, pair.h, field)):
        raise SteinerInvalidInput(
            f"(v, h) = ({pair.v}, {pair.h}) is not a jumping pair of this bundle."
        )
    hyperplane = kernel([list(pair.h)], field, cols=red.n + 1)
    dim = tecnico_dim(red, hyperplane, [list(pair.v)], field) - 1
    if dim > red.bound:
        raise SteinerInvariantViolation(
            f"Tangent dimension {dim} at (v, h) = ({pair.v}, {pair.h}) exceeds "
            f"t0 - n - s + 1 = {red.bound}."
        )
    return dim
