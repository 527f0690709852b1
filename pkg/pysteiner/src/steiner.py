"""
steiner - Check the Steiner condition, compute fibers and reduced summands.
"""
import logging

from pysteiner.bundle import ReducedBundle
from pysteiner.exactalg import kernel, projective_points_array, rank, rref, to_tuple
from pysteiner.exceptions import SteinerConditionError, SteinerInvalidInput
from pysteiner.helpers import fmt_docstring

logger = logging.getLogger(__name__)


class SteinerCheck:
    """
    Outcome of :func:`is_steiner`.

    Truthy exactly when the condition holds. On failure ``witness`` is the
    lexicographically first normalized point u where the evaluation drops
    rank.
    """

    def __init__(self, holds, witness=None):
        self.holds = bool(holds)
        self.witness = witness

    def __bool__(self):
        return self.holds

    def __repr__(self):
        if self.holds:
            return "SteinerCheck(holds=True)"
        return f"SteinerCheck(holds=False, witness={self.witness})"


def evaluations(pres, points):
    """
    Stacked evaluation matrices at many points at once.

    Parameters
    ----------
    pres : SteinerPresentation
    points : 2d-array
        One vector of U per row.

    Returns
    -------
    stack : 3d-array
        Array of shape (len(points), s, t) whose slices are
        [M_0 u | ... | M_{t-1} u].
    """
    phi = pres.phi
    flat = pres.field.matmul(points, phi.reshape(-1, pres.n + 1).T)
    return flat.reshape(len(points), pres.t, pres.s).transpose(0, 2, 1)


@fmt_docstring
def is_steiner(pres, budget=None):
    """
    Check the Steiner condition over every F_p-point of P(U).

    The condition holds when the s x t matrix [M_0 u | ... | M_(t-1) u] has
    rank s at every nonzero u. Points are visited in lexicographic order, so
    the witness of a failure is the first failing point in that order.

    Parameters
    ----------
    {pres}
    {budget}

    Returns
    -------
    check : SteinerCheck
        Truthy if the condition holds, otherwise carries the witness.

    Examples
    --------

    >>> from pysteiner import schwarz_p1
    >>> is_steiner(schwarz_p1(1, 1, 5))
    SteinerCheck(holds=True)
    """
    points = projective_points_array(pres.n + 1, pres.field, budget)
    for point, matrix in zip(points, evaluations(pres, points)):
        if rank(matrix, pres.field) < pres.s:
            witness = to_tuple(point)
            logger.debug("Steiner condition fails at u = %s", witness)
            return SteinerCheck(False, witness)
    return SteinerCheck(True)


@fmt_docstring
def fiber_dual(pres, point):
    """
    The fiber {{c in T* : sum_k c_k M_k u = 0}} at a nonzero u in U.

    For a Steiner presentation this subspace of T* has dimension t - s at
    every point.

    Parameters
    ----------
    {pres}
    point : list or 1d-array
        A nonzero vector u of U, of length n+1.

    Returns
    -------
    fiber : Subspace
        Subspace of F_p**t.

    Raises
    ------
    SteinerInvalidInput
        If u is zero.
    SteinerConditionError
        If the evaluation at u is not surjective.
    """
    vector = pres.field.array(point).reshape(-1)
    if not vector.any():
        raise SteinerInvalidInput("fiber_dual needs a nonzero point u.")
    fiber = kernel(pres.evaluation(vector), pres.field, cols=pres.t)
    if fiber.dim != pres.t - pres.s:
        raise SteinerConditionError(
            f"Evaluation at u = {to_tuple(vector)} is not surjective: fiber has "
            f"dimension {fiber.dim} instead of {pres.t - pres.s}.",
            witness=to_tuple(vector),
        )
    return fiber


@fmt_docstring
def reduced_summand(pres, budget=None):
    """
    Split off the trivial summand of a Steiner bundle.

    Writes F = F_0 + (T/T_0) x O, where T_0* is the image of phi. The
    result holds the reduced row echelon basis of the image and the
    dimension of the kernel of phi.

    Parameters
    ----------
    {pres}
    {budget}

    Returns
    -------
    red : ReducedBundle

    Raises
    ------
    SteinerConditionError
        If the presentation fails the Steiner condition.

    Examples
    --------

    >>> from pysteiner import schwarz_p1
    >>> reduced_summand(schwarz_p1(2, 2, 7))
    ReducedBundle(p=7, n=2, s=3, t0=5, kernel_dim=0)
    """
    check = is_steiner(pres, budget=budget)
    if not check:
        raise SteinerConditionError(
            f"Not a Steiner presentation: the evaluation at u = {check.witness} "
            "has rank below s.",
            witness=check.witness,
        )
    rnk = rref(pres.flattened(), pres.field)[0]
    logger.debug("Image of phi has dimension %d out of t = %d", rnk, pres.t)
    return ReducedBundle(
        pres.phi, pres.field, kernel_dim=pres.t - rnk, shape=(pres.s, pres.n + 1)
    )
