"""
Prime fields and projective point enumeration.
"""
import itertools
import logging

import numpy as np
from sympy import isprime
from pysteiner.exceptions import SteinerBudgetError, SteinerInvalidInput

logger = logging.getLogger(__name__)

# Products of two reduced entries must fit in a signed 64 bit integer
MAX_MODULUS = 2 ** 31


class FieldCtx:
    """
    The prime field F_p with p an odd prime below 2**31.

    Parameters
    ----------
    p : int
        The modulus. Primality is verified on construction.

    Examples
    --------

    >>> field = FieldCtx(5)
    >>> field
    FieldCtx(p=5)
    >>> field.array([[7, -1], [5, 3]])
    array([[2, 4],
           [0, 3]])
    >>> field.inv(2)
    3
    >>> field.count_points(3)
    31
    """

    def __init__(self, p):
        if isinstance(p, bool) or int(p) != p:
            raise SteinerInvalidInput(f"Field modulus must be an integer, got {p!r}.")
        p = int(p)
        if p < 3 or p >= MAX_MODULUS or not isprime(p):
            raise SteinerInvalidInput(
                f"Field modulus must be an odd prime below 2**31, got {p}."
            )
        self._p = p

    @property
    def p(self):
        "The characteristic of the field."
        return self._p

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.p == self.p

    def __hash__(self):
        return hash(("FieldCtx", self.p))

    def __repr__(self):
        return f"FieldCtx(p={self.p})"

    def array(self, data):
        """
        Convert data into an int64 numpy array reduced into [0, p).
        """
        return np.asarray(data, dtype=np.int64) % self.p

    def matmul(self, left, right):
        """
        Matrix product reduced modulo p.

        Falls back to Python integers when the sums of products could
        overflow int64.

        >>> FieldCtx(7).matmul([[1, 2], [3, 4]], [1, 1])
        array([3, 0])
        """
        left = np.asarray(left, dtype=np.int64)
        right = np.asarray(right, dtype=np.int64)
        inner = left.shape[-1] if left.ndim else 1
        if inner * (self.p - 1) ** 2 < 2 ** 63:
            return (left @ right) % self.p
        product = left.astype(object) @ right.astype(object)
        return (product % self.p).astype(np.int64)

    def inv(self, value):
        """
        Multiplicative inverse of a nonzero element.
        """
        value = int(value) % self.p
        if value == 0:
            raise SteinerInvalidInput("Zero has no inverse.")
        return pow(value, self.p - 2, self.p)

    def count_points(self, dim):
        """
        Number of points of the projective space of a ``dim``-dimensional
        vector space, (p**dim - 1)/(p - 1).
        """
        return (self.p ** dim - 1) // (self.p - 1)


def check_budget(count, budget=None, what="projective points"):
    """
    Raise an error if an enumeration of ``count`` items exceeds the budget.

    Parameters
    ----------
    count : int
        How many items the enumeration would visit.
    budget : int or None
        The cap. If ``None``, use the configured ``budget``.
    what : str
        Description of the items, used in the error message.

    Raises
    ------
    SteinerBudgetError
        If ``count`` is larger than the budget.
    """
    if budget is None:
        # pylint: disable=import-outside-toplevel
        from pysteiner.src.config import get_default

        budget = get_default("budget")
    if count > budget:
        raise SteinerBudgetError(
            f"Enumeration of {count} {what} exceeds the budget of {budget}."
        )
    logger.debug("Enumerating %d %s (budget %d)", count, what, budget)


def projective_points(dim, field, budget=None):
    """
    Iterate over the points of the projective space of F_p**dim.

    Every point is a tuple whose first nonzero coordinate is 1. Points come
    in lexicographic order.

    Parameters
    ----------
    dim : int
        Dimension of the underlying vector space (at least 1).
    field : FieldCtx
        The ground field.
    budget : int or None
        Maximum number of points allowed. If ``None``, use the configured
        ``budget``.

    Returns
    -------
    points : iterator of tuple

    Examples
    --------

    >>> list(projective_points(2, FieldCtx(3)))
    [(0, 1), (1, 0), (1, 1), (1, 2)]
    >>> list(projective_points(1, FieldCtx(7)))
    [(1,)]
    """
    if dim < 1:
        raise SteinerInvalidInput(f"Projective points need dim >= 1, got {dim}.")
    check_budget(field.count_points(dim), budget)
    return _iter_projective_points(dim, field.p)


def _iter_projective_points(dim, p):
    # more leading zeros sort first
    for lead in reversed(range(dim)):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(p), repeat=dim - lead - 1):
            yield prefix + tail


def projective_points_array(dim, field, budget=None):
    """
    All points of the projective space of F_p**dim as the rows of an array.

    Same order and normalization as :func:`projective_points`.

    Examples
    --------

    >>> projective_points_array(2, FieldCtx(3))
    array([[0, 1],
           [1, 0],
           [1, 1],
           [1, 2]])
    """
    points = list(projective_points(dim, field, budget))
    return np.array(points, dtype=np.int64).reshape(len(points), dim)


def normalize(vector, field):
    """
    Scale a nonzero vector so that its first nonzero coordinate is 1.

    Examples
    --------

    >>> normalize([0, 3, 1], FieldCtx(5))
    (0, 1, 2)
    """
    vector = field.array(vector)
    nonzero = np.flatnonzero(vector)
    if nonzero.size == 0:
        raise SteinerInvalidInput("Cannot normalize the zero vector.")
    scaled = (vector * field.inv(vector[nonzero[0]])) % field.p
    return tuple(int(x) for x in scaled)
