"""
jumping - Jumping pairs, jumping hyperplanes and the Segre slice they form.

A jumping pair is a point (v, h) of P(S) x P(U*) whose rank-1 matrix v h^T
lies in the span of the reduced bundle. Pairs are found one hyperplane at a
time: for fixed h the admissible v form the kernel of a linear system.
"""
import logging

import numpy as np
import pandas as pd
from pysteiner.exactalg import (
    normalize,
    outer,
    projective_points_array,
    rank,
    to_tuple,
)
from pysteiner.exceptions import SteinerInvalidInput
from pysteiner.helpers import fmt_docstring, requires_jumping_rank
from pysteiner.src.tangent import tangent_dim

logger = logging.getLogger(__name__)


class JumpingPair:
    """
    A jumping pair (v, h) with the coordinates of v h^T in the echelon basis.

    Pairs sort by (h, v).

    Examples
    --------

    >>> pair = JumpingPair((1, 0), (0, 1), (0, 1))
    >>> pair
    JumpingPair(v=(1, 0), h=(0, 1), coords=(0, 1))
    >>> pair < JumpingPair((0, 1), (1, 0), (1, 0))
    True
    """

    def __init__(self, v, h, coords):
        self.v = tuple(int(x) for x in v)
        self.h = tuple(int(x) for x in h)
        self.coords = tuple(int(x) for x in coords)

    @property
    def key(self):
        "The sort key (h, v)."
        return (self.h, self.v)

    def matrix(self, field):
        "The rank-1 matrix v h^T."
        return outer(self.v, self.h, field)

    def to_dict(self):
        "Plain dictionary with the keys v, h and coords."
        return {"v": list(self.v), "h": list(self.h), "coords": list(self.coords)}

    def __eq__(self, other):
        return isinstance(other, JumpingPair) and (
            self.key,
            self.coords,
        ) == (other.key, other.coords)

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash((self.key, self.coords))

    def __repr__(self):
        return f"JumpingPair(v={self.v}, h={self.h}, coords={self.coords})"


class JumpingLocusReport:
    """
    The jumping pairs of a reduced bundle together with what is known about
    their geometry.

    Parameters
    ----------
    pairs : list of JumpingPair
        Sorted by (h, v).
    profile : dict
        Maps every hyperplane h to a(h).
    tangent_dims : list of int
        Projective tangent dimension at each pair.
    bound : int
        t0 - n - s + 1.
    field : FieldCtx
        The ground field.

    The ``certificate`` holds the largest tangent dimension d (-1 for an
    empty locus) and a flag telling whether the number of pairs is in the
    range [p**d / 2, 3 #P^d(F_p)] expected of a d-dimensional locus. Over F_p
    the points alone can't prove the geometric dimension.
    """

    def __init__(self, pairs, profile, tangent_dims, bound, field):
        self.pairs = list(pairs)
        self.profile = dict(profile)
        self.tangent_dims = list(tangent_dims)
        self.bound = bound
        self.field = field

    @property
    def sigma(self):
        "Distinct v of the pairs, the points of Sigma(F)."
        return sorted({pair.v for pair in self.pairs})

    @property
    def j_set(self):
        "Distinct h of the pairs, the jumping hyperplanes J(F)."
        return sorted({pair.h for pair in self.pairs})

    @property
    def max_tangent_dim(self):
        "Largest tangent dimension, or -1 without pairs."
        return max(self.tangent_dims, default=-1)

    @property
    def consistent(self):
        "Whether the pair count fits a locus of dimension max_tangent_dim."
        dim = self.max_tangent_dim
        if dim < 0:
            return True
        count = len(self.pairs)
        upper = 3 * self.field.count_points(dim + 1)
        return self.field.p ** dim / 2 <= count <= upper

    @property
    def certificate(self):
        "The dimension certificate as a dictionary."
        return {"max_tangent_dim": self.max_tangent_dim, "consistent": self.consistent}

    def histogram(self):
        """
        Number of hyperplanes h for each value of a(h).

        Returns
        -------
        histogram : pandas.Series
            Indexed by a, sorted.
        """
        series = pd.Series(list(self.profile.values()), dtype="int64")
        histogram = series.value_counts().sort_index()
        histogram.index.name = "a"
        histogram.name = "hyperplanes"
        return histogram

    def to_dataframe(self):
        """
        One row per pair with the columns h, v, coords and tangent_dim.
        """
        return pd.DataFrame(
            {
                "h": [pair.h for pair in self.pairs],
                "v": [pair.v for pair in self.pairs],
                "coords": [pair.coords for pair in self.pairs],
                "tangent_dim": pd.Series(self.tangent_dims, dtype="int64"),
            }
        )

    def to_dict(self):
        """
        The report as nested plain values, in a fixed key order.
        """
        pairs = []
        for pair, dim in zip(self.pairs, self.tangent_dims):
            item = pair.to_dict()
            item["tangent_dim"] = dim
            pairs.append(item)
        return {
            "p": self.field.p,
            "counts": {
                "pairs": len(self.pairs),
                "sigma": len(self.sigma),
                "j_set": len(self.j_set),
            },
            "profile_histogram": {
                int(a): int(count) for a, count in self.histogram().items()
            },
            "bound": self.bound,
            "certificate": self.certificate,
            "pairs": pairs,
        }

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return (
            f"JumpingLocusReport(pairs={len(self.pairs)}, "
            f"max_tangent_dim={self.max_tangent_dim}, bound={self.bound})"
        )


@fmt_docstring
def hyperplane_kernels(red, budget=None):
    """
    Iterate over the hyperplanes h with the subspace {{v : v h^T in span}}.

    Parameters
    ----------
    {red}
    {budget}

    Returns
    -------
    kernels : iterator of (tuple, Subspace)
        Hyperplanes in lexicographic order.
    """
    points = projective_points_array(red.n + 1, red.field, budget)
    for point in points:
        yield to_tuple(point), red.hyperplane_fiber(point)


@fmt_docstring
def hyperplane_profile(red, budget=None):
    """
    The number a(h) = dim{{v : v h^T in span}} for every hyperplane h.

    H is an (a,1)-jumping hyperplane exactly when a(h) >= a.

    Parameters
    ----------
    {red}
    {budget}

    Returns
    -------
    profile : dict
        Maps every normalized h to a(h).

    Examples
    --------

    >>> from pysteiner import reduced_summand, schwarz_p1
    >>> profile = hyperplane_profile(reduced_summand(schwarz_p1(1, 1, 3)))
    >>> profile
    {{(0, 1): 1, (1, 0): 1, (1, 1): 1, (1, 2): 1}}
    """
    return {h: fiber.dim for h, fiber in hyperplane_kernels(red, budget)}


def point_fiber(red, v):
    """
    The subspace {h : v h^T in span}, whose dimension is b(v).

    >>> from pysteiner import reduced_summand, schwarz_scroll
    >>> point_fiber(reduced_summand(schwarz_scroll([2, 1], 5)), [1, 0]).dim
    2
    """
    return red.point_fiber(v)


@fmt_docstring
@requires_jumping_rank(2)
def enumerate_jumping_pairs(red, budget=None):
    """
    Find every jumping pair of a reduced bundle.

    For each hyperplane h the admissible v form a subspace. Its projective
    points give the pairs (v, h). The tangent dimension is computed at each
    pair.

    Parameters
    ----------
    {red}
    {budget}

    Returns
    -------
    report : JumpingLocusReport
        Pairs sorted by (h, v).

    Raises
    ------
    SteinerInvalidInput
        If s < 2.
    SteinerBudgetError
        If P(U*) or one of the fibers is too large to enumerate.

    Examples
    --------

    >>> from pysteiner import reduced_summand, schwarz_p1
    >>> report = enumerate_jumping_pairs(reduced_summand(schwarz_p1(1, 1, 3)))
    >>> report
    JumpingLocusReport(pairs=4, max_tangent_dim=1, bound=1)
    >>> report.pairs[0]
    JumpingPair(v=(0, 1), h=(0, 1), coords=(0, 0, 1))
    """
    field = red.field
    profile = {}
    pairs = []
    for h, fiber in hyperplane_kernels(red, budget):
        profile[h] = fiber.dim
        if fiber.dim == 0:
            continue
        combos = projective_points_array(fiber.dim, field, budget)
        for vector in field.matmul(combos, fiber.basis):
            v = normalize(vector, field)
            coords = red.coordinates(outer(v, h, field))
            pairs.append(JumpingPair(v, h, coords))
    pairs.sort()
    tangents = [tangent_dim(red, pair) for pair in pairs]
    logger.debug(
        "Found %d jumping pairs on %d hyperplanes",
        len(pairs),
        sum(1 for a in profile.values() if a > 0),
    )
    return JumpingLocusReport(pairs, profile, tangents, red.bound, field)


def ab_pair_bound(s, n, a, b):
    """
    Lower bound b*s + a*(n+1) - a*b on t for the Schwarzenberger bundle of a
    triplet with rk L = a and rk M = b.

    >>> ab_pair_bound(3, 2, 1, 1)
    5
    """
    return b * s + a * (n + 1) - a * b


@fmt_docstring
def is_jumping_pair_ab(red, vectors_a, vectors_b):
    """
    Check whether A x B lies in the span, for A in S* and B in U*.

    Parameters
    ----------
    {red}
    vectors_a : array-like
        Linearly independent rows spanning A, each of length s.
    vectors_b : array-like
        Linearly independent rows spanning B, each of length n+1.

    Returns
    -------
    is_pair : bool

    Raises
    ------
    SteinerInvalidInput
        If A or B has the wrong length, is empty or has dependent rows.

    Examples
    --------

    >>> from pysteiner import reduced_summand, schwarz_scroll
    >>> red = reduced_summand(schwarz_scroll([1, 1], 5))
    >>> is_jumping_pair_ab(red, [[1, 0], [0, 1]], [[1, 0]])
    True
    """
    field = red.field
    basis_a = _independent_rows(vectors_a, red.s, field, "A")
    basis_b = _independent_rows(vectors_b, red.n + 1, field, "B")
    return all(
        red.contains(outer(v, h, field)) for v in basis_a for h in basis_b
    )


def _independent_rows(vectors, length, field, name):
    rows = np.atleast_2d(field.array(vectors))
    if rows.size == 0 or rows.shape[1] != length:
        raise SteinerInvalidInput(
            f"{name} needs nonempty rows of length {length}, got shape {rows.shape}."
        )
    if rank(rows, field) != rows.shape[0]:
        raise SteinerInvalidInput(f"The rows spanning {name} are linearly dependent.")
    return rows


def span_report(report, red):
    """
    Projective dimensions of the linear spans of the jumping locus in P(T0),
    of Sigma(F) in P(S) and of J(F) in P(U*).

    An empty set spans dimension -1.

    >>> from pysteiner import enumerate_jumping_pairs, reduced_summand, schwarz_p1
    >>> red = reduced_summand(schwarz_p1(2, 2, 7))
    >>> span_report(enumerate_jumping_pairs(red), red)
    {'pairs': 4, 'sigma': 2, 'j_set': 2}
    """
    field = red.field

    def projective_span(rows, width):
        if not rows:
            return -1
        return rank(np.array(rows, dtype=np.int64).reshape(len(rows), width), field) - 1

    return {
        "pairs": projective_span([pair.coords for pair in report.pairs], red.t0),
        "sigma": projective_span(report.sigma, red.s),
        "j_set": projective_span(report.j_set, red.n + 1),
    }
