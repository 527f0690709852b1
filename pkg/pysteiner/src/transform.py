"""
transform - Pass from a Steiner bundle to a bundle with s - 1 at a jumping
pair, and check what the jumping loci of the two bundles share.
"""
import logging

import numpy as np
from pysteiner.bundle import ReducedBundle
from pysteiner.exactalg import normalize, outer, projective_points_array
from pysteiner.exceptions import SteinerInvalidInput, SteinerInvariantViolation
from pysteiner.helpers import fmt_docstring, requires_jumping_rank
from pysteiner.src.jumping import enumerate_jumping_pairs, hyperplane_profile
from pysteiner.src.steiner import is_steiner

logger = logging.getLogger(__name__)


def quotient_map(v, field):
    """
    The (s-1) x s matrix of S* -> S*/<v> that drops the pivot of v.

    Row i (for i other than the pivot p0) is e_i - v_i e_p0, so the matrix
    has rank s - 1 and kills v.

    Examples
    --------

    >>> from pysteiner.exactalg import FieldCtx
    >>> quotient_map((1, 2, 3), FieldCtx(5))
    array([[3, 1, 0],
           [2, 0, 1]])
    """
    v = np.array(normalize(v, field), dtype=np.int64)
    pivot = int(np.flatnonzero(v)[0])
    rows = [i for i in range(len(v)) if i != pivot]
    matrix = np.eye(len(v), dtype=np.int64)[rows]
    matrix[:, pivot] = -v[rows]
    return matrix % field.p


def model_pair_counts(dim, field):
    """
    Number of F_p-points of the irreducible loci a maximal jumping locus of
    dimension ``dim`` can be.

    Rational normal scrolls of dimension d have (p+1) #P^(d-1) points. The
    Veronese surface adds p^2 + p + 1 in dimension 2.

    >>> from pysteiner.exactalg import FieldCtx
    >>> sorted(model_pair_counts(2, FieldCtx(5)))
    [31, 36]
    """
    if dim < 1:
        return set()
    counts = {(field.p + 1) * field.count_points(dim)}
    if dim == 2:
        counts.add(field.count_points(3))
    return counts


class TransformStep:
    """
    One transform of a reduced bundle at a jumping pair.

    Attributes
    ----------
    source : ReducedBundle
    pair : JumpingPair
    quotient : 2d-array
        The (s-1) x s quotient map Q.
    output : ReducedBundle
        The span of the Q W_k, with ``kernel_dim`` equal to b(v).
    b : int
        dim{h : v h^T in span}.
    """

    def __init__(self, source, pair, quotient, output, b):
        self.source = source
        self.pair = pair
        self.quotient = quotient
        self.output = output
        self.b = b

    @property
    def fiber_dim_alpha(self):
        "Projective dimension b(v) - 1 of the pairs over v."
        return self.b - 1

    def summary(self):
        "A dictionary describing the step, for reports."
        return {
            "v": list(self.pair.v),
            "h": list(self.pair.h),
            "b": self.b,
            "s": self.output.s,
            "t0": self.output.t0,
        }

    def __repr__(self):
        return (
            f"TransformStep(v={self.pair.v}, h={self.pair.h}, b={self.b}, "
            f"output={self.output!r})"
        )


@fmt_docstring
@requires_jumping_rank(2)
def transform_at(red, pair, budget=None):
    """
    Transform a reduced bundle at one of its jumping pairs.

    The matrices W_k are pushed through the quotient S* -> S*/<v>. The
    kernel of this map on the span is {{v h' : v h' in span}}, so the output
    has t0' = t0 - b(v). With s - 1 = 1 the output must be all of
    Hom(U, F), otherwise it must satisfy the Steiner condition.

    Parameters
    ----------
    {red}
    {pair}
    {budget}

    Returns
    -------
    step : TransformStep

    Raises
    ------
    SteinerInvalidInput
        If s < 2 or the pair is not in the span.
    SteinerInvariantViolation
        If t0' is not t0 - b(v) or the output fails the Steiner condition.

    Examples
    --------

    >>> from pysteiner import JumpingPair, reduced_summand, schwarz_p1
    >>> red = reduced_summand(schwarz_p1(2, 2, 5))
    >>> pair = JumpingPair((0, 0, 1), (0, 0, 1), red.coordinates(np.diag([0, 0, 1])))
    >>> step = transform_at(red, pair)
    >>> step.b, step.output == reduced_summand(schwarz_p1(1, 2, 5))
    (1, True)
    """
    field = red.field
    if not red.contains(outer(pair.v, pair.h, field)):
        raise SteinerInvalidInput(
            f"(v, h) = ({pair.v}, {pair.h}) is not a jumping pair of this bundle."
        )
    quotient = quotient_map(pair.v, field)
    b = red.point_fiber(pair.v).dim
    output = ReducedBundle(
        field.matmul(quotient, red.basis),
        field,
        kernel_dim=b,
        shape=(red.s - 1, red.n + 1),
    )
    if output.t0 != red.t0 - b:
        raise SteinerInvariantViolation(
            f"Transform at v = {pair.v} gives t0' = {output.t0}, expected "
            f"t0 - b(v) = {red.t0} - {b}."
        )
    if output.s == 1:
        if output.t0 != output.n + 1:
            raise SteinerInvariantViolation(
                f"Transform at v = {pair.v} should give all of Hom(U, F), got "
                f"t0' = {output.t0} instead of n + 1 = {output.n + 1}."
            )
    elif output.t0 < output.s + output.n or not is_steiner(
        output.as_presentation(), budget=budget
    ):
        raise SteinerInvariantViolation(
            f"Transform at v = {pair.v} breaks the Steiner condition."
        )
    logger.debug("Transform at %s: b = %d, t0 %d -> %d", pair.v, b, red.t0, output.t0)
    return TransformStep(red, pair, quotient, output, b)


class TransformLawReport:
    """
    Which relations between the jumping loci of F and F' were checked, and
    whether they hold.

    ``inclusion`` says J(F) is inside J(F') together with the hyperplanes of
    the pairs over v. ``projection`` says every pair (v1, h1) with v1 != v
    maps to the pair (Q v1, h1) of F'. When the locus of F is maximal and has
    the point count of an irreducible model, ``maximal_checked`` is set and
    ``maximal`` says J(F) = J(F') and that Sigma(F') lies between the
    projection of Sigma(F) and that projection plus the points over the
    hyperplanes of v.
    """

    def __init__(self, step, inclusion, projection, maximal_checked, maximal):
        self.step = step
        self.inclusion = inclusion
        self.projection = projection
        self.maximal_checked = maximal_checked
        self.maximal = maximal

    @property
    def holds(self):
        "Whether every checked relation holds."
        return self.inclusion and self.projection and self.maximal is not False

    def to_dict(self):
        "The report as plain values, in a fixed key order."
        return {
            "step": self.step.summary(),
            "inclusion": self.inclusion,
            "projection": self.projection,
            "maximal_checked": self.maximal_checked,
            "maximal": self.maximal,
            "holds": self.holds,
        }

    def __repr__(self):
        return (
            f"TransformLawReport(inclusion={self.inclusion}, "
            f"projection={self.projection}, maximal={self.maximal})"
        )


def _points_of(subspace, field, budget):
    if subspace.dim == 0:
        return set()
    combos = projective_points_array(subspace.dim, field, budget)
    return {normalize(vector, field) for vector in field.matmul(combos, subspace.basis)}


@fmt_docstring
def verify_transform_laws(red, pair, budget=None):
    """
    Transform at a pair and compare the jumping loci before and after.

    Parameters
    ----------
    {red}
    {pair}
    {budget}

    Returns
    -------
    report : TransformLawReport
        Failed relations are also logged as warnings.

    Examples
    --------

    >>> from pysteiner import enumerate_jumping_pairs, reduced_summand, schwarz_p1
    >>> red = reduced_summand(schwarz_p1(2, 2, 7))
    >>> report = verify_transform_laws(red, enumerate_jumping_pairs(red).pairs[0])
    >>> report
    TransformLawReport(inclusion=True, projection=True, maximal=True)
    """
    field = red.field
    step = transform_at(red, pair, budget=budget)
    output = step.output
    before = enumerate_jumping_pairs(red, budget=budget)
    over_v = _points_of(red.point_fiber(pair.v), field, budget)
    profile = hyperplane_profile(output, budget=budget)
    j_after = {h for h, a in profile.items() if a > 0}
    inclusion = set(before.j_set) <= j_after | over_v

    quotient = step.quotient
    projected = {}
    projection = True
    for other in before.pairs:
        if other.v == pair.v:
            continue
        image = normalize(field.matmul(quotient, other.v), field)
        projected.setdefault(image, other.v)
        if not output.contains(outer(image, other.h, field)):
            projection = False

    dim = before.max_tangent_dim
    maximal_checked = (
        dim == red.bound
        and before.consistent
        and len(before.pairs) in model_pair_counts(dim, field)
        and output.s >= 2
    )
    maximal = None
    if maximal_checked:
        after = enumerate_jumping_pairs(output, budget=budget)
        sigma_after = set(after.sigma)
        extra = {other.v for other in after.pairs if other.h in over_v}
        maximal = (
            set(before.j_set) == set(after.j_set)
            and set(projected) <= sigma_after <= set(projected) | extra
        )
    report = TransformLawReport(step, inclusion, projection, maximal_checked, maximal)
    if not report.holds:
        logger.warning(
            "Transform laws fail at (v, h) = (%s, %s): %r", pair.v, pair.h, report
        )
    return report
