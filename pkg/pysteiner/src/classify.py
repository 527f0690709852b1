"""
classify - Recognize bundles whose jumping locus has the largest possible
dimension.
"""
import logging
from collections import Counter

from pysteiner.helpers import fmt_docstring, requires_jumping_rank
from pysteiner.src.jumping import enumerate_jumping_pairs
from pysteiner.src.transform import model_pair_counts, transform_at

logger = logging.getLogger(__name__)


class ClassificationReport:
    """
    Outcome of :func:`classify_max`.

    Attributes
    ----------
    case : str
        One of ``'P1LineBundles'``, ``'AmpleOnP1'``, ``'Scroll'``,
        ``'Veronese'``, ``'NotMaximal'`` or ``'Empty'``.
    invariants : dict
        What was observed on the input bundle.
    trace : list of dict
        One summary per transform step.
    recovered : dict
        Parameters of the recognized model.
    notes : list of str
        Why a bundle was downgraded, and how overlapping cases were resolved.
    """

    def __init__(self, case, invariants, trace=None, recovered=None, notes=None):
        self.case = case
        self.invariants = invariants
        self.trace = list(trace or [])
        self.recovered = dict(recovered or {})
        self.notes = list(notes or [])

    def to_dict(self):
        "The report as plain values, in a fixed key order."
        return {
            "case": self.case,
            "recovered_params": self.recovered,
            "invariants_observed": self.invariants,
            "iteration_trace": self.trace,
            "notes": self.notes,
        }

    def __repr__(self):
        return f"ClassificationReport(case={self.case!r}, recovered={self.recovered})"


def _fiber_histogram(dims):
    return {int(dim): int(count) for dim, count in sorted(Counter(dims).items())}


def _observe(red, report):
    return {
        "s": red.s,
        "t0": red.t0,
        "n": red.n,
        "pairs": len(report.pairs),
        "max_tangent_dim": report.max_tangent_dim,
        "bound": red.bound,
        "consistent": report.consistent,
        "pi1_fiber_dims": _fiber_histogram(
            red.point_fiber(v).dim - 1 for v in report.sigma
        ),
        "pi2_fiber_dims": _fiber_histogram(report.profile[h] - 1 for h in report.j_set),
    }


def _iterate_to_scroll(red, report, budget):
    """
    Transform at the first pair until s = 2 and check that the locus stays
    maximal. Returns the trace and the notes explaining any failure.
    """
    trace = []
    current, current_report = red, report
    while current.s > 2:
        if not current_report.pairs:
            return trace, [f"No jumping pair left at s = {current.s}."]
        step = transform_at(current, current_report.pairs[0], budget=budget)
        trace.append(step.summary())
        current = step.output
        current_report = enumerate_jumping_pairs(current, budget=budget)
        if current_report.max_tangent_dim != current.bound:
            note = (
                f"After the transform at v = {step.pair.v} the locus has dimension "
                f"{current_report.max_tangent_dim} instead of {current.bound}."
            )
            logger.warning(note)
            return trace, [note]
    expected = current.t0 - current.n - 2
    field = current.field
    for v in current_report.sigma:
        if current.point_fiber(v).dim - 1 != expected:
            note = f"The pairs over v = {v} don't form a P^{expected} at s = 2."
            logger.warning(note)
            return trace, [note]
    if len(current_report.sigma) != field.p + 1:
        note = (
            f"Sigma has {len(current_report.sigma)} points at s = 2 instead of "
            f"all {field.p + 1} points of P^1."
        )
        logger.warning(note)
        return trace, [note]
    return trace, []


def _match(red, report):
    p = red.field.p
    s, t0, n = red.s, red.t0, red.n
    count = len(report.pairs)
    matches = []
    if (
        (s, t0, n) == (3, 6, 2)
        and count == p * p + p + 1
        and all(pair.v == pair.h for pair in report.pairs)
    ):
        matches.append(("Veronese", {}))
    if t0 == n + s and count == p + 1:
        matches.append(("P1LineBundles", {"dL": s - 1, "dM": n}))
    if n == 1:
        matches.append(("AmpleOnP1", {"rank": t0 - s, "degree": s}))
    if s == 2:
        matches.append(("Scroll", {"dimension": t0 - n - 1, "degree": n + 1}))
    return matches


@fmt_docstring
@requires_jumping_rank(2)
def classify_max(red, budget=None):
    """
    Decide which Schwarzenberger model a bundle with a maximal jumping locus
    is.

    A bundle whose jumping locus reaches dimension t0 - n - s + 1 comes
    from a rational normal curve, a rational normal scroll or the Veronese
    surface. The bundle is transformed at its first pair down to s = 2 and
    the locus is checked to stay maximal. Then the invariants are matched
    against the models. When several models fit, Veronese beats
    P1LineBundles, which beats AmpleOnP1, which beats Scroll.

    Parameters
    ----------
    {red}
    {budget}

    Returns
    -------
    report : ClassificationReport

    Examples
    --------

    >>> from pysteiner import reduced_summand, schwarz_p1
    >>> classify_max(reduced_summand(schwarz_p1(2, 2, 5)))
    ClassificationReport(case='P1LineBundles', recovered={{'dL': 2, 'dM': 2}})
    """
    report = enumerate_jumping_pairs(red, budget=budget)
    invariants = _observe(red, report)
    if not report.pairs:
        return ClassificationReport("Empty", invariants)
    if report.max_tangent_dim < red.bound:
        return ClassificationReport(
            "NotMaximal",
            invariants,
            notes=[
                f"The locus has dimension {report.max_tangent_dim}, below the "
                f"maximum {red.bound}."
            ],
        )
    notes = []
    if len(report.pairs) not in model_pair_counts(report.max_tangent_dim, red.field):
        notes.append(
            f"{len(report.pairs)} pairs don't match an irreducible model of "
            f"dimension {report.max_tangent_dim}."
        )
        logger.warning(notes[-1])
        return ClassificationReport("NotMaximal", invariants, notes=notes)
    trace, failures = _iterate_to_scroll(red, report, budget)
    if failures:
        return ClassificationReport("NotMaximal", invariants, trace, notes=failures)
    matches = _match(red, report)
    if not matches:
        return ClassificationReport(
            "NotMaximal", invariants, trace, notes=["No model has these invariants."]
        )
    case, recovered = matches[0]
    if len(matches) > 1:
        others = ", ".join(name for name, _ in matches[1:])
        notes.append(f"Also fits {others}; {case} comes first.")
    logger.debug("Classified as %s with %s", case, recovered)
    return ClassificationReport(case, invariants, trace, recovered, notes)
