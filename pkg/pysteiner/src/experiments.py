"""
experiments - Sweeps over random bundles and other whole-locus checks.
"""
import logging

import numpy as np
import pandas as pd
from pysteiner.exactalg import FieldCtx
from pysteiner.helpers import fmt_docstring
from pysteiner.src.jumping import enumerate_jumping_pairs, hyperplane_profile
from pysteiner.src.random_steiner import random_steiner
from pysteiner.src.steiner import reduced_summand

logger = logging.getLogger(__name__)


@fmt_docstring
def generic_locus_sweep(s, t, n, field, seed, samples=20, budget=None):
    """
    Sample random Steiner bundles and record which have no jumping pairs.

    Sample seeds are spawned from ``seed`` with
    :class:`numpy.random.SeedSequence`.

    Parameters
    ----------
    s : int
        Dimension of S (at least 2).
    t : int
        Dimension of T.
    n : int
        Dimension of the projective space.
    {field}
    {seed}
    samples : int
        Number of bundles to draw.
    {budget}

    Returns
    -------
    sweep : pandas.DataFrame
        One row per sample with the columns ``sample``, ``rejections``,
        ``t0``, ``pairs`` and ``empty``. The attributes ``empty`` and
        ``nonempty`` hold the split.

    Examples
    --------

    >>> sweep = generic_locus_sweep(2, 4, 1, 5, seed=3, samples=2)
    >>> list(sweep.columns)
    ['sample', 'rejections', 't0', 'pairs', 'empty']
    >>> sweep.attrs["empty"] + sweep.attrs["nonempty"]
    2
    """
    if not isinstance(field, FieldCtx):
        field = FieldCtx(field)
    rows = []
    for sample, child in enumerate(np.random.SeedSequence(seed).spawn(samples)):
        pres = random_steiner(s, t, n, field, seed=child, budget=budget)
        red = reduced_summand(pres, budget=budget)
        report = enumerate_jumping_pairs(red, budget=budget)
        rows.append(
            {
                "sample": sample,
                "rejections": pres.info["rejections"],
                "t0": red.t0,
                "pairs": len(report.pairs),
                "empty": not report.pairs,
            }
        )
    sweep = pd.DataFrame(rows, columns=["sample", "rejections", "t0", "pairs", "empty"])
    empty = int(sweep["empty"].sum())
    sweep.attrs["empty"] = empty
    sweep.attrs["nonempty"] = samples - empty
    logger.info(
        "%d of %d random (%d, %d)-bundles on P^%d have no jumping pairs",
        empty,
        samples,
        s,
        t,
        n,
    )
    return sweep


@fmt_docstring
def all_hyperplanes_jumping(red, budget=None):
    """
    Whether every hyperplane h has a(h) >= 1.

    Parameters
    ----------
    {red}
    {budget}

    Returns
    -------
    all_jumping : bool

    Examples
    --------

    >>> from pysteiner import reduced_summand, schwarz_scroll
    >>> all_hyperplanes_jumping(reduced_summand(schwarz_scroll([1, 1], 5)))
    True
    """
    return all(a >= 1 for a in hyperplane_profile(red, budget=budget).values())
