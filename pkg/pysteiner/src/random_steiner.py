"""
random_steiner - Sample uniformly random Steiner presentations.
"""
import logging

import numpy as np
from pysteiner.bundle import SteinerPresentation
from pysteiner.exactalg import FieldCtx
from pysteiner.exceptions import SteinerInvalidInput, SteinerSamplerError
from pysteiner.helpers import fmt_docstring
from pysteiner.src.config import get_default
from pysteiner.src.steiner import is_steiner

logger = logging.getLogger(__name__)


@fmt_docstring
def random_steiner(s, t, n, field, seed, max_rejections=None, budget=None):
    """
    Draw a random Steiner presentation by rejection sampling.

    Tuples of t uniformly random s x (n+1) matrices are drawn until one
    passes :func:`pysteiner.is_steiner`. The number of rejected draws is
    stored in ``info["rejections"]`` of the result.

    Parameters
    ----------
    s : int
        Dimension of S (at least 1).
    t : int
        Dimension of T (at least s + n).
    n : int
        Dimension of the projective space (at least 1).
    {field}
    {seed}
    max_rejections : int or None
        Give up after this many failed draws. If ``None``, use the value set
        with :class:`pysteiner.config`.
    {budget}

    Returns
    -------
    pres : SteinerPresentation

    Raises
    ------
    SteinerInvalidInput
        If the dimensions can't carry a Steiner bundle.
    SteinerSamplerError
        If every draw up to the rejection cap failed.

    Examples
    --------

    >>> pres = random_steiner(2, 3, 1, 3, seed=1)
    >>> pres
    SteinerPresentation(p=3, n=1, s=2, t=3)
    >>> pres == random_steiner(2, 3, 1, 3, seed=1)
    True
    """
    if not isinstance(field, FieldCtx):
        field = FieldCtx(field)
    if s < 1 or n < 1:
        raise SteinerInvalidInput(f"Need s >= 1 and n >= 1, got s={s}, n={n}.")
    if t < s + n:
        raise SteinerInvalidInput(
            f"No Steiner bundle has t < s + n, got (s, t, n) = ({s}, {t}, {n})."
        )
    if max_rejections is None:
        max_rejections = get_default("max_rejections")
    rng = np.random.default_rng(seed)
    rejections = 0
    while True:
        phi = rng.integers(0, field.p, size=(t, s, n + 1), dtype=np.int64)
        pres = SteinerPresentation(phi, field)
        if is_steiner(pres, budget=budget):
            break
        rejections += 1
        if rejections > max_rejections:
            raise SteinerSamplerError(
                f"No Steiner presentation with (s, t, n) = ({s}, {t}, {n}) over "
                f"F_{field.p} after {rejections} draws (seed {seed})."
            )
    logger.debug("random_steiner(seed=%s) rejected %d draws", seed, rejections)
    pres.info["rejections"] = rejections
    pres.info["seed"] = seed
    return pres
