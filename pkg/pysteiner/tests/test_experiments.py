"""
Tests for the random sweeps and whole-locus checks.
"""
import pandas as pd
from pysteiner import (
    all_hyperplanes_jumping,
    generic_locus_sweep,
    reduced_summand,
    schwarz_p1,
    schwarz_scroll,
)


def test_generic_locus_sweep_mostly_empty():
    """
    Random (3, 8)-bundles on P^4 usually have no jumping pairs.
    """
    sweep = generic_locus_sweep(3, 8, 4, 5, seed=11, samples=20)
    assert isinstance(sweep, pd.DataFrame)
    assert list(sweep.columns) == ["sample", "rejections", "t0", "pairs", "empty"]
    assert len(sweep) == 20
    assert sweep.attrs["empty"] >= 1
    assert sweep.attrs["empty"] + sweep.attrs["nonempty"] == 20
    assert (sweep["empty"] == (sweep["pairs"] == 0)).all()


def test_generic_locus_sweep_deterministic():
    """
    Equal seeds give equal sweeps.
    """
    first = generic_locus_sweep(2, 4, 1, 3, seed=5, samples=3)
    second = generic_locus_sweep(2, 4, 1, 3, seed=5, samples=3)
    pd.testing.assert_frame_equal(first, second)


def test_all_hyperplanes_jumping():
    """
    Every line is jumping for the full 2 x 2 matrices but not for the conic.
    """
    assert all_hyperplanes_jumping(reduced_summand(schwarz_scroll([1, 1], 5)))
    assert all_hyperplanes_jumping(reduced_summand(schwarz_scroll([2, 1], 5)))
    assert not all_hyperplanes_jumping(reduced_summand(schwarz_p1(2, 2, 5)))
