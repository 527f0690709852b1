"""
Helper functions for testing.
"""
import functools

from pysteiner.exceptions import SteinerComparisonFailure


def check_pairs_equal(module_func):
    """
    Decorator for test cases that compute and compare two jumping loci.

    The decorated function must return two lists of
    :class:`~pysteiner.JumpingPair`, *pairs_ref* and *pairs_test*. They are
    compared as sorted lists, including the coordinates of every pair.

    Examples
    --------

    >>> from pysteiner import enumerate_jumping_pairs, reduced_summand, schwarz_p1
    >>> from pysteiner.oracle import brute_rank_one_scan
    >>> @check_pairs_equal
    ... def test_hankel():
    ...     red = reduced_summand(schwarz_p1(1, 1, 3))
    ...     return enumerate_jumping_pairs(red).pairs, brute_rank_one_scan(red)
    >>> test_hankel()

    >>> @check_pairs_equal
    ... def test_hankel_unequal():
    ...     red = reduced_summand(schwarz_p1(1, 1, 3))
    ...     return enumerate_jumping_pairs(red).pairs, []
    >>> test_hankel_unequal()  # doctest: +ELLIPSIS
    Traceback (most recent call last):
    ...
    pysteiner.exceptions.SteinerComparisonFailure: jumping loci differ ...
    """

    @functools.wraps(module_func)
    def wrapper(*args, **kwargs):
        pairs_ref, pairs_test = module_func(*args, **kwargs)
        pairs_ref, pairs_test = sorted(pairs_ref), sorted(pairs_test)
        if pairs_ref == pairs_test:
            return
        missing = [pair for pair in pairs_ref if pair not in pairs_test]
        extra = [pair for pair in pairs_test if pair not in pairs_ref]
        raise SteinerComparisonFailure(
            f"jumping loci differ ({len(pairs_ref)} vs {len(pairs_test)} pairs):\n"
            f"\tmissing: {missing[:5]}\n\textra: {extra[:5]}"
        )

    return wrapper
