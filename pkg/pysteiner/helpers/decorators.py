"""
Decorators shared by the PySteiner operations.

Apply them to the public functions to insert common text into docstrings and
to check the arguments that many operations share.
"""
import functools
import textwrap

from pysteiner.exceptions import SteinerInvalidInput

COMMON_OPTIONS = {
    "pres": """\
        pres : SteinerPresentation
            The bundle, given by its t matrices of size s x (n+1).""",
    "red": """\
        red : ReducedBundle
            The reduced summand, given by an echelon basis of the span of
            its matrices.""",
    "pair": """\
        pair : JumpingPair
            A jumping pair (v, h) whose tensor v h^T lies in the span.""",
    "field": """\
        field : FieldCtx or int
            The ground field, or its modulus.""",
    "budget": """\
        budget : int or None
            Largest number of projective points the enumeration may visit.
            If ``None``, use the value set with :class:`pysteiner.config`.""",
    "seed": """\
        seed : int
            Seed of the random number generator. Equal seeds give equal
            results.""",
}


def fmt_docstring(module_func):
    r"""
    Decorator to insert common text into module docstrings.

    Should be the last decorator (at the top).

    Use any of the keys in :const:`COMMON_OPTIONS` in the docstring of the
    decorated function, surrounded by braces.

    Examples
    --------

    >>> @fmt_docstring
    ... def jumping(red, budget=None):
    ...     '''
    ...     Do something.
    ...
    ...     Parameters
    ...     ----------
    ...     {red}
    ...     {budget}
    ...     '''
    ...     pass
    >>> print(jumping.__doc__)
    <BLANKLINE>
    Do something.
    <BLANKLINE>
    Parameters
    ----------
    red : ReducedBundle
        The reduced summand, given by an echelon basis of the span of
        its matrices.
    budget : int or None
        Largest number of projective points the enumeration may visit.
        If ``None``, use the value set with :class:`pysteiner.config`.
    <BLANKLINE>
    """
    filler_text = {}
    for marker, text in COMMON_OPTIONS.items():
        # strip the shared indentation so the text lines up after dedent
        filler_text[marker] = textwrap.dedent(text.lstrip("\n"))

    # Dedent the docstring to make it all match the option text.
    docstring = textwrap.dedent(module_func.__doc__)
    module_func.__doc__ = docstring.format(**filler_text)
    return module_func


def requires_jumping_rank(minimum=2):
    """
    Decorator that rejects reduced bundles with s below ``minimum``.

    The decorated function must take the reduced bundle as its first
    argument.

    Examples
    --------

    >>> from pysteiner.bundle import ReducedBundle
    >>> @requires_jumping_rank(2)
    ... def first_row(red):
    ...     return red.basis[0]
    >>> first_row(ReducedBundle([[[1, 0]], [[0, 1]]], 3))
    Traceback (most recent call last):
    ...
    pysteiner.exceptions.SteinerInvalidInput: first_row needs s >= 2, got s = 1.
    """

    def decorator(module_func):
        @functools.wraps(module_func)
        def new_module(red, *args, **kwargs):
            if red.s < minimum:
                raise SteinerInvalidInput(
                    f"{module_func.__name__} needs s >= {minimum}, got s = {red.s}."
                )
            return module_func(red, *args, **kwargs)

        return new_module

    return decorator
