"""
Utilities and common tasks for the PySteiner operations and the CLI.
"""
from collections.abc import Iterable

from pysteiner.exceptions import SteinerFormatError

TRIPLET_KINDS = ("p1", "scroll", "ample", "veronese", "tensor")


def triplet_kind(description):
    """
    Check which kind of triplet a dictionary describes.

    Possible kinds:

    * ``'p1'``: line bundles O(dL), O(dM) on P^1, given as ``[dL, dM]``
    * ``'scroll'``: a rational normal scroll, given as the list of a_i
    * ``'ample'``: a split ample bundle on P^1, given as the list of a_i
    * ``'veronese'``: the Veronese surface, given as ``true``
    * ``'tensor'``: a raw multiplication tensor

    The description must name exactly one of these. Extra keys such as
    ``"p"`` or ``"format"`` are ignored.

    Parameters
    ----------
    description : dict
        The triplet part of a triplet document.

    Returns
    -------
    kind : str
        One of ``'p1'``, ``'scroll'``, ``'ample'``, ``'veronese'``,
        ``'tensor'``.

    Examples
    --------

    >>> triplet_kind({"p1": [2, 2]})
    'p1'
    >>> triplet_kind({"p": 5, "scroll": [2, 1]})
    'scroll'
    >>> triplet_kind({"veronese": True})
    'veronese'
    """
    if not isinstance(description, dict):
        raise SteinerFormatError(
            f"A triplet must be a JSON object, got {type(description).__name__}."
        )
    kinds = [kind for kind in TRIPLET_KINDS if kind in description]
    if not kinds:
        raise SteinerFormatError(
            f"No triplet given. Use one of the keys {', '.join(TRIPLET_KINDS)}."
        )
    if len(kinds) > 1:
        raise SteinerFormatError(f"Too many triplets given: {', '.join(kinds)}.")
    return kinds[0]


def is_nonstr_iter(value):
    """
    Check if the value is not a string but is iterable (list, tuple, array)

    Parameters
    ----------
    value
        What you want to check.

    Returns
    -------
    is_iterable : bool
        Whether it is a non-string iterable or not.

    Examples
    --------

    >>> is_nonstr_iter("abc")
    False
    >>> is_nonstr_iter(10)
    False
    >>> is_nonstr_iter([1, 2, 3])
    True
    >>> is_nonstr_iter((1, 2, 3))
    True
    """
    return isinstance(value, Iterable) and not isinstance(value, str)


def format_report(data, indent=0):
    """
    Render a report dictionary as indented ``key: value`` lines.

    Nested dictionaries become indented blocks. Lists of dictionaries get
    one block per item, introduced by ``-``.

    Parameters
    ----------
    data : dict
        A report from one of the ``to_dict`` methods.
    indent : int
        Number of leading spaces.

    Returns
    -------
    text : str

    Examples
    --------

    >>> print(format_report({"case": "Veronese", "invariants": {"s": 3}}))
    case: Veronese
    invariants:
      s: 3
    """
    pad = " " * indent
    lines = []
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            if value:
                lines.append(format_report(value, indent + 2))
        elif is_nonstr_iter(value) and value and all(
            isinstance(item, dict) for item in value
        ):
            lines.append(f"{pad}{key}:")
            for item in value:
                block = format_report(item, indent + 4).splitlines()
                block[0] = f"{pad}  - {block[0].lstrip()}"
                lines.extend(block)
        else:
            lines.append(f"{pad}{key}: {_format_value(value)}")
    return "\n".join(lines)


def _format_value(value):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return str(value).lower()
    if is_nonstr_iter(value):
        return "[" + ", ".join(_format_value(item) for item in value) + "]"
    return str(value)
