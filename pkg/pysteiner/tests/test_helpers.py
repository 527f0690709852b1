"""
Tests for the helper functions and decorators.
"""
import os

import pytest
from pysteiner import (
    JumpingPair,
    fiber_dual,
    hyperplane_kernels,
    hyperplane_profile,
    transform_at,
)
from pysteiner.bundle import ReducedBundle
from pysteiner.exceptions import (
    SteinerComparisonFailure,
    SteinerFormatError,
    SteinerInvalidInput,
)
from pysteiner.helpers import (
    SteinerTempFile,
    fmt_docstring,
    format_report,
    is_nonstr_iter,
    requires_jumping_rank,
    triplet_kind,
)
from pysteiner.helpers.testing import check_pairs_equal


def test_fmt_docstring():
    """
    Markers in braces are replaced by the shared parameter text.
    """

    @fmt_docstring
    def sample(pres):
        """
        {pres}
        """

    assert "pres : SteinerPresentation" in sample.__doc__
    assert "{pres}" not in sample.__doc__


def test_requires_jumping_rank():
    """
    The wrapped function only runs for s at least the minimum.
    """

    @requires_jumping_rank(3)
    def rows(red):
        "Return s."
        return red.s

    assert rows.__doc__ == "Return s."
    three_rows = ReducedBundle([[[1, 0], [0, 0], [0, 0]]], 5)
    assert rows(three_rows) == 3
    with pytest.raises(SteinerInvalidInput, match="rows needs s >= 3, got s = 2."):
        rows(ReducedBundle([[[1, 0], [0, 0]]], 5))


@pytest.mark.parametrize(
    "description,message",
    [
        ({}, "No triplet given"),
        ({"p1": [1, 1], "veronese": True}, "Too many triplets given: p1, veronese"),
        ([["p1", [1, 1]]], "must be a JSON object"),
    ],
)
def test_triplet_kind_errors(description, message):
    """
    A triplet names exactly one kind.
    """
    with pytest.raises(SteinerFormatError, match=message):
        triplet_kind(description)


def test_triplet_kind_tensor():
    """
    Extra keys don't count as kinds.
    """
    assert triplet_kind({"format": 1, "p": 5, "tensor": {}}) == "tensor"


def test_is_nonstr_iter():
    """
    Strings are iterable but don't count.
    """
    assert is_nonstr_iter({"a": 1})
    assert not is_nonstr_iter("a")
    assert not is_nonstr_iter(None)


def test_format_report():
    """
    Nested dictionaries are indented and lists of dictionaries get dashes.
    """
    data = {
        "case": "Scroll",
        "holds": True,
        "maximal": None,
        "counts": {"pairs": 2},
        "notes": [],
        "pairs": [{"v": [1, 0], "h": [0, 1]}, {"v": [0, 1], "h": [1, 0]}],
        "recovered": {},
    }
    assert format_report(data) == "\n".join(
        [
            "case: Scroll",
            "holds: true",
            "maximal: none",
            "counts:",
            "  pairs: 2",
            "notes: []",
            "pairs:",
            "  - v: [1, 0]",
            "    h: [0, 1]",
            "  - v: [0, 1]",
            "    h: [1, 0]",
            "recovered:",
        ]
    )


def test_steiner_temp_file():
    """
    The file exists inside the block and is removed afterwards.
    """
    with SteinerTempFile(prefix="test-", suffix=".triplet") as tmpfile:
        assert os.path.basename(tmpfile.name).startswith("test-")
        assert tmpfile.name.endswith(".triplet")
        with open(tmpfile.name, "w") as handle:
            handle.write("{}")
        assert tmpfile.read() == "{}"
    assert not os.path.exists(tmpfile.name)


def test_check_pairs_equal():
    """
    Equal loci pass in any order and different loci fail.
    """
    first = JumpingPair((1, 0), (1, 0), (1, 0))
    second = JumpingPair((0, 1), (0, 1), (0, 1))

    @check_pairs_equal
    def same():
        return [first, second], [second, first]

    @check_pairs_equal
    def different():
        return [first, second], [first]

    same()
    with pytest.raises(SteinerComparisonFailure, match="2 vs 1 pairs"):
        different()


@pytest.mark.parametrize(
    "func,text",
    [
        (hyperplane_kernels, "{v : v h^T in span}"),
        (hyperplane_profile, "{(0, 1): 1, (1, 0): 1, (1, 1): 1, (1, 2): 1}"),
        (transform_at, "{v h' : v h' in span}"),
        (fiber_dual, "{c in T* : sum_k c_k M_k u = 0}"),
    ],
)
def test_fmt_docstring_keeps_set_braces(func, text):
    """
    Doubled braces in the operation docstrings come out as single braces.
    """
    assert text in func.__doc__
    assert "{red}" not in func.__doc__
    assert "{{" not in func.__doc__
