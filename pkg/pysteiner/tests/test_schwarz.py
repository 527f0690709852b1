"""
Tests for the Schwarzenberger constructions and triplet specs.
"""
import numpy as np
import numpy.testing as npt
import pytest
from pysteiner import (
    TripletSpec,
    ab_pair_bound,
    is_steiner,
    reduced_summand,
    schwarz_ample_p1,
    schwarz_from_tensor,
    schwarz_p1,
    schwarz_scroll,
    schwarz_veronese,
)
from pysteiner.exceptions import (
    SteinerConditionError,
    SteinerFormatError,
    SteinerInvalidInput,
)

VALID_TENSOR = [[[2, 3]], [[1, 1]]]


@pytest.mark.parametrize("d_l,d_m", [(0, 1), (1, 1), (2, 2), (3, 2), (1, 4)])
def test_schwarz_p1_hankel_structure(d_l, d_m):
    """
    Matrix k has ones exactly on the antidiagonal i + j = k.
    """
    pres = schwarz_p1(d_l, d_m, 7)
    assert (pres.s, pres.t, pres.n) == (d_l + 1, d_l + d_m + 1, d_m)
    rows, cols = np.indices((d_l + 1, d_m + 1))
    for k, matrix in enumerate(pres.phi):
        npt.assert_equal(matrix, (rows + cols == k).astype(int))
    assert is_steiner(pres)


def test_schwarz_p1_rejects_degrees():
    """
    dL must be at least 0 and dM at least 1.
    """
    with pytest.raises(SteinerInvalidInput):
        schwarz_p1(-1, 2, 5)
    with pytest.raises(SteinerInvalidInput):
        schwarz_p1(2, 0, 5)


@pytest.mark.parametrize("a_list", [[1, 1], [2, 1], [2, 2], [3, 1], [1, 1, 1]])
def test_schwarz_scroll_dims(a_list):
    """
    Scrolls have s = 2, n + 1 = sum a_i and t = sum (a_i + 1).
    """
    pres = schwarz_scroll(a_list, 5)
    assert (pres.s, pres.n + 1, pres.t) == (2, sum(a_list), sum(a_list) + len(a_list))
    assert is_steiner(pres)
    assert reduced_summand(pres).kernel_dim == 0


@pytest.mark.parametrize("a_list", [[1, 1], [2, 1], [1, 1, 1], [3, 2]])
def test_schwarz_ample_p1_dims(a_list):
    """
    Split bundles on P^1 have n = 1, s = sum a_i and rank m.
    """
    pres = schwarz_ample_p1(a_list, 5)
    assert (pres.n, pres.s, pres.rank) == (1, sum(a_list), len(a_list))
    assert is_steiner(pres)


def test_scroll_and_ample_are_transposes():
    """
    Exchanging the roles of S and U turns a scroll into a split bundle.
    """
    scroll = schwarz_scroll([2, 1], 5)
    ample = schwarz_ample_p1([2, 1], 5)
    npt.assert_equal(ample.phi, scroll.phi.transpose(0, 2, 1))


@pytest.mark.parametrize("a_list", [[], [0, 1], [2, -1], [1.5]])
def test_schwarz_scroll_rejects_degrees(a_list):
    """
    The a_i are positive integers.
    """
    with pytest.raises(SteinerInvalidInput):
        schwarz_scroll(a_list, 5)
    with pytest.raises(SteinerInvalidInput):
        schwarz_ample_p1(a_list, 5)


def test_schwarz_veronese_spans_symmetric_matrices():
    """
    The six matrices span the whole space of symmetric 3 x 3 matrices.
    """
    red = reduced_summand(schwarz_veronese(5))
    assert (red.t0, red.kernel_dim) == (6, 0)
    for matrix in red.basis:
        npt.assert_equal(matrix, matrix.T)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize(
    "build",
    [
        lambda p: schwarz_p1(1, 1, p),
        lambda p: schwarz_p1(2, 2, p),
        lambda p: schwarz_p1(3, 2, p),
        lambda p: schwarz_scroll([2, 1], p),
        lambda p: schwarz_scroll([1, 1, 1], p),
        lambda p: schwarz_ample_p1([2, 1], p),
        schwarz_veronese,
    ],
)
def test_constructions_are_reduced_steiner(build, p):
    """
    Every construction is a reduced Steiner presentation over small primes.
    """
    pres = build(p)
    assert is_steiner(pres)
    assert reduced_summand(pres).kernel_dim == 0


def test_schwarz_from_tensor():
    """
    A table whose products never vanish gives a Steiner bundle.
    """
    pres = schwarz_from_tensor(1, 2, 2, VALID_TENSOR, 5)
    assert (pres.s, pres.t, pres.n) == (1, 2, 1)
    npt.assert_equal(pres.phi, VALID_TENSOR)


def test_schwarz_from_tensor_witness():
    """
    The first sigma killed by the multiplication is the witness.
    """
    with pytest.raises(SteinerConditionError) as error:
        schwarz_from_tensor(1, 2, 2, [[[0, 1]], [[0, 0]]], 5)
    assert error.value.witness == (1, 0)


def test_schwarz_from_tensor_shape():
    """
    The table must have shape (t, s, m).
    """
    with pytest.raises(SteinerInvalidInput, match=r"expected \(2, 2, 1\)"):
        schwarz_from_tensor(2, 1, 2, VALID_TENSOR, 5)


@pytest.mark.parametrize(
    "document,dims",
    [
        ({"p": 5, "triplet": {"p1": [2, 2]}}, (3, 5, 2)),
        ({"format": 1, "p": 7, "scroll": [2, 1]}, (2, 5, 2)),
        ({"p": 3, "ample": [2, 1]}, (3, 5, 1)),
        ({"p": 3, "veronese": True}, (3, 6, 2)),
        (
            {"p": 5, "tensor": {"s": 1, "m": 2, "t": 2, "c": VALID_TENSOR}},
            (1, 2, 1),
        ),
    ],
)
def test_triplet_spec_dims_match_build(document, dims):
    """
    The advertised (s, t, n) are those of the built presentation.
    """
    spec = TripletSpec.from_dict(document)
    assert spec.dims == dims
    pres = spec.build()
    assert (pres.s, pres.t, pres.n) == dims
    assert pres.field.p == document["p"]


def test_triplet_spec_to_dict():
    """
    The document written by a spec reads back to the same spec.
    """
    spec = TripletSpec("scroll", [2, 1], 5)
    document = spec.to_dict()
    assert document == {"format": 1, "p": 5, "triplet": {"scroll": [2, 1]}}
    assert repr(TripletSpec.from_dict(document)) == repr(spec)


@pytest.mark.parametrize(
    "document",
    [
        {"p1": [2, 2]},
        {"p": 5, "format": 2, "p1": [2, 2]},
        {"p": 4, "p1": [2, 2]},
        {"p": 5, "p1": [2]},
        {"p": 5, "veronese": False},
        {"p": 5, "tensor": {"s": 1}},
        {"p": 5, "scroll": [2, 0]},
        {"p": 5},
        {"p": 5, "p1": [1, 1], "scroll": [1]},
        [5],
    ],
)
def test_triplet_spec_rejects_documents(document):
    """
    Malformed triplet documents are refused before anything is built.
    """
    with pytest.raises(SteinerInvalidInput):
        TripletSpec.from_dict(document)


def test_triplet_spec_unknown_kind():
    """
    Specs made directly still check their kind.
    """
    with pytest.raises(SteinerFormatError, match="Unknown triplet kind"):
        TripletSpec("grassmannian", [2, 4], 5)


@pytest.mark.parametrize(
    "document,field",
    [
        ({"p": 5, "p1": ["a", 2]}, r"triplet\.p1\[0\]"),
        ({"p": 5, "p1": [2.5, 2]}, r"triplet\.p1\[0\]"),
        ({"p": 5, "p1": [2, True]}, r"triplet\.p1\[1\]"),
        ({"p": 5, "scroll": [2, "1"]}, r"triplet\.scroll\[1\]"),
        ({"p": 5, "ample": [None]}, r"triplet\.ample\[0\]"),
        (
            {"p": 5, "tensor": {"s": "1", "m": 2, "t": 2, "c": VALID_TENSOR}},
            r"triplet\.tensor\.s",
        ),
        (
            {"p": 5, "tensor": {"s": 1, "m": 2, "t": 2, "c": [[[2, "x"]], [[1, 1]]]}},
            r"triplet\.tensor\.c\[0\]\[0\]\[1\]",
        ),
        (
            {"p": 5, "tensor": {"s": 1, "m": 2, "t": 2, "c": [[[2, 3]]]}},
            r"triplet\.tensor\.c must be a list of 2",
        ),
        (
            {"p": 5, "tensor": {"s": 1, "m": 2, "t": 2, "c": [[[2, 3.0]], [[1, 1]]]}},
            r"triplet\.tensor\.c\[0\]\[0\]\[1\]",
        ),
        ({"p": 5, "tensor": [1, 2, 2]}, "tensor needs an object"),
    ],
)
def test_triplet_spec_names_bad_field(document, field):
    """
    Values of the wrong type are refused with the name of the field.
    """
    with pytest.raises(SteinerFormatError, match=field):
        TripletSpec.from_dict(document)


@pytest.mark.parametrize(
    "pres,a,b",
    [
        (schwarz_p1(2, 2, 5), 1, 1),
        (schwarz_p1(3, 1, 5), 1, 1),
        (schwarz_scroll([2, 1], 5), 1, 2),
        (schwarz_scroll([1, 1, 1], 5), 1, 3),
        (schwarz_ample_p1([2, 1], 5), 2, 1),
        (schwarz_ample_p1([1, 1, 1], 5), 3, 1),
    ],
)
def test_ab_pair_bound_equality(pres, a, b):
    """
    Curves, scrolls and split bundles on P^1 reach the bound exactly.
    """
    assert pres.t == ab_pair_bound(pres.s, pres.n, a, b)


def test_ab_pair_bound_veronese():
    """
    The Veronese surface lies strictly above the bound.
    """
    pres = schwarz_veronese(5)
    assert pres.t > ab_pair_bound(pres.s, pres.n, 1, 1)
