"""
schwarz - Build Steiner bundles from triplets (X, L, M).

The bundle of a triplet is the dual of the multiplication map
H0(L) x H0(M) -> H0(L x M) on P(H0(M)*). All constructors use monomial
bases: x^0..x^d on P^1, and x_0, x_1, x_2 with degree-lex quadrics on P^2.
"""
import itertools
import logging

import numpy as np
from pysteiner.bundle import SteinerPresentation
from pysteiner.exactalg import FieldCtx
from pysteiner.exceptions import (
    SteinerConditionError,
    SteinerFormatError,
    SteinerInvalidInput,
)
from pysteiner.helpers import fmt_docstring, triplet_kind
from pysteiner.src.steiner import is_steiner

logger = logging.getLogger(__name__)


def _as_field(field):
    return field if isinstance(field, FieldCtx) else FieldCtx(field)


def _check_degrees(a_list, name):
    if len(a_list) == 0:
        raise SteinerInvalidInput(f"{name} needs at least one integer a_i.")
    for value in a_list:
        if (
            isinstance(value, bool)
            or not isinstance(value, (int, np.integer))
            or value < 1
        ):
            raise SteinerInvalidInput(
                f"{name} needs integers a_i >= 1, got {list(a_list)}."
            )
    return [int(value) for value in a_list]


def _document_int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SteinerFormatError(f"{where} must be an integer, got {value!r}.")
    return value


def _check_table(table, shape, where):
    # nested lists of exactly the given shape with integer leaves
    if not shape:
        _document_int(table, where)
        return
    if not isinstance(table, (list, tuple)) or len(table) != shape[0]:
        raise SteinerFormatError(
            f"{where} must be a list of {shape[0]} entries, got {table!r}."
        )
    for i, item in enumerate(table):
        _check_table(item, shape[1:], f"{where}[{i}]")


@fmt_docstring
def schwarz_p1(dL, dM, field):  # pylint: disable=invalid-name
    """
    Schwarzenberger bundle of the triplet (P^1, O(dL), O(dM)).

    Matrix k has a 1 at (i, j) whenever i + j = k, the multiplication table
    x^i x^j = x^(i+j). The result lives on P^dM with s = dL + 1 and
    t = dL + dM + 1, so its rank is dM.

    Parameters
    ----------
    dL : int
        Degree of L (at least 0).
    dM : int
        Degree of M (at least 1).
    {field}

    Returns
    -------
    pres : SteinerPresentation

    Examples
    --------

    >>> pres = schwarz_p1(1, 1, 5)
    >>> pres.phi.tolist()
    [[[1, 0], [0, 0]], [[0, 1], [1, 0]], [[0, 0], [0, 1]]]
    """
    if dL < 0 or dM < 1:
        raise SteinerInvalidInput(f"Need dL >= 0 and dM >= 1, got ({dL}, {dM}).")
    field = _as_field(field)
    rows, cols = np.indices((dL + 1, dM + 1))
    phi = np.zeros((dL + dM + 1, dL + 1, dM + 1), dtype=np.int64)
    phi[rows + cols, rows, cols] = 1
    return SteinerPresentation(phi, field)


def _offsets(sizes):
    return np.concatenate([[0], np.cumsum(sizes)[:-1]]).astype(int)


@fmt_docstring
def schwarz_scroll(a_list, field):
    """
    Schwarzenberger bundle of a smooth rational normal scroll S(a_1..a_m).

    Uses the triplet (P^1, O(1), E(-1)) with E = O(a_1) + ... + O(a_m):
    S = H0(O(1)), H0(M) = sum of H0(O(a_i - 1)) and T = sum of H0(O(a_i)),
    multiplied block by block. The result has s = 2, n + 1 = sum of a_i
    and t = sum of (a_i + 1).

    Parameters
    ----------
    a_list : list of int
        The degrees a_i, each at least 1.
    {field}

    Returns
    -------
    pres : SteinerPresentation

    Examples
    --------

    >>> schwarz_scroll([2, 1], 5)
    SteinerPresentation(p=5, n=2, s=2, t=5)
    >>> schwarz_scroll([3], 5) == schwarz_p1(1, 2, 5)
    True
    """
    a_list = _check_degrees(a_list, "schwarz_scroll")
    field = _as_field(field)
    col_offsets = _offsets(a_list)
    t_offsets = _offsets([a + 1 for a in a_list])
    phi = np.zeros((sum(a_list) + len(a_list), 2, sum(a_list)), dtype=np.int64)
    for a_i, col_off, t_off in zip(a_list, col_offsets, t_offsets):
        for i, j in itertools.product(range(2), range(a_i)):
            phi[t_off + i + j, i, col_off + j] = 1
    return SteinerPresentation(phi, field)


@fmt_docstring
def schwarz_ample_p1(a_list, field):
    """
    Schwarzenberger bundle of a split ample bundle F = O(a_1) + ... + O(a_m)
    on P^1.

    Uses the triplet (P^1, F(-1), O(1)): S = sum of H0(O(a_i - 1)),
    H0(M) = H0(O(1)) and T = sum of H0(O(a_i)). The result lives on P^1 with
    s = sum of a_i and rank m. It is the scroll construction with the roles
    of S and U exchanged.

    Parameters
    ----------
    a_list : list of int
        The degrees a_i, each at least 1.
    {field}

    Returns
    -------
    pres : SteinerPresentation

    Examples
    --------

    >>> schwarz_ample_p1([2, 1], 5)
    SteinerPresentation(p=5, n=1, s=3, t=5)
    >>> schwarz_ample_p1([3], 5) == schwarz_p1(2, 1, 5)
    True
    """
    a_list = _check_degrees(a_list, "schwarz_ample_p1")
    field = _as_field(field)
    row_offsets = _offsets(a_list)
    t_offsets = _offsets([a + 1 for a in a_list])
    phi = np.zeros((sum(a_list) + len(a_list), sum(a_list), 2), dtype=np.int64)
    for a_i, row_off, t_off in zip(a_list, row_offsets, t_offsets):
        for i, j in itertools.product(range(a_i), range(2)):
            phi[t_off + i + j, row_off + i, j] = 1
    return SteinerPresentation(phi, field)


# degree-lex quadratic monomials x_i x_j with i <= j
VERONESE_MONOMIALS = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]


@fmt_docstring
def schwarz_veronese(field):
    """
    Schwarzenberger bundle of the Veronese surface, S^2(T_P2(-1)).

    The triplet is (P^2, O(1), O(1)); the six matrices span exactly the
    symmetric 3 x 3 matrices and (s, t, n) = (3, 6, 2).

    Parameters
    ----------
    {field}

    Returns
    -------
    pres : SteinerPresentation

    Examples
    --------

    >>> pres = schwarz_veronese(3)
    >>> pres
    SteinerPresentation(p=3, n=2, s=3, t=6)
    >>> all((matrix == matrix.T).all() for matrix in pres.phi)
    True
    """
    field = _as_field(field)
    phi = np.zeros((6, 3, 3), dtype=np.int64)
    for k, (i, j) in enumerate(VERONESE_MONOMIALS):
        phi[k, i, j] = phi[k, j, i] = 1
    return SteinerPresentation(phi, field)


@fmt_docstring
def schwarz_from_tensor(s, m, t, coefficients, field, budget=None):
    """
    Steiner bundle dual to a raw multiplication map H0(L) x H0(M) -> T.

    Entry ``coefficients[k][i][j]`` is the coefficient of e_k in the product
    of the i-th basis vector of H0(L) with the j-th basis vector of H0(M).
    For every nonzero sigma in H0(M) the map l -> mu(l x sigma) must be
    injective. This is checked over every point of P(H0(M)).

    Parameters
    ----------
    s : int
        Dimension of H0(L).
    m : int
        Dimension of H0(M), so the bundle lives on P^(m-1).
    t : int
        Dimension of T.
    coefficients : array-like
        The t x s x m multiplication table.
    {field}
    {budget}

    Returns
    -------
    pres : SteinerPresentation

    Raises
    ------
    SteinerInvalidInput
        If the table doesn't have shape (t, s, m).
    SteinerConditionError
        If multiplication by some sigma is not injective. The first such
        sigma is kept in the ``witness`` attribute.
    """
    field = _as_field(field)
    table = np.asarray(coefficients)
    if table.shape != (t, s, m):
        raise SteinerInvalidInput(
            f"Multiplication table has shape {table.shape}, expected ({t}, {s}, {m})."
        )
    pres = SteinerPresentation(table.astype(np.int64) % field.p, field)
    check = is_steiner(pres, budget=budget)
    if not check:
        raise SteinerConditionError(
            f"Multiplication by sigma = {check.witness} is not injective on H0(L).",
            witness=check.witness,
        )
    return pres


class TripletSpec:
    """
    A tagged description of a triplet (X, L, M) over F_p.

    Parameters
    ----------
    kind : str
        One of ``'p1'``, ``'scroll'``, ``'ample'``, ``'veronese'`` or
        ``'tensor'``.
    params : list or dict or bool
        ``[dL, dM]`` for ``'p1'``, the list of a_i for ``'scroll'`` and
        ``'ample'``, ``True`` for ``'veronese'`` and a dictionary with keys
        ``s``, ``m``, ``t`` and ``c`` for ``'tensor'``.
    field : FieldCtx or int
        The ground field, or its modulus.

    Examples
    --------

    >>> spec = TripletSpec.from_dict({"p": 5, "triplet": {"p1": [2, 2]}})
    >>> spec
    TripletSpec(kind='p1', params=[2, 2], p=5)
    >>> spec.dims
    (3, 5, 2)
    >>> spec.build() == schwarz_p1(2, 2, 5)
    True
    """

    def __init__(self, kind, params, field):
        self.kind = kind
        self.params = params
        self.field = _as_field(field)
        self._validate()

    def _validate(self):
        where = f"triplet.{self.kind}"
        if self.kind == "p1":
            if not isinstance(self.params, (list, tuple)) or len(self.params) != 2:
                raise SteinerFormatError(f"p1 needs [dL, dM], got {self.params!r}.")
            for i, value in enumerate(self.params):
                _document_int(value, f"{where}[{i}]")
        elif self.kind in ("scroll", "ample"):
            if not isinstance(self.params, (list, tuple)):
                raise SteinerFormatError(
                    f"{self.kind} needs a list of integers, got {self.params!r}."
                )
            for i, value in enumerate(self.params):
                _document_int(value, f"{where}[{i}]")
            _check_degrees(self.params, self.kind)
        elif self.kind == "veronese":
            if self.params is not True:
                raise SteinerFormatError("veronese must be given as true.")
        elif self.kind == "tensor":
            if not isinstance(self.params, dict):
                raise SteinerFormatError(
                    f"tensor needs an object with s, m, t and c, got {self.params!r}."
                )
            missing = [key for key in "smtc" if key not in self.params]
            if missing:
                raise SteinerFormatError(
                    f"tensor needs the keys s, m, t and c; missing {missing}."
                )
            shape = [_document_int(self.params[key], f"{where}.{key}") for key in "tsm"]
            if min(shape) < 1:
                raise SteinerFormatError(
                    f"{where} needs s, m and t of at least 1, got {self.params!r}."
                )
            _check_table(self.params["c"], shape, f"{where}.c")
        else:
            raise SteinerFormatError(f"Unknown triplet kind '{self.kind}'.")

    @classmethod
    def from_dict(cls, document):
        """
        Build a TripletSpec from a parsed triplet document.

        Accepts both ``{"p": 5, "triplet": {"scroll": [2, 1]}}`` and the
        flat form ``{"p": 5, "scroll": [2, 1]}``.
        """
        if not isinstance(document, dict) or "p" not in document:
            raise SteinerFormatError("A triplet document needs the field 'p'.")
        if "format" in document and document["format"] != 1:
            raise SteinerFormatError(
                f"Unsupported triplet format {document['format']!r}, expected 1."
            )
        description = document.get("triplet", document)
        kind = triplet_kind(description)
        try:
            field = FieldCtx(document["p"])
        except (SteinerInvalidInput, TypeError, ValueError) as err:
            raise SteinerFormatError(f"Invalid field 'p': {err}") from err
        return cls(kind, description[kind], field)

    @property
    def dims(self):
        """
        The induced (s, t, n).
        """
        if self.kind == "p1":
            d_l, d_m = self.params
            return (d_l + 1, d_l + d_m + 1, d_m)
        if self.kind == "scroll":
            return (2, sum(self.params) + len(self.params), sum(self.params) - 1)
        if self.kind == "ample":
            return (sum(self.params), sum(self.params) + len(self.params), 1)
        if self.kind == "veronese":
            return (3, 6, 2)
        return (self.params["s"], self.params["t"], self.params["m"] - 1)

    def build(self, budget=None):
        """
        Construct the Steiner presentation of the triplet.
        """
        logger.debug(
            "Building the %s triplet %r over F_%d", self.kind, self.params, self.field.p
        )
        if self.kind == "p1":
            return schwarz_p1(*self.params, self.field)
        if self.kind == "scroll":
            return schwarz_scroll(self.params, self.field)
        if self.kind == "ample":
            return schwarz_ample_p1(self.params, self.field)
        if self.kind == "veronese":
            return schwarz_veronese(self.field)
        tensor = self.params
        return schwarz_from_tensor(
            tensor["s"], tensor["m"], tensor["t"], tensor["c"], self.field, budget
        )

    def to_dict(self):
        "The triplet document of this spec."
        return {"format": 1, "p": self.field.p, "triplet": {self.kind: self.params}}

    def __repr__(self):
        return (
            f"TripletSpec(kind={self.kind!r}, params={self.params!r}, "
            f"p={self.field.p})"
        )
