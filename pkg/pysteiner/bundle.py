"""
Define the SteinerPresentation and ReducedBundle classes that hold a Steiner
bundle as a space of matrices.

A Steiner bundle F on P^n with resolution 0 -> S(-1) -> T -> F -> 0 is stored
through the linear map phi: T* -> Hom(U, S*), with U the (n+1)-dimensional
space whose projectivization is P^n. Matrix ``M_k = phi(e_k*)`` has s rows
(a basis of S*) and n+1 columns (a basis u_0..u_n of U).
"""
import logging

import numpy as np
import xarray as xr
from pysteiner.exactalg import (
    FieldCtx,
    Subspace,
    as_matrix_stack,
    flatten_stack,
    kernel,
    unflatten_rows,
)
from pysteiner.exceptions import SteinerInvalidInput

logger = logging.getLogger(__name__)


class SteinerPresentation:
    """
    A Steiner bundle given by t matrices of size s x (n+1) over F_p.

    Entries must already lie in [0, p). The Steiner condition itself is not
    checked here, use :func:`pysteiner.is_steiner` for that.

    Parameters
    ----------
    phi : array-like
        The matrices ``phi[k][i][j]``, one per basis vector of T*.
    field : FieldCtx or int
        The ground field, or its modulus.

    Examples
    --------

    >>> pres = SteinerPresentation(
    ...     [[[1, 0], [0, 0]], [[0, 1], [1, 0]], [[0, 0], [0, 1]]], 5
    ... )
    >>> pres
    SteinerPresentation(p=5, n=1, s=2, t=3)
    >>> pres.evaluation([1, 0])
    array([[1, 0, 0],
           [0, 1, 0]])
    """

    def __init__(self, phi, field):
        if not isinstance(field, FieldCtx):
            field = FieldCtx(field)
        raw = np.asarray(phi)
        if raw.ndim != 3 or raw.shape[0] == 0:
            raise SteinerInvalidInput(
                f"phi must be a non-empty list of matrices, got shape {raw.shape}."
            )
        bad = np.argwhere((raw < 0) | (raw >= field.p))
        if bad.size:
            k, i, j = (int(x) for x in bad[0])
            raise SteinerInvalidInput(
                f"Entry phi[{k}][{i}][{j}] = {raw[k, i, j]} is outside [0, {field.p})."
            )
        self._field = field
        self._phi = as_matrix_stack(raw, field)
        self._phi.setflags(write=False)
        self.info = {}
        t, s, ncols = self._phi.shape
        if s < 1 or ncols < 2:
            raise SteinerInvalidInput(
                f"Need s >= 1 and n >= 1, got s={s}, n={ncols - 1}."
            )
        if t < s + ncols - 1:
            raise SteinerInvalidInput(
                f"A Steiner bundle needs t >= s + n, got t={t}, s={s}, n={ncols - 1}."
            )

    @property
    def field(self):
        "The ground field."
        return self._field

    @property
    def phi(self):
        "Read-only array of shape (t, s, n+1)."
        return self._phi

    @property
    def t(self):
        "Dimension of T."
        return self._phi.shape[0]

    @property
    def s(self):
        "Dimension of S."
        return self._phi.shape[1]

    @property
    def n(self):
        "Dimension of the projective space."
        return self._phi.shape[2] - 1

    @property
    def rank(self):
        "Rank t - s of the bundle."
        return self.t - self.s

    def flattened(self):
        """
        The t x s(n+1) matrix whose rows are the row-major flattenings of
        the matrices.
        """
        return flatten_stack(self._phi)

    def evaluation(self, point):
        """
        The s x t matrix [M_0 u | ... | M_{t-1} u] at a vector u of U.
        """
        point = self._field.array(point).reshape(-1)
        if point.shape[0] != self.n + 1:
            raise SteinerInvalidInput(
                f"Point of length {point.shape[0]} in a space of "
                f"dimension {self.n + 1}."
            )
        return self._field.matmul(self._phi, point).T

    def __eq__(self, other):
        return (
            isinstance(other, SteinerPresentation)
            and other.field == self.field
            and np.array_equal(other.phi, self.phi)
        )

    def __repr__(self):
        return (
            f"SteinerPresentation(p={self.field.p}, n={self.n}, s={self.s}, t={self.t})"
        )

    def to_dataarray(self):
        """
        Export the matrices as an :class:`xarray.DataArray`.

        Dimensions are ``("k", "row", "col")`` and the attributes hold
        ``p``, ``n``, ``s`` and ``t``.
        """
        return xr.DataArray(
            np.array(self._phi),
            dims=("k", "row", "col"),
            coords={
                "k": np.arange(self.t),
                "row": np.arange(self.s),
                "col": np.arange(self.n + 1),
            },
            attrs={"p": self.field.p, "n": self.n, "s": self.s, "t": self.t},
            name="phi",
        )

    @classmethod
    def from_dataarray(cls, dataarray):
        """
        Build a presentation from a DataArray made by :meth:`to_dataarray`.
        """
        if "p" not in dataarray.attrs:
            raise SteinerInvalidInput("The DataArray has no 'p' attribute.")
        ordered = dataarray.transpose("k", "row", "col")
        return cls(ordered.values.astype(np.int64), dataarray.attrs["p"])


class ReducedBundle:
    """
    The reduced summand F_0 of a Steiner bundle.

    Holds a basis W_1..W_t0 of the image of phi inside Hom(U, S*). The basis
    is the reduced row echelon form of the flattened span, so two reduced
    bundles are equal exactly when their bases are equal.

    Parameters
    ----------
    matrices : array-like
        A spanning set of s x (n+1) matrices. Dependencies are removed.
    field : FieldCtx or int
        The ground field, or its modulus.
    kernel_dim : int
        Dimension of the kernel of phi in the source presentation.
    shape : tuple or None
        The ``(s, n+1)`` shape of the matrices, needed for an empty span.

    Examples
    --------

    >>> red = ReducedBundle(
    ...     [[[1, 0], [0, 0]], [[0, 1], [1, 0]], [[1, 0], [0, 0]]], 5
    ... )
    >>> red
    ReducedBundle(p=5, n=1, s=2, t0=2, kernel_dim=0)
    >>> red.contains([[2, 1], [1, 0]])
    True
    """

    def __init__(self, matrices, field, kernel_dim=0, shape=None):
        if not isinstance(field, FieldCtx):
            field = FieldCtx(field)
        stack = as_matrix_stack(matrices, field, shape=shape)
        self._field = field
        self._shape = stack.shape[1:]
        self._span = Subspace(
            flatten_stack(stack), field, ambient_dim=int(np.prod(self._shape))
        )
        self._basis = unflatten_rows(self._span.basis, self._shape)
        self._kernel_dim = int(kernel_dim)
        self._constraints = None
        if self._kernel_dim < 0:
            raise SteinerInvalidInput(f"kernel_dim must be >= 0, got {kernel_dim}.")

    @property
    def field(self):
        "The ground field."
        return self._field

    @property
    def s(self):
        "Dimension of S."
        return self._shape[0]

    @property
    def n(self):
        "Dimension of the projective space."
        return self._shape[1] - 1

    @property
    def t0(self):
        "Dimension of T_0, the span of the matrices."
        return self._span.dim

    @property
    def kernel_dim(self):
        "Dimension of the kernel of phi in the source presentation."
        return self._kernel_dim

    @property
    def basis(self):
        "The echelon basis as an array of shape (t0, s, n+1)."
        return self._basis

    @property
    def span(self):
        "The flattened span as a :class:`~pysteiner.exactalg.Subspace`."
        return self._span

    @property
    def bound(self):
        "Largest possible dimension t0 - n - s + 1 of the jumping locus."
        return self.t0 - self.n - self.s + 1

    def constraints(self):
        """
        Linear forms cutting out the span, as an array of shape
        (s(n+1) - t0, s, n+1).

        A matrix f lies in the span iff the sum of ``N * f`` vanishes for
        every constraint N.
        """
        if self._constraints is None:
            rows = self._span.annihilator().basis
            self._constraints = unflatten_rows(rows, self._shape)
        return self._constraints

    def coordinates(self, matrix):
        """
        Coordinates of a matrix in the echelon basis, or ``None`` when it is
        not in the span.
        """
        flat = self._field.array(matrix).reshape(-1)
        coords = self._span.coordinates(flat)
        if coords is None:
            return None
        return tuple(int(c) for c in coords)

    def contains(self, matrix):
        "Whether a matrix lies in the span."
        return self.coordinates(matrix) is not None

    def combination(self, coords):
        """
        The matrix sum(coords[k] * W_k).
        """
        coords = self._field.array(coords).reshape(-1)
        flat = self._field.matmul(coords, self._span.basis)
        return flat.reshape(self._shape)

    def point_fiber(self, vector):
        """
        The subspace {h in U* : v h^T in span} for a vector v of S*.
        """
        vector = self._field.array(vector).reshape(-1)
        system = self._field.matmul(self.constraints().transpose(0, 2, 1), vector)
        return kernel(system, self._field, cols=self.n + 1)

    def hyperplane_fiber(self, hyperplane):
        """
        The subspace {v in S* : v h^T in span} for a linear form h on U.
        """
        hyperplane = self._field.array(hyperplane).reshape(-1)
        system = self._field.matmul(self.constraints(), hyperplane)
        return kernel(system, self._field, cols=self.s)

    def as_presentation(self):
        """
        The basis matrices as a :class:`SteinerPresentation`.
        """
        return SteinerPresentation(self._basis, self._field)

    def __eq__(self, other):
        return (
            isinstance(other, ReducedBundle)
            and other.field == self.field
            and other._shape == self._shape
            and np.array_equal(other.basis, self.basis)
        )

    def __repr__(self):
        return (
            f"ReducedBundle(p={self.field.p}, n={self.n}, s={self.s}, "
            f"t0={self.t0}, kernel_dim={self.kernel_dim})"
        )
