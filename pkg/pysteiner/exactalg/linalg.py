"""
Dense linear algebra over F_p on int64 numpy arrays.

Matrices are plain 2D :class:`numpy.ndarray` objects with entries in [0, p).
Subspaces are kept as :class:`Subspace` objects whose basis is the reduced row
echelon form of any spanning set, which makes equality of subspaces a
comparison of arrays.
"""
import numpy as np
from pysteiner.exceptions import SteinerInvalidInput


def as_matrix(data, field, cols=None):
    """
    Convert data into a 2D int64 array reduced modulo p.

    Parameters
    ----------
    data : array-like
        A matrix, or a possibly empty list of rows.
    field : FieldCtx
        The ground field.
    cols : int or None
        Number of columns. Needed to give an empty list of rows a shape.

    Returns
    -------
    matrix : 2d-array

    Examples
    --------

    >>> from pysteiner.exactalg.field import FieldCtx
    >>> as_matrix([], FieldCtx(3), cols=4).shape
    (0, 4)
    >>> as_matrix([[4, 5]], FieldCtx(3))
    array([[1, 2]])
    """
    matrix = field.array(data)
    if matrix.size == 0 and cols is not None:
        return matrix.reshape(0, cols)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    if matrix.ndim != 2:
        raise SteinerInvalidInput(f"Expected a 2D matrix, got shape {matrix.shape}.")
    if cols is not None and matrix.shape[1] != cols:
        raise SteinerInvalidInput(
            f"Expected {cols} columns, got a matrix of shape {matrix.shape}."
        )
    return matrix


def rref(matrix, field):
    """
    Reduced row echelon form over F_p.

    Parameters
    ----------
    matrix : 2d-array
        The input matrix. It is not modified.
    field : FieldCtx
        The ground field.

    Returns
    -------
    rank : int
        Number of nonzero rows of the echelon form.
    echelon : 2d-array
        The unique reduced row echelon form, same shape as the input.
    pivots : list of int
        Pivot column of each nonzero row.

    Examples
    --------

    >>> from pysteiner.exactalg.field import FieldCtx
    >>> rank, echelon, pivots = rref([[1, 2], [2, 4]], FieldCtx(5))
    >>> rank, pivots
    (1, [0])
    >>> echelon
    array([[1, 2],
           [0, 0]])
    """
    p = field.p
    echelon = as_matrix(matrix, field).copy()
    nrows, ncols = echelon.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        candidates = np.flatnonzero(echelon[row:, col])
        if candidates.size == 0:
            continue
        pivot_row = row + candidates[0]
        if pivot_row != row:
            echelon[[row, pivot_row]] = echelon[[pivot_row, row]]
        echelon[row] = (echelon[row] * field.inv(echelon[row, col])) % p
        factors = echelon[:, col].copy()
        factors[row] = 0
        echelon = (echelon - np.outer(factors, echelon[row])) % p
        pivots.append(col)
        row += 1
    return row, echelon, pivots


def rank(matrix, field):
    """
    Rank of a matrix over F_p.

    >>> from pysteiner.exactalg.field import FieldCtx
    >>> rank([[1, 1], [1, 2]], FieldCtx(3))
    2
    """
    return rref(matrix, field)[0]


def transpose(matrix, field):
    "Transpose of a matrix, reduced modulo p."
    return as_matrix(matrix, field).T.copy()


def kernel(matrix, field, cols=None):
    """
    Null space {x : matrix @ x = 0} as a :class:`Subspace`.

    Parameters
    ----------
    matrix : 2d-array
        The matrix. May have zero rows when ``cols`` is given.
    field : FieldCtx
        The ground field.
    cols : int or None
        Number of columns, required only for matrices with no rows.

    Returns
    -------
    subspace : Subspace

    Examples
    --------

    >>> from pysteiner.exactalg.field import FieldCtx
    >>> kernel([[1, 1, 0]], FieldCtx(3)).basis
    array([[1, 2, 0],
           [0, 0, 1]])
    >>> kernel([], FieldCtx(3), cols=2).dim
    2
    """
    matrix = as_matrix(matrix, field, cols=cols)
    ncols = matrix.shape[1]
    rnk, echelon, pivots = rref(matrix, field)
    pivot_set = set(pivots)
    free = [col for col in range(ncols) if col not in pivot_set]
    vectors = np.zeros((len(free), ncols), dtype=np.int64)
    for i, col in enumerate(free):
        vectors[i, col] = 1
        for row in range(rnk):
            vectors[i, pivots[row]] = -echelon[row, col]
    return Subspace(vectors, field, ambient_dim=ncols)


def solve(matrix, rhs, field):
    """
    One solution x of matrix @ x = rhs, or ``None`` if the system is
    inconsistent.

    Free variables are set to zero.

    Examples
    --------

    >>> from pysteiner.exactalg.field import FieldCtx
    >>> solve([[1, 1], [0, 1]], [2, 1], FieldCtx(5))
    array([1, 1])
    >>> solve([[1, 1], [1, 1]], [0, 1], FieldCtx(5)) is None
    True
    """
    matrix = as_matrix(matrix, field)
    rhs = field.array(rhs).reshape(-1, 1)
    if rhs.shape[0] != matrix.shape[0]:
        raise SteinerInvalidInput(
            f"Right-hand side has {rhs.shape[0]} entries for {matrix.shape[0]} rows."
        )
    ncols = matrix.shape[1]
    rnk, echelon, pivots = rref(np.hstack([matrix, rhs]), field)
    if pivots and pivots[-1] == ncols:
        return None
    solution = np.zeros(ncols, dtype=np.int64)
    for row in range(rnk):
        solution[pivots[row]] = echelon[row, ncols]
    return solution


class Subspace:
    """
    A linear subspace of F_p**ambient_dim.

    The basis is stored in reduced row echelon form, so two subspaces are
    equal exactly when their bases are equal.

    Parameters
    ----------
    vectors : array-like
        Any spanning set, one vector per row. Dependencies are removed.
    field : FieldCtx
        The ground field.
    ambient_dim : int or None
        Dimension of the ambient space. Required when ``vectors`` is empty.

    Examples
    --------

    >>> from pysteiner.exactalg.field import FieldCtx
    >>> plane = Subspace([[2, 0, 0], [1, 1, 0], [0, 3, 0]], FieldCtx(5))
    >>> plane.dim
    2
    >>> plane.contains([4, 1, 0]), plane.contains([0, 0, 1])
    (True, False)
    """

    def __init__(self, vectors, field, ambient_dim=None):
        vectors = as_matrix(vectors, field, cols=ambient_dim)
        rnk, echelon, pivots = rref(vectors, field)
        self._field = field
        self._basis = echelon[:rnk]
        self._pivots = tuple(pivots)
        self._basis.setflags(write=False)

    @property
    def field(self):
        "The ground field."
        return self._field

    @property
    def ambient_dim(self):
        "Dimension of the ambient vector space."
        return self._basis.shape[1]

    @property
    def dim(self):
        "Dimension of the subspace."
        return self._basis.shape[0]

    @property
    def basis(self):
        "Basis vectors as rows, in reduced row echelon form."
        return self._basis

    @property
    def pivots(self):
        "Pivot columns of the echelon basis."
        return self._pivots

    def coordinates(self, vector):
        """
        Coordinates of a vector in the echelon basis, or ``None`` if the
        vector is not in the subspace.
        """
        vector = self._field.array(vector).reshape(-1)
        if vector.shape[0] != self.ambient_dim:
            raise SteinerInvalidInput(
                f"Vector of length {vector.shape[0]} in a space of dimension "
                f"{self.ambient_dim}."
            )
        coords = vector[list(self._pivots)]
        if not np.array_equal(self._field.matmul(coords, self._basis), vector):
            return None
        return coords

    def contains(self, vector):
        "Whether a vector lies in the subspace."
        return self.coordinates(vector) is not None

    def annihilator(self):
        """
        The subspace of vectors y with y . x = 0 for every x in this
        subspace.
        """
        return kernel(self._basis, self._field, cols=self.ambient_dim)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.field == self.field
            and np.array_equal(other.basis, self.basis)
            and other.ambient_dim == self.ambient_dim
        )

    def __repr__(self):
        return (
            f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, "
            f"p={self._field.p})"
        )
