"""
Functions to move between stacks of matrices, flat vectors and plain Python
values.
"""
import numpy as np
from pysteiner.exceptions import SteinerInvalidInput


def as_matrix_stack(data, field, shape=None):
    """
    Convert a list of equally sized matrices into a 3D int64 array.

    Parameters
    ----------
    data : array-like
        A sequence of matrices, indexed as ``data[k][i][j]``.
    field : FieldCtx
        The ground field. Entries are reduced modulo p.
    shape : tuple or None
        The expected ``(rows, cols)`` of each matrix. Required when ``data``
        is empty.

    Returns
    -------
    stack : 3d-array
        Array of shape ``(len(data), rows, cols)``.

    Raises
    ------
    SteinerInvalidInput
        If the matrices are ragged or don't have the expected shape.

    Examples
    --------

    >>> from pysteiner.exactalg.field import FieldCtx
    >>> as_matrix_stack([[[1, 6]], [[0, 2]]], FieldCtx(5)).shape
    (2, 1, 2)
    >>> as_matrix_stack([], FieldCtx(5), shape=(2, 3)).shape
    (0, 2, 3)
    """
    try:
        stack = np.asarray(data, dtype=np.int64)
    except ValueError as err:
        raise SteinerInvalidInput(f"Matrices of unequal size: {err}") from err
    if stack.size == 0 and shape is not None:
        return stack.reshape((0,) + tuple(shape))
    if stack.ndim != 3:
        raise SteinerInvalidInput(
            f"Expected a sequence of matrices, got an array of shape {stack.shape}."
        )
    if shape is not None and stack.shape[1:] != tuple(shape):
        raise SteinerInvalidInput(
            f"Expected matrices of shape {tuple(shape)}, got {stack.shape[1:]}."
        )
    return stack % field.p


def flatten_stack(stack):
    """
    Flatten every matrix of a stack into a row, row-major.

    >>> flatten_stack(np.arange(8).reshape(2, 2, 2))
    array([[0, 1, 2, 3],
           [4, 5, 6, 7]])
    """
    return stack.reshape(stack.shape[0], int(np.prod(stack.shape[1:])))


def unflatten_rows(rows, shape):
    """
    Inverse of :func:`flatten_stack`.

    >>> unflatten_rows(np.arange(4).reshape(1, 4), (2, 2))
    array([[[0, 1],
            [2, 3]]])
    """
    return rows.reshape((rows.shape[0],) + tuple(shape))


def outer(vec_v, vec_h, field):
    """
    The rank-1 matrix with entries v_i * h_j, reduced modulo p.

    >>> from pysteiner.exactalg.field import FieldCtx
    >>> outer([1, 2], [1, 3], FieldCtx(5))
    array([[1, 3],
           [2, 1]])
    """
    return np.outer(field.array(vec_v), field.array(vec_h)) % field.p


def to_tuple(vector):
    """
    Plain tuple of Python ints, handy as a dictionary key or for sorting.

    >>> to_tuple(np.array([0, 1, 4]))
    (0, 1, 4)
    """
    return tuple(int(x) for x in np.asarray(vector).reshape(-1))


def to_nested_list(array):
    """
    Nested lists of Python ints, ready for JSON serialization.

    >>> to_nested_list(np.eye(2, dtype=np.int64))
    [[1, 0], [0, 1]]
    """
    return np.asarray(array).astype(int).tolist()
