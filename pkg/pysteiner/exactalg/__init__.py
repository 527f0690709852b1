# pylint: disable=missing-docstring
#
# Exact linear algebra over prime fields.
#
# Everything above this layer works with int64 numpy arrays reduced modulo p
# and with Subspace objects kept in reduced row echelon form.

from pysteiner.exactalg.conversion import (
    as_matrix_stack,
    flatten_stack,
    outer,
    to_nested_list,
    to_tuple,
    unflatten_rows,
)
from pysteiner.exactalg.field import (
    FieldCtx,
    check_budget,
    normalize,
    projective_points,
    projective_points_array,
)
from pysteiner.exactalg.linalg import (
    Subspace,
    as_matrix,
    kernel,
    rank,
    rref,
    solve,
    transpose,
)
