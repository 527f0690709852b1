"""
Functions, classes, decorators, and context managers shared by the PySteiner
operations.
"""
from pysteiner.helpers.decorators import fmt_docstring, requires_jumping_rank
from pysteiner.helpers.tempfile import SteinerTempFile
from pysteiner.helpers.utils import (
    format_report,
    is_nonstr_iter,
    triplet_kind,
)
