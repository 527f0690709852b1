"""
Steiner accessor methods.
"""
import xarray as xr
from pysteiner.bundle import SteinerPresentation
from pysteiner.exactalg import FieldCtx
from pysteiner.exceptions import SteinerInvalidInput
from pysteiner.src.steiner import is_steiner, reduced_summand


@xr.register_dataarray_accessor("steiner")
class SteinerDataArrayAccessor:
    """
    This is the PySteiner extension for :class:`xarray.DataArray`.

    It works on arrays made by
    :meth:`pysteiner.SteinerPresentation.to_dataarray`:

    >>> from pysteiner import schwarz_p1
    >>> phi = schwarz_p1(1, 1, 5).to_dataarray()
    >>> phi.steiner.field
    FieldCtx(p=5)
    >>> phi.steiner.is_steiner()
    SteinerCheck(holds=True)
    >>> phi.steiner.reduced_summand()
    ReducedBundle(p=5, n=1, s=2, t0=3, kernel_dim=0)
    """

    def __init__(self, xarray_obj):
        self._obj = xarray_obj
        self._presentation = None

    @property
    def field(self):
        """
        The ground field, read from the ``p`` attribute.
        """
        if "p" not in self._obj.attrs:
            raise SteinerInvalidInput(
                "The DataArray has no 'p' attribute. Make it with "
                "SteinerPresentation.to_dataarray."
            )
        return FieldCtx(self._obj.attrs["p"])

    @property
    def presentation(self):
        """
        The array as a :class:`~pysteiner.SteinerPresentation`.
        """
        if self._presentation is None:
            self._presentation = SteinerPresentation.from_dataarray(self._obj)
        return self._presentation

    def is_steiner(self, budget=None):
        "Check the Steiner condition, see :func:`pysteiner.is_steiner`."
        return is_steiner(self.presentation, budget=budget)

    def reduced_summand(self, budget=None):
        "The reduced summand, see :func:`pysteiner.reduced_summand`."
        return reduced_summand(self.presentation, budget=budget)
