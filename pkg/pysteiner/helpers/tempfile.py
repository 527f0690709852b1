"""
Utilities for dealing with temporary file management.
"""
import os
from tempfile import NamedTemporaryFile


class SteinerTempFile:
    """
    Context manager for creating closed temporary files.

    This class does not return a file-like object. Pass ``tmpfile.name`` to
    the functions that read and write bundle documents instead.

    Parameters
    ----------
    prefix : str
        The temporary file name begins with the prefix.
    suffix : str
        The temporary file name ends with the suffix.

    Examples
    --------
    >>> with SteinerTempFile() as tmpfile:
    ...     with open(tmpfile.name, "w") as handle:
    ...         _ = handle.write('{"format": 1}\\n')
    ...     print(tmpfile.read())
    ...
    {"format": 1}
    <BLANKLINE>
    """

    def __init__(self, prefix="pysteiner-", suffix=".bundle"):
        args = dict(prefix=prefix, suffix=suffix, delete=False)
        with NamedTemporaryFile(**args) as tmpfile:
            self.name = tmpfile.name

    def __enter__(self):
        return self

    def __exit__(self, *args):
        if os.path.exists(self.name):
            os.remove(self.name)

    def read(self):
        """
        Read the entire contents of the file as a Unicode string.

        Returns
        -------
        content : str
            Content of the temporary file as a Unicode string.
        """
        with open(self.name) as tmpfile:
            return tmpfile.read()
