"""
Read and write bundle and triplet documents.

A bundle document is JSON with the keys ``format``, ``p``, ``n``, ``s``,
``t`` and ``phi``, written with one matrix per line::

    {
      "format": 1,
      "p": 5,
      "n": 1,
      "s": 2,
      "t": 3,
      "phi": [
        [[1, 0], [0, 0]],
        [[0, 1], [1, 0]],
        [[0, 0], [0, 1]]
      ]
    }
"""
import json
import os

from pysteiner.bundle import SteinerPresentation
from pysteiner.exactalg import FieldCtx, to_nested_list
from pysteiner.exceptions import SteinerFormatError, SteinerInvalidInput
from pysteiner.src.schwarz import TripletSpec

FORMAT_VERSION = 1
HEADER_KEYS = ("format", "p", "n", "s", "t")


def dumps_bundle(pres):
    """
    Serialize a presentation as a bundle document.

    >>> from pysteiner import schwarz_p1
    >>> print(dumps_bundle(schwarz_p1(1, 1, 5)))
    {
      "format": 1,
      "p": 5,
      "n": 1,
      "s": 2,
      "t": 3,
      "phi": [
        [[1, 0], [0, 0]],
        [[0, 1], [1, 0]],
        [[0, 0], [0, 1]]
      ]
    }
    """
    header = {
        "format": FORMAT_VERSION,
        "p": pres.field.p,
        "n": pres.n,
        "s": pres.s,
        "t": pres.t,
    }
    lines = ["{"]
    lines.extend(f'  "{key}": {value},' for key, value in header.items())
    lines.append('  "phi": [')
    matrices = [json.dumps(matrix) for matrix in to_nested_list(pres.phi)]
    lines.append(",\n".join(f"    {matrix}" for matrix in matrices))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines)


def _parse_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise SteinerFormatError(
            f"Malformed {what} at line {err.lineno}, column {err.colno}: {err.msg}."
        ) from err


def _integer(document, key):
    if key not in document:
        raise SteinerFormatError(f"Missing field '{key}'.")
    value = document[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SteinerFormatError(f"Field '{key}' must be an integer, got {value!r}.")
    return value


def loads_bundle(text):
    """
    Parse a bundle document into a :class:`~pysteiner.SteinerPresentation`.

    Raises
    ------
    SteinerFormatError
        If the text is not JSON, misses a field, has the wrong shape or an
        entry outside [0, p). The message names the line or the field.
    """
    document = _parse_json(text, "bundle document")
    if not isinstance(document, dict):
        raise SteinerFormatError("A bundle document must be a JSON object.")
    header = {key: _integer(document, key) for key in HEADER_KEYS}
    if header["format"] != FORMAT_VERSION:
        raise SteinerFormatError(
            f"Unsupported bundle format {header['format']}, expected {FORMAT_VERSION}."
        )
    try:
        field = FieldCtx(header["p"])
    except SteinerInvalidInput as err:
        raise SteinerFormatError(f"Invalid field 'p': {err}") from err
    if "phi" not in document:
        raise SteinerFormatError("Missing field 'phi'.")
    phi = document["phi"]
    shape = (header["t"], header["s"], header["n"] + 1)
    if not isinstance(phi, list) or len(phi) != shape[0]:
        raise SteinerFormatError(f"Field 'phi' must hold t = {shape[0]} matrices.")
    for k, matrix in enumerate(phi):
        if not isinstance(matrix, list) or len(matrix) != shape[1]:
            raise SteinerFormatError(f"phi[{k}] must have s = {shape[1]} rows.")
        for i, row in enumerate(matrix):
            if not isinstance(row, list) or len(row) != shape[2]:
                raise SteinerFormatError(
                    f"phi[{k}][{i}] must have n + 1 = {shape[2]} entries."
                )
            for j, entry in enumerate(row):
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise SteinerFormatError(
                        f"phi[{k}][{i}][{j}] must be an integer, got {entry!r}."
                    )
                if not 0 <= entry < field.p:
                    raise SteinerFormatError(
                        f"phi[{k}][{i}][{j}] = {entry} is outside [0, {field.p})."
                    )
    try:
        return SteinerPresentation(phi, field)
    except SteinerInvalidInput as err:
        raise SteinerFormatError(str(err)) from err


def read_bundle(path):
    "Read a bundle document from a file."
    with open(path) as handle:
        return loads_bundle(handle.read())


def write_bundle(pres, path):
    "Write a bundle document to a file."
    with open(path, "w") as handle:
        handle.write(dumps_bundle(pres) + "\n")


def loads_triplet(source):
    """
    Parse a triplet document given inline or as the path of a file.

    >>> loads_triplet('{"p": 5, "p1": [2, 2]}')
    TripletSpec(kind='p1', params=[2, 2], p=5)
    """
    if os.path.isfile(source):
        with open(source) as handle:
            source = handle.read()
    return TripletSpec.from_dict(_parse_json(source, "triplet document"))
