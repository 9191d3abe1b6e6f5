"""JSON interchange for Hermitian matrices.

Wire format: {"n": int, "re": [[float; n]; n], "im": [[float; n]; n]}.
Readers validate the structural invariants of the requested type and raise
InvariantViolation naming the violated invariant.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import InvariantViolation
from .linalg import assert_density, assert_hermitian, assert_tangent


def matrix_to_obj(a) -> dict:
    a = np.asarray(a, dtype=complex)
    return {
        "n": int(a.shape[0]),
        "re": [[float(v) for v in row] for row in a.real],
        "im": [[float(v) for v in row] for row in a.imag],
    }


def obj_to_matrix(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise InvariantViolation("schema", "matrix object must be a JSON object")
    try:
        n = int(obj["n"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvariantViolation("schema", f"expected keys n/re/im with numeric grids: {exc}")
    if re.shape != (n, n) or im.shape != (n, n):
        raise InvariantViolation("schema", f"re/im shapes {re.shape}/{im.shape} != ({n}, {n})")
    return re + 1j * im


def _load_obj(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvariantViolation("file", str(exc))
    except json.JSONDecodeError as exc:
        raise InvariantViolation("json", f"{path}: {exc}")


def load_hermitian(path: str) -> np.ndarray:
    return assert_hermitian(obj_to_matrix(_load_obj(path)), name=path)


def load_density(path: str) -> np.ndarray:
    return assert_density(obj_to_matrix(_load_obj(path)), name=path)


def load_tangent(path: str) -> np.ndarray:
    return assert_tangent(obj_to_matrix(_load_obj(path)), name=path)


def save_matrix(path: str, a) -> None:
    with open(path, "w") as fh:
        json.dump(matrix_to_obj(a), fh)
        fh.write("\n")
