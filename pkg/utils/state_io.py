"""JSON state files, coordinate documents and reports.

State files use the 1-based mode labels of the formulas:
    {"fermions": 3, "modes": 6,
     "amplitudes": [{"indices": [1, 2, 3], "re": 1.0, "im": 0.0}, ...]}
Complex numbers are written as separate re/im fields, matrices row-major.
"""
import json
import numpy as np
from dataclasses import fields
from typing import Dict, TextIO

import models.cluster.coordinates as coords
import numerical_methods.multilinear.tensor as tensor
import utils.config as config
import utils.errors as errors
import utils.global_types as global_types

# Coordinate documents: kind -> (class, block names).
_COORDINATES = {
    "ci6": (coords.SixModeCI, ("alpha", "a", "b", "beta")),
    "cc6": (coords.SixModeCC, ("eta", "x", "y", "xi")),
    "ci7": (coords.SevenModeCI, ("alpha", "a", "b", "beta", "d", "e", "f")),
    "cc7": (coords.SevenModeCC,
            ("eta", "x", "y", "xi", "z", "v_matrix", "u_matrix")),
}


def complex_to_json(value: complex) -> Dict[str, float]:
    value = complex(value)
    return {"re": float(value.real), "im": float(value.imag)}


def complex_from_json(doc) -> complex:
    try:
        value = complex(float(doc["re"]), float(doc.get("im", 0.0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise errors.StateFileError(f"Bad complex entry {doc!r}.") from exc
    if not np.isfinite(value):
        raise errors.StateFileError(f"Non-finite complex entry {doc!r}.")
    return value


def array_to_json(values: np.ndarray) -> Dict[str, list]:
    values = np.asarray(values, dtype=complex)
    return {"re": values.real.tolist(), "im": values.imag.tolist()}


def array_from_json(doc) -> np.ndarray:
    try:
        values = np.array(doc["re"], dtype=float) \
            + 1j * np.array(doc["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise errors.StateFileError(f"Bad array entry {doc!r}.") from exc
    if not np.all(np.isfinite(values)):
        raise errors.StateFileError("Non-finite array entry.")
    return values


def state_to_json(t: tensor.AntisymTensor) -> dict:
    return {
        "fermions": t.n_fermions,
        "modes": t.n_modes,
        "amplitudes": [dict(indices=[mu + 1 for mu in idx],
                            **complex_to_json(value))
                       for idx, value in t.items()],
    }


def state_from_json(doc: dict) -> tensor.AntisymTensor:
    try:
        n_fermions, n_modes = int(doc["fermions"]), int(doc["modes"])
        entries = doc.get("amplitudes", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise errors.StateFileError(
            "State file needs integer 'fermions' and 'modes'.") from exc
    if n_fermions < 1 or n_modes < n_fermions:
        raise errors.StateFileError(
            f"Invalid fermion/mode numbers ({n_fermions}, {n_modes}).")
    values = {}
    for entry in entries:
        try:
            indices = tuple(int(mu) - 1 for mu in entry["indices"])
        except (KeyError, TypeError, ValueError) as exc:
            raise errors.StateFileError(
                f"Bad amplitude entry {entry!r}.") from exc
        if len(indices) != n_fermions:
            raise errors.StateFileError(
                f"Entry {entry['indices']} should have {n_fermions} "
                "indices.")
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise errors.StateFileError(
                f"Indices {entry['indices']} are not strictly increasing.")
        if indices[0] < 0 or indices[-1] >= n_modes:
            raise errors.StateFileError(
                f"Indices {entry['indices']} out of range 1..{n_modes}.")
        if indices in values:
            raise errors.StateFileError(
                f"Indices {entry['indices']} given twice.")
        values[indices] = complex_from_json(entry)
    return tensor.AntisymTensor.from_dict(n_fermions, n_modes, values)


def read_state(stream: TextIO) -> tensor.AntisymTensor:
    try:
        doc = json.load(stream)
    except json.JSONDecodeError as exc:
        raise errors.StateFileError(f"Invalid JSON: {exc}.") from exc
    if not isinstance(doc, dict):
        raise errors.StateFileError("State file should hold an object.")
    return state_from_json(doc)


def write_state(t: tensor.AntisymTensor,
                stream: TextIO):
    dump(state_to_json(t), stream)


def coordinates_kind(coordinates) -> str:
    for kind, (cls, _) in _COORDINATES.items():
        if isinstance(coordinates, cls):
            return kind
    raise errors.StateError(f"Unknown coordinate type "
                            f"{type(coordinates).__name__}.")


def coordinates_to_json(coordinates) -> dict:
    kind = coordinates_kind(coordinates)
    _, names = _COORDINATES[kind]
    doc = {"kind": kind}
    for name in names:
        value = getattr(coordinates, name)
        if np.ndim(value) == 0:
            doc[name] = complex_to_json(value)
        else:
            doc[name] = array_to_json(value)
    return doc


def coordinates_from_json(doc: dict):
    kind = doc.get("kind") if isinstance(doc, dict) else None
    if kind not in _COORDINATES:
        raise errors.StateFileError(
            f"Coordinate kind should be one of {sorted(_COORDINATES)}, "
            f"got {kind!r}.")
    cls, names = _COORDINATES[kind]
    values = {}
    for name in names:
        if name not in doc:
            raise errors.StateFileError(f"Missing block '{name}'.")
        entry = doc[name]
        if not isinstance(entry, dict):
            raise errors.StateFileError(f"Block '{name}' should be an "
                                        "object with re and im.")
        values[name] = array_from_json(entry) \
            if isinstance(entry.get("re"), list) else complex_from_json(entry)
    accepted = {f.name for f in fields(cls)}
    return cls(**{k: v for k, v in values.items() if k in accepted})


def report_to_json(report) -> dict:
    """Flatten a classification report dataclass; enums become labels,
    complex numbers re/im pairs, arrays re/im lists."""
    doc = {}
    for f in fields(report):
        value = getattr(report, f.name)
        doc[f.name] = to_jsonable(value)
    return doc


def to_jsonable(value):
    """JSON-ready form of report fields and payload values."""
    if value is None or isinstance(value, (bool, str, int)):
        return value
    if isinstance(value, global_types.SevenModeClass):
        return value.label
    if isinstance(value, global_types.SixModeClass):
        return value.name
    if isinstance(value, config.Tolerance):
        return {"tau": value.tau, "rank": value.rank, "inv": value.inv}
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return complex_to_json(value)
    if isinstance(value, (tuple, list)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        if np.iscomplexobj(value):
            return array_to_json(value)
        return value.tolist()
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if hasattr(value, "__dataclass_fields__"):
        return report_to_json(value)
    raise errors.StateError(f"Cannot serialize {type(value).__name__}.")


def envelope(command: str,
             payload: dict,
             tol: config.Tolerance) -> dict:
    """Wrap a payload with the library version and tolerance used."""
    return {"version": config.VERSION, "command": command,
            "tol": to_jsonable(tol), **payload}


def dump(doc: dict,
         stream: TextIO):
    json.dump(doc, stream, indent=2, sort_keys=True)
    stream.write("\n")
