"""File formats: JSON matrices/vectors and CSV datasets.

Matrix files:  {"dim": n, "re": [[...]], "im": [[...]]} with both arrays
exactly n x n; "im" may be omitted and defaults to zero.

Vector files:  {"dim": n, "convention": "coherence"|"bloch",
                "components": [n^2 - 1 reals]}.

All numeric output is printed with 12 significant digits so repeated runs
are byte-identical and round-trips stay within documented tolerances.
"""

from __future__ import annotations

import json

import numpy as np

from .exceptions import ParseError
from .pauli import Convention, CoherenceVector


def fmt(x) -> str:
    """Format one real number with 12 significant digits."""
    return f"{float(x) + 0.0:.12g}"


def _num(x) -> float:
    # round-trips through the 12-digit text form so that in-memory JSON
    # objects match what a file written by this module would contain
    return float(fmt(x))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParseError(message)


def parse_matrix_obj(obj) -> np.ndarray:
    _require(isinstance(obj, dict), "matrix file must hold a JSON object")
    _require("dim" in obj, 'matrix file missing "dim"')
    _require("re" in obj, 'matrix file missing "re"')
    n = obj["dim"]
    _require(isinstance(n, int) and n >= 1, f'"dim" must be a positive integer, got {n!r}')
    try:
        re = np.array(obj["re"], dtype=float)
        im_raw = obj.get("im")
        im = np.zeros((n, n)) if im_raw is None else np.array(im_raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix entries are not numeric: {exc}") from exc
    _require(re.shape == (n, n), f'"re" must be {n}x{n}, got {re.shape}')
    _require(im.shape == (n, n), f'"im" must be {n}x{n}, got {im.shape}')
    return re + 1j * im


def matrix_to_obj(matrix) -> dict:
    m = np.asarray(matrix, dtype=np.complex128)
    return {
        "dim": int(m.shape[0]),
        "re": [[_num(v) for v in row] for row in m.real],
        "im": [[_num(v) for v in row] for row in m.imag],
    }


def parse_vector_obj(obj) -> CoherenceVector:
    _require(isinstance(obj, dict), "vector file must hold a JSON object")
    for key in ("dim", "convention", "components"):
        _require(key in obj, f'vector file missing "{key}"')
    n = obj["dim"]
    _require(isinstance(n, int) and n >= 2, f'"dim" must be an integer >= 2, got {n!r}')
    conv = obj["convention"]
    _require(conv in ("coherence", "bloch"),
             f'"convention" must be "coherence" or "bloch", got {conv!r}')
    try:
        comps = np.array(obj["components"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"vector components are not numeric: {exc}") from exc
    _require(comps.ndim == 1 and comps.shape[0] == n * n - 1,
             f'"components" must hold {n * n - 1} reals, got shape {comps.shape}')
    return CoherenceVector(dim=n, components=comps, convention=Convention(conv))


def vector_to_obj(vec: CoherenceVector) -> dict:
    return {
        "dim": vec.dim,
        "convention": vec.convention.value,
        "components": [_num(v) for v in vec.components],
    }


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc


def dump_json(obj, fh) -> None:
    json.dump(obj, fh, indent=2, sort_keys=False)
    fh.write("\n")


# --------------------------------------------------------------------------
# CSV emission.  Floats go through ``fmt``; everything else is str()'d.

def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt(value)
    text = str(value)
    if "," in text:  # standard CSV quoting, needed for spectrum patterns
        return '"' + text.replace('"', '""') + '"'
    return text


def write_csv(fh, header, rows) -> None:
    fh.write(",".join(header) + "\n")
    for row in rows:
        fh.write(",".join(_cell(v) for v in row) + "\n")


def write_orbit_table_csv(fh, rows) -> None:
    """`partition,manifold,dimension` with partitions like ``1+2``."""
    write_csv(fh, ("partition", "manifold", "dimension"),
              (("+".join(str(m) for m in r.partition), r.manifold, r.dimension)
               for r in rows))


def write_region_csv(fh, records) -> None:
    write_csv(fh, ("a", "c2", "class", "curve1", "curve2", "curve3"),
              ((r.a, r.c2, r.classification.value, r.curve1, r.curve2, r.curve3)
               for r in records))


def write_fig2_csv(fh, c2, points) -> None:
    write_csv(fh, ("c2", "a", "a_plus_b"),
              ((c2, a, v) for a, v in points))


def write_fig3_csv(fh, c2, points) -> None:
    write_csv(fh, ("c2", "a", "entropy"),
              ((c2, a, v) for a, v in points))


def write_fractions_csv(fh, rows) -> None:
    """Rows of (n, c2, samples, fraction, seed)."""
    write_csv(fh, ("n", "c2", "samples", "fraction", "seed"), rows)


def write_table2_csv(fh, rows) -> None:
    write_csv(fh, ("pattern", "unitary_dim", "paper_bound", "computed_bound", "exact"),
              ((r.pattern, r.unitary_dim, r.paper_bound,
                r.computed_bound, r.exact) for r in rows))
