"""Lattice files.

``{"n": int, "basis": [[entry, ...], ...]}`` with columns as inner arrays, or
``{"n": int, "gram": [[entry, ...], ...]}`` for a form given by its Gram matrix.
Entries are integers or strings holding exact rationals.
"""

from __future__ import annotations

import json
from pathlib import Path

from specgeom.lattices import exact
from specgeom.lattices.forms import GramMatrix, LatticeBasis, LatticeError, gram_of_basis


class LatticeFileError(LatticeError):
    pass


def _dimension(obj) -> int:
    if not isinstance(obj, dict):
        raise LatticeFileError("lattice file must hold a JSON object with fields 'n' and 'basis' (or 'gram')")
    if "n" not in obj:
        raise LatticeFileError("missing field 'n'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise LatticeFileError(f"field 'n' must be a positive integer, got {n!r}")
    return n


def _square(obj, key: str, n: int) -> tuple:
    rows = obj.get(key)
    if not isinstance(rows, list):
        raise LatticeFileError(f"field '{key}' must be a list of {n} lists")
    if len(rows) != n:
        raise LatticeFileError(f"field '{key}' has {len(rows)} entries, expected n = {n}")
    parsed = []
    for j, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise LatticeFileError(f"field '{key}[{j}]' must be a list of {n} entries")
        out = []
        for i, x in enumerate(row):
            try:
                out.append(exact.to_fraction(x))
            except (TypeError, ValueError) as err:
                raise LatticeFileError(f"field '{key}[{j}][{i}]': {err}") from None
        parsed.append(tuple(out))
    return tuple(parsed)


def parse_lattice(obj) -> LatticeBasis:
    n = _dimension(obj)
    if "basis" not in obj and "gram" in obj:
        raise LatticeFileError("this input needs field 'basis'; a Gram matrix alone does not fix a basis")
    return LatticeBasis(_square(obj, "basis", n))


def parse_form(obj) -> LatticeBasis | GramMatrix:
    """A basis if the file has one, else its Gram matrix."""
    n = _dimension(obj)
    if "basis" in obj:
        return LatticeBasis(_square(obj, "basis", n))
    if "gram" in obj:
        try:
            return GramMatrix(_square(obj, "gram", n))
        except LatticeError as err:
            raise LatticeFileError(f"field 'gram': {err}") from None
    raise LatticeFileError("missing field 'basis' (or 'gram')")


def _read(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as err:
        raise LatticeFileError(f"{path}: malformed JSON ({err})") from None
    except OSError as err:
        raise LatticeFileError(f"{path}: {err.strerror}") from None


def load_lattice(path: str | Path) -> LatticeBasis:
    return parse_lattice(_read(path))


def load_form(path: str | Path) -> LatticeBasis | GramMatrix:
    return parse_form(_read(path))


def as_gram(form: LatticeBasis | GramMatrix) -> GramMatrix:
    return form if isinstance(form, GramMatrix) else gram_of_basis(form)


def lattice_to_json(form: LatticeBasis | GramMatrix) -> dict:
    if isinstance(form, GramMatrix):
        return {"n": form.n, "gram": [[str(x) for x in row] for row in form.entries]}
    return {"n": form.n, "basis": [[str(x) for x in col] for col in form.columns]}


def dump_lattice(basis: LatticeBasis | GramMatrix, path: str | Path) -> None:
    Path(path).write_text(json.dumps(lattice_to_json(basis), sort_keys=True) + "\n")
