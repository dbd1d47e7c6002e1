"""JSON encodings for algebras, weights, characters and series."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .cartan import BorcherdsCartanMatrix, validate_matrix
from .series import TruncatedSeries
from .weights import Weight
from .weyl import CharacterHom, make_chi


class ParseError(ValueError):
    pass


def rational_to_json(x) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_json(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"expected an integer or 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {x!r}") from exc


def algebra_from_json(doc: dict) -> BorcherdsCartanMatrix:
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise ParseError("algebra JSON needs a 'matrix' field")
    matrix = doc["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise ParseError("'matrix' must be a list of rows")
    entries = [[rational_from_json(x) for x in row] for row in matrix]
    sym = doc.get("symmetrizer")
    if sym is not None:
        sym = [rational_from_json(x) for x in sym]
    return validate_matrix(entries, doc.get("labels"), sym)


def algebra_to_json(A: BorcherdsCartanMatrix) -> dict:
    return {
        "matrix": [[rational_to_json(x) for x in row] for row in A.a],
        "labels": list(A.labels),
        "symmetrizer": [rational_to_json(x) for x in A.d],
        "real_idx": list(A.real_idx),
        "im_idx": list(A.im_idx),
    }


def weight_from_json(doc, n: int | None = None) -> Weight:
    """Accepts ``{"h": [...], "e": [...]}`` or a bare list of coroot values."""
    if isinstance(doc, list):
        doc = {"h": doc}
    if not isinstance(doc, dict) or "h" not in doc:
        raise ParseError(f"weight must be a list or an object with 'h': {doc!r}")
    h = doc["h"]
    if not isinstance(h, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in h):
        raise ParseError(f"'h' must be a list of integers: {h!r}")
    if n is not None and len(h) != n:
        raise ParseError(f"weight {h} has {len(h)} entries, algebra has rank {n}")
    e = doc.get("e")
    e = tuple(rational_from_json(x) for x in e) if e is not None else ()
    return Weight(tuple(h), e)


def weight_to_json(w: Weight) -> dict:
    out: dict = {"h": list(w.h)}
    if w.e_given:
        out["e"] = [rational_to_json(x) for x in w.e]
    return out


def series_to_json(f: TruncatedSeries) -> dict:
    out: dict = {"H": f.H, "n": f.n}
    if f.bound is not None:
        out["bound"] = list(f.bound)
    out["terms"] = [{"m": list(m), "c": str(Fraction(c))} for m, c in f.items()]
    return out


def series_from_json(doc: dict) -> TruncatedSeries:
    try:
        H = doc["H"]
        terms = {}
        for t in doc["terms"]:
            terms[tuple(t["m"])] = rational_from_json(t["c"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad series JSON: {exc}") from exc
    if "n" in doc:
        n = doc["n"]
    elif terms:
        n = len(next(iter(terms)))
    else:
        raise ParseError("empty series needs 'n' to fix the rank")
    return TruncatedSeries(n, H, terms, doc.get("bound"))


def chi_from_json(A: BorcherdsCartanMatrix, doc: dict) -> CharacterHom:
    kind = doc.get("kind", "custom")
    if kind != "custom":
        return make_chi(A, kind)
    eps = {int(k): v for k, v in doc.get("eps", {}).items()}
    imval = {int(k): rational_from_json(v) for k, v in doc.get("imval", {}).items()}
    return make_chi(A, "custom", eps, imval)


def chi_to_json(chi: CharacterHom) -> dict:
    return {
        "kind": chi.name,
        "eps": {str(i): v for i, v in chi.eps},
        "imval": {str(j): rational_to_json(v) for j, v in chi.imval},
    }


def load_json(path: str | Path):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from exc
