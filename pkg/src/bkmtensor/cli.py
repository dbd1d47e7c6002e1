"""Command-line front end.

Every command reads one JSON document. Commands other than ``validate`` and
``graph-c`` expect an ``"algebra"`` field holding either an inline algebra
object or a path (relative to the document) to an algebra file.

Exit status: 0 success, 2 validation error, 3 I/O error, 4 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .cartan import CartanError
from .decide import (
    NotApplicable,
    NotIsomorphic,
    decide_tensor_isomorphism,
    oracle_equal_characters,
    oracle_find_difference,
    unique_factorization_report,
)
from .graphs import SimpleGraph, c_k_list, c_of_graph, is_connected
from .io import (
    ParseError,
    algebra_from_json,
    algebra_to_json,
    chi_from_json,
    chi_to_json,
    load_json,
    series_to_json,
    weight_from_json,
    weight_to_json,
)
from .numerators import (
    DEFAULT_HEIGHT,
    HeightTooSmall,
    NotAComponent,
    component_numerator,
    log_coefficient_check,
    normalized_character,
    numerator,
    tensor_character,
    x_lambda_c,
)
from .weights import (
    is_one_dimensional,
    is_special,
    lambda_perp_im,
    mc_lambda,
    omega_lambda,
    pi_lambda,
)
from .weyl import CharacterError, make_chi

COMMANDS = (
    "validate", "components", "numerator", "character", "tensor-char",
    "decide", "oracle-check", "graph-c", "log-check",
)


@dataclass
class RunConfig:
    command: str
    input_path: str
    H: int | None = None
    chi: str = "sign"
    output: str | None = None
    format: str = "json"


class _Context:
    def __init__(self, cfg: RunConfig, doc):
        self.cfg = cfg
        self.doc = doc
        self.base = Path(cfg.input_path).parent

    def algebra(self):
        src = self.doc.get("algebra") if isinstance(self.doc, dict) else None
        if src is None:
            if isinstance(self.doc, dict) and "matrix" in self.doc:
                return algebra_from_json(self.doc)
            raise ParseError("input needs an 'algebra' field")
        if isinstance(src, str):
            src = load_json(self.base / src)
        return algebra_from_json(src)

    def height(self, default=DEFAULT_HEIGHT) -> int:
        H = self.cfg.H if self.cfg.H is not None else self.doc.get("H", default)
        if not isinstance(H, int) or H < 0:
            raise ParseError(f"height must be a nonnegative integer, got {H!r}")
        return H

    def chi(self, A):
        spec = self.cfg.chi
        if spec.startswith("@"):
            return chi_from_json(A, load_json(spec[1:]))
        return make_chi(A, spec)

    def weight(self, A, key="weight"):
        if key not in self.doc:
            raise ParseError(f"input needs a '{key}' field")
        return weight_from_json(self.doc[key], A.n)

    def weights(self, A, key):
        if key not in self.doc or not isinstance(self.doc[key], list):
            raise ParseError(f"input needs a '{key}' list")
        return [weight_from_json(w, A.n) for w in self.doc[key]]


def _cmd_validate(ctx):
    A = ctx.algebra()
    return {"ok": True, "algebra": algebra_to_json(A)}


def _weight_info(A, lam):
    return {
        "weight": weight_to_json(lam),
        "lambda_perp_im": list(lambda_perp_im(A, lam)),
        "pi": list(pi_lambda(A, lam)),
        "components": [list(C) for C in mc_lambda(A, lam)],
        "k": len(mc_lambda(A, lam)),
        "omega": [{"gamma": list(g), "support": list(S), "ht": len(S)} for g, S in omega_lambda(A, lam)],
        "special": is_special(A, lam),
        "one_dimensional": is_one_dimensional(A, lam),
    }


def _cmd_components(ctx):
    A = ctx.algebra()
    ws = ctx.weights(A, "weights") if "weights" in ctx.doc else [ctx.weight(A)]
    return {"weights": [_weight_info(A, lam) for lam in ws]}


def _cmd_numerator(ctx):
    A = ctx.algebra()
    lam, H, chi = ctx.weight(A), ctx.height(), ctx.chi(A)
    if "component" in ctx.doc:
        f = component_numerator(A, lam, chi, ctx.doc["component"], H)
    else:
        f = numerator(A, lam, chi, H)
    return {"chi": chi_to_json(chi), "series": series_to_json(f), "_series": f}


def _cmd_character(ctx):
    A = ctx.algebra()
    f = normalized_character(A, ctx.weight(A), ctx.height())
    return {"series": series_to_json(f), "_series": f}


def _cmd_tensor_char(ctx):
    A = ctx.algebra()
    f = tensor_character(A, ctx.weights(A, "weights"), ctx.height())
    return {"series": series_to_json(f), "_series": f}


def _cmd_decide(ctx):
    A = ctx.algebra()
    left, right = ctx.weights(A, "left"), ctx.weights(A, "right")
    out = decide_tensor_isomorphism(A, left, right).to_json()
    try:
        out["factorization"] = unique_factorization_report(A, left, right).to_json()
    except (NotApplicable, NotIsomorphic):
        pass
    return out


def _cmd_oracle_check(ctx):
    A = ctx.algebra()
    left, right = ctx.weights(A, "left"), ctx.weights(A, "right")
    H = ctx.height()
    out = oracle_equal_characters(A, left, right, H).to_json()
    if out["sums_equal"] and out["series_equal"] and ctx.doc.get("search_cap"):
        out["search"] = oracle_find_difference(A, left, right, ctx.doc["search_cap"]).to_json()
    return out


def _cmd_graph_c(ctx):
    doc = ctx.doc
    try:
        G = SimpleGraph.from_edges(range(doc["n"]), doc.get("edges", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from exc
    return {"c": c_of_graph(G), "c_k": c_k_list(G), "connected": is_connected(G)}


def _cmd_log_check(ctx):
    A = ctx.algebra()
    lam, chi = ctx.weight(A), ctx.chi(A)
    pi = pi_lambda(A, lam)
    if "C" in ctx.doc:
        subsets = [tuple(sorted(ctx.doc["C"]))]
    else:
        subsets = [S for k in range(1, len(pi) + 1) for S in combinations(pi, k)]
    # without an explicit height each check runs at deg X^lam(C)
    H = ctx.height() if (ctx.cfg.H is not None or "H" in ctx.doc) else None
    rows = []
    for C in subsets:
        target = x_lambda_c(A, lam, C)
        computed, predicted = log_coefficient_check(A, lam, chi, C, H)
        rows.append({
            "C": list(C),
            "monomial": list(target),
            "computed": str(computed),
            "predicted": str(predicted),
            "agree": computed == predicted,
        })
    return {"chi": chi_to_json(chi), "checks": rows, "all_agree": all(r["agree"] for r in rows)}


_DISPATCH = {
    "validate": _cmd_validate,
    "components": _cmd_components,
    "numerator": _cmd_numerator,
    "character": _cmd_character,
    "tensor-char": _cmd_tensor_char,
    "decide": _cmd_decide,
    "oracle-check": _cmd_oracle_check,
    "graph-c": _cmd_graph_c,
    "log-check": _cmd_log_check,
}


def _as_text(command: str, report: dict) -> str:
    if "error" in report:
        return f"error ({report['error']['type']}): {report['error']['message']}"
    if "_series" in report:
        return report["_series"].pretty()
    if command == "decide":
        line = "isomorphic" if report["isomorphic"] else "not isomorphic"
        if not report["isomorphic"]:
            line += f" ({report['reason']['kind']})"
        return line
    if command == "graph-c":
        return f"c = {report['c']}  c_k = {report['c_k']}  connected = {report['connected']}"
    if command == "log-check":
        return "\n".join(
            f"C={r['C']}  computed={r['computed']}  predicted={r['predicted']}" for r in report["checks"]
        )
    return json.dumps(report, indent=2)


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Execute one command; returns ``(exit status, report)``."""
    try:
        doc = load_json(cfg.input_path)
    except OSError as exc:
        return 3, {"error": {"type": "IOError", "message": str(exc)}}
    except ParseError as exc:
        return 4, {"error": {"type": "ParseError", "message": str(exc)}}
    try:
        report = _DISPATCH[cfg.command](_Context(cfg, doc))
    except OSError as exc:
        return 3, {"error": {"type": "IOError", "message": str(exc)}}
    except ParseError as exc:
        return 4, {"error": {"type": "ParseError", "message": str(exc)}}
    except (CartanError, CharacterError, NotAComponent, HeightTooSmall, ValueError) as exc:
        return 2, {"error": {"type": type(exc).__name__, "message": str(exc)}}
    return 0, report


def render(cfg: RunConfig, report: dict) -> str:
    if cfg.format == "text":
        return _as_text(cfg.command, report) + "\n"
    clean = {k: v for k, v in report.items() if not k.startswith("_")}
    return json.dumps(clean, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bkmtensor", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help="JSON input document")
    p.add_argument("--height", "-H", type=int, default=None, help=f"truncation height (default {DEFAULT_HEIGHT})")
    p.add_argument("--chi", default="sign", help="sign | trivial | @file.json")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.command, args.input, args.height, args.chi, args.out, args.format)
    status, report = run(cfg)
    text = render(cfg, report)
    if cfg.output:
        try:
            Path(cfg.output).write_text(text)
        except OSError as exc:
            print(f"cannot write {cfg.output}: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
