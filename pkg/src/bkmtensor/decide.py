"""Deciding equality of numerator products and isomorphism of tensor products.

The decision itself is purely combinatorial: it matches connected components
of the graphs of the weights together with the real coroot values on them.
``oracle_equal_characters`` is a separate check that expands truncated
characters and compares coefficients.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .cartan import BorcherdsCartanMatrix
from .io import rational_to_json
from .numerators import tensor_character
from .series import grlex_key
from .weights import Weight, is_special, mc_lambda, weight_sum
from .weyl import CharacterHom

ORACLE_HEIGHT_CAP = 12


class NotApplicable(ValueError):
    pass


class NotIsomorphic(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ComponentKey:
    C: tuple[int, ...]
    re_values: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"component": list(self.C), "re_values": {str(i): v for i, v in self.re_values}}


def component_key(A: BorcherdsCartanMatrix, lam: Weight, C: Sequence[int]) -> ComponentKey:
    C = tuple(sorted(C))
    return ComponentKey(C, tuple((i, lam.h[i]) for i in C if A.is_real(i)))


@dataclass(frozen=True)
class Slot:
    """One component of one weight on one side of a comparison."""

    side: str
    index: int
    key: ComponentKey
    padding: bool = False

    def to_json(self) -> dict:
        out = {"side": self.side, "index": self.index, **self.key.to_json()}
        if self.padding:
            out["padding"] = True
        return out


def component_multiset(A: BorcherdsCartanMatrix, weights: Sequence[Weight]) -> Counter:
    """Multiset union of the component keys of all ``weights``."""
    return Counter(component_key(A, lam, C) for lam in weights for C in mc_lambda(A, lam))


def _slots(A, weights, side, n_real) -> list[Slot]:
    return [
        Slot(side, i, component_key(A, lam, C), padding=i >= n_real)
        for i, lam in enumerate(weights)
        for C in mc_lambda(A, lam)
    ]


@dataclass
class Verdict:
    isomorphic: bool
    witness: list[tuple[Slot, Slot]] | None = None
    failure_reason: dict | None = None
    sum_check: dict | None = None

    def to_json(self) -> dict:
        out: dict = {"isomorphic": self.isomorphic}
        if self.witness is not None:
            out["witness"] = [[a.to_json(), b.to_json()] for a, b in self.witness]
        if self.failure_reason is not None:
            out["reason"] = self.failure_reason
        if self.sum_check is not None:
            out["sum_check"] = self.sum_check
        return out


def _match(left: list[Slot], right: list[Slot]) -> tuple[list | None, dict | None]:
    """Pair slots with equal keys; deterministic because both sides are sorted."""
    lc = Counter(s.key for s in left)
    rc = Counter(s.key for s in right)
    if lc != rc:
        key = min(k for k in set(lc) | set(rc) if lc[k] != rc[k])
        return None, {
            "kind": "ComponentMultisetMismatch",
            "key": key.to_json(),
            "left_count": lc[key],
            "right_count": rc[key],
        }
    order = lambda s: (s.key, s.index)
    return list(zip(sorted(left, key=order), sorted(right, key=order))), None


def decide_numerator_equality(A: BorcherdsCartanMatrix, lams: Sequence[Weight],
                              mus: Sequence[Weight], chi: CharacterHom | None = None) -> Verdict:
    """Whether ``prod U(lam_i, chi) == prod U(mu_j, chi)``.

    The answer does not depend on ``chi``; it is accepted only for symmetry
    with the series-level statement.
    """
    witness, reason = _match(_slots(A, lams, "left", len(lams)), _slots(A, mus, "right", len(mus)))
    return Verdict(witness is not None, witness, reason)


def _sum_check(A, lams, mus) -> dict:
    left, right = weight_sum(lams, A.n), weight_sum(mus, A.n)
    assumed = [not w.e_given for w in list(lams) + list(mus)]
    out = {
        "equal": left == right,
        "left": {"h": list(left.h), "e": [rational_to_json(x) for x in left.e]},
        "right": {"h": list(right.h), "e": [rational_to_json(x) for x in right.e]},
    }
    if any(assumed):
        out["note"] = "derivation parts omitted on some weights were taken as zero"
    return out


def decide_tensor_isomorphism(A: BorcherdsCartanMatrix, lams: Sequence[Weight],
                              mus: Sequence[Weight]) -> Verdict:
    """Whether ``L(lam_1) x ... x L(lam_r)`` is isomorphic to ``L(mu_1) x ... x L(mu_s)``.

    The shorter side is padded with zero weights (``L(0)`` is trivial); then
    the weight sums must agree and the component multisets must match.
    """
    lams, mus = list(lams), list(mus)
    sums = _sum_check(A, lams, mus)
    if not sums["equal"]:
        return Verdict(False, None, {"kind": "SumMismatch"}, sums)
    r, s = len(lams), len(mus)
    zero = Weight.zero(A.n)
    padded_l = lams + [zero] * (s - r)
    padded_r = mus + [zero] * (r - s)
    witness, reason = _match(_slots(A, padded_l, "left", r), _slots(A, padded_r, "right", s))
    return Verdict(witness is not None, witness, reason, sums)


@dataclass
class FactorizationReport:
    """Pairing of factors with the twist ``lam_i - mu_sigma(i)`` for each pair."""

    permutation: list[tuple[int, int]]
    twists: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"permutation": [list(p) for p in self.permutation], "twists": self.twists}


def unique_factorization_report(A: BorcherdsCartanMatrix, lams: Sequence[Weight],
                                mus: Sequence[Weight]) -> FactorizationReport:
    """Recover the factor pairing when every graph involved is connected.

    Padding zeros take part like any other factor (index ``>= len`` of the
    original side). Raises ``NotApplicable`` if some graph, including that of
    a padding zero, is not connected, and ``NotIsomorphic`` if the tensor
    products differ.
    """
    lams, mus = list(lams), list(mus)
    zero = Weight.zero(A.n)
    padded_l = lams + [zero] * (len(mus) - len(lams))
    padded_r = mus + [zero] * (len(lams) - len(mus))
    for side, ws in (("left", padded_l), ("right", padded_r)):
        for i, lam in enumerate(ws):
            if len(mc_lambda(A, lam)) != 1:
                raise NotApplicable(f"graph of {side} weight {i} = {lam} is not connected")
    verdict = decide_tensor_isomorphism(A, lams, mus)
    if not verdict.isomorphic:
        raise NotIsomorphic(str(verdict.failure_reason))
    perm = sorted((a.index, b.index) for a, b in verdict.witness)
    twists = []
    for i, j in perm:
        diff = padded_l[i] - padded_r[j]
        special = is_special(A, diff)
        twists.append({
            "left": i,
            "right": j,
            "twist_h": list(diff.h),
            "twist_e": [rational_to_json(x) for x in diff.e],
            "special": special,
            # real values agree on a matched pair, so the twist is W-invariant
            "one_dimensional": special,
            "trivial": diff == Weight.zero(A.n),
        })
    return FactorizationReport(perm, twists)


@dataclass
class OracleResult:
    """Outcome of the truncated-character comparison.

    ``equal_to_H`` means the weight sums agree and the truncated characters
    agree through height ``H``. That is necessary for isomorphism, not
    sufficient.
    """

    H: int
    sums_equal: bool
    series_equal: bool
    first_difference: tuple[int, ...] | None

    @property
    def equal_to_H(self) -> bool:
        return self.sums_equal and self.series_equal

    def to_json(self) -> dict:
        return {
            "H": self.H,
            "equal_to_H": self.equal_to_H,
            "sums_equal": self.sums_equal,
            "series_equal": self.series_equal,
            "first_difference": None if self.first_difference is None else list(self.first_difference),
        }


def _sorted_weights(ws: Sequence[Weight]) -> tuple[Weight, ...]:
    return tuple(sorted(ws, key=lambda w: (w.h, w.e)))


def oracle_equal_characters(A: BorcherdsCartanMatrix, lams: Sequence[Weight],
                            mus: Sequence[Weight], H: int = 10) -> OracleResult:
    """Compare ``sum lam`` with ``sum mu`` and the normalized tensor characters up to ``H``."""
    sums_equal = weight_sum(lams, A.n) == weight_sum(mus, A.n)
    f = tensor_character(A, _sorted_weights(lams), H)
    g = tensor_character(A, _sorted_weights(mus), H)
    if f.terms == g.terms:
        return OracleResult(H, sums_equal, True, None)
    diff = set(f.terms.items()) ^ set(g.terms.items())
    first = min((m for m, _ in diff), key=grlex_key)
    return OracleResult(H, sums_equal, False, first)


def oracle_find_difference(A: BorcherdsCartanMatrix, lams: Sequence[Weight],
                           mus: Sequence[Weight], cap: int = ORACLE_HEIGHT_CAP) -> OracleResult:
    """Search for a difference at heights up to ``cap``.

    A differing coefficient of degree ``d`` is visible at every ``H >= d``, so
    one expansion at ``cap`` finds the least such height. If nothing differs
    the result is inconclusive, never a proof of equality.
    """
    res = oracle_equal_characters(A, lams, mus, cap)
    if res.first_difference is not None:
        return OracleResult(sum(res.first_difference), res.sums_equal, False, res.first_difference)
    return res
