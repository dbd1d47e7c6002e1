"""Dominant weights and the root subsets they determine."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .cartan import BorcherdsCartanMatrix, to_fraction
from .graphs import connected_components, dynkin_graph, is_independent


@dataclass(frozen=True)
class Weight:
    """A weight given by its coroot values ``h[i] = lambda(h_i)``.

    ``e`` holds the values on the derivations ``D_i``; it only matters when
    comparing sums of weights.
    """

    h: tuple[int, ...]
    e: tuple[Fraction, ...] = field(default=())
    # False when the derivation part was omitted and defaulted to zero
    e_given: bool | None = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        if self.e_given is None:
            object.__setattr__(self, "e_given", bool(self.e))
        e = tuple(to_fraction(x) for x in self.e) if self.e else (Fraction(0),) * len(self.h)
        if len(e) != len(self.h):
            raise ValueError(f"derivation part has {len(e)} entries, expected {len(self.h)}")
        object.__setattr__(self, "e", e)

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * n)

    @property
    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.h)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(x + y for x, y in zip(self.h, other.h)),
            tuple(x + y for x, y in zip(self.e, other.e)),
            self.e_given or other.e_given,
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(x - y for x, y in zip(self.h, other.h)),
            tuple(x - y for x, y in zip(self.e, other.e)),
            self.e_given or other.e_given,
        )

    def __str__(self) -> str:
        s = "(" + ",".join(map(str, self.h)) + ")"
        if any(self.e):
            s += "|e=(" + ",".join(map(str, self.e)) + ")"
        return s


def weight_sum(weights: Sequence[Weight], n: int) -> Weight:
    total = Weight.zero(n)
    for w in weights:
        total = total + w
    return total


def _require_dominant(A: BorcherdsCartanMatrix, lam: Weight) -> None:
    if len(lam.h) != A.n:
        raise ValueError(f"weight {lam} has {len(lam.h)} coroot values, algebra has rank {A.n}")
    if not lam.is_dominant:
        raise ValueError(f"weight {lam} is not dominant")


def lambda_perp_im(A: BorcherdsCartanMatrix, lam: Weight) -> tuple[int, ...]:
    # (lam, alpha_i) = d_i lam(h_i) and d_i > 0
    _require_dominant(A, lam)
    return tuple(i for i in A.im_idx if lam.h[i] == 0)


def pi_lambda(A: BorcherdsCartanMatrix, lam: Weight) -> tuple[int, ...]:
    return tuple(sorted(set(A.real_idx) | set(lambda_perp_im(A, lam))))


def mc_lambda(A: BorcherdsCartanMatrix, lam: Weight) -> list[tuple[int, ...]]:
    """Connected components of the graph of ``lam``, sorted by least index."""
    return connected_components(dynkin_graph(A, pi_lambda(A, lam)))


def independent_subsets(A: BorcherdsCartanMatrix, pool: Sequence[int]) -> list[tuple[int, ...]]:
    G = dynkin_graph(A, pool)
    out = []
    for size in range(len(pool) + 1):
        for S in combinations(sorted(pool), size):
            if is_independent(G, S):
                out.append(S)
    return out


def omega_lambda(A: BorcherdsCartanMatrix, lam: Weight,
                 within: Sequence[int] | None = None) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Sums of distinct, mutually orthogonal imaginary simple roots orthogonal to ``lam``.

    Returned as ``(coefficient vector, support)`` pairs, ``0`` first. A single
    imaginary root with ``(alpha, alpha) < 0`` counts as a singleton family.
    ``within`` restricts the roots used (for the per-component factors).
    """
    pool = lambda_perp_im(A, lam)
    if within is not None:
        allowed = set(within)
        pool = tuple(i for i in pool if i in allowed)
    out = []
    for S in independent_subsets(A, pool):
        gamma = tuple(1 if i in S else 0 for i in range(A.n))
        out.append((gamma, S))
    return out


def is_special(A: BorcherdsCartanMatrix, lam: Weight) -> bool:
    """Vanishes on every imaginary coroot. Works for any weight, dominant or not."""
    return all(lam.h[i] == 0 for i in A.im_idx)


def is_w_invariant(A: BorcherdsCartanMatrix, lam: Weight) -> bool:
    # s_i lam = lam - lam(h_i) alpha_i
    return all(lam.h[i] == 0 for i in A.real_idx)


def is_one_dimensional(A: BorcherdsCartanMatrix, lam: Weight) -> bool:
    return is_special(A, lam) and is_w_invariant(A, lam)
