"""Borcherds-Cartan matrices: validation, symmetrizer, bilinear form."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class CartanError(ValueError):
    """Base class for matrix validation failures."""


class AxiomError(CartanError):
    """A Borcherds-Cartan axiom is violated.

    ``condition`` is 2, 3 or 4 (diagonal, off-diagonal, zero pattern) and
    ``entry`` the offending ``(i, j)`` position.
    """

    def __init__(self, condition: int, entry: tuple[int, int], message: str):
        super().__init__(f"condition ({condition}) violated at {entry}: {message}")
        self.condition = condition
        self.entry = entry


class SymmetrizabilityError(CartanError):
    """No positive diagonal ``d`` makes ``diag(d) A`` symmetric."""


def to_fraction(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string exactly. Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float entry {value!r}; use 'p/q'")
    return Fraction(value)


@dataclass(frozen=True)
class BorcherdsCartanMatrix:
    a: tuple[tuple[Fraction, ...], ...]
    d: tuple[Fraction, ...]
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def real_idx(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.a[i][i] == 2)

    @property
    def im_idx(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.a[i][i] != 2)

    def is_real(self, i: int) -> bool:
        return self.a[i][i] == 2

    def bilinear(self, i: int, j: int) -> Fraction:
        """``(alpha_i, alpha_j) = d_i a_ij``."""
        return self.d[i] * self.a[i][j]

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.a[i][j] != 0

    def with_symmetrizer(self, d: Sequence) -> "BorcherdsCartanMatrix":
        """Return a copy using a caller-chosen symmetrizer (checked)."""
        d = tuple(to_fraction(x) for x in d)
        if len(d) != self.n or any(x <= 0 for x in d):
            raise SymmetrizabilityError("symmetrizer must have n positive entries")
        for i in range(self.n):
            for j in range(self.n):
                if d[i] * self.a[i][j] != d[j] * self.a[j][i]:
                    raise SymmetrizabilityError(
                        f"d_{i} a_{i}{j} != d_{j} a_{j}{i} for supplied symmetrizer"
                    )
        return BorcherdsCartanMatrix(self.a, d, self.labels)

    def __str__(self) -> str:
        rows = ["[" + ", ".join(str(x) for x in row) + "]" for row in self.a]
        return "[" + ", ".join(rows) + "]"


def _check_axioms(a: list[list[Fraction]]) -> None:
    n = len(a)
    for i in range(n):
        if not (a[i][i] == 2 or a[i][i] <= 0):
            raise AxiomError(2, (i, i), f"a_ii = {a[i][i]} is neither 2 nor <= 0")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                raise AxiomError(3, (i, j), f"off-diagonal entry {a[i][j]} is positive")
            if a[i][i] == 2 and a[i][j].denominator != 1:
                raise AxiomError(3, (i, j), f"entry {a[i][j]} in a real row is not an integer")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise AxiomError(
                    4, (i, j), f"a_ij = {a[i][j]} but a_ji = {a[j][i]}"
                )


def compute_symmetrizer(entries: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Positive ``d`` with ``d_i a_ij = d_j a_ji``, minimum 1 on each Dynkin component.

    Propagates ``d_j = d_i a_ij / a_ji`` along a BFS tree of the Dynkin graph,
    then checks every edge, which catches inconsistent cycles.
    """
    a = [[to_fraction(x) for x in row] for row in entries]
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        component = [root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or a[i][j] == 0:
                    continue
                if a[j][i] == 0:
                    raise SymmetrizabilityError(f"a_{i}{j} != 0 but a_{j}{i} = 0")
                value = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    if value <= 0:
                        raise SymmetrizabilityError(f"non-positive ratio on edge ({i}, {j})")
                    d[j] = value
                    component.append(j)
                    queue.append(j)
                elif d[j] != value:
                    raise SymmetrizabilityError(
                        f"inconsistent cycle through edge ({i}, {j}): {d[j]} vs {value}"
                    )
        low = min(d[i] for i in component)
        for i in component:
            d[i] = d[i] / low
    return tuple(d)


def validate_matrix(entries: Sequence[Sequence], labels: Sequence[str] | None = None,
                    symmetrizer: Sequence | None = None) -> BorcherdsCartanMatrix:
    rows = [list(row) for row in entries]
    n = len(rows)
    if n == 0:
        raise CartanError("matrix must have rank >= 1")
    if any(len(row) != n for row in rows):
        raise CartanError("matrix must be square")
    a = [[to_fraction(x) for x in row] for row in rows]
    _check_axioms(a)
    d = compute_symmetrizer(a)
    if labels is None:
        labels = [f"a{i + 1}" for i in range(n)]
    elif len(labels) != n:
        raise CartanError(f"expected {n} labels, got {len(labels)}")
    bcm = BorcherdsCartanMatrix(tuple(tuple(r) for r in a), d, tuple(str(s) for s in labels))
    if symmetrizer is not None:
        bcm = bcm.with_symmetrizer(symmetrizer)
    return bcm
