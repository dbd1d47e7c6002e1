"""Homomorphisms on W x Q^im_+ and pruned Weyl-orbit enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .cartan import BorcherdsCartanMatrix, to_fraction
from .weights import Weight


class CharacterError(ValueError):
    pass


class BraidConsistencyError(CharacterError):
    pass


class ZeroValueError(CharacterError):
    pass


class NonUnitEpsError(CharacterError):
    pass


@dataclass(frozen=True)
class CharacterHom:
    """A homomorphism chi, fixed by its values on generators.

    ``eps[i] = chi(s_i, 0)`` for real ``i``; ``imval[j] = chi(1, alpha_j)``
    for imaginary ``j``.
    """

    eps: tuple[tuple[int, int], ...]
    imval: tuple[tuple[int, Fraction], ...]
    name: str = "custom"

    @property
    def eps_map(self) -> dict[int, int]:
        return dict(self.eps)

    @property
    def imval_map(self) -> dict[int, Fraction]:
        return dict(self.imval)

    def on_subset(self, C: Sequence[int]) -> Fraction:
        """``prod_{C^re} chi(s_i, 0) * prod_{C^im} chi(1, alpha_i)``."""
        eps, imval = self.eps_map, self.imval_map
        value = Fraction(1)
        for i in C:
            value *= eps[i] if i in eps else imval[i]
        return value

    def on_gamma(self, support: Sequence[int]) -> Fraction:
        imval = self.imval_map
        value = Fraction(1)
        for j in support:
            value *= imval[j]
        return value


def make_chi(A: BorcherdsCartanMatrix, kind: str = "sign",
             eps: Mapping[int, int] | None = None,
             imval: Mapping[int, object] | None = None) -> CharacterHom:
    """Build ``sign``, ``trivial`` or a ``custom`` homomorphism.

    Custom values default to +1 on generators they do not mention.
    """
    if kind == "sign":
        e = {i: -1 for i in A.real_idx}
        v = {j: Fraction(-1) for j in A.im_idx}
    elif kind == "trivial":
        e = {i: 1 for i in A.real_idx}
        v = {j: Fraction(1) for j in A.im_idx}
    elif kind == "custom":
        eps = {int(k): v for k, v in (eps or {}).items()}
        imval = {int(k): v for k, v in (imval or {}).items()}
        for k in eps:
            if k not in A.real_idx:
                raise CharacterError(f"eps given for non-real index {k}")
        for k in imval:
            if k not in A.im_idx:
                raise CharacterError(f"imval given for non-imaginary index {k}")
        e = {}
        for i in A.real_idx:
            x = eps.get(i, 1)
            if x not in (1, -1):
                raise NonUnitEpsError(f"chi(s_{i}) = {x}; reflections square to 1, so it must be +-1")
            e[i] = int(x)
        v = {}
        for j in A.im_idx:
            x = to_fraction(imval.get(j, 1))
            if x == 0:
                raise ZeroValueError(f"chi(1, alpha_{j}) must be nonzero")
            v[j] = x
    else:
        raise CharacterError(f"unknown character kind {kind!r}")

    # s_i s_j s_i = s_j s_i s_j forces chi(s_i) = chi(s_j)
    for i in A.real_idx:
        for j in A.real_idx:
            if i < j and A.a[i][j] * A.a[j][i] == 1 and e[i] != e[j]:
                raise BraidConsistencyError(
                    f"s_{i} and s_{j} are conjugate (braid order 3) but eps differ"
                )
    return CharacterHom(tuple(sorted(e.items())), tuple(sorted(v.items())), kind)


@dataclass(frozen=True)
class OrbitTerm:
    b: tuple[int, ...]
    length: int
    chi_w: int


def orbit_terms(A: BorcherdsCartanMatrix, lam: Weight, gamma: Sequence[int], H: int,
                chi: CharacterHom | None = None, reflections: Sequence[int] | None = None,
                bound: Sequence[int] | None = None) -> Iterator[OrbitTerm]:
    """Walk the orbit of ``lam + rho - gamma`` outward, pruned at height ``H``.

    Yields one term per Weyl element ``w`` with ``ht(b) <= H`` where
    ``(lam + rho) - w(lam + rho - gamma) = sum b_i alpha_i``. Only reflections
    in ``reflections`` (default: all real indices) generate the group.
    ``bound`` additionally prunes any ``b`` exceeding it componentwise; both
    prunings are safe because ``b`` only grows along length-increasing steps.
    """
    reals = tuple(A.real_idx if reflections is None else sorted(reflections))
    if any(not A.is_real(i) for i in reals):
        raise ValueError("reflections must be real indices")
    eps = chi.eps_map if chi is not None else {i: -1 for i in reals}
    a = A.a
    n = A.n
    # coroot values of lam + rho - gamma on the generating reflections
    start_mu = tuple(
        int(lam.h[j] + 1 - sum(gamma[i] * a[j][i] for i in range(n) if gamma[i]))
        for j in reals
    )
    start_b = tuple(int(x) for x in gamma)
    if sum(start_b) > H or (bound is not None and any(x > y for x, y in zip(start_b, bound))):
        return
    level = [(start_b, start_mu, 1)]
    seen = {start_b}
    length = 0
    while level:
        nxt = []
        for b, mu, sign in level:
            yield OrbitTerm(b, length, sign)
            height = sum(b)
            for p, j in enumerate(reals):
                step = mu[p]
                if step <= 0:
                    continue
                if height + step > H:
                    continue
                if bound is not None and b[j] + step > bound[j]:
                    continue
                nb = b[:j] + (b[j] + step,) + b[j + 1:]
                if nb in seen:
                    continue
                seen.add(nb)
                nmu = tuple(int(mu[q] - step * a[k][j]) for q, k in enumerate(reals))
                nxt.append((nb, nmu, sign * eps[j]))
        level = nxt
        length += 1
