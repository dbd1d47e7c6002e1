"""Normalized Weyl numerators U(lambda, chi), their factors, characters and logs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cartan import BorcherdsCartanMatrix
from .graphs import c_of_graph, dynkin_graph
from .series import TruncatedSeries
from .weights import Weight, mc_lambda, omega_lambda, pi_lambda
from .weyl import CharacterHom, make_chi, orbit_terms

DEFAULT_HEIGHT = 10


class NotAComponent(ValueError):
    pass


class HeightTooSmall(ValueError):
    pass


def _accumulate(A, lam, chi, H, reflections=None, within=None, bound=None) -> TruncatedSeries:
    terms: dict[tuple[int, ...], Fraction] = {}
    for gamma, support in omega_lambda(A, lam, within=within):
        chi_gamma = chi.on_gamma(support)
        for t in orbit_terms(A, lam, gamma, H, chi=chi, reflections=reflections, bound=bound):
            terms[t.b] = terms.get(t.b, 0) + t.chi_w * chi_gamma
    return TruncatedSeries(A.n, H, terms, bound)


def numerator(A: BorcherdsCartanMatrix, lam: Weight, chi: CharacterHom | None = None,
              H: int = DEFAULT_HEIGHT, bound: Sequence[int] | None = None) -> TruncatedSeries:
    """``U(lam, chi)`` truncated at height ``H``; ``chi`` defaults to the sign character."""
    if chi is None:
        chi = make_chi(A, "sign")
    return _numerator_cached(A, lam, chi, H, None if bound is None else tuple(bound))


@lru_cache(maxsize=4096)
def _numerator_cached(A, lam, chi, H, bound):
    return _accumulate(A, lam, chi, H, bound=bound)


def component_numerator(A: BorcherdsCartanMatrix, lam: Weight, chi: CharacterHom,
                        C: Sequence[int], H: int = DEFAULT_HEIGHT,
                        bound: Sequence[int] | None = None) -> TruncatedSeries:
    """The factor of ``U(lam, chi)`` attached to the component ``C`` of the graph of ``lam``."""
    C = tuple(sorted(C))
    if C not in mc_lambda(A, lam):
        raise NotAComponent(f"{C} is not a connected component of Pi({lam})")
    reflections = [i for i in C if A.is_real(i)]
    return _accumulate(A, lam, chi, H, reflections=reflections, within=C, bound=bound)


@dataclass(frozen=True)
class NumeratorBundle:
    lam: Weight
    chi: CharacterHom
    H: int
    U: TruncatedSeries
    factors: tuple[tuple[tuple[int, ...], TruncatedSeries], ...]


def numerator_bundle(A: BorcherdsCartanMatrix, lam: Weight, chi: CharacterHom,
                     H: int = DEFAULT_HEIGHT) -> NumeratorBundle:
    factors = tuple(
        (C, component_numerator(A, lam, chi, C, H)) for C in mc_lambda(A, lam)
    )
    return NumeratorBundle(lam, chi, H, numerator(A, lam, chi, H), factors)


def x_lambda_c(A: BorcherdsCartanMatrix, lam: Weight, C: Sequence[int]) -> tuple[int, ...]:
    """Exponent of ``X^lam(C)``: ``lam(h_i) + 1`` on real ``i``, 1 on imaginary ``i``."""
    C = set(C)
    return tuple(
        (lam.h[i] + 1 if A.is_real(i) else 1) if i in C else 0 for i in range(A.n)
    )


def predicted_log_coefficient(A: BorcherdsCartanMatrix, chi: CharacterHom,
                              C: Sequence[int]) -> Fraction:
    """``(-1)^|C| chi(C) c(G(C))``."""
    C = tuple(sorted(C))
    return (-1) ** len(C) * chi.on_subset(C) * c_of_graph(dynkin_graph(A, C))


def log_coefficient_check(A: BorcherdsCartanMatrix, lam: Weight, chi: CharacterHom,
                          C: Sequence[int], H: int | None = None) -> tuple[Fraction, Fraction]:
    """Coefficient of ``X^lam(C)`` in ``-log U(lam, chi)`` next to its predicted value.

    Only monomials dividing ``X^lam(C)`` can contribute, so the computation is
    cut down to that box.
    """
    C = tuple(sorted(C))
    if not set(C) <= set(pi_lambda(A, lam)):
        raise ValueError(f"{C} is not contained in Pi({lam})")
    target = x_lambda_c(A, lam, C)
    degree = sum(target)
    if H is None:
        H = degree
    if H < degree:
        raise HeightTooSmall(f"height {H} below deg X^lam(C) = {degree}")
    U = numerator(A, lam, chi, H, bound=target)
    computed = U.neg_log().coefficient(target)
    return computed, predicted_log_coefficient(A, chi, C)


@lru_cache(maxsize=256)
def _inverse_denominator_power(A: BorcherdsCartanMatrix, H: int, k: int) -> TruncatedSeries:
    if k == 0:
        return TruncatedSeries.one(A.n, H)
    if k == 1:
        return numerator(A, Weight.zero(A.n), None, H).invert()
    return _inverse_denominator_power(A, H, k - 1) * _inverse_denominator_power(A, H, 1)


def normalized_character(A: BorcherdsCartanMatrix, lam: Weight, H: int = DEFAULT_HEIGHT) -> TruncatedSeries:
    """``ch L(lam) e^{-lam} = U_lam / U_0`` up to height ``H``."""
    return numerator(A, lam, None, H) * _inverse_denominator_power(A, H, 1)


def tensor_character(A: BorcherdsCartanMatrix, weights: Sequence[Weight],
                     H: int = DEFAULT_HEIGHT) -> TruncatedSeries:
    """Product of the normalized characters of ``weights``."""
    # the series only sees coroot values, and factors commute
    return _tensor_cached(A, tuple(sorted(lam.h for lam in weights)), H)


@lru_cache(maxsize=8192)
def _tensor_cached(A, hs, H):
    top = TruncatedSeries.one(A.n, H)
    for h in hs:
        top = top * numerator(A, Weight(h), None, H)
    return top * _inverse_denominator_power(A, H, len(hs))
