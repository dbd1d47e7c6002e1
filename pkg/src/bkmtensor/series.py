"""Truncated multivariate power series in ``X_i = e^{-alpha_i}``.

A series keeps only monomials ``X^m`` with total degree ``sum(m) <= H``. An
optional per-variable ``bound`` additionally drops monomials with
``m[i] > bound[i]``; both cut-offs are ideals, so products and logarithms are
exact on every retained coefficient.

Coefficients are exact: ``int`` when integral, ``Fraction`` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class SeriesError(ValueError):
    pass


class HeightMismatch(SeriesError):
    pass


class HeightExceeded(SeriesError):
    pass


class ConstantTermError(SeriesError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(m: Exponent) -> tuple[int, Exponent]:
    """Sort key: total degree first, then the exponent tuple itself."""
    return (sum(m), m)


class TruncatedSeries:
    __slots__ = ("n", "H", "bound", "terms")

    def __init__(self, n: int, H: int, terms: Mapping[Exponent, Rational] | None = None,
                 bound: Sequence[int] | None = None):
        if H < 0:
            raise SeriesError("truncation height must be >= 0")
        self.n = n
        self.H = H
        self.bound = None if bound is None else tuple(int(b) for b in bound)
        if self.bound is not None and len(self.bound) != n:
            raise SeriesError("bound has the wrong length")
        clean: dict[Exponent, Rational] = {}
        for m, c in (terms or {}).items():
            m = tuple(int(x) for x in m)
            if len(m) != n or any(x < 0 for x in m):
                raise SeriesError(f"bad exponent vector {m} for rank {n}")
            if c != 0 and self._keeps(m):
                clean[m] = _norm(Fraction(c) if not isinstance(c, int) else c)
        self.terms = clean

    # construction helpers

    @classmethod
    def one(cls, n: int, H: int, bound=None) -> "TruncatedSeries":
        return cls(n, H, {(0,) * n: 1}, bound)

    @classmethod
    def zero(cls, n: int, H: int, bound=None) -> "TruncatedSeries":
        return cls(n, H, {}, bound)

    @classmethod
    def monomial(cls, n: int, H: int, m: Exponent, c=1, bound=None) -> "TruncatedSeries":
        return cls(n, H, {tuple(m): c}, bound)

    def _keeps(self, m: Exponent) -> bool:
        if sum(m) > self.H:
            return False
        if self.bound is not None and any(x > b for x, b in zip(m, self.bound)):
            return False
        return True

    def _new(self, terms: dict) -> "TruncatedSeries":
        # terms already normalized and within the cut-off
        s = TruncatedSeries.__new__(TruncatedSeries)
        s.n, s.H, s.bound, s.terms = self.n, self.H, self.bound, terms
        return s

    def _check(self, other: "TruncatedSeries") -> None:
        if self.n != other.n:
            raise HeightMismatch(f"rank {self.n} vs {other.n}")
        if self.H != other.H or self.bound != other.bound:
            raise HeightMismatch(
                f"truncation H={self.H}, bound={self.bound} vs H={other.H}, bound={other.bound}"
            )

    # ring operations

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm(v)
            else:
                out.pop(m, None)
        return self._new(out)

    def __neg__(self) -> "TruncatedSeries":
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c) -> "TruncatedSeries":
        if c == 0:
            return self._new({})
        if not isinstance(c, int):
            c = _norm(Fraction(c))
        return self._new({m: _norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        H, bound = self.H, self.bound
        right = sorted(((sum(m), m, c) for m, c in other.terms.items()), key=lambda t: t[0])
        out: dict[Exponent, Rational] = {}
        get = out.get
        for m1, c1 in self.terms.items():
            room = H - sum(m1)
            for d2, m2, c2 in right:
                if d2 > room:
                    break
                m = tuple(x + y for x, y in zip(m1, m2))
                if bound is not None and any(x > b for x, b in zip(m, bound)):
                    continue
                out[m] = get(m, 0) + c1 * c2
        return self._new({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.invert() ** (-k)
        result = TruncatedSeries.one(self.n, self.H, self.bound)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.n, self.H, self.bound, self.terms) == (other.n, other.H, other.bound, other.terms)

    def __hash__(self):
        return hash((self.n, self.H, self.bound, frozenset(self.terms.items())))

    # queries

    @property
    def constant_term(self):
        return Fraction(self.terms.get((0,) * self.n, 0))

    def coefficient(self, m: Iterable[int]) -> Fraction:
        m = tuple(m)
        if len(m) != self.n:
            raise SeriesError(f"exponent {m} has wrong length")
        if sum(m) > self.H:
            raise HeightExceeded(f"degree {sum(m)} exceeds truncation height {self.H}")
        if self.bound is not None and any(x > b for x, b in zip(m, self.bound)):
            raise HeightExceeded(f"exponent {m} exceeds bound {self.bound}")
        return Fraction(self.terms.get(m, 0))

    def items(self) -> list[tuple[Exponent, Rational]]:
        """Terms in graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.n: 1}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def truncate(self, H: int, bound=None) -> "TruncatedSeries":
        """Re-truncate to a smaller (or equal) cut-off."""
        if H > self.H:
            raise HeightExceeded(f"cannot raise truncation height {self.H} to {H}")
        return TruncatedSeries(self.n, H, self.terms, bound if bound is not None else self.bound)

    def project(self, C: Iterable[int]) -> "TruncatedSeries":
        """Keep exactly the monomials whose support is ``C``."""
        C = set(C)
        return self._new({
            m: c for m, c in self.terms.items()
            if {i for i, x in enumerate(m) if x} == C
        })

    def _zeta(self) -> "TruncatedSeries":
        zero = (0,) * self.n
        if self.terms.get(zero, 0) != 1:
            raise ConstantTermError(f"constant term is {self.terms.get(zero, 0)}, expected 1")
        return self._new({m: -c for m, c in self.terms.items() if m != zero})

    def neg_log(self) -> "TruncatedSeries":
        """``-log f = sum_k zeta^k / k`` where ``f = 1 - zeta``."""
        zeta = self._zeta()
        acc: dict[Exponent, Rational] = {}
        power, k = zeta, 1
        while power:
            for m, c in power.terms.items():
                acc[m] = acc.get(m, 0) + Fraction(c) / k
            power = power * zeta
            k += 1
        return self._new({m: _norm(c) for m, c in acc.items() if c})

    def invert(self) -> "TruncatedSeries":
        """Neumann series ``1 + zeta + zeta^2 + ...`` for ``1 / (1 - zeta)``."""
        zeta = self._zeta()
        result = TruncatedSeries.one(self.n, self.H, self.bound)
        power = zeta
        while power:
            result = result + power
            power = power * zeta
        return result

    def __repr__(self) -> str:
        return f"TruncatedSeries(n={self.n}, H={self.H}, {self.pretty()})"

    def pretty(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"X{i + 1}" for i in range(self.n)]
        parts = []
        for m, c in self.items():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def product(factors: Iterable[TruncatedSeries], n: int, H: int, bound=None) -> TruncatedSeries:
    result = TruncatedSeries.one(n, H, bound)
    for f in factors:
        result = result * f
    return result
