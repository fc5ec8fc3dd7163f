"""Truncated power series with exact rational coefficients.

A series holds coefficients for degrees 1..order; there is no constant
term.  That makes composition well defined degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PreconditionError


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise PreconditionError("series needs at least degree 1")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @staticmethod
    def monomial(order: int, degree: int = 1, value: Fraction | int = 1) -> TruncatedSeries:
        if not 1 <= degree <= order:
            raise InputError("monomial degree out of range")
        return TruncatedSeries(
            tuple(
                Fraction(value) if n == degree else Fraction(0)
                for n in range(1, order + 1)
            )
        )

    def coeff(self, n: int) -> Fraction:
        if not 1 <= n <= self.order:
            raise InputError(f"degree {n} outside 1..{self.order}")
        return self.coeffs[n - 1]

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise InputError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[:order])

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(
                self.coeffs[i] + other.coeffs[i] for i in range(order)
            )
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(
                self.coeffs[i] - other.coeffs[i] for i in range(order)
            )
        )

    def scale(self, c: Fraction | int) -> TruncatedSeries:
        c = Fraction(c)
        return TruncatedSeries(tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """self(inner(x)), truncated to the smaller order."""
        order = min(self.order, inner.order)
        inner_c = inner.coeffs[:order]
        result = [Fraction(0)] * order
        # power = inner^k, maintained truncated; lowest degree of inner^k is k.
        power = list(inner_c)
        for k in range(1, order + 1):
            ck = self.coeffs[k - 1]
            if ck != 0:
                for d in range(order):
                    if power[d] != 0:
                        result[d] += ck * power[d]
            if k < order:
                nxt = [Fraction(0)] * order
                for a in range(order):
                    if power[a] == 0:
                        continue
                    for b in range(order - a - 1):
                        if inner_c[b] != 0:
                            nxt[a + b + 1] += power[a] * inner_c[b]
                power = nxt
        return TruncatedSeries(tuple(result))

    def __str__(self) -> str:
        parts: list[str] = []
        for n, a in enumerate(self.coeffs, start=1):
            if a == 0:
                continue
            mag = abs(a)
            body = "x" if n == 1 else f"x^{n}"
            if mag != 1:
                body = f"{mag} {body}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if a > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"
