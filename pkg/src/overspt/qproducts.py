"""q-Pochhammer products with monomial arguments, over base q**m."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .series import NonUnitConstantTerm, Series, one, over_binomial, times_binomial


class DivergentProduct(ValueError):
    pass


@dataclass(frozen=True)
class Monomial:
    """``sign * q**exponent``."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exponent + other.exponent)

    def __neg__(self):
        return Monomial(-self.sign, self.exponent)

    def __str__(self):
        body = "1" if self.exponent == 0 else ("q" if self.exponent == 1 else "q^%d" % self.exponent)
        return body if self.sign > 0 else "-" + body


def q(e: int = 1, sign: int = 1) -> Monomial:
    return Monomial(sign, e)


def _factor_count(a: Monomial, m: int, length: Optional[int], order: int) -> int:
    # factors whose varying part sits above the truncation are congruent to 1
    if a.exponent > order:
        live = 0
    else:
        live = (order - a.exponent) // m + 1
    if length is None:
        return live
    return min(length, live)


def apply_pochhammer(s: Series, a: Monomial, m: int = 1, length: Optional[int] = None,
                     inverse: bool = False) -> Series:
    """Multiply (or divide, with ``inverse``) ``s`` by ``(a; q^m)_length``.

    ``length=None`` means the infinite product.
    """
    if m < 1:
        raise ValueError("base exponent must be positive")
    if length is None and a.exponent == 0:
        raise DivergentProduct("(%s; q^%d)_inf has a factor with constant term" % (a, m))
    if length is not None and length < 0:
        raise ValueError("length must be non-negative")
    order = s.order
    for k in range(_factor_count(a, m, length, order)):
        e = a.exponent + m * k
        # factor is 1 - sign*q^e
        if e == 0:
            if inverse:
                raise NonUnitConstantTerm("factor 1 - (%s) is not a unit" % a)
            s = Series((1 - a.sign) * x for x in s.coeffs)
            continue
        s = over_binomial(s, -a.sign, e) if inverse else times_binomial(s, -a.sign, e)
    return s


def pochhammer_finite(a: Monomial, m: int, length: int, order: int) -> Series:
    return apply_pochhammer(one(order), a, m, length)


def pochhammer_infinite(a: Monomial, m: int, order: int) -> Series:
    return apply_pochhammer(one(order), a, m, None)


def pochhammer_ratio(num: Monomial, den: Monomial, m: int, order: int,
                     num_length: Optional[int] = None, den_length: Optional[int] = None) -> Series:
    """``(num; q^m)_num_length / (den; q^m)_den_length``."""
    s = apply_pochhammer(one(order), num, m, num_length)
    return apply_pochhammer(s, den, m, den_length, inverse=True)


def overpartition_gf(order: int) -> Series:
    return pochhammer_ratio(q(1, -1), q(1), 1, order)
