"""
Truncated formal power series in q with exact integer coefficients.

A ``Series`` of order N stands for a class modulo q^(N+1).  Binary operations
return a result at the smaller of the two operand orders, so a coefficient is
never reported beyond the point where both inputs are known.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple


class NonUnitConstantTerm(ValueError):
    pass


class IndexBeyondOrder(IndexError):
    pass


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return coeff(self, i)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Series(%s)" % list(self.coeffs)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "q" if i == 1 else "q^%d" % i
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append("%d*%s" % (c, mono))
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return "%s + O(q^%d)" % (body, self.order + 1)

    def __neg__(self):
        return negate(self)

    def __add__(self, other):
        return add(self, _promote(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _promote(other, self.order))

    def __rsub__(self, other):
        return sub(_promote(other, self.order), self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, _promote(other, self.order))

    def __rtruediv__(self, other):
        return div(_promote(other, self.order), self)


def _promote(x, order: int) -> Series:
    if isinstance(x, Series):
        return x
    if isinstance(x, int):
        return Series([x] + [0] * order)
    raise TypeError("cannot combine Series with %r" % type(x).__name__)


def zero(order: int) -> Series:
    return Series([0] * (order + 1))


def one(order: int) -> Series:
    return Series([1] + [0] * order)


def monomial(sign: int, e: int, order: int) -> Series:
    """``sign * q**e``; zero when ``e`` lies beyond the truncation order."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if e < 0:
        raise ValueError("negative exponents are not supported")
    c = [0] * (order + 1)
    if e <= order:
        c[e] = sign
    return Series(c)


def from_poly(coeffs: Sequence[int], order: int) -> Series:
    """A polynomial given by its low-to-high coefficients, truncated to ``order``."""
    c = list(coeffs[: order + 1])
    return Series(c + [0] * (order + 1 - len(c)))


def truncate(a: Series, order: int) -> Series:
    if order > a.order:
        raise IndexBeyondOrder("cannot extend a series from order %d to %d" % (a.order, order))
    return Series(a.coeffs[: order + 1])


def add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order) + 1
    return Series(x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n]))


def sub(a: Series, b: Series) -> Series:
    n = min(a.order, b.order) + 1
    return Series(x - y for x, y in zip(a.coeffs[:n], b.coeffs[:n]))


def negate(a: Series) -> Series:
    return Series(-x for x in a.coeffs)


def scale(a: Series, c: int) -> Series:
    return Series(c * x for x in a.coeffs)


def shift(a: Series, e: int) -> Series:
    """Multiply by ``q**e`` keeping the order of ``a``."""
    if e < 0:
        raise ValueError("negative shifts are not supported")
    n = a.order + 1
    return Series(([0] * e + list(a.coeffs))[:n])


def mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order) + 1
    bc = b.coeffs
    out = [0] * n
    for i, x in enumerate(a.coeffs[:n]):
        if x == 0:
            continue
        for j in range(n - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return Series(out)


def invert(a: Series) -> Series:
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm("constant term %d is not a unit in Z[[q]]" % c0)
    ac = a.coeffs
    n = len(ac)
    # c0 is its own inverse
    out = [0] * n
    out[0] = c0
    for k in range(1, n):
        s = 0
        for i in range(1, k + 1):
            if ac[i]:
                s += ac[i] * out[k - i]
        out[k] = -c0 * s
    return Series(out)


def div(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return mul(truncate(a, n), invert(truncate(b, n)))


def times_binomial(a: Series, c: int, e: int) -> Series:
    """``a * (1 + c*q**e)`` in O(order)."""
    out = list(a.coeffs)
    if c:
        for i in range(len(out) - 1, e - 1, -1):
            out[i] += c * out[i - e]
    return Series(out)


def over_binomial(a: Series, c: int, e: int) -> Series:
    """``a / (1 + c*q**e)`` in O(order); needs ``e >= 1``."""
    if e < 1:
        raise NonUnitConstantTerm("1 + c*q^0 is not handled here; use div")
    out = list(a.coeffs)
    if c:
        for i in range(e, len(out)):
            out[i] -= c * out[i - e]
    return Series(out)


def substitute_q_power(a: Series, m: int) -> Series:
    if m < 1:
        raise ValueError("substitution power must be positive")
    out = [0] * (a.order + 1)
    for i in range(a.order // m + 1):
        out[m * i] = a.coeffs[i]
    return Series(out)


def coeff(a: Series, i: int) -> int:
    if i < 0 or i > a.order:
        raise IndexBeyondOrder("coefficient %d requested from a series of order %d" % (i, a.order))
    return a.coeffs[i]


def first_mismatch(a: Series, b: Series, up_to: Optional[int] = None) -> Optional[Tuple[int, int, int]]:
    """Return ``(index, a_coeff, b_coeff)`` for the lowest differing index, or None."""
    if up_to is None:
        up_to = min(a.order, b.order)
    if up_to > a.order or up_to > b.order:
        raise IndexBeyondOrder("comparison up to %d exceeds operand order" % up_to)
    for i in range(up_to + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return i, a.coeffs[i], b.coeffs[i]
    return None


def equal(a: Series, b: Series, up_to: Optional[int] = None) -> bool:
    return first_mismatch(a, b, up_to) is None
