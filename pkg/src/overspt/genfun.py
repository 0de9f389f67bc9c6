"""
Generating functions for overpartitions whose smallest non-overlined part is
repeated exactly k times.

Every rational function here has a unit constant term in its denominator, so
it is carried as a truncated integer power series rather than symbolically.
"""

from __future__ import annotations

import enum
from typing import Tuple

from .qproducts import Monomial, apply_pochhammer, pochhammer_finite, pochhammer_ratio, q
from .series import (
    Series,
    add,
    div,
    equal,
    from_poly,
    monomial,
    mul,
    one,
    over_binomial,
    scale,
    shift,
    sub,
    zero,
)


class UnknownAuxName(KeyError):
    pass


class UnsupportedSpecialization(ValueError):
    pass


class SptKind(enum.Enum):
    SPTK = "SPTK"
    SPTK_SIGNED = "SPTK_SIGNED"
    SPTK_ODD = "SPTK_ODD"
    SPTK_ODD_SIGNED = "SPTK_ODD_SIGNED"

    @property
    def base(self) -> int:
        return 2 if self in (SptKind.SPTK_ODD, SptKind.SPTK_ODD_SIGNED) else 1

    @property
    def signed(self) -> bool:
        return self in (SptKind.SPTK_SIGNED, SptKind.SPTK_ODD_SIGNED)


class AuxName(enum.Enum):
    PBAR = "PBAR"
    PBAR_E = "PBAR_E"
    PBAR_O = "PBAR_O"
    NO_UNOVERLINED_ONES = "NO_UNOVERLINED_ONES"
    PBAR_OEX = "PBAR_OEX"
    PBAR_OEX_SIGNED = "PBAR_OEX_SIGNED"


def _check_k(k: int):
    if k < 1:
        raise ValueError("k must be a positive integer, got %r" % (k,))


def _poly(order: int, terms: dict) -> Series:
    """Polynomial from an ``{exponent: coefficient}`` mapping."""
    c = [0] * (max(terms) + 1)
    for e, v in terms.items():
        c[e] += v
    return from_poly(c, order)


def gf_definitional(kind: SptKind, k: int, order: int) -> Series:
    """Sum over the smallest non-overlined part s of q^(k s) times the parts-above factor.

    Parts above s contribute ``(-q^{s+1}; q^m)_inf / (q^{s+1}; q^m)_inf`` with
    ``m = 2`` for the parity-restricted kinds; the signed kinds swap the two
    products so each part above s carries a factor -1.
    """
    _check_k(k)
    kind = SptKind(kind)
    m = kind.base
    total = zero(order)
    for n in range(1, order // k + 1):
        start = monomial(1, k * n, order)
        plus, minus = q(n + 1, -1), q(n + 1)
        num, den = (minus, plus) if kind.signed else (plus, minus)
        term = apply_pochhammer(start, num, m)
        term = apply_pochhammer(term, den, m, inverse=True)
        total = add(total, term)
    return total


def pbar_recurrence(k: int, order: int) -> Series:
    _check_k(k)
    p = one(order)
    for j in range(2, k + 1):
        p = add(mul(_poly(order, {j - 1: 1, 0: -1}), p), _poly(order, {j - 1: 1, j: 1}))
        p = over_binomial(p, 1, j)
    return p


def pbar_closed(k: int, order: int) -> Series:
    _check_k(k)
    lead = div(_poly(order, {k - 1: 1, k: 1}), _poly(order, {0: 1, k: 1}))
    acc = zero(order)
    for j in range(k - 1):
        L = k - j - 2
        t = pochhammer_ratio(q(1, -1), q(1), 1, order, L, L)
        t = scale(shift(t, k - j - 2), (-1) ** j)
        acc = add(acc, t)
    pref = pochhammer_ratio(q(1), q(2, -1), 1, order, k - 1, k - 1)
    return sub(lead, mul(pref, acc))


def vbar_recurrence(k: int, order: int) -> Series:
    _check_k(k)
    v = monomial(1, 1, order) * 2
    for j in range(2, k + 1):
        v = add(mul(_poly(order, {2 * j - 1: 1, 1: -1}), v), _poly(order, {j: 2, j + 2: 2}))
        v = over_binomial(v, 1, 2 * j)
    return v


def wbar_recurrence(k: int, order: int) -> Series:
    _check_k(k)
    w = over_binomial(monomial(1, 1, order), 1, 2)
    for j in range(2, k + 1):
        w = add(mul(_poly(order, {2 * j - 1: 1, 1: -1}), w), monomial(1, 2 * j - 1, order))
        w = over_binomial(w, 1, 2 * j)
    return w


def tbar_recurrence(k: int, order: int) -> Series:
    _check_k(k)
    t = div(_poly(order, {1: -1, 2: -1}), _poly(order, {0: 1, 2: 1}))
    for j in range(2, k + 1):
        t = sub(mul(_poly(order, {1: 1, 2 * j - 1: -1}), t), _poly(order, {2 * j - 1: 1, 2 * j: 1}))
        t = over_binomial(t, 1, 2 * j)
    return t


def _even_ratio(L: int, order: int) -> Series:
    # (-q^2;q^2)_L / (q^2;q^2)_L
    return pochhammer_ratio(q(2, -1), q(2), 2, order, L, L)


def _even_prefactor(k: int, order: int) -> Series:
    # (q^2;q^2)_{k-1} / (-q^2;q^2)_k
    return pochhammer_ratio(q(2), q(2, -1), 2, order, k - 1, k)


def vbar_closed(k: int, order: int) -> Series:
    _check_k(k)
    first = div(_poly(order, {k: 2}), _poly(order, {0: 1, 2 * k: 1}))
    acc = zero(order)
    for j in range(k - 1):
        acc = add(acc, scale(_even_ratio(k - j - 2, order), (-1) ** (j + 1)))
    second = scale(shift(mul(_even_prefactor(k, order), acc), k), 2)
    return mul(_poly(order, {0: 1, 2: 1}), add(first, second))


def wbar_closed(k: int, order: int) -> Series:
    _check_k(k)
    first = div(_poly(order, {2 * k - 1: 1}), _poly(order, {0: 1, 2 * k: 1}))
    acc = zero(order)
    for j in range(k - 1):
        # q^(2k-2) * q^(-j) folded into one exponent, which stays >= k
        t = shift(_even_ratio(k - j - 2, order), 2 * k - 2 - j)
        acc = add(acc, scale(t, (-1) ** (j + 1)))
    return add(first, mul(_even_prefactor(k, order), acc))


def tbar_closed(k: int, order: int) -> Series:
    _check_k(k)
    one_plus_q = _poly(order, {0: 1, 1: 1})
    first = div(_poly(order, {2 * k - 1: 1, 2 * k: 1}), _poly(order, {0: 1, 2 * k: 1}))
    acc = zero(order)
    for j in range(k - 1):
        acc = add(acc, shift(_even_ratio(k - j - 2, order), 2 * k - j - 2))
    second = mul(one_plus_q, mul(_even_prefactor(k, order), acc))
    return sub(scale(first, -1), second)


def rhs_theorem(kind: SptKind, k: int, order: int, *, proof_variant: bool = False) -> Series:
    """Right-hand side of the closed identity for the given spt kind.

    ``proof_variant`` only affects ``SPTK_ODD_SIGNED``: the tail term's
    denominator uses ``(-q^2;q^2)_{k-1}`` instead of ``(-q^2;q^2)_k``.
    """
    _check_k(k)
    kind = SptKind(kind)
    if kind is SptKind.SPTK:
        main = mul(pbar_recurrence(k, order), pochhammer_ratio(q(2, -1), q(2), 1, order))
        tail = pochhammer_ratio(q(1), q(1, -1), 1, order, k - 1, k)
        return add(main, scale(tail, (-1) ** k))
    if kind is SptKind.SPTK_SIGNED:
        return sub(pochhammer_ratio(q(1), q(1, -1), 1, order, k - 1, k),
                   pochhammer_ratio(q(1), q(1, -1), 1, order))
    if kind is SptKind.SPTK_ODD:
        even = mul(vbar_recurrence(k, order), pochhammer_ratio(q(4, -1), q(2), 2, order))
        odd = mul(wbar_recurrence(k, order), pochhammer_ratio(q(1, -1), q(3), 2, order))
        tail = scale(shift(_even_prefactor(k, order), k), 2 * (-1) ** k)
        return add(add(even, odd), tail)
    main = mul(tbar_recurrence(k, order), pochhammer_ratio(q(1), q(1, -1), 2, order))
    den_len = k - 1 if proof_variant else k
    tail = scale(shift(pochhammer_ratio(q(2), q(2, -1), 2, order, k - 1, den_len), k), 2)
    return add(main, tail)


_AUX = {
    AuxName.PBAR: (q(1, -1), q(1), 1),
    AuxName.PBAR_E: (q(2, -1), q(2), 2),
    AuxName.PBAR_O: (q(1, -1), q(1), 2),
    AuxName.NO_UNOVERLINED_ONES: None,
    AuxName.PBAR_OEX: (q(1, -1), q(3), 2),
    AuxName.PBAR_OEX_SIGNED: (q(1), q(3, -1), 2),
}


def aux_gf(name, order: int) -> Series:
    try:
        name = AuxName(name.value if isinstance(name, AuxName) else str(name).upper())
    except ValueError:
        raise UnknownAuxName(name) from None
    if name is AuxName.NO_UNOVERLINED_ONES:
        # overlined parts from 1 upward, non-overlined parts from 2 upward
        s = apply_pochhammer(one(order), q(1, -1), 1)
        return apply_pochhammer(s, q(2), 1, inverse=True)
    num, den, m = _AUX[name]
    return pochhammer_ratio(num, den, m, order)


def q_binomial_sides(a: Monomial, z: Monomial, m: int, order: int) -> Tuple[Series, Series]:
    """Both sides of sum_n (a;q^m)_n/(q^m;q^m)_n z^n = (az;q^m)_inf/(z;q^m)_inf."""
    if z.exponent < 1:
        raise UnsupportedSpecialization("z must have positive exponent")
    lhs = zero(order)
    for n in range(order // z.exponent + 1):
        term = monomial(z.sign ** n, z.exponent * n, order)
        term = apply_pochhammer(term, a, m, n)
        term = apply_pochhammer(term, q(m), m, n, inverse=True)
        lhs = add(lhs, term)
    rhs = pochhammer_ratio(a * z, z, m, order)
    return lhs, rhs


def check_q_binomial(a: Monomial, z: Monomial, m: int, order: int) -> bool:
    return equal(*q_binomial_sides(a, z, m, order))


def asv_sides(a: Monomial, b: Monomial, m: int, order: int) -> Tuple[Series, Series]:
    """Both sides of the Andrews-Subbarao-Vidyasagar summation with q -> q^m.

    sum_n (a;q^m)_n/(b;q^m)_n q^(mn)
        = q^m (a;q^m)_inf / (b (b;q^m)_inf (1 - a q^m/b)) + (1 - q^m/b)/(1 - a q^m/b)

    ``1/b`` only appears through ``q^m/b`` and ``a q^m/b``, which stay
    monomials when ``1 <= b.exponent <= m``.
    """
    if a.exponent < 1:
        raise UnsupportedSpecialization("a must have positive exponent")
    if not 1 <= b.exponent <= m:
        raise UnsupportedSpecialization("b must satisfy 1 <= exponent <= %d" % m)
    # 1/b = b.sign * q^(-b.exponent)
    qm_over_b = Monomial(b.sign, m - b.exponent)
    aqm_over_b = a * qm_over_b
    lhs = zero(order)
    for n in range(order // m + 1):
        term = monomial(1, m * n, order)
        term = apply_pochhammer(term, a, m, n)
        term = apply_pochhammer(term, b, m, n, inverse=True)
        lhs = add(lhs, term)
    one_minus_aqb = pochhammer_finite(aqm_over_b, 1, 1, order)
    first = pochhammer_ratio(a, b, m, order)
    first = mul(monomial(qm_over_b.sign, qm_over_b.exponent, order), first)
    second = pochhammer_finite(qm_over_b, 1, 1, order)
    rhs = div(add(first, second), one_minus_aqb)
    return lhs, rhs


def check_asv(a: Monomial, b: Monomial, m: int, order: int) -> bool:
    return equal(*asv_sides(a, b, m, order))
