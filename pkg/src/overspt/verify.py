"""Identity checks with first-mismatch reports."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import genfun
from .enumeration import AUX_FUNCTIONS, SPT_FUNCTIONS, CountFunction, count
from .genfun import AuxName, SptKind
from .qproducts import Monomial, q
from .series import Series, add, first_mismatch, monomial, scale, shift

DEFAULT_ORDER = 80
DEFAULT_KMAX = 8
DEFAULT_ORACLE_BOUND = 24


class IdentityId(enum.Enum):
    THM_SPTK = "THM_SPTK"
    THM_SPTK_CLOSED = "THM_SPTK_CLOSED"
    THM_SPTK_SIGNED = "THM_SPTK_SIGNED"
    THM_SPTKO = "THM_SPTKO"
    THM_SPTKO_CLOSED = "THM_SPTKO_CLOSED"
    THM_SPTKO_SIGNED = "THM_SPTKO_SIGNED"
    THM_SPTKO_SIGNED_CLOSED = "THM_SPTKO_SIGNED_CLOSED"
    COR_SPTK = "COR_SPTK"
    COR_SPTKO = "COR_SPTKO"
    COR_SPTKO_SIGNED = "COR_SPTKO_SIGNED"
    QBINOM = "QBINOM"
    ASV = "ASV"
    ORACLE_CROSSCHECK = "ORACLE_CROSSCHECK"


_THEOREMS = {
    IdentityId.THM_SPTK: SptKind.SPTK,
    IdentityId.THM_SPTK_SIGNED: SptKind.SPTK_SIGNED,
    IdentityId.THM_SPTKO: SptKind.SPTK_ODD,
    IdentityId.THM_SPTKO_SIGNED: SptKind.SPTK_ODD_SIGNED,
}

_CLOSED = {
    IdentityId.THM_SPTK_CLOSED: (("P", genfun.pbar_recurrence, genfun.pbar_closed),),
    IdentityId.THM_SPTKO_CLOSED: (("V", genfun.vbar_recurrence, genfun.vbar_closed),
                                  ("W", genfun.wbar_recurrence, genfun.wbar_closed)),
    IdentityId.THM_SPTKO_SIGNED_CLOSED: (("T", genfun.tbar_recurrence, genfun.tbar_closed),),
}

# (a, b, base) triples where the summation formula is applied
ASV_SPECIALIZATIONS: Dict[str, Tuple[Monomial, Monomial, int]] = {
    "a=q,b=-q,base=1": (q(1), q(1, -1), 1),
    "a=q,b=-q,base=2": (q(1), q(1, -1), 2),
    "a=q^2,b=-q^2,base=2": (q(2), q(2, -1), 2),
    "a=-q,b=q,base=2": (q(1, -1), q(1), 2),
    "a=-q^2,b=q^2,base=2": (q(2, -1), q(2), 2),
}


@dataclass
class VerificationReport:
    identity: IdentityId
    k: Optional[int]
    order: int
    passed: bool
    first_mismatch: Optional[Tuple[int, int, int]] = None
    elapsed: float = 0.0
    detail: Optional[str] = None

    def __post_init__(self):
        assert self.passed == (self.first_mismatch is None)

    def to_dict(self) -> dict:
        fm = self.first_mismatch
        return {
            "identity": self.identity.value,
            "k": self.k,
            "order": self.order,
            "passed": self.passed,
            "first_mismatch": None if fm is None else {"index": fm[0], "lhs": fm[1], "rhs": fm[2]},
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
            "detail": self.detail,
        }

    def key(self) -> tuple:
        """Everything except timing, for determinism checks."""
        d = self.to_dict()
        d.pop("elapsed_ms")
        return tuple(sorted(d.items(), key=lambda kv: kv[0]))


def series_for(fn, k: int, order: int) -> Series:
    """Series whose q^n coefficient is ``count(fn, k, n)``."""
    fn = CountFunction(fn)
    if not fn.uses_k:
        return genfun.aux_gf(AuxName(fn.value), order)
    if fn.value in SptKind.__members__:
        return genfun.gf_definitional(SptKind(fn.value), k, order)
    odd = fn in (CountFunction.SPTK_ODD_EVEN_ABOVE, CountFunction.SPTK_ODD_ODD_ABOVE)
    plain = genfun.gf_definitional(SptKind.SPTK_ODD if odd else SptKind.SPTK, k, order)
    signed = genfun.gf_definitional(SptKind.SPTK_ODD_SIGNED if odd else SptKind.SPTK_SIGNED, k, order)
    even_half = fn in (CountFunction.SPTK_EVEN_ABOVE, CountFunction.SPTK_ODD_EVEN_ABOVE)
    doubled = [a + b if even_half else a - b for a, b in zip(plain, signed)]
    if any(c % 2 for c in doubled):
        raise ArithmeticError("%s: plain and signed series differ in parity" % fn.value)
    return Series(c // 2 for c in doubled)


def _mismatch_in(pairs) -> Optional[Tuple[int, int, int]]:
    for n, lhs, rhs in pairs:
        if lhs != rhs:
            return n, lhs, rhs
    return None


def _theorem(identity: IdentityId, k: int, order: int):
    kind = _THEOREMS[identity]
    lhs = genfun.gf_definitional(kind, k, order)
    fm = first_mismatch(lhs, genfun.rhs_theorem(kind, k, order))
    if kind is not SptKind.SPTK_ODD_SIGNED:
        return fm, None
    if fm is None:
        return fm, "stated denominator (-q^2;q^2)_k holds"
    alt = first_mismatch(lhs, genfun.rhs_theorem(kind, k, order, proof_variant=True))
    if alt is None:
        return fm, "stated denominator (-q^2;q^2)_k fails; (-q^2;q^2)_{k-1} holds"
    return fm, "both (-q^2;q^2)_k and (-q^2;q^2)_{k-1} fail"


def _closed(identity: IdentityId, k: int, order: int):
    for name, rec, closed in _CLOSED[identity]:
        fm = first_mismatch(rec(k, order), closed(k, order))
        if fm is not None:
            return fm, "%s_k recurrence vs closed form" % name
    return None, None


def _corollary_parts(identity: IdentityId, order: int):
    """Series-route data for a corollary: the main spt series, its shift, auxiliary side,
    the full rearranged identity, and the index where the coefficient statement starts."""
    if identity is IdentityId.COR_SPTK:
        s = genfun.gf_definitional(SptKind.SPTK, 1, order)
        shifted = shift(s, 1)
        rhs = genfun.aux_gf(AuxName.NO_UNOVERLINED_ONES, order)
        full_lhs = add(add(s, shifted), monomial(1, 0, order))
        return s, shifted, rhs, full_lhs, rhs, 2
    if identity is IdentityId.COR_SPTKO:
        s = genfun.gf_definitional(SptKind.SPTK_ODD, 1, order)
        shifted = shift(s, 2)
        pe = genfun.aux_gf(AuxName.PBAR_E, order)
        poex = genfun.aux_gf(AuxName.PBAR_OEX, order)
        rhs = shift(add(scale(pe, 2), poex), 1)
        full_lhs = add(add(s, shifted), scale(monomial(1, 1, order), 2))
        return s, shifted, rhs, full_lhs, rhs, 3
    s = genfun.gf_definitional(SptKind.SPTK_ODD_SIGNED, 1, order)
    shifted = shift(s, 2)
    poex_signed = genfun.aux_gf(AuxName.PBAR_OEX_SIGNED, order)
    rhs = scale(shift(poex_signed, 1), -1)
    full_lhs = add(s, shifted)
    full_rhs = add(scale(monomial(1, 1, order), 2), rhs)
    return s, shifted, rhs, full_lhs, full_rhs, 3


def _corollary_oracle(identity: IdentityId, n: int) -> Tuple[int, int]:
    if identity is IdentityId.COR_SPTK:
        return count("SPTK", 1, n) + count("SPTK", 1, n - 1), count("NO_UNOVERLINED_ONES", 1, n)
    if identity is IdentityId.COR_SPTKO:
        lhs = count("SPTK_ODD", 1, n) + count("SPTK_ODD", 1, n - 2)
        return lhs, 2 * count("PBAR_E", 1, n - 1) + count("PBAR_OEX", 1, n - 1)
    lhs = count("SPTK_ODD_SIGNED", 1, n) + count("SPTK_ODD_SIGNED", 1, n - 2)
    return lhs, -count("PBAR_OEX_SIGNED", 1, n - 1)


def _corollary(identity: IdentityId, order: int, oracle_bound: int):
    s, shifted, rhs, full_lhs, full_rhs, start = _corollary_parts(identity, order)
    lhs = add(s, shifted)
    fm = _mismatch_in((n, lhs[n], rhs[n]) for n in range(start, order + 1))
    if fm is not None:
        return fm, "series route, coefficient statement"
    fm = first_mismatch(full_lhs, full_rhs)
    if fm is not None:
        return fm, "series route, full rearranged identity"
    top = min(order, oracle_bound)
    fm = _mismatch_in((n, *_corollary_oracle(identity, n)) for n in range(start, top + 1))
    if fm is not None:
        return fm, "oracle route"
    return None, "series n=%d..%d, oracle n=%d..%d" % (start, order, start, top)


def _crosscheck(fn: CountFunction, k: int, order: int, oracle_bound: int):
    top = min(order, oracle_bound)
    series = series_for(fn, k, top)
    fm = _mismatch_in((n, series[n], count(fn, k, n)) for n in range(1, top + 1))
    return fm, "%s n=1..%d" % (fn.value, top)


def verify_identity(identity, k: Optional[int] = None, order: int = DEFAULT_ORDER, *,
                    oracle_bound: int = DEFAULT_ORACLE_BOUND,
                    function=None, specialization: Optional[str] = None) -> VerificationReport:
    """Run one identity check.

    ``k`` is the repetition count for theorem and crosscheck ids and the
    exponent of ``z = q^k`` for ``QBINOM``.  ``function`` picks the statistic
    for ``ORACLE_CROSSCHECK`` (default SPTK); ``specialization`` picks a key of
    ``ASV_SPECIALIZATIONS`` (default the first).
    """
    identity = IdentityId(identity)
    if order < 4:
        raise ValueError("order must be at least 4")
    t0 = time.perf_counter()
    detail = None
    if identity in _THEOREMS or identity in _CLOSED:
        k = 1 if k is None else k
        fm, detail = (_theorem if identity in _THEOREMS else _closed)(identity, k, order)
    elif identity in (IdentityId.COR_SPTK, IdentityId.COR_SPTKO, IdentityId.COR_SPTKO_SIGNED):
        k = None
        fm, detail = _corollary(identity, order, oracle_bound)
    elif identity is IdentityId.QBINOM:
        k = 1 if k is None else k
        fm = first_mismatch(*genfun.q_binomial_sides(q(1, -1), q(k), 1, order))
        detail = "a=-q,z=q^%d,base=1" % k
    elif identity is IdentityId.ASV:
        k = None
        detail = specialization or next(iter(ASV_SPECIALIZATIONS))
        a, b, m = ASV_SPECIALIZATIONS[detail]
        fm = first_mismatch(*genfun.asv_sides(a, b, m, order))
    else:
        fn = CountFunction(function or CountFunction.SPTK)
        k = (1 if k is None else k) if fn.uses_k else None
        fm, detail = _crosscheck(fn, k or 1, order, oracle_bound)
    return VerificationReport(identity, k, order, fm is None, fm, time.perf_counter() - t0, detail)


def verify_all(kmax: int = DEFAULT_KMAX, order: int = DEFAULT_ORDER,
               oracle_bound: int = DEFAULT_ORACLE_BOUND,
               ids: Optional[Sequence] = None) -> List[VerificationReport]:
    """Every identity over k = 1..kmax, in a fixed order; failures never stop the run."""
    if kmax < 1:
        raise ValueError("kmax must be positive")
    chosen = set(IdentityId) if ids is None else {IdentityId(i) for i in ids}
    wanted = [i for i in IdentityId if i in chosen]
    reports = []
    for identity in wanted:
        if identity in _THEOREMS or identity in _CLOSED or identity is IdentityId.QBINOM:
            for k in range(1, kmax + 1):
                reports.append(verify_identity(identity, k, order, oracle_bound=oracle_bound))
        elif identity is IdentityId.ASV:
            for spec in ASV_SPECIALIZATIONS:
                reports.append(verify_identity(identity, None, order, specialization=spec))
        elif identity is IdentityId.ORACLE_CROSSCHECK:
            reports.extend(crosscheck_all(kmax, order, oracle_bound))
        else:
            reports.append(verify_identity(identity, None, order, oracle_bound=oracle_bound))
    return reports


def crosscheck_all(kmax: int, order: int, oracle_bound: int) -> List[VerificationReport]:
    reports = []
    for k in range(1, kmax + 1):
        for fn in SPT_FUNCTIONS:
            reports.append(verify_identity(IdentityId.ORACLE_CROSSCHECK, k, order,
                                           oracle_bound=oracle_bound, function=fn))
    for fn in AUX_FUNCTIONS:
        reports.append(verify_identity(IdentityId.ORACLE_CROSSCHECK, None, order,
                                       oracle_bound=oracle_bound, function=fn))
    return reports
