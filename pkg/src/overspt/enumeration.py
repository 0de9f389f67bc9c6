"""
Brute-force overpartition enumeration and the counting statistics built on it.

This module never touches series code; it is the independent ground truth the
generating functions are checked against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, NamedTuple, Optional, Tuple


@dataclass(frozen=True)
class Overpartition:
    """An overpartition.

    ``parts`` holds ``(value, plain)`` pairs in strictly decreasing value order,
    where ``plain`` counts the non-overlined copies (0 if the value occurs only
    as its overlined copy).  ``overlined`` is the set of values whose first
    occurrence carries the overline.
    """

    parts: Tuple[Tuple[int, int], ...]
    overlined: FrozenSet[int] = frozenset()

    @property
    def weight(self) -> int:
        return sum(v * (c + (v in self.overlined)) for v, c in self.parts)

    @property
    def num_parts(self) -> int:
        return sum(c + (v in self.overlined) for v, c in self.parts)

    @property
    def values(self) -> List[int]:
        return [v for v, _ in self.parts]

    def expanded(self) -> List[Tuple[int, bool]]:
        """Every copy as ``(value, overlined)``, largest first, overlined copy leading."""
        out = []
        for v, c in self.parts:
            if v in self.overlined:
                out.append((v, True))
            out.extend((v, False) for _ in range(c))
        return out

    def render(self) -> str:
        if not self.parts:
            return "0"
        return "+".join("%d~" % v if o else str(v) for v, o in self.expanded())

    @classmethod
    def parse(cls, text: str) -> "Overpartition":
        """Inverse of ``render``: e.g. ``"3~+2+2+1"``."""
        plain: dict = {}
        over = set()
        if text.strip() not in ("", "0"):
            for tok in text.split("+"):
                tok = tok.strip()
                if tok.endswith("~"):
                    v = int(tok[:-1])
                    if v in over:
                        raise ValueError("value %d overlined twice" % v)
                    over.add(v)
                    plain.setdefault(v, 0)
                else:
                    v = int(tok)
                    plain[v] = plain.get(v, 0) + 1
        parts = tuple(sorted(plain.items(), reverse=True))
        return cls(parts, frozenset(over))

    def __str__(self):
        return self.render()


def _generate(n: int, max_value: int):
    if n == 0:
        yield ()
        return
    for v in range(min(n, max_value), 0, -1):
        for bar in (1, 0):
            # bar overlined copies plus c plain copies of v, at least one copy in total
            c = 1 - bar
            while v * (bar + c) <= n:
                for rest in _generate(n - v * (bar + c), v - 1):
                    yield ((v, c, bar),) + rest
                c += 1


@lru_cache(maxsize=None)
def enumerate_overpartitions(n: int) -> Tuple[Overpartition, ...]:
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []
    for combo in _generate(n, n):
        parts = tuple((v, c) for v, c, _ in combo)
        over = frozenset(v for v, _, bar in combo if bar)
        out.append(Overpartition(parts, over))
    return tuple(out)


def smallest_nonoverlined(p: Overpartition) -> Optional[int]:
    plain = [v for v, c in p.parts if c > 0]
    return min(plain) if plain else None


class Classification(NamedTuple):
    in_sptk: bool
    in_sptk_odd: bool
    parts_above_s: int


def classify(p: Overpartition, k: int) -> Classification:
    s = smallest_nonoverlined(p)
    if s is None:
        return Classification(False, False, 0)
    mult = dict(p.parts)[s]
    in_sptk = mult == k and s not in p.overlined and all(v > s for v in p.overlined)
    in_odd = in_sptk and all((v - s) % 2 == 1 for v in p.values if v != s)
    above = sum(c + (v in p.overlined) for v, c in p.parts if v > s)
    return Classification(in_sptk, in_odd, above)


class CountFunction(enum.Enum):
    SPTK = "SPTK"
    SPTK_SIGNED = "SPTK_SIGNED"
    SPTK_ODD = "SPTK_ODD"
    SPTK_ODD_SIGNED = "SPTK_ODD_SIGNED"
    # halves of the signed statistics: even / odd number of parts above s
    SPTK_EVEN_ABOVE = "SPTK_EVEN_ABOVE"
    SPTK_ODD_ABOVE = "SPTK_ODD_ABOVE"
    SPTK_ODD_EVEN_ABOVE = "SPTK_ODD_EVEN_ABOVE"
    SPTK_ODD_ODD_ABOVE = "SPTK_ODD_ODD_ABOVE"
    PBAR = "PBAR"
    PBAR_E = "PBAR_E"
    PBAR_O = "PBAR_O"
    PBAR_OEX = "PBAR_OEX"
    PBAR_OEX_SIGNED = "PBAR_OEX_SIGNED"
    NO_UNOVERLINED_ONES = "NO_UNOVERLINED_ONES"

    @property
    def uses_k(self) -> bool:
        return self.value.startswith("SPTK")


SPT_FUNCTIONS = tuple(f for f in CountFunction if f.uses_k)
AUX_FUNCTIONS = tuple(f for f in CountFunction if not f.uses_k)


def _spt_weights(cl: Classification) -> dict:
    out = dict.fromkeys(SPT_FUNCTIONS, 0)
    even_above = cl.parts_above_s % 2 == 0
    sign = 1 if even_above else -1
    for member, plain, signed, ev, od in (
        (cl.in_sptk, CountFunction.SPTK, CountFunction.SPTK_SIGNED,
         CountFunction.SPTK_EVEN_ABOVE, CountFunction.SPTK_ODD_ABOVE),
        (cl.in_sptk_odd, CountFunction.SPTK_ODD, CountFunction.SPTK_ODD_SIGNED,
         CountFunction.SPTK_ODD_EVEN_ABOVE, CountFunction.SPTK_ODD_ODD_ABOVE),
    ):
        if member:
            out[plain] = 1
            out[signed] = sign
            out[ev if even_above else od] = 1
    return out


def _aux_weights(p: Overpartition) -> dict:
    all_odd = all(v % 2 for v in p.values)
    no_plain_one = dict(p.parts).get(1, 0) == 0
    oex = all_odd and no_plain_one
    return {
        CountFunction.PBAR: 1,
        CountFunction.PBAR_E: int(all(v % 2 == 0 for v in p.values)),
        CountFunction.PBAR_O: int(all_odd),
        CountFunction.PBAR_OEX: int(oex),
        CountFunction.PBAR_OEX_SIGNED: (1 if p.num_parts % 2 == 0 else -1) if oex else 0,
        CountFunction.NO_UNOVERLINED_ONES: int(no_plain_one),
    }


def weight(fn, p: Overpartition, k: int = 1) -> int:
    """Contribution of one overpartition to ``count(fn, k, n)``."""
    fn = CountFunction(fn)
    if fn.uses_k:
        return _spt_weights(classify(p, k))[fn]
    return _aux_weights(p)[fn]


@lru_cache(maxsize=None)
def _spt_tally(k: int, n: int) -> dict:
    total = dict.fromkeys(SPT_FUNCTIONS, 0)
    for p in enumerate_overpartitions(n):
        for fn, w in _spt_weights(classify(p, k)).items():
            total[fn] += w
    return total


@lru_cache(maxsize=None)
def _aux_tally(n: int) -> dict:
    total = dict.fromkeys(AUX_FUNCTIONS, 0)
    for p in enumerate_overpartitions(n):
        for fn, w in _aux_weights(p).items():
            total[fn] += w
    return total


def members(fn, k: int, n: int) -> List[Overpartition]:
    """Overpartitions of n that contribute to ``count(fn, k, n)``."""
    fn = CountFunction(fn)
    return [p for p in enumerate_overpartitions(n) if weight(fn, p, k)]


def count(fn, k: int, n: int) -> int:
    fn = CountFunction(fn)
    if not fn.uses_k:
        return _aux_tally(n)[fn]
    if k < 1:
        raise ValueError("k must be a positive integer")
    return _spt_tally(k, n)[fn]


def count_table(fn, k: int, nmax: int) -> List[int]:
    return [count(fn, k, n) for n in range(nmax + 1)]
