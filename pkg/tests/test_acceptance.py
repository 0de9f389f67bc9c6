"""Exit criteria.  All comparisons are exact integer equality (zero tolerance)."""

import random
import time

import pytest

from overspt import genfun
from overspt.enumeration import AUX_FUNCTIONS, SPT_FUNCTIONS, count
from overspt.genfun import SptKind
from overspt.qproducts import Monomial, pochhammer_finite
from overspt.series import Series, add, div, invert, mul, one, times_binomial, truncate
from overspt.verify import ASV_SPECIALIZATIONS, IdentityId, series_for, verify_identity

ORDER = 80
KMAX = 8
ORACLE_N = 24
ORACLE_KMAX = 5
CASES = 250

C1 = "1. theorem suite, k=1..8, order 80, exact, < 30 s"
C2 = "2. recurrence vs closed forms, k=1..8, order 80"
C3 = "3. oracle equivalence, n<=24, k<=5, 8 spt + auxiliary statistics"
C4 = "4. paper spot values"
C5 = "5. corollaries: series n<=40, oracle n<=24"
C6 = "6. q-binomial and ASV specializations at order 60"
C7 = "7. randomized algebraic properties, >= 200 cases each"


@pytest.mark.criterion(C1)
def test_theorem_suite():
    t0 = time.perf_counter()
    reports = []
    for identity in (IdentityId.THM_SPTK, IdentityId.THM_SPTK_SIGNED,
                     IdentityId.THM_SPTKO, IdentityId.THM_SPTKO_SIGNED):
        for k in range(1, KMAX + 1):
            reports.append(verify_identity(identity, k, ORDER))
    elapsed = time.perf_counter() - t0
    failed = [r.to_dict() for r in reports if not r.passed]
    assert not failed, failed
    for r in reports:
        if r.identity is IdentityId.THM_SPTKO_SIGNED:
            assert "(-q^2;q^2)_k holds" in r.detail
    assert elapsed < 30.0


@pytest.mark.criterion(C2)
@pytest.mark.parametrize("identity", [IdentityId.THM_SPTK_CLOSED, IdentityId.THM_SPTKO_CLOSED,
                                      IdentityId.THM_SPTKO_SIGNED_CLOSED], ids=lambda i: i.value)
def test_closed_form_suite(identity):
    for k in range(1, KMAX + 1):
        r = verify_identity(identity, k, ORDER)
        assert r.passed, r.to_dict()


@pytest.mark.criterion(C3)
@pytest.mark.parametrize("fn", SPT_FUNCTIONS, ids=lambda f: f.value)
def test_oracle_spt(fn):
    for k in range(1, ORACLE_KMAX + 1):
        s = series_for(fn, k, ORACLE_N)
        assert [count(fn, k, n) for n in range(1, ORACLE_N + 1)] == list(s)[1:], (fn, k)


@pytest.mark.criterion(C3)
@pytest.mark.parametrize("fn", AUX_FUNCTIONS, ids=lambda f: f.value)
def test_oracle_aux(fn):
    s = series_for(fn, 1, ORACLE_N)
    assert [count(fn, 1, n) for n in range(0, ORACLE_N + 1)] == list(s)


@pytest.mark.criterion(C4)
def test_spot_values():
    spt1 = genfun.gf_definitional(SptKind.SPTK, 1, 10)
    assert count("SPTK", 1, 4) == spt1[4] == 3
    assert count("SPTK", 1, 3) == spt1[3] == 3
    assert spt1[4] + spt1[3] == 6 == count("NO_UNOVERLINED_ONES", 1, 4)

    odd = genfun.gf_definitional(SptKind.SPTK_ODD, 1, 10)
    pe = genfun.aux_gf("PBAR_E", 10)
    poex = genfun.aux_gf("PBAR_OEX", 10)
    assert odd[5] + odd[3] == 10 == 2 * pe[4] + poex[4]
    assert count("SPTK_ODD", 1, 5) + count("SPTK_ODD", 1, 3) == 10
    assert 2 * count("PBAR_E", 1, 4) + count("PBAR_OEX", 1, 4) == 10

    signed = genfun.gf_definitional(SptKind.SPTK_ODD_SIGNED, 1, 10)
    poex_signed = genfun.aux_gf("PBAR_OEX_SIGNED", 10)
    assert signed[5] + signed[3] == -2 == -poex_signed[4]
    assert count("SPTK_ODD_SIGNED", 1, 5) + count("SPTK_ODD_SIGNED", 1, 3) == -2
    assert count("PBAR_OEX_SIGNED", 1, 4) == 2


@pytest.mark.criterion(C5)
@pytest.mark.parametrize("identity", [IdentityId.COR_SPTK, IdentityId.COR_SPTKO,
                                      IdentityId.COR_SPTKO_SIGNED], ids=lambda i: i.value)
def test_corollaries(identity):
    r = verify_identity(identity, order=40, oracle_bound=24)
    assert r.passed, r.to_dict()
    start = 2 if identity is IdentityId.COR_SPTK else 3
    assert r.detail == "series n=%d..40, oracle n=%d..24" % (start, start)


@pytest.mark.criterion(C6)
def test_classical_identities():
    for k in range(1, 5):
        assert genfun.check_q_binomial(Monomial(-1, 1), Monomial(1, k), 1, 60)
    for label in ("a=q,b=-q,base=1", "a=q,b=-q,base=2", "a=-q^2,b=q^2,base=2"):
        a, b, m = ASV_SPECIALIZATIONS[label]
        assert genfun.check_asv(a, b, m, 60), label


def _rand_series(rng, order, unit=False):
    c = [rng.randint(-20, 20) for _ in range(order + 1)]
    if unit:
        c[0] = rng.choice((1, -1))
    return Series(c)


@pytest.mark.criterion(C7)
def test_property_suite():
    rng = random.Random(20261016)
    for _ in range(CASES):
        n = rng.randint(0, 15)
        a, b, c = (_rand_series(rng, n) for _ in range(3))
        assert add(a, b) == add(b, a) and mul(a, b) == mul(b, a)
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    for _ in range(CASES):
        u = _rand_series(rng, rng.randint(0, 20), unit=True)
        assert mul(u, invert(u)) == one(u.order)
    for _ in range(CASES):
        n = rng.randint(0, 15)
        a, b = _rand_series(rng, n), _rand_series(rng, n, unit=True)
        m = rng.randint(0, n)
        assert truncate(mul(a, b), m) == mul(truncate(a, m), truncate(b, m))
        assert truncate(div(a, b), m) == div(truncate(a, m), truncate(b, m))
    for _ in range(CASES):
        a = Monomial(rng.choice((1, -1)), rng.randint(1, 6))
        base, length, order = rng.randint(1, 3), rng.randint(0, 10), rng.randint(0, 30)
        e = a.exponent + base * length
        prev = pochhammer_finite(a, base, length, order)
        expected = prev if e > order else times_binomial(prev, -a.sign, e)
        assert pochhammer_finite(a, base, length + 1, order) == expected
