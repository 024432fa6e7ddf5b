import io
import math
import random

import pytest

from polylogid.arithdata import (
    EllipticCurve,
    FamilyData,
    FamilyRecord,
    HasseBoundWarning,
    _segmented_sieve,
    _simple_sieve,
    elliptic_lambda,
    empirical_moment,
    legendre,
    load_family,
    sieve_primes,
)
from polylogid.errors import BadReduction, DuplicateRecord, NoData, NotOddPrime, ParseError


def trial_division_primes(n):
    return [k for k in range(2, n + 1) if all(k % d for d in range(2, math.isqrt(k) + 1))]


def test_sieve_examples():
    assert sieve_primes(10) == [2, 3, 5, 7]
    assert sieve_primes(2) == [2]
    ps = sieve_primes(100)
    assert len(ps) == 25 and ps[-1] == 97
    assert sieve_primes(1) == []


def test_sieve_matches_trial_division():
    assert sieve_primes(3000) == trial_division_primes(3000)


def test_segmented_matches_simple():
    for limit in (10**4, 123457, 10**6 + 3):
        assert _segmented_sieve(limit, segment=4099).tolist() == _simple_sieve(limit).tolist()


def test_prime_counts():
    assert len(sieve_primes(10**6)) == 78498


@pytest.mark.parametrize("a, p, expected", [(2, 7, 1), (7, 7, 0), (3, 7, -1), (-1, 5, 1), (-1, 7, -1)])
def test_legendre_examples(a, p, expected):
    assert legendre(a, p) == expected


def test_legendre_matches_enumeration():
    for p in sieve_primes(100)[1:]:
        squares = {y * y % p for y in range(1, p)}
        for a in range(-p, 2 * p):
            expected = 0 if a % p == 0 else (1 if a % p in squares else -1)
            assert legendre(a, p) == expected


def test_legendre_rejects():
    with pytest.raises(NotOddPrime):
        legendre(1, 2)
    with pytest.raises(NotOddPrime):
        legendre(1, 9)


def test_elliptic_examples():
    s, lam = elliptic_lambda(EllipticCurve(-1, 0), 5)
    assert s == 2 and lam == pytest.approx(2 / math.sqrt(5))
    assert EllipticCurve(-1, 0).count_points(5) == 8
    with pytest.raises(BadReduction):
        elliptic_lambda(EllipticCurve(0, 0), 7)
    # p = 3: x^3 - x vanishes on all of F_3
    assert elliptic_lambda(EllipticCurve(-1, 0), 3) == (0, 0.0)


def test_elliptic_negate():
    s, lam = elliptic_lambda(EllipticCurve(-1, 0), 5, negate=True)
    assert s == -2 and lam < 0


def test_bad_reduction_detected():
    # disc of x^3 - 3x + 3 is -16 * 135 = -2160 = -2^4 3^3 5
    curve = EllipticCurve(-3, 3)
    with pytest.raises(BadReduction):
        elliptic_lambda(curve, 5)
    elliptic_lambda(curve, 7)


def _brute_points(A, B, p):
    return 1 + sum(1 for xx in range(p) for y in range(p) if (y * y - (xx**3 + A * xx + B)) % p == 0)


def test_random_curves_point_counts():
    rng = random.Random(20260101)
    curves = []
    while len(curves) < 20:
        c = EllipticCurve(rng.randint(-30, 30), rng.randint(-30, 30))
        if not c.is_singular():
            curves.append(c)
    for c in curves:
        for p in sieve_primes(50)[1:]:
            if not c.has_good_reduction(p):
                continue
            s, lam = elliptic_lambda(c, p)
            assert _brute_points(c.A, c.B, p) == p + 1 + s
            assert abs(lam) <= 2 + 1e-12


CSV = b"""form_id,p,lambda,weight
# comment
f1,5,0.8944,1
f2,5,-0.5,3
f1,7,1.0,1
"""


def test_load_family_basic():
    fam = load_family(io.BytesIO(b"form_id,p,lambda,weight\nf1,5,0.8944,1\n"))
    assert len(fam) == 1 and fam.records[0] == FamilyRecord("f1", 5, 0.8944, 1.0)
    fam = load_family(CSV)
    assert fam.primes() == [5, 7]
    assert fam.total_weight(5) == 4


def test_load_family_default_weight():
    fam = load_family("form_id,p,lambda\nf1,5,0.5\n")
    assert fam.records[0].weight == 1.0


def test_load_family_hasse_warning():
    with pytest.warns(HasseBoundWarning):
        fam = load_family("form_id,p,lambda\nf1,5,2.5\n")
    assert fam.records[0].lam == 2.5


@pytest.mark.parametrize(
    "text, line",
    [
        ("form_id,p,lambda\nf1,x,0.5\n", 2),
        ("form_id,p,lambda\nf1,5\n", 2),
        ("form_id,p,lambda\n# c\nf1,4,0.5\n", 3),
        ("form_id,p,lambda\nf1,5,abc\n", 2),
        ("form_id,p,lambda,weight\nf1,5,0.1,-1\n", 2),
        ("id,prime,value\n", 1),
    ],
)
def test_load_family_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        load_family(text)
    assert err.value.line == line


def test_load_family_duplicate():
    with pytest.raises(DuplicateRecord) as err:
        load_family("form_id,p,lambda\nf1,5,0.1\nf1,5,0.2\n")
    assert err.value.line == 3
    with pytest.raises(DuplicateRecord):
        FamilyData([FamilyRecord("a", 3, 0.0), FamilyRecord("a", 3, 1.0)])


def test_empirical_moment_examples():
    one = FamilyData([FamilyRecord("f", 5, 1.0)])
    assert all(empirical_moment(one, r, 5) == 1 for r in range(6))
    pm = FamilyData([FamilyRecord("f", 5, 1.0), FamilyRecord("g", 5, -1.0)])
    assert empirical_moment(pm, 1, 5) == 0 and empirical_moment(pm, 2, 5) == 1
    w = FamilyData([FamilyRecord("f", 5, 2.0, 1.0), FamilyRecord("g", 5, 0.0, 3.0)])
    assert empirical_moment(w, 2, 5) == 1
    with pytest.raises(NoData):
        empirical_moment(w, 2, 7)


def test_empirical_moment_unweighted_is_power_mean():
    rng = random.Random(7)
    lams = [rng.uniform(-2, 2) for _ in range(50)]
    fam = FamilyData(FamilyRecord(f"f{i}", 11, v) for i, v in enumerate(lams))
    for r in range(7):
        direct = sum(v**r for v in lams) / len(lams)
        assert empirical_moment(fam, r, 11) == pytest.approx(direct, rel=1e-12, abs=1e-14)
