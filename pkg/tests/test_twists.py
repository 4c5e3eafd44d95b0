import math
import random
from fractions import Fraction as F

import pytest

from twocovers.constructions import genus5_poly
from twocovers.curves import CubicModel, ECPoint, ec_scalar, on_curve
from twocovers.twists import (
    STATUS_DEGENERATE,
    STATUS_DEPENDENT,
    STATUS_INDEPENDENT,
    CENSUS_HEADER,
    CensusSummary,
    TwistRecord,
    UnfactoredError,
    census,
    factorize,
    growth_table,
    independence_screen,
    record_to_tsv,
    squarefree_part,
    summary_to_tsv,
)

# frozen outputs of tools/census_oracle.py (A = -27, height bound 25)
ORACLE_DISTINCT_D = 401
ORACLE_SMALLEST_D = [1, -3, -15, -339, -719, -126591]


class TestFactorize:
    def test_small(self):
        assert factorize(8640) == {2: 6, 3: 3, 5: 1}
        assert factorize(-97) == {97: 1}
        assert factorize(1) == {}

    def test_random_roundtrip(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randint(2, 10**12)
            f = factorize(n)
            prod = 1
            for p, e in f.items():
                assert p > 1
                prod *= p**e
            assert prod == n

    def test_twenty_digit_semiprime(self):
        p, q = 10000000019, 10000000033
        f = factorize(p * q)
        assert f == {p: 1, q: 1}


class TestSquarefreePart:
    def test_examples(self):
        assert squarefree_part(F(64)) == (1, 8)
        assert squarefree_part(F(-27)) == (-3, 3)
        assert squarefree_part(F(8, 9)) == (2, F(2, 3))

    def test_identity_random(self):
        rng = random.Random(11)
        for _ in range(60):
            v = F(rng.randint(-10**8, 10**8), rng.randint(1, 10**6))
            if not v:
                continue
            d, s = squarefree_part(v)
            assert d * s * s == v
            assert s > 0
            for p, e in factorize(d).items():
                assert e == 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_part(F(0))


class TestIndependenceScreen:
    def setup_method(self):
        self.A = F(-27)
        self.E = CubicModel(F(0), F(27), F(-27))  # y^2 = x^3 + 27x - 27

    def test_negation_is_dependent(self):
        P = ECPoint(F(1), F(1))
        assert on_curve(self.E, P)
        assert independence_screen(self.E, P, ECPoint(F(1), F(-1))) == STATUS_DEPENDENT

    def test_equal_points_dependent(self):
        P = ECPoint(F(1), F(1))
        assert independence_screen(self.E, P, P) == STATUS_DEPENDENT

    def test_two_torsion_dependent(self):
        # y^2 = x^3 - x has (0,0) of order 2
        E = CubicModel(F(0), F(-1), F(0))
        P = ECPoint(F(0), F(0))
        Q = ECPoint(F(1), F(0))
        assert independence_screen(E, P, Q) == STATUS_DEPENDENT

    def test_small_relation_detected(self):
        # P and 5P always carry the relation 5 P1 - P2 = 0
        P = ECPoint(F(1), F(1))
        Q = ec_scalar(self.E, 5, P)
        assert independence_screen(self.E, P, Q) == STATUS_DEPENDENT

    def test_conservative_never_false_positive(self):
        # brute-force check on a random record that passed the screen
        recs = [r for r in census(F(-27), 6) if r.status == STATUS_INDEPENDENT]
        assert recs
        r = recs[0]
        E_d = CubicModel(F(0), F(-(-27) * r.d**2), F(-27 * r.d**3))
        mults1 = [ECPoint.zero()]
        mults2 = [ECPoint.zero()]
        for k in range(1, 13):
            mults1.append(ec_scalar(E_d, k, r.P1))
            mults2.append(ec_scalar(E_d, k, r.P2))
        for a in range(-12, 13):
            for b in range(-12, 13):
                if not a and not b:
                    continue
                Pa = mults1[abs(a)] if a >= 0 else ECPoint(mults1[-a].x, -mults1[-a].y) if not mults1[-a].infinity else ECPoint.zero()
                Pb = mults2[abs(b)] if b >= 0 else ECPoint(mults2[-b].x, -mults2[-b].y) if not mults2[-b].infinity else ECPoint.zero()
                from twocovers.curves import _ec_add_unchecked

                assert not _ec_add_unchecked(E_d, Pa, Pb).infinity


class TestCensus:
    def test_oracle_match_height25(self):
        recs = census(F(-27), 25)
        factored = [r for r in recs if r.d is not None]
        assert not [r for r in recs if r.status == "unfactored"]
        assert len(factored) == ORACLE_DISTINCT_D
        ds = [r.d for r in factored]
        assert ds[: len(ORACLE_SMALLEST_D)] == ORACLE_SMALLEST_D

    def test_universal_records(self):
        recs = census(F(-27), 2)
        by_d = {r.d: r for r in recs}
        assert by_d[1].t == -1
        assert by_d[-3].t == 0
        assert by_d[-15].t == 1

    def test_points_on_curve_exact(self):
        A = F(-27)
        for r in census(A, 6):
            if r.d is None:
                continue
            E_d = CubicModel(F(0), -A * r.d * r.d, A * r.d**3)
            if r.P1 is not None:
                assert on_curve(E_d, r.P1)
            if r.P2 is not None:
                assert on_curve(E_d, r.P2)
            # d s^2 = h(t) exactly
            assert r.d * r.s * r.s == genus5_poly(A)(r.t)

    def test_deterministic_and_sorted(self):
        a = census(F(-27), 8)
        b = census(F(-27), 8)
        assert a == b
        ds = [r.d for r in a if r.d is not None]
        assert ds == sorted(ds, key=lambda d: (abs(d), d))
        assert len(set(ds)) == len(ds)

    def test_every_d_squarefree(self):
        for r in census(F(-27), 8):
            if r.d is None:
                continue
            for p, e in factorize(r.d).items():
                assert e == 1

    def test_dedup_keeps_smallest_height(self):
        recs = census(F(-27), 10)
        h = genus5_poly(F(-27))
        for r in recs:
            if r.d is None:
                continue
            # no t of smaller height yields the same d
            for m in range(1, r.height):
                for n in range(-m, m + 1):
                    if math.gcd(abs(n), m) != 1 or max(abs(n), m) >= r.height:
                        continue
                    t = F(n, m)
                    v = h(t)
                    if v:
                        d2, _ = squarefree_part(v)
                        assert d2 != r.d


class TestGrowthTable:
    def test_empty(self):
        s = growth_table([], [10, 100])
        assert s.counts == (0, 0)

    def test_monotone(self):
        recs = census(F(-27), 12)
        grid = [10, 10**2, 10**3, 10**6, 10**9, 10**12, 10**15]
        s = growth_table(recs, grid)
        assert list(s.counts) == sorted(s.counts)

    def test_reference_column_format(self):
        s = growth_table([], [100])
        x = 100 ** (1 / 6) / math.log(100) ** 2
        assert s.reference[0] == "%.6f" % x

    def test_x_at_most_one_rejected(self):
        with pytest.raises(ValueError):
            growth_table([], [1])


class TestTsv:
    def test_header_and_row_shape(self):
        recs = census(F(-27), 2)
        assert len(CENSUS_HEADER.split("\t")) == 12
        for r in recs:
            assert len(record_to_tsv(r).split("\t")) == 12

    def test_growth_tsv(self):
        s = growth_table([], [10, 100])
        lines = summary_to_tsv(s)
        assert lines[0].startswith("10\t0\t")
