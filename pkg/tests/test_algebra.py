import random
from fractions import Fraction as F

import pytest

from twocovers.algebra import (
    INFINITY,
    AlgebraError,
    ExtField,
    Fp,
    Poly,
    PrimeField,
    RatFunc,
    RationalFunction,
    WLinear,
    find_irreducible,
    is_prime,
    lift_ratfunc,
    poly_divmod,
    poly_gcd,
    poly_order_at,
    quadratic_character,
    reduce_mod_ideal,
    squarefree,
)


def P(*coeffs):
    return Poly([F(c) for c in coeffs])


class TestPoly:
    def test_basic_arithmetic(self):
        f = P(1, 2, 1)  # 1 + 2x + x^2
        g = P(-1, 1)  # x - 1
        assert (f * g) == P(-1, -1, 1, 1)
        assert f + g == P(0, 3, 1)
        assert f - f == Poly([])
        assert not (f - f)
        assert f.degree == 2 and Poly([]).degree == -1

    def test_call_and_derivative(self):
        f = P(1, 0, -3, 1)
        assert f(F(2)) == 1 - 12 + 8
        assert f.derivative() == P(0, -6, 3)
        assert Poly([])(F(5)) == 0

    def test_pow_and_shift(self):
        x = Poly.gen()
        assert (x + 1) ** 4 == P(1, 4, 6, 4, 1)
        assert P(1).shift(3) == P(0, 0, 0, 1)

    def test_scalar_ops(self):
        f = P(1, 2)
        assert 2 * f == P(2, 4)
        assert f - 1 == P(0, 2)
        assert (3 + f) == P(4, 2)

    def test_divmod(self):
        f = P(-1, 0, 1)
        q, r = poly_divmod(f, P(-1, 1))
        assert q == P(1, 1) and not r
        q, r = poly_divmod(P(1, 1, 1), P(0, 1, 2))
        assert (P(0, 1, 2) * q + r) == P(1, 1, 1)

    def test_nested_ring(self):
        # (A + t)^2 in Q[A][t]
        a = Poly.gen()  # A in Q[A]
        t = Poly([Poly([]), Poly([F(1)])])  # t over Q[A]
        f = (t + Poly.const(a)) ** 2
        assert f.coeffs[0] == a * a
        assert f.coeffs[1] == 2 * a
        assert f.coeffs[2] == 1


class TestPolyGcd:
    def test_shared_root(self):
        assert poly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)

    def test_coprime(self):
        assert poly_gcd(P(0, -1, 0, 1), P(-1, 0, 3)) == P(1)

    def test_power_factor(self):
        f = P(0, 0, 1)
        g = P(0, 0, 0, 1)
        assert poly_gcd(f, g) == f

    def test_divides_both(self):
        rng = random.Random(1)
        for _ in range(20):
            f = Poly([F(rng.randint(-5, 5)) for _ in range(rng.randint(1, 6))])
            g = Poly([F(rng.randint(-5, 5)) for _ in range(rng.randint(1, 6))])
            d = poly_gcd(f, g)
            if not d:
                continue
            assert not poly_divmod(f, d)[1]
            assert not poly_divmod(g, d)[1]
            assert d.is_monic()

    def test_mixed_rings_error(self):
        f = P(1, 1)
        g = Poly([Fp(1, 7), Fp(1, 7)])
        with pytest.raises(TypeError):
            poly_gcd(f, g)


class TestReduceModIdeal:
    @staticmethod
    def _ring():
        # Q[A,B][x][z]: generators at the right nesting levels
        one = F(1)
        a1 = Poly([F(0), one])  # A in Q[A]
        one1 = Poly([one])
        a2 = Poly([a1])  # A in Q[A][B]
        b2 = Poly([Poly([]), one1])  # B in Q[A][B]
        one2 = Poly([one1])
        x3 = Poly([Poly([]), one2])  # x over Q[A][B]
        a3 = Poly([a2])
        b3 = Poly([b2])
        one3 = Poly([one2])
        z4 = Poly([Poly([]), one3])  # z over Q[A][B][x]
        x4 = Poly([x3])
        a4 = Poly([a3])
        b4 = Poly([b3])
        return a4, b4, x4, z4

    def test_single_step(self):
        A, B, x, z = self._ring()
        f = z * z
        g = z * z + x * z + x * x - A
        r = reduce_mod_ideal(f, g)
        assert r == A - x * z - x * x

    def test_cubic_difference_in_ideal(self):
        A, B, x, z = self._ring()
        f = (x**3 - A * x + B) - (z**3 - A * z + B)
        g = z * z + x * z + (x * x - A)
        assert not reduce_mod_ideal(f, g)

    def test_low_degree_untouched(self):
        A, B, x, z = self._ring()
        g = z * z + x * z + (x * x - A)
        assert reduce_mod_ideal(x, g) == x

    def test_nonmonic_rejected(self):
        A, B, x, z = self._ring()
        with pytest.raises(AlgebraError):
            reduce_mod_ideal(z, 2 * (z * z) + x)

    def test_difference_divisible_property(self):
        # f - reduce(f, g) is an exact multiple of g, for random f
        A, B, x, z = self._ring()
        g = z * z + x * z + (x * x - A)
        rng = random.Random(6)
        for _ in range(10):
            f = Poly([])
            for dz in range(rng.randint(1, 4) + 1):
                cx = rng.randint(-3, 3) * x ** rng.randint(0, 2)
                ca = rng.randint(-2, 2) * A + rng.randint(-2, 2) * B
                f = f + (cx + ca) * z**dz
            r = reduce_mod_ideal(f, g)
            assert r.degree < 2
            q, rem = poly_divmod(f - r, g)
            assert not rem
            assert q * g == f - r


class TestPrimeField:
    def test_arithmetic(self):
        f7 = PrimeField(7)
        a, b = f7(3), f7(5)
        assert a + b == 1
        assert a * b == 1
        assert a / b == f7(3 * 3)  # 5^-1 = 3
        assert -a == 4
        assert a ** 6 == 1

    def test_rational_reduction(self):
        f7 = PrimeField(7)
        assert f7(F(-27)) == 1
        assert f7(F(1, 2)) == 4
        with pytest.raises(AlgebraError):
            f7(F(1, 7))

    def test_small_characteristic_rejected(self):
        for p in (2, 3, 4, 9):
            with pytest.raises(AlgebraError):
                PrimeField(p)


class TestQuadraticCharacter:
    def test_examples_mod_7(self):
        f7 = PrimeField(7)
        assert quadratic_character(f7(2)) == 1  # 3^2 = 2
        # squares mod 7 are {1, 2, 4}
        assert {a for a in range(1, 7) if quadratic_character(Fp(a, 7)) == 1} == {1, 2, 4}
        assert quadratic_character(f7(3)) == -1
        assert quadratic_character(f7(0)) == 0

    def test_multiplicative_all_small_fields(self):
        fields = [PrimeField(p) for p in (5, 7, 11, 13)] + [ExtField(5, 2), ExtField(7, 2), ExtField(11, 2)]
        for k in fields:
            elems = list(k.elements())
            q = getattr(k, "q", getattr(k, "p", None))
            assert len(elems) == q
            chi = {e: quadratic_character(e) for e in elems}
            nonzero = [e for e in elems if e]
            for a in nonzero:
                for b in nonzero:
                    assert chi[a * b] == chi[a] * chi[b]
            assert sum(chi.values()) == 0

    def test_int_interface(self):
        assert quadratic_character(2, 7) == 1
        assert quadratic_character(3, 7) == -1
        assert quadratic_character(0, 7) == 0


class TestFindIrreducible:
    def test_degree_one(self):
        g = find_irreducible(7, 1, seed=3)
        assert g.degree == 1 and g.is_monic()

    def test_f25_modulus_irreducible(self):
        g = find_irreducible(5, 2, seed=0)
        assert g.degree == 2 and g.is_monic()
        # no root in F_5
        for v in range(5):
            assert g(Fp(v, 5))

    def test_known_irreducible_accepted(self):
        # x^2 + 2 over F_5: 2 is a non-square mod 5 ({1,4} are the squares)
        assert {v * v % 5 for v in range(1, 5)} == {1, 4}
        f = ExtField(5, 2, modulus=(2, 0, 1))
        assert f.q == 25

    def test_f49_no_roots(self):
        for seed in range(4):
            g = find_irreducible(7, 2, seed=seed)
            for v in range(7):
                assert g(Fp(v, 7))

    def test_deterministic(self):
        a = find_irreducible(13, 5, seed=0)
        b = find_irreducible(13, 5, seed=0)
        assert a == b

    def test_degree_six_rejects_split_products(self):
        # the Rabin gcd condition matters at k = 6: a product of irreducibles
        # of degrees 1, 2, 3 passes the plain x^(p^(k/l)) != x check
        g = find_irreducible(7, 6, seed=0)
        f = ExtField(7, 6, modulus=g)
        x = f((0, 1))
        assert x ** (7**6) == x
        assert x ** (7**3) != x
        assert x ** (7**2) != x


class TestExtField:
    def test_frobenius_identity_exhaustive(self):
        for p, k in ((5, 2), (5, 3), (7, 2), (7, 3), (11, 2)):
            field = ExtField(p, k)
            if field.q > 343 and (p, k) != (11, 2):
                continue
            for e in field.elements():
                assert e ** field.q == e

    def test_inverse(self):
        field = ExtField(7, 3)
        for e in field.elements():
            if e:
                assert e * e.inverse() == field.one()

    def test_pack_unpack_roundtrip(self):
        field = ExtField(5, 3)
        for n in range(field.q):
            assert field.pack(field.unpack(n)) == n

    def test_subfield_embedding(self):
        field = ExtField(7, 2)
        a, b = field(3), field(6)
        assert a + b == field(2)
        assert a * b == field(4)


class TestRatFunc:
    def test_field_axioms_spotcheck(self):
        x = Poly.gen()
        f = RatFunc(x + 1, x - 1)
        g = RatFunc(x, Poly([F(1)]))
        assert f * g / g == f
        assert (f + g) - g == f
        assert f - f == RatFunc(Poly([]))
        assert not (f - f)

    def test_reduction(self):
        x = Poly.gen()
        f = RatFunc((x + 1) * (x - 1), (x - 1) * (x - 1))
        assert f.num == x + 1 and f.den == x - 1

    def test_squarefree_over_function_field(self):
        # (t - A)(t - 2A) is squarefree over Q(A); (t - A)^2 is not
        a = Poly.gen()
        t = Poly([Poly([]), Poly([F(1)])])
        f = (t - Poly.const(a)) * (t - Poly.const(2 * a))
        g = (t - Poly.const(a)) ** 2
        assert squarefree(lift_ratfunc(f))
        assert not squarefree(lift_ratfunc(g))


class TestRationalFunctionEval:
    def test_plain(self):
        f = RationalFunction(P(0, 1), P(1, 1))  # t/(1+t)
        assert f.evaluate(F(1)) == F(1, 2)

    def test_pole(self):
        f = RationalFunction(P(1), P(-1, 1))
        assert f.evaluate(F(1)) is INFINITY

    def test_removable(self):
        # (t^2-1)/(t-1) at t=1 -> 2
        f = RationalFunction(P(-1, 0, 1), P(-1, 1))
        assert f.evaluate(F(1)) == 2

    def test_zero_of_higher_order(self):
        f = RationalFunction(P(-1, 1) * P(-1, 1), P(-1, 1))
        assert f.evaluate(F(1)) == 0


class TestWLinear:
    @staticmethod
    def _h():
        # w^2 = t^3 + 1
        return P(1, 0, 0, 1)

    def test_mul_reduces_w_square(self):
        h = self._h()
        w = WLinear.sheet(h, one=F(1))
        w2 = w * w
        assert not w2.b
        assert w2.a == h

    def test_inverse(self):
        h = self._h()
        w = WLinear.sheet(h, one=F(1))
        t = WLinear.lift_poly(P(0, 1), h, one=F(1))
        f = t + w
        g = f * f.inverse()
        # g == 1 as a function: a/den == 1 and b == 0
        assert not g.b
        assert g.a == g.den

    def test_evaluate_direct(self):
        h = self._h()
        w = WLinear.sheet(h, one=F(1))
        assert w.evaluate(F(2), F(3)) == 3  # 3^2 = 2^3 + 1

    def test_evaluate_removable(self):
        h = self._h()
        # (t^2 - 4)/(t - 2) at t = 2 -> 4
        f = WLinear(P(-4, 0, 1), P(0), P(-2, 1), h)
        assert f.evaluate(F(2), F(3)) == 4

    def test_evaluate_pole(self):
        h = self._h()
        f = WLinear(P(1), P(0), P(-2, 1), h)
        assert f.evaluate(F(2), F(3)) is INFINITY

    def test_evaluate_conjugate_case(self):
        h = self._h()
        # (w - 3)/(t - 2) at (2, 3): conjugate resolution
        # (w - 3)(w + 3) = h - 9 = t^3 - 8 = (t-2)(t^2+2t+4), so value = 12/6 = 2
        f = WLinear(P(-3), P(1), P(-2, 1), h)
        assert f.evaluate(F(2), F(3)) == 2


class TestIsPrime:
    def test_small(self):
        assert [n for n in range(2, 40) if is_prime(n)] == [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
        ]

    def test_large(self):
        assert is_prime(2**61 - 1)
        assert not is_prime(2**61 + 1)


class TestPolyOrderAt:
    def test_orders(self):
        f = P(-1, 1) * P(-1, 1) * P(3, 1)
        order, reduced = poly_order_at(f, F(1))
        assert order == 2
        assert reduced == P(3, 1)
