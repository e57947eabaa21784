import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from permlat.errors import DimensionError
from permlat.linalg import identity_matrix, matmul, matvec
from permlat.perms import (
    CycleType,
    Permutation,
    apply,
    conjugate,
    cycle_decomposition,
    format_cycles,
    format_images,
    from_cycles,
    identity,
    order,
    parse_permutation,
    permutation_matrix,
    sample_permutation,
    standard_cycle,
)

from oracles import act


@st.composite
def perms(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def random_perm(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


class TestApply:
    def test_sigma3(self):
        assert standard_cycle(3).images == (2, 3, 1)
        assert apply(standard_cycle(3), (1, 2, 3)) == (2, 3, 1)

    def test_constant_vector_fixed(self):
        for n in range(1, 7):
            tau = sample_permutation(CycleType((n,)), n)
            assert apply(tau, (1,) * n) == (1,) * n

    def test_inverse_roundtrip(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(1, 8)
            tau = random_perm(rng, n)
            x = tuple(rng.randint(-9, 9) for _ in range(n))
            assert apply(tau, apply(tau.inverse(), x)) == x

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            apply(standard_cycle(3), (1, 2))

    @given(perms(), st.data())
    def test_isometry_and_multiset(self, tau, data):
        x = data.draw(st.lists(st.integers(-50, 50), min_size=tau.n, max_size=tau.n))
        y = apply(tau, x)
        assert sorted(y) == sorted(x)
        assert sum(v * v for v in y) == sum(v * v for v in x)
        assert y == act(tau.images, x)


class TestCycles:
    def test_two_transpositions(self):
        cycles, ct = cycle_decomposition(Permutation((2, 1, 4, 3)))
        assert cycles == [(1, 2), (3, 4)]
        assert ct.lengths == (2, 2)

    def test_identity(self):
        assert cycle_decomposition(identity(4))[1].lengths == (1, 1, 1, 1)

    def test_four_cycle(self):
        tau = Permutation((2, 3, 4, 1))
        assert tau.cycle_type().lengths == (4,)
        assert tau.is_n_cycle()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_roundtrip_exhaustive(self, n):
        for images in itertools.permutations(range(1, n + 1)):
            tau = Permutation(images)
            cycles, ct = cycle_decomposition(tau)
            assert from_cycles(cycles, n) == tau
            assert sorted(p for c in cycles for p in c) == list(range(1, n + 1))
            assert list(ct.lengths) == sorted(ct.lengths, reverse=True)
            assert ct.n == n


class TestOrder:
    def test_values(self):
        assert order(standard_cycle(5)) == 5
        assert order(parse_permutation("(1 2)(3 4 5)")) == 6
        assert order(identity(3)) == 1

    @pytest.mark.parametrize("n", range(1, 6))
    def test_exhaustive(self, n):
        for images in itertools.permutations(range(1, n + 1)):
            tau = Permutation(images)
            k = order(tau)
            assert k == math.lcm(*tau.cycle_type().lengths)
            assert (tau ** k).is_identity()
            # smallest such power, by explicit composition
            p = tau
            j = 1
            while not p.is_identity():
                p = p * tau
                j += 1
            assert j == k


class TestMatrix:
    def test_identity(self):
        assert permutation_matrix(identity(3)) == identity_matrix(3)

    def test_transposition(self):
        assert permutation_matrix(Permutation((2, 1))) == [[0, 1], [1, 0]]

    def test_power_order_is_identity(self):
        rng = random.Random(5)
        for _ in range(50):
            tau = random_perm(rng, rng.randint(1, 7))
            T = permutation_matrix(tau)
            P = identity_matrix(tau.n)
            for _ in range(order(tau)):
                P = matmul(P, T)
            assert P == identity_matrix(tau.n)

    def test_action_and_orthogonality(self):
        rng = random.Random(6)
        for _ in range(50):
            tau = random_perm(rng, rng.randint(1, 7))
            T = permutation_matrix(tau)
            x = [rng.randint(-5, 5) for _ in range(tau.n)]
            assert tuple(matvec(T, x)) == apply(tau, x)
            Tt = [list(r) for r in zip(*T)]
            assert matmul(T, Tt) == identity_matrix(tau.n)

    def test_homomorphism(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(1, 7)
            s, t = random_perm(rng, n), random_perm(rng, n)
            assert permutation_matrix(s * t) == matmul(permutation_matrix(s), permutation_matrix(t))

    def test_product_acts_sequentially(self):
        rng = random.Random(8)
        for _ in range(50):
            n = rng.randint(1, 7)
            s, t = random_perm(rng, n), random_perm(rng, n)
            x = tuple(range(10, 10 + n))
            assert apply(s * t, x) == apply(s, apply(t, x))


class TestConjugate:
    def test_identity_rho(self):
        tau = parse_permutation("(1 3)(2 4 5)")
        assert conjugate(tau, identity(5)) == tau

    def test_sigma3_by_transposition(self):
        assert conjugate(standard_cycle(3), Permutation((2, 1, 3))).images == (3, 1, 2)

    def test_cycle_type_preserved(self):
        rng = random.Random(9)
        for _ in range(100):
            n = rng.randint(1, 7)
            tau, rho = random_perm(rng, n), random_perm(rng, n)
            assert conjugate(tau, rho).cycle_type() == tau.cycle_type()

    def test_degree_mismatch(self):
        with pytest.raises(DimensionError):
            conjugate(standard_cycle(3), identity(4))


class TestSample:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_full_cycle(self, n):
        assert sample_permutation(CycleType((n,)), seed=n).is_n_cycle()

    def test_identity_type(self):
        assert sample_permutation(CycleType((1,) * 5), 3).is_identity()

    def test_deterministic(self):
        ct = CycleType((3, 2, 2, 1))
        assert sample_permutation(ct, 42) == sample_permutation(ct, 42)

    def test_type_respected(self):
        for seed in range(30):
            ct = CycleType((4, 2, 1, 1))
            assert sample_permutation(ct, seed).cycle_type() == ct

    def test_invalid_type(self):
        with pytest.raises(ValueError):
            CycleType((2, 0))


class TestParsing:
    def test_cycle_notation(self):
        tau = parse_permutation("(1 2)(3 4 5)")
        assert tau.images == (2, 1, 4, 5, 3)
        assert format_cycles(tau) == "(1 2)(3 4 5)"

    def test_image_list(self):
        tau = parse_permutation("2,1,4,5,3")
        assert tau == parse_permutation("(1 2)(3 4 5)")
        assert format_images(tau) == "2,1,4,5,3"

    def test_fixed_points_need_degree(self):
        assert parse_permutation("(1 2)", 4).images == (2, 1, 3, 4)
        assert parse_permutation("()", 3).is_identity()
        with pytest.raises(ValueError):
            parse_permutation("()")

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            parse_permutation("(1 2)(2 3)")
        with pytest.raises(ValueError):
            parse_permutation("2,2,1")
        with pytest.raises(DimensionError):
            parse_permutation("(1 5)", 4)

    @given(perms())
    def test_roundtrip_both_formats(self, tau):
        assert parse_permutation(format_images(tau)) == tau
        assert parse_permutation(format_cycles(tau), tau.n) == tau

    def test_degree_limit(self):
        with pytest.raises(ValueError):
            identity(17)
