import pytest
from hypothesis import given, strategies as st

from chgsets import (
    ExtField,
    ParameterError,
    PrimeField,
    ResourceCapError,
    additive_coords,
    ext_add,
    ext_field,
    ext_mul,
    find_irreducible,
    is_prime,
    iter_field,
    norm,
    quadratic_character,
)

F4 = ext_field(2, 2)
F9 = ext_field(3, 2)


class TestPrimality:
    def test_small_values(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
        for n in range(50):
            assert is_prime(n) == (n in primes)

    def test_larger(self):
        assert is_prime(2**31 - 1)
        assert not is_prime(2**31)
        assert is_prime(1_000_003)
        assert not is_prime(1_000_001)  # 101 * 9901

    def test_prime_field_checks(self):
        PrimeField(13)
        with pytest.raises(ParameterError):
            PrimeField(12)


class TestIrreducible:
    def test_known_smallest(self):
        assert find_irreducible(2, 2) == (1, 1, 1)  # t^2 + t + 1
        assert find_irreducible(3, 2) == (1, 0, 1)  # t^2 + 1
        assert find_irreducible(2, 3) == (1, 1, 0, 1)  # t^3 + t + 1
        assert find_irreducible(2, 4) == (1, 1, 0, 0, 1)  # t^4 + t + 1

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            find_irreducible(2, 2, cap=2)

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ParameterError):
            ExtField(2, 2, (1, 0, 1))  # t^2 + 1 = (t+1)^2 over F_2

    def test_nonprime_base_rejected(self):
        with pytest.raises(ParameterError):
            ext_field(4, 2)


class TestExtArithmetic:
    def test_f4_t_squared(self):
        t = (0, 1)
        assert ext_mul(F4, t, t) == (1, 1)  # t^2 = t + 1

    def test_multiplicative_identity(self):
        for x in iter_field(F9):
            assert ext_mul(F9, x, F9.one()) == x

    def test_f9_t_squared(self):
        t = (0, 1)
        assert ext_mul(F9, t, t) == (2, 0)  # t^2 = -1 = 2

    @pytest.mark.parametrize("q,h", [(2, 2), (3, 2), (2, 3), (5, 2), (3, 3)])
    def test_commutative_distributive(self, q, h):
        field = ext_field(q, h)
        elems = list(iter_field(field))[: min(9, q**h)]
        for a in elems:
            for b in elems:
                assert ext_mul(field, a, b) == ext_mul(field, b, a)
                for c in elems[:3]:
                    lhs = ext_mul(field, a, ext_add(field, b, c))
                    rhs = ext_add(field, ext_mul(field, a, b), ext_mul(field, a, c))
                    assert lhs == rhs


class TestNorm:
    def test_f4_examples(self):
        assert norm(F4, (0, 1)) == 1  # t^3 = 1
        assert norm(F4, F4.zero()) == 0
        assert norm(F4, F4.one()) == 1

    @pytest.mark.parametrize("q,h", [(2, 2), (3, 2), (2, 3), (5, 2), (3, 3), (2, 4), (3, 4)])
    def test_multiplicative_exhaustive(self, q, h):
        field = ext_field(q, h)
        elems = list(iter_field(field))
        norms = {x: norm(field, x) for x in elems}
        for a in elems:
            for b in elems:
                assert norms[ext_mul(field, a, b)] == norms[a] * norms[b] % q

    @pytest.mark.parametrize("q,h", [(2, 2), (3, 2), (2, 3), (5, 2), (3, 3), (7, 2)])
    def test_norm_one_count(self, q, h):
        field = ext_field(q, h)
        count = sum(1 for x in iter_field(field) if norm(field, x) == 1)
        assert count == (q**h - 1) // (q - 1)

    @pytest.mark.parametrize("q,h", [(3, 2), (5, 2), (3, 3)])
    def test_norm_onto_base(self, q, h):
        field = ext_field(q, h)
        images = {norm(field, x) for x in iter_field(field)}
        assert images == set(range(q))


class TestAdditiveCoords:
    def test_read_off(self):
        assert additive_coords(F9, (1, 2)) == (1, 2)
        assert additive_coords(F4, F4.zero()) == (0, 0)

    def test_characteristic_two_spot(self):
        t, t1 = (0, 1), (1, 1)
        s = ext_add(F4, t, t1)
        assert additive_coords(F4, t) == (0, 1)
        assert additive_coords(F4, t1) == (1, 1)
        assert additive_coords(F4, s) == (1, 0)

    @pytest.mark.parametrize("q,h", [(2, 2), (3, 2), (2, 3)])
    def test_bijective_homomorphism(self, q, h):
        field = ext_field(q, h)
        elems = list(iter_field(field))
        images = {additive_coords(field, x) for x in elems}
        assert len(images) == q**h
        for a in elems:
            for b in elems:
                lhs = additive_coords(field, ext_add(field, a, b))
                rhs = tuple(
                    (x + y) % q
                    for x, y in zip(additive_coords(field, a), additive_coords(field, b))
                )
                assert lhs == rhs


class TestQuadraticCharacter:
    def test_examples(self):
        assert quadratic_character(5, 2) == -1
        assert quadratic_character(7, 1) == 1
        assert quadratic_character(5, 0) == 0

    def test_p_two_unsupported(self):
        with pytest.raises(ParameterError):
            quadratic_character(2, 1)

    def test_matches_square_table(self):
        for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 97]:
            squares = {x * x % p for x in range(1, p)}
            for a in range(p):
                want = 0 if a == 0 else (1 if a in squares else -1)
                assert quadratic_character(p, a) == want

    @given(st.sampled_from([3, 5, 7, 11, 13, 17]), st.integers(1, 100))
    def test_squares_are_residues(self, p, a):
        if a % p != 0:
            assert quadratic_character(p, a * a) == 1
