import random
from fractions import Fraction

import pytest

from helpers import fraction_rank, random_group
from oligoprofile.errors import GroupMismatch, NotNormal, NotSubgroup
from oligoprofile.orbit_algebra import (
    OrbitAlgebraElement,
    add,
    coset_representatives,
    element,
    express_element,
    express_in_subgroup,
    orbit_element,
    product,
    reynolds,
    scale,
    translate,
    unit,
    zero,
)
from oligoprofile.perm import (
    FinitePermGroup,
    cyclic_group,
    identity_group,
    normal_closure,
    parse_permutation,
    profile_values,
    subset_orbits,
    symmetric_group,
)

S4 = symmetric_group(4)
C4 = cyclic_group(4)
V4 = FinitePermGroup(
    4, (parse_permutation("(0 1)(2 3)", 4), parse_permutation("(0 2)(1 3)", 4))
)
HALF_TURN = FinitePermGroup(4, (parse_permutation("(0 2)(1 3)", 4),))


def random_homogeneous(rng, group, grade):
    reps = [o.representative for o in subset_orbits(group, grade)]
    coeffs = {rep: Fraction(rng.randint(-3, 3)) for rep in reps}
    return element(group, coeffs)


class TestElementConstruction:
    def test_subsets_are_canonicalized_and_merged(self):
        s2 = symmetric_group(2)
        x = element(s2, {(1,): 2})
        assert x.terms == (((0,), Fraction(2)),)
        y = add(orbit_element(s2, (0,)), orbit_element(s2, (1,)))
        assert y.terms == (((0,), Fraction(2)),)

    def test_zero_coefficients_are_dropped(self):
        x = add(orbit_element(S4, (0,)), scale(-1, orbit_element(S4, (0,))))
        assert x.is_zero()
        assert x == zero(S4)

    def test_rejects_non_canonical_terms(self):
        with pytest.raises(ValueError):
            OrbitAlgebraElement(S4, (((1,), Fraction(1)),))
        with pytest.raises(ValueError):
            OrbitAlgebraElement(S4, (((0,), Fraction(0)),))

    def test_grades(self):
        x = element(S4, {(0,): 1, (0, 1): 1})
        assert x.grades() == {1, 2}


class TestProduct:
    def test_unit_law(self):
        rng = random.Random(2)
        for _ in range(5):
            g = random_group(rng, max_degree=6)
            x = random_homogeneous(rng, g, rng.randint(0, g.degree))
            assert product(unit(g), x) == x
            assert product(x, unit(g)) == x

    def test_singletons_square_to_twice_pairs(self):
        o1 = orbit_element(S4, (0,))
        assert product(o1, o1).terms == (((0, 1), Fraction(2)),)

    def test_point_times_triple_fills_the_square(self):
        o1, o3 = orbit_element(S4, (0,)), orbit_element(S4, (0, 1, 2))
        assert product(o1, o3).terms == (((0, 1, 2, 3), Fraction(4)),)

    def test_cyclic_square_splits_by_distance(self):
        o1 = orbit_element(C4, (0,))
        assert product(o1, o1).terms == (
            ((0, 1), Fraction(2)),
            ((0, 2), Fraction(2)),
        )

    def test_structure_constants_are_non_negative_integers(self):
        rng = random.Random(5)
        for _ in range(10):
            g = random_group(rng, max_degree=6)
            m = rng.randint(0, g.degree)
            n = rng.randint(0, g.degree - m) if g.degree > m else 0
            for o1 in subset_orbits(g, m):
                for o2 in subset_orbits(g, n):
                    p = product(
                        orbit_element(g, o1.representative),
                        orbit_element(g, o2.representative),
                    )
                    for _, coeff in p.terms:
                        assert coeff.denominator == 1 and coeff >= 0

    def test_commutative_associative_graded(self):
        rng = random.Random(11)
        for _ in range(6):
            g = random_group(rng, max_degree=6)
            ga, gb, gc = (rng.randint(0, 2) for _ in range(3))
            a = random_homogeneous(rng, g, ga)
            b = random_homogeneous(rng, g, gb)
            c = random_homogeneous(rng, g, gc)
            assert product(a, b) == product(b, a)
            assert product(product(a, b), c) == product(a, product(b, c))
            ab = product(a, b)
            assert ab.grades() <= {ga + gb}

    def test_bilinearity(self):
        rng = random.Random(13)
        g = cyclic_group(5)
        a = random_homogeneous(rng, g, 1)
        b = random_homogeneous(rng, g, 2)
        c = random_homogeneous(rng, g, 2)
        lhs = product(a, add(b, scale(Fraction(2, 3), c)))
        rhs = add(product(a, b), scale(Fraction(2, 3), product(a, c)))
        assert lhs == rhs

    def test_group_mismatch(self):
        with pytest.raises(GroupMismatch):
            product(orbit_element(S4, (0,)), orbit_element(C4, (0,)))
        with pytest.raises(GroupMismatch):
            add(orbit_element(S4, (0,)), orbit_element(C4, (0,)))


class TestExpressInSubgroup:
    def test_same_group_is_identity(self):
        o = orbit_element(S4, (0, 1))
        assert express_in_subgroup(S4, S4, (0, 1)) == o

    def test_swap_orbit_splits_into_both_points(self):
        s2, id2 = symmetric_group(2), identity_group(2)
        x = express_in_subgroup(s2, id2, (0,))
        assert x.terms == (((0,), Fraction(1)), ((1,), Fraction(1)))

    def test_rotation_orbit_splits_in_half_turn_subgroup(self):
        x = express_in_subgroup(C4, HALF_TURN, (0,))
        assert x.terms == (((0,), Fraction(1)), ((1,), Fraction(1)))

    def test_accepts_subset_orbit_values(self):
        o = subset_orbits(C4, 1)[0]
        assert express_in_subgroup(C4, HALF_TURN, o).terms == (
            ((0,), Fraction(1)),
            ((1,), Fraction(1)),
        )

    def test_not_subgroup(self):
        s2_first = FinitePermGroup(4, (parse_permutation("(0 1)", 4),))
        with pytest.raises(NotSubgroup):
            express_in_subgroup(C4, s2_first, (0,))

    def test_is_an_algebra_morphism(self):
        rng = random.Random(23)
        pairs = [(S4, V4), (C4, HALF_TURN), (symmetric_group(3), cyclic_group(3))]
        for g, k in pairs:
            for _ in range(4):
                m = rng.randint(0, 2)
                n = rng.randint(0, 2)
                a = random_homogeneous(rng, g, m)
                b = random_homogeneous(rng, g, n)
                lhs = express_element(g, k, product(a, b))
                rhs = product(express_element(g, k, a), express_element(g, k, b))
                assert lhs == rhs


class TestReynolds:
    def test_two_cosets_average_the_points(self):
        s2, id2 = symmetric_group(2), identity_group(2)
        r = reynolds(s2, id2, orbit_element(id2, (0,)))
        assert r.terms == (((0,), Fraction(1, 2)), ((1,), Fraction(1, 2)))

    def test_embedded_elements_are_fixed(self):
        for g, k in [(S4, V4), (C4, HALF_TURN)]:
            for n in range(g.degree + 1):
                for o in subset_orbits(g, n):
                    emb = express_in_subgroup(g, k, o)
                    assert reynolds(g, k, emb) == emb

    def test_idempotent_and_linear(self):
        rng = random.Random(31)
        for _ in range(6):
            g = random_group(rng, max_degree=6)
            seed = [random.Random(rng.random()).choice(g.generators)]
            k = normal_closure(g, seed)
            x = random_homogeneous(rng, k, rng.randint(0, 2))
            y = random_homogeneous(rng, k, rng.randint(0, 2))
            rx = reynolds(g, k, x)
            assert reynolds(g, k, rx) == rx
            lhs = reynolds(g, k, add(x, scale(Fraction(1, 2), y)))
            assert lhs == add(rx, scale(Fraction(1, 2), reynolds(g, k, y)))

    def test_independent_of_representative_scheme(self):
        rng = random.Random(37)
        for g, k in [(S4, V4), (C4, HALF_TURN), (symmetric_group(3), cyclic_group(3))]:
            x = random_homogeneous(rng, k, 2)
            assert reynolds(g, k, x) == reynolds(g, k, x, scheme="lex-max")
        reps_min = coset_representatives(S4, V4)
        reps_max = coset_representatives(S4, V4, scheme="lex-max")
        assert len(reps_min) == len(reps_max) == 6
        assert reps_min != reps_max

    def test_module_morphism_over_embedded_elements(self):
        rng = random.Random(41)
        for g, k in [(S4, V4), (C4, HALF_TURN)]:
            e = express_in_subgroup(g, k, (0,))
            x = random_homogeneous(rng, k, 1)
            assert reynolds(g, k, product(e, x)) == product(e, reynolds(g, k, x))

    def test_rank_per_grade_matches_big_group_profile(self):
        d4 = FinitePermGroup(
            4, (parse_permutation("(0 1 2 3)", 4), parse_permutation("(1 3)", 4))
        )
        pairs = [(S4, V4), (C4, HALF_TURN), (d4, C4), (cyclic_group(6), FinitePermGroup(6, (parse_permutation("(0 2 4)(1 3 5)", 6),)))]
        for g, k in pairs:
            phi = profile_values(g)
            for n in range(g.degree + 1):
                basis = [o.representative for o in subset_orbits(k, n)]
                index = {rep: i for i, rep in enumerate(basis)}
                rows = []
                for rep in basis:
                    image = reynolds(g, k, orbit_element(k, rep))
                    row = [Fraction(0)] * len(basis)
                    for r, c in image.terms:
                        row[index[r]] = c
                    rows.append(row)
                assert fraction_rank(rows) == phi[n]

    def test_error_conditions(self):
        with pytest.raises(NotNormal):
            reynolds(S4, C4, orbit_element(C4, (0,)))
        s2_first = FinitePermGroup(4, (parse_permutation("(0 1)", 4),))
        with pytest.raises(NotSubgroup):
            reynolds(C4, s2_first, orbit_element(s2_first, (0,)))
        with pytest.raises(GroupMismatch):
            reynolds(S4, V4, orbit_element(C4, (0,)))
        with pytest.raises(ValueError):
            coset_representatives(S4, V4, scheme="random")


class TestTranslate:
    def test_translate_permutes_basis_elements(self):
        sigma = parse_permutation("(0 1 2 3)", 4)
        x = orbit_element(HALF_TURN, (0,))
        assert translate(sigma, x) == orbit_element(HALF_TURN, (1,))

    def test_translate_preserves_coefficients(self):
        sigma = parse_permutation("(0 2)", 4)
        x = element(HALF_TURN, {(0, 1): Fraction(5, 3)})
        moved = translate(sigma, x)
        assert sum(c for _, c in moved.terms) == Fraction(5, 3)
