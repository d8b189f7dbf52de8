"""Core algebra engine: validation, normal forms, ring laws, grading."""

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loophom import (
    INHOMOGENEOUS,
    ZERO,
    GeneratorSpec,
    LoopModel,
    ModelError,
    validate_model,
)

from conftest import elements, window_monomials


# -- validation ----------------------------------------------------------------


def test_sphere_presentation_accepted(s4):
    assert [g.name for g in s4.generators] == ["b", "a", "v"]
    assert [g.degree for g in s4.generators] == [-1, -4, 6]
    assert s4.euler == 2 and s4.dim == 4
    assert s4.degree_of(s4.c0) == -4


def test_generator_parity_is_derived(s4):
    assert [g.parity for g in s4.generators] == [1, 0, 0]
    assert [g.is_odd for g in s4.generators] == [True, False, False]


def test_odd_dimension_with_nonzero_euler_rejected():
    with pytest.raises(ModelError, match="odd dimension"):
        LoopModel.create(
            dim=3,
            euler=2,
            generators=[("b", -1), ("a", -3), ("v", 4)],
            relations=[(1, {"a": 2})],
            c0={"a": 1},
        )


def test_c0_with_wrong_degree_rejected():
    # constant-loop class must sit in degree -dim; c^(n-1) misses it
    with pytest.raises(ModelError, match="degree -4"):
        LoopModel.create(
            dim=4,
            euler=3,
            generators=[("w", -1), ("c", -2), ("u", 4)],
            relations=[(1, {"c": 3}), (3, {"c": 2, "u": 1}), (1, {"w": 1, "c": 2})],
            c0={"c": 1},
        )


def test_missing_c0_rejected():
    with pytest.raises(ModelError, match="c0 required"):
        LoopModel.create(dim=2, euler=2, generators=[("a", -2)], relations=[(1, {"a": 2})])


def test_relation_with_unknown_generator_rejected():
    with pytest.raises(ModelError, match="unknown generator"):
        LoopModel.create(
            dim=2,
            euler=2,
            generators=[("a", -2)],
            relations=[(1, {"q": 2})],
            c0={"a": 1},
        )


def test_non_nilpotent_negative_generator_rejected():
    with pytest.raises(ModelError, match="not nilpotent"):
        LoopModel.create(dim=2, euler=2, generators=[("a", -2)], c0={"a": 1})


def test_non_nilpotent_degree_zero_generator_rejected():
    with pytest.raises(ModelError, match="not nilpotent"):
        LoopModel.create(
            dim=2,
            euler=2,
            generators=[("a", -2), ("t", 0)],
            relations=[(1, {"a": 2})],
            c0={"a": 1},
        )


def test_duplicate_generator_rejected():
    with pytest.raises(ModelError, match="duplicate generator"):
        LoopModel.create(
            dim=2, euler=2, generators=[("a", -2), ("a", 2)], c0={"a": 1}
        )


def test_reserved_generator_name_rejected():
    with pytest.raises(ModelError, match="reserved"):
        LoopModel.create(dim=2, euler=2, generators=[("psi", -2)], c0={"psi": 1})


def test_nonpositive_relation_coefficient_rejected():
    with pytest.raises(ModelError, match="positive integer"):
        LoopModel.create(
            dim=2,
            euler=2,
            generators=[("a", -2)],
            relations=[(0, {"a": 2})],
            c0={"a": 1},
        )


def test_validate_is_idempotent(s4):
    assert validate_model(s4) is s4


def test_generator_spec_from_tuples_and_specs():
    m = LoopModel.create(
        dim=2,
        euler=2,
        generators=[GeneratorSpec("a", -2, True), ("v", 2)],
        relations=[(1, {"a": 2})],
        c0={"a": 1},
    )
    assert m.generators[0].geometric and not m.generators[1].geometric


# -- normal forms ------------------------------------------------------------


def brute_modulus(model, exps):
    """Ideal-membership by direct scan: gcd of relation coefficients over
    the declared relations dividing the monomial, plus odd squares."""
    rels = [(r.coeff, r.monomial.exps) for r in model.relations]
    for i, g in enumerate(model.generators):
        if g.degree % 2:
            rels.append((1, tuple(2 if j == i else 0 for j in range(len(model.generators)))))
    mod = 0
    for k, rexps in rels:
        if all(re <= e for re, e in zip(rexps, exps)):
            mod = gcd(mod, k)
    return mod


def test_torsion_coefficient_wraps(s4):
    # 3*(a*v) + 1*(a*v) has coefficient 4 over a 2-torsion monomial
    av = s4.monomial({"a": 1, "v": 1})
    assert s4.normal_form([(3, av), (1, av)]) == 0


def test_unit_normal_form(s4):
    one = s4.normal_form([(1, {})])
    assert one == s4.unit()
    assert str(one) == "1"


def test_torsion_monomial_above_relation(s4):
    # oracle first: a*v^2 is divisible by a*v only, so its modulus is 2
    exps = s4.monomial({"a": 1, "v": 2}).exps
    assert brute_modulus(s4, exps) == 2
    x = s4.normal_form([(1, {"a": 1, "v": 2})])
    assert len(x.terms) == 1
    ((mono, coeff),) = x.terms.items()
    assert coeff == 1
    assert s4.modulus(mono) == 2


def test_dead_monomials_are_dropped(s4):
    assert s4.normal_form([(1, {"a": 2})]) == 0
    assert s4.normal_form([(5, {"a": 1, "b": 1})]) == 0
    assert s4.normal_form([(1, {"b": 2})]) == 0  # implicit exterior square


def test_moduli_against_brute_scan(s4, cp2):
    for model in (s4, cp2):
        for _, mono, mod in model.basis_window(10):
            assert mod == brute_modulus(model, mono.exps)


@settings(max_examples=60)
@given(data=st.data())
def test_normal_form_insertion_order_irrelevant(s4, data):
    basis = window_monomials(s4, 8)
    pairs = data.draw(
        st.lists(
            st.tuples(st.integers(-8, 8), st.sampled_from(basis)), max_size=6
        )
    )
    ref = s4.normal_form(list(pairs))
    perm = data.draw(st.permutations(pairs))
    assert s4.normal_form(perm) == ref


def test_normal_form_idempotent(s4):
    x = s4.normal_form([(3, {"v": 1}), (1, {"a": 1, "v": 1}), (2, {"b": 1})])
    assert s4.normal_form(x) == x


# -- add / scale ----------------------------------------------------------------


def test_add_torsion_cancels(s4):
    av = s4.mono_elem({"a": 1, "v": 1})
    assert s4.add(av, av) == 0


def test_scale_gives_additive_inverse(s4):
    x = s4.normal_form([(2, {"v": 1}), (1, {"b": 1})])
    assert s4.add(x, s4.scale(-1, x)) == 0
    assert x - x == 0


def test_projective_torsion_scale(cp2):
    c2u = cp2.mono_elem({"c": 2, "u": 1})
    assert cp2.scale(3, c2u) == 0
    assert 2 * c2u != 0


def test_mixed_model_operations_rejected(s4, cp2):
    with pytest.raises(ModelError, match="different models"):
        s4.add(s4.unit(), cp2.unit())
    with pytest.raises(ModelError, match="different models"):
        s4.mul(s4.unit(), cp2.unit())


# -- mul -------------------------------------------------------------------------


def test_squares_of_sphere_class_vanish(s2, s4, s6):
    for model in (s2, s4, s6):
        a = model.gen("a")
        assert model.mul(a, a) == 0


def test_unit_law(s4):
    for _, mono, _ in s4.basis_window(8):
        x = s4.mono_elem(mono)
        assert s4.mul(s4.unit(), x) == x
        assert s4.mul(x, s4.unit()) == x


def test_koszul_sign_on_odd_swap(toy):
    y, z = toy.gen("y"), toy.gen("z")
    assert toy.mul(z, y) == toy.scale(-1, toy.mul(y, z))
    assert toy.mul(y, z) != 0


def test_mul_ba_dies(s4):
    assert s4.mul(s4.gen("b"), s4.gen("a")) == 0


def test_exterior_square_in_product(toy):
    y, z = toy.gen("y"), toy.gen("z")
    yz = toy.mul(y, z)
    assert toy.mul(yz, y) == 0


def test_graded_commutativity_exact(s4, cp2, toy):
    for model in (s4, cp2, toy):
        basis = model.basis_window(8)
        for d1, m1, _ in basis:
            for d2, m2, _ in basis:
                x, y = model.mono_elem(m1), model.mono_elem(m2)
                sign = -1 if (d1 * d2) % 2 else 1
                assert model.mul(x, y) == model.scale(sign, model.mul(y, x))


@settings(max_examples=60)
@given(data=st.data())
def test_mul_associative_and_distributive(cp2, data):
    x = data.draw(elements(cp2))
    y = data.draw(elements(cp2))
    z = data.draw(elements(cp2))
    assert cp2.mul(cp2.mul(x, y), z) == cp2.mul(x, cp2.mul(y, z))
    assert cp2.mul(x, cp2.add(y, z)) == cp2.add(cp2.mul(x, y), cp2.mul(x, z))


def test_power_operator(cp2):
    c = cp2.gen("c")
    assert c**2 == cp2.mul(c, c)
    assert c**0 == cp2.unit()
    assert c**3 == 0
    with pytest.raises(ValueError):
        c ** (-1)


# -- grading --------------------------------------------------------------------


def test_degree_of_product_class(s2, s4, s6):
    for model, n in ((s2, 1), (s4, 2), (s6, 3)):
        av = model.mul(model.gen("a"), model.gen("v"))
        assert model.degree_of(av) == 2 * n - 2


def test_degree_of_unit_and_special_values(s4):
    assert s4.degree_of(s4.unit()) == 0
    assert s4.degree_of(s4.zero()) == ZERO
    mixed = s4.add(s4.gen("a"), s4.gen("v"))
    assert s4.degree_of(mixed) == INHOMOGENEOUS


def test_h_degree_conversion(s4):
    assert s4.h_degree(0) == 4
    assert s4.h_degree(-4) == 0
    with pytest.raises(TypeError):
        s4.h_degree(ZERO)


# -- basis enumeration -------------------------------------------------------------


def brute_basis(model, degree, bounds):
    """Exhaustive exponent-vector enumeration over explicit bounds."""
    import itertools

    out = []
    for exps in itertools.product(*(range(b + 1) for b in bounds)):
        if sum(e * g.degree for e, g in zip(exps, model.generators)) != degree:
            continue
        mod = brute_modulus(model, exps)
        if mod != 1:
            out.append((exps, mod))
    return sorted(out)


def test_basis_sphere_degree_two(s4):
    # oracle first: exhaustive enumeration with e_b <= 1, e_a <= 1, e_v <= 2
    assert brute_basis(s4, 2, [1, 1, 2]) == [((0, 1, 1), 2)]
    assert [(m.exps, mod) for m, mod in s4.enumerate_basis(2)] == [((0, 1, 1), 2)]


def test_basis_sphere_degree_zero(s4):
    assert [(s4.format_monomial(m), mod) for m, mod in s4.enumerate_basis(0)] == [("1", 0)]


def test_basis_projective_degree_zero(cp2):
    # oracle first: exhaustive enumeration on -e_w - 2e_c + 4e_u = 0
    assert brute_basis(cp2, 0, [1, 2, 2]) == [((0, 0, 0), 0), ((0, 2, 1), 3)]
    got = [(cp2.format_monomial(m), mod) for m, mod in cp2.enumerate_basis(0)]
    assert got == [("1", 0), ("c^2*u", 3)]


def test_basis_matches_brute_enumeration_across_window(s4, cp2):
    for model, bounds in ((s4, [1, 1, 3]), (cp2, [1, 2, 4])):
        for degree in range(-10, 11):
            brute = brute_basis(model, degree, bounds)
            got = sorted((m.exps, mod) for m, mod in model.enumerate_basis(degree))
            assert got == brute, (model, degree)


def test_basis_deterministic(cp2):
    assert cp2.enumerate_basis(0) == cp2.enumerate_basis(0)


def test_empty_degree(s4):
    assert s4.enumerate_basis(1) == []


# -- printing --------------------------------------------------------------------


def test_element_rendering(s4):
    assert str(s4.zero()) == "0"
    assert str(s4.unit()) == "1"
    assert str(s4.scale(-2, s4.unit())) == "-2"
    # terms sort by exponent vector in declaration order
    x = s4.normal_form([(1, {"a": 1, "v": 1}), (3, {"v": 1})])
    assert str(x) == "3*v + a*v"
    y = s4.normal_form([(-1, {"b": 1}), (2, {"v": 2})])
    assert str(y) == "2*v^2 - b"
