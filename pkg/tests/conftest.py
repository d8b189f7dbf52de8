import pytest
from hypothesis import strategies as st

from loophom import LoopModel, projective_space, sphere, toy_bv0


@pytest.fixture(scope="session")
def s2():
    return sphere(2)


@pytest.fixture(scope="session")
def s4():
    return sphere(4)


@pytest.fixture(scope="session")
def s6():
    return sphere(6)


@pytest.fixture(scope="session")
def s3():
    return sphere(3)


@pytest.fixture(scope="session")
def cp1():
    return projective_space(1)


@pytest.fixture(scope="session")
def cp2():
    return projective_space(2)


@pytest.fixture(scope="session")
def toy():
    return toy_bv0()


@pytest.fixture(scope="session")
def bv_model():
    """Exterior-times-polynomial algebra with a nonzero bracket, used to
    exercise the Leibniz extension and every sign path; chi = 0 because
    the dimension is odd."""
    return LoopModel.create(
        dim=3,
        euler=0,
        generators=[("a", -3, True), ("v", 2)],
        c0={"a": 1},
        delta={"a": 0, "v": 0},
        bracket={("a", "v"): 1},
        simply_connected=True,
    )


@pytest.fixture(scope="session")
def corrupted_s4():
    """The sphere:4 presentation with its torsion relation dropped; valid
    as an algebra but inconsistent with string topology."""
    return LoopModel.create(
        dim=4,
        euler=2,
        generators=[("b", -1), ("a", -4), ("v", 6)],
        relations=[(1, {"a": 2}), (1, {"a": 1, "b": 1})],
        c0={"a": 1},
    )


def window_monomials(model, window):
    return [m for _, m, _ in model.basis_window(window)]


def elements(model, window=6, max_terms=3, max_coeff=5):
    """Hypothesis strategy for random elements of a model."""
    basis = window_monomials(model, window)
    pair = st.tuples(st.integers(-max_coeff, max_coeff), st.sampled_from(basis))
    return st.lists(pair, max_size=max_terms).map(model.normal_form)
