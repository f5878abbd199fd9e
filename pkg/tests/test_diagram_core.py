"""Dilute diagrams, their product, generators and filtration."""

import pytest
from hypothesis import given, settings, strategies as st

from helpers import motzkin

from dilutetl.ring import GENERIC, root_of_unity
from dilutetl.diagram_core import (AlgebraElem, DiluteDiagram, all_generators,
                                   crossing_count, enumerate_diagrams,
                                   generator, identity, multiply_diagrams_raw,
                                   parity_split, projector_pi,
                                   reduce_mod_ideal, transpose,
                                   transpose_diagram)
from dilutetl.link_modules import base_vd_state

settings.register_profile("fixed", derandomize=True, max_examples=40)
settings.load_profile("fixed")

DIAG3 = enumerate_diagrams(3)
diag3 = st.sampled_from(DIAG3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_diagram_count_is_motzkin(n):
    assert len(enumerate_diagrams(n)) == motzkin(2 * n)


def test_enumeration_cap():
    with pytest.raises(ResourceWarning):
        enumerate_diagrams(7)


def test_crossing_pairs_rejected():
    with pytest.raises(AssertionError):
        DiluteDiagram.from_pairs(2, [(0, 2), (1, 3)])


def test_identity_neutral():
    for n in (1, 2, 3):
        e = identity(n)
        assert len(e.terms) == 2 ** n
        for d in enumerate_diagrams(n):
            a = AlgebraElem.from_diagram(d)
            assert e * a == a and a * e == a


@given(diag3, diag3, diag3)
def test_associativity(d1, d2, d3):
    a, b, c = (AlgebraElem.from_diagram(d) for d in (d1, d2, d3))
    assert (a * b) * c == a * (b * c)


@given(diag3, diag3)
def test_transpose_anti_involution(d1, d2):
    a, b = AlgebraElem.from_diagram(d1), AlgebraElem.from_diagram(d2)
    assert transpose(transpose(a)) == a
    assert transpose(a * b) == transpose(b) * transpose(a)


@given(diag3, diag3)
def test_filtration_monotone(d1, d2):
    _loops, d = multiply_diagrams_raw(d1, d2)
    if d is not None:
        assert crossing_count(d) <= min(crossing_count(d1), crossing_count(d2))


@given(diag3, diag3, st.integers(0, 3))
def test_ideal_reduction_compatible(d1, d2, k):
    """Terms below the filtration level stay below it after multiplying."""
    a, b = AlgebraElem.from_diagram(d1), AlgebraElem.from_diagram(d2)
    low = a - reduce_mod_ideal(a, k)  # terms with < k crossings
    for d in (low * b).terms:
        assert crossing_count(d) < k
    for d in (b * low).terms:
        assert crossing_count(d) < k


def test_parity_orthogonality():
    """Products across the even/odd split vanish; within it they stay put."""
    n = 2
    diags = enumerate_diagrams(n)
    whole = AlgebraElem(n, GENERIC, {d: GENERIC.one() for d in diags})
    ev, od = parity_split(whole)
    assert (ev * od).is_zero() and (od * ev).is_zero()
    assert parity_split(ev * ev)[1].is_zero()
    assert parity_split(od * od)[0].is_zero()


def test_parity_counts():
    for d in enumerate_diagrams(3):
        left = d.left_vacancy_count()
        right = sum(1 for s in range(3, 6) if d.pairing[s] is None)
        assert left % 2 == right % 2


def test_generator_transposes():
    n = 3
    for i in (1, 2):
        assert transpose(generator("b", i, n)) == generator("bt", i, n)
        assert transpose(generator("a", i, n)) == generator("at", i, n)
    for i in (1, 2, 3):
        assert transpose(generator("e", i, n)) == generator("e", i, n)
        assert transpose(generator("x", i, n)) == generator("x", i, n)


def test_generator_index_errors():
    with pytest.raises(IndexError):
        generator("e", 4, 3)
    with pytest.raises(IndexError):
        generator("b", 3, 3)
    with pytest.raises(ValueError):
        generator("z", 1, 3)


def test_all_generators_count():
    labels = [lab for lab, _ in all_generators(4)]
    assert len(labels) == len(set(labels)) == 2 * 4 + 4 * 3


def test_projector_idempotent():
    for n, k in ((2, 1), (3, 2), (4, 2)):
        p = projector_pi(base_vd_state(n, k))
        assert p * p == p
        assert transpose(p) == p


def test_mode_mixing_supported():
    mode = root_of_unity(6)
    e = identity(2, mode)
    for d in enumerate_diagrams(2):
        a = AlgebraElem.from_diagram(d, mode)
        assert e * a == a


def test_json_roundtrip():
    for d in enumerate_diagrams(3):
        assert DiluteDiagram.from_json_dict(d.to_json_dict()) == d


def test_transpose_diagram_is_mirror():
    d = DiluteDiagram.from_pairs(2, [(0, 1)])
    assert transpose_diagram(d).pairs() == [(2, 3)]
