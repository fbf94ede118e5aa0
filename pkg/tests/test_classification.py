import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftedq.amenability import is_amenable
from shiftedq.classification import (
    Homogeneous,
    NotHomogeneous,
    classify,
    family_iii_nu,
    family_iv_nu,
    match_family,
    staircase_reduce,
    witness_connected,
    witness_disconnected,
)
from shiftedq.errors import InvalidShape, PreconditionViolated
from shiftedq.expansion import expand
from shiftedq.shapes import SkewShape, StrictPartition, basic_shapes, components


def P(*parts):
    return StrictPartition(parts)


@pytest.mark.parametrize(
    "lam, mu, k, nu, family",
    [
        ((4, 2), (), 1, (4, 2), "i"),
        ((5, 4, 3, 2, 1), (5, 3, 2), 1, (4, 1), "ii"),
        ((4, 3, 2), (1,), 1, (4, 3, 1), "iii"),
        ((3, 2), (1,), 1, (3, 1), "iv"),
        ((3, 1), (2,), 2, (2,), "v"),
        ((4, 2, 1), (3,), 2, (3, 1), "v"),
    ],
)
def test_family_examples(lam, mu, k, nu, family):
    shape = SkewShape(P(*lam), P(*mu))
    verdict = classify(shape)
    assert verdict == Homogeneous(k, P(*nu), family)
    assert dict(expand(shape).terms) == {P(*nu): k}


def test_staircase_reduce_example():
    assert staircase_reduce(SkewShape((5, 4, 3, 2, 1), (5, 3, 2))) == (4, 1)
    with pytest.raises(PreconditionViolated):
        staircase_reduce(SkewShape((5, 3), (2,)))


def test_family_partitions():
    assert family_iv_nu(2, 1) == (3, 1)
    assert family_iii_nu(2, 1, 1) == (4, 3, 1)
    assert match_family((6, 4), (2,)) is None


def test_not_homogeneous_example_with_witness():
    verdict = classify(SkewShape((6, 5, 2, 1), (4, 3)))
    assert isinstance(verdict, NotHomogeneous)
    w = verdict.witness
    assert w is not None and w.lemma == "hom1"
    assert is_amenable(w.tableau)
    assert verdict.second_content == (4, 3)


def test_invalid_shape_is_rejected():
    with pytest.raises(InvalidShape):
        classify(SkewShape((3, 1), (4,)))


def test_witness_preconditions():
    with pytest.raises(PreconditionViolated):
        witness_disconnected(SkewShape((3, 1)).cells)
    with pytest.raises(PreconditionViolated):
        witness_connected(SkewShape((3,)).cells)


@pytest.mark.parametrize("shape", basic_shapes(6), ids=lambda s: s.literal())
def test_classification_is_sound(shape):
    exp = expand(shape)
    verdict = classify(shape)
    if isinstance(verdict, Homogeneous):
        assert dict(exp.terms) == {verdict.nu: verdict.k}
        return
    assert len(exp.terms) > 1
    if verdict.witness is not None:
        w = verdict.witness
        assert w.tableau.is_valid() and is_amenable(w.tableau)
        assert w.content in exp.terms
        assert w.content != max(exp.terms, key=tuple)


@given(st.sampled_from([s for s in basic_shapes(7) if len(components(s.cells)) > 1]))
def test_disconnected_shapes_get_witnesses_outside_family_v(shape):
    verdict = classify(shape)
    if isinstance(verdict, NotHomogeneous):
        assert verdict.witness is not None
