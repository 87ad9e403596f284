import itertools

import pytest

from hypothesis import given, settings, strategies

import atomlab.exceptions
import atomlab.gf
import atomlab.linalg
import atomlab.ring as unit

Y = 2          # y in GF(8)
Y2 = 4         # y^2
F_N = 7        # 1 + y + y^2


def test_spec_validate_closure():
    tower = atomlab.gf.tower_make(2, 1, 3)
    W = atomlab.linalg.span(tower, [1, Y])
    with pytest.raises(atomlab.exceptions.ClosureViolation) as info:
        unit.spec_validate(tower, 3, [W, atomlab.linalg.span(tower, [1])])
    assert info.value.pairs == [(1, 1)]
    assert "(1,1)" in str(info.value)


def test_spec_validate_shape_errors():
    tower = atomlab.gf.tower_make(2, 1, 3)
    with pytest.raises(atomlab.exceptions.SpecError):
        unit.spec_validate(tower, 0, [])
    with pytest.raises(atomlab.exceptions.SpecError):
        unit.spec_validate(tower, 3, [atomlab.linalg.zero(tower)])
    other = atomlab.gf.tower_make(2, 1, 2)
    with pytest.raises(atomlab.exceptions.CrossTowerError):
        unit.spec_validate(tower, 2, [atomlab.linalg.zero(other)])


def test_subspace_at_each_position(eight_atoms):
    assert eight_atoms.subspace(0).size == 2
    assert eight_atoms.subspace(1).size == 4
    assert eight_atoms.subspace(2).size == 8
    assert eight_atoms.subspace(5).size == 8


def test_not_in_ring(eight_atoms):
    with pytest.raises(atomlab.exceptions.NotInRing):
        unit.element(eight_atoms, [0, Y2])
    with pytest.raises(atomlab.exceptions.NotInRing):
        unit.element(eight_atoms, [Y])


def test_format(eight_atoms):
    assert unit.monomial(eight_atoms, F_N, 2).format() == "(1+y+y^2)X^2"
    assert unit.element(eight_atoms, [1, Y]).format() == "1 + yX"


def test_class_counts(eight_atoms):
    assert unit.unit_count(eight_atoms) == 4
    assert len(unit.unit_windows(eight_atoms)) == 4
    assert [len(unit.class_enumerate(eight_atoms, d)) for d in (1, 2, 3)] == [6, 14, 14]


def test_class_enumerate_bounds(eight_atoms):
    with pytest.raises(ValueError):
        unit.class_enumerate(eight_atoms, 4)


def test_associates(eight_atoms):
    x = unit.monomial(eight_atoms, 1, 1)
    assert unit.associates(x, unit.element(eight_atoms, [0, 1, Y]))
    assert not unit.associates(x, unit.element(eight_atoms, [0, 1, Y2]))


def test_canonical_form_is_least(eight_atoms):
    x = unit.element(eight_atoms, [0, 1, Y])
    nf = unit.canonicalize(x)
    assert nf.canonical
    assert nf.window == (1, 0)


def test_divide(eight_atoms):
    X = unit.monomial(eight_atoms, 1, 1)
    assert unit.divide(unit.monomial(eight_atoms, F_N, 2), X) is None
    quotient = unit.divide(unit.monomial(eight_atoms, Y, 2), X)
    assert quotient.order == 1
    assert quotient.window[0] == Y
    with pytest.raises(ValueError):
        unit.divide(X, unit.element(eight_atoms, []))


def test_exact_quotient(eight_atoms):
    X = unit.monomial(eight_atoms, 1, 1)
    x = unit.monomial(eight_atoms, Y, 3)
    q = unit.exact_quotient(x, X)
    assert unit.mul(q, X) == x
    with pytest.raises(atomlab.exceptions.NotInRing):
        unit.exact_quotient(unit.monomial(eight_atoms, F_N, 2), X)


def test_cross_ring(eight_atoms, gf2_gf4):
    with pytest.raises(atomlab.exceptions.CrossTowerError):
        unit.mul(unit.monomial(eight_atoms, 1, 1), unit.monomial(gf2_gf4, 1, 1))


def _ring_element(data, spec, min_order=0):
    coeffs = []
    for j in range(spec.T):
        if j < min_order:
            coeffs.append(0)
        else:
            coeffs.append(data.draw(strategies.sampled_from(spec.allowed(j))))
    return unit.RingElem(spec, tuple(coeffs))


@settings(max_examples=40, deadline=None)
@given(data=strategies.data())
def test_associate_laws(data, eight_atoms):
    x = _ring_element(data, eight_atoms, min_order=1)
    u = _ring_element(data, eight_atoms)
    if unit.order(x) > eight_atoms.T - eight_atoms.n or not unit.is_unit(u):
        return
    y = unit.mul(u, x)
    assert unit.associates(x, y)
    assert unit.canonicalize(x) == unit.canonicalize(y)
    assert unit.canonical_form(eight_atoms, unit.canonicalize(x)) == unit.canonicalize(x)
    assert unit.divide(y, x) is not None
    assert unit.divide(x, y) is not None


@settings(max_examples=40, deadline=None)
@given(data=strategies.data())
def test_multiplication_stays_in_ring(data, eight_atoms):
    x = _ring_element(data, eight_atoms)
    y = _ring_element(data, eight_atoms)
    product = unit.mul(x, y)
    assert product == unit.mul(y, x)
    assert isinstance(unit.add(x, y), unit.RingElem)


def _all_elements(spec, units):
    lead = [c for c in spec.allowed(0) if c] if units else [0]
    rest = [spec.allowed(j) for j in range(1, spec.T)]
    elements = []
    for coeffs in itertools.product(lead, *rest):
        x = unit.RingElem(spec, coeffs)
        if units or unit.order(x) <= spec.T - spec.n:
            elements.append(x)
    return elements


@pytest.mark.parametrize("ring", ["gf2_gf4", "gf2_conductor2"])
def test_associates_is_an_equivalence(ring, request):
    spec = request.getfixturevalue(ring)
    nonunits = _all_elements(spec, units=False)
    units = _all_elements(spec, units=True)
    images = {x: {unit.window_of(unit.mul(u, x)) for u in units} for x in nonunits}
    for x in nonunits:
        assert unit.associates(x, x)
        for y in nonunits:
            related = unit.associates(x, y)
            assert related == unit.associates(y, x)
            assert related == (unit.window_of(y) in images[x])
    for x, y, z in itertools.product(nonunits, repeat=3):
        if unit.associates(x, y) and unit.associates(y, z):
            assert unit.associates(x, z)
