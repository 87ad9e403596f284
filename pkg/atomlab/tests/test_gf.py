import pytest

from hypothesis import given, settings, strategies

import atomlab.exceptions
import atomlab.gf as unit

TOWERS = [(2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 1), (3, 1, 3), (2, 1, 4)]


def test_least_irreducible_gf8():
    assert unit.least_irreducible(2, 3) == unit.least_irreducible(2, 3)
    # Y^3 + Y + 1
    assert int(unit.least_irreducible(2, 3)) == 0b1011
    # Y^2 + 1 over GF(3)
    assert int(unit.least_irreducible(3, 2)) == 10


def test_tower_is_cached():
    assert unit.tower_make(2, 1, 3) is unit.tower_make(2, 1, 3)


@pytest.mark.parametrize("p,m,e", TOWERS)
def test_tower_sizes(p, m, e):
    tower = unit.tower_make(p, m, e)
    assert tower.order == p ** (m * e)
    assert len(tower.k_elements) == p ** m
    assert all(tower.in_subfield_K(k) for k in tower.k_elements)
    assert len(tower.kbasis) == e


def test_non_prime_characteristic():
    with pytest.raises(ValueError):
        unit.field_make(4, 1)
    with pytest.raises(ValueError):
        unit.field_make(2, 0)


def test_field_size_cap():
    atomlab.settings.load_settings({'limits': {'field_size_cap': 16}})
    with pytest.raises(atomlab.exceptions.CapExceeded) as info:
        unit.field_make(2, 5)
    assert info.value.cap == 'field_size_cap'
    assert 'field_size_cap' in str(info.value)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        unit.tower_make(2, 1, 3).inv(0)


def test_element_outside_field():
    with pytest.raises(atomlab.exceptions.CrossTowerError):
        unit.tower_make(2, 1, 3).check(8)


def test_format_and_evaluate():
    tower = unit.tower_make(2, 1, 3)
    f = tower.evaluate([(1, 0), (1, 1), (1, 2)])
    assert tower.format(f) == "1+y+y^2"
    # y^3 = y + 1 in GF(8)
    assert tower.format(tower.evaluate([(1, 3)])) == "1+y"
    assert tower.format(0) == "0"


def test_irreducible_over_k_has_no_roots():
    tower = unit.tower_make(2, 1, 3)
    cubic = unit.irreducible_over_k(tower, 3)
    assert len(cubic) == 4
    assert cubic[-1] == 1
    # A cubic irreducible over GF(2) has all three roots in GF(8).
    assert len(tower.poly_roots(cubic)) == 3
    quadratic = unit.irreducible_over_k(tower, 2)
    assert tower.poly_roots(quadratic) == []


def test_coordinates_round_trip():
    tower = unit.tower_make(3, 1, 2)
    for x in range(tower.order):
        assert tower.from_coords(tower.coords(x)) == x


@pytest.mark.parametrize("p,m,e", TOWERS)
def test_frobenius_fixes_k(p, m, e):
    tower = unit.tower_make(p, m, e)
    fixed = [x for x in range(tower.order) if tower.frobenius(x, m) == x]
    assert tuple(fixed) == tower.k_elements


@settings(max_examples=50, deadline=None)
@given(data=strategies.data())
def test_field_axioms(data):
    p, m, e = data.draw(strategies.sampled_from(TOWERS))
    tower = unit.tower_make(p, m, e)
    element = strategies.integers(min_value=0, max_value=tower.order - 1)
    a, b, c = data.draw(element), data.draw(element), data.draw(element)
    assert tower.add(a, b) == tower.add(b, a)
    assert tower.mul(a, b) == tower.mul(b, a)
    assert tower.mul(a, tower.add(b, c)) == tower.add(tower.mul(a, b), tower.mul(a, c))
    assert tower.add(a, tower.neg(a)) == 0
    assert tower.sub(tower.add(a, b), b) == a
    if a != 0:
        assert tower.mul(a, tower.inv(a)) == 1
        assert tower.div(tower.mul(a, b), a) == b
    assert tower.pow(a, tower.order) == a
