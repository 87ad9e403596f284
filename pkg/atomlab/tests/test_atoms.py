import pytest

import atomlab.constructions
import atomlab.exceptions
import atomlab.ring
import atomlab.search
import atomlab.settings
import atomlab.structure
import atomlab.atoms as unit

F_N = 7        # 1 + y + y^2 in GF(8)


def test_eight_atoms(eight_atoms):
    inventory = unit.enumerate_atoms(eight_atoms)
    assert inventory.total == 8
    assert inventory.layer_counts == {1: 6, 2: 2}
    assert inventory.layer1 == 6
    assert inventory.in_m2 == 2
    assert len(inventory.layers[2]) == 2


def test_designated_atom_in_m2(eight_atoms):
    x = atomlab.ring.monomial(eight_atoms, F_N, 2)
    assert unit.is_atom(x)
    inventory = unit.enumerate_atoms(eight_atoms)
    assert atomlab.ring.canonicalize(x) in inventory.layers[2]


def test_factor_witness_multiplies_back(eight_atoms):
    x = atomlab.ring.monomial(eight_atoms, 2, 2)
    a, b = unit.factor_witness(x)
    assert not atomlab.ring.is_unit(a)
    assert not atomlab.ring.is_unit(b)
    assert atomlab.ring.mul(a, b) == x


def test_high_order_is_never_an_atom(eight_atoms):
    x = atomlab.ring.monomial(eight_atoms, 1, 4)
    assert not unit.is_atom(x)
    shift, rest = unit.factor_witness(x)
    assert atomlab.ring.mul(shift, rest) == x


def test_rejects_units_and_zero(eight_atoms):
    with pytest.raises(ValueError):
        unit.is_atom(atomlab.ring.element(eight_atoms, [1]))
    with pytest.raises(ValueError):
        unit.is_atom(atomlab.ring.element(eight_atoms, []))


@pytest.mark.parametrize("spec_args,total", [
    ((2, 1, 1, 1), 1),    # GF(2)[[X]]
    ((2, 1, 2, 1), 3),    # GF(2) + GF(4)[[X]]X
    ((3, 1, 2, 1), 4),    # GF(3) + GF(9)[[X]]X
    ((2, 1, 1, 2), 4),    # GF(2) + GF(2)[[X]]X^2
    ((2, 2, 1, 2), 8),    # GF(4) + GF(4)[[X]]X^2
])
def test_small_classics(spec_args, total):
    inventory = unit.enumerate_atoms(atomlab.constructions.corrected(*spec_args))
    assert inventory.total == total
    assert inventory.in_m2 == 0


def test_prime_subfield_step():
    # GF(2) + GF(2)X + GF(4)[[X]]X^2
    spec = atomlab.constructions.two_step(2, 1, 2, [1])
    assert unit.enumerate_atoms(spec).total == 6


@pytest.mark.parametrize("q", [2, 3, 4])
def test_two_step_table(q, two_step_table):
    spec, (layer1, in_m2, total) = two_step_table[q]
    inventory = unit.enumerate_atoms(spec)
    assert (inventory.layer1, inventory.in_m2, inventory.total) == (layer1, in_m2, total)


@pytest.mark.slow
def test_two_step_table_q5(two_step_table):
    spec, expected = two_step_table[5]
    inventory = unit.enumerate_atoms(spec)
    assert (inventory.layer1, inventory.in_m2, inventory.total) == expected


@pytest.mark.parametrize("n", [2, 3])
def test_conductor_atom(n):
    spec, f = atomlab.constructions.conductor_atom(2, 1, n)
    assert unit.is_atom(f)
    inventory = unit.enumerate_atoms(spec)
    assert inventory.layer_of[atomlab.ring.canonicalize(f)] == n
    assert max(inventory.layer_counts) == n


@pytest.mark.parametrize("spec", [
    atomlab.constructions.eight_atoms(),
    atomlab.constructions.corrected(2, 1, 2, 1),
    atomlab.constructions.corrected(2, 1, 1, 3),
    atomlab.constructions.two_step(2, 1, 2, [1]),
    atomlab.constructions.conductor_atom(2, 1, 2)[0],
])
def test_oracle_agrees(spec):
    assert unit.brute_force_atoms(spec) == unit.enumerate_atoms(spec)


def test_oracle_cap(eight_atoms):
    atomlab.settings.load_settings({'limits': {'oracle_cap': 16}})
    with pytest.raises(atomlab.exceptions.CapExceeded) as info:
        unit.brute_force_atoms(eight_atoms)
    assert info.value.cap == 'oracle_cap'


def test_inventory_to_dict(eight_atoms):
    data = unit.enumerate_atoms(eight_atoms).to_dict()
    assert data['total'] == 8
    assert data['layer_counts'] == {'1': 6, '2': 2}
    assert data['atoms'][0]['order'] == 1
    assert all(isinstance(cell, str) for atom in data['atoms'] for cell in atom['window'])


@pytest.mark.slow
def test_oracle_battery():
    for spec in atomlab.search.graded_specs(16, 3):
        if spec.tower.order ** spec.n > atomlab.settings.limit('oracle_cap'):
            continue
        assert unit.brute_force_atoms(spec) == unit.enumerate_atoms(spec), repr(spec)
