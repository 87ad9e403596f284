import pytest

import atomlab.atoms
import atomlab.constructions
import atomlab.search
import atomlab.structure
import atomlab.verify as unit


def _names(results):
    return [r.name for r in results]


def test_eight_atoms_passes(eight_atoms):
    results = unit.verify_spec(eight_atoms)
    assert unit.failures(results) == []
    assert len(results) == len(unit.CHECKS)


def test_oracle_check_is_opt_in(eight_atoms):
    plain = unit.verify_spec(eight_atoms)
    with_oracle = unit.verify_spec(eight_atoms, oracle=True)
    assert "oracle_agrees" not in _names(plain)
    assert "oracle_agrees" in _names(with_oracle)
    assert unit.failures(with_oracle) == []


@pytest.mark.parametrize("spec", [
    atomlab.constructions.corrected(2, 1, 1, 1),
    atomlab.constructions.corrected(2, 1, 2, 1),
    atomlab.constructions.corrected(3, 1, 2, 1),
    atomlab.constructions.corrected(2, 1, 1, 2),
    atomlab.constructions.corrected(2, 2, 1, 2),
    atomlab.constructions.two_step(2, 1, 2, [1]),
    atomlab.constructions.atoms_in_m2(3, 1),
    atomlab.constructions.conductor_atom(2, 1, 2)[0],
])
def test_named_rings_pass(spec):
    failed = unit.failures(unit.verify_spec(spec))
    assert failed == [], [(r.name, r.detail) for r in failed]


def test_results_are_named_records(eight_atoms):
    for result in unit.verify_spec(eight_atoms):
        assert isinstance(result.name, str)
        assert result.passed is True
        assert isinstance(result.detail, str)


def test_failures_filters():
    records = [unit.PropertyResult("a", True), unit.PropertyResult("b", False, "broken")]
    assert [r.name for r in unit.failures(records)] == ["b"]


def test_universal_power_check_with_many_atoms():
    # GF(2) + GF(1024)[[X]]X: 1023 atoms
    spec = atomlab.constructions.corrected(2, 1, 10, 1)
    inventory = atomlab.atoms.enumerate_atoms(spec)
    report = atomlab.structure.structure_report(spec)
    assert inventory.total == 1023
    result = unit.check_universal_powers(spec, inventory, report)
    assert result.passed, result.detail


@pytest.mark.slow
def test_conductor_three_over_gf8_passes():
    failed = unit.failures(unit.verify_spec(atomlab.constructions.corrected(2, 1, 3, 3)))
    assert failed == [], [(r.name, r.detail) for r in failed]


@pytest.mark.slow
def test_graded_battery_passes():
    for spec in atomlab.search.graded_specs(16, 3):
        failed = unit.failures(unit.verify_spec(spec))
        assert failed == [], (repr(spec), [(r.name, r.detail) for r in failed])


def test_small_graded_battery_passes():
    for spec in atomlab.search.graded_specs(4, 2):
        failed = unit.failures(unit.verify_spec(spec))
        assert failed == [], (repr(spec), [(r.name, r.detail) for r in failed])
