import pytest

import atomlab.constructions
import atomlab.exceptions
import atomlab.settings
import atomlab.specfile as unit


def test_parse_polynomial():
    assert unit.parse_polynomial("1+y+y^2") == [(1, 0), (1, 1), (1, 2)]
    assert unit.parse_polynomial(" 2 y ^ 3 ") == [(2, 3)]
    assert unit.parse_polynomial("0") == [(0, 0)]
    for bad in ("", "y^", "1++y", "x", "y2"):
        with pytest.raises(ValueError):
            unit.parse_polynomial(bad)


def test_load_eight_atoms(data_path, eight_atoms):
    assert unit.load_spec(data_path("eight_atoms.spec")) == eight_atoms


def test_whitespace_and_comments(data_path):
    spec = unit.load_spec(data_path("two_step_q3.spec"))
    assert spec == atomlab.constructions.atoms_in_m2(3, 1)


def test_dvr(data_path):
    spec = unit.load_spec(data_path("dvr.spec"))
    assert spec.n == 1
    assert spec.V == ()


def test_zero_subspace():
    text = "p=2\nm=1\nD=1\nn=2\nV1=0\n"
    assert unit.parse_spec(text) == atomlab.constructions.corrected(2, 1, 1, 2)
    assert unit.parse_spec(text.replace("V1=0", "V1=")) == atomlab.constructions.corrected(2, 1, 1, 2)


def test_unknown_key_cites_line(data_path):
    with pytest.raises(atomlab.exceptions.SpecParseError) as info:
        unit.load_spec(data_path("bad_key.spec"))
    assert info.value.line == 5
    assert "line 5" in str(info.value)


def test_closure_violation_lists_pairs(data_path):
    with pytest.raises(atomlab.exceptions.ClosureViolation) as info:
        unit.load_spec(data_path("closure_violation.spec"))
    assert info.value.pairs == [(1, 1)]


@pytest.mark.parametrize("text,line", [
    ("p=2\np=3\nm=1\nD=1\nn=1\n", 2),        # duplicate
    ("p=2\nm=2\nD=3\nn=1\n", 3),             # m does not divide D
    ("p=4\nm=1\nD=1\nn=1\n", 1),             # not prime
    ("p=2\nm=1\nD=1\nn=x\n", 4),             # not an integer
    ("p=2\nm=1\nD=3\nn=2\nV1=1,z\n", 5),     # bad polynomial
    ("p=2\nm=1\nD=3\nn=1\nV1=1\n", 5),       # V1 with n=1
    ("p=2\nm=1\nD 3\n", 3),                   # not key=value
])
def test_parse_errors(text, line):
    with pytest.raises(atomlab.exceptions.SpecParseError) as info:
        unit.parse_spec(text)
    assert info.value.line == line


def test_missing_keys():
    with pytest.raises(atomlab.exceptions.SpecParseError) as info:
        unit.parse_spec("p=2\nm=1\nD=3\n")
    assert info.value.line is None
    assert "'n'" in str(info.value)
    with pytest.raises(atomlab.exceptions.SpecParseError):
        unit.parse_spec("p=2\nm=1\nD=3\nn=3\nV1=1,y\n")


def test_field_size_cap_propagates():
    atomlab.settings.load_settings({'limits': {'field_size_cap': 8}})
    with pytest.raises(atomlab.exceptions.CapExceeded):
        unit.parse_spec("p=2\nm=1\nD=4\nn=1\n")


@pytest.mark.parametrize("spec", [
    atomlab.constructions.eight_atoms(),
    atomlab.constructions.corrected(2, 1, 1, 3),
    atomlab.constructions.intermediate_field(2, 1, 2, 2),
    atomlab.constructions.conductor_atom(2, 1, 3)[0],
])
def test_render_parses_back(spec):
    text = unit.render_spec(spec, comment="round trip")
    assert text.startswith("# round trip\n")
    assert unit.parse_spec(text) == spec
