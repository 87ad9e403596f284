import pytest

import atomlab.report
import atomlab.settings
import atomlab.cli as unit


def run(capsys, *argv):
    code = unit.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_atoms_eight(capsys, data_path):
    code, out, _ = run(capsys, "atoms", "--spec", data_path("eight_atoms.spec"))
    assert code == unit.EXIT_OK
    assert out.splitlines()[0] == "total=8, layer1=6, layer2=2"


def test_atoms_dvr(capsys, data_path):
    code, out, _ = run(capsys, "atoms", "--spec", data_path("dvr.spec"))
    assert code == unit.EXIT_OK
    assert out.splitlines()[0].startswith("total=1")


def test_atoms_with_oracle(capsys, data_path):
    code, _, err = run(capsys, "atoms", "--oracle", "--spec", data_path("eight_atoms.spec"))
    assert code == unit.EXIT_OK
    assert err == ""


def test_machine_output_round_trips(capsys, data_path):
    code, out, _ = run(capsys, "atoms", "--format=machine", "--spec", data_path("eight_atoms.spec"))
    assert code == unit.EXIT_OK
    doc = atomlab.report.parse_report(out)
    assert doc['result']['total'] == 8
    assert atomlab.report.render_machine(doc) == out


def test_verify_two_step_q3(capsys, data_path):
    code, out, _ = run(capsys, "verify", "--spec", data_path("two_step_q3.spec"))
    assert code == unit.EXIT_OK
    assert out.splitlines()[0] == "PASS (layer1, in_m2, total) = (12, 9, 21)"


def test_structure(capsys, data_path):
    code, out, _ = run(capsys, "structure", "--spec", data_path("gf2_gf4.spec"))
    assert code == unit.EXIT_OK
    assert "|V|" in out


def test_check(capsys, data_path):
    code, out, _ = run(capsys, "check", "--spec", data_path("eight_atoms.spec"), "--seedless")
    assert code == unit.EXIT_OK
    assert out.startswith("valid")


def test_closure_violation_exit_code(capsys, data_path):
    code, out, err = run(capsys, "check", "--spec", data_path("closure_violation.spec"))
    assert code == unit.EXIT_USAGE
    assert out == ""
    assert "(1,1)" in err


def test_parse_error_exit_code(capsys, data_path):
    code, _, err = run(capsys, "atoms", "--spec", data_path("bad_key.spec"))
    assert code == unit.EXIT_USAGE
    assert "line 5" in err


def test_missing_file(capsys, data_path):
    code, _, _ = run(capsys, "atoms", "--spec", data_path("no_such.spec"))
    assert code == unit.EXIT_USAGE


def test_cap_exit_code(capsys, data_path):
    code, _, err = run(capsys, "atoms", "--cap", "4", "--spec", data_path("eight_atoms.spec"))
    assert code == unit.EXIT_CAP
    assert "field_size_cap" in err


def test_usage_errors(capsys):
    assert run(capsys, "atoms")[0] == unit.EXIT_USAGE
    assert run(capsys, "compose", "--count", "nine")[0] == unit.EXIT_USAGE
    assert run(capsys, "sweep", "--family", "4")[0] == unit.EXIT_USAGE
    assert run(capsys, "sweep", "--format", "yaml")[0] == unit.EXIT_USAGE


def test_compose(capsys):
    code, out, _ = run(capsys, "compose", "--count", "9")
    assert code == unit.EXIT_OK
    assert out == "9 = (2+1) + (5+1)\n"


def test_find(capsys):
    code, out, _ = run(capsys, "find", "--count", "2")
    assert code == unit.EXIT_OK
    assert out.startswith("2: impossible")
    code, out, _ = run(capsys, "find", "--count", "21", "--max-pm", "9")
    assert code == unit.EXIT_OK
    assert out.startswith("21: found")


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "2", "--max-pm", "3", "--enumerate")
    assert code == unit.EXIT_OK
    assert out.count("match") == 2


def test_version(capsys):
    with pytest.raises(SystemExit):
        unit.main(["--version"])
    assert capsys.readouterr().out.strip() == atomlab.report.package_version()


def test_bad_log_level_is_a_usage_error(capsys, data_path, tmp_path, monkeypatch):
    monkeypatch.setattr(atomlab.settings, 'init_pmss_settings', lambda paths: None)
    config = tmp_path / "atomlab.yaml"
    config.write_text("logging:\n    debug_log_level: LOUD\n")
    code, out, err = run(capsys, "check", "--config", str(config), "--spec", data_path("eight_atoms.spec"))
    assert code == unit.EXIT_USAGE
    assert out == ""
    assert "LOUD" in err


def test_seedless_is_documented():
    assert "--seedless" in unit.__doc__
    assert "No-op" in unit.__doc__
