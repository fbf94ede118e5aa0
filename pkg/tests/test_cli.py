import subprocess
import sys

import pytest

from shiftedq.cli import main
from shiftedq.shapes import parse_partition, parse_shape


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_expand_machine(capsys):
    assert run(["expand", "6,4,3,2,1/5", "--machine"], capsys)[:2] == (0, "2 5,3,2,1")


def test_expand_human(capsys):
    assert run(["expand", "6,4,3,2,1/5"], capsys)[1] == "2·Q[5,3,2,1]"


def test_expand_trivial_cases(capsys):
    assert run(["expand", "3,1/3,1"], capsys)[1] == "EMPTY_SHAPE 1"
    assert run(["expand", "3,1/4"], capsys)[1] == "ZERO 0"


def test_classify_golden(capsys):
    assert run(["classify", "5,4,3,2,1/5,3,2"], capsys)[1] == "HOMOGENEOUS k=1 nu=4,1 family=ii"


def test_classify_not_homogeneous(capsys):
    code, out, _ = run(["classify", "6,5,2,1/4,3"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "NOT_HOMOGENEOUS second_content=4,3"
    assert lines[1].startswith("witness hom1")


def test_canonical_prints_bands(capsys):
    code, out, _ = run(["canonical", "6,5,3,2/4,1"], capsys)
    lines = out.splitlines()
    assert lines[:4] == [". . . . 1' 1", ". . 1' 1 1 2", ". . 1 2' 2", ". . . 2 3"]
    assert [line.split()[0] for line in lines[4:]] == ["P1", "P2", "P3"]


def test_coeff_and_decompose(capsys):
    assert run(["coeff", "6,4,3,2,1/5", "5,3,2,1"], capsys)[1] == "2"
    assert run(["decompose", "5,3,1", "2", "--machine"], capsys)[1].splitlines() == [
        "2 5,2", "2 4,3", "2 4,2,1"]


def test_ot_and_monomial(capsys):
    assert run(["ot", "6,5,2,1/4,3"], capsys)[1] == "6,5,2,1/4,3"
    assert run(["monomial", "1", "--variables", "2"], capsys)[1] == "2*x1 + 2*x2"
    assert run(["monomial", "1", "--max-value", "2", "--machine"], capsys)[1].splitlines() == [
        "2 1,0", "2 0,1"]


def test_witness_verb(capsys):
    out = run(["witness", "6,5,2,1/4,3"], capsys)[1]
    assert out.splitlines()[0] == "hom1 content=4,3"


@pytest.mark.parametrize("argv", [["expand", "3,3/1"], ["expand", "a,b"], ["coeff", "3,1", "2,2"],
                                  ["decompose", "3,1", "9"], ["sweep", "nonsense"]])
def test_bad_input_exits_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err.startswith("error:")


def test_sweep_small(capsys):
    code, out, _ = run(["sweep", "--max-cells", "4", "oracle", "symmetry"], capsys)
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_machine_literals_round_trip(capsys):
    _, out, _ = run(["expand", "6,5,2,1/4,3", "--machine"], capsys)
    for line in out.splitlines():
        coeff, nu = line.split()
        assert parse_partition(nu).literal() == nu
    assert parse_shape("6,5,2,1/4,3").literal() == "6,5,2,1/4,3"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shiftedq", "expand", "3,1/2", "--machine"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "2 2"
