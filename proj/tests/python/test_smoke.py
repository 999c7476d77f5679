import json
import os
import subprocess

import pytest

import mfree

RUNNING = "x1; x2; x3; x1-x2"


def test_arrangement_properties():
    a = mfree.Arrangement(RUNNING)
    assert len(a) == 4
    assert a.dim == 3
    assert a.rank == 3
    assert a.is_essential
    assert a.normals[3] == [1, -1, 0]
    assert len(a.flats) == 4
    assert "Arrangement(" in repr(a)


def test_closed_form_exponents():
    a = mfree.Arrangement(RUNNING)
    assert mfree.exponents(a, 2) == [1, 2, 2, 2, 2, 3]
    assert mfree.exponents(a, 3) == [1, 2, 2, 2, 2, 3, 3, 3, 3, 3]
    assert mfree.exp_2arr(3, 2) == [2, 2, 2]


def test_basis_matches_closed_form():
    a = mfree.Arrangement(RUNNING)
    b = mfree.basis(a, 2)
    assert len(b) == 6
    assert b.exponents == mfree.exponents(a, 2)
    assert b.saito_t == 3
    assert b.saito_c == "-2"
    report = json.loads(b.to_json())
    assert report["exponents"] == [1, 2, 2, 2, 2, 3]
    same = mfree.basis(a, 3, extension="x1+x2")
    assert same.exponents == mfree.basis(a, 3, extension="x1+x2-x3").exponents


def test_oracle_and_hilbert_check():
    a = mfree.Arrangement(RUNNING)
    assert [mfree.oracle_dim(a, 2, d) for d in range(4)] == [0, 1, 7, 19]
    ok, rows = mfree.hilbert_check(a, 2, [1, 2, 2, 2, 2, 3], 5)
    assert ok
    assert all(actual == predicted for _, actual, predicted in rows)
    generic = mfree.Arrangement("x1; x2; x3; x1+x2+x3")
    ok, _ = mfree.hilbert_check(generic, 1, [1, 1, 2], 5)
    assert not ok


def test_user_errors():
    a = mfree.Arrangement(RUNNING)
    with pytest.raises(mfree.UserError):
        mfree.basis(a, 1)
    with pytest.raises(mfree.UserError):
        mfree.Arrangement("x1; x1+")
    assert issubclass(mfree.UserError, mfree.Error)


def test_run_mirrors_cli():
    code, out = mfree.run("exponents", RUNNING, m=2, format="text")
    assert code == 0
    assert out.strip() == "[1,2,2,2,2,3]"
    code, _ = mfree.run("oracle", RUNNING, m=2, max_degree=4)
    assert code == 0


@pytest.mark.skipif("MFREE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes():
    cli = os.environ["MFREE_CLI"]
    ok = subprocess.run([cli, "exponents", "--m", "2", RUNNING], capture_output=True, text=True)
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["exponents"] == [1, 2, 2, 2, 2, 3]
    bad = subprocess.run([cli, "basis", "--m", "1", RUNNING], capture_output=True, text=True)
    assert bad.returncode == 1
