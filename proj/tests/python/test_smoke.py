import json
import os
import subprocess

import pytest

import cuspkit


def test_positive_roots_and_words():
    assert len(cuspkit.positive_roots("A3")) == 6
    assert len(cuspkit.positive_roots("E6")) == 36
    assert cuspkit.reduced_words("A2") == [[1, 2, 1], [2, 1, 2]]
    assert cuspkit.beta_sequence("A2", [1, 2, 1]) == [[1, 0], [1, 1], [0, 1]]


def test_shuffle_of_letters():
    product = cuspkit.shuffle("A2", {"1": "q{0}:1"}, {"2": "q{0}:1"})
    assert product == {"12": "q{0}:1", "21": "q{1}:1"}


def test_global_basis_a2():
    gb = cuspkit.GlobalBasis("A2", [1, 2, 1])
    assert gb.betas == [[1, 0], [1, 1], [0, 1]]
    assert gb.element([0, 1, 0]) == {"12": "q{0}:1"}
    assert gb.element([1, 0, 1]) == {"21": "q{0}:1"}
    pbw = gb.pbw_monomial([1, 0, 1])
    assert gb.expand(pbw) == {"(1,0,1)": "q{0}:1", "(0,1,0)": "q{1}:1"}
    assert gb.label_of(gb.element([1, 0, 1])) == [1, 0, 1]
    space = gb.weight_space([1, 1])
    assert len(space["exponents"]) == 2


def test_pair_invariants():
    gb = cuspkit.GlobalBasis("A2", [1, 2, 1])
    inv = gb.invariants([1, 0, 0], [0, 0, 1])
    assert inv["delta"] == 1
    inv = gb.invariants([1, 0, 0], [0, 1, 0])
    assert inv["commutes"] is True


def test_qdata_and_lines():
    ar = cuspkit.ar_quiver("A3", "2>1,2>3")
    assert len(ar["vertices"]) == 6
    word = cuspkit.adapted_word("A3", "2>1,2>3")
    assert sorted(word) == [1, 1, 2, 2, 3, 3]
    line = cuspkit.cuspidal_line("A2", "1>2", -2, 5)
    assert line["adapted"] is True


def test_bilex():
    assert cuspkit.bilex_compare("1:1", "1:2") == "Less"
    assert cuspkit.bilex_compare("2:1", "1:1,3:1") == "Less"
    assert cuspkit.bilex_compare("1:1", "2:1") == "Incomparable"


def test_errors():
    with pytest.raises(cuspkit.Error):
        cuspkit.positive_roots("B2")
    with pytest.raises(ValueError):
        cuspkit.GlobalBasis("A2", [1, 1, 2])


def test_run_in_process():
    code, out, err = cuspkit.run("roots", "--cartan", "A2", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["roots"]) == 3
    code, out, err = cuspkit.run("roots", "--cartan", "Z9")
    assert code == 2
    assert err


def test_cli_binary():
    exe = os.environ.get("CUSPKIT_CLI")
    if not exe:
        pytest.skip("CUSPKIT_CLI not set")
    done = subprocess.run([exe, "words", "--cartan", "A2"], capture_output=True, text=True)
    assert done.returncode == 0
    assert json.loads(done.stdout)["words"] == [[1, 2, 1], [2, 1, 2]]
