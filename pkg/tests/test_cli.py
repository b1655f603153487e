import json

import pytest

from ellsurf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_machine(capsys, *argv):
    code, out, err = run(capsys, "--format", "machine", *argv)
    return code, json.loads(out) if out else None, err


class TestTransformCommand:
    def test_structure_sheaf_golden(self, capsys):
        code, out, _ = run(capsys, "--e", "1", "transform", "--rank", "1", "--c1", "0,0")
        assert code == 0
        assert out == (
            "input  : (1, 0, 0) on X\n"
            "forward transform : (0, -Theta, 1/2) on Xhat\n"
        )

    def test_inverse_golden(self, capsys):
        code, out, _ = run(
            capsys, "--e", "1", "transform", "--inverse",
            "--rank", "0", "--c1", "2,0", "--ch2", "-2", "--side", "Xhat",
        )
        assert code == 0
        assert "inverse transform : (2, -mu, 0) on X" in out

    def test_wit1_golden(self, capsys):
        code, out, _ = run(capsys, "--e", "1", "transform", "--wit1", "--rank", "1", "--c1", "0,0")
        assert code == 0
        assert "wit1 transform : (0, Theta, -1/2) on Xhat" in out

    def test_wit1_gate_error(self, capsys):
        code, _, err = run(capsys, "--e", "1", "transform", "--wit1", "--rank", "1", "--c1", "1,0")
        assert code == 2
        assert "degree-zero gate" in err

    def test_zero_denominator_is_parse_error(self, capsys):
        code, _, err = run(capsys, "--e", "1", "transform", "--rank", "1/0", "--c1", "0,0")
        assert code == 2
        assert "zero denominator" in err

    def test_wrong_side_is_error(self, capsys):
        code, _, err = run(
            capsys, "--e", "1", "transform", "--rank", "1", "--c1", "0,0", "--side", "Xhat"
        )
        assert code == 2
        assert "characters on X" in err

    def test_machine_output(self, capsys):
        code, doc, _ = run_machine(capsys, "--e", "1", "transform", "--rank", "1", "--c1", "0,0")
        assert code == 0
        assert list(doc) == ["geometry", "input", "output", "diagnostics"]
        assert doc["output"]["chern"] == {
            "side": "Xhat",
            "rank": "0",
            "c1": {"side": "Xhat", "h": "-1", "f": "0"},
            "ch2": "1/2",
        }


class TestCoverCommand:
    def test_remark_cover_golden(self, capsys):
        code, doc, _ = run_machine(capsys, "--e", "1", "cover", "--n", "2", "--k", "0", "--r", "-4")
        assert code == 0
        assert doc["output"]["chi"] == "3"
        assert doc["output"]["p"] == "-2"
        assert doc["output"]["ell"] == "-2"
        assert doc["output"]["ch_on_surface"]["c1"] == {"side": "X", "h": "0", "f": "-1"}
        assert doc["output"]["slope"] == "-4"

    def test_section_cover(self, capsys):
        code, doc, _ = run_machine(capsys, "--e", "2", "cover", "--n", "1", "--r", "0")
        assert code == 0
        assert doc["output"]["ch_on_surface"] == {
            "side": "X",
            "rank": "1",
            "c1": {"side": "X", "h": "0", "f": "2"},
            "ch2": "0",
        }

    def test_degenerate_cover_is_usage_error(self, capsys):
        code, _, err = run(capsys, "--e", "1", "cover", "--n", "0", "--r", "0")
        assert code == 2
        assert "n must be >= 1" in err


class TestSlopeCommand:
    def test_remark_bundle(self, capsys):
        code, doc, _ = run_machine(
            capsys, "--e", "1", "slope", "--rank", "2", "--c1", "0,-1", "--a", "1", "--b", "1"
        )
        assert code == 0
        assert doc["output"]["slope"] == "-1/2"


class TestScanCommand:
    def test_contains_structure_sheaf(self, capsys):
        code, doc, _ = run_machine(
            capsys, "--e", "1", "scan", "--rank", "2", "--c1", "0,-1",
            "--a", "1", "--b", "1", "--box", "3",
        )
        assert code == 0
        assert {"n_prime": 1, "c_prime": 0, "d_prime": 0} in doc["output"]["destabilizers"]


class TestThresholdCommand:
    def test_remark_bundle(self, capsys):
        code, doc, _ = run_machine(
            capsys, "--e", "1", "threshold", "--rank", "2", "--c1", "0,-1",
            "--a", "1", "--box", "3",
        )
        assert code == 0
        # binding candidate maximizes (2c' + n')/(2|d'|) in the box
        assert doc["output"]["b0"] == "7/2"
        assert doc["output"]["binding"] == {"n_prime": 1, "c_prime": 3, "d_prime": -1}

    def test_a_homogeneity(self, capsys):
        _, doc1, _ = run_machine(
            capsys, "--e", "1", "threshold", "--rank", "2", "--c1", "0,-1",
            "--a", "1", "--box", "3",
        )
        _, doc2, _ = run_machine(
            capsys, "--e", "1", "threshold", "--rank", "2", "--c1", "0,-1",
            "--a", "2", "--box", "3",
        )
        from fractions import Fraction
        assert Fraction(doc2["output"]["b0"]) == 2 * Fraction(doc1["output"]["b0"])

    def test_nonzero_fibre_degree_rejected(self, capsys):
        code, _, err = run(
            capsys, "--e", "1", "threshold", "--rank", "2", "--c1", "1,0",
            "--a", "1", "--box", "3",
        )
        assert code == 2
        assert "semistability gate" in err


class TestFittingCommand:
    def test_smooth_parts(self, capsys):
        code, doc, _ = run_machine(
            capsys, "fitting", "--part", "x1:2", "--part", "x2:1"
        )
        assert code == 0
        assert doc["output"]["length"] == 3
        assert doc["output"]["degree"] == 3
        assert doc["output"]["sym_point"] == {"x1": 2, "x2": 1}

    def test_singular_part(self, capsys):
        code, doc, _ = run_machine(
            capsys, "fitting", "--part", "x0:2:singular", "--part", "x1:1"
        )
        assert code == 0
        assert doc["output"]["length"] == 4

    def test_two_singular_parts_rejected(self, capsys):
        code, _, err = run(
            capsys, "fitting", "--part", "x0:1:singular", "--part", "x1:1:singular"
        )
        assert code == 2
        assert "at most one" in err


class TestVerifyRemarkCommand:
    @pytest.mark.parametrize("e", [1, 5])
    def test_pass_for_positive_e(self, capsys, e):
        code, out, _ = run(capsys, "--e", str(e), "verify-remark")
        assert code == 0
        assert "PASS" in out
        assert "expected %d" % (-4 * e) in out
        assert "expected %d" % (-3 * e) in out

    def test_e_zero_boundary(self, capsys):
        code, out, _ = run(capsys, "--e", "0", "verify-remark")
        assert code == 0
        assert "stable boundary: no strict destabilizer" in out

    def test_genus_must_be_zero(self, capsys):
        code, _, err = run(capsys, "--genus", "1", "--e", "1", "verify-remark")
        assert code == 2
        assert "genus 0" in err


class TestToddCommand:
    def test_golden(self, capsys):
        code, out, _ = run(capsys, "--e", "1", "todd")
        assert code == 0
        assert out == "relative Todd class: 1 + (-1/2*mu) + 1*w\n"


class TestMachineModeStability:
    def test_byte_identical_across_runs(self, capsys):
        argv = [
            "--e", "3", "--format", "machine", "threshold",
            "--rank", "4", "--c1", "0,-2", "--a", "3/2", "--box", "4",
        ]
        outputs = set()
        for _ in range(3):
            code = main(list(argv))
            outputs.add(capsys.readouterr().out)
            assert code == 0
        assert len(outputs) == 1


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == 2
