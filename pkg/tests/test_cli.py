import pytest

from symgb.cli import main
from symgb.poly import parse_polynomial


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSym:
    def test_elementary(self, capsys):
        code, out, _ = run(capsys, "sym", "--kind", "e", "--k", "2", "--n", "3")
        assert code == 0
        assert out.strip() == "x2*x3+x1*x3+x1*x2"

    def test_homogeneous(self, capsys):
        code, out, _ = run(capsys, "sym", "--kind", "h", "--k", "3", "--n", "1")
        assert code == 0
        assert out.strip() == "x1^3"

    def test_vanishing(self, capsys):
        code, out, _ = run(capsys, "sym", "--kind", "e", "--k", "4", "--n", "3")
        assert code == 0
        assert out.strip() == "0"

    def test_usage_error(self, capsys):
        code, _, err = run(capsys, "sym", "--kind", "p", "--k", "0", "--n", "3")
        assert code == 2
        assert "error" in err


class TestGb:
    def test_elementary_generators(self, capsys):
        code, out, _ = run(capsys, "gb", "--n", "3", "--gens", "e1,e2,e3")
        assert code == 0
        assert out.splitlines() == [
            "x3+x2+x1", "x2^2+x1*x2+x1^2", "x1^3"]

    def test_two_generators(self, capsys):
        code, out, _ = run(capsys, "gb", "--n", "4", "--gens", "e1,e3")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        assert lines[0] == "x4+x3+x2+x1"

    def test_raw_polynomials(self, capsys):
        code, out, _ = run(capsys, "gb", "--n", "2", "--gens", "x1+x2,x1-x2")
        assert code == 0
        assert out.splitlines() == ["x2", "x1"]

    def test_parse_failure(self, capsys):
        code, _, err = run(capsys, "gb", "--n", "2", "--gens", "x1+!")
        assert code == 2
        assert "error" in err

    def test_round_trip(self, capsys):
        code, out, _ = run(capsys, "gb", "--n", "4", "--gens", "e1,e2,e3,e4")
        assert code == 0
        for line in out.splitlines():
            assert str(parse_polynomial(line, 4)) == line


class TestVerify:
    def test_gb_ek_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "gb-ek", "--n", "1..4")
        assert code == 0
        assert "FAIL" not in out
        assert out.strip().endswith("cells passed")

    def test_hilbert_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "hilbert", "--n", "1..5")
        assert code == 0
        for dim in (1, 2, 6, 24, 120):
            assert f"dim={dim}" in out

    def test_newton_sweep_records(self, capsys):
        code, out, _ = run(capsys, "verify", "newton", "--n", "1..4",
                           "--format", "records")
        assert code == 0
        for line in out.splitlines()[:-1]:
            assert line.startswith("target=newton k=")
            assert "status=PASS" in line

    def test_fixed_k(self, capsys):
        code, out, _ = run(capsys, "verify", "gb-ek", "--n", "2..4", "--k", "2")
        assert code == 0
        assert out.count("PASS") == 3

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "verify", "gb-ek", "--n", "5..2")
        assert code == 2
        assert "error" in err

    def test_max_n_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMGB_MAX_N", "2")
        code, out, _ = run(capsys, "verify", "gb-ek", "--n", "1..5")
        assert code == 0
        assert "n=3" not in out


class TestExplore:
    def test_informational_output(self, capsys):
        code, out, _ = run(capsys, "explore", "--n", "3", "--gens", "e2,e3")
        assert code == 0
        assert out.startswith("basis size:")
        assert "leading monomials:" in out

    def test_consistent_with_gb(self, capsys):
        code, out_explore, _ = run(capsys, "explore", "--n", "4",
                                   "--gens", "e1,e2,e3,e4")
        assert code == 0
        code, out_gb, _ = run(capsys, "gb", "--n", "4", "--gens", "e1,e2,e3,e4")
        assert code == 0
        explored = [l for l in out_explore.splitlines()
                    if not l.startswith(("basis size", "leading monomials"))]
        assert explored == out_gb.splitlines()

    def test_principal_ideal(self, capsys):
        code, out, _ = run(capsys, "explore", "--n", "2", "--gens", "e2")
        assert code == 0
        assert "x1*x2" in out

    def test_index_out_of_range(self, capsys):
        code, _, err = run(capsys, "explore", "--n", "2", "--gens", "e3")
        assert code == 2
        assert "error" in err

    def test_duplicate_index(self, capsys):
        code, _, err = run(capsys, "explore", "--n", "3", "--gens", "e2,e2")
        assert code == 2


class TestInvolutionAndHilbert:
    def test_involution_report(self, capsys):
        code, out, _ = run(capsys, "involution", "--family", "ekn",
                           "--k", "2", "--n", "3")
        assert code == 0
        assert "weight_sum_zero: True" in out

    def test_involution_trace(self, capsys):
        code, out, _ = run(capsys, "involution", "--family", "hkn",
                           "--k", "2", "--n", "2", "--trace")
        assert code == 0
        assert "({2}|{1}) <-> ({1,2}|{}) weight -x1*x2" in out

    def test_hilbert_text(self, capsys):
        code, out, _ = run(capsys, "hilbert", "--n", "4")
        assert code == 0
        assert "dimension: 24" in out

    def test_hilbert_records(self, capsys):
        code, out, _ = run(capsys, "hilbert", "--n", "3", "--format", "records")
        assert code == 0
        assert "coeffs=[1, 2, 2, 1]" in out
        assert "matches_closed_form=True" in out
