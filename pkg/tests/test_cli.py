import json
from fractions import Fraction

import pytest

from propdigraph import Digraph, ZoneMap, realize_rational
from propdigraph.cli import main
from propdigraph.fileformats import (
    FileFormatError,
    parse_cnf_file,
    parse_digraph_file,
    parse_fraction,
    parse_witness_file,
    serialize_digraph,
    serialize_witness,
)

HALF = Fraction(1, 2)

EXAMPLE_TEXT = """\
# running example
digraph n=4
1 -> 2
2 -> 1
2 -> 3
3 -> 2
1 -> 3
3 -> 4
2 -> 4
"""

CYCLE_TEXT = """\
digraph n=3
1 -> 2
2 -> 3
3 -> 1
"""


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "running_example.dg"
    path.write_text(EXAMPLE_TEXT)
    return str(path)


@pytest.fixture
def cycle_file(tmp_path):
    path = tmp_path / "cycle.dg"
    path.write_text(CYCLE_TEXT)
    return str(path)


# --------------------------------------------------------------------------
# File formats


class TestDigraphFormat:
    def test_parse_running_example(self, running_example):
        g, labels = parse_digraph_file(EXAMPLE_TEXT)
        assert g == running_example
        assert labels == ["1", "2", "3", "4"]

    def test_round_trip(self, running_example):
        g, _ = parse_digraph_file(serialize_digraph(running_example))
        assert g == running_example

    def test_named_vertices(self):
        text = "digraph n=3\ncats -> dogs\ndogs -> cats\ncats -> birds\n"
        g, labels = parse_digraph_file(text)
        assert labels == ["cats", "dogs", "birds"]
        assert g.edges == frozenset({(1, 2), (2, 1), (1, 3)})

    @pytest.mark.parametrize(
        "text,bad_line",
        [
            ("1 -> 2\n", 1),  # missing header
            ("digraph n=2\n1 -> 1\n", 2),
            ("digraph n=2\n1 -> 3\n", 2),
            ("digraph n=2\n1 -> 2\n1 -> 2\n", 3),
            ("digraph n=2\n1 2\n", 2),
            ("digraph n=x\n", 1),
            ("", 1),
        ],
    )
    def test_rejects_malformed(self, text, bad_line):
        with pytest.raises(FileFormatError) as excinfo:
            parse_digraph_file(text)
        assert excinfo.value.lineno == bad_line

    def test_too_many_names(self):
        with pytest.raises(FileFormatError):
            parse_digraph_file("digraph n=2\na -> b\nb -> c\n")


class TestWitnessFormat:
    def test_round_trip(self, running_example):
        z = realize_rational(running_example, 1, 2)
        parsed, alpha = parse_witness_file(serialize_witness(z, HALF))
        assert parsed == z
        assert alpha == HALF
        assert parsed.induced_digraph(alpha) == running_example

    def test_derived_block_is_ignored(self):
        text = "n: 2\nalpha: 1/3\nzones:\n  1,2: 5\nderived:\n  total: 999\n"
        z, alpha = parse_witness_file(text)
        assert z == ZoneMap(2, {(1, 2): 5})
        assert alpha == Fraction(1, 3)

    @pytest.mark.parametrize(
        "text",
        [
            "alpha: 1/2\nzones:\n  1: 1\n",  # zones before n
            "n: 2\nzones:\n  1: 1\n",  # missing alpha
            "n: 2\nalpha: 1/2\nzones:\n  3: 1\n",  # index out of range
            "n: 2\nalpha: 1/2\nzones:\n  2,1: 1\n",  # not ascending
            "n: 2\nalpha: 1/2\nzones:\n  1: 1\n  1: 2\n",  # duplicate
            "n: 2\nalpha: 3/2\nzones:\n  1: 1\n",  # alpha out of range
            "n: 2\nalpha: 1/2\nmystery: 4\n",
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(FileFormatError):
            parse_witness_file(text)


class TestParseFraction:
    def test_accepts_interior_values(self):
        assert parse_fraction(" 7/10 ") == Fraction(7, 10)

    @pytest.mark.parametrize("text", ["0", "1", "5/4", "-1/2", "1/0", "abc"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_fraction(text)


class TestCnfFormat:
    def test_basic(self):
        text = "c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n"
        assert parse_cnf_file(text) == [(1, -2, 3), (-1, 2, -3)]

    def test_trailing_clause_without_zero(self):
        assert parse_cnf_file("1 2 3") == [(1, 2, 3)]

    def test_rejects_short_clause(self):
        with pytest.raises(FileFormatError):
            parse_cnf_file("1 2 0\n")


# --------------------------------------------------------------------------
# Subcommands and exit codes


class TestCheck:
    def test_representable(self, example_file, capsys):
        assert main(["check", example_file]) == 0
        assert capsys.readouterr().out.strip() == "representable"

    def test_not_representable(self, cycle_file, capsys):
        assert main(["check", cycle_file]) == 1
        assert capsys.readouterr().out.strip() == "not-representable: 1 -> 2 -> 3 -> 1"

    def test_json(self, cycle_file, capsys):
        assert main(["--json", "check", cycle_file]) == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload == {
            "verdict": "not-representable",
            "cycle": ["1", "2", "3", "1"],
        }

    def test_missing_file(self, tmp_path, capsys):
        assert main(["check", str(tmp_path / "nope.dg")]) == 2
        assert "error" in capsys.readouterr().err


class TestRealize:
    def test_writes_verifiable_witness(self, example_file, running_example, tmp_path):
        out = tmp_path / "w.txt"
        assert main(["realize", example_file, "--alpha", "1/2", "-o", str(out)]) == 0
        z, alpha = parse_witness_file(out.read_text())
        assert alpha == HALF
        assert z.induced_digraph(alpha) == running_example

    def test_stdout_witness(self, example_file, capsys):
        assert main(["realize", example_file, "--alpha", "1/2"]) == 0
        out = capsys.readouterr().out
        assert "n: 4" in out and "alpha: 1/2" in out
        z, _ = parse_witness_file(out)
        assert z.total_points == 249

    def test_real_method(self, example_file, running_example, tmp_path):
        out = tmp_path / "w.txt"
        code = main(
            ["realize", example_file, "--alpha", "618/1000",
             "--method", "real", "-o", str(out)]
        )
        assert code == 0
        z, alpha = parse_witness_file(out.read_text())
        assert alpha == Fraction(618, 1000)
        assert z.induced_digraph(alpha) == running_example

    def test_cycle_is_negative(self, cycle_file, capsys):
        assert main(["realize", cycle_file, "--alpha", "1/2"]) == 1
        assert "not-representable" in capsys.readouterr().out

    def test_bad_alpha(self, example_file, capsys):
        assert main(["realize", example_file, "--alpha", "3/2"]) == 2

    def test_json_zones(self, example_file, capsys):
        assert main(["--json", "realize", example_file, "--alpha", "1/2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["verdict"] == "ok"
        assert payload["total_points"] == 249
        z = ZoneMap(
            payload["n"],
            {tuple(map(int, k.split(","))): v for k, v in payload["zones"].items()},
        )
        assert z.induced_digraph(HALF).n == 4


class TestVerify:
    @pytest.fixture
    def witness_file(self, running_example, tmp_path):
        z = realize_rational(running_example, 1, 2)
        path = tmp_path / "w.txt"
        path.write_text(serialize_witness(z, HALF))
        return str(path)

    def test_match(self, witness_file, example_file, capsys):
        assert main(["verify", witness_file, example_file]) == 0
        assert capsys.readouterr().out.strip() == "match"

    def test_tampered_witness_reports_diff(self, running_example, tmp_path, example_file, capsys):
        z = realize_rational(running_example, 1, 2)
        tampered = z.transfer_private(1, 3, z.pair_intersection(1, 3) - 51)
        path = tmp_path / "bad.txt"
        path.write_text(serialize_witness(tampered, HALF))
        assert main(["verify", str(path), example_file]) == 1
        out = capsys.readouterr().out
        assert "mismatch" in out
        assert "missing: 1 -> 3" in out

    def test_interval_condition(self, tmp_path, capsys):
        # sets from three overlapping blocks inducing a one-way 3-cycle
        # under the (1/2, 99/100) interval reading
        z = ZoneMap(3, {(1, 2, 3): 3, (1, 2): 1, (2, 3): 2, (1,): 2, (2,): 2})
        wpath = tmp_path / "w.txt"
        wpath.write_text(serialize_witness(z, HALF))
        gpath = tmp_path / "g.dg"
        gpath.write_text("digraph n=3\n1 -> 2\n2 -> 3\n3 -> 1\n")
        assert main(["verify", str(wpath), str(gpath), "--beta", "99/100"]) == 0

    def test_size_mismatch_is_input_error(self, witness_file, tmp_path, capsys):
        gpath = tmp_path / "g.dg"
        gpath.write_text("digraph n=2\n1 -> 2\n")
        assert main(["verify", witness_file, str(gpath)]) == 2


class TestLogic:
    def test_sat(self, capsys):
        assert main(["logic", "sat", "M(X,Y) & M(Y,X)"]) == 0
        assert capsys.readouterr().out.startswith("SAT")

    def test_unsat(self, capsys):
        assert main(["logic", "sat", "M(X,Y) & ~M(X,X)"]) == 1
        assert capsys.readouterr().out.strip() == "UNSAT"

    def test_model_json_satisfies_sentence(self, capsys):
        assert main(["--json", "logic", "model", "M(X,Y) & M(Y,Z)"]) == 0
        payload = json.loads(capsys.readouterr().out)
        x = set(payload["model"]["X"])
        y = set(payload["model"]["Y"])
        z = set(payload["model"]["Z"])
        assert 2 * len(x & y) > len(x)
        assert 2 * len(y & z) > len(y)

    def test_syntax_error(self, capsys):
        assert main(["logic", "sat", "M(X,"]) == 2
        assert "error" in capsys.readouterr().err

    def test_resource_limit_exit_code(self, capsys):
        parts = [f"M(A{i},B{i})" for i in range(13)]
        assert main(["logic", "sat", " & ".join(parts)]) == 3
        assert "resource limit" in capsys.readouterr().err

    def test_entails(self, tmp_path, capsys):
        path = tmp_path / "premises.txt"
        path.write_text("M(X,Y)\nM(Y,Z)  # chained\n")
        conclusion = "~M(Z,X) | M(Y,X) | M(Z,Y) | M(X,Z)"
        assert main(["logic", "entails", str(path), conclusion]) == 0
        assert capsys.readouterr().out.strip() == "ENTAILED"

    def test_not_entails(self, tmp_path, capsys):
        path = tmp_path / "premises.txt"
        path.write_text("M(X,X)\n")
        assert main(["logic", "entails", str(path), "M(X,Y)"]) == 1
        assert capsys.readouterr().out.strip() == "NOT-ENTAILED"

    def test_bad_premise_reports_line(self, tmp_path, capsys):
        path = tmp_path / "premises.txt"
        path.write_text("M(X,X)\nM(Y\n")
        assert main(["logic", "entails", str(path), "M(X,X)"]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_gen3sat(self, tmp_path, capsys):
        path = tmp_path / "instance.cnf"
        path.write_text("p cnf 3 1\n1 -2 3 0\n")
        assert main(["logic", "gen3sat", str(path)]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "M(X1,X2) | ~M(X3,X4) | M(X5,X6)"
