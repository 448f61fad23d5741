import json

import pytest

from diagcat.cli import parse_diagram, run
from diagcat.errors import DiagramSyntaxError, NotAMatching


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParseDiagram:
    def test_three_to_five_example(self):
        d = parse_diagram("3->5:(b1 b3)(b2 t4)(t1 t2)(t3 t5)")
        assert d.to_text() == "3->5:(b1 b3)(b2 t4)(t1 t2)(t3 t5)"

    def test_empty(self):
        assert parse_diagram("0->0:").to_text() == "0->0:"

    def test_round_trip(self):
        from diagcat import enumerate_diagrams

        cases = [
            ("brauer", 2, 2),
            ("brauer", 3, 1),
            ("signed", 2, 2),
            ("partition", 2, 2),
            ("walled", (1, 1), (1, 1)),
            ("fisharp", 2, 2),
        ]
        for variant, bot, top in cases:
            for d in enumerate_diagrams(variant, bot, top):
                assert parse_diagram(d.to_text(), variant) == d

    def test_whitespace_tolerated(self):
        d = parse_diagram(" 2 -> 0 : ( b1 b2 ) ")
        assert d.to_text() == "2->0:(b1 b2)"

    def test_semantic_error(self):
        with pytest.raises(NotAMatching) as exc:
            parse_diagram("2->1:(b1 b2)")
        assert "t1" in str(exc.value)

    def test_syntax_error_position(self):
        with pytest.raises(DiagramSyntaxError) as exc:
            parse_diagram("2->0:(b1 x2)")
        assert exc.value.position == 9  # the offending 'x'
        with pytest.raises(DiagramSyntaxError):
            parse_diagram("2->0")
        with pytest.raises(DiagramSyntaxError):
            parse_diagram("2->0:(b1 b2) trailing")

    def test_signed_requires_orientation(self):
        with pytest.raises(DiagramSyntaxError):
            parse_diagram("2->0:(b1 b2)", "signed")
        d = parse_diagram("2->0:(b2>b1)", "signed")
        assert d.arrows == (((0, 2), (0, 1)),)

    def test_fisharp(self):
        d = parse_diagram("2->2:[b1->t2]", "fisharp")
        assert d.pairs == ((1, 2),)
        assert parse_diagram("2->2:[]", "fisharp").pairs == ()


class TestCommands:
    def test_compose_golden(self, capsys):
        code, out, _ = capture(
            capsys,
            ["compose", "--category", "brauer", "2->0:(b1 b2)", "0->2:(t1 t2)"],
        )
        assert code == 0
        assert out == "d^1 * 1 * (0->0:)\n"

    def test_compose_json(self, capsys):
        code, out, _ = capture(
            capsys,
            [
                "compose",
                "--category",
                "brauer",
                "--json",
                "2->0:(b1 b2)",
                "0->2:(t1 t2)",
            ],
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["closed_count"] == 1
        assert obj["sign"] == 1
        assert obj["result"]["variant"] == "brauer"

    def test_compose_delta_evaluated(self, capsys):
        code, out, _ = capture(
            capsys,
            [
                "compose",
                "--category",
                "brauer",
                "--delta",
                "1/2",
                "2->0:(b1 b2)",
                "0->2:(t1 t2)",
            ],
        )
        assert code == 0
        assert out == "1/2 * (0->0:)\n"

    def test_compose_delta_zero(self, capsys):
        code, out, _ = capture(
            capsys,
            [
                "compose",
                "--category",
                "brauer",
                "--delta",
                "0",
                "2->0:(b1 b2)",
                "0->2:(t1 t2)",
            ],
        )
        assert code == 0
        assert out == "0\n"

    def test_compose_signed(self, capsys):
        code, out, _ = capture(
            capsys,
            ["compose", "--category", "signed", "2->0:(b1>b2)", "0->2:(t2>t1)"],
        )
        assert code == 0
        assert out == "d^1 * -1 * (0->0:)\n"

    def test_enumerate_count_golden(self, capsys):
        code, out, _ = capture(
            capsys, ["enumerate", "--category", "temperley_lieb", "3", "3", "--count"]
        )
        assert code == 0
        assert out == "5\n"

    def test_enumerate_list(self, capsys):
        code, out, _ = capture(capsys, ["enumerate", "1", "1"])
        assert code == 0
        assert out == "1->1:(b1 t1)\n"

    def test_enumerate_walled(self, capsys):
        code, out, _ = capture(
            capsys, ["enumerate", "--category", "walled", "1+1", "1+1", "--count"]
        )
        assert code == 0
        assert out == "2\n"

    def test_taut(self, capsys):
        code, out, _ = capture(
            capsys, ["taut", "--category", "brauer", "--dim", "3", "0->0:"]
        )
        assert code == 0
        assert out == "1\n"

    def test_taut_json(self, capsys):
        code, out, _ = capture(
            capsys,
            ["taut", "--category", "temperley_lieb", "--q", "2", "2->0:(b1 b2)", "--json"],
        )
        obj = json.loads(out)
        assert obj["parameter"] == "-5/2"
        assert obj["entries"] == [["0", "-1/2", "1", "0"]]

    def test_mult(self, capsys):
        code, out, _ = capture(capsys, ["mult", "--delta-of", "2,1", "--weight", "3,1,1"])
        assert code == 0 and out == "1\n"
        code, out, _ = capture(capsys, ["mult", "--ptilde", "2", "--weight", ""])
        assert code == 0 and out == "1\n"

    def test_mult_table_json(self, capsys):
        code, out, _ = capture(
            capsys, ["mult", "--delta-of", "", "--weights-of-size", "2", "--json"]
        )
        obj = json.loads(out)
        assert obj["entries"] == {"2": 1, "1,1": 0}

    def test_char(self, capsys):
        code, out, _ = capture(capsys, ["char", "--lambda", "2,1", "--mu", "3"])
        assert code == 0 and out == "-1\n"
        code, out, _ = capture(capsys, ["char", "--lambda", "2,1"])
        assert code == 0 and out == "2\n"

    def test_semisimple(self, capsys):
        code, out, _ = capture(
            capsys, ["semisimple", "--category", "brauer", "--n", "2", "--delta", "0"]
        )
        assert code == 0 and out == "false\n"
        code, out, _ = capture(capsys, ["semisimple", "--discriminant", "--n", "2"])
        assert code == 0 and out == "4*d^2\n"

    def test_verify_axioms(self, capsys):
        code, out, _ = capture(
            capsys, ["verify", "--axioms", "--category", "brauer", "--max-size", "2"]
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["pass"] is True
        assert obj["reports"]["axioms"]["t3"]["pass"] is True

    def test_verify_principal(self, capsys):
        code, out, _ = capture(capsys, ["verify", "--principal", "1", "1"])
        assert code == 0
        assert json.loads(out)["pass"] is True

    def test_factor(self, capsys):
        code, out, _ = capture(
            capsys,
            ["factor", "--category", "brauer", "3->5:(b1 b3)(b2 t4)(t1 t2)(t3 t5)"],
        )
        assert code == 0
        assert out.splitlines() == [
            "middle: 1",
            "down: 3->1:(b1 b3)(b2 t1)",
            "up: 1->5:(b1 t4)(t1 t2)(t3 t5)",
        ]

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "dump.json"
        code, out, _ = capture(
            capsys,
            ["enumerate", "1", "1", "--count", "--out", str(path)],
        )
        assert code == 0 and out == "1\n"
        obj = json.loads(path.read_text())
        assert obj["count"] == 1


class TestExitCodes:
    def test_domain_error(self, capsys):
        code, _, err = capture(
            capsys, ["compose", "2->1:(b1 b2)", "0->2:(t1 t2)"]
        )
        assert code == 1
        assert "error" in err

    def test_syntax_error_json(self, capsys):
        code, _, err = capture(
            capsys, ["compose", "--json", "2->0:(b1", "0->2:(t1 t2)"]
        )
        assert code == 1
        obj = json.loads(err)
        assert obj["error"] == "syntax_error"
        assert obj["position"] == 8

    def test_usage_error(self, capsys):
        code, _, _ = capture(capsys, ["compose"])
        assert code == 2
        code, _, _ = capture(capsys, ["unknown-subcommand"])
        assert code == 2

    def test_verify_failure_exit(self, capsys):
        # nothing-to-verify is a domain error
        code, _, _ = capture(capsys, ["verify"])
        assert code == 1


class TestDeterminism:
    def test_identical_invocations(self, capsys):
        argv = ["enumerate", "--category", "partition", "2", "2", "--json"]
        outs = set()
        for _ in range(3):
            code, out, _ = capture(capsys, argv)
            assert code == 0
            outs.add(out)
        assert len(outs) == 1


class TestJsonSchema:
    def test_outputs_validate(self, capsys):
        import jsonschema
        from pathlib import Path

        schema = json.loads(
            (Path(__file__).resolve().parent.parent / "docs" / "schema.json").read_text()
        )
        cases = {
            "compose": ["compose", "--json", "2->0:(b1 b2)", "0->2:(t1 t2)"],
            "enumerate": ["enumerate", "--json", "2", "2"],
            "taut": ["taut", "--json", "--dim", "2", "2->2:(b1 t1)(b2 t2)"],
            "mult": ["mult", "--json", "--delta-of", "2", "--weight", "2"],
            "char": ["char", "--json", "--lambda", "2,1", "--mu", "1,1,1"],
            "semisimple": [
                "semisimple", "--json", "--n", "2", "--delta", "1/2",
            ],
            "verify": ["verify", "--json", "--t3", "2", "2"],
            "verify_taut": [
                "verify", "--taut", "--category", "signed", "--dim", "2",
                "--max-size", "2",
            ],
            "factor": ["factor", "--json", "2->2:(b1 b2)(t1 t2)"],
        }
        for name, argv in cases.items():
            code, out, _ = capture(capsys, argv)
            assert code == 0, name
            ref = name.split("_")[0]
            jsonschema.validate(
                json.loads(out), {**schema, "$ref": f"#/$defs/{ref}"}
            )
