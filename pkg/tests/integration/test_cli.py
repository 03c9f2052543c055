"""
CLI tests: subcommands end to end through ``run``, with exit codes
0 (success), 1 (failed verdict or cap) and 2 (input error).
"""

import json
import os

import pytest

from clusterforge.cli import build_parser, run


def _fixture(fixtures_dir, name):
    return str(fixtures_dir / f"{name}.json")


class TestParser:
    """Argument handling before any command runs."""

    def test_every_command_has_a_subparser(self):
        from clusterforge.tools import command_registry

        text = build_parser().format_help()
        for name in command_registry.names():
            assert name in text

    def test_levels_parse(self):
        args = build_parser().parse_args(["quotient", "q.json", "--levels", "-1", "2"])
        assert args.levels == [-1, 2]

    def test_missing_subcommand(self, capsys):
        assert run([]) == 2

    def test_unknown_subcommand(self, capsys):
        assert run(["mutate", "q.json"]) == 2

    def test_version(self, capsys):
        assert run(["--version"]) == 0
        assert "clusterforge" in capsys.readouterr().out


class TestInputErrors:
    """Exit code 2."""

    def test_malformed_json(self, temp_out, capsys):
        """Decoding errors report line and column."""
        path = os.path.join(temp_out, "broken.json")
        with open(path, "w", encoding="utf-8") as f:
            f.write('{"vertices": ["1",]}')
        assert run(["trivial-ext", path]) == 2
        err = capsys.readouterr().err
        assert "malformed JSON" in err
        assert "line 1" in err

    def test_missing_file(self, temp_out, capsys):
        assert run(["knit", os.path.join(temp_out, "absent.json")]) == 2

    def test_bad_field(self, fixtures_dir, capsys):
        """--field must be 0 or a prime."""
        assert run(["trivial-ext", _fixture(fixtures_dir, "a2"), "--field", "4"]) == 2
        assert "0 or a prime" in capsys.readouterr().err

    def test_reversed_levels(self, fixtures_dir, capsys):
        assert run(["cluster-rep", _fixture(fixtures_dir, "a2"), "--levels", "2", "0"]) == 2


class TestConstructions:
    """Quiver files out of the construction commands."""

    def test_trivial_extension(self, fixtures_dir, capsys):
        """One new arrow 4 -> 1 and four minimal relations."""
        assert run(["trivial-ext", _fixture(fixtures_dir, "a5_abc")]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["arrows"]) == 5
        assert len(data["relations"]) == 4
        assert {"name": "δ_4_1", "from": "4", "to": "1"} in data["arrows"]

    def test_dot_output(self, fixtures_dir, capsys):
        assert run(["present", _fixture(fixtures_dir, "a2"), "--format", "dot"]) == 0
        assert capsys.readouterr().out.startswith("digraph")

    def test_out_file(self, fixtures_dir, temp_out, capsys):
        """--out writes the artifact instead of printing it."""
        target = os.path.join(temp_out, "bar.json")
        assert run(["duplicated", _fixture(fixtures_dir, "a3_strict"), "--out", target]) == 0
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "wrote" in captured.err
        with open(target, encoding="utf-8") as f:
            assert len(json.load(f)["vertices"]) == 6

    def test_output_reloads(self, fixtures_dir, temp_out, capsys):
        """An emitted quiver file is accepted as input again."""
        target = os.path.join(temp_out, "tilde.json")
        assert run(["trivial-ext", _fixture(fixtures_dir, "a3_strict"), "--out", target]) == 0
        assert run(["knit", target]) == 0
        assert len(json.loads(capsys.readouterr().out)["vertices"]) == 6

    def test_deterministic(self, fixtures_dir, capsys):
        assert run(["trivial-ext", _fixture(fixtures_dir, "a5_abc")]) == 0
        first = capsys.readouterr().out
        assert run(["trivial-ext", _fixture(fixtures_dir, "a5_abc")]) == 0
        assert capsys.readouterr().out == first


class TestKnit:
    def test_dot(self, fixtures_dir, capsys):
        """Γ(mod A5) as DOT has 15 nodes."""
        assert run(["knit", _fixture(fixtures_dir, "a5"), "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert sum(1 for line in out.splitlines() if "shape=" in line) == 15

    def test_cap_exceeded(self, fixtures_dir, capsys):
        """A cap hit exits 1 and still prints the partial quiver."""
        assert run(["knit", _fixture(fixtures_dir, "a2"), "--cap", "2"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data["complete"] is False
        assert len(data["vertices"]) == 2


class TestChecks:
    def test_gldim_duplicated(self, fixtures_dir, capsys):
        """gl.dim of C̄ for the A3 example prints 5."""
        assert run(["check", "gldim", _fixture(fixtures_dir, "a3_strict"), "--construct", "bar"]) == 0
        assert capsys.readouterr().out == "5\n"

    def test_gorenstein_holds(self, fixtures_dir, capsys):
        assert run(["check", "gorenstein", _fixture(fixtures_dir, "a3_strict"), "--construct", "tilde"]) == 0
        assert json.loads(capsys.readouterr().out)["holds"] is True

    def test_gorenstein_fails(self, fixtures_dir, capsys):
        """The worked example itself is not 1-Gorenstein: exit 1."""
        assert run(["check", "gorenstein", _fixture(fixtures_dir, "a5_abc")]) == 1


class TestCovering:
    def test_quotient(self, fixtures_dir, capsys):
        assert run(["quotient", _fixture(fixtures_dir, "a3_strict"), "--levels", "-1", "2"]) == 0

    def test_pushdown(self, fixtures_dir, capsys):
        """Every interior almost split sequence of the A3 window stays almost split."""
        assert run(["pushdown", _fixture(fixtures_dir, "a3_strict"), "--levels", "-1", "2"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["holds"] is True
        assert report["sequences"]

    def test_domain_invalid_slice(self, fixtures_dir, temp_out, capsys):
        """P_2, S_2, P_3, S_3 is sincere and convex but meets two τ-orbits twice: exit 1."""
        path = os.path.join(temp_out, "slice.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump({"dim_vectors": [[1, 1, 0], [0, 1, 0], [0, 1, 1], [0, 0, 1]]}, f)
        assert run(["domain", _fixture(fixtures_dir, "a3_strict"), "--slice", path]) == 1
        report = json.loads(capsys.readouterr().out)
        assert report["slice"]["violation"] == "two vertices in one τ-orbit"

    def test_domain(self, fixtures_dir, temp_out, capsys):
        """P_2, S_2, P_3 cut out a fundamental domain of six modules."""
        path = os.path.join(temp_out, "slice.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump({"dim_vectors": [[1, 1, 0], [0, 1, 0], [0, 1, 1]]}, f)
        assert run(["domain", _fixture(fixtures_dir, "a3_strict"), "--slice", path]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["size"] == 6
        assert report["holds"] is True

    @pytest.mark.slow
    def test_reproduce(self, temp_out, capsys):
        """The default run writes both DOT files and reports an isomorphism."""
        assert run(["reproduce", "--out", temp_out]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["verdict"] == "isomorphic"
        assert os.path.exists(os.path.join(temp_out, "gamma_hat.dot"))
        assert os.path.exists(os.path.join(temp_out, "gamma_check.dot"))

    @pytest.mark.slow
    def test_surgery_strip_outside_window(self, fixtures_dir, capsys):
        """A strip reaching past the knitted window fails with exit 1."""
        code = run(["surgery", _fixture(fixtures_dir, "a3_strict"), "--levels", "0", "1", "--strip", "0", "3"])
        assert code == 1
        assert "window too narrow" in capsys.readouterr().err
