"""Tests for the management commands."""

from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from goodpairs.digraph import parse_text
from goodpairs.harness import EXIT_BUDGET, EXIT_REFUTED, EXIT_USAGE
from goodpairs.management.commands.solve import choose_strategy
from goodpairs.solvers.base import SoundnessError

FIXTURES = Path(__file__).parent / "fixtures"


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def run_failing(*args):
    """(returncode, output) of a command expected to raise CommandError."""
    out = StringIO()
    with pytest.raises(CommandError) as excinfo:
        call_command(*args, stdout=out)
    return excinfo.value.returncode, out.getvalue()


class TestAnalyze:
    """Tests for the analyze command."""

    def test_family(self):
        output = run("analyze", "--family", "E4")

        assert output.splitlines()[0] == (
            "STAT n=4 arcs=6 multi=false lambda=1 delta0=1 strong=true components=1 "
            "semicomplete=false cobipartite=true alpha=2"
        )
        assert "STAT in_generators=y,x,yp,xp" in output

    def test_fixture_file(self):
        output = run("analyze", str(FIXTURES / "e4.txt"))

        assert "STAT component=0 vertices=y,x,yp,xp ends=initial,terminal" in output

    def test_needs_exactly_one_input(self):
        with pytest.raises(CommandError, match="either an input file or --family") as excinfo:
            call_command("analyze")

        assert excinfo.value.returncode == EXIT_USAGE

    def test_missing_file(self):
        with pytest.raises(CommandError, match="File not found"):
            call_command("analyze", "/nonexistent/digraph.txt")

    def test_unparseable_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("digraph\n3\n0 1\n1 x\n")

        code, _ = run_failing("analyze", str(path))

        assert code == EXIT_USAGE

    def test_file_not_utf8(self, tmp_path):
        path = tmp_path / "latin1.txt"
        path.write_bytes(b"digraph\n2\n0 1\n1 0\n# label 0 \xe9\n")

        with pytest.raises(CommandError, match="invalid UTF-8") as excinfo:
            call_command("analyze", str(path))

        assert excinfo.value.returncode == EXIT_USAGE


class TestFamily:
    """Tests for the family command."""

    def test_text(self):
        d = parse_text(run("family", "W"))

        assert (d.n, d.arc_count) == (8, 18)
        assert d.labels[0] == "a1"

    def test_dot(self):
        assert run("family", "H4", "--format", "dot").startswith("digraph D {")

    def test_list(self):
        output = run("family", "--list")

        assert "WPrimeN:n=10  " in output
        assert "H4  " in output

    def test_sanity(self):
        output = run("family", "W", "--sanity")

        assert "STAT family=W alpha=2 declared=2 ok=true" in output
        assert "W: all declared parameters match" in output

    def test_unknown_family(self):
        code, _ = run_failing("family", "Petersen")

        assert code == EXIT_USAGE

    def test_spec_required(self):
        code, _ = run_failing("family")

        assert code == EXIT_USAGE


class TestSolve:
    """Tests for the solve command."""

    def test_e4_has_no_pair(self):
        output = run("solve", "--family", "E4")

        assert output.splitlines()[0].startswith("CERT kind=exhausted-search")
        assert "route=e4" in output
        assert output.splitlines()[-1] == "no pair"

    def test_f4_pair(self):
        output = run("solve", "--family", "F4")

        assert "IN root=" in output
        assert output.splitlines()[-1] == "pair found"

    def test_prescribed_roots(self):
        output = run("solve", "--family", "W", "--root-in", "c1", "--root-out", "c2")

        assert output.splitlines()[-1] == "no pair"

    def test_four_exception_root(self):
        output = run("solve", "--family", "ST4", "--root-in", "a")

        assert output.startswith("CERT kind=four-exception root_in=a")
        assert "WITNESS" in output

    def test_constructive_strategy(self):
        output = run("solve", "--family", "W", "--strategy", "alpha2")

        assert "strategy=" in output.splitlines()[0]
        assert "validated=true" in output.splitlines()[0]

    def test_dot_highlights_the_pair(self):
        output = run("solve", "--family", "F4", "--format", "dot")

        assert output.count("color=red") == 3
        assert output.count("color=blue") == 3

    def test_strategy_precondition(self):
        code, _ = run_failing("solve", "--family", "H4", "--strategy", "cobipartite")

        assert code == EXIT_USAGE

    def test_unknown_root(self):
        code, _ = run_failing("solve", "--family", "W", "--root-in", "zz")

        assert code == EXIT_USAGE

    def test_oracle_limit(self, settings):
        settings.BRANCHPAIR_ORACLE_MAX_VERTICES = 3

        code, output = run_failing("solve", "--family", "E4", "--strategy", "oracle")

        assert code == EXIT_BUDGET
        assert output.startswith("STAT out_branchings=")

    def test_soundness_error(self, monkeypatch):
        def broken(d):
            raise SoundnessError("constructed pair shares arc 0>1")

        monkeypatch.setattr("goodpairs.management.commands.solve.small_good_pair", broken)

        code, output = run_failing("solve", "--family", "F4")

        assert code == EXIT_REFUTED
        assert output.startswith("CERT refuted constructed pair shares arc 0>1")

    def test_choose_strategy(self, e4, st4, w, h4):
        assert choose_strategy(e4, None, None) == "small"
        assert choose_strategy(st4, None, None) == "semicomplete"
        assert choose_strategy(st4, 0, 1) == "oracle"
        assert choose_strategy(w, None, None) == "alpha2"
        assert choose_strategy(w, 0, None) == "oracle"
        assert choose_strategy(h4, None, None) == "oracle"


@pytest.mark.usefixtures("short_budget")
class TestEnumerate:
    """Tests for the enumerate command."""

    def test_confirmed(self):
        output = run("enumerate", "3", "--lambda-min", "2")

        assert "STATUS enumerate confirmed" in output
        assert "STAT seed=1 n=3 mode=exhaustive filters=lambda_min=2" in output

    def test_counterexample(self):
        code, output = run_failing("enumerate", "4", "--lambda-min", "1", "--mode", "canonical", "--stop-on-failure")

        assert code == EXIT_REFUTED
        assert "CERT counterexample n=4" in output
        assert "STATUS enumerate refuted" in output

    def test_exhaustive_limit(self):
        code, _ = run_failing("enumerate", "6", "--mode", "exhaustive")

        assert code == EXIT_USAGE

    def test_sampled_needs_instances(self):
        code, _ = run_failing("enumerate", "7", "--count", "0")

        assert code == EXIT_USAGE


@pytest.mark.usefixtures("short_budget")
class TestCrossValidate:
    """Tests for the cross_validate command."""

    def test_confirmed(self):
        output = run("cross_validate", "small_good_pair", "--count", "4", "--seed", "3")

        assert "STATUS small_good_pair confirmed" in output
        assert "instances=4" in output

    def test_unknown_operation(self):
        code, _ = run_failing("cross_validate", "solve_everything")

        assert code == EXIT_USAGE

    def test_order_range(self):
        code, _ = run_failing("cross_validate", "small_good_pair", "--n-min", "5", "--n-max", "3")

        assert code == EXIT_USAGE


@pytest.mark.usefixtures("short_budget")
class TestConjectureSearch:
    """Tests for the conjecture_search command."""

    def test_failures_outside_the_hypothesis(self):
        output = run("conjecture_search", "same-root-alpha2", "--family", "BadMulti")

        assert "CERT failing s=s t=s" in output
        assert "hypothesis=false" in output
        assert "Failures lie outside the hypothesis" in output
        assert output.splitlines()[-1] == "STATUS same-root-alpha2 confirmed"

    def test_sampled(self):
        output = run("conjecture_search", "same-root-alpha2", "--count", "2", "--n-min", "5", "--n-max", "5")

        assert "STATUS same-root-alpha2 confirmed" in output

    def test_unknown_conjecture(self):
        code, _ = run_failing("conjecture_search", "every-digraph")

        assert code == EXIT_USAGE

    def test_order_range(self):
        code, _ = run_failing("conjecture_search", "same-root-alpha2", "--n-min", "1")

        assert code == EXIT_USAGE


@pytest.mark.usefixtures("short_budget")
class TestVerifyPaper:
    """Tests for the claim reproduction command."""

    def test_list(self):
        output = run("verify_paper", "--list")

        assert "prop-W: " in output
        assert "prop-small" not in output.replace("prop-small4", "")

    def test_selected_claims(self, tmp_path):
        report = tmp_path / "report.txt"

        output = run("verify_paper", "--claims", "prop-W,fig-badmulti", "--output", str(report))

        assert "STATUS prop-W confirmed" in output
        assert "STATUS fig-badmulti confirmed" in output
        assert "STAT claims=2 confirmed=2 refuted=0 budget_exceeded=0 seed=1 exhaustive=false" in output
        assert report.read_text().startswith("CLAIM prop-W")

    def test_unknown_claim(self):
        code, _ = run_failing("verify_paper", "--claims", "thm-everything")

        assert code == EXIT_USAGE

    def test_budget_exceeded(self, settings):
        settings.BRANCHPAIR_ORACLE_MAX_VERTICES = 4

        code, output = run_failing("verify_paper", "--claims", "prop-W")

        assert code == EXIT_BUDGET
        assert "STATUS prop-W budget-exceeded" in output
